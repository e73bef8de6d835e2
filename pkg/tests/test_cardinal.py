import pytest
from hypothesis import given, strategies as st

from parmon.cardinal import (ALEPH_0, ALEPH_1, ALEPH_OMEGA, Cardinal, CardinalError, add, cmp,
                             is_regular, is_singular, successor)

finite = st.integers(0, 50).map(Cardinal.finite)
alephs = st.integers(0, 6).map(Cardinal.aleph)
cardinals = st.one_of(finite, alephs, st.just(ALEPH_OMEGA))


def test_order_examples():
    assert cmp(Cardinal.finite(2), ALEPH_0) == -1
    assert cmp(ALEPH_1, ALEPH_OMEGA) == -1
    assert cmp(ALEPH_0, ALEPH_0) == 0
    assert Cardinal.finite(10**9) < ALEPH_0 < Cardinal.aleph(5) < ALEPH_OMEGA


def test_addition_examples():
    assert add(3, 4) == Cardinal.finite(7)
    assert add(ALEPH_1, ALEPH_0) == ALEPH_1
    assert add(5, ALEPH_OMEGA) == ALEPH_OMEGA


def test_successor_and_regularity():
    assert successor(ALEPH_0) == ALEPH_1 and is_regular(successor(ALEPH_0))
    assert successor(Cardinal.finite(4)) == Cardinal.finite(5)
    assert is_singular(ALEPH_OMEGA)
    assert [is_regular(k) for k in range(5)] == [True, True, True, False, False]
    with pytest.raises(CardinalError):
        successor(ALEPH_OMEGA)


@pytest.mark.parametrize("text,value", [
    ("7", Cardinal.finite(7)), ("aleph0", ALEPH_0), ("aleph3", Cardinal.aleph(3)),
    ("alephOmega", ALEPH_OMEGA), ("ALEPH_1", ALEPH_1),
])
def test_text_forms(text, value):
    c = Cardinal.parse(text)
    assert c == value
    assert Cardinal.parse(str(c)) == c


@pytest.mark.parametrize("bad", ["", "aleph", "-3", "omega", "1.5"])
def test_bad_text(bad):
    with pytest.raises(CardinalError):
        Cardinal.parse(bad)


@given(cardinals, cardinals)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(cardinals, cardinals, cardinals)
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(cardinals, cardinals, cardinals)
def test_add_is_monotone(a, b, c):
    if a <= b:
        assert a + c <= b + c


@given(cardinals, st.one_of(alephs, st.just(ALEPH_OMEGA)))
def test_infinite_absorbs(a, b):
    assert a + b == max(a, b)


@given(cardinals, cardinals)
def test_total_order(a, b):
    assert sum([a < b, a == b, a > b]) == 1
    assert cmp(a, b) == -cmp(b, a)


@given(alephs)
def test_every_finite_aleph_regular(a):
    assert a.is_regular and not a.is_singular

import os
import random

import pytest

from parmon import generation as G
from parmon import partition as P
from parmon.partition import Partition, identity

from oracles import bell_triangle

BELL = bell_triangle(9)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_counts(n):
    res = G.enumerate_Pn(n)
    assert len(res) == BELL[2 * n] == len(set(res.elements))


def test_degree_one_listing():
    assert set(G.enumerate_Pn(1).elements) == {Partition(1, [[1, -1]]), Partition(1, [[1], [-1]])}


def test_enumeration_size_guard():
    with pytest.raises(G.SizeGuardError):
        G.enumerate_Pn(5)


def test_library_bell_agrees_with_triangle():
    assert [G.bell(m) for m in range(9)] == BELL


def test_idempotents_small():
    assert len(G.idempotents(1)) == 2
    es = set(G.idempotents(3))
    for A in P.all_subsets(3):
        assert P.id_set(A, 3) in es
    assert all(P.star(e) in es for e in es)


def test_closure_of_identity():
    res = G.closure([identity(3)], words=True)
    assert res.elements == (identity(3),) and res.saturated
    assert G.word_length_stats(res)["max"] == 1


@pytest.mark.parametrize("n", [2, 3])
def test_idempotent_generated_part(n):
    universe = set(G.enumerate_Pn(n).elements)
    units = set(G.symmetric_group(n))
    got = G.closure(G.idempotents(n)).element_set
    assert got == (universe - units) | {identity(n)}


def test_idempotents_of_degree_two_generate_fourteen():
    assert len(G.closure(G.idempotents(2))) == 14


def test_idempotents_with_units_generate_everything():
    assert len(G.closure(G.idempotents(3) + G.symmetric_group(3))) == 203


def test_closure_cap():
    res = G.closure(G.idempotents(3) + G.symmetric_group(3), cap=50)
    assert not res.saturated and len(res) == 50


def test_closure_independent_of_generator_order():
    gens = G.idempotents(2) + G.symmetric_group(2)
    rng = random.Random(3)
    base = G.closure(gens).element_set
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert G.closure(shuffled).element_set == base


def test_words_evaluate_back():
    gens = G.symmetric_group(3) + [P.parse("[[1],[-1,2,3,-2,-3]]"), P.parse("[[1,2,-1],[3,-3],[-2]]")]
    res = G.closure(gens, words=True)
    for a, w in res.generator_words.items():
        assert G.evaluate_word(w, gens) == a


def test_word_length_stats_for_idempotents():
    stats = G.word_length_stats(G.closure(G.idempotents(2), words=True))
    assert stats["count"] == 14 and 1 <= stats["max"] < 14
    assert sum(stats["histogram"].values()) == 14


def test_parallel_closure_matches_sequential(monkeypatch):
    gens = G.idempotents(3)
    seq = G.closure(gens, words=True, workers=1)
    par = G.closure(gens, words=True, workers=2)
    assert seq.elements == par.elements and seq.generator_words == par.generator_words


def test_thread_variable(monkeypatch):
    monkeypatch.setenv("PARMON_THREADS", "1")
    assert len(G.closure(G.idempotents(2))) == 14


def test_cayley_engine_agrees_with_direct():
    gens = G.idempotents(2)
    eng = G.cayley_table(2)
    got = eng.closure([eng.index[g] for g in gens])
    assert {eng.elements[i] for i in got} == G.closure(gens).element_set


def test_units_alone_do_not_generate():
    assert not G.is_generating_mod(G.symmetric_group(3), [])


def test_idempotents_and_units_generate():
    assert G.is_generating_mod(G.idempotents(3) + G.symmetric_group(3), [])


def test_relative_rank_mod_units_degree_two():
    cert = G.relative_rank("S", 2)
    assert cert.rank == 2 and cert.exhaustive_below and len(cert.witness) == 2
    assert G.is_generating_mod(G.symmetric_group(2), cert.witness)


def test_relative_rank_mod_idempotents_degree_three():
    cert = G.relative_rank("E", 3)
    assert cert.rank == 2 and cert.exhaustive_below
    assert G.is_generating_mod(G.idempotents(3), cert.witness)


def test_relative_rank_mod_both():
    assert G.relative_rank("ES", 3).rank == 0


def test_relative_rank_mod_idempotents_degree_two_is_reported():
    cert = G.relative_rank("E", 2)
    assert cert.exhaustive_below
    assert G.is_generating_mod(G.idempotents(2), cert.witness)
    print(f"rank(P_2 : E_2) = {cert.rank}")


def test_generating_pair_sides_reported():
    """Report whether a generating pair over the units has a member in L∖S or R∖S."""
    cert = G.relative_rank("S", 2)
    flags = [(P.in_L(a) and not P.is_unit(a)) or (P.in_R(a) and not P.is_unit(a))
             for a in cert.witness]
    print("pair members in (L or R) minus S:", flags)
    assert len(flags) == 2


def test_sampled_mode_degree_four():
    cert = G.relative_rank("S", 4, mode="sampled", seed=0, max_samples=200)
    assert cert.mode == "sampled" and cert.rank >= 2
    if cert.rank == 2:
        assert G.is_generating_mod(G.symmetric_group(4), cert.witness)


def test_exhaustive_guard():
    with pytest.raises(G.SizeGuardError):
        G.relative_rank("S", 4, mode="exhaustive")


def test_certificate_json():
    js = G.relative_rank("S", 2).to_json()
    assert js["rank"] == 2 and js["base"] == "S" and len(js["witness"]) == 2

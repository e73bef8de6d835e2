import pytest
from hypothesis import given, settings, strategies as st

from parmon import partition as P
from parmon.cardinal import ALEPH_0, ALEPH_1, ALEPH_OMEGA, Cardinal
from parmon.classifier import (ElementData, ProfileError, SidedProfile, StepFunction,
                               UnsupportedGround, classify_mod_E, classify_mod_S, in_E_closure,
                               in_ES_closure, profile_of)
from parmon.infinite import FinitaryPartition, canonical_gen_pair, random_finitary

from strategies import partitions

FIG1 = P.parse("[[1,3,-4],[2,4],[5,6,-1,-6],[-2,-3],[-5]]")


def prof(side, ground, k, d, in_side=True, s=None):
    """k and d are lists of (threshold, value); d_total is d at 1."""
    d_fn = StepFunction(d)
    return SidedProfile(side, Cardinal.parse(ground), StepFunction(k), d_fn, d_fn(1), in_side,
                        Cardinal.parse(s if s is not None else ground))


# step functions ---------------------------------------------------------------------


def test_step_lookup():
    f = StepFunction([(1, "aleph1"), (3, "aleph0"), ("aleph1", 2)])
    assert f(1) == f(2) == ALEPH_1
    assert f(3) == f(1000) == ALEPH_0
    assert f(ALEPH_1) == f(ALEPH_OMEGA) == Cardinal.finite(2)


@pytest.mark.parametrize("steps", [
    [(1, 2), (2, 5)],            # increasing values
    [(1, 2), (1, 1)],            # repeated threshold
    [(2, 2)],                    # does not start at 1
    [],
])
def test_step_rejects(steps):
    with pytest.raises(ProfileError):
        StepFunction(steps)


def test_profile_json_round_trip():
    js = {"side": "L", "ground": "aleph1", "k": [["2", "aleph1"]], "d": [["1", "aleph1"]],
          "dTotal": "aleph1", "inSide": True, "s": "aleph1"}
    p = SidedProfile.from_json(js)
    assert p.k_fn(1) == ALEPH_1 and p.d_total == ALEPH_1
    assert SidedProfile.from_json(p.to_json()) == p


@pytest.mark.parametrize("patch", [
    {"k": [["1", "aleph2"]]},                 # value above ground
    {"d": [["1", "3"]]},                      # d at 1 differs from total
    {"side": "X"},
    {"ground": "nonsense"},
])
def test_profile_rejects(patch):
    js = {"side": "L", "ground": "aleph1", "k": [["1", "aleph1"]], "d": [["1", "aleph1"]],
          "dTotal": "aleph1", "inSide": True, "s": "aleph1"}
    js.update(patch)
    with pytest.raises(ProfileError):
        SidedProfile.from_json(js)


def test_profile_missing_field():
    with pytest.raises(ProfileError, match="lacks"):
        SidedProfile.from_json({"side": "L"})


# profiles of concrete partitions --------------------------------------------------------


def test_identity_profile():
    p = profile_of(P.identity(4), "L")
    assert p.k_fn(2) == p.k_fn(3) == 0 and p.d_total == 0 and p.s_value == 0 and p.in_side


def test_example_profile_not_in_L():
    p = profile_of(FIG1, "L")
    assert not p.in_side
    assert p.k_fn(2) == 1 and p.d_fn(2) == 1 and p.d_total == 2 and p.s_value == 4


def test_finitary_profile_matches_finite():
    f = FinitaryPartition.from_partition(FIG1)
    pf, pp = profile_of(f, "R"), profile_of(FIG1, "R")
    assert pf.ground == ALEPH_0
    assert pf.k_fn(1) == ALEPH_0
    for mu in (2, 3, 4):
        assert pf.k_fn(mu) == pp.k_fn(mu) and pf.d_fn(mu) == pp.d_fn(mu)
    assert (pf.d_total, pf.s_value, pf.in_side) == (pp.d_total, pp.s_value, pp.in_side)


@given(partitions(max_degree=5), st.sampled_from(["L", "R"]))
def test_profile_values_match_parameters(a, side):
    p = profile_of(a, side)
    for mu in range(1, a.degree + 1):
        if side == "L":
            assert p.k_fn(mu) == P.param_kstar(a, mu) and p.d_fn(mu) == P.param_dstar(a, mu)
        else:
            assert p.k_fn(mu) == P.param_k(a, mu) and p.d_fn(mu) == P.param_d(a, mu)


def test_finite_ground_rejected():
    p = profile_of(P.identity(3), "L")
    with pytest.raises(UnsupportedGround):
        classify_mod_S(p, p.dualize())


def test_mismatched_grounds():
    a = prof("L", "aleph0", [(1, "aleph0")], [(1, "aleph0")])
    b = prof("R", "aleph1", [(1, "aleph1")], [(1, "aleph1")])
    with pytest.raises(UnsupportedGround):
        classify_mod_S(a, b)


def test_canonical_pair_profiles_generate():
    alpha, beta = canonical_gen_pair()
    v = classify_mod_S(alpha.profile(), beta.profile())
    assert v.generates and v.clause.startswith("countable")
    assert classify_mod_E(alpha.profile(), beta.profile()).generates


@settings(max_examples=100)
@given(st.randoms(use_true_random=False), st.sampled_from(["L", "R"]), st.sampled_from(["L", "R"]))
def test_finitary_pairs_never_generate(rnd, s1, s2):
    a, b = random_finitary(rnd, 6), random_finitary(rnd, 6)
    assert not classify_mod_S(profile_of(a, s1), profile_of(b, s2)).generates
    assert not classify_mod_E(profile_of(a, s1), profile_of(b, s2)).generates


# random symbolic profiles ------------------------------------------------------------------

THRESHOLDS = {
    ALEPH_0: [1, 2, 3, ALEPH_0],
    ALEPH_1: [1, 2, 3, ALEPH_0, ALEPH_1],
    ALEPH_OMEGA: [1, 2, 3, ALEPH_0, ALEPH_1, Cardinal.aleph(2), ALEPH_OMEGA],
}


@st.composite
def step_functions(draw, ground):
    ts = [Cardinal.parse(t) for t in THRESHOLDS[ground]]
    chosen = [ts[0]] + [t for t in ts[1:] if draw(st.booleans())]
    vals = sorted((draw(st.sampled_from([Cardinal.finite(0), Cardinal.finite(3)] + ts[3:]))
                   for _ in chosen), reverse=True)
    return StepFunction(list(zip(chosen, vals)))


@st.composite
def profiles(draw, ground, side=None):
    side = side or draw(st.sampled_from(["L", "R"]))
    d_fn = draw(step_functions(ground))
    s_val = draw(st.sampled_from([Cardinal.finite(5), ground]))
    return SidedProfile(side, ground, draw(step_functions(ground)), d_fn, d_fn(1),
                        draw(st.booleans()), s_val)


grounds = st.sampled_from([ALEPH_0, ALEPH_1, ALEPH_OMEGA])


@settings(max_examples=300)
@given(grounds.flatmap(lambda g: st.tuples(profiles(g), profiles(g))))
def test_duality(pp):
    a, b = pp
    assert classify_mod_S(a, b).generates == classify_mod_S(b.dualize(), a.dualize()).generates
    assert classify_mod_E(a, b).generates == classify_mod_E(b.dualize(), a.dualize()).generates


@settings(max_examples=300)
@given(grounds.flatmap(lambda g: st.tuples(profiles(g, "L"), profiles(g, "R"))))
def test_order_of_arguments_irrelevant(pp):
    a, b = pp
    v1, v2 = classify_mod_S(a, b), classify_mod_S(b, a)
    assert v1.generates == v2.generates
    if v1.generates:
        assert v1.swapped != v2.swapped


def _raise_to_ground(p: SidedProfile, which: str) -> SidedProfile:
    fn = getattr(p, which)
    raised = StepFunction([(t, p.ground) for t, _ in fn.steps])
    k_fn, d_fn = (raised, p.d_fn) if which == "k_fn" else (p.k_fn, raised)
    return SidedProfile(p.side, p.ground, k_fn, d_fn, d_fn(1), p.in_side, p.s_value)


@settings(max_examples=300)
@given(grounds.flatmap(lambda g: st.tuples(profiles(g), profiles(g))),
       st.sampled_from(["k_fn", "d_fn"]), st.booleans())
def test_raising_parameters_keeps_generation(pp, which, first):
    a, b = pp
    if not classify_mod_S(a, b).generates:
        return
    if first:
        a = _raise_to_ground(a, which)
    else:
        b = _raise_to_ground(b, which)
    assert classify_mod_S(a, b).generates


# closures of idempotents ----------------------------------------------------------------


def test_identity_in_idempotent_closure():
    assert in_E_closure(FinitaryPartition.identity())


def test_finitary_non_unit_in_idempotent_closure():
    assert in_E_closure(FinitaryPartition.from_partition(FIG1))


def test_transposition():
    t = FinitaryPartition([[1, -2], [2, -1]])
    assert in_ES_closure(t) and not in_E_closure(t)


def test_balanced_singularities():
    f = FinitaryPartition.from_partition(FIG1)
    assert in_ES_closure(f)
    lopsided = FinitaryPartition([[1, 2, -1], [-2]])   # s = 1, s* = 1
    assert in_ES_closure(lopsided)
    uneven = FinitaryPartition([[1, 2, -1, -2, -3], [3]])   # s = 2, s* = 2
    assert in_ES_closure(uneven)


@pytest.mark.parametrize("data,e,es", [
    (ElementData("aleph0", "aleph0", 0, False, False), True, True),
    (ElementData("aleph0", "aleph0", "aleph1", False, False), False, True),
    (ElementData("aleph1", "aleph0", 0, False, False), False, False),
    (ElementData(3, 3, 0, False, False), False, True),
    (ElementData(0, 0, 0, True, True, identity=True), True, True),
])
def test_symbolic_memberships(data, e, es):
    assert in_E_closure(data) == e and in_ES_closure(data) == es


# worked verdicts ---------------------------------------------------------------------------


def test_countable_clause_ii():
    a = prof("L", "aleph0", [(1, "aleph0")], [(1, "aleph0")])
    b = prof("R", "aleph0", [(1, "aleph0")], [(1, "aleph0")])
    v = classify_mod_S(a, b)
    assert v.generates and v.clause == "countable-ii"


def test_countable_singleton_beta_fails():
    a = prof("L", "aleph0", [(1, "aleph0")], [(1, "aleph0")])
    b = prof("R", "aleph0", [(1, "aleph0"), (2, 0)], [(1, "aleph0"), (2, 0)])
    v = classify_mod_S(a, b)
    assert not v.generates and v.clause == "fail-clauses"


def test_singular_clause_i():
    a = prof("L", "alephomega", [(1, "alephomega")], [(1, "alephomega"), (2, 0)])
    b = prof("R", "alephomega", [(1, "alephomega")], [(1, "alephomega"), (2, 0)])
    v = classify_mod_S(a, b)
    assert v.generates and v.clause.startswith("singular-i")


def test_side_failure():
    a = prof("L", "aleph0", [(1, "aleph0")], [(1, "aleph0")], in_side=False)
    b = prof("R", "aleph0", [(1, "aleph0")], [(1, "aleph0")], in_side=False)
    assert classify_mod_S(a, b).clause == "fail-side"
    assert not classify_mod_E(a, b).generates


def test_mod_E_verdicts():
    a = prof("L", "aleph0", [(1, "aleph0")], [(1, "aleph0")])
    b = prof("R", "aleph0", [(1, "aleph0")], [(1, "aleph0")])
    assert classify_mod_E(a, b).generates
    a5 = prof("L", "aleph0", [(1, "aleph0")], [(1, "aleph0")], s="5")
    v = classify_mod_E(a5, b)
    assert not v.generates and v.clause == "fail-s"

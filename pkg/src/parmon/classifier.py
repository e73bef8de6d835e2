"""Decision procedures for generating pairs modulo S_X and modulo E_X.

Inputs are symbolic profiles: the parameter functions of the α-candidate
(side L) or β-candidate (side R) as step functions of μ, plus totals and
membership flags.  Only infinite grounds are decided here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from . import partition as P
from .cardinal import ALEPH_0, Cardinal, CardinalError, CardinalLike, coerce
from .infinite import finitary as F
from .infinite.finitary import FinitaryPartition
from .partition import Partition


class UnsupportedGround(ValueError):
    """Finite or mismatched ground cardinals."""


class ProfileError(ValueError):
    """A profile that violates its invariants or cannot be parsed."""


@dataclass(frozen=True)
class StepFunction:
    """μ ↦ value, constant from each threshold up to the next; antitone."""

    steps: tuple

    def __init__(self, steps: Iterable[tuple]):
        norm = tuple((coerce(t), coerce(v)) for t, v in steps)
        if not norm:
            raise ProfileError("a step function needs at least one step")
        if norm[0][0] != 1:
            raise ProfileError("the first threshold must be 1")
        for (t0, v0), (t1, v1) in zip(norm, norm[1:]):
            if not t0 < t1:
                raise ProfileError(f"thresholds must increase strictly ({t0} then {t1})")
            if v1 > v0:
                raise ProfileError(f"values must not increase ({v0} at {t0}, {v1} at {t1})")
        object.__setattr__(self, "steps", norm)

    def __call__(self, mu: CardinalLike) -> Cardinal:
        mu = coerce(mu)
        if mu < 1:
            raise ProfileError("parameters are defined for μ >= 1")
        value = self.steps[0][1]
        for t, v in self.steps:
            if t > mu:
                break
            value = v
        return value

    def breakpoints(self) -> list[Cardinal]:
        return [t for t, _ in self.steps]

    def max_value(self) -> Cardinal:
        return self.steps[0][1]

    def to_json(self) -> list:
        return [[str(t), str(v)] for t, v in self.steps]

    @classmethod
    def from_json(cls, data: Sequence, first: Optional[CardinalLike] = None) -> "StepFunction":
        """Parse [[threshold, value], ...].  If threshold 1 is absent, ``first`` (or the
        first listed value) is used there."""
        try:
            steps = [(coerce(t), coerce(v)) for t, v in data]
        except (TypeError, ValueError, CardinalError) as exc:
            raise ProfileError(f"bad step list {data!r}: {exc}") from exc
        if not steps:
            raise ProfileError("empty step list")
        if steps[0][0] != 1:
            fill = coerce(first) if first is not None else steps[0][1]
            steps.insert(0, (Cardinal.finite(1), max(fill, steps[0][1])))
        return cls(steps)

    @classmethod
    def from_function(cls, fn, thresholds: Iterable[CardinalLike]) -> "StepFunction":
        """Sample ``fn`` at increasing thresholds (starting at 1) and merge equal runs."""
        steps = []
        for t in thresholds:
            v = fn(t)
            if not steps or steps[-1][1] != v:
                steps.append((coerce(t), v))
        return cls(steps)


_SIDES = ("L", "R")


@dataclass(frozen=True)
class SidedProfile:
    """Side L: k*(α,μ), d*(α,μ), d*(α), α ∈ L_X, s*(α).  Side R: k(β,μ), d(β,μ), d(β), β ∈ R_X, s(β)."""

    side: str
    ground: Cardinal
    k_fn: StepFunction
    d_fn: StepFunction
    d_total: Cardinal
    in_side: bool
    s_value: Cardinal

    def __post_init__(self):
        if self.side not in _SIDES:
            raise ProfileError(f"side must be L or R, got {self.side!r}")
        for name in ("ground", "d_total", "s_value"):
            object.__setattr__(self, name, coerce(getattr(self, name)))
        g = self.ground
        if self.d_fn(1) != self.d_total:
            raise ProfileError(f"d at threshold 1 is {self.d_fn(1)} but the total is {self.d_total}")
        for fn_name in ("k_fn", "d_fn"):
            fn = getattr(self, fn_name)
            for t, v in fn.steps:
                if v > g:
                    raise ProfileError(f"{fn_name} value {v} exceeds the ground {g}")
                if t > g:
                    raise ProfileError(f"{fn_name} threshold {t} exceeds the ground {g}")
        if self.s_value > g or self.d_total > g:
            raise ProfileError("totals cannot exceed the ground")

    def dualize(self) -> "SidedProfile":
        """The same numbers read for the starred partition (side swapped)."""
        return SidedProfile("R" if self.side == "L" else "L", self.ground, self.k_fn,
                            self.d_fn, self.d_total, self.in_side, self.s_value)

    def kd(self, mu: CardinalLike) -> Cardinal:
        return self.k_fn(mu) + self.d_fn(mu)

    def to_json(self) -> dict:
        return {"side": self.side, "ground": str(self.ground), "k": self.k_fn.to_json(),
                "d": self.d_fn.to_json(), "dTotal": str(self.d_total),
                "inSide": self.in_side, "s": str(self.s_value)}

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "SidedProfile":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ProfileError(f"profile is not JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ProfileError("profile must be a JSON object")
        missing = {"side", "ground", "k", "d", "dTotal", "inSide", "s"} - data.keys()
        if missing:
            raise ProfileError(f"profile lacks {sorted(missing)}")
        try:
            d_total = coerce(data["dTotal"])
            return cls(side=data["side"], ground=coerce(data["ground"]),
                       k_fn=StepFunction.from_json(data["k"]),
                       d_fn=StepFunction.from_json(data["d"], first=d_total),
                       d_total=d_total, in_side=bool(data["inSide"]),
                       s_value=coerce(data["s"]))
        except CardinalError as exc:
            raise ProfileError(str(exc)) from exc


@dataclass(frozen=True)
class Verdict:
    generates: bool
    clause: str
    swapped: bool = False
    detail: str = ""

    def to_json(self) -> dict:
        out = {"generates": self.generates, "clause": self.clause, "swapped": self.swapped}
        if self.detail:
            out["detail"] = self.detail
        return out


# profiles of concrete partitions ---------------------------------------------------


def _thresholds(top: int):
    return [Cardinal.finite(t) for t in range(1, top + 1)]


def profile_of(a: Union[Partition, FinitaryPartition], side: str) -> SidedProfile:
    """Exact profile.  A degree-n partition has ground n; a finitary one has ground ℵ0."""
    if side not in _SIDES:
        raise ProfileError(f"side must be L or R, got {side!r}")
    if isinstance(a, FinitaryPartition):
        core, ground, mod = a.to_partition(), ALEPH_0, F
    else:
        core, ground, mod = a, Cardinal.finite(a.degree), P
    if side == "L":
        k, d, d_total, in_side, s_val = (mod.param_kstar, mod.param_dstar,
                                         mod.param_dstar_total(a), mod.in_L(a), mod.sstar(a))
    else:
        k, d, d_total, in_side, s_val = (mod.param_k, mod.param_d,
                                         mod.param_d_total(a), mod.in_R(a), mod.s(a))
    # half-blocks never exceed the degree (or the warp horizon for finitary input)
    ts = _thresholds(core.degree + (1 if ground == ALEPH_0 else 0) or 1)
    return SidedProfile(side, ground, StepFunction.from_function(lambda m: k(a, m), ts),
                        StepFunction.from_function(lambda m: d(a, m), ts),
                        d_total, in_side, s_val)


# modulo S_X -----------------------------------------------------------------------


def _check_grounds(pa: SidedProfile, pb: SidedProfile) -> Cardinal:
    if pa.ground != pb.ground:
        raise UnsupportedGround(f"grounds differ: {pa.ground} and {pb.ground}")
    if pa.ground.is_finite:
        raise UnsupportedGround(f"finite ground {pa.ground}: use the generation module")
    return pa.ground


def _below_ground_probes(ground: Cardinal, *fns: StepFunction) -> list[Cardinal]:
    """Every breakpoint below the ground and one cardinal past the last of them.

    Step functions are constant between breakpoints, so these points see every
    value taken on [1, ground).
    """
    pts = sorted({t for fn in fns for t in fn.breakpoints() if t < ground})
    probe = pts[-1].successor()
    if probe < ground:
        pts.append(probe)
    return pts


def _clauses(ground: Cardinal, a: SidedProfile, b: SidedProfile) -> list[str]:
    """Every clause that holds, (ii) listed first."""
    g = ground
    if g == ALEPH_0:
        kind = "countable"
        i = a.k_fn(2) + a.d_fn(2) == g and b.k_fn(2) + b.d_fn(3) == g
        ii = a.k_fn(2) + a.d_fn(3) == g and b.k_fn(2) + b.d_fn(2) == g
    elif g.is_regular:
        kind = "regular"
        i = a.kd(2) == g and b.kd(g) == g
        ii = a.kd(g) == g and b.kd(2) == g
    else:
        kind = "singular"
        i = a.kd(2) == g and all(b.kd(m) == g for m in _below_ground_probes(g, b.k_fn, b.d_fn))
        ii = b.kd(2) == g and all(a.kd(m) == g for m in _below_ground_probes(g, a.k_fn, a.d_fn))
    return [f"{kind}-{name}" for name, ok in (("ii", ii), ("i", i)) if ok]


def _orders(p1: SidedProfile, p2: SidedProfile):
    yield p1, p2, False
    yield p2, p1, True


def _sides_ok(a: SidedProfile, b: SidedProfile) -> bool:
    return a.side == "L" and b.side == "R" and a.in_side and b.in_side


def classify_mod_S(p1: SidedProfile, p2: SidedProfile) -> Verdict:
    """Does ⟨S_X, α, β⟩ = P_X?  Both orders of the two profiles are tried."""
    g = _check_grounds(p1, p2)
    best = Verdict(False, "fail-side", False, "no order has α ∈ L_X and β ∈ R_X")
    rank = 0
    for a, b, swapped in _orders(p1, p2):
        if not _sides_ok(a, b):
            continue
        if not (a.d_total == g and b.d_total == g):
            if rank < 1:
                rank = 1
                best = Verdict(False, "fail-d-total", swapped,
                               f"d*(α) = {a.d_total}, d(β) = {b.d_total}, ground {g}")
            continue
        held = _clauses(g, a, b)
        if held:
            return Verdict(True, held[0], swapped, "also " + held[1] if len(held) > 1 else "")
        if rank < 2:
            rank = 2
            best = Verdict(False, "fail-clauses", swapped, "neither clause (i) nor (ii) holds")
    return best


# modulo E_X ---------------------------------------------------------------------------


def classify_mod_E(p1: SidedProfile, p2: SidedProfile) -> Verdict:
    """Does ⟨E_X, α, β⟩ = P_X (equivalently ⟨E_X ∪ S_X, α, β⟩ = P_X)?"""
    g = _check_grounds(p1, p2)
    best = Verdict(False, "fail-side", False, "no order has α ∈ L_X and β ∈ R_X")
    for a, b, swapped in _orders(p1, p2):
        if not _sides_ok(a, b):
            continue
        if a.s_value == g and b.s_value == g:
            return Verdict(True, "idempotent-s", swapped)
        best = Verdict(False, "fail-s", swapped,
                       f"s*(α) = {a.s_value}, s(β) = {b.s_value}, ground {g}")
    return best


@dataclass(frozen=True)
class ElementData:
    """What membership in ⟨E_X⟩ and ⟨E_X ∪ S_X⟩ depends on."""

    s: Cardinal
    sstar: Cardinal
    sh: Cardinal
    finitary: bool
    unit: bool
    identity: bool = False

    def __post_init__(self):
        for name in ("s", "sstar", "sh"):
            object.__setattr__(self, name, coerce(getattr(self, name)))

    @classmethod
    def of(cls, a: FinitaryPartition) -> "ElementData":
        return cls(F.s(a), F.sstar(a), F.sh(a), True, F.is_unit(a), F.is_identity(a))


def _data(a) -> ElementData:
    return a if isinstance(a, ElementData) else ElementData.of(a)


def in_E_closure(a: Union[ElementData, FinitaryPartition]) -> bool:
    e = _data(a)
    if e.identity:
        return True
    if e.finitary and not e.unit:
        return True
    return e.s == e.sstar and e.s >= max(ALEPH_0, e.sh)


def in_ES_closure(a: Union[ElementData, FinitaryPartition]) -> bool:
    e = _data(a)
    return e.s == e.sstar

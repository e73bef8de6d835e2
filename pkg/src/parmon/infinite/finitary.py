"""Finitary partitions of ℕ ∪ ℕ′: the identity {x, x′} outside a finite warp set."""
from __future__ import annotations

import json
import random
from typing import Iterable, Optional

from .. import partition as P
from ..cardinal import ALEPH_0, Cardinal, CardinalLike, coerce
from ..partition import Partition, canonical_blocks

Block = tuple


class FinitaryPartition:
    """Stores only the non-identity blocks; everything else is {x, x′}."""

    __slots__ = ("blocks", "warp", "_index")

    def __init__(self, blocks: Iterable[Iterable[int]] = ()):
        blocks = [tuple(b) for b in blocks]
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise P.ParseError("empty block")
            for v in b:
                if v == 0:
                    raise P.ParseError("point 0 is not allowed (ℕ starts at 1)")
                if v in seen:
                    raise P.ParseError(f"point {v} appears twice")
                seen.add(v)
        warp = {abs(v) for v in seen}
        for x in warp:
            if x not in seen:
                raise P.ParseError(f"point {x} is missing")
            if -x not in seen:
                raise P.ParseError(f"point {-x} is missing")
        kept = [b for b in blocks if not (len(b) == 2 and b[0] == -b[1])]
        self.blocks = canonical_blocks(kept)
        self.warp = frozenset(abs(v) for b in self.blocks for v in b)
        self._index = {v: b for b in self.blocks for v in b}

    # construction ---------------------------------------------------------

    @classmethod
    def identity(cls) -> "FinitaryPartition":
        return cls(())

    @classmethod
    def from_partition(cls, a: Partition, offset: int = 0) -> "FinitaryPartition":
        """Embed a degree-n partition on {offset+1 .. offset+n}."""
        def shift(v):
            return v + offset if v > 0 else v - offset
        return cls([shift(v) for v in b] for b in a.blocks)

    @classmethod
    def parse(cls, text: str) -> "FinitaryPartition":
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("blocks", data.get("warpBlocks"))
        if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
            raise P.ParseError("expected a JSON list of blocks")
        for b in data:
            for v in b:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise P.ParseError(f"not an integer point: {v!r}")
        return cls(data)

    # views -------------------------------------------------------------------

    @property
    def horizon(self) -> int:
        """Largest warp point (0 for the identity)."""
        return max(self.warp, default=0)

    def to_partition(self, n: Optional[int] = None) -> Partition:
        n = self.horizon if n is None else n
        if n < self.horizon:
            raise ValueError(f"window {n} cuts the warp set (max {self.horizon})")
        blocks = list(self.blocks) + [(x, -x) for x in range(1, n + 1) if x not in self.warp]
        return Partition(n, blocks)

    def block(self, point: int) -> Block:
        if point == 0:
            raise ValueError("point 0 is not in ℕ ∪ ℕ′")
        b = self._index.get(point)
        if b is not None:
            return b
        x = abs(point)
        return (x, -x)

    __call__ = block

    def window_blocks(self, window: int) -> frozenset:
        """Full blocks meeting ±1..±window."""
        out = set()
        for x in range(1, window + 1):
            out.add(self.block(x))
            out.add(self.block(-x))
        return frozenset(out)

    def __eq__(self, other):
        if not isinstance(other, FinitaryPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"FinitaryPartition({self.to_json()})"

    def to_json(self) -> str:
        return json.dumps([list(b) for b in self.blocks], separators=(",", ":"))

    def __mul__(self, other):
        return compose_finitary(self, other)

    def as_lazy(self):
        from .lazy import LazyPartition
        return LazyPartition(self.block, f"finitary {self.to_json()}")

    def transversals(self):
        return self.to_partition().transversals()


def compose_finitary(a: FinitaryPartition, b: FinitaryPartition) -> FinitaryPartition:
    """Both sides are the identity beyond the joint horizon, so compose on that window."""
    n = max(a.horizon, b.horizon)
    if n == 0:
        return FinitaryPartition.identity()
    return FinitaryPartition(P.compose(a.to_partition(n), b.to_partition(n)).blocks)


def star(a: FinitaryPartition) -> FinitaryPartition:
    return FinitaryPartition(tuple(-v for v in b) for b in a.blocks)


def random_finitary(rng: random.Random, max_warp: int) -> FinitaryPartition:
    """Random partition of {±1..±max_warp}, extended by the identity."""
    return FinitaryPartition.from_partition(P.random_partition(rng, max_warp))


# parameters -------------------------------------------------------------------
# The identity blocks beyond the warp contribute only to k(·,1) and k*(·,1),
# which are therefore ℵ0; every other parameter is read off the window.


def _core(a: FinitaryPartition) -> Partition:
    return a.to_partition()


def param_k(a: FinitaryPartition, mu: CardinalLike) -> Cardinal:
    mu = coerce(mu)
    return ALEPH_0 if mu <= 1 else P.param_k(_core(a), mu)


def param_kstar(a: FinitaryPartition, mu: CardinalLike) -> Cardinal:
    mu = coerce(mu)
    return ALEPH_0 if mu <= 1 else P.param_kstar(_core(a), mu)


def param_d(a: FinitaryPartition, mu: CardinalLike) -> Cardinal:
    return P.param_d(_core(a), mu)


def param_dstar(a: FinitaryPartition, mu: CardinalLike) -> Cardinal:
    return P.param_dstar(_core(a), mu)


def param_d_total(a: FinitaryPartition) -> Cardinal:
    return P.param_d_total(_core(a))


def param_dstar_total(a: FinitaryPartition) -> Cardinal:
    return P.param_dstar_total(_core(a))


def s(a: FinitaryPartition) -> Cardinal:
    return P.s(_core(a))


def sstar(a: FinitaryPartition) -> Cardinal:
    return P.sstar(_core(a))


def sh(a: FinitaryPartition) -> Cardinal:
    return P.sh(_core(a))


def in_L(a: FinitaryPartition) -> bool:
    return P.in_L(_core(a))


def in_R(a: FinitaryPartition) -> bool:
    return P.in_R(_core(a))


def is_unit(a: FinitaryPartition) -> bool:
    return P.is_unit(_core(a))


def is_identity(a: FinitaryPartition) -> bool:
    return not a.blocks

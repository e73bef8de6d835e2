"""Finite partitions of {1..n} ∪ {1'..n'} and their arithmetic.

Points are signed integers: ``x`` is the upper vertex x and ``-x`` the
lower vertex x'.  A :class:`Partition` is stored in canonical form, so
structural equality is partition equality and values hash consistently.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .cardinal import Cardinal, CardinalLike, coerce

Block = tuple  # tuple[int, ...] in canonical point order


class ParseError(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


def _point_key(v: int):
    return (abs(v), v < 0)


def _block_key(block: Sequence[int]):
    uppers = [v for v in block if v > 0]
    if uppers:
        return (0, min(uppers))
    return (1, min(-v for v in block))


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple:
    out = [tuple(sorted(b, key=_point_key)) for b in blocks]
    out.sort(key=_block_key)
    return tuple(out)


class DisjointSet:
    """Array-backed union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


class Partition:
    """An element of the partition monoid P_n, immutable and canonical."""

    __slots__ = ("degree", "blocks", "_hash")

    def __init__(self, degree: int, blocks: Iterable[Iterable[int]]):
        blocks = [list(b) for b in blocks]
        _validate(degree, blocks)
        self.degree = degree
        self.blocks = canonical_blocks(blocks)
        self._hash = hash((degree, self.blocks))

    @classmethod
    def _raw(cls, degree: int, blocks: tuple) -> "Partition":
        # trusted constructor: blocks already canonical
        p = object.__new__(cls)
        p.degree = degree
        p.blocks = blocks
        p._hash = hash((degree, blocks))
        return p

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.degree == other.degree and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Partition"):
        return (self.degree, self.blocks) < (other.degree, other.blocks)

    def __reduce__(self):
        return (Partition._raw, (self.degree, self.blocks))

    def __repr__(self):
        return f"Partition({self.degree}, {format_json(self)})"

    def __str__(self):
        return format_json(self)

    def __mul__(self, other: "Partition") -> "Partition":
        return compose(self, other)

    # block views --------------------------------------------------------

    def transversals(self):
        """(upper set, lower set) for each transversal block; lower as ground points."""
        out = []
        for b in self.blocks:
            up = tuple(v for v in b if v > 0)
            lo = tuple(-v for v in b if v < 0)
            if up and lo:
                out.append((up, lo))
        return out

    def upper_nontransversals(self):
        return [b for b in self.blocks if all(v > 0 for v in b)]

    def lower_nontransversals(self):
        return [tuple(-v for v in b) for b in self.blocks if all(v < 0 for v in b)]


def _validate(degree: int, blocks) -> None:
    if degree < 0:
        raise ParseError(f"negative degree {degree}")
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise ParseError("empty block")
        for v in b:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"point {v!r} is not an integer")
            if v == 0:
                raise ParseError("point 0 is not allowed (use x for x, -x for x')")
            if abs(v) > degree:
                raise ParseError(f"point {v} out of range for degree {degree}")
            if v in seen:
                raise ParseError(f"point {v} appears twice")
            seen.add(v)
    for x in range(1, degree + 1):
        for v in (x, -x):
            if v not in seen:
                raise ParseError(f"point {v} is missing")


# construction -------------------------------------------------------------


def identity(n: int) -> Partition:
    return Partition._raw(n, tuple((x, -x) for x in range(1, n + 1)))


def from_permutation(images: Sequence[int]) -> Partition:
    """Unit with blocks {x, (x pi)'}; ``images[x-1]`` is the image of x."""
    n = len(images)
    return Partition(n, [(x, -images[x - 1]) for x in range(1, n + 1)])


def id_set(A: Iterable[int], n: int) -> Partition:
    """id_A: blocks {a, a'} for a in A, singletons {x}, {x'} elsewhere."""
    A = set(A)
    if not A <= set(range(1, n + 1)):
        raise ParseError(f"{sorted(A)} is not a subset of 1..{n}")
    blocks = []
    for x in range(1, n + 1):
        if x in A:
            blocks.append((x, -x))
        else:
            blocks += [(x,), (-x,)]
    return Partition(n, blocks)


def id_quotient(Y: "EquivalenceOnGround") -> Partition:
    """id_Y: blocks A ∪ A' for each class A of Y."""
    return Partition(Y.degree, [tuple(c) + tuple(-v for v in c) for c in Y.classes])


def parse(text: str, degree: int | None = None) -> Partition:
    """Read a JSON block list, or the one-line ``1 3 -4 | 2 4 | ...`` form."""
    text = text.strip()
    if text.startswith("[") or text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if isinstance(data, dict):
            degree = data.get("degree", degree)
            data = data.get("blocks")
        if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
            raise ParseError("expected a JSON array of arrays of integers")
        blocks = data
    else:
        blocks = []
        for chunk in text.split("|"):
            try:
                blocks.append([int(tok) for tok in chunk.split()])
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        if blocks == [[]]:
            blocks = []
    for b in blocks:
        for v in b:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"point {v!r} is not an integer")
    if degree is None:
        degree = max((abs(v) for b in blocks for v in b), default=0)
    return Partition(degree, blocks)


def format_json(a: Partition) -> str:
    return json.dumps([list(b) for b in a.blocks], separators=(",", ":"))


def format_text(a: Partition) -> str:
    return " | ".join(" ".join(str(v) for v in b) for b in a.blocks)


# products -----------------------------------------------------------------


def compose(a: Partition, b: Partition) -> Partition:
    """The product ab: glue a's lower row to b's upper row and keep outer traces.

    Vertices 0..n-1 are a's upper row, n..2n-1 the shared middle row and
    2n..3n-1 b's lower row.  Middle-only components are dropped.
    """
    n = a.degree
    if b.degree != n:
        raise DegreeMismatch(f"degrees {n} and {b.degree} differ")
    ds = DisjointSet(3 * n)
    union = ds.union
    for blk in a.blocks:
        first = blk[0]
        r = first - 1 if first > 0 else n - first - 1
        for v in blk[1:]:
            union(r, v - 1 if v > 0 else n - v - 1)
    for blk in b.blocks:
        first = blk[0]
        r = n + first - 1 if first > 0 else 2 * n - first - 1
        for v in blk[1:]:
            union(r, n + v - 1 if v > 0 else 2 * n - v - 1)
    find = ds.find
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x - 1), []).append(x)
    for x in range(1, n + 1):
        groups.setdefault(find(2 * n + x - 1), []).append(-x)
    # points were appended upper-ascending then lower-ascending
    blocks = [tuple(sorted(g, key=_point_key)) for g in groups.values()]
    blocks.sort(key=_block_key)
    return Partition._raw(n, tuple(blocks))


def compose_all(factors: Sequence[Partition]) -> Partition:
    out = factors[0]
    for f in factors[1:]:
        out = compose(out, f)
    return out


def star(a: Partition) -> Partition:
    """Turn a upside down."""
    return Partition._raw(a.degree, canonical_blocks(tuple(-v for v in b) for b in a.blocks))


# domains and kernels --------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceOnGround:
    degree: int
    classes: tuple

    def __post_init__(self):
        classes = tuple(sorted(tuple(sorted(c)) for c in self.classes))
        object.__setattr__(self, "classes", classes)
        pts = [x for c in classes for x in c]
        if sorted(pts) != list(range(1, self.degree + 1)) or any(not c for c in classes):
            raise ParseError(f"{classes} is not a partition of 1..{self.degree}")

    @classmethod
    def trivial(cls, n: int) -> "EquivalenceOnGround":
        return cls(n, tuple((x,) for x in range(1, n + 1)))

    def is_trivial(self) -> bool:
        return len(self.classes) == self.degree

    def pairs(self) -> frozenset:
        return frozenset((x, y) for c in self.classes for x in c for y in c)

    def __le__(self, other: "EquivalenceOnGround") -> bool:
        return self.pairs() <= other.pairs()

    def __ge__(self, other: "EquivalenceOnGround") -> bool:
        return self.pairs() >= other.pairs()


def dom(a: Partition) -> frozenset:
    return frozenset(x for up, _ in a.transversals() for x in up)


def codom(a: Partition) -> frozenset:
    return frozenset(x for _, lo in a.transversals() for x in lo)


def ker(a: Partition) -> EquivalenceOnGround:
    return EquivalenceOnGround(a.degree, tuple(tuple(v for v in b if v > 0)
                                               for b in a.blocks if any(v > 0 for v in b)))


def coker(a: Partition) -> EquivalenceOnGround:
    return EquivalenceOnGround(a.degree, tuple(tuple(-v for v in b if v < 0)
                                               for b in a.blocks if any(v < 0 for v in b)))


def block_of(a: Partition, point: int) -> Block:
    for b in a.blocks:
        if point in b:
            return b
    raise KeyError(point)


def block_size(a: Partition, point: int) -> int:
    return len(block_of(a, point))


def in_L(a: Partition) -> bool:
    """Full domain and trivial kernel."""
    for b in a.blocks:
        uppers = sum(1 for v in b if v > 0)
        if uppers > 1 or (uppers == 1 and uppers == len(b)):
            return False
    return True


def in_R(a: Partition) -> bool:
    return in_L(star(a))


def is_unit(a: Partition) -> bool:
    return all(len(b) == 2 and b[0] * b[1] < 0 for b in a.blocks)


def is_idempotent(a: Partition) -> bool:
    return compose(a, a) == a


# parameters ------------------------------------------------------------------


def _at_least(size: int, mu: Cardinal) -> bool:
    return Cardinal.finite(size) >= mu


def param_k(a: Partition, mu: CardinalLike) -> Cardinal:
    mu = coerce(mu)
    return Cardinal.finite(sum(1 for up, _ in a.transversals() if _at_least(len(up), mu)))


def param_kstar(a: Partition, mu: CardinalLike) -> Cardinal:
    mu = coerce(mu)
    return Cardinal.finite(sum(1 for _, lo in a.transversals() if _at_least(len(lo), mu)))


def param_d(a: Partition, mu: CardinalLike) -> Cardinal:
    mu = coerce(mu)
    return Cardinal.finite(sum(1 for c in a.upper_nontransversals() if _at_least(len(c), mu)))


def param_dstar(a: Partition, mu: CardinalLike) -> Cardinal:
    mu = coerce(mu)
    return Cardinal.finite(sum(1 for d in a.lower_nontransversals() if _at_least(len(d), mu)))


def param_d_total(a: Partition) -> Cardinal:
    return param_d(a, 1)


def param_dstar_total(a: Partition) -> Cardinal:
    return param_dstar(a, 1)


def s(a: Partition) -> Cardinal:
    """Singularity: sum of (|A_i| - 1) over transversals plus sum of |C_j|."""
    total = sum(len(up) - 1 for up, _ in a.transversals())
    total += sum(len(c) for c in a.upper_nontransversals())
    return Cardinal.finite(total)


def sstar(a: Partition) -> Cardinal:
    return s(star(a))


def sh(a: Partition) -> Cardinal:
    """Shift: transversal blocks whose upper and lower halves are disjoint in the ground set."""
    return Cardinal.finite(sum(1 for up, lo in a.transversals() if not set(up) & set(lo)))


def warp(a: Partition) -> frozenset:
    return frozenset(x for b in a.blocks for x in b
                     if x > 0 and b != (x, -x))


def is_finitary(a: Partition) -> bool:
    # every finite-degree partition has a finite warp set
    return True


# random sampling ---------------------------------------------------------------


def random_set_partition(rng: random.Random, points: Sequence[int]) -> list[list[int]]:
    """Uniform-ish random set partition via random restricted growth strings.

    Not exactly uniform over Bell-many partitions; each point joins an
    existing block or opens a new one with equal weight per option.
    """
    blocks: list[list[int]] = []
    for p in points:
        j = rng.randrange(len(blocks) + 1)
        if j == len(blocks):
            blocks.append([p])
        else:
            blocks[j].append(p)
    return blocks


def random_partition(rng: random.Random, n: int) -> Partition:
    pts = list(range(1, n + 1)) + [-x for x in range(1, n + 1)]
    rng.shuffle(pts)
    return Partition(n, random_set_partition(rng, pts))


def random_permutation(rng: random.Random, n: int) -> Partition:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return from_permutation(images)


def all_subsets(n: int):
    pts = range(1, n + 1)
    for r in range(n + 1):
        yield from combinations(pts, r)

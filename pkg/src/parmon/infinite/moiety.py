"""Moieties of ℕ = {1, 2, 3, ...}: decompositions into infinite parts.

Every moiety here exposes exact membership, enumeration, ranking and
counting, so order-isomorphisms between unions of parts are computable.
"""
from __future__ import annotations

from typing import Callable, Iterable, Optional


def v2(x: int) -> int:
    """2-adic valuation of a positive integer."""
    return (x & -x).bit_length() - 1


class Moiety:
    """Base interface.  ``parts`` is the number of parts, or None for countably many."""

    parts: Optional[int] = None
    tag = "moiety"

    def part_of(self, x: int) -> int:
        raise NotImplementedError

    def element(self, i: int, m: int) -> int:
        """The m-th smallest element of part i (m >= 1)."""
        raise NotImplementedError

    def rank(self, i: int, x: int) -> int:
        """Position of x in part i, 1-based."""
        raise NotImplementedError

    def count_le(self, i: int, bound: int) -> int:
        raise NotImplementedError

    def indices_below(self, bound: int) -> Iterable[int]:
        """Indices of every part that has an element <= bound (possibly more)."""
        raise NotImplementedError

    def contains(self, i: int, x: int) -> bool:
        return x >= 1 and self.part_of(x) == i

    def enumerate(self, i: int, count: int) -> list[int]:
        return [self.element(i, m) for m in range(1, count + 1)]


class ResidueMoiety(Moiety):
    """k parts given by residues mod k; part r holds the x with x ≡ r (mod k)."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("need at least one part")
        self.parts = k
        self.k = k
        self.tag = f"residues mod {k}"

    def part_of(self, x):
        return x % self.k

    def element(self, i, m):
        return self.k * m if i == 0 else i + self.k * (m - 1)

    def rank(self, i, x):
        return x // self.k if i == 0 else (x - i) // self.k + 1

    def count_le(self, i, bound):
        if i == 0:
            return max(bound, 0) // self.k
        return 0 if bound < i else (bound - i) // self.k + 1

    def indices_below(self, bound):
        return range(self.k)


class DyadicMoiety(Moiety):
    """Countably many parts by 2-adic valuation: part i is {2^(i-o) (2m-1) : m >= 1}.

    ``offset`` o is the index of the odd numbers (1 by default).
    """

    def __init__(self, offset: int = 1):
        self.offset = offset
        self.tag = f"dyadic valuation (odd numbers = part {offset})"

    def part_of(self, x):
        return v2(x) + self.offset

    def element(self, i, m):
        return (2 * m - 1) << (i - self.offset)

    def rank(self, i, x):
        return ((x >> (i - self.offset)) + 1) // 2

    def count_le(self, i, bound):
        if i < self.offset or bound < 1:
            return 0
        return ((bound >> (i - self.offset)) + 1) // 2

    def indices_below(self, bound):
        return range(self.offset, self.offset + max(bound, 1).bit_length())


class TransportedMoiety(Moiety):
    """A moiety of one part P of ``parent``, copied from ``child`` along ℕ ≅ P."""

    def __init__(self, parent: Moiety, part: int, child: Moiety):
        self.parent, self.part, self.child = parent, part, child
        self.parts = child.parts
        self.tag = f"{child.tag} inside part {part} of {parent.tag}"

    def part_of(self, x):
        if self.parent.part_of(x) != self.part:
            raise ValueError(f"{x} lies outside part {self.part}")
        return self.child.part_of(self.parent.rank(self.part, x))

    def contains(self, i, x):
        return x >= 1 and self.parent.part_of(x) == self.part and \
            self.child.part_of(self.parent.rank(self.part, x)) == i

    def element(self, i, m):
        return self.parent.element(self.part, self.child.element(i, m))

    def rank(self, i, x):
        return self.child.rank(i, self.parent.rank(self.part, x))

    def count_le(self, i, bound):
        return self.child.count_le(i, self.parent.count_le(self.part, bound))

    def indices_below(self, bound):
        return self.child.indices_below(self.parent.count_le(self.part, bound))


def standard_moiety(parts: Optional[int] = None) -> Moiety:
    """``parts=k`` gives residues mod k; ``None`` (or "countable") the dyadic family."""
    if parts is None or parts == "countable":
        return DyadicMoiety()
    return ResidueMoiety(int(parts))


class PartUnion:
    """A union of parts of a moiety (selected by index), minus finitely many points."""

    def __init__(self, moiety: Moiety, include: Callable[[int], bool],
                 exclude: Iterable[int] = (), tag: str = "",
                 indices: Optional[frozenset] = None):
        self.moiety = moiety
        self.include = include
        self.indices = indices      # set when finitely many parts are selected
        self.exclude = frozenset(exclude)
        self._exclude_sorted = sorted(self.exclude)
        self.tag = tag

    @classmethod
    def of(cls, moiety: Moiety, indices: Iterable[int], exclude: Iterable[int] = ()):
        idx = frozenset(indices)
        return cls(moiety, idx.__contains__, exclude, tag=f"parts {sorted(idx)}", indices=idx)

    def __contains__(self, x: int) -> bool:
        return x >= 1 and x not in self.exclude and self.include(self.moiety.part_of(x))

    def count_le(self, bound: int) -> int:
        m = self.moiety
        if self.indices is not None:
            total = sum(m.count_le(i, bound) for i in self.indices)
        else:
            total = sum(m.count_le(i, bound) for i in m.indices_below(bound) if self.include(i))
        return total - sum(1 for e in self._exclude_sorted if e <= bound)

    def rank(self, x: int) -> int:
        return self.count_le(x)

    def select(self, k: int) -> int:
        """The k-th smallest element (k >= 1)."""
        if k < 1:
            raise ValueError("ranks start at 1")
        hi = 1
        while self.count_le(hi) < k:
            hi *= 2
        lo = hi // 2
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if self.count_le(mid) >= k:
                hi = mid
            else:
                lo = mid
        return hi


class OrderIso:
    """The order-isomorphism between two infinite PartUnions (k-th ↦ k-th)."""

    def __init__(self, source: PartUnion, target: PartUnion):
        self.source, self.target = source, target

    def __call__(self, x: int) -> int:
        return self.target.select(self.source.rank(x))

    def inverse(self, y: int) -> int:
        return self.source.select(self.target.rank(y))

"""The generating pair α = (E_x | F_x), β = α* over ℕ, and the factorization γ = απβ.

α has blocks {x} ∪ E_x′ (x ∈ ℕ) and lower nontransversals F_x′, where E_x and
F_x are the dyadic parts 2x-1 and 2x.  Every nontrivial block is infinite, so
these partitions are exposed through part-membership rather than the
finite-block oracle; products with them go through ``sandwich``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..cardinal import ALEPH_0
from ..partition import DisjointSet
from .finitary import FinitaryPartition
from .lazy import HorizonExceeded, LazyPartition
from .moiety import DyadicMoiety, Moiety, OrderIso, PartUnion


@dataclass(frozen=True)
class PartBlock:
    """A block made of finitely many points plus whole moiety parts on one row."""

    points: tuple
    parts: tuple
    row: int                 # +1: parts are upper points, -1: lower points
    moiety: Moiety = field(compare=False, repr=False)

    @property
    def is_infinite(self) -> bool:
        return bool(self.parts)

    def __contains__(self, v: int) -> bool:
        if v in self.points:
            return True
        if (v > 0) != (self.row > 0):
            return False
        return self.moiety.part_of(abs(v)) in self.parts

    def first(self, count: int) -> list[int]:
        """The points of the block, then the first ``count`` part elements in order."""
        elems = sorted({self.moiety.element(i, m) for i in self.parts
                        for m in range(1, count + 1)})[:count]
        return list(self.points) + [self.row * e for e in elems]


class PartPartition:
    """α (row = -1) or its mirror β = α* (row = +1) over the dyadic moiety."""

    def __init__(self, row: int = -1, moiety: Optional[Moiety] = None):
        self.row = row
        self.moiety = moiety or DyadicMoiety()
        self.descriptor = "alpha = (E_x | F_x)" if row < 0 else "beta = (G_x | H_x)*"

    def part_block(self, i: int) -> PartBlock:
        """The block containing part i (odd i: E/G parts with a point; even i: F/H parts)."""
        pts = ((-self.row) * ((i + 1) // 2),) if i % 2 == 1 else ()
        return PartBlock(pts, (i,), self.row, self.moiety)

    def block(self, point: int) -> PartBlock:
        if point == 0:
            raise ValueError("point 0 is not in ℕ ∪ ℕ′")
        if (point > 0) == (self.row > 0):
            return self.part_block(self.moiety.part_of(abs(point)))
        return self.part_block(2 * abs(point) - 1)

    __call__ = block

    def star(self) -> "PartPartition":
        return PartPartition(-self.row, self.moiety)

    def in_L(self) -> bool:
        return self.row < 0

    def in_R(self) -> bool:
        return self.row > 0

    def profile(self):
        """Sided profile over ground ℵ0: every relevant count and size is ℵ0."""
        from ..classifier import SidedProfile, StepFunction
        const = StepFunction([(1, ALEPH_0)])
        return SidedProfile(side="L" if self.row < 0 else "R", ground=ALEPH_0,
                            k_fn=const, d_fn=const, d_total=ALEPH_0, in_side=True,
                            s_value=ALEPH_0)

    def compose_lazy_with(self, other, fuel):
        if self.row < 0 and isinstance(other, PiecewisePermutation):
            return HalfProduct(self, other, fuel)
        return NotImplemented

    def __repr__(self):
        return f"PartPartition<{self.descriptor}>"


def canonical_gen_pair(moiety: Optional[Moiety] = None) -> tuple[PartPartition, PartPartition]:
    alpha = PartPartition(-1, moiety)
    return alpha, alpha.star()


# the permutation π ---------------------------------------------------------------


@dataclass
class Piece:
    """π maps the union of ``domain_parts`` bijectively onto that of ``codomain_parts``.

    ``None`` for a part set means the cofinite tail family (infinitely many parts).
    """

    stage: int
    label: str
    domain: PartUnion
    codomain: PartUnion
    domain_parts: Optional[frozenset]
    codomain_parts: Optional[frozenset]
    pins: dict = field(default_factory=dict)

    def __post_init__(self):
        self._inverse_pins = {g: e for e, g in self.pins.items()}
        self.fixed = (not self.pins and self.domain_parts is not None
                      and self.domain_parts == self.codomain_parts)
        free_dom = PartUnion(self.domain.moiety, self.domain.include,
                             self.domain.exclude | set(self.pins), self.domain.tag,
                             self.domain.indices)
        free_cod = PartUnion(self.codomain.moiety, self.codomain.include,
                             self.codomain.exclude | set(self._inverse_pins), self.codomain.tag,
                             self.codomain.indices)
        self._iso = OrderIso(free_dom, free_cod)

    def __call__(self, z: int) -> int:
        if self.fixed:
            return z
        g = self.pins.get(z)
        return g if g is not None else self._iso(z)

    def inverse(self, y: int) -> int:
        if self.fixed:
            return y
        e = self._inverse_pins.get(y)
        return e if e is not None else self._iso.inverse(y)


class PiecewisePermutation:
    """A permutation of ℕ assembled from pieces; parts not listed are fixed."""

    def __init__(self, moiety: Moiety, pieces: list[Piece], tail: Optional[Piece] = None):
        self.moiety = moiety
        self.pieces = pieces
        self.tail = tail
        self._by_dom: dict[int, Piece] = {}
        self._by_cod: dict[int, Piece] = {}
        for pc in pieces:
            for i in pc.domain_parts:
                if i in self._by_dom:
                    raise ValueError(f"part {i} lies in two piece domains")
                self._by_dom[i] = pc
            for i in pc.codomain_parts:
                if i in self._by_cod:
                    raise ValueError(f"part {i} lies in two piece codomains")
                self._by_cod[i] = pc
        self._fixed: dict[int, Piece] = {}

    def _fixed_piece(self, i: int) -> Piece:
        pc = self._fixed.get(i)
        if pc is None:
            u = PartUnion.of(self.moiety, [i])
            pc = Piece(1, f"fixed part {i}", u, u, frozenset([i]), frozenset([i]))
            self._fixed[i] = pc
        return pc

    def piece_for_domain_part(self, i: int) -> Piece:
        pc = self._by_dom.get(i)
        if pc is not None:
            return pc
        if self.tail is not None and self.tail.domain.include(i):
            return self.tail
        return self._fixed_piece(i)

    def piece_for_codomain_part(self, i: int) -> Piece:
        pc = self._by_cod.get(i)
        if pc is not None:
            return pc
        if self.tail is not None and self.tail.codomain.include(i):
            return self.tail
        return self._fixed_piece(i)

    def __call__(self, z: int) -> int:
        return self.piece_for_domain_part(self.moiety.part_of(z))(z)

    def inverse(self, y: int) -> int:
        return self.piece_for_codomain_part(self.moiety.part_of(y)).inverse(y)

    def as_lazy(self) -> LazyPartition:
        def oracle(p):
            return (p, -self(p)) if p > 0 else (self.inverse(-p), p)
        return LazyPartition(oracle, "pi")

    def compose_lazy_with(self, other, fuel):
        return NotImplemented


def factorize_pi(gamma: FinitaryPartition, moiety: Optional[Moiety] = None) -> PiecewisePermutation:
    """A permutation π with απβ = γ for the canonical pair (α, β).

    Transversal A ∪ B′: ∪E_a (a ∈ A) onto ∪G_b (b ∈ B), pinning the k-th element
    of E_a to the r-th element of G_b (a r-th in A, b k-th in B) so the piece is
    connected.  Upper nontransversal C_j: ∪E_x onto H_j.  Lower nontransversal
    D_k: F_k onto ∪G_y.  Remaining F's onto remaining H's.  Free elements go by
    order-isomorphism.
    """
    m = moiety or DyadicMoiety()
    trans, uppers, lowers = [], [], []
    for b in gamma.blocks:
        up = tuple(v for v in b if v > 0)
        lo = tuple(-v for v in b if v < 0)
        (trans if up and lo else uppers if up else lowers).append((up, lo))

    def E(x):
        return 2 * x - 1

    pieces = []
    for up, lo in trans:
        pins = {}
        for r, a in enumerate(up, start=1):
            for k, b in enumerate(lo, start=1):
                pins[m.element(E(a), k)] = m.element(E(b), r)
        dp = frozenset(E(a) for a in up)
        cp = frozenset(E(b) for b in lo)
        pieces.append(Piece(1, f"transversal {list(up)}|{list(lo)}",
                            PartUnion.of(m, dp), PartUnion.of(m, cp), dp, cp, pins))
    for j, (up, _) in enumerate(uppers, start=1):
        dp = frozenset(E(x) for x in up)
        cp = frozenset([2 * j])
        pieces.append(Piece(2, f"upper {list(up)} -> H_{j}",
                            PartUnion.of(m, dp), PartUnion.of(m, cp), dp, cp))
    for k, (_, lo) in enumerate(lowers, start=1):
        dp = frozenset([2 * k])
        cp = frozenset(E(y) for y in lo)
        pieces.append(Piece(3, f"F_{k} -> lower {list(lo)}",
                            PartUnion.of(m, dp), PartUnion.of(m, cp), dp, cp))
    J, K = len(uppers), len(lowers)
    tail = Piece(4, "remaining F -> remaining H",
                 PartUnion(m, lambda i: i % 2 == 0 and i // 2 > K, tag=f"F_z, z > {K}"),
                 PartUnion(m, lambda i: i % 2 == 0 and i // 2 > J, tag=f"H_z, z > {J}"),
                 None, None)
    return PiecewisePermutation(m, pieces, tail)


# the specialized product α π β ---------------------------------------------------


class HalfProduct:
    """απ, kept symbolic until β arrives."""

    def __init__(self, alpha: PartPartition, pi: PiecewisePermutation, fuel: int):
        self.alpha, self.pi, self.fuel = alpha, pi, fuel

    def compose_lazy_with(self, other, fuel):
        if isinstance(other, PartPartition) and other.row > 0:
            return sandwich(self.alpha, self.pi, other, fuel)
        return NotImplemented


_SPOT = 16


def _check_piece(pi: PiecewisePermutation, pc: Piece, moiety: Moiety) -> None:
    """Witness that the piece is one connected component and respects its codomain."""
    doms, cods = sorted(pc.domain_parts), sorted(pc.codomain_parts)
    index = {("d", i): n for n, i in enumerate(doms)}
    index.update({("c", i): len(doms) + n for n, i in enumerate(cods)})
    dsu = DisjointSet(len(index))
    reach = max(len(cods), len(doms)) + _SPOT
    for i in doms:
        for mth in range(1, reach + 1):
            z = moiety.element(i, mth)
            y = pi(z)
            j = moiety.part_of(y)
            if j not in pc.codomain_parts:
                raise RuntimeError(f"pi sends {z} outside its piece ({pc.label})")
            if pi.inverse(y) != z:
                raise RuntimeError(f"pi is not invertible at {z}")
            dsu.union(index[("d", i)], index[("c", j)])
    for j in cods:
        for mth in range(1, _SPOT + 1):
            y = moiety.element(j, mth)
            i = moiety.part_of(pi.inverse(y))
            if i not in pc.domain_parts:
                raise RuntimeError(f"pi^-1 sends {y} outside its piece ({pc.label})")
            dsu.union(index[("d", i)], index[("c", j)])
    roots = {dsu.find(n) for n in range(len(index))}
    if len(roots) != 1:
        raise RuntimeError(f"piece {pc.label} is not connected")


def sandwich(alpha: PartPartition, pi: PiecewisePermutation, beta: PartPartition,
             fuel: int = 10_000) -> LazyPartition:
    """The product απβ as a block oracle, exploring whole pieces of π.

    A product component is a union of pieces: each α-block meets the middle
    row in whole parts, π carries each piece's parts onto its codomain parts,
    and each β-block is again whole parts.  Fuel counts parts explored; the
    cofinite tail piece never meets the outer rows and triggers a refusal.
    """
    m = pi.moiety
    checked: set[int] = set()

    def oracle(p):
        out = set()
        dom_seen: set[int] = set()
        cod_seen: set[int] = set()
        todo: list[tuple[str, int]] = []
        start = alpha.block(p) if p > 0 else beta.block(p)
        out.update(start.points)
        todo.extend((("d" if p > 0 else "c"), i) for i in start.parts)
        explored = 0
        while todo:
            side, i = todo.pop()
            seen = dom_seen if side == "d" else cod_seen
            if i in seen:
                continue
            explored += 1
            if explored > fuel:
                raise HorizonExceeded(p, fuel, len(todo))
            pc = pi.piece_for_domain_part(i) if side == "d" else pi.piece_for_codomain_part(i)
            if pc.domain_parts is None:
                raise HorizonExceeded(p, fuel, len(todo))
            if id(pc) not in checked:
                _check_piece(pi, pc, m)
                checked.add(id(pc))
            for d in pc.domain_parts:
                if d not in dom_seen:
                    dom_seen.add(d)
                    blk = alpha.part_block(d)
                    out.update(blk.points)
                    todo.extend(("d", e) for e in blk.parts if e not in dom_seen)
            for c in pc.codomain_parts:
                if c not in cod_seen:
                    cod_seen.add(c)
                    blk = beta.part_block(c)
                    out.update(blk.points)
                    todo.extend(("c", e) for e in blk.parts if e not in cod_seen)
        return tuple(out)

    return LazyPartition(oracle, "alpha pi beta")

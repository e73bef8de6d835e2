"""Closure and generation experiments inside finite P_n."""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .partition import (
    Partition,
    canonical_blocks,
    compose,
    from_permutation,
    identity,
    is_idempotent,
)

EXHAUSTIVE_LIMIT = 4
DEFAULT_CAP = 10 ** 6


class SizeGuardError(ValueError):
    pass


@dataclass
class ClosureResult:
    degree: int
    elements: tuple
    saturated: bool = True
    generators: tuple = ()
    generator_words: Optional[dict] = None

    def __post_init__(self):
        self._set = frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return a in self._set

    def __iter__(self):
        return iter(self.elements)

    @property
    def element_set(self) -> frozenset:
        return self._set


@dataclass
class RelRankCertificate:
    base_label: str
    degree: int
    rank: int
    witness: list = field(default_factory=list)
    exhaustive_below: bool = False
    mode: str = "exhaustive"
    seed: int = 0
    checked: int = 0

    def to_json(self) -> dict:
        return {
            "base": self.base_label,
            "n": self.degree,
            "rank": self.rank,
            "witness": [[list(b) for b in w.blocks] for w in self.witness],
            "exhaustiveBelow": self.exhaustive_below,
            "mode": self.mode,
            "seed": self.seed,
            "closuresChecked": self.checked,
        }


# enumeration -----------------------------------------------------------------


def _set_partitions(points: Sequence[int]):
    """All set partitions of ``points`` via restricted growth strings."""
    m = len(points)
    if m == 0:
        yield []
        return
    rgs = [0] * m
    maxes = [0] * m
    while True:
        blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1)]
        for p, r in zip(points, rgs):
            blocks[r].append(p)
        yield blocks
        i = m - 1
        while i > 0 and rgs[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, m):
            rgs[j] = 0
            maxes[j] = maxes[i]


def enumerate_Pn(n: int, limit: int = EXHAUSTIVE_LIMIT) -> ClosureResult:
    if n > limit:
        raise SizeGuardError(f"|P_{n}| is too large to enumerate (limit n <= {limit})")
    pts = [x for x in range(1, n + 1)] + [-x for x in range(1, n + 1)]
    elements = [Partition._raw(n, canonical_blocks(b)) for b in _set_partitions(pts)]
    elements.sort()
    return ClosureResult(n, tuple(elements))


def symmetric_group(n: int) -> list:
    return sorted(from_permutation(p) for p in permutations(range(1, n + 1)))


def idempotents(n: int, limit: int = EXHAUSTIVE_LIMIT) -> list:
    return [a for a in enumerate_Pn(n, limit) if is_idempotent(a)]


def base_set(label: str, n: int) -> list:
    label = label.upper().replace("∪", "").replace(" ", "")
    if label in ("S", "S_N", "SN"):
        return symmetric_group(n)
    if label in ("E", "E_N", "EN"):
        return idempotents(n)
    if label in ("ES", "SE", "E_NS_N", "E+S"):
        return sorted(set(idempotents(n)) | set(symmetric_group(n)))
    raise ValueError(f"unknown base {label!r}; expected S, E or ES")


# closure ---------------------------------------------------------------------------


def _products_chunk(args):
    chunk, gens = args
    return [[compose(x, g) for g in gens] for x in chunk]


def _thread_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("PARMON_THREADS", "1")))
    except ValueError:
        return 1


def closure(gens: Sequence[Partition], cap: int = DEFAULT_CAP, words: bool = False,
            workers: Optional[int] = None) -> ClosureResult:
    """Breadth-first saturation of the semigroup generated by ``gens``.

    Elements are reached in order of shortest word length, so recorded words
    are shortest words over generator indices.  With several workers the
    frontier products are computed in parallel and merged in frontier order,
    giving the same result as a sequential run.
    """
    gens = list(gens)
    if not gens:
        return ClosureResult(0, (), True, (), {} if words else None)
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators have different degrees")
    seen: dict = {}
    order: list = []
    saturated = True
    for i, g in enumerate(gens):
        if g not in seen:
            if len(order) >= cap:
                saturated = False
                break
            seen[g] = (i,)
            order.append(g)
    frontier = list(order) if saturated else []
    nworkers = _thread_count(workers)
    pool = ProcessPoolExecutor(nworkers) if nworkers > 1 else None
    try:
        while frontier:
            if pool is not None and len(frontier) >= 64:
                size = -(-len(frontier) // nworkers)
                chunks = [frontier[i:i + size] for i in range(0, len(frontier), size)]
                rows = [r for part in pool.map(_products_chunk, [(c, gens) for c in chunks]) for r in part]
            else:
                rows = None
            nxt = []
            for pos, x in enumerate(frontier):
                wx = seen[x]
                for i, g in enumerate(gens):
                    y = rows[pos][i] if rows is not None else compose(x, g)
                    if y not in seen:
                        if len(order) >= cap:
                            saturated = False
                            break
                        seen[y] = wx + (i,)
                        order.append(y)
                        nxt.append(y)
                if not saturated:
                    break
            if not saturated:
                break
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return ClosureResult(n, tuple(order), saturated, tuple(gens), dict(seen) if words else None)


def evaluate_word(word: Sequence[int], gens: Sequence[Partition]) -> Partition:
    out = gens[word[0]]
    for i in word[1:]:
        out = compose(out, gens[i])
    return out


def word_length_stats(result: ClosureResult) -> dict:
    if result.generator_words is None:
        raise ValueError("closure was computed without words")
    hist: dict[int, int] = {}
    for w in result.generator_words.values():
        hist[len(w)] = hist.get(len(w), 0) + 1
    return {"max": max(hist, default=0), "histogram": dict(sorted(hist.items())),
            "count": len(result.generator_words)}


# table-backed engine for small degrees ---------------------------------------------


class CayleyTable:
    """Full multiplication table of a finite P_n, elements addressed by index."""

    def __init__(self, n: int):
        self.degree = n
        self.elements = enumerate_Pn(n).elements
        self.index = {a: i for i, a in enumerate(self.elements)}
        idx = self.index
        self.table = [[idx[compose(a, b)] for b in self.elements] for a in self.elements]

    def __len__(self):
        return len(self.elements)

    def closure(self, gens: Iterable[int], start: Optional[set] = None,
                start_gens: Sequence[int] = ()) -> set:
        """Indices of ⟨gens⟩; ``start`` may be a set already closed under ``start_gens``."""
        gens = list(dict.fromkeys(gens))
        table = self.table
        if start is None:
            seen = set(gens)
            frontier = list(gens)
            new_gens = gens
        else:
            seen = set(start)
            new_gens = [g for g in gens if g not in start_gens]
            frontier = [g for g in new_gens if g not in seen]
            seen.update(frontier)
            for x in start:
                row = table[x]
                for g in new_gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
        while frontier:
            nxt = []
            for x in frontier:
                row = table[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


_TABLES: dict[int, CayleyTable] = {}


def cayley_table(n: int) -> CayleyTable:
    if n not in _TABLES:
        _TABLES[n] = CayleyTable(n)
    return _TABLES[n]


class _DirectEngine:
    """Closure over partitions by direct composition, for degrees without a table."""

    def __init__(self, n: int):
        self.degree = n
        self.elements = enumerate_Pn(n).elements
        self.index = {a: i for i, a in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def closure(self, gens: Iterable[int], start: Optional[set] = None,
                start_gens: Sequence[int] = ()) -> set:
        els, idx = self.elements, self.index
        gens = list(dict.fromkeys(gens))
        gp = [els[g] for g in gens]
        if start is None:
            seen = set(gens)
            frontier = list(gens)
        else:
            seen = set(start)
            new_gens = [g for g in gens if g not in start_gens]
            frontier = [g for g in new_gens if g not in seen]
            seen.update(frontier)
            for x in start:
                for g in new_gens:
                    y = idx[compose(els[x], els[g])]
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
        while frontier:
            nxt = []
            for x in frontier:
                a = els[x]
                for g in gp:
                    y = idx[compose(a, g)]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def _engine(n: int):
    return cayley_table(n) if n <= 3 else _DirectEngine(n)


def _reduce_generators(engine, gens: Sequence[int]):
    """A subset of ``gens`` generating a semigroup that contains every element of ``gens``."""
    kept: list[int] = []
    closed: set = set()
    for g in gens:
        if g in closed:
            continue
        closed = engine.closure(kept + [g], start=closed if kept else None, start_gens=kept)
        kept.append(g)
    return kept, closed


def is_generating_mod(base: Iterable[Partition], extra: Iterable[Partition]) -> bool:
    base, extra = list(base), list(extra)
    gens = base + extra
    if not gens:
        return False
    n = gens[0].degree
    if n > EXHAUSTIVE_LIMIT:
        raise SizeGuardError(f"degree {n} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}")
    eng = _engine(n)
    idx = [eng.index[g] for g in gens]
    kept, _ = _reduce_generators(eng, idx)
    return len(eng.closure(kept)) == len(eng)


# relative rank ------------------------------------------------------------------


def _double_coset_reps(engine, n: int) -> list[int]:
    """One representative index per S_n × S_n orbit a ↦ σaτ."""
    from .partition import DisjointSet

    if n < 2:
        return list(range(len(engine)))
    swap = list(range(1, n + 1))
    swap[0], swap[1] = 2, 1
    cycle = list(range(2, n + 1)) + [1]
    moves = [from_permutation(swap), from_permutation(cycle)]
    els, idx = engine.elements, engine.index
    ds = DisjointSet(len(els))
    for i, a in enumerate(els):
        for m in moves:
            ds.union(i, idx[compose(m, a)])
            ds.union(i, idx[compose(a, m)])
    reps: dict[int, int] = {}
    for i in range(len(els)):
        reps.setdefault(ds.find(i), i)
    return sorted(reps.values())


def relative_rank(base_label: str, n: int, mode: str = "exhaustive", seed: int = 0,
                  max_samples: int = 2000) -> RelRankCertificate:
    """Least number of partitions that, adjoined to the base, generate P_n.

    Exhaustive mode (n <= 3) refutes every adjunction size below the returned
    rank.  Sampled mode (n = 4) refutes sizes 0 and 1 exhaustively and looks
    for a generating pair by seeded random search.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and n > 3:
        raise SizeGuardError("exhaustive relative rank is limited to n <= 3")
    if n > EXHAUSTIVE_LIMIT:
        raise SizeGuardError(f"degree {n} exceeds the limit {EXHAUSTIVE_LIMIT}")
    label = base_label.upper()
    eng = _engine(n)
    total = len(eng)
    base_idx = [eng.index[b] for b in base_set(label, n)]
    kept, base_closed = _reduce_generators(eng, base_idx)
    checked = 1
    cert = RelRankCertificate(label, n, 0, [], True, mode, seed, checked)
    if len(base_closed) == total:
        return cert

    # candidates outside ⟨base⟩ only: adjoining a member changes nothing
    if label == "S":
        candidates = [i for i in _double_coset_reps(eng, n) if i not in base_closed]
    else:
        candidates = [i for i in range(total) if i not in base_closed]

    def extend(extra):
        return eng.closure(kept + list(extra), start=base_closed, start_gens=kept)

    singles = {}
    for a in candidates:
        checked += 1
        c = extend([a])
        if len(c) == total:
            return RelRankCertificate(label, n, 1, [eng.elements[a]], True, mode, seed, checked)
        singles[a] = c

    if mode == "exhaustive":
        for ia, a in enumerate(candidates):
            ca = singles[a]
            for b in candidates[ia + 1:]:
                if b in ca or a in singles[b]:
                    continue
                checked += 1
                if len(extend([a, b])) == total:
                    return RelRankCertificate(label, n, 2, [eng.elements[a], eng.elements[b]],
                                              True, mode, seed, checked)
        # no pair works; fall back to the trivial bound: every missing element
        missing = [i for i in range(total) if i not in base_closed]
        return RelRankCertificate(label, n, len(missing), [eng.elements[i] for i in missing],
                                  False, mode, seed, checked)

    rng = random.Random(seed)
    for _ in range(max_samples):
        a, b = rng.sample(candidates, 2) if len(candidates) > 1 else (candidates[0], candidates[0])
        if b in singles[a] or a in singles[b]:
            continue
        checked += 1
        if len(extend([a, b])) == total:
            return RelRankCertificate(label, n, 2, [eng.elements[a], eng.elements[b]],
                                      True, mode, seed, checked)
    missing = [i for i in range(total) if i not in base_closed]
    return RelRankCertificate(label, n, len(missing), [eng.elements[i] for i in missing],
                              False, mode, seed, checked)


def bell(m: int) -> int:
    """Bell number via the recurrence B(k+1) = sum C(k, j) B(j)."""
    from math import comb

    b = [1]
    for k in range(m):
        b.append(sum(comb(k, j) * b[j] for j in range(k + 1)))
    return b[m]

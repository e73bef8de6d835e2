"""Lazy partitions of ℕ ∪ ℕ′ given by block oracles, and fuel-bounded products."""
from __future__ import annotations

from collections import deque
from typing import Callable, Optional

from ..partition import _point_key

Block = tuple


class HorizonExceeded(RuntimeError):
    """A product component did not close within the fuel budget."""

    def __init__(self, point: int, fuel: int, frontier: int, factor_index: Optional[int] = None):
        self.point = point
        self.fuel = fuel
        self.frontier = frontier
        self.factor_index = factor_index
        where = "" if factor_index is None else f" at factor {factor_index}"
        super().__init__(f"block of {point} not closed after {fuel} middle vertices{where} "
                         f"(frontier {frontier})")


class LazyPartition:
    """A partition known only through ``block(point)``, which returns the full finite block."""

    def __init__(self, oracle: Callable[[int], Block], descriptor: str = "lazy"):
        self._oracle = oracle
        self.descriptor = descriptor
        self._cache: dict[int, Block] = {}

    def block(self, point: int) -> Block:
        if point == 0:
            raise ValueError("point 0 is not in ℕ ∪ ℕ′")
        b = self._cache.get(point)
        if b is None:
            b = tuple(sorted(self._oracle(point), key=_point_key))
            for v in b:
                self._cache[v] = b
        return b

    __call__ = block

    def window_blocks(self, window: int) -> frozenset:
        out = set()
        for x in range(1, window + 1):
            out.add(self.block(x))
            out.add(self.block(-x))
        return frozenset(out)

    def star(self) -> "LazyPartition":
        return LazyPartition(lambda p: tuple(-v for v in self.block(-p)),
                             f"star({self.descriptor})")

    def __repr__(self):
        return f"LazyPartition<{self.descriptor}>"


def identity_lazy() -> LazyPartition:
    return LazyPartition(lambda p: (abs(p), -abs(p)), "identity")


def as_lazy(obj) -> LazyPartition:
    if isinstance(obj, LazyPartition):
        return obj
    if hasattr(obj, "as_lazy"):
        return obj.as_lazy()
    raise TypeError(f"cannot view {type(obj).__name__} as a lazy partition")


def _component(a: LazyPartition, b: LazyPartition, point: int, fuel: int,
               factor_index: Optional[int]) -> Block:
    """Trace of the product-graph component of ``point`` on the outer rows."""
    out = {point}
    middle: set[int] = set()
    queue: deque[int] = deque()

    def visit_middle(m):
        if m not in middle:
            middle.add(m)
            queue.append(m)

    # lower points of a and upper points of b are the shared middle row
    if point > 0:
        for v in a.block(point):
            if v > 0:
                out.add(v)
            else:
                visit_middle(-v)
    else:
        for v in b.block(point):
            if v < 0:
                out.add(v)
            else:
                visit_middle(v)
    explored = 0
    while queue:
        if explored >= fuel:
            raise HorizonExceeded(point, fuel, len(queue), factor_index)
        m = queue.popleft()
        explored += 1
        for v in a.block(-m):
            if v > 0:
                out.add(v)
            else:
                visit_middle(-v)
        for v in b.block(m):
            if v < 0:
                out.add(v)
            else:
                visit_middle(v)
    return tuple(out)


def compose_lazy(a, b, fuel: int = 10_000, factor_index: Optional[int] = None):
    """Product ab, answered per query; refuses with HorizonExceeded rather than guess.

    Operands that carry a structured product (see ``genpair``) are delegated to it.
    """
    hook = getattr(a, "compose_lazy_with", None)
    if hook is not None:
        result = hook(b, fuel)
        if result is not NotImplemented:
            return result
    la, lb = as_lazy(a), as_lazy(b)
    return LazyPartition(lambda p: _component(la, lb, p, fuel, factor_index),
                         f"({la.descriptor})·({lb.descriptor})")


def compose_lazy_all(factors, fuel: int = 10_000) -> LazyPartition:
    """Left fold; a refusal reports the 1-based index of the factor being absorbed."""
    acc = as_lazy(factors[0])
    for i, f in enumerate(factors[1:], start=2):
        acc = compose_lazy(acc, f, fuel, factor_index=i)
    return acc


def restrict(a, window: int):
    """The finitary partition agreeing with ``a`` on every block that meets ±1..±window.

    Blocks that stray beyond the window are kept whole; the result is a plain
    set of blocks suitable for comparison with ``FinitaryPartition.window_blocks``.
    """
    return as_lazy(a).window_blocks(window)

"""Two partitions β, γ over ℕ whose words βγβⁿγ²(β*)ⁿγ*β* recover a list of targets.

Moieties: X_n = {x : v2(x) = n} for n >= 0 and, inside the odd numbers X_0,
Y_n = {2j-1 : v2(j) = n-1} for n >= 1.  With φ(x) = 2x and ψ(x) = x-1 (on even
x) both families of bijections are order-isomorphisms, giving
σ_n(x) = 2ⁿ(2x-1) and τ_n(x) = σ_n(x) - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .finitary import FinitaryPartition
from .lazy import LazyPartition, compose_lazy_all
from .moiety import v2


def phi(x: int) -> int:
    return 2 * x


def psi(x: int) -> int:
    if x % 2:
        raise ValueError(f"psi is defined on even numbers, got {x}")
    return x - 1


def sigma(n: int, x: int) -> int:
    return (2 * x - 1) << n


def tau(n: int, x: int) -> int:
    return sigma(n, x) - 1


def sigma_inv(y: int) -> tuple[int, int]:
    """(n, x) with σ_n(x) = y, for even y."""
    n = v2(y)
    return n, ((y >> n) + 1) // 2


def tau_inv(y: int) -> tuple[int, int]:
    """(n, x) with τ_n(x) = y, for odd y."""
    return sigma_inv(y + 1)


@dataclass(frozen=True)
class GeneratorWord:
    """A word over the letters β, γ, β*, γ* (written b, g, B, G)."""

    letters: tuple

    ALPHABET = ("b", "g", "B", "G")

    def __post_init__(self):
        bad = [c for c in self.letters if c not in self.ALPHABET]
        if bad:
            raise ValueError(f"unknown letters {bad}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        names = {"b": "β", "g": "γ", "B": "β*", "G": "γ*"}
        return "".join(names[c] for c in self.letters)


def sierpinski_word(n: int) -> GeneratorWord:
    if n < 1:
        raise ValueError("index starts at 1")
    return GeneratorWord(tuple("bg" + "b" * n + "gg" + "B" * n + "GB"))


def _target(targets: Sequence[FinitaryPartition], n: int) -> FinitaryPartition:
    # past the end of the list the target is the identity
    return targets[n - 1] if n <= len(targets) else FinitaryPartition.identity()


def sierpinski_embed(targets: Sequence[FinitaryPartition]) -> tuple[LazyPartition, LazyPartition]:
    targets = list(targets)

    def beta_block(p):
        if p > 0:
            return (p, -phi(p))
        y = -p
        if y % 2:
            return (p,)
        return (y // 2, p)

    def gamma_block(p):
        if p > 0:
            if p % 2 == 0:                       # ψ pair
                return (p, -psi(p))
            n, x = tau_inv(p)                    # upper point of δ_n
            blk = _target(targets, n).block(x)
        else:
            y = -p
            if y % 2:                            # lower end of a ψ pair
                return (y + 1, p)
            n, x = sigma_inv(y)                  # lower point of δ_n
            blk = _target(targets, n).block(-x)
        return tuple(tau(n, v) if v > 0 else -sigma(n, -v) for v in blk)

    return (LazyPartition(beta_block, "sierpinski beta"),
            LazyPartition(gamma_block, "sierpinski gamma"))


def word_factors(word: GeneratorWord, beta: LazyPartition, gamma: LazyPartition) -> list:
    table = {"b": beta, "g": gamma, "B": beta.star(), "G": gamma.star()}
    return [table[c] for c in word.letters]


def evaluate_word(word: GeneratorWord, beta: LazyPartition, gamma: LazyPartition,
                  fuel: int = 10_000, window: int = 64) -> frozenset:
    """Blocks of the word's product meeting ±1..±window (full blocks)."""
    product = compose_lazy_all(word_factors(word, beta, gamma), fuel)
    return product.window_blocks(window)

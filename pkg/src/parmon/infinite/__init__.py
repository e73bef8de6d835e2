"""Exact computation over the countable ground set ℕ."""
from .finitary import FinitaryPartition, compose_finitary, random_finitary
from .genpair import (PartPartition, PiecewisePermutation, canonical_gen_pair,
                      factorize_pi, sandwich)
from .lazy import (HorizonExceeded, LazyPartition, compose_lazy, compose_lazy_all,
                   identity_lazy, restrict)
from .moiety import DyadicMoiety, ResidueMoiety, standard_moiety
from .sierpinski import GeneratorWord, evaluate_word, sierpinski_embed, sierpinski_word

__all__ = [
    "FinitaryPartition", "compose_finitary", "random_finitary",
    "PartPartition", "PiecewisePermutation", "canonical_gen_pair", "factorize_pi", "sandwich",
    "HorizonExceeded", "LazyPartition", "compose_lazy", "compose_lazy_all",
    "identity_lazy", "restrict",
    "DyadicMoiety", "ResidueMoiety", "standard_moiety",
    "GeneratorWord", "evaluate_word", "sierpinski_embed", "sierpinski_word",
]

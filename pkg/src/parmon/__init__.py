"""Exact computation in partition monoids: finite diagrams, generation
experiments, a symbolic classifier for generating pairs, and countably
infinite constructions."""
from .cardinal import ALEPH_0, ALEPH_1, ALEPH_OMEGA, Cardinal
from .partition import (EquivalenceOnGround, Partition, compose, format_json, id_quotient,
                        id_set, identity, parse, star)

__all__ = ["ALEPH_0", "ALEPH_1", "ALEPH_OMEGA", "Cardinal", "EquivalenceOnGround", "Partition",
           "compose", "format_json", "id_quotient", "id_set", "identity", "parse", "star"]
__version__ = "0.1.0"

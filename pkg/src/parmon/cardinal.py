"""Symbolic cardinals: finite k, aleph_i for finite i, and aleph_omega.

This is the smallest model in which every hypothesis of the generating-pair
classification can be written down: countable, uncountable regular and
singular grounds, plus successors below aleph_omega.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Union

_FINITE, _ALEPH, _OMEGA = 0, 1, 2


class CardinalError(ValueError):
    """Raised for text that is not a cardinal, or results outside the model."""


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    kind: int
    index: int = 0

    def __post_init__(self):
        if self.kind not in (_FINITE, _ALEPH, _OMEGA) or self.index < 0:
            raise CardinalError(f"bad cardinal ({self.kind}, {self.index})")

    @classmethod
    def finite(cls, k: int) -> "Cardinal":
        return cls(_FINITE, int(k))

    @classmethod
    def aleph(cls, i: int) -> "Cardinal":
        return cls(_ALEPH, int(i))

    @classmethod
    def aleph_omega(cls) -> "Cardinal":
        return cls(_OMEGA, 0)

    @classmethod
    def parse(cls, text: Union[str, int, "Cardinal"]) -> "Cardinal":
        """Accepts "7", "aleph0", "aleph3", "alephOmega" (case-insensitive)."""
        if isinstance(text, Cardinal):
            return text
        if isinstance(text, bool):
            raise CardinalError(f"not a cardinal: {text!r}")
        if isinstance(text, int):
            return cls.finite(text)
        s = str(text).strip()
        if re.fullmatch(r"\d+", s):
            return cls.finite(int(s))
        m = re.fullmatch(r"(?i)aleph_?(\d+|omega|ω)", s)
        if m is None:
            raise CardinalError(f"not a cardinal: {text!r}")
        idx = m.group(1)
        if idx.isdigit():
            return cls.aleph(int(idx))
        return cls.aleph_omega()

    # order ---------------------------------------------------------------

    def _key(self):
        return (self.kind, self.index)

    def __lt__(self, other):
        other = coerce(other)
        return self._key() < other._key()

    def __eq__(self, other):
        if isinstance(other, (int, str)) and not isinstance(other, bool):
            try:
                other = coerce(other)
            except CardinalError:
                return NotImplemented
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = coerce(other)
        if self.kind == _FINITE and other.kind == _FINITE:
            return Cardinal.finite(self.index + other.index)
        return max(self, other)

    __radd__ = __add__

    def successor(self) -> "Cardinal":
        if self.kind == _OMEGA:
            raise CardinalError("successor of aleph_omega is not representable")
        return Cardinal(self.kind, self.index + 1)

    # classification ------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind != _FINITE

    @property
    def is_countable(self) -> bool:
        return self.kind == _FINITE or (self.kind == _ALEPH and self.index == 0)

    @property
    def is_regular(self) -> bool:
        if self.kind == _FINITE:
            return self.index <= 2
        return self.kind == _ALEPH

    @property
    def is_singular(self) -> bool:
        return not self.is_regular

    def __int__(self):
        if self.kind != _FINITE:
            raise CardinalError(f"{self} is infinite")
        return self.index

    def __str__(self):
        if self.kind == _FINITE:
            return str(self.index)
        if self.kind == _ALEPH:
            return f"aleph{self.index}"
        return "alephOmega"

    def __repr__(self):
        return f"Cardinal({self})"


CardinalLike = Union[Cardinal, int, str]

ALEPH_0 = Cardinal.aleph(0)
ALEPH_1 = Cardinal.aleph(1)
ALEPH_OMEGA = Cardinal.aleph_omega()
ZERO = Cardinal.finite(0)


def coerce(x: CardinalLike) -> Cardinal:
    return Cardinal.parse(x)


def cmp(a: CardinalLike, b: CardinalLike) -> int:
    """Three-way comparison: -1, 0 or 1."""
    a, b = coerce(a), coerce(b)
    if a == b:
        return 0
    return -1 if a < b else 1


def add(a: CardinalLike, b: CardinalLike) -> Cardinal:
    return coerce(a) + coerce(b)


def successor(a: CardinalLike) -> Cardinal:
    return coerce(a).successor()


def is_regular(a: CardinalLike) -> bool:
    return coerce(a).is_regular


def is_singular(a: CardinalLike) -> bool:
    return coerce(a).is_singular

"""Three-valued sign algebra: the {+, 0, -} atoms and their arithmetic.

Everything in this module is pure and total over its inputs; the rest of
the package is built on these operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator


class Sign(enum.IntEnum):
    """Qualitative sign of a quantity or one of its time derivatives.

    The integer value is the arithmetic sign, so negation and
    multiplication are ordinary integer arithmetic.  Display order is
    +, 0, - (see :attr:`rank`), matching every table this package prints.
    """

    PLUS = 1
    ZERO = 0
    MINUS = -1

    @property
    def symbol(self) -> str:
        return _SYMBOL[self]

    @property
    def rank(self) -> int:
        """Position in display order: PLUS=0, ZERO=1, MINUS=2."""
        return 1 - int(self)

    @classmethod
    def from_symbol(cls, ch: str) -> "Sign":
        try:
            return _BY_SYMBOL[ch]
        except KeyError:
            raise ValueError(f"not a sign symbol: {ch!r}") from None

    def __str__(self) -> str:
        return self.symbol


_SYMBOL = {Sign.PLUS: "+", Sign.ZERO: "0", Sign.MINUS: "-"}
_BY_SYMBOL = {"+": Sign.PLUS, "0": Sign.ZERO, "-": Sign.MINUS}

#: All signs in canonical display order.
SIGNS: tuple[Sign, Sign, Sign] = (Sign.PLUS, Sign.ZERO, Sign.MINUS)

_PLUS_BIT, _ZERO_BIT, _MINUS_BIT = 1, 2, 4
_BIT = {Sign.PLUS: _PLUS_BIT, Sign.ZERO: _ZERO_BIT, Sign.MINUS: _MINUS_BIT}
_FULL_MASK = _PLUS_BIT | _ZERO_BIT | _MINUS_BIT


@dataclass(frozen=True)
class SignSet:
    """Nonempty subset of {+, 0, -} as a 3-bit mask.

    The full set means "unrestricted" and renders as ``*``; any other
    subset renders as its member symbols in display order, e.g. ``+0``.
    """

    mask: int

    def __post_init__(self):
        if not 0 < self.mask <= _FULL_MASK:
            raise ValueError(f"sign set must be a nonempty subset, got mask {self.mask}")

    @classmethod
    def of(cls, *signs: Sign) -> "SignSet":
        mask = 0
        for s in signs:
            mask |= _BIT[s]
        return cls(mask)

    @classmethod
    def full(cls) -> "SignSet":
        return cls(_FULL_MASK)

    @classmethod
    def parse(cls, text: str) -> "SignSet":
        """Inverse of ``str``: ``*`` or a string of sign symbols."""
        if text == "*":
            return cls.full()
        return cls.of(*(Sign.from_symbol(ch) for ch in text))

    @property
    def is_full(self) -> bool:
        return self.mask == _FULL_MASK

    def __contains__(self, sign: Sign) -> bool:
        return bool(self.mask & _BIT[sign])

    def __iter__(self) -> Iterator[Sign]:
        return (s for s in SIGNS if s in self)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __str__(self) -> str:
        if self.is_full:
            return "*"
        return "".join(s.symbol for s in self)


def qneg(a: Sign) -> Sign:
    """Sign of ``-a``; an involution fixing ZERO."""
    return Sign(-int(a))


def qmul(a: Sign, b: Sign) -> Sign:
    """Sign of the product ``a * b``; ZERO is absorbing."""
    return Sign(int(a) * int(b))


def qadd(a: Sign, b: Sign) -> SignSet:
    """Candidate signs of the sum ``a + b``.

    A sum of opposite nonzero signs cannot be resolved qualitatively,
    so that case yields the full set.
    """
    if a is Sign.ZERO:
        return SignSet.of(b)
    if b is Sign.ZERO or a is b:
        return SignSet.of(a)
    return SignSet.full()


def sq(a: Sign) -> Sign:
    """Sign of ``a**2``: PLUS unless ``a`` is ZERO."""
    return Sign.ZERO if a is Sign.ZERO else Sign.PLUS

"""Standard words for torus knots and two-bridge knots in S^3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .standard import PSI_S3
from .words import Letter, Word, compose, reduce_word

__all__ = [
    "ConwayParams",
    "torus_knot_word",
    "torus_kernel_exponents",
    "even_continued_fraction",
    "two_bridge_word",
    "two_bridge_word_from_fraction",
]


def _check_torus(k, h):
    if not 0 < abs(k) < h:
        raise DomainError(f"torus knot t({k},{h}) needs 0 < |k| < h")
    if gcd(k, h) != 1:
        raise DomainError(f"torus knot t({k},{h}) needs gcd(k, h) = 1")


def torus_kernel_exponents(k: int, h: int) -> list[int]:
    """Exponents of ``tm`` in the ``h`` factors ``tm^e tl^-1``.

    ``e_i = floor((i-1) k / h) - floor(i k / h)``; Python's ``//`` floors
    toward minus infinity, which is what negative ``k`` requires.
    """
    _check_torus(k, h)
    return [((i - 1) * k) // h - (i * k) // h for i in range(1, h + 1)]


def torus_knot_word(k: int, h: int) -> Word:
    """Reduced standard word of the torus knot ``t(k, h)``.

    >>> str(torus_knot_word(2, 3))
    'tl^-1 tm^-1 tl^-1 tm^-1 tl^-1 tb ta tb'
    """
    syllables = []
    for e in torus_kernel_exponents(k, h):
        if e:
            syllables.append((Letter.TM, e))
        syllables.append((Letter.TL, -1))
    return compose(Word(tuple(syllables)), PSI_S3)


@dataclass(frozen=True)
class ConwayParams:
    """Half-parameters ``((a_1, b_1), ..., (a_n, b_n))`` of an even Conway form."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for a, b in self.pairs:
            if a == 0 or b == 0:
                raise DomainError(f"Conway parameters must be nonzero, got ({a}, {b})")

    @classmethod
    def from_doubled(cls, values) -> "ConwayParams":
        values = list(values)
        if len(values) % 2 or any(v % 2 for v in values):
            raise DomainError(f"need an even number of even parameters, got {values}")
        return cls(tuple((values[i] // 2, values[i + 1] // 2) for i in range(0, len(values), 2)))

    def doubled(self) -> list[int]:
        return [2 * v for pair in self.pairs for v in pair]

    def fraction(self) -> Fraction:
        """Value of ``2a_1 + 1/(2b_1 + 1/(2a_2 + ... + 1/(2b_n)))``."""
        values = self.doubled()
        if not values:
            raise DomainError("empty parameter list has no fraction")
        result = Fraction(values[-1])
        for v in reversed(values[:-1]):
            result = v + 1 / result
        return result


def _check_two_bridge(a, b):
    if a <= 0 or a % 2 == 0:
        raise DomainError(f"b({a}/{b}): a must be odd and positive")
    if b % 2 or not 0 < abs(b) < a:
        raise DomainError(f"b({a}/{b}): b must be even with 0 < |b| < a")
    if gcd(a, b) != 1:
        raise DomainError(f"b({a}/{b}): gcd(a, b) != 1")


def even_continued_fraction(a: int, b: int) -> ConwayParams:
    """Continued fraction of ``a/b`` with all partial quotients even.

    Each quotient is the unique even integer leaving a remainder strictly
    smaller than the divisor in absolute value.  Numerators alternate odd and
    even, so the expansion stops after an even number of steps.
    """
    _check_two_bridge(a, b)
    quotients = []
    num, den = a, b
    while den:
        c = _even_quotient(num, den)
        quotients.append(c)
        num, den = den, num - c * den
    return ConwayParams.from_doubled(quotients)


def _even_quotient(num, den):
    floor = num // den
    # num/den lies in (floor, floor + 1], and the admissible open interval
    # (num/den - 1, num/den + 1) meets exactly one even integer
    for c in (floor - 1, floor, floor + 1, floor + 2):
        if c % 2 == 0 and abs(num - c * den) < abs(den):
            return c
    raise AssertionError(f"no even quotient for {num}/{den}")


def two_bridge_word(params: ConwayParams) -> Word:
    """``tb ta tb  tm^-b_n te^a_n ... tm^-b_1 te^a_1`` (indices descending)."""
    syllables = list(PSI_S3.syllables)
    for a, b in reversed(params.pairs):
        syllables.append((Letter.TM, -b))
        syllables.append((Letter.TE, a))
    return reduce_word(syllables)


def two_bridge_word_from_fraction(a: int, b: int) -> Word:
    return two_bridge_word(even_continued_fraction(a, b))

"""The epimorphism from the pure mapping class group onto SL(2, Z).

``omega`` sends ``ta`` to ``[[1, 0], [1, 1]]`` and both ``tb`` and ``tc`` to
``[[1, -1], [0, 1]]``.  A word written ``[[q, s], [p, r]]`` under ``omega``
represents a knot in the lens space ``L(|p|, |q|)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DomainError, NotPureError, VerificationError
from .words import Letter, Word, expand, reduce_word

__all__ = ["SL2Matrix", "LensSpace", "omega", "is_kernel", "lens_of", "require_pure"]


@dataclass(frozen=True)
class SL2Matrix:
    """Integer matrix ``[[a, b], [c, d]]`` with ``ad - bc = 1``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise VerificationError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def identity(cls) -> "SL2Matrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "SL2Matrix":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __matmul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "SL2Matrix":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = SL2Matrix.identity()
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def first_column(self) -> tuple[int, int]:
        return self.a, self.c

    def to_text(self) -> str:
        """Row-major ``"a b / c d"``; read as ``"q s / p r"``."""
        return f"{self.a} {self.b} / {self.c} {self.d}"

    def __str__(self) -> str:
        return str(self.rows())


@dataclass(frozen=True)
class LensSpace:
    """``L(p, q)`` with ``0 <= q < p`` for ``p > 1``; ``L(1,0)`` is S^3, ``L(0,1)`` is S^1 x S^2."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0 or q < 0:
            raise DomainError(f"L({p},{q}): parameters must be nonnegative")
        if p == 0 and q != 1 or p == 1 and q != 0 or p > 1 and not q < p:
            raise DomainError(f"L({p},{q}) is not in normal form")
        if gcd(p, q) != 1:
            raise DomainError(f"L({p},{q}): gcd(p, q) != 1")

    @property
    def name(self) -> str:
        if self.p == 1:
            return "S^3"
        if self.p == 0:
            return "S^1 x S^2"
        return f"L({self.p},{self.q})"

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


_TA = SL2Matrix(1, 0, 1, 1)
_TB = SL2Matrix(1, -1, 0, 1)
_BASIC = {Letter.TA: _TA, Letter.TB: _TB, Letter.TC: _TB}


def _mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h


def _tuple_power(m, n):
    if n < 0:
        a, b, c, d = m
        m, n = (d, -b, -c, a), -n
    result = (1, 0, 0, 1)
    while n:
        if n & 1:
            result = _mul(result, m)
        n >>= 1
        if n:
            m = _mul(m, m)
    return result


@lru_cache(maxsize=None)
def _letter_matrix(letter: Letter) -> SL2Matrix:
    if letter in _BASIC:
        return _BASIC[letter]
    result = SL2Matrix.identity()
    for sub, e in expand(Word.letter(letter)).syllables:
        result = result @ _BASIC[sub] ** e
    return result


def _syllable(letter: Letter, e: int) -> tuple[int, int, int, int]:
    # powers of the two elementary matrices have closed forms
    if letter is Letter.TA:
        return 1, 0, e, 1
    if letter is Letter.TB or letter is Letter.TC:
        return 1, -e, 0, 1
    m = _letter_matrix(letter)
    return _tuple_power((m.a, m.b, m.c, m.d), e)


def require_pure(w: Word) -> Word:
    """Return the reduced word, raising if a rho factor survives normalisation."""
    reduced = reduce_word(w)
    if any(letter is Letter.RHO for letter, _ in reduced.syllables):
        raise NotPureError()
    return reduced


def omega(w: Word) -> SL2Matrix:
    """Matrix image of a pure word; factors multiply left to right.

    >>> omega(Word.of((Letter.TB, 1), (Letter.TA, 1), (Letter.TB, 1))).rows()
    [[0, -1], [1, 0]]
    """
    result = (1, 0, 0, 1)
    for letter, e in require_pure(w).syllables:
        result = _mul(result, _syllable(letter, e))
    return SL2Matrix(*result)


def is_kernel(w: Word) -> bool:
    return omega(w).is_identity


def lens_space_from_column(q: int, p: int) -> LensSpace:
    p, q = abs(p), abs(q)
    if p == 0:
        return LensSpace(0, 1)
    if p == 1:
        return LensSpace(1, 0)
    return LensSpace(p, q % p)


def lens_of(w: Word) -> LensSpace:
    """Ambient lens space of the knot represented by ``w``."""
    q, p = omega(w).first_column
    return lens_space_from_column(q, p)

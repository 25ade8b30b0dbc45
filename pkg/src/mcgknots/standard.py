"""Standard words for trivial knots in lens spaces and standard decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .omega import is_kernel, omega, require_pure
from .words import Letter, Word, compose, invert, parse_word, reduce_word

__all__ = [
    "CFExpansion",
    "continued_fraction",
    "psi_standard",
    "psi_standard_unreduced",
    "adjust_rs",
    "standard_decompose",
    "PSI_S3",
]

PSI_S3 = parse_word("tb ta tb")


@dataclass(frozen=True)
class CFExpansion:
    """Coefficients ``[a_1, ..., a_m]`` with ``p/q = a_1 + 1/(a_2 + ...)``."""

    coefficients: tuple[int, ...]
    remainders: tuple[int, ...]

    def value(self) -> Fraction:
        result = Fraction(self.coefficients[-1])
        for a in reversed(self.coefficients[:-1]):
            result = a + 1 / result
        return result

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


def continued_fraction(p: int, q: int) -> CFExpansion:
    """Euclidean algorithm with ``r_0 = p``, ``r_1 = q``.

    >>> continued_fraction(7, 5).coefficients
    (1, 2, 2)
    """
    if not 0 < q < p or gcd(p, q) != 1:
        raise DomainError(f"continued_fraction needs 0 < q < p coprime, got ({p}, {q})")
    coefficients = []
    remainders = [p, q]
    a, b = p, q
    while b:
        quotient, r = divmod(a, b)
        coefficients.append(quotient)
        remainders.append(r)
        a, b = b, r
    # remainders run r_0 > r_1 > ... > r_m = 1 > r_{m+1} = 0
    return CFExpansion(tuple(coefficients), tuple(remainders))


def _trivial_pair(p, q):
    return (p, q) in ((1, 0), (0, 1))


def psi_standard_unreduced(p: int, q: int) -> Word:
    """The standard word exactly as written, before free reduction."""
    if (p, q) == (1, 0):
        return PSI_S3
    if (p, q) == (0, 1):
        return Word()
    coefficients = continued_fraction(p, q).coefficients
    syllables = []
    for i, a in enumerate(coefficients):
        syllables.append((Letter.TA, a) if i % 2 == 0 else (Letter.TB, -a))
    if len(coefficients) % 2 == 0:
        syllables.extend(PSI_S3.syllables)
    return Word(tuple(syllables))


def psi_standard(p: int, q: int) -> Word:
    """Reduced word representing the trivial knot in ``L(p, q)``.

    The first column of its matrix is ``(q, p)``; this is checked.
    """
    if not _trivial_pair(p, q) and not (0 < q < p and gcd(p, q) == 1):
        raise DomainError(f"no standard word for L({p},{q})")
    w = reduce_word(psi_standard_unreduced(p, q))
    if omega(w).first_column != (q, p):
        raise AssertionError(f"first column of omega(psi_{p},{q}) is not ({q}, {p})")
    return w


def adjust_rs(w: Word, r: int, s: int) -> Word:
    """Right-multiply by ``tb^-c`` to move ``omega(w)`` to ``[[q, s], [p, r]]``.

    ``tb`` extends over the handlebody pair, so the knot is unchanged.
    """
    m = omega(w)
    q, s_bar, p, r_bar = m.a, m.b, m.c, m.d
    if q * r - p * s != 1:
        raise DomainError(f"determinant mismatch: {q}*{r} - {p}*{s} != 1")
    # q (r - r_bar) = p (s - s_bar) with gcd(p, q) = 1
    if p != 0:
        c, rem = divmod(r - r_bar, p)
    else:
        c, rem = divmod(s - s_bar, q)
    if rem or r != r_bar + c * p or s != s_bar + c * q:
        raise DomainError(f"unreachable (r, s) = ({r}, {s}) from {m.rows()}")
    return compose(w, Word.letter(Letter.TB, -c))


def standard_decompose(w: Word, p: int, q: int) -> tuple[Word, Word]:
    """Kernel words ``(left, right)`` with ``w ~ left * psi = psi * right``.

    ``w`` is first adjusted so that its matrix equals that of ``psi_{p,q}``;
    the adjustment exponent is forced by the target, so the result is unique.
    """
    w = require_pure(w)
    psi = psi_standard(p, q)
    target = omega(psi)
    if omega(w).first_column != target.first_column:
        raise DomainError(
            f"wrong lens space: first column {omega(w).first_column} != {target.first_column}"
        )
    w = adjust_rs(w, target.d, target.b)
    psi_inv = invert(psi)
    left = compose(w, psi_inv)
    right = compose(psi_inv, w)
    if not (is_kernel(left) and is_kernel(right)):
        raise AssertionError("standard decomposition produced a non-kernel factor")
    return left, right

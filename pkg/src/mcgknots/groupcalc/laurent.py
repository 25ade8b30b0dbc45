"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import VerificationError

__all__ = ["LaurentPolynomial"]


class LaurentPolynomial:
    """Sparse ``{exponent: coefficient}`` with no zero coefficients stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self.terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], shift: int = 0) -> "LaurentPolynomial":
        """``coefficients[i]`` is the coefficient of ``t^(i + shift)``."""
        return cls((i + shift, c) for i, c in enumerate(coefficients))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def max_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def coefficients(self) -> list[int]:
        """Dense coefficients from ``min_degree`` upward."""
        if not self.terms:
            return []
        lo = self.min_degree
        return [self.terms.get(lo + i, 0) for i in range(self.span + 1)]

    def leading_coefficient(self) -> int:
        return self.terms[self.max_degree] if self.terms else 0

    def __add__(self, other):
        other = _coerce(other)
        return LaurentPolynomial(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + -_coerce(other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPolynomial({e * n: 1 if n % 2 == 0 else c})
        result = LaurentPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self.terms.items()})

    def __call__(self, value):
        """Evaluate; negative exponents need an invertible ``value``."""
        total = 0
        for e, c in self.terms.items():
            total += c * (value ** e if e >= 0 else Fraction(1, value ** -e))
        return total

    def divmod_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Quotient in ``Z[t, t^-1]``; raises if the division is not exact."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial()
        num = self.coefficients()[::-1]  # highest degree first
        den = divisor.coefficients()[::-1]
        lead = den[0]
        quotient = []
        rem = list(num)
        for i in range(len(num) - len(den) + 1):
            c = rem[i]
            if c % lead:
                raise VerificationError(f"division of {self} by {divisor} is not exact")
            q = c // lead
            quotient.append(q)
            if q:
                for j, d in enumerate(den):
                    rem[i + j] -= q * d
        if any(rem) or len(num) < len(den):
            raise VerificationError(f"division of {self} by {divisor} leaves a remainder")
        shift = self.min_degree - divisor.min_degree
        return LaurentPolynomial.from_coefficients(quotient[::-1], shift)

    def __floordiv__(self, other):
        return self.divmod_exact(_coerce(other))

    def normalized(self) -> "LaurentPolynomial":
        """Representative up to ``+-t^j``: lowest degree 0, positive leading coefficient."""
        if self.is_zero():
            return self
        p = self.shift(-self.min_degree)
        return -p if p.leading_coefficient() < 0 else p

    def equal_up_to_units(self, other: "LaurentPolynomial") -> bool:
        return self.normalized() == _coerce(other).normalized()

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def to_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise TypeError(f"cannot use {x!r} as a Laurent polynomial")

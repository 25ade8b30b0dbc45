"""Fox free differential calculus and Alexander polynomials."""

from __future__ import annotations

from math import gcd
from typing import Mapping, Sequence

from ..errors import DomainError
from ..freegroup import FreeWord
from .laurent import LaurentPolynomial
from .presentations import Presentation

__all__ = [
    "GroupRingElement",
    "fox_derivative",
    "abelianize",
    "alexander_poly",
    "torus_alexander",
    "infer_weights",
]


class GroupRingElement:
    """Finite integer combination of free-group elements."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FreeWord, int] = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, w: FreeWord, c: int = 1) -> "GroupRingElement":
        return cls({w: c})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + -other

    def left_multiply(self, u: FreeWord) -> "GroupRingElement":
        out: dict[FreeWord, int] = {}
        for w, c in self.terms.items():
            key = u * w
            out[key] = out.get(key, 0) + c
        return GroupRingElement(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda item: (len(item[0]), str(item[0]))):
            body = str(w) or "1"
            parts.append(f"{c}*{body}" if c != 1 else body)
        return " + ".join(parts)

    def __repr__(self):
        return f"GroupRingElement({str(self)!r})"


def fox_derivative(w: FreeWord, g: str) -> GroupRingElement:
    """``d/dg``: ``d(uv) = du + u dv``, ``dg = 1``, ``d(g^-1) = -g^-1``."""
    out: dict[FreeWord, int] = {}
    prefix: list[tuple[str, int]] = []
    for h, e in w.letters:
        if h == g:
            if e == 1:
                key = FreeWord(prefix, reduced=True)
                out[key] = out.get(key, 0) + 1
            else:
                key = FreeWord(prefix + [(h, -1)], reduced=True)
                out[key] = out.get(key, 0) - 1
        prefix.append((h, e))
    return GroupRingElement(out)


def abelianize(x: GroupRingElement, weights: Mapping[str, int]) -> LaurentPolynomial:
    """Image in ``Z[t, t^-1]`` under ``g -> t^weights[g]``."""
    return LaurentPolynomial(
        (sum(weights[h] * e for h, e in w.letters), c) for w, c in x.terms.items()
    )


def _t_power_minus_one(w: int) -> LaurentPolynomial:
    return LaurentPolynomial({w: 1, 0: -1})


def infer_weights(p: Presentation) -> tuple[int, ...]:
    """Primitive weights killing the single relator's exponent sums."""
    if len(p.generators) != 2 or len(p.relators) != 1:
        raise DomainError("weights can only be inferred for 2 generators and 1 relator")
    e1, e2 = (p.relators[0].exponent_sum(g) for g in p.generators)
    d = gcd(e1, e2)
    if d == 0:
        raise DomainError("relator has zero abelianization; weights undetermined")
    w1, w2 = -e2 // d, e1 // d
    if w2 < 0 or (w2 == 0 and w1 < 0):
        w1, w2 = -w1, -w2
    return w1, w2


def alexander_poly(p: Presentation, weights: Sequence[int]) -> LaurentPolynomial:
    """Alexander polynomial of a two-generator one-relator knot group.

    With ``phi`` the abelianisation ``g_i -> t^{w_i}``,
    ``Delta * (phi(g_2) - 1) = phi(dr/dg_1) * (t - 1)`` up to units; the
    generator with nonzero weight plays the role of ``g_2``.
    """
    if len(p.generators) == 1 and not p.relators:
        return LaurentPolynomial.constant(1)
    if len(p.generators) != 2 or len(p.relators) != 1:
        raise DomainError("alexander_poly needs a presentation with 2 generators and 1 relator")
    weights = tuple(weights)
    if len(weights) != 2:
        raise DomainError(f"need two weights, got {weights}")
    (g1, g2), (r,) = p.generators, p.relators
    table = dict(zip(p.generators, weights))
    if sum(table[g] * r.exponent_sum(g) for g in p.generators) != 0:
        raise DomainError(f"weights inconsistent: relator {r} does not abelianise to zero")
    if gcd(*weights) != 1:
        raise DomainError(f"weights {weights} do not generate Z")
    if table[g2] == 0:
        g1, g2 = g2, g1
    numerator = abelianize(fox_derivative(r, g1), table) * _t_power_minus_one(1)
    delta = numerator // _t_power_minus_one(table[g2])
    return delta.normalized()


def torus_alexander(k: int, h: int) -> LaurentPolynomial:
    """``(t^{kh} - 1)(t - 1) / ((t^k - 1)(t^h - 1))`` by exact division."""
    if k < 2 or h < 2 or gcd(k, h) != 1:
        raise DomainError(f"torus_alexander needs coprime k, h >= 2, got ({k}, {h})")
    num = _t_power_minus_one(k * h) * _t_power_minus_one(1)
    den = _t_power_minus_one(k) * _t_power_minus_one(h)
    return (num // den).normalized()

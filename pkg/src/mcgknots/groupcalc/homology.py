"""First homology of cyclic branched covers, two independent ways.

``branched_cover_homology`` abelianises the cyclic presentation and reads
off Smith invariant factors.  ``fox_formula_order`` uses the classical
order formula ``|H_1| = |Res(Delta(t), 1 + t + ... + t^(n-1))|``.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DomainError
from .laurent import LaurentPolynomial
from .presentations import cyclic_presentation
from .smith import bareiss_determinant, cokernel

__all__ = [
    "INFINITE",
    "resultant",
    "sylvester_matrix",
    "fox_formula_order",
    "branched_cover_homology",
    "group_order",
]

INFINITE = "infinite"


def _trim(coefficients: Sequence[int]) -> list[int]:
    """Dense coefficients, highest degree first, leading zeros removed."""
    out = list(coefficients)
    while out and out[0] == 0:
        out.pop(0)
    return out


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Coefficients are given highest degree first."""
    f, g = _trim(f), _trim(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + f + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + g + [0] * (size - n - 1 - i))
    return rows


def resultant(f: Sequence[int], g: Sequence[int]) -> int:
    """Exact resultant of two integer polynomials (highest degree first)."""
    f, g = _trim(f), _trim(g)
    if not f or not g:
        return 0
    return bareiss_determinant(sylvester_matrix(f, g))


def fox_formula_order(delta: LaurentPolynomial, n: int) -> int | str:
    """``|prod_{i=1}^{n-1} Delta(zeta_n^i)|``, or ``"infinite"`` when zero."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if abs(delta(1)) != 1:
        raise DomainError(f"Delta(1) = {delta(1)}, expected +-1")
    # shifting by t^j multiplies the resultant by a unit, since Phi(0) = 1
    f = delta.shift(-delta.min_degree).coefficients()[::-1]
    phi = [1] * n
    value = abs(resultant(f, phi))
    return value if value else INFINITE


def group_order(factors: Sequence[int]) -> int | str:
    """Order of ``Z/d_1 + ... + Z/d_k``, where ``0`` entries stand for ``Z``."""
    order = 1
    for d in factors:
        if d == 0:
            return INFINITE
        order *= d
    return order


def branched_cover_homology(k: int, c: int, n: int) -> list[int]:
    """Nontrivial invariant factors of ``H_1`` of the ``n``-fold cyclic branched
    cover of ``t(k, ck+2)``; ``0`` marks a free summand, ``[]`` the trivial group.

    >>> branched_cover_homology(3, 1, 2)
    []
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    return cokernel(cyclic_presentation(k, c, n).relation_matrix())

"""Group presentations for torus knots ``t(k, ck+2)`` and their cyclic covers.

For ``k > 1`` odd and ``c > 0`` set ``r = (k - 1) / 2``.  The knot group is
one-relator on ``alpha, gamma``; the branched ``n``-fold cover has the
cyclic presentation ``G_n(w)`` whose relators are the index shifts of a
single word ``w`` in ``x_0, ..., x_{n-1}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import DomainError
from ..freegroup import FreeWord, parse_free_word

__all__ = [
    "Presentation",
    "CyclicPresentation",
    "torus_group_presentation",
    "substituted_torus_presentation",
    "cyclic_word_indices",
    "cyclic_word",
    "cyclic_presentation",
    "shift_word",
    "find_shift",
    "cyclic_generator",
]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        known = set(self.generators)
        for r in self.relators:
            extra = r.generators() - known
            if extra:
                raise DomainError(f"relator {r} uses unknown generators {sorted(extra)}")

    def abelianization_matrix(self) -> list[list[int]]:
        """Rows are relators, columns generators, entries exponent sums."""
        return [[r.exponent_sum(g) for g in self.generators] for r in self.relators]

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "relators": [str(r) for r in self.relators]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Presentation":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            generators = tuple(data["generators"])
            relators = tuple(parse_free_word(text, generators) for text in data["relators"])
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed presentation document: {exc}") from exc
        return cls(generators, relators)

    def __str__(self) -> str:
        return f"< {', '.join(self.generators)} | {', '.join(map(str, self.relators))} >"


def _check_kc(k, c):
    if k <= 1 or k % 2 == 0:
        raise DomainError(f"k must be odd and > 1, got {k}")
    if c <= 0:
        raise DomainError(f"c must be positive, got {c}")


def torus_group_presentation(k: int, c: int) -> Presentation:
    """``< alpha, gamma | (g^-1 a^(cr+1) g^-1 a^(-c(r+1)-1))^r g^-1 a^(cr+1) >``."""
    _check_kc(k, c)
    r = (k - 1) // 2
    a, g = "alpha", "gamma"
    block = [(g, -1), (a, c * r + 1), (g, -1), (a, -c * (r + 1) - 1)]
    relator = FreeWord.from_syllables(block * r + [(g, -1), (a, c * r + 1)])
    return Presentation((a, g), (relator,))


def substituted_torus_presentation(k: int, c: int) -> Presentation:
    """The same group after ``alpha = x gamma^k``, so ``x`` has weight zero."""
    _check_kc(k, c)
    x = FreeWord.gen("x")
    g = FreeWord.gen("gamma")
    alpha = x * g ** k
    r = (k - 1) // 2
    relator_word = ((g.inverse() * alpha ** (c * r + 1) * g.inverse() * alpha ** (-c * (r + 1) - 1)) ** r
                    * g.inverse() * alpha ** (c * r + 1))
    return Presentation(("x", "gamma"), (relator_word,))


def cyclic_generator(i: int) -> str:
    return f"x{i}"


def cyclic_word_indices(k: int, c: int) -> list[tuple[int, int]]:
    """Unreduced ``(subscript, sign)`` letters of ``w``, subscripts not reduced mod n."""
    _check_kc(k, c)
    h = c * k + 2
    out = []
    for i in range((k - 3) // 2 + 1):
        for j in range(c * (k - 1) // 2 + 1):
            out.append((1 - i * h + j * k, 1))
        for l in range(c * (k + 1) // 2 + 1):
            out.append((c * k * (k - 1) // 2 - i * h - l * k, -1))
    for m in range(c * (k - 1) // 2 + 1):
        out.append((1 - (k - 1) * h // 2 + m * k, 1))
    return out


def cyclic_word(k: int, c: int, n: int) -> FreeWord:
    """``w`` with subscripts taken mod ``n``, freely reduced."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return FreeWord((cyclic_generator(i % n), e) for i, e in cyclic_word_indices(k, c))


def _index(name: str) -> int:
    return int(name[1:])


def shift_word(w: FreeWord, s: int, n: int) -> FreeWord:
    """Apply ``x_i -> x_{i+s}`` (indices mod n)."""
    return FreeWord(((cyclic_generator((_index(g) + s) % n), e) for g, e in w.letters))


def find_shift(w: FreeWord, target: FreeWord, n: int) -> int | None:
    """The ``s`` in ``[0, n)`` with ``shift_word(w, s, n) == target``, or None."""
    if len(w) != len(target):
        return None
    if not w:
        return 0
    # a shift moves the first letter's subscript by s, so only one s can work
    s = (_index(target.letters[0][0]) - _index(w.letters[0][0])) % n
    return s if shift_word(w, s, n) == target else None


@dataclass(frozen=True)
class CyclicPresentation:
    n: int
    w: FreeWord
    generators: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "generators", tuple(cyclic_generator(i) for i in range(self.n)))
        bad = self.w.generators() - set(self.generators)
        if bad:
            raise DomainError(f"subscripts of {sorted(bad)} are not reduced mod {self.n}")

    def relators(self) -> list[FreeWord]:
        return [shift_word(self.w, i, self.n) for i in range(self.n)]

    def presentation(self) -> Presentation:
        return Presentation(self.generators, tuple(self.relators()))

    def relation_matrix(self) -> list[list[int]]:
        """Circulant: row ``i`` is row ``0`` rotated right by ``i``."""
        row0 = [self.w.exponent_sum(g) for g in self.generators]
        return [row0[-i:] + row0[:-i] if i else list(row0) for i in range(self.n)]

    def to_json(self) -> dict:
        return {"n": self.n, "word": str(self.w), **self.presentation().to_json()}


def cyclic_presentation(k: int, c: int, n: int) -> CyclicPresentation:
    return CyclicPresentation(n, cyclic_word(k, c, n))

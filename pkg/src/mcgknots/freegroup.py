"""Free groups on named generators, their words, and their automorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .words import format_tokens, parse_tokens

__all__ = [
    "FreeWord",
    "FreeAutomorphism",
    "parse_free_word",
    "is_inner",
    "conjugating_prefix",
    "are_conjugate",
]


def _reduce(letters: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for g, e in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class FreeWord:
    """A freely reduced word; letters are ``(generator, +1 or -1)`` pairs."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[tuple[str, int]] = (), *, reduced=False):
        letters = tuple(letters)
        self.letters = letters if reduced else _reduce(letters)
        self._hash = None

    @classmethod
    def from_syllables(cls, syllables: Iterable[tuple[str, int]]) -> "FreeWord":
        flat = []
        for g, e in syllables:
            sign = 1 if e > 0 else -1
            flat.extend([(g, sign)] * abs(e))
        return cls(flat)

    @classmethod
    def gen(cls, name: str, exponent: int = 1) -> "FreeWord":
        return cls.from_syllables([(name, exponent)])

    def syllables(self) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        for g, e in self.letters:
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + e)
            else:
                out.append((g, e))
        return out

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(((g, -e) for g, e in reversed(self.letters)), reduced=True)

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        return FreeWord(base.letters * abs(n))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def exponent_sum(self, g: str) -> int:
        return sum(e for h, e in self.letters if h == g)

    def delete(self, names: Iterable[str]) -> "FreeWord":
        """Image under the map killing the given generators."""
        names = set(names)
        return FreeWord((g, e) for g, e in self.letters if g not in names)

    def rename(self, mapping: Mapping[str, str]) -> "FreeWord":
        return FreeWord(((mapping.get(g, g), e) for g, e in self.letters), reduced=True)

    def cyclically_reduced(self) -> "FreeWord":
        letters = self.letters
        i, j = 0, len(letters)
        while j - i > 1 and letters[i][0] == letters[j - 1][0] and letters[i][1] == -letters[j - 1][1]:
            i += 1
            j -= 1
        return FreeWord(letters[i:j], reduced=True)

    def __str__(self) -> str:
        return format_tokens(self.syllables())

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"


def parse_free_word(text: str, generators: Sequence[str] | None = None) -> FreeWord:
    """Parse the shared token grammar; ``generators`` restricts the alphabet."""
    allowed = (lambda name: True) if generators is None else set(generators).__contains__
    return FreeWord.from_syllables(parse_tokens(text, allowed))


class FreeAutomorphism:
    """Endomorphism of a free group given by the images of a basis.

    ``phi * psi`` is the composite ``phi o psi`` (apply ``psi`` first).  An
    inverse is carried along when it is known, e.g. for automorphisms built
    from generators with explicit inverses.
    """

    __slots__ = ("basis", "images", "_inverse_images")

    def __init__(self, basis: Sequence[str], images: Mapping[str, FreeWord],
                 inverse_images: Mapping[str, FreeWord] | None = None):
        self.basis = tuple(basis)
        self.images = {g: images.get(g, FreeWord.gen(g)) for g in self.basis}
        self._inverse_images = (
            None if inverse_images is None
            else {g: inverse_images.get(g, FreeWord.gen(g)) for g in self.basis}
        )

    @classmethod
    def identity(cls, basis: Sequence[str]) -> "FreeAutomorphism":
        ident = {g: FreeWord.gen(g) for g in basis}
        return cls(basis, ident, ident)

    @classmethod
    def conjugation(cls, basis: Sequence[str], w: FreeWord) -> "FreeAutomorphism":
        """``g -> w g w^-1``."""
        wi = w.inverse()
        forward = {g: w * FreeWord.gen(g) * wi for g in basis}
        backward = {g: wi * FreeWord.gen(g) * w for g in basis}
        return cls(basis, forward, backward)

    def __call__(self, w: FreeWord) -> FreeWord:
        return _substitute(self.images, w)

    def __mul__(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        images = {g: self(other.images[g]) for g in self.basis}
        inverse = None
        if self._inverse_images is not None and other._inverse_images is not None:
            inverse = {g: _substitute(other._inverse_images, self._inverse_images[g])
                       for g in self.basis}
        return FreeAutomorphism(self.basis, images, inverse)

    @property
    def has_inverse(self) -> bool:
        return self._inverse_images is not None

    def inverse(self) -> "FreeAutomorphism":
        if self._inverse_images is None:
            raise ValueError("inverse of this automorphism is not known")
        return FreeAutomorphism(self.basis, self._inverse_images, self.images)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FreeAutomorphism) and self.basis == other.basis
                and self.images == other.images)

    def __hash__(self):
        return hash((self.basis, tuple(self.images[g] for g in self.basis)))

    @property
    def is_identity(self) -> bool:
        return all(self.images[g].letters == ((g, 1),) for g in self.basis)

    def restricted(self, kill: Iterable[str]) -> "FreeAutomorphism":
        """Induced endomorphism of the quotient killing ``kill``.

        Only meaningful when the normal closure of ``kill`` is invariant.
        """
        kill = set(kill)
        basis = [g for g in self.basis if g not in kill]
        images = {g: self.images[g].delete(kill) for g in basis}
        inverse = None
        if self._inverse_images is not None:
            inverse = {g: self._inverse_images[g].delete(kill) for g in basis}
        return FreeAutomorphism(basis, images, inverse)

    def abelian_matrix(self, order: Sequence[str] | None = None) -> list[list[int]]:
        """Exponent-sum matrix; column ``j`` is the image of ``order[j]``."""
        order = tuple(order) if order is not None else self.basis
        return [[self.images[g].exponent_sum(h) for g in order] for h in order]

    def __str__(self) -> str:
        return ", ".join(f"{g} -> {self.images[g]}" for g in self.basis)

    def __repr__(self) -> str:
        return f"FreeAutomorphism({str(self)!r})"


def _substitute(images: Mapping[str, FreeWord], w: FreeWord) -> FreeWord:
    out: list[tuple[str, int]] = []
    cache: dict[str, tuple] = {}
    for g, e in w.letters:
        if e == 1:
            out.extend(images[g].letters)
        else:
            inv = cache.get(g)
            if inv is None:
                inv = cache[g] = images[g].inverse().letters
            out.extend(inv)
    return FreeWord(out)


def conjugating_prefix(w: FreeWord, g: str, sign: int = 1) -> FreeWord | None:
    """If reduced ``w`` is ``u g^sign u^-1`` return ``u``, else None."""
    letters = w.letters
    n = len(letters)
    if n % 2 == 0:
        return None
    k = n // 2
    if letters[k] != (g, sign):
        return None
    for i in range(k):
        h, e = letters[i]
        if letters[n - 1 - i] != (h, -e):
            return None
    return FreeWord(letters[:k], reduced=True)


def is_inner(phi: FreeAutomorphism) -> FreeWord | None:
    """Return ``w`` with ``phi(g) = w g w^-1`` for every basis element, or None.

    The candidate is read off the image of the first generator ``g``, where it
    is only determined up to a power of ``g``; that power is fixed by the image
    of the second generator and the result checked on the whole basis.
    """
    basis = phi.basis
    if not basis:
        return FreeWord()
    g = basis[0]
    u = conjugating_prefix(phi.images[g], g)
    if u is None:
        return None
    candidate = u
    if len(basis) > 1:
        h = basis[1]
        r = (u.inverse() * phi.images[h] * u).letters
        j = 0
        while j < len(r) and r[j][0] == g:
            j += 1
        power = sum(e for _, e in r[:j])
        candidate = u * FreeWord.gen(g, power) if power else u
    ci = candidate.inverse()
    for h in basis:
        if candidate * FreeWord.gen(h) * ci != phi.images[h]:
            return None
    return candidate


def are_conjugate(u: FreeWord, v: FreeWord) -> bool:
    """Conjugacy in a free group: cyclic reductions agree up to rotation."""
    a = u.cyclically_reduced().letters
    b = v.cyclically_reduced().letters
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    n = len(b)
    return any(doubled[i:i + n] == b for i in range(n))

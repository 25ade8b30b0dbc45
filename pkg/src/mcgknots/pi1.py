"""Action of pure mapping classes on the fundamental group of the surface.

The first puncture is blown up to a boundary circle carrying the basepoint,
so the twists act as honest automorphisms of the free group ``F(x, y, z)``:

* ``x`` is a longitude crossing the meridian curves of ``tb`` and ``tc`` once,
* ``y`` is a meridian parallel to the curve of ``tb``, crossing that of ``ta``,
* ``z`` encircles the second puncture.

The loop around the boundary is ``x^-1 z^-1 y x y^-1``; every twist fixes it.
Capping the boundary back to a puncture turns the boundary twist into
conjugation by that loop, so mapping classes are compared in ``Out(F3)``.
Abelianising ``x, y`` in the order ``(y, x)`` recovers ``omega``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotInKernelError, VerificationError
from .freegroup import (FreeAutomorphism, FreeWord, conjugating_prefix, is_inner,
                        parse_free_word)
from .omega import is_kernel, require_pure
from .words import Letter, Word, expand, reduce_word, rho_exponent

__all__ = [
    "BASIS",
    "HOMOLOGY_ORDER",
    "KERNEL_BASIS",
    "BOUNDARY",
    "auto_of",
    "generator_automorphism",
    "mcg_equal",
    "pushed_loop",
    "kernel_word",
]

BASIS = ("x", "y", "z")
# homology basis (meridian, longitude) used to compare with omega
HOMOLOGY_ORDER = ("y", "x")
KERNEL_BASIS = ("m", "l")
BOUNDARY = parse_free_word("x^-1 z^-1 y x y^-1")

# pushing the second puncture along y is tm, along x is tl
_TO_KERNEL = {"y": "m", "x": "l"}
_FROM_KERNEL = {v: k for k, v in _TO_KERNEL.items()}


def _auto(forward, backward):
    def words(table):
        return {g: parse_free_word(text) for g, text in table.items()}
    return FreeAutomorphism(BASIS, words(forward), words(backward))


_GENERATORS = {
    Letter.TA: _auto({"y": "y x"}, {"y": "y x^-1"}),
    Letter.TB: _auto({"x": "y^-1 x", "z": "y^-1 z y"}, {"x": "y x", "z": "y z y^-1"}),
    Letter.TC: _auto({"x": "y^-1 z x"}, {"x": "z^-1 y x"}),
}


def _power(phi: FreeAutomorphism, n: int) -> FreeAutomorphism:
    base = phi if n >= 0 else phi.inverse()
    n = abs(n)
    result = FreeAutomorphism.identity(BASIS)
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


@lru_cache(maxsize=None)
def generator_automorphism(letter: Letter) -> FreeAutomorphism:
    if letter in _GENERATORS:
        return _GENERATORS[letter]
    result = FreeAutomorphism.identity(BASIS)
    for sub, e in expand(Word.letter(letter)).syllables:
        result = result * _power(_GENERATORS[sub], e)
    return result


def auto_of(w: Word) -> FreeAutomorphism:
    """Automorphism of ``F(x, y, z)`` induced by a pure word.

    >>> str(auto_of(Word.letter(Letter.TM)))
    'x -> y^-1 z^-1 y x, y -> y, z -> y^-1 z y'
    """
    result = FreeAutomorphism.identity(BASIS)
    for letter, e in require_pure(w).syllables:
        result = result * _power(generator_automorphism(letter), e)
    return result


def mcg_equal(u: Word, v: Word) -> bool:
    """Equality in the mapping class group, decided in ``Out(F3)``."""
    if rho_exponent(u) != rho_exponent(v):
        return False
    strip = lambda w: reduce_word([s for s in w.syllables if s[0] is not Letter.RHO])
    phi = auto_of(strip(u)) * auto_of(strip(v)).inverse()
    return is_inner(phi) is not None


def pushed_loop(w: Word) -> FreeWord:
    """Coordinates of a kernel element in the free group on ``m, l``.

    The conjugator of the image of ``z`` is projected to ``F(x, y)`` by
    filling the second puncture; the induced automorphism of ``F(x, y)`` is
    then inner and its conjugator is divided out, which removes any boundary
    twist hidden in the chosen representative.  The result is inverted so
    that the map is a homomorphism: ``pushed_loop(u v) = pushed_loop(u) *
    pushed_loop(v)``, with ``tm -> m`` and ``tl -> l``.
    """
    if not is_kernel(w):
        raise NotInKernelError()
    phi = auto_of(w)
    u = conjugating_prefix(phi.images["z"], "z")
    if u is None:
        raise VerificationError(f"extraction failed: z -> {phi.images['z']}")
    filled = phi.restricted(["z"])
    h = is_inner(filled)
    if h is None:
        raise VerificationError(f"extraction failed: filled action {filled} is not inner")
    loop = h.inverse() * u.delete(["z"])
    return loop.inverse().rename(_TO_KERNEL)


def kernel_word(loop: FreeWord) -> Word:
    """Word in ``tm, tl`` whose pushed loop is the given word over ``m, l``."""
    letters = {"m": Letter.TM, "l": Letter.TL}
    return reduce_word([(letters[g], e) for g, e in loop.syllables()])

"""Words in the generators of the twice-punctured torus mapping class group.

A word is a run-length sequence of ``(letter, exponent)`` syllables.  The basic
letters are the Dehn twists ``ta``, ``tb``, ``tc`` and the puncture swap
``rho``; the derived letters ``tm``, ``tl``, ``th``, ``te`` abbreviate fixed
words in the basic ones (see :func:`expand`).

Composition concatenates left to right, and every homomorphic image used in
the package (matrices, free-group automorphisms) multiplies in the same
order: the image of ``u v`` is ``image(u) * image(v)``.

Reduction is free reduction only.  None of the relations of the mapping class
group are applied here; ``rho`` is the exception, being central of order two,
so it is collected into a single rightmost factor.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .errors import WordSyntaxError

__all__ = [
    "Letter",
    "Word",
    "parse_tokens",
    "format_tokens",
    "parse_word",
    "format_word",
    "compose",
    "invert",
    "expand",
    "reduce_word",
    "rho_exponent",
]


class Letter(enum.Enum):
    TA = "ta"
    TB = "tb"
    TC = "tc"
    RHO = "rho"
    TM = "tm"
    TL = "tl"
    TH = "th"
    TE = "te"

    @property
    def token(self) -> str:
        return self.value

    @property
    def is_basic(self) -> bool:
        return self in _BASIC

    @property
    def is_derived(self) -> bool:
        return not self.is_basic


_BASIC = frozenset({Letter.TA, Letter.TB, Letter.TC, Letter.RHO})
_BY_TOKEN = {letter.value: letter for letter in Letter}


# ---------------------------------------------------------------------------
# token grammar, shared with the free-group words of the pi1 layer

_TOKEN_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(.*))?$")
_INT_RE = re.compile(r"^[+-]?[0-9]+$")


def parse_tokens(text: str, is_letter: Callable[[str], bool]) -> list[tuple[str, int]]:
    """Split ``text`` into ``(name, exponent)`` pairs.

    ``token := letter ("^" signed-integer)?``, tokens separated by whitespace.
    Raises :class:`WordSyntaxError` carrying the 1-based token position.
    """
    out = []
    for position, token in enumerate(text.split(), start=1):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise WordSyntaxError(f"unknown token {token!r}", position)
        name, exponent_text = m.group(1), m.group(2)
        if not is_letter(name):
            raise WordSyntaxError(f"unknown letter {name!r}", position)
        if exponent_text is None:
            exponent = 1
        else:
            if not _INT_RE.match(exponent_text):
                raise WordSyntaxError(f"malformed exponent in {token!r}", position)
            exponent = int(exponent_text)
            if exponent == 0:
                raise WordSyntaxError(f"zero exponent in {token!r}", position)
        out.append((name, exponent))
    return out


def format_tokens(syllables: Iterable[tuple[str, int]]) -> str:
    return " ".join(name if e == 1 else f"{name}^{e}" for name, e in syllables)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Word:
    """Immutable word; ``syllables`` is a tuple of ``(Letter, nonzero int)``.

    Construction does not reduce.  Use :func:`reduce_word` or :func:`compose`
    for reduced, rho-normalised words.
    """

    syllables: tuple[tuple[Letter, int], ...] = ()

    def __post_init__(self):
        for letter, e in self.syllables:
            if not isinstance(letter, Letter):
                raise TypeError(f"not a generator letter: {letter!r}")
            if not isinstance(e, int) or e == 0:
                raise ValueError(f"exponent must be a nonzero integer, got {e!r}")

    @classmethod
    def of(cls, *pairs: tuple[Letter, int]) -> "Word":
        return cls(tuple(pairs))

    @classmethod
    def letter(cls, letter: Letter, exponent: int = 1) -> "Word":
        return cls(((letter, exponent),)) if exponent else cls()

    def __iter__(self) -> Iterator[tuple[Letter, int]]:
        return iter(self.syllables)

    def __len__(self) -> int:
        return len(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    @property
    def length(self) -> int:
        """Number of letters counted with multiplicity."""
        return sum(abs(e) for _, e in self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return compose(self, other)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** -n
        return reduce_word(Word(self.syllables * n))

    def inverse(self) -> "Word":
        return invert(self)

    @property
    def is_reduced(self) -> bool:
        return reduce_word(self) == self

    @property
    def is_basic(self) -> bool:
        return all(letter.is_basic for letter, _ in self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def parse_word(text: str) -> Word:
    """Parse a token string into an unreduced :class:`Word`.

    >>> parse_word("tl^-1 tm^-1")
    Word('tl^-1 tm^-1')
    """
    pairs = parse_tokens(text, _BY_TOKEN.__contains__)
    return Word(tuple((_BY_TOKEN[name], e) for name, e in pairs))


def format_word(w: Word) -> str:
    return format_tokens((letter.value, e) for letter, e in w.syllables)


def _free_reduce(pairs: Iterable[tuple[Letter, int]]) -> list[tuple[Letter, int]]:
    stack: list[tuple[Letter, int]] = []
    for letter, e in pairs:
        if stack and stack[-1][0] is letter:
            e += stack.pop()[1]
        if e:
            stack.append((letter, e))
    return stack


def reduce_word(w: Word | Sequence[tuple[Letter, int]]) -> Word:
    """Free reduction plus rho-normalisation (rho central, rho^2 = 1)."""
    pairs = w.syllables if isinstance(w, Word) else tuple(w)
    rho = 0
    rest = []
    for letter, e in pairs:
        if letter is Letter.RHO:
            rho += e
        else:
            rest.append((letter, e))
    out = _free_reduce(rest)
    if rho % 2:
        out.append((Letter.RHO, 1))
    return Word(tuple(out))


def rho_exponent(w: Word) -> int:
    """Total rho exponent mod 2."""
    return sum(e for letter, e in w.syllables if letter is Letter.RHO) % 2


def compose(u: Word, v: Word) -> Word:
    return reduce_word(u.syllables + v.syllables)


def invert(w: Word) -> Word:
    return Word(tuple((letter, -e) for letter, e in reversed(w.syllables)))


_DEFINITIONS = {
    Letter.TM: "tb tc^-1",
    Letter.TH: "tm^-1 ta tm",
    Letter.TL: "th ta^-1",
    Letter.TE: "tl^-1 tm tl tm^-1",
}


@lru_cache(maxsize=None)
def definition(letter: Letter) -> Word:
    """One-step definition of a derived letter; other letters stand for themselves."""
    if letter not in _DEFINITIONS:
        return Word.letter(letter)
    return parse_word(_DEFINITIONS[letter])


@lru_cache(maxsize=None)
def _expansion(letter: Letter) -> tuple[tuple[Letter, int], ...]:
    if letter.is_basic:
        return ((letter, 1),)
    out: list[tuple[Letter, int]] = []
    for sub, e in definition(letter).syllables:
        out.extend(_power(_expansion(sub), e))
    return tuple(_free_reduce(out))


def _power(pairs, e):
    if e > 0:
        return pairs * e
    inverse = tuple((letter, -f) for letter, f in reversed(pairs))
    return inverse * -e


def expand(w: Word) -> Word:
    """Replace every derived letter by its word in ``ta``, ``tb``, ``tc``.

    >>> str(expand(parse_word("th")))
    'tc tb^-1 ta tb tc^-1'
    """
    out: list[tuple[Letter, int]] = []
    for letter, e in w.syllables:
        out.extend(_power(_expansion(letter), e))
    return reduce_word(out)

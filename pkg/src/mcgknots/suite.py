"""Self-check suite run by ``mcgknots verify``.

Each check returns ``(passed, detail)``; :func:`run_suite` collects them in a
fixed order so the report is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from .errors import MCGError
from .freegroup import are_conjugate, is_inner, parse_free_word
from .groupcalc import (branched_cover_homology, fox_formula_order, group_order,
                        torus_alexander)
from .groupcalc.presentations import cyclic_word, find_shift, shift_word
from .knotwords import torus_knot_word, two_bridge_word_from_fraction
from .omega import SL2Matrix, omega
from .pi1 import BOUNDARY, HOMOLOGY_ORDER, auto_of, mcg_equal, pushed_loop
from .standard import psi_standard
from .words import Letter, Word, expand, parse_word, reduce_word

__all__ = ["Check", "CHECKS", "run_suite", "RELATORS", "LANTERN_CHAIN", "GOLDEN_T57_CYCLIC", "GOLDEN_T57_WORD"]

RELATORS = {
    "braid ta tb": ("ta tb ta", "tb ta tb"),
    "braid ta tc": ("ta tc ta", "tc ta tc"),
    "commute tb tc": ("tb tc", "tc tb"),
    "chain (ta tb tc)^4": (" ".join(["ta tb tc"] * 4), ""),
}

# successive rewritings of the lantern twist, ending in tl^-1 tm tl tm^-1
LANTERN_CHAIN = (
    "tc^2 ta tc tb^-1 ta^-1 tc^-1 ta tb tc^-1 ta^-1 tb^-1",
    "tc ta tc ta tb^-1 ta^-1 tc^-1 ta tb tc^-1 ta^-1 tb^-1",
    "tc ta tc tb^-1 ta^-1 tb tc^-1 ta tb tc^-1 ta^-1 tb^-1",
    "tc ta tb^-1 tc ta^-1 tc^-1 tb ta tb tc^-1 ta^-1 tb^-1",
    "tc ta tb^-1 ta^-1 tc^-1 ta tb ta tb tc^-1 ta^-1 tb^-1",
    "tc tb^-1 ta^-1 tb tc^-1 ta tb ta tb tc^-1 ta^-1 tb^-1",
    "tc tb^-1 ta^-1 tb tc^-1 ta ta tb ta tc^-1 ta^-1 tb^-1",
    "tc tb^-1 ta^-1 tb tc^-1 ta ta tb tc^-1 ta^-1 tc tb^-1",
    "tm^-1 ta^-1 tm ta ta tm ta^-1 tm^-1",
    "tm^-1 ta^-1 tm ta tm tm^-1 ta tm ta^-1 tm^-1",
    "th^-1 ta tm th ta^-1 tm^-1",
    "tl^-1 tm tl tm^-1",
)

GOLDEN_T57_CYCLIC = ("x15 x20 x25 x24^-1 x19^-1 x14^-1 x9^-1 x8 x13 x18 "
                    "x17^-1 x12^-1 x7^-1 x2^-1 x1 x6 x11")
GOLDEN_T57_WORD = ("tl^-1 tm^-1 tl^-1 tm^-1 tl^-1 tl^-1 tm^-1 tl^-1 tm^-1 tl^-1 tm^-1 tl^-1 "
                  "tb ta tb")
S1_S2_GENERATOR = "ta tb ta ta tc ta"


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], tuple[bool, str]]


def _relators():
    bad = [name for name, (u, v) in RELATORS.items()
           if not mcg_equal(parse_word(u), parse_word(v))]
    return not bad, "all hold" if not bad else f"failed: {', '.join(bad)}"


def _eta():
    ok = mcg_equal(parse_word("th"), parse_word("tm^-1 ta tm"))
    return ok, "th = tm^-1 ta tm"


def _lantern():
    te = parse_word("te")
    bad = [i for i, text in enumerate(LANTERN_CHAIN) if not mcg_equal(te, parse_word(text))]
    return not bad, f"{len(LANTERN_CHAIN)} rewritings equal te" if not bad else f"failed at {bad}"


def _kernel_coordinates():
    expected = {"tm": "m", "tl": "l", "te": "l^-1 m l m^-1", "tm tl tm^-1": "m l m^-1"}
    bad = [w for w, loop in expected.items()
           if pushed_loop(parse_word(w)) != parse_free_word(loop)]
    return not bad, "tm -> m, tl -> l, te -> l^-1 m l m^-1" if not bad else f"failed: {bad}"


def _omega_anchors():
    ok = omega(parse_word("tb ta tb")) == SL2Matrix(0, -1, 1, 0)
    ok &= omega(parse_word(S1_S2_GENERATOR)) == -SL2Matrix.identity()
    return ok, "omega(tb ta tb) = [[0,-1],[1,0]], omega(ta tb ta ta tc ta) = -I"


def _standard_columns():
    bad = []
    for p in range(2, 51):
        for q in (q for q in range(1, p) if gcd(p, q) == 1):
            try:
                psi_standard(p, q)
            except (MCGError, AssertionError):
                bad.append((p, q))
    return not bad, "first column (q, p) for all p <= 50" if not bad else f"failed: {bad[:5]}"


def _abelianization():
    words = [Word.letter(letter) for letter in Letter if letter is not Letter.RHO]
    bad = [str(w) for w in words
           if auto_of(w).restricted(["z"]).abelian_matrix(HOMOLOGY_ORDER) != omega(w).rows()]
    return not bad, "abelianised action equals omega on every letter" if not bad else f"failed: {bad}"


def _peripheral():
    z = parse_free_word("z")
    bad = []
    for letter in Letter:
        if letter is Letter.RHO:
            continue
        phi = auto_of(Word.letter(letter))
        if phi(BOUNDARY) != BOUNDARY or not are_conjugate(phi(z), z):
            bad.append(letter.value)
    return not bad, "boundary loop fixed, z sent to a conjugate" if not bad else f"failed: {bad}"


def _golden_words():
    ok = torus_knot_word(5, 7) == reduce_word(parse_word(GOLDEN_T57_WORD))
    ok &= str(two_bridge_word_from_fraction(5, 2)) == "tb ta tb tm^-1 te"
    return ok, "t(5,7) and b(5/2) words match"


def _golden_cyclic():
    shifts = []
    for n in (17, 29):
        target = shift_word(parse_free_word(GOLDEN_T57_CYCLIC), 0, n)
        shifts.append(find_shift(cyclic_word(5, 1, n), target, n))
    return shifts == [14, 14], f"shifts {shifts}"


def _homology_oracle():
    bad = []
    for k in (3, 5, 7):
        for c in (1, 2):
            delta = torus_alexander(k, c * k + 2)
            for n in range(2, 9):
                if group_order(branched_cover_homology(k, c, n)) != fox_formula_order(delta, n):
                    bad.append((k, c, n))
    return not bad, "Smith normal form agrees with resultant for k<=7, c<=2, n<=8" if not bad else f"failed: {bad}"


def _inner_relator():
    w = expand(parse_word(RELATORS["chain (ta tb tc)^4"][0]))
    conj = is_inner(auto_of(w))
    ok = conj is not None and are_conjugate(conj, BOUNDARY)
    return ok, f"(ta tb tc)^4 acts as conjugation by {conj}"


CHECKS = (
    Check("presentation relators", _relators),
    Check("t_eta identity", _eta),
    Check("lantern identity", _lantern),
    Check("kernel coordinates", _kernel_coordinates),
    Check("omega anchors", _omega_anchors),
    Check("standard word columns", _standard_columns),
    Check("abelianization matches omega", _abelianization),
    Check("peripheral structure", _peripheral),
    Check("chain relator is inner", _inner_relator),
    Check("golden knot words", _golden_words),
    Check("golden cyclic word", _golden_cyclic),
    Check("branched cover homology vs resultant", _homology_oracle),
)


def run_suite() -> list[tuple[str, bool, str]]:
    results = []
    for check in CHECKS:
        try:
            ok, detail = check.run()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((check.name, bool(ok), detail))
    return results

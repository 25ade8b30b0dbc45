"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (bad input), 3 internal
verification failure.  ``--json`` on any subcommand emits a document carrying
``"schema": 1``.  Words containing spaces must be quoted; arguments starting
with ``-`` (negative numbers) need a preceding ``--``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import DomainError, MCGError, VerificationError
from .groupcalc import (INFINITE, Presentation, alexander_poly, branched_cover_homology,
                        cyclic_presentation, fox_formula_order, group_order, torus_alexander)
from .groupcalc.fox import infer_weights
from .knotwords import (ConwayParams, even_continued_fraction, torus_knot_word, two_bridge_word,
                        two_bridge_word_from_fraction)
from .omega import is_kernel, lens_of, omega
from .pi1 import mcg_equal
from .standard import standard_decompose, psi_standard
from .suite import run_suite
from .words import parse_word

SCHEMA_VERSION = 1


def _emit(as_json: bool, payload: dict, text: str) -> None:
    if as_json:
        click.echo(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True))
    else:
        click.echo(text)


json_option = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")


def _lens_payload(lens):
    return {"p": lens.p, "q": lens.q, "name": lens.name}


def _format_group(factors) -> str:
    if not factors:
        return "trivial"
    parts = ["Z" if d == 0 else f"Z/{d}" for d in factors]
    return " + ".join(parts)


@click.group()
def cli() -> None:
    """Words in the twice-punctured torus mapping class group and (1,1)-knots."""


@cli.command("omega")
@click.argument("word", nargs=-1, required=True)
@json_option
def omega_command(word, as_json):
    """Matrix image of WORD and the lens space it lives in."""
    w = parse_word(" ".join(word))
    m = omega(w)
    lens = lens_of(w)
    text = (f"matrix: {m.rows()}\n"
            f"q s / p r: {m.to_text()}\n"
            f"lens space: {lens} = {lens.name}\n"
            f"kernel: {'yes' if m.is_identity else 'no'}")
    _emit(as_json, {"word": str(w), "matrix": m.rows(), "lens_space": _lens_payload(lens),
                    "kernel": m.is_identity}, text)


@cli.command("standard")
@click.argument("p", type=int)
@click.argument("q", type=int)
@json_option
def standard_command(p, q, as_json):
    """Standard word of the trivial knot in L(P,Q)."""
    w = psi_standard(p, q)
    _emit(as_json, {"p": p, "q": q, "word": str(w), "matrix": omega(w).rows()}, str(w))


@cli.command("decompose")
@click.argument("word")
@click.argument("p", type=int)
@click.argument("q", type=int)
@json_option
def decompose_command(word, p, q, as_json):
    """Split WORD as left * psi(P,Q) = psi(P,Q) * right with kernel factors."""
    left, right = standard_decompose(parse_word(word), p, q)
    psi = psi_standard(p, q)
    kernel = is_kernel(left) and is_kernel(right)
    text = (f"psi: {psi}\n"
            f"left: {left}\n"
            f"right: {right}\n"
            f"kernel: {'yes' if kernel else 'no'}")
    _emit(as_json, {"psi": str(psi), "left": str(left), "right": str(right),
                    "kernel": kernel}, text)
    if not kernel:
        raise VerificationError("decomposition factors are not in the kernel")


@cli.command("torus")
@click.argument("k", type=int)
@click.argument("h", type=int)
@json_option
def torus_command(k, h, as_json):
    """Standard word of the torus knot t(K,H)."""
    w = torus_knot_word(k, h)
    _emit(as_json, {"k": k, "h": h, "word": str(w), "lens_space": _lens_payload(lens_of(w))},
          str(w))


@cli.command("twobridge")
@click.argument("fraction", nargs=-1, type=int)
@click.option("--conway", help="Comma-separated even Conway parameters 2a1,2b1,...")
@json_option
def twobridge_command(fraction, conway, as_json):
    """Standard word of the two-bridge knot b(A/B), or from --conway parameters."""
    if conway is not None:
        if fraction:
            raise click.UsageError("give either A B or --conway, not both")
        try:
            values = [int(v) for v in conway.split(",") if v.strip()]
        except ValueError as exc:
            raise click.UsageError(f"--conway: {exc}") from exc
        params = ConwayParams.from_doubled(values)
        w = two_bridge_word(params)
    else:
        if len(fraction) != 2:
            raise click.UsageError("expected A B")
        params = even_continued_fraction(*fraction)
        w = two_bridge_word_from_fraction(*fraction)
    _emit(as_json, {"conway": params.doubled(), "word": str(w)}, str(w))


@cli.command("cyclic")
@click.argument("k", type=int)
@click.argument("c", type=int)
@click.argument("n", type=int)
@json_option
def cyclic_command(k, c, n, as_json):
    """Cyclic presentation G_N(w) for the branched covers of t(K, CK+2)."""
    cp = cyclic_presentation(k, c, n)
    text = f"n: {n}\nw: {cp.w}"
    _emit(as_json, {"k": k, "c": c, **cp.to_json()}, text)


def _homology_row(k, c, n):
    factors = branched_cover_homology(k, c, n)
    order = group_order(factors)
    oracle = fox_formula_order(torus_alexander(k, c * k + 2), n)
    return {"n": n, "factors": factors, "order": order, "oracle": oracle,
            "agree": order == oracle}


@cli.command("homology")
@click.argument("k", type=int)
@click.argument("c", type=int)
@click.argument("n", type=int)
@click.option("--sweep", type=int, default=None, help="Tabulate n = N..SWEEP.")
@json_option
def homology_command(k, c, n, sweep, as_json):
    """H_1 of the N-fold cyclic branched cover of t(K, CK+2), with resultant oracle."""
    last = n if sweep is None else sweep
    if last < n:
        raise click.UsageError("--sweep must be at least N")
    rows = [_homology_row(k, c, i) for i in range(n, last + 1)]
    lines = [f"n={r['n']}: {_format_group(r['factors'])} (order {r['order']}, "
             f"oracle {r['oracle']}, {'agree' if r['agree'] else 'DISAGREE'})" for r in rows]
    payload = {"k": k, "c": c, "rows": rows} if sweep is not None else {"k": k, "c": c, **rows[0]}
    _emit(as_json, payload, "\n".join(lines))
    if not all(r["agree"] for r in rows):
        raise VerificationError("Smith normal form and resultant oracle disagree")


@cli.command("alexander")
@click.option("--torus", "torus", nargs=2, type=int, help="Torus knot K H.")
@click.option("--presentation", "presentation", type=click.Path(dir_okay=False),
              help="JSON file {generators, relators[, weights]}.")
@json_option
def alexander_command(torus, presentation, as_json):
    """Alexander polynomial of a torus knot or of a one-relator presentation."""
    if (torus is None) == (presentation is None):
        raise click.UsageError("give exactly one of --torus or --presentation")
    if torus is not None:
        delta = torus_alexander(*torus)
    else:
        try:
            data = json.loads(Path(presentation).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DomainError(f"cannot read presentation: {exc}") from exc
        p = Presentation.from_json(data)
        weights = tuple(data["weights"]) if "weights" in data else infer_weights(p)
        delta = alexander_poly(p, weights)
    _emit(as_json, {"polynomial": str(delta), "coefficients": delta.to_dict()}, str(delta))


@cli.command("equal")
@click.argument("first")
@click.argument("second")
@json_option
def equal_command(first, second, as_json):
    """Whether two words define the same mapping class."""
    verdict = mcg_equal(parse_word(first), parse_word(second))
    _emit(as_json, {"first": first, "second": second, "equal": verdict},
          "equal" if verdict else "not equal")


@cli.command("verify")
@json_option
def verify_command(as_json):
    """Run the built-in invariant suite."""
    results = run_suite()
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}: {detail}" for name, ok, detail in results]
    payload = {"checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in results]}
    _emit(as_json, payload, "\n".join(lines))
    if not all(ok for _, ok, _ in results):
        raise VerificationError("invariant suite failed")


def main(argv=None) -> int:
    """Run the CLI and return the exit code instead of exiting."""
    try:
        cli.main(args=argv, prog_name="mcgknots", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except (VerificationError, AssertionError) as exc:
        click.echo(f"verification failure: {exc}", err=True)
        return 3
    except MCGError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except click.Abort:
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

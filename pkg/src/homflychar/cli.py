"""Command line front end.

    homflychar --strands 3 --tuples "(1,-1|1,-1)"
    homflychar --strands 2 --word "1 1" --format json
    homflychar --torus2 3
    homflychar --fixtures builtin

Exit status: 0 success, 1 computation or fixture failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidParseError, parse_tuple_text, parse_word_text, render_tuples
from .exactring import DomainError, LaurentPoly, RFunc, eval_numeric, rf
from .fusion import ConsistencyError
from .homfly import (
    HomflyResult,
    NeedsReconstruction,
    a_rows,
    bracket_positive,
    homfly,
    render_a_grouped,
    superpoly_2strand,
    torus_2strand,
    torus_3strand,
)
from .oracle import EXACT_N, direct_trace, direct_trace_numeric
from .partitions import as_partition, schur_star
from .tables import load_fixtures, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
NUMERIC_Q = (complex(1.17, 0.23), complex(0.91, -0.31), complex(1.35, 0.05))


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homflychar", description="HOMFLY polynomials of braid closures")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--word", help='signed generators, e.g. "1 -2 1 -2"')
    mode.add_argument("--tuples", help='grouped exponents, e.g. "(1,-1|1,-1)"')
    mode.add_argument("--torus2", type=int, metavar="N", help="2-strand torus [2,N]")
    mode.add_argument("--torus3", type=int, metavar="N", help="3-strand torus [3,N]")
    mode.add_argument("--superpoly", type=int, metavar="K", help="superpolynomial of [2,2K+1]")
    mode.add_argument("--fixtures", metavar="PATH", help='"builtin", a table name, a JSON file or directory')
    p.add_argument("--strands", type=int, help="number of strands (word and tuple modes)")
    p.add_argument("--color", default="[1]", help="colour R for --torus2 (default [1])")
    p.add_argument("--sector", help='only report this h^Q, e.g. "[21]"')
    p.add_argument("--oracle", type=int, metavar="N", help="also compare against the brute-force trace at A=q^N")
    p.add_argument("--normalization", choices=("raw", "reduced", "invariant"), default="invariant")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _poly_text(x) -> str:
    """A-grouped form; link denominators are shown as powers of (q-q^-1)."""
    x = rf(x)
    if x.is_laurent():
        return render_a_grouped(x)
    qq = RFunc(LaurentPoly.monomial(1, q=1) - LaurentPoly.monomial(1, q=-1))
    y = x
    for k in range(1, 4):
        y = y * qq
        if y.is_laurent():
            den = "(q-q^-1)" if k == 1 else f"(q-q^-1)^{k}"
            return f"({render_a_grouped(y)})/{den}"
    return x.render()


def _row_label(k: int) -> str:
    return "A" if k == 1 else f"A^{k}"


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


# -- word mode -----------------------------------------------------------------


def _braid(args):
    if args.strands is None:
        raise UsageError("--strands is required with --word/--tuples")
    if args.word is not None:
        return parse_word_text(args.strands, args.word)
    return parse_tuple_text(args.strands, args.tuples)


def _oracle_report(r: HomflyResult, N: int) -> dict:
    if N in EXACT_N:
        trace = direct_trace(r.word, N)
        want = r.raw.substitute({"A": LaurentPoly.monomial(1, q=N)})
        return {"N": N, "mode": "exact", "trace": trace.to_json(), "agrees": rf(trace) == want}
    got = direct_trace_numeric(r.word, N, NUMERIC_Q)
    gap = 0.0
    for q, g in zip(NUMERIC_Q, got):
        v = eval_numeric(r.raw, {"A": q ** N, "q": q})
        gap = max(gap, float(abs(v - g) / max(abs(g), 1.0)))
    return {"N": N, "mode": "numeric", "max_relative_gap": gap, "agrees": bool(gap < 1e-7)}


def render(r: HomflyResult, fmt: str = "text", sector=None, normalization: str = "invariant",
           oracle: dict | None = None) -> str:
    coeffs = r.coefficients
    if sector is not None:
        coeffs = {Q: h for Q, h in coeffs.items() if Q == sector}
    if fmt == "json":
        doc = r.to_json()
        doc["word"] = render_tuples(r.word)
        doc["h"] = {Q.short(): h.to_json() for Q, h in coeffs.items()}
        if oracle is not None:
            doc["oracle"] = oracle
        return _dump(doc)
    lines = [
        f"word: {render_tuples(r.word)}  ({r.word})",
        f"writhe: {r.writhe}",
        f"components: {r.components}",
    ]
    for Q, h in coeffs.items():
        lines.append(f"h{Q.short()}: {h.render(compact=True)}")
    if r.reduced.is_laurent():
        lines.append("reduced rows:")
        for k, row in a_rows(r.reduced).items():
            lines.append(f"  {_row_label(k)}: {row.render(compact=True)}")
    else:
        lines.append(f"reduced: {_poly_text(r.reduced)}")
    lines.append(f"{normalization}: {_poly_text(r.normalization(normalization))}")
    if oracle is not None:
        lines.append(f"oracle N={oracle['N']}: {'agrees' if oracle['agrees'] else 'DISAGREES'}")
    return "\n".join(lines)


def _word_mode(args) -> tuple[str, int]:
    w = _braid(args)
    sector = as_partition(args.sector) if args.sector else None
    if sector is not None and sector.size != w.strands:
        raise UsageError(f"sector {args.sector} does not have {w.strands} boxes")
    r = homfly(w)
    oracle = None
    if args.oracle is not None:
        if args.oracle < 1:
            raise UsageError("--oracle needs N >= 1")
        oracle = _oracle_report(r, args.oracle)
    status = EXIT_FAIL if oracle is not None and not oracle["agrees"] else EXIT_OK
    return render(r, args.format, sector, args.normalization, oracle), status


# -- closed forms ----------------------------------------------------------------


def _closed_form(raw: RFunc, title: str, R, fmt: str, normalization: str) -> str:
    reduced = raw / schur_star(R)
    pick = {"raw": raw, "reduced": reduced, "invariant": reduced}[normalization]
    if fmt == "json":
        return _dump({"family": title, "colour": as_partition(R).short(), "raw": raw.to_json(),
                      "reduced": reduced.to_json()})
    lines = [title, f"raw: {raw.render()}", f"reduced: {_poly_text(reduced)}"]
    if normalization == "raw":
        lines.append(f"raw (grouped): {_poly_text(pick)}")
    return "\n".join(lines)


def _superpoly_mode(k: int, fmt: str) -> tuple[str, int]:
    if k < 0:
        raise UsageError("--superpoly needs K >= 0")
    s = superpoly_2strand(k)
    positive = bracket_positive(s.bracket)
    n = 2 * k + 1
    homfly_red = torus_2strand(n) / schur_star([1])
    agrees = s.at_t_equals_q() == homfly_red
    if fmt == "json":
        text = _dump({"k": k, "bracket": s.bracket.to_json(), "poly": s.poly.to_json(),
                      "positive": positive, "t_equals_q_matches_homfly": agrees})
    else:
        text = "\n".join([
            f"superpolynomial of [2,{n}] / M1*",
            f"bracket: {s.bracket.render(compact=True)}",
            f"P/M1*: {s.poly.render()}",
            f"positive in (-A^2, q, t): {'yes' if positive else 'no'}",
            f"t = q gives the HOMFLY polynomial: {'yes' if agrees else 'no'}",
        ])
    return text, EXIT_OK if positive and agrees else EXIT_FAIL


def _fixtures_mode(source: str, fmt: str) -> tuple[str, int]:
    try:
        fixtures = load_fixtures(source)
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot load fixtures from {source!r}: {exc}") from exc
    rep = run_all(fixtures)
    if fmt == "json":
        text = _dump({
            "ok": rep.ok,
            "structural": rep.structural,
            "fixtures": [
                {"name": r.fixture.key, "ok": r.ok, "verbatim": r.verbatim, "error": r.error,
                 "fields": [vars(x) for x in r.fields if x.status != "pass"]}
                for r in rep.fixtures
            ],
            "cross": rep.cross,
        })
    else:
        text = "\n".join(rep.lines())
    return text, EXIT_OK if rep.ok else EXIT_FAIL


def run(argv=None) -> tuple[str, int]:
    args = build_parser().parse_args(argv)
    if args.word is not None or args.tuples is not None:
        return _word_mode(args)
    if args.torus2 is not None:
        R = as_partition(args.color)
        raw = torus_2strand(args.torus2, R)
        title = f"torus [2,{args.torus2}], colour {R.short()}"
        return _closed_form(raw, title, R, args.format, args.normalization), EXIT_OK
    if args.torus3 is not None:
        raw = torus_3strand(args.torus3)
        title = f"torus [3,{args.torus3}]"
        return _closed_form(raw, title, [1], args.format, args.normalization), EXIT_OK
    if args.superpoly is not None:
        return _superpoly_mode(args.superpoly, args.format)
    return _fixtures_mode(args.fixtures, args.format)


def main(argv=None) -> int:
    try:
        text, status = run(argv)
    except SystemExit as exc:  # argparse already printed its usage message
        return int(exc.code or 0)
    except (UsageError, BraidParseError) as exc:
        print(f"homflychar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad partitions, unsupported colours, envelope violations
        print(f"homflychar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, NeedsReconstruction, DomainError, OverflowError) as exc:
        print(f"homflychar: computation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

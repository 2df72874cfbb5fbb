"""Acceptance criteria 1-10, each with its time limit.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; either
way one PASS/FAIL line per criterion is printed at the end.

Criteria 2-4 demand that every printed column is reproduced verbatim.  Where
a printed entry is a misprint confirmed by the brute-force trace, the
criterion fails and its line names the entry.
"""

from __future__ import annotations

import random
import time

import pytest

from homflychar import matrix as mx
from homflychar.braid import BraidWord, parse_tuple_text, stabilize
from homflychar.exactring import LaurentPoly, RFunc, eval_numeric, mirror_q, qint, rf, substitute
from homflychar.fusion import published_matrix_check, relation_checks, sector_rep, two_row_partitions
from homflychar.homfly import (
    bracket_positive,
    homfly,
    superpoly_2strand,
    torus_2strand,
    unknot_identities,
)
from homflychar.oracle import direct_trace, direct_trace_numeric
from homflychar.partitions import as_partition, kappa, schur_star, transpose
from homflychar.tables import PASS, builtin_table, find, load_fixtures, mirror, run_fixture

RESULTS: dict = {}

LIMITS = {1: 1.0, 2: 10.0, 3: 30.0, 4: 120.0, 7: 180.0}

q = LaurentPoly.var("q")


def _A(k: int) -> RFunc:
    return RFunc(LaurentPoly.monomial(1, A=k))


def _table_verbatim(table: str) -> tuple[bool, str]:
    bad = []
    rows = 0
    for f in builtin_table(table):
        rep = run_fixture(f)
        rows += 1
        if rep.error:
            bad.append(f"{f.name}: {rep.error}")
            continue
        for x in rep.fields:
            if x.status != PASS:
                tag = "oracle-confirmed misprint" if x.status == "paper-erratum" else "MISMATCH"
                bad.append(f"{f.name} {x.field} ({tag})")
    detail = f"{rows} rows"
    if bad:
        detail += "; not reproduced as printed: " + ", ".join(bad)
    return not bad, detail


# -- criteria ----------------------------------------------------------------------


def criterion_1():
    return _table_verbatim("two_strand")


def criterion_2():
    return _table_verbatim("three_strand")


def criterion_3():
    return _table_verbatim("four_strand")


def criterion_4():
    ok, detail = _table_verbatim("five_strand")
    w81 = find("8_1", "five_strand").braids()[0]
    h311 = homfly(w81).h([3, 1, 1])
    want = LaurentPoly({(0, 6, 0): -2, (0, 4, 0): 4, (0, 2, 0): -4, (0, 0, 0): 5,
                        (0, -2, 0): -4, (0, -4, 0): 4, (0, -6, 0): -2})
    if h311 != want:
        return False, f"8_1 [311] column {h311}; " + detail
    return ok, detail


def criterion_5():
    names = ["U21", "U31", "V31", "U22", "V22", "W41"]
    res = [published_matrix_check(n) for n in names]
    res += [published_matrix_check("U_(k)", k=k) for k in (2, 3, 4)]
    bad = [r.name for r in res if not r.ok]
    return not bad, f"{len(res)} matrices" + (f"; failed: {bad}" if bad else "")


def _cycle(Q, mus, scale=None):
    rep = sector_rep(Q)
    X = mx.identity(rep.dim)
    for mu in mus:
        X = mx.matmul(X, rep.rhat[mu])
    return mx.scale(X, scale) if scale is not None else X


def criterion_6():
    checks = {}
    for k, v in unknot_identities().items():
        checks[f"unknot {k}"] = v
    for k in range(2, 9):
        checks[f"[{k}]^2-1=[{k + 1}][{k - 1}]"] = qint(k) * qint(k) - 1 == qint(k + 1) * qint(k - 1)
    qinv = rf(LaurentPoly.var("q", -1))
    checks["(R1R2)^3 in [21]"] = mx.is_identity(mx.power(_cycle([2, 1], [1, 2]), 3))
    checks["(R1R2^3)^3 in [21]"] = mx.is_identity(mx.power(_cycle([2, 1], [1, 2, 2, 2]), 3))
    checks["(R1R2R3)^2 in [22]"] = mx.is_identity(mx.power(_cycle([2, 2], [1, 2, 3]), 2))
    checks["((R1R2R3)/q)^4 in [31]"] = mx.is_identity(mx.power(_cycle([3, 1], [1, 2, 3], qinv), 4))
    checks["UW = WU"] = published_matrix_check("UW").ok
    for m in range(2, 6):
        for Q in two_row_partitions(m):
            for name, v in relation_checks(sector_rep(Q)).items():
                checks[f"{Q.short()} {name}"] = v
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks)} identities" + (f"; failed: {bad}" if bad else "")


def criterion_7():
    rng = random.Random(20240611)
    words = []
    for f in load_fixtures():
        for text in f.words:
            words.append((f.key, text, parse_tuple_text(f.strands, text)))
    bad = []
    n_num = 0
    for key, text, w in words:
        raw = homfly(w).raw
        for N in (2, 3):
            if rf(direct_trace(w, N)) != substitute(raw, {"A": q ** N}):
                bad.append(f"{key} {text} N={N}")
        if w.strands == 5:
            samples = [complex(rng.uniform(0.8, 1.4), rng.uniform(-0.4, 0.4)) for _ in range(8)]
            for s, g in zip(samples, direct_trace_numeric(w, 4, samples)):
                v = eval_numeric(raw, {"A": s ** 4, "q": s})
                if abs(v - g) > 1e-7 * abs(g):
                    bad.append(f"{key} N=4 q={s:.3f}")
            n_num += 1
    return not bad, f"{len(words)} words exact at N=2,3; {n_num} five-strand words at N=4" + (
        f"; failed: {bad}" if bad else ""
    )


def criterion_8():
    checks = {}
    t2 = homfly(find("3_1", "two_strand").braids()[0]).invariant
    t3 = homfly(find("3_1", "three_strand").braids()[0]).invariant
    checks["3_1: 3-strand word is the mirror of the 2-strand one"] = mirror(t3) == t2 and t3 != t2
    for name in ("8_19", "10_139"):
        invs = [homfly(w).invariant for w in find(name, "three_strand").braids()]
        checks[f"{name}: realizations agree"] = all(i == invs[0] for i in invs)
    pool = [f for t in ("two_strand", "three_strand", "four_strand") for f in builtin_table(t)]
    rng = random.Random(7)
    picks = rng.sample(pool, 10)
    for i, f in enumerate(picks):
        w = f.braids()[0]
        s = 1 if i % 2 == 0 else -1
        checks[f"Markov {f.key} {s:+d}"] = homfly(stabilize(w, s)).raw == homfly(w).raw * _A(s)
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks)} checks" + (f"; failed: {bad}" if bad else "")


def criterion_9():
    checks = {}
    for f in builtin_table("composites"):
        rep = run_fixture(f)
        checks[f"{f.name} ({f.strands} strands)"] = rep.verbatim
    s1 = schur_star([1])
    t23 = homfly(BraidWord.from_signed(2, [1] * 3)).raw
    t24 = homfly(BraidWord.from_signed(2, [1] * 4)).raw
    r33 = homfly(parse_tuple_text(3, "(3,3)")).raw
    r34 = homfly(parse_tuple_text(3, "(3,4)")).raw
    checks["raw{3,3} S1 = raw(T23)^2"] = r33 * s1 == t23 * t23
    checks["raw{3,4} S1 = raw(T23) raw(T24)"] = r34 * s1 == t23 * t24
    brace = rf(q - LaurentPoly.var("q", -1))
    for name in ("{3,4}", "T[2,4]", "L4a1"):
        red = homfly(find(name, "composites").braids()[0]).reduced
        checks[f"{name} has one 1/(q-q^-1)"] = (not red.is_laurent()) and (red * brace).is_laurent()
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks)} checks" + (f"; failed: {bad}" if bad else "")


# the five colored rows, typed independently of the engine's table
PRINTED_ROWS = {
    "[2]": "+6 [4], -2 [31], +0 [22]",
    "[11]": "+0 [22], -(-2) [211], +(-6) [1111]",
    "[3]": "+15 [6], -9 [51], +5 [42], -3 [33]",
    "[21]": "+5 [42], -3 [411], -3 [33], +(-3) [3111], +(-3) [222], -(-5) [2211]",
    "[111]": "+(-3) [222], -(-5) [2211], +(-9) [21111], -(-15) [111111]",
}


def _printed(R: str, n: int) -> RFunc:
    out = RFunc.zero()
    for item in PRINTED_ROWS[R].split(","):
        sign_exp, Q = item.strip().rsplit(" ", 1)
        sign = -1 if sign_exp[0] == "-" else 1
        k = int(sign_exp[1:].strip("()"))
        out = out + RFunc(LaurentPoly.monomial(sign, q=k * n)) * schur_star(Q)
    return out


def criterion_10():
    checks = {}
    for R in PRINTED_ROWS:
        for n in (1, 3, 5, -3):
            checks[f"{R} n={n} as printed"] = torus_2strand(n, R) == _printed(R, n)
        P = as_partition(R)
        red = torus_2strand(1, P) / schur_star(P)
        checks[f"{R} n=1 is a framing monomial"] = red == RFunc(
            LaurentPoly.monomial(1, A=P.size, q=4 * kappa(P))
        )
        checks[f"{R} transposition"] = mirror_q(torus_2strand(3, P)) == torus_2strand(3, transpose(P))
    for k in (1, 2, 3):
        s = superpoly_2strand(k)
        checks[f"superpoly k={k} positive"] = bracket_positive(s.bracket)
        checks[f"superpoly k={k} at t=q"] = s.at_t_equals_q() == torus_2strand(2 * k + 1) / schur_star([1])
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks)} checks" + (f"; failed: {bad}" if bad else "")


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


def evaluate(i: int) -> tuple[bool, str, float]:
    t0 = time.perf_counter()
    ok, detail = CRITERIA[i]()
    dt = time.perf_counter() - t0
    limit = LIMITS.get(i)
    if limit is not None and dt >= limit:
        ok = False
        detail += f"; took {dt:.1f}s, limit {limit:.0f}s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {i}: {detail} [{dt:.2f}s]"
    RESULTS[i] = line
    return ok, line, dt


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i):
    ok, line, _ = evaluate(i)
    print(line)
    assert ok, line


if __name__ == "__main__":
    for i in CRITERIA:
        print(evaluate(i)[1], flush=True)

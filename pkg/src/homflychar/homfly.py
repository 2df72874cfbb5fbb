"""Character expansion H = sum_Q h^Q S*_Q of braid closures, and closed forms."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .braid import BraidWord, closure_components, writhe
from .exactring import LaurentPoly, RFunc, bracket, eval_numeric, mirror_q, rf
from .fusion import ConsistencyError, sector_rep
from .oracle import direct_trace, direct_trace_numeric
from .partitions import Partition, as_partition, partitions_of, schur_star, schur_star_at, transpose


class NeedsReconstruction(Exception):
    """The sector lies outside the reach of sl2 (e.g. [311] at m = 5)."""


def _mono(c=1, **pw) -> RFunc:
    return RFunc(LaurentPoly.monomial(c, **pw))


# -- sector traces -------------------------------------------------------------


class _DenseSector:
    """Sector matrices with denominators cleared: M = N / d, N Laurent."""

    def __init__(self, Q: Partition):
        rep = sector_rep(Q)
        self.dim = rep.dim
        self.mats = {}
        for mu in rep.rhat:
            for sign in (1, -1):
                self.mats[(mu, sign)] = _clear(rep.generator(mu, sign))


def _clear(M: list):
    atoms: list = []
    for row in M:
        for x in row:
            need = list(x.den)
            have = list(atoms)
            for a in need:
                if a in have:
                    have.remove(a)
                else:
                    atoms.append(a)
    d = LaurentPoly.const(1)
    for a in atoms:
        d = d * a
    N = [[(x * d).laurent() for x in row] for row in M]
    return N, d


@lru_cache(maxsize=None)
def _dense(Q: Partition) -> _DenseSector:
    return _DenseSector(Q)


def _poly_matmul(X, Y):
    n = len(X)
    zero = LaurentPoly()
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for t in range(n):
                a, b = X[i][t], Y[t][j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def _two_row_trace(w: BraidWord, Q: Partition) -> LaurentPoly:
    if Q.size != w.strands:
        raise ValueError(f"|{Q}| != {w.strands}")
    if Q.size == 1:
        return LaurentPoly.const(1)
    ds = _dense(Q)
    n = ds.dim
    prod = [[LaurentPoly.const(1) if i == j else LaurentPoly() for j in range(n)] for i in range(n)]
    den = LaurentPoly.const(1)
    for mu, e in w.letters:
        N, d = ds.mats[(mu, e)]
        prod = _poly_matmul(prod, N)
        den = den * d
    tr = LaurentPoly()
    for i in range(n):
        tr = tr + prod[i][i]
    out = tr.divexact(den)
    if out is None:
        raise ConsistencyError(f"trace over {Q} is not a Laurent polynomial")
    return out


def sector_trace(w: BraidWord, Q) -> LaurentPoly:
    """h^Q: trace of the word over the multiplicity space of Q."""
    Q = as_partition(Q)
    if Q.size != w.strands:
        raise ValueError(f"|{Q}| = {Q.size} but the braid has {w.strands} strands")
    if len(Q) <= 2:
        return _two_row_trace(w, Q)
    Qt = transpose(Q)
    if len(Qt) <= 2:
        return mirror_q(_two_row_trace(w, Qt)).laurent()
    raise NeedsReconstruction(f"sector {Q.short()} needs reconstruction")


def reconstruct_311(w: BraidWord, known: dict, N: int = 3) -> LaurentPoly:
    """Solve the N = 3 oracle identity for the one sector sl2 cannot reach."""
    target = Partition([3, 1, 1])
    total = rf(direct_trace(w, N))
    for Q, h in known.items():
        Q = as_partition(Q)
        if Q == target:
            continue
        total = total - rf(h) * schur_star_at(Q, N)
    alpha = total / schur_star_at(target, N)
    out = alpha.to_laurent()
    if out is None:
        raise ConsistencyError(f"[311] coefficient is not Laurent: {alpha}")
    return out


# -- assembly ------------------------------------------------------------------


@dataclass(frozen=True)
class HomflyResult:
    word: BraidWord
    coefficients: dict
    raw: RFunc
    reduced: RFunc
    invariant: RFunc
    components: int
    writhe: int
    reconstructed: tuple = field(default=())

    @property
    def strands(self) -> int:
        return self.word.strands

    def h(self, Q) -> LaurentPoly:
        return self.coefficients[as_partition(Q)]

    def normalization(self, which: str) -> RFunc:
        return {"raw": self.raw, "reduced": self.reduced, "invariant": self.invariant}[which]

    def to_json(self) -> dict:
        return {
            "word": self.word.signed(),
            "strands": self.strands,
            "writhe": self.writhe,
            "components": self.components,
            "h": {Q.short(): h.to_json() for Q, h in self.coefficients.items()},
            "raw": self.raw.to_json(),
            "reduced": self.reduced.to_json(),
            "invariant": self.invariant.to_json(),
        }


def assemble(coefficients: dict) -> RFunc:
    raw = RFunc.zero()
    for Q, h in coefficients.items():
        if h:
            raw = raw + rf(h) * schur_star(Q)
    return raw


def homfly(w: BraidWord, reconstruct: bool = True, spot_check: bool = True) -> HomflyResult:
    """Compute every h^Q and the three normalisations of the closure of w."""
    m = w.strands
    if m > 5:
        raise ValueError("supported envelope is m <= 5 strands")
    coeffs: dict = {}
    pending = []
    for Q in partitions_of(m):
        try:
            coeffs[Q] = sector_trace(w, Q)
        except NeedsReconstruction:
            pending.append(Q)
    rebuilt = []
    for Q in pending:
        if not reconstruct or Q != Partition([3, 1, 1]):
            raise NeedsReconstruction(f"sector {Q.short()} was not computed")
        coeffs[Q] = reconstruct_311(w, coeffs)
        rebuilt.append(Q)
    coeffs = {Q: coeffs[Q] for Q in partitions_of(m)}
    raw = assemble(coeffs)
    if rebuilt and spot_check:
        _spot_check(w, raw)
    reduced = raw / schur_star([1])
    wr = writhe(w)
    invariant = reduced * _mono(A=-wr)
    comps = closure_components(w)
    if comps == 1 and reduced.to_laurent() is None:
        raise ConsistencyError("reduced polynomial of a knot is not Laurent")
    return HomflyResult(w, coeffs, raw, reduced, invariant, comps, wr, tuple(rebuilt))


def _spot_check(w: BraidWord, raw: RFunc, N: int = 4, samples: int = 3, seed: int = 7):
    """Guard the reconstruction against coincidences at N = 3."""
    rng = random.Random(seed)
    qs = [complex(rng.uniform(1.05, 1.6), rng.uniform(-0.3, 0.3)) for _ in range(samples)]
    got = direct_trace_numeric(w, N, qs)
    for q, g in zip(qs, got):
        want = eval_numeric(raw, {"A": q ** N, "q": q})
        if abs(want - g) > 1e-7 * max(abs(g), 1.0):
            raise ConsistencyError(f"N={N} spot check failed at q={q}: {want} vs {g}")


def a_rows(poly) -> dict:
    """Coefficient of each power of A as a Laurent polynomial in q."""
    p = rf(poly).laurent()
    rows: dict = {}
    for e, c in p.items():
        key = e[0]
        rows[key] = rows.get(key, LaurentPoly()) + LaurentPoly({(0, e[1], e[2]): c})
    return dict(sorted(rows.items(), reverse=True))


def render_a_grouped(poly) -> str:
    """e.g. "A*(q^2+q^-2) - A^-1"."""
    rows = a_rows(poly)
    parts = []
    for k, row in rows.items():
        amon = "" if k == 0 else ("A" if k == 1 else f"A^{k}")
        neg = False
        if len(row) == 1:
            (e, c), = row.items()
            neg = c < 0
            inner = (-row if neg else row).render(compact=True)
            if not amon:
                body = inner
            elif inner == "1":
                body = amon
            else:
                body = f"{amon}*{inner}"
        else:
            inner = row.render(compact=True)
            body = f"({inner})" if not amon else f"{amon}*({inner})"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) or "0"


# -- closed forms ----------------------------------------------------------------

# Colored 2-strand torus rows as (sign, printed exponent per n, Q).  For odd n
# these are exact; a [321] pair with opposite eigenvalues cancels there.
COLORED_ROWS = {
    Partition([1]): ((1, 1, "[2]"), (-1, -1, "[11]")),
    Partition([2]): ((1, 6, "[4]"), (-1, 2, "[31]"), (1, 0, "[22]")),
    Partition([1, 1]): ((1, 0, "[22]"), (-1, -2, "[211]"), (1, -6, "[1111]")),
    Partition([3]): ((1, 15, "[6]"), (-1, 9, "[51]"), (1, 5, "[42]"), (-1, 3, "[33]")),
    Partition([2, 1]): (
        (1, 5, "[42]"),
        (-1, 3, "[411]"),
        (-1, 3, "[33]"),
        (1, -3, "[3111]"),
        (1, -3, "[222]"),
        (-1, -5, "[2211]"),
    ),
    Partition([1, 1, 1]): ((1, -3, "[222]"), (-1, -5, "[2211]"), (1, -9, "[21111]"), (-1, -15, "[111111]")),
}


def torus_2strand(n: int, R="[1]") -> RFunc:
    """sum over Q in R (x) R of sign * q^(n * kappa_Q) * S*_Q (raw form)."""
    R = as_partition(R)
    if R not in COLORED_ROWS:
        raise ValueError(f"unsupported colour {R}")
    if R == Partition([1]):
        return _mono(q=n) * schur_star([2]) + _mono((-1) ** (n % 2), q=-n) * schur_star([1, 1])
    out = RFunc.zero()
    for sign, k, Q in COLORED_ROWS[R]:
        out = out + _mono(sign, q=k * n) * schur_star(Q)
    return out


def torus_3strand(n: int) -> RFunc:
    c = 2 if n % 3 == 0 else -1
    return _mono(q=2 * n) * schur_star([3]) + RFunc(c) * schur_star([2, 1]) + _mono(q=-2 * n) * schur_star([1, 1, 1])


@dataclass(frozen=True)
class SuperResult:
    k: int
    poly: RFunc  # P / M1* in (A, q, t)
    bracket: LaurentPoly

    def at_t_equals_q(self) -> RFunc:
        return self.poly.substitute({"t": LaurentPoly.var("q")})


def superpoly_2strand(k: int) -> SuperResult:
    """Superpolynomial of the torus knot [2, 2k+1], divided by M1*."""
    if k < 0:
        raise ValueError("k must be non-negative")
    n = 2 * k + 1
    x = LaurentPoly({(0, 2, 2): 1})  # q^2 t^2
    geo = lambda j: sum((x ** i for i in range(j)), LaurentPoly())  # noqa: E731
    br = LaurentPoly({(2, 0, 0): -1}) * geo(k + 1) + LaurentPoly({(0, 0, 2): 1}) * geo(k)
    poly = RFunc(LaurentPoly({(-1, 1, -n): -1}) * br)
    return SuperResult(k, poly, br)


def superpoly_from_dimensions(k: int) -> RFunc:
    """The same quantity assembled from the deformed eigenvalues and dimensions."""
    n = 2 * k + 1
    m2 = RFunc(bracket(1, 1), [LaurentPoly({(0, 1, 1): 1}) - LaurentPoly({(0, -1, -1): 1})])
    m11 = RFunc(bracket(1, 0, -1), [bracket(0, 0, 2)])
    return _mono(q=n) * m2 - RFunc(LaurentPoly({(0, 1, -n - 1): 1})) * m11


def bracket_positive(br: LaurentPoly) -> bool:
    """All coefficients positive integers as a polynomial in (-A^2, q, t)."""
    for e, c in br.items():
        if e[0] % 2:
            return False
        sign = (-1) ** (e[0] // 2)
        if not (isinstance(c, int) and c * sign > 0):
            return False
    return True


def unknot_identities() -> dict:
    """The two Schur identities forced by the trivial 3-strand braids."""
    s1 = schur_star([1])
    s3, s21, s111 = schur_star([3]), schur_star([2, 1]), schur_star([1, 1, 1])
    q, qi = _mono(q=1), _mono(q=-1)
    id1_l = s3 + RFunc(2) * s21 + s111
    id1_r = s1 * s1 * s1
    id2_l = q * s3 + (q - qi) * s21 - qi * s111
    id2_r = s1 * (q * schur_star([2]) - qi * schur_star([1, 1]))
    return {
        "trace of identity": id1_l == id1_r,
        "trace of one crossing": id2_l == id2_r,
        "trace of identity, q -> -1/q": mirror_q(id1_l) == mirror_q(id1_r),
        "trace of one crossing, q -> -1/q": mirror_q(id2_l) == mirror_q(id2_r),
    }

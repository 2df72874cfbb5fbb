import numpy as np
import pytest

from homflychar.braid import BraidWord, parse_tuple_text, stabilize
from homflychar.exactring import DomainError, LaurentPoly, eval_numeric, qint, rf, substitute
from homflychar.homfly import homfly
from homflychar.oracle import check_r_matrix, direct_trace, direct_trace_numeric
from homflychar.partitions import schur_star

q = LaurentPoly.var("q")


def dense(N):
    M = check_r_matrix(N)
    return [[M.get((i, j), LaurentPoly()) for j in range(N * N)] for i in range(N * N)]


def kron_id(M, left, right):
    """Embed an (N^2 x N^2) polynomial matrix acting on two neighbouring slots."""
    n = len(M)
    size = left * n * right
    out = [[LaurentPoly() for _ in range(size)] for _ in range(size)]
    for a in range(left):
        for i in range(n):
            for j in range(n):
                if not M[i][j]:
                    continue
                for b in range(right):
                    out[(a * n + i) * right + b][(a * n + j) * right + b] = M[i][j]
    return out


def matmul(X, Y):
    n = len(X)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = LaurentPoly()
            for k in range(n):
                if X[i][k] and Y[k][j]:
                    acc = acc + X[i][k] * Y[k][j]
            row.append(acc)
        out.append(row)
    return out


@pytest.mark.parametrize("N", [2, 3])
def test_yang_baxter(N):
    R = dense(N)
    R1, R2 = kron_id(R, 1, N), kron_id(R, N, 1)
    assert matmul(matmul(R1, R2), R1) == matmul(matmul(R2, R1), R2)


@pytest.mark.parametrize("N", [2, 3])
def test_far_commutativity(N):
    R = dense(N)
    R1, R3 = kron_id(R, 1, N * N), kron_id(R, N * N, 1)
    assert matmul(R1, R3) == matmul(R3, R1)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_eigenvalues(N):
    x = 1.3
    M = np.array([[eval_numeric(p, {"q": x}).real if p else 0.0 for p in row] for row in dense(N)])
    ev = np.sort(np.linalg.eigvals(M).real)
    d_plus, d_minus = N * (N + 1) // 2, N * (N - 1) // 2
    want = np.sort([x] * d_plus + [-1 / x] * d_minus)
    assert np.allclose(ev, want)


def test_calibration():
    assert direct_trace(BraidWord.from_signed(2, [1]), 2) == q ** 3 + q


@pytest.mark.parametrize("m,N", [(1, 2), (3, 2), (2, 3), (4, 3)])
def test_unlink(m, N):
    assert direct_trace(BraidWord(m, ()), N) == qint(N) ** m


def test_trefoil_at_n2():
    raw = rf(q ** 3) * schur_star([2]) - rf(LaurentPoly.var("q", -3)) * schur_star([1, 1])
    assert rf(direct_trace(BraidWord.from_signed(2, [1, 1, 1]), 2)) == substitute(raw, {"A": q ** 2})


def test_exact_envelope():
    with pytest.raises(DomainError):
        direct_trace(BraidWord(2, ()), 4)


def test_numeric_unknot():
    (v,) = direct_trace_numeric(BraidWord.from_signed(1, []), 4, [1.3])
    assert v == pytest.approx(eval_numeric(qint(4), {"q": 1.3}))


def test_numeric_matches_exact():
    w = BraidWord.from_signed(2, [1, 1, 1])
    (v,) = direct_trace_numeric(w, 2, [1.1])
    assert v == pytest.approx(eval_numeric(direct_trace(w, 2), {"q": 1.1}), rel=1e-9)


@pytest.mark.parametrize("text,m", [("(1,-1,1,-1)", 3), ("(2,3,1,4)", 3), ("(1,-1,1,1,-1,-2)", 4)])
@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("N", [2, 3])
def test_markov(text, m, sign, N):
    w = parse_tuple_text(m, text)
    before = direct_trace(w, N)
    after = direct_trace(stabilize(w, sign), N)
    assert after == before * LaurentPoly.monomial(1, q=sign * N)


def test_agrees_with_engine_on_a_word():
    w = parse_tuple_text(4, "(1,-1,1,1,-1,-2)")
    raw = homfly(w).raw
    for N in (2, 3):
        assert rf(direct_trace(w, N)) == substitute(raw, {"A": q ** N})


def test_sparse_application_never_builds_full_operator(monkeypatch):
    import homflychar.oracle as oracle

    seen = []
    real = oracle._apply

    def spy(X, N, m, mu, sign, qshift):
        seen.append(X.shape)
        return real(X, N, m, mu, sign, qshift)

    monkeypatch.setattr(oracle, "_apply", spy)
    direct_trace(BraidWord.from_signed(5, [1, 2, 3, 4]), 3)
    assert all(s[1] <= oracle.BATCH for s in seen)


def test_no_permutation_dependence():
    # conjugate words give the same trace
    w = [1, -2, 1, 2]
    traces = set()
    for k in range(len(w)):
        rot = w[k:] + w[:k]
        traces.add(direct_trace(BraidWord.from_signed(3, rot), 2))
    assert len(traces) == 1

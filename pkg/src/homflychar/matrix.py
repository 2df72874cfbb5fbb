"""Dense exact linear algebra over RFunc entries (small matrices only)."""

from __future__ import annotations

from .exactring import RFunc, rf


def zeros(n: int, m: int | None = None) -> list:
    m = n if m is None else m
    return [[RFunc.zero() for _ in range(m)] for _ in range(n)]


def identity(n: int) -> list:
    out = zeros(n)
    for i in range(n):
        out[i][i] = RFunc.one()
    return out


def diag(entries) -> list:
    out = zeros(len(entries))
    for i, e in enumerate(entries):
        out[i][i] = rf(e)
    return out


def transpose(M: list) -> list:
    return [list(r) for r in zip(*M)] if M else []


def matmul(X: list, Y: list) -> list:
    n, k = len(X), len(Y)
    m = len(Y[0]) if Y else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = RFunc.zero()
            for t in range(k):
                a = X[i][t]
                if a.is_zero():
                    continue
                b = Y[t][j]
                if b.is_zero():
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def scale(M: list, c) -> list:
    c = rf(c)
    return [[x * c for x in r] for r in M]


def add(X: list, Y: list) -> list:
    return [[a + b for a, b in zip(r, s)] for r, s in zip(X, Y)]


def sub(X: list, Y: list) -> list:
    return [[a - b for a, b in zip(r, s)] for r, s in zip(X, Y)]


def equal(X: list, Y: list) -> bool:
    return len(X) == len(Y) and all(
        len(r) == len(s) and all(a == b for a, b in zip(r, s)) for r, s in zip(X, Y)
    )


def is_identity(X: list) -> bool:
    return equal(X, identity(len(X)))


def power(X: list, k: int) -> list:
    if k < 0:
        return power(inverse(X), -k)
    out = identity(len(X))
    for _ in range(k):
        out = matmul(out, X)
    return out


def trace(X: list) -> RFunc:
    acc = RFunc.zero()
    for i in range(len(X)):
        acc = acc + X[i][i]
    return acc


class SingularMatrix(ArithmeticError):
    pass


def _rref(M: list):
    """Row-reduce a copy of M; returns (rows, pivot columns)."""
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if not A[i][c].is_zero()), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def nullspace(M: list, ncols: int | None = None) -> list:
    """Basis of {x : M x = 0} as a list of column vectors."""
    cols = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return [[RFunc.one() if i == j else RFunc.zero() for i in range(cols)] for j in range(cols)]
    A, pivots = _rref(M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [RFunc.zero() for _ in range(cols)]
        v[f] = RFunc.one()
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][f]
        basis.append(v)
    return basis


def inverse(M: list) -> list:
    n = len(M)
    aug = [list(M[i]) + identity(n)[i] for i in range(n)]
    A, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in A]


def solve_left(X: list, B: list) -> list:
    """Find P with P X = B, where X is k x d of full row rank."""
    k = len(X)
    _, cols = _rref(X)
    if len(cols) != k:
        raise SingularMatrix("rows are linearly dependent")
    Xs = [[X[i][c] for c in cols] for i in range(k)]
    Bs = [[B[i][c] for c in cols] for i in range(len(B))]
    P = matmul(Bs, inverse(Xs))
    if not equal(matmul(P, X), B):
        raise SingularMatrix("inconsistent system: B is not in the row span of X")
    return P

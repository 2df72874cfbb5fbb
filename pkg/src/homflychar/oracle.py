"""Brute-force Markov trace of a braid in the N^m-dimensional tensor power.

Check-R on V (x) V with basis e_0..e_{N-1}:

    e_i e_i -> q e_i e_i
    e_i e_j -> e_j e_i + (q - 1/q) e_i e_j    (i < j)
    e_i e_j -> e_j e_i                         (i > j)

and R^-1 = R - (q - 1/q).  Slot i of the trace carries weight q^(N-1-2i).

Exact mode keeps one integer coefficient array per power of q.  Basis
columns are pushed through the word in small batches, so no N^m x N^m
operator is ever stored.
"""

from __future__ import annotations

import numpy as np

from .braid import BraidWord
from .exactring import DomainError, LaurentPoly

EXACT_N = (1, 2, 3)
BATCH = 32


def _apply(X: np.ndarray, N: int, m: int, mu: int, sign: int, qshift) -> np.ndarray:
    """Apply check-R (sign=+1) or its inverse to slots (mu, mu+1) of a batch.

    X has shape (N**m, ...).  ``qshift(Y, k)`` multiplies Y by q^k.
    """
    rest = X.shape[1:]
    Y = X.reshape((N ** (mu - 1), N, N, N ** (m - mu - 1)) + rest)
    out = np.zeros_like(Y)
    for i in range(N):
        src = Y[:, i, i]
        out[:, i, i] += qshift(src, 1) if sign > 0 else qshift(src, -1)
        for j in range(i + 1, N):
            lo = Y[:, i, j]
            hi = Y[:, j, i]
            out[:, j, i] += lo
            out[:, i, j] += hi
            if sign > 0:
                out[:, i, j] += qshift(lo, 1) - qshift(lo, -1)
            else:
                out[:, j, i] -= qshift(hi, 1) - qshift(hi, -1)
    return out.reshape(X.shape)


def _check_envelope(w: BraidWord, N: int):
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if w.strands > 6:
        raise DomainError("oracle envelope is m <= 6")


def direct_trace(w: BraidWord, N: int) -> LaurentPoly:
    """Exact weighted trace of the braid at A = q^N (N in 1..3)."""
    _check_envelope(w, N)
    if N not in EXACT_N:
        raise DomainError(f"exact oracle supports N in {EXACT_N}; use direct_trace_numeric")
    m = w.strands
    dim = N ** m
    letters = w.letters
    pad = len(letters) + m * N + 2
    width = 2 * pad + 1

    def qshift(Y, k):
        Z = np.zeros_like(Y)
        if k > 0:
            Z[..., k:] = Y[..., :-k]
        else:
            Z[..., :k] = Y[..., -k:]
        return Z

    digits = np.array(np.unravel_index(np.arange(dim), (N,) * m)).T if m else np.zeros((1, 0), int)
    weight_exp = ((N - 1) - 2 * digits).sum(axis=1) if m else np.zeros(1, int)
    total = np.zeros(width, dtype=object)
    for start in range(0, dim, BATCH):
        cols = np.arange(start, min(dim, start + BATCH))
        X = np.zeros((dim, len(cols), width), dtype=np.int64)
        X[cols, np.arange(len(cols)), pad] = 1
        # operator product s_1 s_2 ... s_k applied to a column: last letter first
        for mu, e in reversed(letters):
            X = _apply(X, N, m, mu, e, qshift)
        if np.abs(X).max(initial=0) >= 2**62:
            raise OverflowError("coefficient overflow in exact oracle")
        diag = X[cols, np.arange(len(cols))]
        for row, c in zip(diag, cols):
            total += np.roll(row, int(weight_exp[c])).astype(object)
    return LaurentPoly({(0, k - pad, 0): int(c) for k, c in enumerate(total) if c})


def direct_trace_numeric(w: BraidWord, N: int, q_samples) -> list[complex]:
    """Floating evaluation of the same trace at each sample q."""
    _check_envelope(w, N)
    m = w.strands
    dim = N ** m
    digits = np.array(np.unravel_index(np.arange(dim), (N,) * m)).T
    weight_exp = ((N - 1) - 2 * digits).sum(axis=1)
    out = []
    for q in q_samples:
        q = complex(q)
        if abs(q) < 1e-12:
            raise DomainError("q = 0 is not a valid sample")
        qs = {1: q, -1: 1 / q}

        def qshift(Y, k):
            return Y * qs[k]

        acc = 0j
        for start in range(0, dim, BATCH * 8):
            cols = np.arange(start, min(dim, start + BATCH * 8))
            X = np.zeros((dim, len(cols)), dtype=complex)
            X[cols, np.arange(len(cols))] = 1
            for mu, e in reversed(w.letters):
                X = _apply(X, N, m, mu, e, qshift)
            acc += np.sum(X[cols, np.arange(len(cols))] * q ** weight_exp[cols])
        out.append(acc)
    return out


def check_r_matrix(N: int):
    """Full N^2 x N^2 check-R as a dict {(row, col): LaurentPoly} (tests only)."""
    q = LaurentPoly.var("q")
    qi = LaurentPoly.var("q", -1)
    M = {}
    for i in range(N):
        for j in range(N):
            col = i * N + j
            if i == j:
                M[(col, col)] = q
            else:
                M[(j * N + i, col)] = LaurentPoly.const(1)
                if i < j:
                    M[(col, col)] = q - qi
    return M

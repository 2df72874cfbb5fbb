"""Young diagrams, standard-tableau paths and the quantum hook-content formula."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .exactring import LaurentPoly, RFunc, DomainError, bracket, qint


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.  ``Partition()`` is empty."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accept "[3,1,1]", "[311]", "3,1,1" or "311"."""
        body = text.strip().strip("[]() ")
        if not body:
            return cls()
        if "," in body or " " in body:
            return cls(int(x) for x in re.split(r"[,\s]+", body) if x)
        return cls(int(ch) for ch in body)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def rows(self) -> int:
        return len(self)

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def add_box(self, row: int) -> "Partition":
        parts = list(self) + [0]
        parts[row] += 1
        return Partition(p for p in parts if p)

    def addable_rows(self) -> list[int]:
        out = []
        for i in range(len(self) + 1):
            prev = self[i - 1] if i > 0 else None
            cur = self[i] if i < len(self) else 0
            if prev is None or prev > cur:
                out.append(i)
        return out

    def __str__(self):
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self):
        return f"Partition({str(self)})"

    def short(self) -> str:
        """Compact label like "[311]" (parts are single digits here)."""
        return "[" + "".join(str(p) for p in self) + "]"


def as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(x)


def transpose(Q) -> Partition:
    Q = as_partition(Q)
    if not Q:
        return Q
    return Partition(sum(1 for p in Q if p > j) for j in range(Q[0]))


def nu(Q) -> int:
    Q = as_partition(Q)
    return sum(i * p for i, p in enumerate(Q))


def kappa(Q) -> int:
    Q = as_partition(Q)
    twice = sum(p * (p + 1 - 2 * (i + 1)) for i, p in enumerate(Q))
    k = twice // 2
    assert k == nu(transpose(Q)) - nu(Q)
    return k


def hook(Q, i: int, j: int) -> int:
    Q = as_partition(Q)
    return Q[i] - j + transpose(Q)[j] - i - 1


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in decreasing lexicographic order."""
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def _schur_star(Q: Partition) -> RFunc:
    num = LaurentPoly.const(1)
    den = []
    for i, j in Q.cells():
        num = num * bracket(1, j - i)
        den.append(bracket(0, hook(Q, i, j)))
    return RFunc(num, den)


def schur_star(Q) -> RFunc:
    """S*_Q: product over cells of {A q^(j-i)} / {q^hook}."""
    return _schur_star(as_partition(Q))


@lru_cache(maxsize=None)
def _schur_star_at(Q: Partition, N: int) -> RFunc:
    if len(Q) > N:
        return RFunc.zero()
    num = LaurentPoly.const(1)
    den = LaurentPoly.const(1)
    for i, j in Q.cells():
        num = num * qint(N + j - i)
        den = den * qint(hook(Q, i, j))
    return RFunc(num, [den])


def schur_star_at(Q, N: int) -> RFunc:
    """S*_Q at A = q^N: product of [N + j - i] / [hook]."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    return _schur_star_at(as_partition(Q), N)


@dataclass(frozen=True)
class FusionPath:
    shapes: tuple

    def __post_init__(self):
        for k, s in enumerate(self.shapes):
            if s.size != k + 1:
                raise DomainError(f"shape {s} at step {k + 1} has wrong size")
        for a, b in zip(self.shapes, self.shapes[1:]):
            if not _adds_one_box(a, b):
                raise DomainError(f"{a} -> {b} is not a one-box step")

    @property
    def end(self) -> Partition:
        return self.shapes[-1]

    def __len__(self):
        return len(self.shapes)

    def __str__(self):
        return "<".join(s.short() for s in self.shapes)

    @classmethod
    def parse(cls, text: str) -> "FusionPath":
        return cls(tuple(Partition.parse(t) for t in text.split("<")))


def _adds_one_box(a: Partition, b: Partition) -> bool:
    if b.size != a.size + 1 or len(b) < len(a):
        return False
    diff = [y - x for x, y in zip(list(a) + [0] * (len(b) - len(a)), b)]
    return sorted(diff) == [0] * (len(diff) - 1) + [1]


def path_sort_key(shapes) -> tuple:
    """Descending order: compare from the last shape backwards, larger first."""
    return tuple(tuple(-p for p in s) + (0,) for s in reversed(shapes))


def syt_paths(Q, m: int | None = None) -> list[FusionPath]:
    """Standard tableaux of shape Q as shape sequences, in layout order."""
    Q = as_partition(Q)
    if m is None:
        m = Q.size
    if Q.size != m:
        raise DomainError(f"|{Q}| = {Q.size} but m = {m}")
    return list(_syt_paths(Q))


@lru_cache(maxsize=None)
def _syt_paths(Q: Partition) -> tuple:
    if Q.size == 0:
        return ()
    if Q.size == 1:
        return (FusionPath((Q,)),)
    out = []
    for i in range(len(Q)):
        nxt = Q[i + 1] if i + 1 < len(Q) else 0
        if Q[i] > nxt:
            parts = list(Q)
            parts[i] -= 1
            smaller = Partition(p for p in parts if p)
            for p in _syt_paths(smaller):
                out.append(FusionPath(p.shapes + (Q,)))
    out.sort(key=lambda p: path_sort_key(p.shapes))
    return tuple(out)


def multiplicity(Q, m: int | None = None) -> int:
    return len(syt_paths(Q, m))

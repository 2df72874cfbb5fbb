"""Braid words, the grouped exponent-tuple notation, writhe and closure."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple  # ((mu, +1 | -1), ...)

    def __post_init__(self):
        if self.strands < 1:
            raise BraidParseError("need at least one strand")
        for mu, e in self.letters:
            if not 1 <= mu < self.strands:
                raise BraidParseError(f"generator {mu} out of range for {self.strands} strands")
            if e not in (1, -1):
                raise BraidParseError(f"letter exponent must be +-1, got {e}")

    @classmethod
    def from_letters(cls, strands: int, letters: Iterable) -> "BraidWord":
        return cls(strands, tuple((int(mu), int(e)) for mu, e in letters))

    @classmethod
    def from_signed(cls, strands: int, ints: Iterable[int]) -> "BraidWord":
        """Signed generator list: 2 means sigma_2, -1 means sigma_1^-1."""
        letters = []
        for k in ints:
            if k == 0:
                raise BraidParseError("0 is not a generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(strands, tuple(letters))

    def signed(self) -> list[int]:
        return [mu * e for mu, e in self.letters]

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(k) for k in self.signed()) or "(empty)"

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((mu, -e) for mu, e in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((mu, -e) for mu, e in self.letters))

    def flipped(self) -> "BraidWord":
        """Relabel strands right to left: sigma_i -> sigma_(m-i)."""
        return BraidWord(self.strands, tuple((self.strands - mu, e) for mu, e in self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise BraidParseError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)


def parse_tuples(m: int, groups: Sequence[Sequence[int]]) -> BraidWord:
    """(a, b, c, ...) per group -> sigma_1^a sigma_2^b sigma_3^c ..."""
    letters = []
    for g in groups:
        if len(g) != m - 1:
            raise BraidParseError(f"group {tuple(g)} should have {m - 1} entries")
        for mu, a in enumerate(g, start=1):
            s = 1 if a > 0 else -1
            letters.extend([(mu, s)] * abs(int(a)))
    return BraidWord(m, tuple(letters))


def parse_tuple_text(m: int, text: str) -> BraidWord:
    """Parse "(1,-1|1,-3)" or a flat "(1,-1,1,-3)"; flat lists are cut into
    groups of m-1."""
    body = text.strip()
    if body.startswith(("(", "{", "[")):
        body = body[1:]
    if body.endswith((")", "}", "]")):
        body = body[:-1]
    body = body.rstrip(":").strip()
    if not body:
        return BraidWord(m, ())
    try:
        chunks = [[int(x) for x in re.split(r"[,\s]+", c.strip()) if x] for c in body.split("|")]
    except ValueError as exc:
        raise BraidParseError(f"bad tuple text {text!r}") from exc
    if len(chunks) == 1:
        flat = chunks[0]
        if m < 2 or len(flat) % (m - 1):
            raise BraidParseError(f"{len(flat)} entries do not split into groups of {m - 1}")
        chunks = [flat[i:i + m - 1] for i in range(0, len(flat), m - 1)]
    return parse_tuples(m, chunks)


def parse_word_text(m: int, text: str) -> BraidWord:
    """Whitespace separated signed generators, e.g. "1 -2 1 -2"."""
    try:
        ints = [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise BraidParseError(f"bad word {text!r}") from exc
    return BraidWord.from_signed(m, ints)


def to_tuples(w: BraidWord) -> list[tuple]:
    """Inverse of parse_tuples for words whose runs fit the cyclic pattern."""
    m = w.strands
    runs: list[tuple[int, int]] = []
    for mu, e in w.letters:
        if runs and runs[-1][0] == mu and (runs[-1][1] > 0) == (e > 0):
            runs[-1] = (mu, runs[-1][1] + e)
        else:
            runs.append((mu, e))
    groups = []
    cur = [0] * (m - 1)
    pos = 0
    for mu, a in runs:
        while mu - 1 < pos or cur[mu - 1] != 0:
            groups.append(tuple(cur))
            cur = [0] * (m - 1)
            pos = 0
        cur[mu - 1] = a
        pos = mu
    if any(cur) or not groups:
        groups.append(tuple(cur))
    return groups


def render_tuples(w: BraidWord) -> str:
    return "(" + "|".join(",".join(str(a) for a in g) for g in to_tuples(w)) + ")"


def writhe(w: BraidWord) -> int:
    return sum(e for _, e in w.letters)


def permutation(w: BraidWord) -> list[int]:
    perm = list(range(w.strands))
    for mu, _ in w.letters:
        perm[mu - 1], perm[mu] = perm[mu], perm[mu - 1]
    return perm


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def stabilize(w: BraidWord, sign: int) -> BraidWord:
    """Markov stabilisation: append sigma_m^sign on a new strand."""
    if sign not in (1, -1):
        raise BraidParseError("sign must be +1 or -1")
    return BraidWord(w.strands + 1, w.letters + ((w.strands, sign),))


def torus_word(m: int, n: int) -> BraidWord:
    """(sigma_1 ... sigma_(m-1))^n; negative n gives the mirror."""
    s = 1 if n >= 0 else -1
    return BraidWord(m, tuple((mu, s) for _ in range(abs(n)) for mu in range(1, m)))

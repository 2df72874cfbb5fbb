"""Exact scalars: sparse Laurent polynomials in (A, q, t) and rational functions.

A :class:`LaurentPoly` is a map from integer exponent triples to rational
coefficients.  An :class:`RFunc` is a Laurent numerator over a multiset of
denominator atoms; an atom is a genuine polynomial normalized so that every
variable has minimal exponent zero and the lex-leading coefficient is one.
Units (monomials times constants) always live in the numerator.
"""

from __future__ import annotations

import ast
import cmath
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

VARS = ("A", "q", "t")
_NV = len(VARS)
_ZERO_EXP = (0,) * _NV

# Exact rational point used for hashing; equality is cross-multiplication,
# so hashes must only depend on the value.
_HASH_POINT = (Fraction(11, 5), Fraction(7, 3), Fraction(13, 7))


class DomainError(ValueError):
    """Raised for arithmetic outside an operation's domain."""


def _norm_coeff(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def _var_index(name: str) -> int:
    try:
        return VARS.index(name)
    except ValueError:
        raise DomainError(f"unknown variable {name!r}") from None


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    if len(e) != _NV:
                        e = tuple(e) + (0,) * (_NV - len(e))
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # terms already clean: no zeros, normalized coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def monomial(cls, c=1, **powers: int) -> "LaurentPoly":
        e = [0] * _NV
        for name, k in powers.items():
            e[_var_index(name)] = k
        return cls({tuple(e): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial(1, **{name: power})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise DomainError(f"{self} is not constant")
        return self._terms.get(_ZERO_EXP, 0)

    def variables(self) -> tuple[str, ...]:
        used = [False] * _NV
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(VARS, used) if u)

    def min_exponents(self) -> tuple[int, ...]:
        es = list(self._terms)
        return tuple(min(e[i] for e in es) for i in range(_NV))

    def max_exponents(self) -> tuple[int, ...]:
        es = list(self._terms)
        return tuple(max(e[i] for e in es) for i in range(_NV))

    def leading_term(self) -> tuple[tuple, object]:
        e = max(self._terms)
        return e, self._terms[e]

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o._terms) > len(self._terms):
            big, small = o._terms, self._terms
        else:
            big, small = self._terms, o._terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm_coeff(v)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: _norm_coeff(c * other) for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise DomainError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self._terms.items()
            return LaurentPoly({tuple(-x * -k for x in e): Fraction(1, 1) / Fraction(c) ** (-k)})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        s = tuple(exps)
        return LaurentPoly._raw(
            {(e[0] + s[0], e[1] + s[1], e[2] + s[2]): c for e, c in self._terms.items()}
        )

    def scale(self, c) -> "LaurentPoly":
        return self * c

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, RFunc):
                return other == self
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Return ``self / other`` if the division is exact, else ``None``."""
        if other.is_zero():
            raise DomainError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly._raw({})
        if other.is_monomial():
            (e, c), = other._terms.items()
            inv = Fraction(1) / c
            return LaurentPoly._raw(
                {
                    (x[0] - e[0], x[1] - e[1], x[2] - e[2]): _norm_coeff(v * inv)
                    for x, v in self._terms.items()
                }
            )
        # shift both to genuine polynomials, then lex-leading-term division
        smin = self.min_exponents()
        dmin = other.min_exponents()
        num = dict(self.shift(tuple(-x for x in smin))._terms)
        den = other.shift(tuple(-x for x in dmin))
        dle, dlc = den.leading_term()
        dterms = [(e, c) for e, c in den._terms.items() if e != dle]
        nmax = max(num)
        quot = {}
        while num:
            le = max(num)
            qe = (le[0] - dle[0], le[1] - dle[1], le[2] - dle[2])
            if min(qe) < 0:
                return None
            qc = Fraction(num.pop(le)) / dlc
            qc = _norm_coeff(qc)
            quot[qe] = qc
            for e, c in dterms:
                k = (qe[0] + e[0], qe[1] + e[1], qe[2] + e[2])
                v = num.get(k, 0) - qc * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        del nmax
        back = tuple(s - d for s, d in zip(smin, dmin))
        return LaurentPoly._raw(quot).shift(back)

    # -- evaluation & substitution ----------------------------------------

    def evaluate(self, point: Mapping[str, object]):
        """Evaluate at a point; variables absent from ``point`` must not occur."""
        vals = [point.get(v) for v in VARS]
        total = 0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise DomainError(f"no value given for {VARS[i]}")
                    term = term * vals[i] ** k
            total = total + term
        return total

    def substitute(self, binding: Mapping[str, "LaurentPoly | int | Fraction"]) -> "RFunc":
        """Substitute variables by Laurent polynomials; returns an exact RFunc."""
        images = []
        for i, v in enumerate(VARS):
            if v in binding:
                img = binding[v]
                if not isinstance(img, LaurentPoly):
                    img = LaurentPoly.const(img)
                images.append(img)
            else:
                images.append(None)
        if all(img is None or img.is_monomial() for img in images):
            return RFunc(self._subst_monomial(images))
        total = RFunc.zero()
        cache: dict = {}
        for e, c in self._terms.items():
            term = RFunc(LaurentPoly.const(c))
            rest = [0] * _NV
            for i, k in enumerate(e):
                if not k:
                    continue
                if images[i] is None:
                    rest[i] = k
                    continue
                key = (i, k)
                if key not in cache:
                    base = RFunc(images[i])
                    cache[key] = base ** k
                term = term * cache[key]
            total = total + term * RFunc(LaurentPoly.monomial(1, **dict(zip(VARS, rest))))
        return total

    def _subst_monomial(self, images) -> "LaurentPoly":
        mons = []
        for img in images:
            if img is None:
                mons.append(None)
            else:
                (me, mc), = img._terms.items()
                if mc == 0:
                    raise DomainError("substitution by zero")
                mons.append((me, mc))
        out: dict = {}
        for e, c in self._terms.items():
            ne = [0] * _NV
            coeff = Fraction(c)
            for i, k in enumerate(e):
                if mons[i] is None:
                    ne[i] += k
                elif k:
                    me, mc = mons[i]
                    coeff *= Fraction(mc) ** k
                    for j in range(_NV):
                        ne[j] += me[j] * k
            t = tuple(ne)
            out[t] = out.get(t, 0) + coeff
        return LaurentPoly({e: c for e, c in out.items() if c})

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in print order: descending A, then descending q, then t."""
        return sorted(self._terms.items(), key=lambda it: it[0], reverse=True)

    def render(self, compact: bool = False) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if i == 0:
                parts.append(("-" if neg else "") + body)
            elif compact:
                parts.append(("-" if neg else "+") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"

    def to_json(self) -> dict:
        vs = self.variables()
        idx = [VARS.index(v) for v in vs]
        return {
            "vars": list(vs),
            "terms": [
                {"e": [e[i] for i in idx], "c": str(Fraction(c))}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "LaurentPoly":
        idx = [_var_index(v) for v in doc.get("vars", [])]
        terms = {}
        for t in doc["terms"]:
            e = [0] * _NV
            for i, k in zip(idx, t["e"]):
                e[i] = int(k)
            terms[tuple(e)] = Fraction(str(t["c"]))
        return cls(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.var("q")
A = LaurentPoly.var("A")
T = LaurentPoly.var("t")


def qint(k: int) -> LaurentPoly:
    """Quantum integer [k]_q = q^(k-1) + q^(k-3) + ... + q^(1-k)."""
    if k < 1:
        raise DomainError(f"quantum integer needs k >= 1, got {k}")
    return LaurentPoly({(0, k - 1 - 2 * j, 0): 1 for j in range(k)})


def bracket(a: int, b: int, c: int = 0) -> LaurentPoly:
    """{A^a q^b t^c} = A^a q^b t^c - A^-a q^-b t^-c."""
    return LaurentPoly({(a, b, c): 1}) - LaurentPoly({(-a, -b, -c): 1})


# -- univariate helpers (exact gcd in a single variable) ---------------------


def _univariate_var(p: LaurentPoly) -> int | None:
    """Index of the single variable a polynomial depends on, -1 if constant."""
    idx = -1
    for e in p._terms:
        for i, k in enumerate(e):
            if k:
                if idx not in (-1, i):
                    return None
                idx = i
    return idx


def _to_dense(p: LaurentPoly, i: int) -> list:
    # p must be a genuine polynomial in variable i
    deg = max(e[i] for e in p._terms)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p._terms.items():
        out[e[i]] = Fraction(c)
    return out


def _from_dense(coeffs: list, i: int) -> LaurentPoly:
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * _NV
            e[i] = k
            terms[tuple(e)] = c
    return LaurentPoly(terms)


def _dense_rem(a: list, b: list) -> list:
    a = a[:]
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] / lb
        off = len(a) - 1 - db
        for j in range(db + 1):
            a[off + j] -= f * b[j]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_gcd(a: list, b: list) -> list:
    while b:
        a, b = b, _dense_rem(a, b)
    return [c / a[-1] for c in a]


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """Monic gcd of two univariate genuine polynomials in the same variable.

    Returns ``None`` when the inputs are not univariate in a common variable.
    """
    ia, ib = _univariate_var(a), _univariate_var(b)
    if ia is None or ib is None:
        return None
    if ia == -1 or ib == -1:
        return ONE
    if ia != ib:
        return ONE
    return _from_dense(_dense_gcd(_to_dense(a, ia), _to_dense(b, ia)), ia)


# -- rational functions -------------------------------------------------------


def _canon_atom(p: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split p = unit * atom with atom a normalized genuine polynomial."""
    if p.is_zero():
        raise DomainError("zero denominator")
    mins = p.min_exponents()
    shifted = p.shift(tuple(-m for m in mins))
    _, lc = shifted.leading_term()
    atom = shifted * (Fraction(1) / Fraction(lc))
    unit = LaurentPoly({mins: lc})
    return unit, atom


_CYCLO: dict = {}


def _cyclotomic(d: int) -> list:
    """Dense integer coefficients of the d-th cyclotomic polynomial."""
    if d not in _CYCLO:
        num = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]
        for e in range(1, d):
            if d % e == 0:
                num = _dense_div(num, _cyclotomic(e))
        _CYCLO[d] = num
    return _CYCLO[d]


def _dense_div(a: list, b: list) -> list:
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        f = a[k + len(b) - 1] / b[-1]
        out[k] = f
        for j, c in enumerate(b):
            a[k + j] -= f * c
    return out


def _split_atoms(p: LaurentPoly) -> tuple[LaurentPoly, list]:
    """p = unit * product(atoms); univariate atoms are split into
    cyclotomic factors so that equal factors are recognised as equal."""
    unit, atom = _canon_atom(p)
    if atom.is_constant():
        return unit, []
    iv = _univariate_var(atom)
    if iv is None or iv < 0:
        return unit, [atom]
    rest = _to_dense(atom, iv)
    found = []
    d = 1
    while len(rest) > 1 and d <= 4 * len(rest) + 4:
        phi = _cyclotomic(d)
        if len(phi) > len(rest):
            break
        q, r = _dense_divmod(rest, phi)
        if not any(r):
            found.append(_from_dense(phi, iv))
            rest = q
        else:
            d += 1
    if len(rest) > 1:
        found.append(_from_dense([c / rest[-1] for c in rest], iv))
    return unit, found


def _dense_divmod(a: list, b: list):
    if len(a) < len(b):
        return [Fraction(0)], a
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        f = a[k + len(b) - 1] / b[-1]
        out[k] = f
        if f:
            for j, c in enumerate(b):
                a[k + j] -= f * c
    return out, a[: len(b) - 1]


def _inv_unit(u: LaurentPoly) -> LaurentPoly:
    (e, c), = u._terms.items()
    return LaurentPoly({tuple(-x for x in e): Fraction(1) / Fraction(c)})


def _atom_key(a: LaurentPoly):
    return (len(a), tuple(a.sorted_terms()))


def _atom_sort_key(a: LaurentPoly):
    return (len(a), tuple((e, Fraction(c)) for e, c in a.sorted_terms()))


class RFunc:
    """Exact rational function: Laurent numerator over a product of atoms."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: "LaurentPoly | int | Fraction" = 0, den: Iterable[LaurentPoly] = ()):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        atoms = []
        for d in den:
            if not isinstance(d, LaurentPoly):
                d = LaurentPoly.const(d)
            unit, parts = _split_atoms(d)
            num = num * _inv_unit(unit)
            atoms.extend(parts)
        self.num, self.den = _reduce(num, atoms)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: tuple) -> "RFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def zero(cls) -> "RFunc":
        return cls._raw(ZERO, ())

    @classmethod
    def one(cls) -> "RFunc":
        return cls._raw(ONE, ())

    @classmethod
    def frac(cls, num: LaurentPoly, den: LaurentPoly) -> "RFunc":
        return cls(num, [den])

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return not self.den

    def denominator(self) -> LaurentPoly:
        return reduce(lambda x, y: x * y, self.den, ONE)

    def to_laurent(self) -> LaurentPoly | None:
        """Lossless conversion when the value is a Laurent polynomial, else None."""
        if not self.den:
            return self.num
        return self.num.divexact(self.denominator())

    def laurent(self) -> LaurentPoly:
        p = self.to_laurent()
        if p is None:
            raise DomainError(f"{self} is not a Laurent polynomial")
        return p

    @staticmethod
    def _coerce(other) -> "RFunc | None":
        if isinstance(other, RFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RFunc._raw(other, ())
        if isinstance(other, (int, Fraction)):
            return RFunc._raw(LaurentPoly.const(other), ())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            num, den = _reduce(self.num + o.num, list(self.den))
            return RFunc._raw(num, den)
        common, ms, mo = _lcm(self.den, o.den)
        num = self.num * _prod(ms) + o.num * _prod(mo)
        num, den = _reduce(num, common)
        return RFunc._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RFunc.zero()
        if not o.den and o.num.is_monomial():
            return RFunc._raw(self.num * o.num, self.den)
        if not self.den and self.num.is_monomial():
            return RFunc._raw(self.num * o.num, o.den)
        num, den = _reduce(self.num * o.num, list(self.den) + list(o.den))
        return RFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RFunc":
        if self.num.is_zero():
            raise DomainError("division by zero")
        unit, atoms = _split_atoms(self.num)
        num = _prod(self.den) * _inv_unit(unit)
        num, den = _reduce(num, atoms)
        return RFunc._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = RFunc.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.num * _prod(o.den) == o.num * _prod(self.den)

    def __hash__(self):
        if self._hash is None:
            try:
                self._hash = hash(self.evaluate(dict(zip(VARS, _HASH_POINT))))
            except ZeroDivisionError:
                self._hash = 0
        return self._hash

    def normalize(self) -> "RFunc":
        num, den = _reduce(self.num, list(self.den))
        return RFunc._raw(num, den)

    def variables(self) -> tuple[str, ...]:
        used = set(self.num.variables())
        for d in self.den:
            used.update(d.variables())
        return tuple(v for v in VARS if v in used)

    def substitute(self, binding: Mapping) -> "RFunc":
        num = self.num.substitute(binding)
        out = num
        for d in self.den:
            img = d.substitute(binding)
            if img.is_zero():
                raise DomainError(f"denominator atom {d} vanishes under substitution")
            out = out / img
        return out

    def evaluate(self, point: Mapping):
        """Exact or floating evaluation (type follows the point values)."""
        val = self.num.evaluate(point)
        for d in self.den:
            val = val / d.evaluate(point)
        return val

    def render(self) -> str:
        if not self.den:
            return self.num.render()
        dens = []
        grouped: dict = {}
        order = []
        for d in self.den:
            k = _atom_key(d)
            if k not in grouped:
                grouped[k] = [d, 0]
                order.append(k)
            grouped[k][1] += 1
        for k in order:
            d, mult = grouped[k]
            s = f"({d.render(compact=True)})"
            dens.append(s if mult == 1 else f"{s}^{mult}")
        return f"({self.num.render()})/({'*'.join(dens)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RFunc({self.render()!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": [d.to_json() for d in self.den]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "RFunc":
        if "terms" in doc:
            return cls(LaurentPoly.from_json(doc))
        return cls(LaurentPoly.from_json(doc["num"]), [LaurentPoly.from_json(d) for d in doc["den"]])


def _prod(polys) -> LaurentPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out


def _lcm(da: tuple, db: tuple):
    """Multiset lcm of two atom tuples and the complementary multipliers."""
    only_a = list(da)
    only_b = []
    for b in db:
        for i, a in enumerate(only_a):
            if a == b:
                del only_a[i]
                break
        else:
            only_b.append(b)
    return list(da) + only_b, only_b, only_a


def _split_against(num: LaurentPoly, atom: LaurentPoly):
    """Try to cancel a factor of ``atom`` from ``num``.

    Returns (new_num, remaining_atom_or_None, cancelled) where remaining atom
    is what is left of ``atom`` in the denominator.
    """
    q = num.divexact(atom)
    if q is not None:
        return q, None, True
    g = poly_gcd(num.shift(tuple(-m for m in num.min_exponents())), atom)
    if g is None or g.is_constant():
        return num, atom, False
    nq = num.divexact(g)
    aq = atom.divexact(g)
    if nq is None or aq is None:
        return num, atom, False
    unit, rest = _canon_atom(aq)
    nq = nq * _inv_unit(unit)
    return nq, (None if rest.is_constant() else rest), True


def _reduce(num: LaurentPoly, atoms: list) -> tuple[LaurentPoly, tuple]:
    """Cancel atoms against the numerator; return sorted canonical atoms."""
    if num.is_zero():
        return ZERO, ()
    if not atoms:
        return num, ()
    if num.is_monomial():
        return num, tuple(sorted(atoms, key=_atom_sort_key))
    kept = []
    for atom in atoms:
        cur = atom
        while cur is not None:
            num, rest, cancelled = _split_against(num, cur)
            if not cancelled:
                kept.append(cur)
                break
            cur = rest
    return num, tuple(sorted(kept, key=_atom_sort_key))


# -- convenience constructors --------------------------------------------------


def rf(x) -> RFunc:
    if isinstance(x, RFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RFunc._raw(x, ())
    return RFunc(x)


def rf_arith(x: RFunc, y: RFunc, op: str) -> RFunc:
    x, y = rf(x), rf(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise DomainError("division by zero")
        return x / y
    raise DomainError(f"unknown operation {op!r}")


def substitute(x, binding: Mapping) -> RFunc:
    return rf(x).substitute(binding)


def eval_numeric(x, binding: Mapping[str, complex], rel_eps: float = 1e-12) -> complex:
    """Floating evaluation; raises if a denominator atom is numerically zero."""
    x = rf(x)
    val = complex(x.num.evaluate(binding))
    for d in x.den:
        dv = complex(d.evaluate(binding))
        scale = sum(abs(complex(c)) * abs(complex(LaurentPoly({e: 1}).evaluate(binding))) for e, c in d.items())
        if abs(dv) <= rel_eps * max(scale, 1e-300):
            raise DomainError(f"denominator {d} vanishes at {binding}")
        val /= dv
    return val


def mirror_q(x):
    """The transposition substitution q -> -1/q."""
    return rf(x).substitute({"q": LaurentPoly.monomial(-1, q=-1)})


# -- small expression language for transcribed formulas ------------------------

_ALLOWED_BIN = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_expr(text: str) -> RFunc:
    """Parse an arithmetic expression in q, A, t with qi(k) for [k]_q
    and br(a, b) for {A^a q^b}."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return RFunc(node.value)
        if isinstance(node, ast.Name):
            if node.id in VARS:
                return RFunc(LaurentPoly.var(node.id))
            raise DomainError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BIN):
            if isinstance(node.op, ast.Pow):
                k = _int_literal(node.right)
                return ev(node.left) ** k
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            return a / b
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
            args = [_int_literal(a) for a in node.args]
            if node.func.id == "qi":
                return RFunc(qint(*args))
            if node.func.id == "br":
                return RFunc(bracket(*args))
        raise DomainError(f"unsupported syntax in {text!r}")

    return ev(tree)


def _int_literal(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_literal(node.operand)
    raise DomainError("expected an integer literal")


def laurent(text: str) -> LaurentPoly:
    """Parse an expression that must be a Laurent polynomial."""
    return parse_expr(text).laurent()


def cmath_close(a: complex, b: complex, rel: float) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b), 1e-300) or cmath.isclose(a, b, rel_tol=rel)

"""Exact sparse multivariate polynomials and rational functions.

A polynomial is a dict ``{monomial: coefficient}``.  A monomial is a sorted
tuple of ``(VarId, exponent)`` pairs, and a VarId is ``(rank, family, indices)``
so that plain tuple comparison gives the fixed variable order.  Coefficients
are ``int`` or ``fractions.Fraction`` (integral fractions collapse to int).
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

FAMILIES = ("x", "y", "z", "t", "u", "q", "qij", "p", "h", "a", "b", "e",
            "α", "β", "λ")
_RANK = {f: r for r, f in enumerate(FAMILIES)}

# readable aliases accepted by var()
_ALIASES = {"beta": "β", "alpha": "α", "lam": "λ", "lambda": "λ"}

VarId = tuple  # (rank, family, indices)


def var_id(family: str, *indices: int) -> VarId:
    family = _ALIASES.get(family, family)
    rank = _RANK.get(family, len(FAMILIES))
    return (rank, family, tuple(int(i) for i in indices))


def var_name(v: VarId) -> str:
    _, fam, idx = v
    if not idx:
        return fam
    if all(0 <= i < 10 for i in idx):
        return fam + "".join(map(str, idx))
    return fam + "_" + "_".join(map(str, idx))


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


class ExactPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = _norm(c)
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict) -> "ExactPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "ExactPoly":
        c = _norm(Fraction(c) if isinstance(c, str) else c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, family: str, *indices: int) -> "ExactPoly":
        return cls._raw({((var_id(family, *indices), 1),): 1})

    @classmethod
    def from_varid(cls, v: VarId, e: int = 1) -> "ExactPoly":
        return cls._raw({((v, e),): 1} if e else {(): 1})

    @staticmethod
    def coerce(o) -> "ExactPoly":
        if isinstance(o, ExactPoly):
            return o
        if isinstance(o, (int, Fraction)):
            return ExactPoly.const(o)
        raise TypeError(f"cannot coerce {type(o).__name__} to ExactPoly")

    # -- basic queries --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_term(self):
        return self.terms.get((), 0)

    def variables(self) -> list:
        vs = set()
        for m in self.terms:
            for v, _ in m:
                vs.add(v)
        return sorted(vs)

    def degree(self, v: VarId | None = None) -> int:
        if not self.terms:
            return -1
        if v is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max((dict(m).get(v, 0) for m in self.terms), default=0)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, o):
        try:
            o = ExactPoly.coerce(o)
        except TypeError:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        t = dict(self.terms)
        for m, c in o.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = _norm(s)
            else:
                t.pop(m, None)
        return ExactPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, o):
        try:
            o = ExactPoly.coerce(o)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return ExactPoly.coerce(o) - self

    def scale(self, c) -> "ExactPoly":
        c = _norm(c)
        if not c:
            return ExactPoly()
        if c == 1:
            return self
        return ExactPoly._raw({m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.scale(o)
        if not isinstance(o, ExactPoly):
            return NotImplemented
        a, b = self.terms, o.terms
        if not a or not b:
            return ExactPoly()
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        get = t.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = _mono_mul(m1, m2)
                t[m] = get(m, 0) + c1 * c2
        return ExactPoly._raw({m: _norm(c) for m, c in t.items() if c})

    def __rmul__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.scale(o)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        r = ExactPoly.const(1)
        b = self
        while k:
            if k & 1:
                r = r * b
            k >>= 1
            if k:
                b = b * b
        return r

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(o))
        q = divexact(self, ExactPoly.coerce(o))
        return q

    # -- comparison -----------------------------------------------------
    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = ExactPoly.const(o)
        if not isinstance(o, ExactPoly):
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- substitution and evaluation -------------------------------------
    def subs(self, rules: Mapping) -> "ExactPoly":
        """Substitute variables; keys are VarIds, values polys or numbers."""
        rules = {k: ExactPoly.coerce(v) for k, v in rules.items()}
        if not rules:
            return self
        powcache: dict = {}

        def pw(v, e):
            key = (v, e)
            r = powcache.get(key)
            if r is None:
                r = rules[v] ** e
                powcache[key] = r
            return r

        out: dict = {}
        for m, c in self.terms.items():
            keep = []
            img = None
            for v, e in m:
                if v in rules:
                    f = pw(v, e)
                    img = f if img is None else img * f
                else:
                    keep.append((v, e))
            base = ExactPoly._raw({tuple(keep): c})
            piece = base if img is None else base * img
            for mm, cc in piece.terms.items():
                s = out.get(mm, 0) + cc
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
        return ExactPoly._raw({m: _norm(c) for m, c in out.items()})

    def subs_family(self, family: str, value) -> "ExactPoly":
        family = _ALIASES.get(family, family)
        rules = {v: value for v in self.variables() if v[1] == family}
        return self.subs(rules)

    def evaluate(self, values: Mapping):
        """Numeric evaluation; every variable must be assigned."""
        total = 0
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                val *= values[v] ** e
            total += val
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    # -- univariate views ---------------------------------------------------
    def coeff(self, v: VarId, k: int) -> "ExactPoly":
        """Coefficient of v^k as a polynomial in the remaining variables."""
        out = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, f in m:
                if w == v:
                    e = f
                else:
                    rest.append((w, f))
            if e == k:
                out[tuple(rest)] = c
        return ExactPoly._raw(out)

    def coeff_list(self, v: VarId) -> list:
        d = self.degree(v)
        return [self.coeff(v, k) for k in range(d + 1)]

    def coeff_monomial(self, mono: Mapping) -> object:
        key = tuple(sorted((v, e) for v, e in mono.items() if e))
        return self.terms.get(key, 0)

    def int_coeffs(self, v: VarId, shift=0) -> list:
        """Numeric coefficient list of a univariate poly in powers of (v - shift)."""
        p = self.subs({v: ExactPoly.from_varid(v) + shift}) if shift else self
        others = [w for w in p.variables() if w != v]
        if others:
            raise ValueError(f"not univariate in {var_name(v)}")
        return [p.coeff(v, k).const_term() for k in range(p.degree(v) + 1)] if p else []

    def tuple_form(self, v: VarId, shift=0) -> str:
        cs = self.int_coeffs(v, shift)
        body = "(" + ",".join(str(c) for c in cs) + ")"
        name = var_name(v)
        if shift:
            sgn = "-" if shift > 0 else "+"
            name = "{" + name + sgn + str(abs(shift)) + "}"
        return body + "_" + name

    # -- printing ------------------------------------------------------------
    def sorted_terms(self) -> list:
        def key(item):
            m, _ = item
            deg = sum(e for _, e in m)
            flat = []
            for v, e in m:
                flat.append((v, -e))
            return (-deg, flat)
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mon = "*".join(var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m)
            if not mon:
                s = str(c)
            elif c == 1:
                s = mon
            elif c == -1:
                s = "-" + mon
            else:
                s = f"{c}*{mon}" if not isinstance(c, Fraction) else f"({c})*{mon}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
        return out

    __repr__ = __str__

    def latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mon = " ".join(_latex_var(v) + (f"^{{{e}}}" if e > 1 else "") for v, e in m)
            if isinstance(c, Fraction):
                cs = rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
            else:
                cs = str(abs(c))
            if mon and abs(c) == 1:
                cs = ""
            body = (cs + " " + mon).strip()
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sg, b in parts[1:]:
            s += f" {sg} {b}"
        return s

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        vs = self.variables()
        pos = {v: i for i, v in enumerate(vs)}
        terms = []
        for m, c in self.sorted_terms():
            exp = [0] * len(vs)
            for v, e in m:
                exp[pos[v]] = e
            fr = Fraction(c)
            terms.append({"exp": exp, "num": str(fr.numerator), "den": str(fr.denominator)})
        return {"vars": [[v[1], *v[2]] for v in vs], "terms": terms}

    @classmethod
    def from_json(cls, d) -> "ExactPoly":
        if isinstance(d, str):
            d = json.loads(d)
        vs = [var_id(row[0], *row[1:]) for row in d["vars"]]
        t = {}
        for term in d["terms"]:
            m = tuple((v, e) for v, e in zip(vs, term["exp"]) if e)
            t[tuple(sorted(m))] = Fraction(int(term["num"]), int(term["den"]))
        return cls(t)


def _latex_var(v: VarId) -> str:
    _, fam, idx = v
    base = {"β": r"\beta", "α": r"\alpha", "λ": r"\lambda", "qij": "q"}.get(fam, fam)
    if not idx:
        return base
    return base + "_{" + ",".join(map(str, idx)) + "}" if len(idx) > 1 else f"{base}_{{{idx[0]}}}"


# ---------------------------------------------------------------------------
# convenient constructors

def var(family: str, *indices: int) -> ExactPoly:
    return ExactPoly.var(family, *indices)


def const(c) -> ExactPoly:
    return ExactPoly.const(c)


ZERO = ExactPoly()
ONE = ExactPoly.const(1)
BETA = var_id("β")
ALPHA = var_id("α")
Q = var_id("q")
T = var_id("t")
LAM = var_id("λ")


def X(i: int) -> VarId:
    return var_id("x", i)


def poly_sum(ps: Iterable) -> ExactPoly:
    t: dict = {}
    for p in ps:
        for m, c in ExactPoly.coerce(p).terms.items():
            t[m] = t.get(m, 0) + c
    return ExactPoly._raw({m: _norm(c) for m, c in t.items() if c})


def poly_prod(ps: Iterable) -> ExactPoly:
    r = ONE
    for p in ps:
        r = r * ExactPoly.coerce(p)
    return r


def poly_arith(p, q, op: str) -> ExactPoly:
    p, q = ExactPoly.coerce(p), ExactPoly.coerce(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def from_coeffs(cs: Sequence, v: VarId, shift=0) -> ExactPoly:
    """Build Σ cs[k] (v - shift)^k."""
    base = ExactPoly.from_varid(v) - shift if shift else ExactPoly.from_varid(v)
    r = ZERO
    for c in reversed(list(cs)):
        r = r * base + c
    return r


def univariate(cs: Sequence, family: str = "β") -> ExactPoly:
    return from_coeffs(cs, var_id(family))


# ---------------------------------------------------------------------------
# exact division

def _lead(p: ExactPoly):
    # lex order on the VarId ordering: compare exponent vectors variable by variable
    def key(m):
        return tuple((v, e) for v, e in m)
    best = None
    for m in p.terms:
        if best is None or _lex_gt(m, best):
            best = m
    return best


def _lex_gt(m1, m2) -> bool:
    d1, d2 = dict(m1), dict(m2)
    for v in sorted(set(d1) | set(d2)):
        a, b = d1.get(v, 0), d2.get(v, 0)
        if a != b:
            return a > b
    return False


def _mono_div(m1, m2):
    d = dict(m1)
    for v, e in m2:
        r = d.get(v, 0) - e
        if r < 0:
            return None
        if r:
            d[v] = r
        else:
            d.pop(v)
    return tuple(sorted(d.items()))


def divmod_poly(f: ExactPoly, g: ExactPoly):
    """Multivariate division by a single divisor in lex order."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lg = _lead(g)
    cg = g.terms[lg]
    q = ZERO
    r = ZERO
    p = f
    while p:
        lp = _lead(p)
        cp = p.terms[lp]
        md = _mono_div(lp, lg)
        if md is None:
            lt = ExactPoly._raw({lp: cp})
            r = r + lt
            p = p - lt
            continue
        c = _norm(Fraction(cp) / cg)
        t = ExactPoly._raw({md: c})
        q = q + t
        p = p - t * g
    return q, r


def divexact(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    q, r = divmod_poly(f, g)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------
# rational functions

def _content(p: ExactPoly) -> Fraction:
    from math import gcd
    nums = 0
    dens = 1
    for c in p.terms.values():
        fr = Fraction(c)
        nums = gcd(nums, fr.numerator)
        dens = dens * fr.denominator // gcd(dens, fr.denominator)
    return Fraction(nums, dens) if nums else Fraction(1)


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = ExactPoly.coerce(num), ExactPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        # try an exact cancellation first (cheap common case)
        qq, rr = divmod_poly(num, den)
        if not rr:
            num, den = qq, ONE
        c = _content(den)
        lead_sign = 1 if den.terms[den.sorted_terms()[0][0]] > 0 else -1
        c = c * lead_sign
        self.num, self.den = num.scale(1 / c), den.scale(1 / c)

    def __add__(self, o):
        o = o if isinstance(o, RatFun) else RatFun(o)
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, o):
        o = o if isinstance(o, RatFun) else RatFun(o)
        return self + (-o)

    def __mul__(self, o):
        o = o if isinstance(o, RatFun) else RatFun(o)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = o if isinstance(o, RatFun) else RatFun(o)
        return RatFun(self.num * o.den, self.den * o.num)

    def __eq__(self, o):
        o = o if isinstance(o, RatFun) else RatFun(o)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash(self.series_key())

    def series_key(self):
        return (str(self.num), str(self.den))

    def is_poly(self) -> bool:
        return self.den.is_const()

    def as_poly(self) -> ExactPoly:
        q, r = divmod_poly(self.num, self.den)
        if r:
            raise ArithmeticError("rational function is not a polynomial")
        return q

    def series(self, v: VarId, order: int) -> list:
        """Taylor coefficients in v up to v^order (univariate, den(0) != 0)."""
        n = self.num.int_coeffs(v)
        d = self.den.int_coeffs(v)
        return series_div(n, d, order)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def series_div(n: Sequence, d: Sequence, order: int) -> list:
    if not d or d[0] == 0:
        raise ZeroDivisionError("series denominator vanishes at 0")
    out = []
    d0 = Fraction(d[0])
    for k in range(order + 1):
        s = Fraction(n[k]) if k < len(n) else Fraction(0)
        for j in range(1, min(k, len(d) - 1) + 1):
            s -= d[j] * out[k - j]
        out.append(_norm(s / d0))
    return out


# ---------------------------------------------------------------------------
# determinants

def _cofactor_det(M):
    n = len(M)
    if n == 0:
        return ONE
    if n == 1:
        return ExactPoly.coerce(M[0][0])
    if n == 2:
        return ExactPoly.coerce(M[0][0]) * M[1][1] - ExactPoly.coerce(M[0][1]) * M[1][0]
    total = ZERO
    for j in range(n):
        a = ExactPoly.coerce(M[0][j])
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = a * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def poly_det(M: Sequence[Sequence]) -> ExactPoly:
    """Determinant of a square matrix of polynomials (Bareiss for size > 4)."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n <= 4:
        return _cofactor_det([list(r) for r in M])
    A = [[ExactPoly.coerce(x) for x in row] for row in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = divexact(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
            A[i][k] = ZERO
        prev = A[k][k]
    return A[n - 1][n - 1] if sign > 0 else -A[n - 1][n - 1]


def int_det(M: Sequence[Sequence]) -> int | Fraction:
    """Bareiss determinant over the integers / rationals."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return _norm(sign * A[n - 1][n - 1])


# ---------------------------------------------------------------------------
# combinatorial kernels

@lru_cache(maxsize=None)
def _qbin_coeffs(n: int, k: int) -> tuple:
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    a = _qbin_coeffs(n - 1, k - 1)
    b = _qbin_coeffs(n - 1, k)
    # [n,k] = [n-1,k-1] + q^k [n-1,k]
    out = [0] * max(len(a), len(b) + k)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def q_binomial(n: int, k: int, v: VarId = Q) -> ExactPoly:
    return from_coeffs(_qbin_coeffs(n, k), v)


def q_int(n: int, v: VarId = Q) -> ExactPoly:
    return from_coeffs([1] * n, v)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signless Stirling numbers of the first kind."""
    if n == k:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return (n - 1) * stirling1(n - 1, k) + stirling1(n - 1, k - 1)


def stirling(kind: str, n: int, k: int) -> int:
    if kind == "first":
        return stirling1(n, k)
    if kind == "second":
        return stirling2(n, k)
    raise ValueError(f"unknown kind {kind!r}")


def truncate(p: ExactPoly, cap: Mapping) -> ExactPoly:
    """Drop terms whose degree in some capped variable exceeds its cap."""
    return ExactPoly._raw({m: c for m, c in p.terms.items()
                           if all(e <= cap.get(v, e) for v, e in m)})


def binom_poly(lam: ExactPoly, k: int) -> ExactPoly:
    """binom(lam, k) as a polynomial in lam."""
    r = ONE
    for i in range(k):
        r = r * (lam - i)
    return r.scale(Fraction(1, _fact(k)))


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    from math import factorial
    return factorial(n)


def symbolic_pow_series(f: ExactPoly, exponent: VarId = LAM, cap: Mapping | None = None) -> ExactPoly:
    """f^λ = Σ binom(λ,k)(f-1)^k, truncated to the per-variable caps."""
    if f.const_term() != 1:
        raise ValueError("symbolic power needs constant term 1")
    cap = dict(cap or {})
    g = f - 1
    if not cap:
        raise ValueError("a finite degree cap is required")
    # each power of g raises total degree in capped vars by >= 1 when g has no
    # constant term, so sum of caps bounds the number of terms
    kmax = sum(cap.values())
    lam = ExactPoly.from_varid(exponent)
    total = ONE
    gk = ONE
    for k in range(1, kmax + 1):
        gk = truncate(gk * g, cap)
        if gk.is_zero():
            break
        total = total + binom_poly(lam, k) * gk
    return total


class Packing:
    """Kronecker packing of integer polynomials with known degree bounds.

    Monomial prod v^e_v is sent to the digit with index sum e_v*stride_v and
    each digit holds a signed coefficient of ``bits`` bits.  Sums and products
    of packed ints are exact as long as the bounds and bit width hold.
    """

    def __init__(self, variables: Sequence[VarId], bounds: Sequence[int], bits: int = 128):
        self.vars = list(variables)
        self.bounds = list(bounds)
        self.bits = bits
        self.strides = []
        s = 1
        for b in self.bounds:
            self.strides.append(s)
            s *= b + 1
        self.size = s

    def pack(self, p: ExactPoly) -> int:
        p = ExactPoly.coerce(p)
        out = 0
        pos = {v: k for k, v in enumerate(self.vars)}
        for m, c in p.terms.items():
            if not isinstance(c, int):
                raise ValueError("packing needs integer coefficients")
            idx = 0
            for v, e in m:
                k = pos[v]
                if e > self.bounds[k]:
                    raise ValueError("degree bound exceeded while packing")
                idx += e * self.strides[k]
            out += c << (self.bits * idx)
        return out

    def unpack(self, n: int) -> ExactPoly:
        terms = {}
        mask = (1 << self.bits) - 1
        half = 1 << (self.bits - 1)
        idx = 0
        while n:
            d = n & mask
            if d >= half:
                d -= 1 << self.bits
            if d:
                m = []
                r = idx
                for k in range(len(self.vars) - 1, -1, -1):
                    e, r = divmod(r, self.strides[k])
                    if e:
                        m.append((self.vars[k], e))
                terms[tuple(sorted(m))] = d
            n = (n - d) >> self.bits
            idx += 1
        if idx > self.size:
            raise ArithmeticError("packed value overflowed its degree bounds")
        return ExactPoly._raw(terms)


_TOKEN = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^([A-Za-zαβλ]+)(\d*)(?:\^(\d+))?$")
_NAMES = {"b": "β", "beta": "β", "β": "β", "alpha": "α", "α": "α", "lam": "λ", "λ": "λ"}


def parse_poly(text: str) -> ExactPoly:
    """Parse sums of products such as ``-b``, ``2*x1^2*q - 1/2`` or ``beta``.

    A name followed by digits is an indexed variable (``x12`` is x_{1,2}
    only for the two-index families qij and p; otherwise x_12).
    """
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    out, pos = ZERO, 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        term = ExactPoly.const(sign)
        for f in m.group(2).split("*"):
            if re.fullmatch(r"\d+(/\d+)?", f):
                term = term * Fraction(f)
                continue
            fm = _FACTOR.match(f)
            if not fm:
                raise ValueError(f"bad factor {f!r} in {text!r}")
            name, idx, e = fm.group(1), fm.group(2), int(fm.group(3) or 1)
            name = _NAMES.get(name, name)
            if name not in _RANK:
                raise ValueError(f"unknown variable family {name!r}")
            if idx and name in ("qij", "p") and len(idx) == 2:
                v = var(name, int(idx[0]), int(idx[1]))
            else:
                v = var(name, int(idx)) if idx else var(name)
            term = term * v ** e
        out = out + term
        pos = m.end()
    return out

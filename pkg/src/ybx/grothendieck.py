"""Schubert and beta-Grothendieck polynomials.

Two independent engines:

* the Id-Coxeter expansion: multiply out A_1(x_1)...A_{n-1}(x_{n-1}) with
  A_i(x) = h_{n-1}(x)...h_i(x), h_a(x) = 1 + x e_a, in the algebra where
  e_a^2 = beta e_a; the coefficient of e_w is G_w;
* generalized divided differences d_i^A = a + (b x_i + c x_{i+1} + h + e x_i x_{i+1}) d_i
  applied to the staircase monomial.

Coefficients in the first engine are Kronecker-packed big ints, so the ring
(symbolic x, x_1=q with x_i=1, numeric beta, ...) is chosen by the images of
x_i and beta and nothing else changes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .errors import IdentityFailure, SizeError
from .exactpoly import (BETA, ONE, Q, T, ZERO, ExactPoly, Packing, X, divmod_poly,
                        poly_det, poly_prod, var, var_id)
from .perm import Permutation, all_perms, vexillary

Y = lambda j: var_id("y", j)  # noqa: E731

MAX_TABLE_N = 9


def _perm(w) -> Permutation:
    if isinstance(w, Permutation):
        return w
    if isinstance(w, str):
        return Permutation.parse(w)
    return Permutation(w)


# ---------------------------------------------------------------------------
# Id-Coxeter engine
# ---------------------------------------------------------------------------

def _l1(p: ExactPoly) -> int:
    return sum(abs(c) for c in p.terms.values())


class _Ring:
    """Packed images of x_1..x_{n-1} and beta."""

    def __init__(self, n: int, ximg: Sequence[ExactPoly], beta: ExactPoly):
        self.n = n
        ximg = [ExactPoly.coerce(v) for v in ximg]
        beta = ExactPoly.coerce(beta)
        vs = sorted(set(v for p in ximg + [beta] for v in p.variables()))
        bounds = []
        for v in vs:
            b = sum((n - i) * ximg[i - 1].degree(v) for i in range(1, n) if ximg[i - 1].terms)
            b += comb(n, 2) * max(beta.degree(v), 0)
            bounds.append(max(b, 0))
        bits = 2
        bl = max(1, _l1(beta))
        for i in range(1, n):
            bits += (n - i) * math.log2(1 + _l1(ximg[i - 1]) * bl)
        if any(isinstance(c, Fraction) for p in ximg + [beta] for c in p.terms.values()):
            raise ValueError("the Id-Coxeter engine needs integer coefficients")
        self.pk = Packing(vs, bounds, bits=max(64, int(bits) + 2))
        self.x = [self.pk.pack(p) for p in ximg]
        self.beta = self.pk.pack(beta)
        self.one = self.pk.pack(ONE)


def _idc_run(ring: _Ring, target: Permutation | None = None) -> dict:
    n = ring.n
    ident = tuple(range(1, n + 1))
    state = {ident: ring.one}
    posw = None
    if target is not None:
        posw = {v: k for k, v in enumerate(target)}
    bet = ring.beta
    for i in range(1, n):
        xi = ring.x[i - 1]
        if not xi:
            continue
        for a in range(n - 1, i - 1, -1):
            new = dict(state)
            for u, c in state.items():
                xc = c * xi
                lo, hi = u[a - 1], u[a]
                if lo < hi:
                    if posw is not None and posw[hi] > posw[lo]:
                        continue
                    v = u[:a - 1] + (hi, lo) + u[a + 1:]
                    s = new.get(v, 0) + xc
                else:
                    v = u
                    s = new[v] + bet * xc
                if s:
                    new[v] = s
                else:
                    new.pop(v, None)
            state = new
    return state


def _images(n: int, spec) -> list:
    if spec is None or spec == "sym":
        return [ExactPoly.from_varid(X(i)) for i in range(1, n)]
    if spec == "ones":
        return [ONE] * (n - 1)
    if spec == "q1":
        return [ExactPoly.from_varid(Q)] + [ONE] * (n - 2)
    if spec == "principal":
        return [ExactPoly.from_varid(Q, i - 1) for i in range(1, n)]
    if spec == "q":
        return [ExactPoly.from_varid(Q)] * (n - 1)
    if isinstance(spec, Mapping):
        return [ExactPoly.coerce(spec.get(i, ExactPoly.from_varid(X(i)))) for i in range(1, n)]
    return [ExactPoly.coerce(v) for v in spec][:n - 1]


def _beta_img(beta) -> ExactPoly:
    if beta is None or beta == "sym":
        return ExactPoly.from_varid(BETA)
    return ExactPoly.coerce(beta)


def grothendieck(w, beta="sym", spec="sym", shift_beta: int = 0) -> ExactPoly:
    """G_w^{(beta)} from the Id-Coxeter expansion, pruned to the interval [id, w].

    ``spec`` chooses the images of x_i: "sym", "ones", "q1" (x_1=q, rest 1),
    "principal" (x_i=q^{i-1}), "q" (all x_i=q) or an explicit list/mapping.
    ``shift_beta=-1`` returns G^{(beta-1)} for symbolic beta.
    """
    w = _perm(w).trimmed()
    n = max(w.n, 2)
    w = w.embed(n)
    ring = _Ring(n, _images(n, spec), _beta_img(beta))
    st = _idc_run(ring, target=w)
    out = ring.pk.unpack(st.get(tuple(w), 0))
    if shift_beta:
        out = out.subs({BETA: ExactPoly.from_varid(BETA) + shift_beta})
    return out


class GrothTable(dict):
    """Permutation -> G_w for every w in S_n."""

    def __init__(self, n: int, data: Mapping):
        super().__init__(data)
        self.n = n

    def check_divisibility(self) -> list:
        """Permutations whose entry is not divisible by x_1^{w(1)-1}."""
        bad = []
        for w, g in self.items():
            k = w[0] - 1
            if any(dict(m).get(X(1), 0) < k for m in g.terms):
                bad.append(w)
        return bad


def idc_expand(n: int, beta="sym", spec="sym") -> GrothTable:
    if n > MAX_TABLE_N:
        raise SizeError(f"idc_expand: n={n} exceeds {MAX_TABLE_N}")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return GrothTable(1, {Permutation((1,)): ONE})
    ring = _Ring(n, _images(n, spec), _beta_img(beta))
    st = _idc_run(ring)
    return GrothTable(n, {Permutation(u): ring.pk.unpack(c) for u, c in st.items()})


def _times_h(elt: dict, a: int, x: ExactPoly, b: ExactPoly) -> dict:
    """elt * h_a(x) for elt = {u: coefficient} in the Id-Coxeter algebra."""
    out = dict(elt)
    for u, c in elt.items():
        if u[a - 1] < u[a]:
            v = u[:a - 1] + (u[a], u[a - 1]) + u[a + 1:]
            out[v] = out.get(v, ZERO) + c * x
        else:
            out[u] = out[u] + b * c * x
    return {u: c for u, c in out.items() if c}


def addition_formula_check(n: int = 3, beta="sym") -> bool:
    """h_a(x)h_a(y) = h_a(x+y+bxy) and the Yang-Baxter relation
    h_a(x)h_{a+1}(x+y+bxy)h_a(y) = h_{a+1}(y)h_a(x+y+bxy)h_{a+1}(x), on every e_u."""
    b = _beta_img(beta)
    x, y = var("x", 1), var("y", 1)
    s = x + y + b * x * y
    for u in all_perms(n):
        e = {tuple(u): ONE}
        for a in range(1, n):
            if _times_h(_times_h(e, a, x, b), a, y, b) != _times_h(e, a, s, b):
                return False
            if a + 1 < n:
                lhs = _times_h(_times_h(_times_h(e, a, x, b), a + 1, s, b), a, y, b)
                rhs = _times_h(_times_h(_times_h(e, a + 1, y, b), a, s, b), a + 1, x, b)
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# divided differences
# ---------------------------------------------------------------------------

def _swap_xi(m: tuple, i: int) -> tuple:
    xi, xj = X(i), X(i + 1)
    d = dict(m)
    a, b = d.pop(xi, 0), d.pop(xj, 0)
    if b:
        d[xi] = b
    if a:
        d[xj] = a
    return tuple(sorted(d.items()))


def newton_dd(f: ExactPoly, i: int) -> ExactPoly:
    """(f - s_i f)/(x_i - x_{i+1}), monomial by monomial."""
    xi, xj = X(i), X(i + 1)
    out: dict = {}
    for m, c in f.terms.items():
        d = dict(m)
        a, b = d.pop(xi, 0), d.pop(xj, 0)
        if a == b:
            continue
        sgn = 1
        if a < b:
            a, b, sgn = b, a, -1
        rest = list(d.items())
        for k in range(a - b):
            mono = rest + [(xi, a - 1 - k), (xj, b + k)]
            key = tuple(sorted((v, e) for v, e in mono if e))
            s = out.get(key, 0) + sgn * c
            if s:
                out[key] = s
            else:
                out.pop(key)
    return ExactPoly(out)


@dataclass(frozen=True)
class ParamVectorA:
    a: ExactPoly
    b: ExactPoly
    c: ExactPoly
    h: ExactPoly
    e: ExactPoly

    @classmethod
    def of(cls, a, b, c, h, e) -> "ParamVectorA":
        return cls(*(ExactPoly.coerce(v) for v in (a, b, c, h, e)))

    @property
    def coxeter_valid(self) -> bool:
        return ((self.a + self.b) * (self.a - self.c) + self.h * self.e).is_zero()

    def astuple(self):
        return (self.a, self.b, self.c, self.h, self.e)

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.astuple()) + ")"


_B = ExactPoly.from_varid(BETA)
PRESETS = {
    "schubert": ParamVectorA.of(0, 0, 0, 1, 0),
    "grothendieck": ParamVectorA.of(-_B, _B, 0, 1, 0),
    "dual-grothendieck": ParamVectorA.of(0, 1, 0, 1, 0),
    "dfzj": ParamVectorA.of(-1, 2, 0, 1, 1),
    "h-schubert": ParamVectorA.of(1, -1, 1, -var("h"), 0),
    "key": ParamVectorA.of(1, 0, 1, 0, 0),
    "reduced-key": ParamVectorA.of(0, 0, 1, 0, 0),
    "key-grothendieck": ParamVectorA.of(1, 0, 1, 0, _B),
}


def parse_A(text: str) -> ParamVectorA:
    if text in PRESETS:
        return PRESETS[text]
    from .exactpoly import parse_poly
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 5:
        raise ValueError("A needs five comma separated entries a,b,c,h,e")
    return ParamVectorA.of(*(parse_poly(s) for s in parts))


def divided_difference(f: ExactPoly, i: int, A: ParamVectorA) -> ExactPoly:
    if i < 1:
        raise ValueError("index must be >= 1")
    f = ExactPoly.coerce(f)
    xi, xj = ExactPoly.from_varid(X(i)), ExactPoly.from_varid(X(i + 1))
    g = A.b * xi + A.c * xj + A.h + A.e * xi * xj
    return A.a * f + g * newton_dd(f, i)


def staircase(n: int) -> ExactPoly:
    terms = tuple((X(i), n - i) for i in range(1, n))
    return ExactPoly({terms: 1})


def schubert_table(n: int, A: ParamVectorA = PRESETS["schubert"]) -> dict:
    """All generalized Schubert polynomials of S_n, top-down from w_0."""
    if not A.coxeter_valid:
        raise ValueError(f"A = {A} violates (a+b)(a-c)+he = 0")
    if n > 7:
        raise SizeError("schubert_table: n > 7")
    w0 = Permutation.longest(n)
    table = {w0: staircase(n)}
    frontier = [w0]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, n):
                if v[i - 1] > v[i]:
                    u = v.swap_positions(i)
                    if u not in table:
                        table[u] = divided_difference(table[v], i, A)
                        nxt.append(u)
        frontier = nxt
    return table


def generalized_schubert(w, A: ParamVectorA = PRESETS["schubert"]) -> ExactPoly:
    if not A.coxeter_valid:
        raise ValueError(f"A = {A} violates (a+b)(a-c)+he = 0")
    w = _perm(w).trimmed()
    n = max(w.n, 1)
    f = staircase(n)
    # d_{w^{-1} w0} along a reduced word of w0 w... walk up from w to w0
    v = w
    steps = []
    while True:
        for i in range(1, n):
            if v[i - 1] < v[i]:
                steps.append(i)
                v = v.swap_positions(i)
                break
        else:
            break
    for i in reversed(steps):
        f = divided_difference(f, i, A)
    return f


def key_polynomial(alpha: Sequence[int], A: ParamVectorA = PRESETS["key"]) -> ExactPoly:
    if not A.coxeter_valid:
        raise ValueError(f"A = {A} violates (a+b)(a-c)+he = 0")
    alpha = list(alpha)
    steps = []
    while True:
        for i in range(len(alpha) - 1):
            if alpha[i] < alpha[i + 1]:
                alpha[i], alpha[i + 1] = alpha[i + 1], alpha[i]
                steps.append(i + 1)
                break
        else:
            break
    f = ExactPoly({tuple((X(i + 1), e) for i, e in enumerate(alpha) if e): 1})
    for i in reversed(steps):
        f = divided_difference(f, i, A)
    return f


# ---------------------------------------------------------------------------
# named permutations
# ---------------------------------------------------------------------------

def pi_k(k: int, n: int) -> Permutation:
    """1^k x w_0^{(n-k)} in S_n."""
    return Permutation(list(range(1, k + 1)) + list(range(n, k, -1)))


def grassmannian_perm(lam: Sequence[int], n: int) -> Permutation:
    """Grassmannian permutation with shape lam and its descent at n."""
    if len(lam) > n:
        raise ValueError("partition longer than n")
    lam = list(lam) + [0] * (n - len(lam))
    head = [lam[n - i] + i for i in range(1, n + 1)]
    rest = [v for v in range(1, head[-1] + 1) if v not in head]
    return Permutation(head + rest)


def conjugate(lam: Sequence[int]) -> list:
    lam = [x for x in lam if x]
    return [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []


def lambda_npb(n: int, p: int, b: int) -> list:
    return [(n - i + 1) * p + b for i in range(1, n + 2) if (n - i + 1) * p + b > 0]


def sigma_nkpb(n: int, k: int, p: int, b: int = 0) -> Permutation:
    """Grassmannian permutation with shape lambda_{n,p,b}' and descent at k."""
    return grassmannian_perm(conjugate(lambda_npb(n, p, b)), k)


def varpi(n: int, k: int, r: int, b: int, p: int) -> Permutation:
    """Vexillary permutation with shape ((n-i+1)p+b) and flag (k+1+r(i-1))."""
    shape, flag = [], []
    for i in range(1, n + 2):
        lam = (n - i + 1) * p + b
        if lam:
            shape.append(lam)
            flag.append(k + 1 + r * (i - 1))
    return vexillary(shape, flag) if shape else Permutation((1,))


def varpi_nkp(n: int, k: int, p: int) -> Permutation:
    """Shape p(n, n-1, ..., 1), flag (k+1, ..., k+n)."""
    return vexillary([p * (n - i) for i in range(n)], [k + 1 + i for i in range(n)])


def w_minus(k: int) -> Permutation:
    return Permutation([2 * i for i in range(1, k + 1)] + list(range(2 * k - 1, 0, -2)))


def w_plus(k: int) -> Permutation:
    return Permutation([2 * i for i in range(1, k + 1)] + list(range(2 * k + 1, 0, -2)))


# ---------------------------------------------------------------------------
# determinantal formulas
# ---------------------------------------------------------------------------

def _divide_vandermonde(num: ExactPoly, n: int) -> ExactPoly:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = ExactPoly.from_varid(X(i)) - ExactPoly.from_varid(X(j))
            num, r = divmod_poly(num, d)
            if not r.is_zero():
                raise IdentityFailure(f"determinant not divisible by x{i}-x{j}")
    return num


def grassmannian_det(lam: Sequence[int], n: int, beta="sym", mode: str = "single") -> ExactPoly:
    """DET |x_i^{lam_j+n-j}(1+b x_i)^{j-1}| / prod_{i<j}(x_i-x_j); the double
    version replaces x_i^m by prod_{a<=m}(x_i + y_a + b x_i y_a)."""
    if len(lam) > n:
        raise ValueError("partition longer than n")
    lam = list(lam) + [0] * (n - len(lam))
    b = _beta_img(beta)
    xs = [ExactPoly.from_varid(X(i)) for i in range(1, n + 1)]
    M = []
    for i in range(n):
        row = []
        for j in range(1, n + 1):
            m = lam[j - 1] + n - j
            if mode == "single":
                base = xs[i] ** m
            elif mode == "double":
                base = poly_prod(xs[i] + ExactPoly.from_varid(Y(a)) + b * xs[i] * ExactPoly.from_varid(Y(a))
                                 for a in range(1, m + 1))
            else:
                raise ValueError("mode is 'single' or 'double'")
            row.append(base * (1 + b * xs[i]) ** (j - 1))
        M.append(row)
    return _divide_vandermonde(poly_det(M), n)


def double_grothendieck(w, beta="sym") -> ExactPoly:
    """G_w(X,Y) by Grothendieck divided differences from prod_{i+j<=n}(x_i + y_j + b x_i y_j)."""
    w = _perm(w).trimmed()
    n = w.n
    if n > 6:
        raise SizeError("double_grothendieck: n > 6")
    b = _beta_img(beta)
    A = ParamVectorA.of(-b, b, 0, 1, 0)
    top = poly_prod(ExactPoly.from_varid(X(i)) + ExactPoly.from_varid(Y(j))
                    + b * ExactPoly.from_varid(X(i)) * ExactPoly.from_varid(Y(j))
                    for i in range(1, n) for j in range(1, n - i + 1))
    v, steps = w, []
    while True:
        for i in range(1, n):
            if v[i - 1] < v[i]:
                steps.append(i)
                v = v.swap_positions(i)
                break
        else:
            break
    f = top
    for i in reversed(steps):
        f = divided_difference(f, i, A)
    return f


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

def F_poly(w) -> ExactPoly:
    """F_w(beta) = G_w^{(beta-1)}(1, ..., 1)."""
    return grothendieck(w, spec="ones", shift_beta=-1)


def specialize_R(w, reduced: bool = True) -> ExactPoly:
    """R_w(q;beta) = G_w^{(beta-1)}(x_1=q, x_i=1) / q^{w(1)-1} (``reduced=False`` keeps the power)."""
    w = _perm(w)
    R = grothendieck(w, spec="q1", shift_beta=-1)
    if not reduced:
        return R
    k = w[0] - 1
    out = {}
    for m, c in R.terms.items():
        d = dict(m)
        e = d.get(Q, 0) - k
        if e < 0:
            raise IdentityFailure("R_w not divisible by q^{w(1)-1}")
        if e:
            d[Q] = e
        else:
            d.pop(Q, None)
        out[tuple(sorted(d.items()))] = c
    return ExactPoly(out)


def double_special_H(w) -> ExactPoly:
    """H_w(q,t;beta) = (q + t + b q t)^{l(w)} F_w((1+bq)(1+bt))."""
    w = _perm(w)
    F = F_poly(w)
    q, t, b = ExactPoly.from_varid(Q), ExactPoly.from_varid(T), ExactPoly.from_varid(BETA)
    x = (1 + b * q) * (1 + b * t)
    return (q + t + b * q * t) ** w.length() * F.subs({BETA: x})


def double_special_H_direct(w) -> ExactPoly:
    """Same polynomial from the double Grothendieck polynomial at x_i=q, y_i=t (small n)."""
    g = double_grothendieck(w)
    rules = {}
    for v in g.variables():
        if v[1] == "x":
            rules[v] = ExactPoly.from_varid(Q)
        elif v[1] == "y":
            rules[v] = ExactPoly.from_varid(T)
    return g.subs(rules)


# ---------------------------------------------------------------------------
# Hankel-type identities
# ---------------------------------------------------------------------------

def _q_schroder_twisted(m: int, i: int) -> ExactPoly:
    from .numfam import q_schroder
    q, b = ExactPoly.from_varid(Q), ExactPoly.from_varid(BETA)
    return q_schroder(m).subs({BETA: q ** (i - 1) * b})


def hankel_identity_check(n: int, k: int) -> dict:
    """Exact checks for pi_k^{(n)} = 1^k x w_0^{(n-k)}; returns name -> bool.

    thm53:   (1+b)^{binom(k,2)} G(1) = DET|P_{n+k-i-j}(b)|
    thm57:   q^{binom(n-k,3)} DET|S_{n+k-i-j}(q; q^{i-1}b)|
             = q^{k(k-1)(6n-2k-5)/6} prod_{a<k}(1+q^{a-1}b)^{k-a} G(1,q,q^2,...)
    lemma52: DET of q-binomials = S_pi(1,q,...) and the q-Catalan Hankel form
    cor52:   k = n-1 closed form
    eq54:    S_{pi_1}(1,q,...) = q^{binom(n-1,3)} C_{n-1}(q)
    """
    from .numfam import q_binomial, q_catalan, schroder_poly
    if n > 7 or k > 3:
        raise SizeError("hankel_identity_check: n <= 7 and k <= 3")
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    q, b = ExactPoly.from_varid(Q), ExactPoly.from_varid(BETA)
    w = pi_k(k, n)
    out = {}
    G1 = grothendieck(w, spec="ones")
    P = [[schroder_poly(n + k - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    out["thm53"] = (1 + b) ** comb(k, 2) * G1 == poly_det(P)

    Gq = grothendieck(w, spec="principal")
    S = [[_q_schroder_twisted(n + k - i - j, i) for j in range(1, k + 1)] for i in range(1, k + 1)]
    e = k * (k - 1) * (6 * n - 2 * k - 5) // 6
    pr = poly_prod((1 + q ** (a - 1) * b) ** (k - a) for a in range(1, k))
    out["thm57"] = q ** comb(n - k, 3) * poly_det(S) == q ** e * pr * Gq

    Sq = Gq.subs({BETA: 0})
    m = n - k
    QB = [[q_binomial(n - i + j - 1, k + i - 1) for j in range(1, m + 1)] for i in range(1, m + 1)]
    C = [[q_catalan(n + k - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    out["lemma52"] = (poly_det(QB) == Sq and
                      q ** comb(n - k, 3) * poly_det(C) == q ** e * Sq)
    if k == n - 1:
        lhs = poly_det(S)
        rhs = q ** ((n - 1) * (n - 2) * (4 * n - 3) // 6) * poly_prod(
            (1 + q ** (a - 1) * b) ** (n - a - 1) for a in range(1, n - 1))
        out["cor52"] = lhs == rhs
    if k == 1:
        out["eq54"] = Sq == q ** comb(n - 1, 3) * q_catalan(n - 1)
    return out


# ---------------------------------------------------------------------------
# k-dissections
# ---------------------------------------------------------------------------

def _crosses(d, e) -> bool:
    (a, b), (c, f) = d, e
    return a < c < b < f or c < a < f < b


def k_dissections(m: int, k: int):
    """All k-dissections of a convex m-gon (vertices 1..m).

    Every one contains the diagonals of length 2..k around the polygon; the
    remaining diagonals carry no (k+1) pairwise crossing subfamily.
    """
    if m > 9:
        raise SizeError("k_dissections: polygon too large")
    diags = [(i, j) for i in range(1, m + 1) for j in range(i + 2, m + 1) if not (i == 1 and j == m)]
    short = [d for d in diags if min(d[1] - d[0], m - d[1] + d[0]) <= k]
    long_ = [d for d in diags if d not in short]
    base = list(short)
    out = []

    def ok(chosen, d):
        C = [e for e in chosen + base if _crosses(d, e)]
        if k == 1:
            return not C
        for sub in combinations(C, k):
            if all(_crosses(x, y) for x, y in combinations(sub, 2)):
                return False
        return True

    def rec(i, chosen):
        if i == len(long_):
            out.append(base + chosen)
            return
        rec(i + 1, chosen)
        d = long_[i]
        if ok(chosen, d):
            chosen.append(d)
            rec(i + 1, chosen)
            chosen.pop()
    rec(0, [])
    return out, short


def dissection_poly(n: int, k: int, weighted: bool = False) -> ExactPoly:
    """T_n^{(k)}(beta) = sum_E beta^{n(2k-1)-1-|E|} over k-dissections of the (n+k+1)-gon.

    With ``weighted`` every diagonal (i<j) outside the short family gets x_i and
    beta counts those diagonals instead.
    """
    m = n + k + 1
    ds, short = k_dissections(m, k)
    top = n * (2 * k - 1) - 1
    out = ZERO
    for E in ds:
        extra = [d for d in E if d not in short]
        if weighted:
            mono = {BETA: len(extra)}
            for i, _ in extra:
                mono[X(i)] = mono.get(X(i), 0) + 1
            out = out + ExactPoly({tuple(sorted((v, e) for v, e in mono.items() if e)): 1})
        else:
            out = out + ExactPoly.from_varid(BETA, top - len(E))
    return out


def _invert_grothendieck(g: ExactPoly, n: int, k: int) -> ExactPoly:
    """beta^{k(n-k)} prod x_a^{min(n-a+1,n-k)} G^{(1/beta)}(1/x)."""
    shift = {BETA: k * (n - k)}
    for a in range(1, n + 1):
        shift[X(a)] = min(n - a + 1, n - k)
    out = {}
    for mono, c in g.terms.items():
        d = dict(mono)
        new = {v: e - d.get(v, 0) for v, e in shift.items()}
        for v in d:
            if v not in new:
                raise IdentityFailure("unexpected variable in Grothendieck polynomial")
        if any(e < 0 for e in new.values()):
            raise IdentityFailure("negative exponent after inversion")
        out[tuple(sorted((v, e) for v, e in new.items() if e))] = c
    return ExactPoly(out)


def dissection_check(n: int, k: int) -> dict:
    """Dissection counts against G_{pi_k^{(n+1)}}; both plain and x-weighted."""
    if k > 2 or n > 6 or (k == 2 and n > 5):
        raise SizeError("dissection_check: k <= 2, n <= 6 (n <= 5 for k = 2)")
    w = pi_k(k, n + 1)
    out = {"count": dissection_poly(n, k) == grothendieck(w, spec="ones")}
    out["weighted"] = dissection_poly(n, k, weighted=True) == _invert_grothendieck(grothendieck(w), n, k)
    return out


# ---------------------------------------------------------------------------
# D-numbers
# ---------------------------------------------------------------------------

def wachs_D(n: int, k: int, r: int, b: int, p: int) -> int:
    """DET binom((n-i+1)p+b-i+j+k+(i-1)r, k+(i-1)r), 1 <= i,j <= n+1."""
    from .exactpoly import int_det
    if min(n, k, r, b, p) < 0:
        raise ValueError("arguments must be non-negative")
    M = []
    for i in range(1, n + 2):
        row = []
        for j in range(1, n + 2):
            m = (n - i + 1) * p + b - i + j
            row.append(comb(m + k + (i - 1) * r, k + (i - 1) * r) if m >= 0 else 0)
        M.append(row)
    return int(int_det(M))


def wachs_D_product(n: int, k: int, r: int, b: int, p: int) -> Fraction:
    """Double product over the sets A_{n,k,r} and B_{n,k,r}."""
    v = Fraction(1)
    for j in range(n + 1):
        for i in range(j + 1, k + (r - 1) * (n - j) + 1):
            v *= Fraction(i + b + j * p, i)
    for i in range(1, n + 1):
        if i >= k + 1 and (i - k - 1) % r == 0:
            continue
        for j in range(1, n + 2 - i):
            v *= Fraction((k - i + 1) * (p + 1) + (i + j - 1) * r + r * (b + n * p),
                          k - i + 1 + (i + j - 1) * r)
    return v


def wachs_D_factorial(n: int, k: int, r: int, b: int, p: int) -> Fraction:
    f = math.factorial
    v = Fraction(1)
    for j in range(1, n + 2):
        v *= Fraction(f((n - j + 1) * p + b + k + (j - 1) * (r - 1)) * f(n - j + 1),
                      f(k + (j - 1) * r) * f((n - j + 1) * (p + 1) + b))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            v *= (k - i + 1) * (p + 1) + j * r + (n * p + b) * r
    return v


def schubert_at_ones(w) -> int:
    return grothendieck(w, beta=0, spec="ones").const_term()


# ---------------------------------------------------------------------------
# Fuss-Narayana and leading coefficients
# ---------------------------------------------------------------------------

def fuss_leading_check(n: int, k: int, p: int) -> dict:
    """Checks around varpi_{n,k,p}: k=1 Fuss-Narayana; k>=2 degree nk and top coefficient."""
    from .numfam import fuss_narayana
    w = varpi_nkp(n, k, p)
    if w.length() > 24:
        raise SizeError("fuss_leading_check: permutation too long")
    G = F_poly(w)
    out = {"perm": str(w), "G": G.int_coeffs(BETA)}
    if k == 1:
        out["fuss_narayana"] = G == fuss_narayana(n + 1, p)
    else:
        cs = G.int_coeffs(BETA)
        out["degree"] = len(cs) - 1 == n * k
        out["top"] = cs[-1] == wachs_D(n, k, 1, 0, p - 1)
        out["value_at_1"] = sum(cs) == wachs_D(n, k, 1, 0, p)
    return out


def conjecture_leading(n: int) -> dict:
    """Top beta-coefficients of G_{sigma_{n,2n,2,0}} and G_{sigma_{n-1,2n-1,2,0}} (beta-1 versions)."""
    from .numfam import cstcpp, vsasm
    g = F_poly(sigma_nkpb(n, 2 * n, 2, 0)).int_coeffs(BETA)
    f = F_poly(sigma_nkpb(n - 1, 2 * n - 1, 2, 0)).int_coeffs(BETA) if n >= 2 else [1]
    return {"n": n, "a": g[-1], "vsasm": vsasm(n), "deg_a": len(g) - 1,
            "b": f[-1], "cstcpp": cstcpp(n), "deg_b": len(f) - 1}

"""Exact finite-dimensional representations of the three-term-relation algebras.

Operators are sparse matrices over the basis S_n (one-line notation, lexicographic
order).  ``A * B`` is the matrix product, so ``(A * B)(v) = A(B(v))``.  Coefficients
are ExactPoly (Bruhat, quantum Bruhat) or Fraction (Gaudin elements, which live in
the group algebra Q[S_n] and are multiplied there directly).

Every ``*_check`` function returns a list of records
``{"identity": str, "status": "pass" | "fail", "witness": ...}``.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb

from .errors import IdentityFailure, SizeError
from .exactpoly import ONE, ZERO, ExactPoly, poly_det, poly_prod, poly_sum, var, var_id

TV = var_id("t")


def _rec(identity, ok, witness=None):
    return {"identity": identity, "status": "pass" if ok else "fail",
            "witness": witness}


def all_pass(records) -> bool:
    return all(r["status"] == "pass" for r in records)


# ---------------------------------------------------------------------------
# S_n bookkeeping

@lru_cache(maxsize=None)
def basis(n: int) -> tuple:
    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def _index(n: int) -> dict:
    return {w: k for k, w in enumerate(basis(n))}


def _length(w) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def _swap_pos(w, i, j):
    w = list(w)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


# ---------------------------------------------------------------------------
# sparse linear operators

class LinOp:
    """Square matrix stored by columns: ``cols[c] = {row: coeff}``."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim, cols=None):
        self.dim = dim
        self.cols = cols if cols is not None else [dict() for _ in range(dim)]

    @classmethod
    def identity(cls, dim, scalar=ONE):
        s = ExactPoly.coerce(scalar) if not isinstance(scalar, ExactPoly) else scalar
        return cls(dim, [({c: s} if s else {}) for c in range(dim)])

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    def _combine(self, other, sign):
        out = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for r, c in b.items():
                v = col.get(r, 0) + (c if sign > 0 else -c)
                if v:
                    col[r] = v
                else:
                    col.pop(r, None)
            out.append(col)
        return LinOp(self.dim, out)

    def __add__(self, other):
        if not isinstance(other, LinOp):
            other = LinOp.identity(self.dim, other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LinOp):
            other = LinOp.identity(self.dim, other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return LinOp.identity(self.dim, other) - self

    def __neg__(self):
        return LinOp(self.dim, [{r: -c for r, c in col.items()} for col in self.cols])

    def scale(self, s):
        if not s:
            return LinOp.zero(self.dim)
        out = []
        for col in self.cols:
            d = {}
            for r, c in col.items():
                v = c * s
                if v:
                    d[r] = v
            out.append(d)
        return LinOp(self.dim, out)

    def __mul__(self, other):
        if not isinstance(other, LinOp):
            return self.scale(other)
        out = []
        for bcol in other.cols:
            col: dict = {}
            for k, b in bcol.items():
                for r, a in self.cols[k].items():
                    v = col.get(r, 0) + a * b
                    if v:
                        col[r] = v
                    else:
                        col.pop(r, None)
            out.append(col)
        return LinOp(self.dim, out)

    def __rmul__(self, s):
        return self.scale(s)

    def is_zero(self):
        return not any(self.cols)

    def __eq__(self, other):
        if not isinstance(other, LinOp):
            other = LinOp.identity(self.dim, other)
        return (self - other).is_zero()

    __hash__ = None

    def nnz(self):
        return sum(len(c) for c in self.cols)

    def entry(self, r, c):
        return self.cols[c].get(r, 0)

    def rows(self):
        """Dense row lists (for output)."""
        return [[self.cols[c].get(r, 0) for c in range(self.dim)] for r in range(self.dim)]


def commutator(a, b):
    return a * b - b * a


def op_prod(ops, dim):
    r = LinOp.identity(dim)
    for o in ops:
        r = r * o
    return r


# ---------------------------------------------------------------------------
# Bruhat and quantum Bruhat representations

class DunklFamily:
    """Operators u_ij (i < j) with u_ji = -u_ij, plus the q_ij = u_ij^2 scalars."""

    def __init__(self, n, ops, qvals, kind):
        self.n = n
        self.dim = len(basis(n))
        self._u = ops
        self.q = qvals
        self.kind = kind

    def u(self, i, j):
        if i < j:
            return self._u[(i, j)]
        return -self._u[(j, i)]

    def theta(self, i):
        r = LinOp.zero(self.dim)
        for j in range(1, self.n + 1):
            if j != i:
                r = r + self.u(i, j)
        return r

    def thetas(self):
        return [self.theta(i) for i in range(1, self.n + 1)]

    def identity(self):
        return LinOp.identity(self.dim)


def _chain_q(i, j, q):
    return poly_prod(q[a] for a in range(i, j))


def quantum_bruhat_rep(n, q=None, quantum=True) -> DunklFamily:
    """u_ij w = w s_ij on a length-one step up; q_ij w s_ij on the maximal drop.

    ``q`` maps a in 1..n-1 to the value of q_a (default: the variable q_a).
    With ``quantum=False`` this is the plain Bruhat representation.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n > (5 if quantum else 6):
        raise SizeError(f"n = {n} too large for the {'quantum ' if quantum else ''}Bruhat representation")
    if q is None:
        q = {a: var("q", a) for a in range(1, n)}
    else:
        q = {a: ExactPoly.coerce(q[a]) for a in range(1, n)}
    B, idx = basis(n), _index(n)
    lens = [_length(w) for w in B]
    ops, qvals = {}, {}
    for i, j in combinations(range(1, n + 1), 2):
        qij = _chain_q(i, j, q)
        qvals[(i, j)] = qij if (quantum and j == i + 1) else ZERO
        cols = []
        for c, w in enumerate(B):
            v = _swap_pos(w, i, j)
            r = idx[v]
            if lens[r] == lens[c] + 1:
                cols.append({r: ONE})
            elif quantum and lens[r] == lens[c] - 2 * (j - i) + 1 and qij:
                cols.append({r: qij})
            else:
                cols.append({})
        ops[(i, j)] = LinOp(len(B), cols)
    return DunklFamily(n, ops, qvals, "qbruhat" if quantum else "bruhat")


def bruhat_rep(n) -> DunklFamily:
    return quantum_bruhat_rep(n, quantum=False)


def relation_check(fam: DunklFamily) -> list:
    """Defining relations of 3T_n at beta = 0 plus commutativity of the Dunkl elements."""
    n, u = fam.n, fam.u
    I = fam.identity()
    out = []
    bad = [[i, j] for i, j in combinations(range(1, n + 1), 2)
           if not (u(i, j) * u(i, j)) == I.scale(fam.q[(i, j)])]
    out.append(_rec("u_ij^2 = q_ij", not bad, bad or None))
    bad = []
    for (i, j), (k, l) in combinations(list(combinations(range(1, n + 1), 2)), 2):
        if len({i, j, k, l}) == 4 and not commutator(u(i, j), u(k, l)).is_zero():
            bad.append([i, j, k, l])
    out.append(_rec("locality [u_ij,u_kl]=0", not bad, bad or None))
    bad1, bad2 = [], []
    for i, j, k in permutations(range(1, n + 1), 3):
        if not (u(i, j) * u(j, k) - u(j, k) * u(i, k) - u(i, k) * u(i, j)).is_zero():
            bad1.append([i, j, k])
        if not (u(j, k) * u(i, j) - u(i, k) * u(j, k) - u(i, j) * u(i, k)).is_zero():
            bad2.append([i, j, k])
    out.append(_rec("u_ij u_jk = u_jk u_ik + u_ik u_ij", not bad1, bad1[:5] or None))
    out.append(_rec("u_jk u_ij = u_ik u_jk + u_ij u_ik", not bad2, bad2[:5] or None))
    th = fam.thetas()
    total = LinOp.zero(fam.dim)
    for t in th:
        total = total + t
    out.append(_rec("sum theta_i = 0", total.is_zero()))
    bad = [[i + 1, j + 1] for i, j in combinations(range(n), 2)
           if not commutator(th[i], th[j]).is_zero()]
    out.append(_rec("[theta_i,theta_j] = 0", not bad, bad or None))
    return out


# ---------------------------------------------------------------------------
# quantum elementary polynomials

def matchings(elems, size):
    """All sets of ``size`` disjoint pairs (a < b) from the sorted sequence elems."""
    elems = list(elems)
    if size == 0:
        yield ()
        return
    if len(elems) < 2 * size:
        return
    first, rest = elems[0], elems[1:]
    yield from matchings(rest, size)
    for k, b in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in matchings(remaining, size - 1):
            yield ((first, b),) + m


def _elementary(k, items, one, zero):
    total = zero
    for S in combinations(items, k):
        term = one
        for s in S:
            term = term * s
        total = total + term
    return total


def quantum_elementary(k, xs=None, q=None, n=None, one=ONE, zero=ZERO):
    """e_k^q: sum over matchings of e_{k-2l}(unmatched x) times the matched q_ij.

    ``xs`` is a list of commuting elements (default: variables x_1..x_n) and
    ``q(i, j)`` returns the parameter for i < j (default: the variable qij_ij).
    """
    if xs is None:
        xs = [var("x", i) for i in range(1, n + 1)]
    n = len(xs)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if q is None:
        q = lambda i, j: var("qij", i, j)  # noqa: E731
    total = zero
    for ell in range(k // 2 + 1):
        for m in matchings(range(1, n + 1), ell):
            w = ONE
            for i, j in m:
                w = w * q(i, j)
            if not w:
                continue
            used = {a for pair in m for a in pair}
            rest = [xs[a - 1] for a in range(1, n + 1) if a not in used]
            e = _elementary(k - 2 * ell, rest, one, zero)
            total = total + e * w
    return total


def noncommutative_elementary(k, xs, one, zero):
    """L_k: sum of the increasing-index products x_{i1} ... x_{ik}."""
    return _elementary(k, xs, one, zero)


def vanishing_check(n, mode="bruhat") -> list:
    """e_k(theta) = 0 (bruhat) or e_k^q(theta) = 0 with the chain q (quantum), k = 1..n."""
    if n > 5:
        raise SizeError("vanishing_check supports n <= 5")
    fam = bruhat_rep(n) if mode == "bruhat" else quantum_bruhat_rep(n)
    th = fam.thetas()
    one, zero = fam.identity(), LinOp.zero(fam.dim)
    if mode == "bruhat":
        qf = lambda i, j: ZERO  # noqa: E731
    else:
        qf = lambda i, j: fam.q[(i, j)]  # noqa: E731
    out = []
    for k in range(1, n + 1):
        e = quantum_elementary(k, th, qf, one=one, zero=zero)
        out.append(_rec(f"e_{k}{'^q' if mode != 'bruhat' else ''}(theta) = 0", e.is_zero()))
        L = noncommutative_elementary(k, th, one, zero)
        if mode == "bruhat":
            out.append(_rec(f"L_{k}(theta) = 0", L.is_zero()))
    return out


# ---------------------------------------------------------------------------
# multiplicative Dunkl elements

def multiplicative_dunkl_check(n, fam: DunklFamily | None = None) -> list:
    """Sum_{|I|=k} Theta_I prod_{i notin I, j in I, i<j}(1 - t^2 q_ij) = binom(n,k).

    Theta_j = (h_{j-1,j}^-1 ... h_{1j}^-1)(h_{jn} ... h_{j,j+1}) with h_ij = 1 + t u_ij.
    Since u_aj^2 = q_aj is scalar, h_aj^-1 = (1 - t u_aj)/(1 - t^2 q_aj); we clear
    these denominators and compare both sides multiplied by prod_{a<b}(1 - t^2 q_ab).
    """
    if n > 4:
        raise SizeError("multiplicative_dunkl_check supports n <= 4")
    fam = fam or quantum_bruhat_rep(n)
    t = var("t")
    dim = fam.dim
    I = fam.identity()

    def h(i, j):
        return I + fam.u(i, j).scale(t)

    def f(i, j):
        return ONE - t * t * fam.q[(min(i, j), max(i, j))]

    num = {}
    for j in range(1, n + 1):
        left = op_prod([I - fam.u(a, j).scale(t) for a in range(j - 1, 0, -1)], dim)
        right = op_prod([h(j, a) for a in range(n, j, -1)], dim)
        num[j] = left * right
    out = []
    bad = [[i, j] for i, j in combinations(range(1, n + 1), 2)
           if not commutator(num[i], num[j]).is_zero()]
    out.append(_rec("[Theta_i,Theta_j] = 0", not bad, bad or None))
    pairs = list(combinations(range(1, n + 1), 2))
    D = poly_prod(f(a, b) for a, b in pairs)
    full = op_prod([num[j] for j in range(1, n + 1)], dim)
    out.append(_rec("prod_j Theta_j = 1", full == I.scale(D)))
    for k in range(1, n + 1):
        lhs = LinOp.zero(dim)
        for S in combinations(range(1, n + 1), k):
            Sset = set(S)
            w = poly_prod(f(a, b) for a, b in pairs if not (a in Sset and b in Sset))
            lhs = lhs + op_prod([num[j] for j in S], dim).scale(w)
        out.append(_rec(f"Theta identity k={k}", lhs == I.scale(D * comb(n, k))))
    return out


# ---------------------------------------------------------------------------
# group algebra Q[S_n] and Gaudin elements

class GroupAlg:
    """Q[S_n] with elements stored as {basis index: Fraction}; (a*b) = a o b."""

    def __init__(self, n):
        if n > 5:
            raise SizeError("group algebra supports n <= 5")
        self.n = n
        self.B = basis(n)
        idx = _index(n)
        self.table = [[idx[tuple(u[v[i] - 1] for i in range(n))] for v in self.B] for u in self.B]
        self.e = idx[tuple(range(1, n + 1))]

    def transposition(self, i, j, c=1):
        w = list(range(1, self.n + 1))
        w[i - 1], w[j - 1] = j, i
        return {_index(self.n)[tuple(w)]: Fraction(c)}

    def one(self):
        return {self.e: Fraction(1)}

    @staticmethod
    def add(a, b, s=1):
        out = dict(a)
        for k, v in b.items():
            x = out.get(k, 0) + s * v
            if x:
                out[k] = x
            else:
                out.pop(k, None)
        return out

    @staticmethod
    def scale(a, c):
        return {k: v * c for k, v in a.items()} if c else {}

    def mul(self, a, b):
        out: dict = {}
        T = self.table
        for i, x in a.items():
            row = T[i]
            for j, y in b.items():
                k = row[j]
                out[k] = out.get(k, 0) + x * y
        return {k: v for k, v in out.items() if v}

    def as_linop(self, a) -> LinOp:
        """Left multiplication by a on Q[S_n]."""
        dim = len(self.B)
        cols = []
        for c in range(dim):
            col: dict = {}
            for g, x in a.items():
                r = self.table[g][c]
                col[r] = col.get(r, 0) + x
            cols.append({r: v for r, v in col.items() if v})
        return LinOp(dim, cols)


def _check_distinct(z):
    if len(set(z)) != len(z):
        raise ValueError("z values must be distinct")


def gaudin_elements(n, z):
    """theta_i = sum_j p_ij s_ij with p_ij = 1/(z_i - z_j)."""
    _check_distinct(z)
    G = GroupAlg(n)
    z = [Fraction(v) for v in z]

    def p(i, j):
        return 1 / (z[i - 1] - z[j - 1])

    th = []
    for i in range(1, n + 1):
        el: dict = {}
        for j in range(1, n + 1):
            if j != i:
                el = G.add(el, G.transposition(i, j, p(i, j)))
        th.append(el)
    return G, th, p


def h_tilde(J, p):
    """Sum over matchings {(k_a < l_a)} inside J of prod_{unmatched} h_j prod_a p_{k_a l_a}^2,
    as a list of (unmatched frozenset, coefficient) pairs."""
    J = sorted(J)
    terms = []
    for r in range(len(J) // 2 + 1):
        for m in matchings(J, r):
            c = Fraction(1)
            for k, l in m:
                c *= p(k, l) ** 2
            used = {a for pair in m for a in pair}
            terms.append((frozenset(a for a in J if a not in used), c))
    return terms


def _mj_matrix(J, p):
    J = sorted(J)
    M = []
    for a, ja in enumerate(J):
        row = []
        for b, jb in enumerate(J):
            if a == b:
                row.append(var("h", ja))
            elif a < b:
                row.append(ExactPoly.const(p(ja, jb)))
            else:
                row.append(ExactPoly.const(-p(jb, ja)))
        M.append(row)
    return M


def _h_poly(terms):
    return poly_sum(poly_prod([var("h", j) for j in sorted(S)]) * c for S, c in terms)


def gaudin_G(n, m, k, r, hprod, p):
    """G^{(n)}_{m,k,r} with h_J -> hprod(frozenset J)."""
    total = None
    for I in combinations(range(1, n), r):
        w = Fraction(1)
        for i in I:
            w /= p(i, n)
        for J in combinations(range(1, n + 1), r + m - k) if r + m - k >= 0 else ():
            top = n - len(set(I) | set(J))
            bot = n - m - r
            if bot < 0 or bot > top:
                continue
            c = w * comb(top, bot)
            for S, cc in h_tilde(J, p):
                x = hprod(S)
                x = {a: v * c * cc for a, v in x.items()}
                total = x if total is None else GroupAlg.add(total, x)
    return total or {}


def gaudin_check(n, z=None, seed=0) -> list:
    if n > 5:
        raise SizeError("gaudin_check supports n <= 5")
    if z is None:
        rng = random.Random(seed)
        z = []
        while len(z) < n:
            v = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
            if v not in z:
                z.append(v)
    G, th, p = gaudin_elements(n, z)
    out = []
    bad = [[i + 1, j + 1] for i, j in combinations(range(n), 2)
           if G.add(G.mul(th[i], th[j]), G.mul(th[j], th[i]), -1)]
    out.append(_rec("[theta_i,theta_j] = 0", not bad, bad or None))
    cache = {frozenset(): G.one()}

    def hprod(S):
        if S not in cache:
            a = min(S)
            cache[S] = G.mul(th[a - 1], hprod(S - {a}))
        return cache[S]

    # h~_J agrees with the skew determinant DET|M_J|
    bad = []
    for size in range(1, n + 1):
        for J in combinations(range(1, n + 1), size):
            if _h_poly(h_tilde(J, p)) != poly_det(_mj_matrix(J, p)):
                bad.append(list(J))
    out.append(_rec("h~_J = DET M_J", not bad, bad or None))
    bad = []
    for m in range(n + 1):
        for k in range(m):
            for r in range(n):
                if gaudin_G(n, m, k, r, hprod, p):
                    bad.append([m, k, r])
    out.append(_rec("G_{m,k,r}(theta) = 0 for m > k", not bad, bad or None))
    d = [{}]
    for j in range(2, n + 1):
        el: dict = {}
        for a in range(1, j):
            el = G.add(el, G.transposition(a, j))
        d.append(el)
    bad = [[i + 2, j + 2] for i, j in combinations(range(n - 1), 2)
           if G.add(G.mul(d[i + 1], d[j + 1]), G.mul(d[j + 1], d[i + 1]), -1)]
    out.append(_rec("[d_i,d_j] = 0", not bad, bad or None))
    bad = []
    for r in range(n):
        e = _elementary_ga(G, r, d[1:])
        if G.add(gaudin_G(n, 0, 0, r, hprod, p), e, -1):
            bad.append(r)
    out.append(_rec("G_{0,0,r}(theta) = e_r(d_2..d_n)", not bad, bad or None))
    if n == 3:
        q = lambda i, j: p(i, j) ** 2  # noqa: E731
        t12 = G.mul(th[0], th[1])
        a = G.add(G.add(t12, G.mul(th[0], th[2])), G.scale(G.one(), q(1, 2) + q(1, 3)))
        b = G.add(G.add(t12, G.mul(th[1], th[2])), G.scale(G.one(), q(1, 2) + q(2, 3)))
        g201 = G.add(G.scale(a, 1 / p(1, 3)), G.scale(b, 1 / p(2, 3)))
        out.append(_rec("n=3: G_{2,0,1} display = 0", not g201))
        c = G.add(G.scale(th[0], p(2, 3)), G.scale(th[1], p(1, 3)))
        gens = [G.transposition(1, 2), G.transposition(2, 3)]
        central = all(not G.add(G.mul(c, g), G.mul(g, c), -1) for g in gens)
        out.append(_rec("n=3: p23 theta1 + p13 theta2 central", central))
    return out


def _elementary_ga(G, r, items):
    total: dict = {} if r else G.one()
    if r == 0:
        return total
    for S in combinations(items, r):
        term = G.one()
        for s in S:
            term = G.mul(term, s)
        total = G.add(total, term)
    return total


# ---------------------------------------------------------------------------
# Pfaffian / Hafnian and the skew determinant

def _perfect_matchings(elems):
    elems = list(elems)
    if not elems:
        yield ()
        return
    a = elems[0]
    for k in range(1, len(elems)):
        rest = elems[1:k] + elems[k + 1:]
        for m in _perfect_matchings(rest):
            yield ((a, elems[k]),) + m


def hafnian(A):
    n = len(A)
    if n % 2:
        return 0
    total = 0
    for m in _perfect_matchings(range(n)):
        t = 1
        for a, b in m:
            t *= A[a][b]
        total += t
    return total


def pfaffian_hafnian_check(n, z=None, seed=0) -> list:
    """(a) det A_n(p) = Hf(A_n(p^2)) for even n; (b) the skew characteristic
    determinant gives the quantum elementary polynomials with q_ij = p_ij^2."""
    if n > 6:
        raise SizeError("pfaffian_hafnian_check supports n <= 6")
    if z is None:
        rng = random.Random(seed)
        z = []
        while len(z) < n:
            v = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            if v not in z:
                z.append(v)
    _check_distinct(z)
    z = [Fraction(v) for v in z]

    def p(i, j):
        return 1 / (z[i - 1] - z[j - 1])

    A = [[p(i, j) if i != j else Fraction(0) for j in range(1, n + 1)] for i in range(1, n + 1)]
    out = []
    if n % 2 == 0:
        from .exactpoly import int_det
        A2 = [[a * a for a in row] for row in A]
        out.append(_rec(f"n={n}: det A(p) = Hf A(p^2)", int_det(A) == hafnian(A2)))
    if n <= 4:
        t = var("t")
        M = [[(t + var("x", i) if i == j else ExactPoly.const(A[i - 1][j - 1]))
              for j in range(1, n + 1)] for i in range(1, n + 1)]
        det = poly_det(M)
        ok = all(det.coeff(TV, n - k) ==
                 quantum_elementary(k, n=n, q=lambda i, j: ExactPoly.const(p(i, j) ** 2))
                 for k in range(n + 1))
        out.append(_rec(f"n={n}: DET(diag(t+x)+A(p)) = sum e_k^q t^(n-k)", ok))
    return out


# ---------------------------------------------------------------------------
# nabla operators on the free algebra

class Nabla:
    """Operators u_ij on Z<t_1..t_n>; elements are {word tuple: int}."""

    def __init__(self, n, cap):
        if cap > 6:
            raise SizeError("degree cap must be <= 6")
        self.n, self.cap = n, cap

    @staticmethod
    def _swap(word, i, j):
        return tuple(j if a == i else i if a == j else a for a in word)

    def _on_letter(self, i, j, a):
        if a == i:
            return {(i, j): 1}
        if a == j:
            return {(j, i): -1}
        return {}

    def apply(self, i, j, elt):
        """u_ij on an element; u_ji = -u_ij."""
        if i > j:
            return {w: -c for w, c in self.apply(j, i, elt).items()}
        out: dict = {}
        for w, c in elt.items():
            for pos, a in enumerate(w):
                img = self._on_letter(i, j, a)
                if not img:
                    continue
                pre = self._swap(w[:pos], i, j)
                post = w[pos + 1:]
                for mid, cm in img.items():
                    key = pre + mid + post
                    v = out.get(key, 0) + c * cm
                    if v:
                        out[key] = v
                    else:
                        out.pop(key)
        return out

    def compose(self, ops, elt):
        """Apply a product of operators (listed left to right) to elt."""
        for i, j in reversed(ops):
            elt = self.apply(i, j, elt)
        return elt

    def words(self):
        for d in range(self.cap + 1):
            yield from product(range(1, self.n + 1), repeat=d)


def _lin(*pairs):
    out: dict = {}
    for s, e in pairs:
        for w, c in e.items():
            v = out.get(w, 0) + s * c
            if v:
                out[w] = v
            else:
                out.pop(w)
    return out


class SquareCentralQuotient:
    """Degree-wise reduction modulo the ideal spanned by a (t_i^2 t_j - t_j t_i^2) b."""

    def __init__(self, n):
        self.n = n
        self._piv = {}

    def _basis(self, d):
        if d in self._piv:
            return self._piv[d]
        piv: dict = {}
        n = self.n
        for lead in range(d - 2):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    for a in product(range(1, n + 1), repeat=lead):
                        for b in product(range(1, n + 1), repeat=d - 3 - lead):
                            vec = {a + (i, i, j) + b: Fraction(1), a + (j, i, i) + b: Fraction(-1)}
                            vec = self._reduce(vec, piv)
                            if vec:
                                top = max(vec)
                                c = vec[top]
                                piv[top] = {w: v / c for w, v in vec.items()}
        self._piv[d] = piv
        return piv

    @staticmethod
    def _reduce(vec, piv):
        vec = dict(vec)
        while vec:
            keys = [w for w in vec if w in piv]
            if not keys:
                return vec
            w = max(keys)
            c = vec[w]
            for u, v in piv[w].items():
                x = vec.get(u, 0) - c * v
                if x:
                    vec[u] = x
                else:
                    vec.pop(u, None)
        return vec

    def is_zero(self, elt):
        by_deg: dict = {}
        for w, c in elt.items():
            by_deg.setdefault(len(w), {})[w] = Fraction(c)
        return all(not self._reduce(v, self._basis(d)) for d, v in by_deg.items())


def nabla_check(n, cap) -> list:
    """Relations of the nabla operators.

    Both three-term relations hold on the free algebra and u_ij^2 vanishes modulo
    central squares.  That ideal is not stable under the operators, so the cubic
    relations (Yang-Baxter, braid) need not follow; they are reported as computed.
    """
    N = Nabla(n, cap)
    Q = SquareCentralQuotient(n)
    out = []
    words = list(N.words())
    short = [w for w in words if len(w) <= cap - 3]
    bad = []
    for i, j, k in combinations(range(1, n + 1), 3):
        for w in words:
            e = {w: 1}
            r = _lin((1, N.compose([(i, j), (j, k)], e)),
                     (-1, N.compose([(j, k), (i, k)], e)),
                     (-1, N.compose([(i, k), (i, j)], e)))
            if r:
                bad.append([i, j, k, list(w)])
                break
    out.append(_rec("u_ijk annihilates words", not bad, bad[:3] or None))
    bad = []
    for i, j, k in combinations(range(1, n + 1), 3):
        for w in words:
            e = {w: 1}
            r = _lin((1, N.compose([(j, k), (i, j)], e)),
                     (-1, N.compose([(i, k), (j, k)], e)),
                     (-1, N.compose([(i, j), (i, k)], e)))
            if r:
                bad.append([i, j, k, list(w)])
                break
    out.append(_rec("u_jk u_ij = u_ik u_jk + u_ij u_ik on words", not bad, bad[:3] or None))
    bad = []
    for i, j in combinations(range(1, n + 1), 2):
        for w in [w for w in words if len(w) <= cap - 2]:
            if not Q.is_zero(N.compose([(i, j), (i, j)], {w: 1})):
                bad.append([i, j, list(w)])
                break
    out.append(_rec("u_ij^2 = 0 mod central squares", not bad, bad[:3] or None))
    bad = []
    for i, j, k in combinations(range(1, n + 1), 3):
        for w in short:
            e = {w: 1}
            if not Q.is_zero(_lin((1, N.compose([(i, j), (i, k), (j, k)], e)),
                                  (-1, N.compose([(j, k), (i, k), (i, j)], e)))):
                bad.append([i, j, k, list(w)])
                break
    out.append(_rec("Yang-Baxter mod central squares", not bad, bad[:3] or None))
    bad = []
    for a in range(1, n - 1):
        s, t = (a, a + 1), (a + 1, a + 2)
        for w in short:
            e = {w: 1}
            if not Q.is_zero(_lin((1, N.compose([s, t, s], e)), (-1, N.compose([t, s, t], e)))):
                bad.append([a, list(w)])
                break
    for a, b in combinations(range(1, n), 2):
        if b - a < 2:
            continue
        s, t = (a, a + 1), (b, b + 1)
        for w in words:
            e = {w: 1}
            if _lin((1, N.compose([s, t], e)), (-1, N.compose([t, s], e))):
                bad.append([a, b, list(w)])
                break
    out.append(_rec("Coxeter relations mod central squares", not bad, bad[:3] or None))
    if n <= 5:
        out.append(_rec("cyclic relation", cyclic_relation(n) == _cyclic_rhs(n)))
    return out


def cyclic_relation(n):
    """nabla_{n-1,n} ... nabla_{1,2} applied to t_1^2."""
    N = Nabla(n, 6)
    return N.compose([(n - j, n - j + 1) for j in range(1, n)], {(1, 1): 1})


def _cyclic_rhs(n):
    out = {}
    for i in range(1, n + 1):
        w = (i,) + tuple(range(i + 1, n + 1)) + tuple(range(1, i)) + (i,)
        out[w] = out.get(w, 0) + 1
    return out


def nabla_rep(n, cap):
    return Nabla(n, cap)


# ---------------------------------------------------------------------------
# Fulton universal ring

def g_var(a, b):
    return x_var(a) if b == 0 else var("g", a, b)


def x_var(i):
    return var("x", i)


def fulton_matrix(n, g=g_var):
    t = var("t")
    M = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(x_var(i) + t)
            elif j > i:
                row.append(g(i, j - i))
            elif i - j == 1:
                row.append(ExactPoly.const(-1))
            else:
                row.append(ZERO)
        M.append(row)
    return M


def fulton_det_coeffs(n, g=g_var):
    det = poly_det(fulton_matrix(n, g))
    return [det.coeff(TV, n - k) for k in range(n + 1)]


def fulton_sum_formula(n, k, g=g_var):
    """Sum over disjoint blocks [i, i+j] of prod g_i[j] times e_{k-m}(outside)."""
    total = ZERO
    blocks = [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]

    def rec(start, chosen, used, m):
        nonlocal total
        if m <= k:
            rest = [x_var(a) for a in range(1, n + 1) if a not in used]
            if k - m <= len(rest):
                w = poly_prod(g(i, j) for i, j in chosen)
                total = total + w * _elementary(k - m, rest, ONE, ZERO)
        for idx in range(start, len(blocks)):
            i, j = blocks[idx]
            seg = set(range(i, i + j + 1))
            if seg & used or m + j + 1 > k:
                continue
            rec(idx + 1, chosen + [(i, j)], used | seg, m + j + 1)

    rec(0, [], set(), 0)
    return total


class FultonTable:
    """c_k(m) by the recurrence, for a given assignment of the g_a[b]."""

    def __init__(self, n, g=g_var):
        self.n, self.g = n, g
        self.c = {}
        for m in range(0, n + 1):
            for k in range(0, m + 1):
                self.c[(k, m)] = self._c(k, m)

    def _c(self, k, m):
        if k == 0:
            return ONE
        if k > m:
            return ZERO
        total = self.get(k, m - 1)
        for a in range(k):
            total = total + self.g(m - a, a) * self.get(k - a - 1, m - a - 1)
        return total

    def get(self, k, m):
        if k == 0:
            return ONE
        if k > m or m < 0:
            return ZERO
        return self.c[(k, m)]


def solve_g(n, c=None):
    """g_a[b] (a + b <= n) from c_k(m) = e_k^q(X_m) through the recurrence."""
    if c is None:
        c = lambda k, m: quantum_elementary(k, n=m) if 0 <= k <= m else ZERO  # noqa: E731
    g = {}

    def gv(a, b):
        return x_var(a) if b == 0 else g[(a, b)]

    for b in range(1, n):
        for a in range(1, n - b + 1):
            m = a + b
            val = c(b + 1, m) - c(b + 1, m - 1)
            for s in range(b):
                val = val - gv(m - s, s) * c(b - s, m - s - 1)
            g[(a, b)] = val
    return g


def fulton_coeffs(n) -> dict:
    """c_k(m) three ways (det, Lemma sum, recurrence) and the g <-> q conversion."""
    if n > 6:
        raise SizeError("fulton_coeffs supports n <= 6")
    out = {"n": n, "records": []}
    det = {m: fulton_det_coeffs(m) for m in range(1, min(n, 5) + 1)}
    tab = FultonTable(n)
    ok_sum = all(det[m][k] == fulton_sum_formula(m, k) for m in det for k in range(m + 1))
    ok_rec = all(det[m][k] == tab.get(k, m) for m in det for k in range(m + 1))
    out["records"].append(_rec("det = block sum", ok_sum))
    out["records"].append(_rec("det = recurrence", ok_rec))
    g = solve_g(n)
    out["g"] = {f"{a},{b}": str(v) for (a, b), v in sorted(g.items())}

    def gfun(a, b):
        return x_var(a) if b == 0 else g[(a, b)]

    sub = FultonTable(n, gfun)
    ok = all(sub.get(k, m) == quantum_elementary(k, n=m)
             for m in range(1, n + 1) for k in range(m + 1))
    out["records"].append(_rec("c_k(m) = e_k^q(X_m) after g <- q", ok))
    ok1 = all(g[(m - 1, 1)] == example_g_values(m)[0] for m in range(2, n + 1))
    ok2 = all(g[(m - 2, 2)] == example_g_values(m)[1] for m in range(3, n + 1))
    out["records"].append(_rec("g_{m-1}[1] = sum_j q_jm", ok1))
    out["records"].append(_rec("g_{m-2}[2] = sum_j q_jm (x_{m-1} - x_j)", ok2))
    return out


def example_g_values(n):
    """Closed forms for g_{n-1}[1] and g_{n-2}[2]."""
    qv = lambda i, j: var("qij", i, j)  # noqa: E731
    g1 = poly_sum(qv(j, n) for j in range(1, n))
    g2 = poly_sum(qv(j, n) * (x_var(n - 1) - x_var(j)) for j in range(1, n - 1)) if n >= 3 else None
    return g1, g2


# ---------------------------------------------------------------------------
# dispatcher used by the CLI

def rep_check(kind, n, check="all", seed=0) -> list:
    if kind == "bruhat":
        fam = bruhat_rep(n)
        recs = relation_check(fam)
        if check in ("all", "vanishing") and n <= 5:
            recs += vanishing_check(n, "bruhat")
        if check in ("all", "multiplicative") and n <= 4:
            recs += multiplicative_dunkl_check(n, fam)
        return recs
    if kind == "qbruhat":
        fam = quantum_bruhat_rep(n)
        recs = relation_check(fam)
        if check in ("all", "vanishing") and n <= 5:
            recs += vanishing_check(n, "quantum")
        if check in ("all", "multiplicative") and n <= 4:
            recs += multiplicative_dunkl_check(n, fam)
        return recs
    if kind == "gaudin":
        return gaudin_check(n, seed=seed) + pfaffian_hafnian_check(n, seed=seed)
    if kind == "nabla":
        return nabla_check(n, 5 if n <= 3 else 4)
    if kind == "fulton":
        return fulton_coeffs(n)["records"]
    raise ValueError(f"unknown representation kind {kind!r}")


__all__ = [
    "LinOp", "DunklFamily", "GroupAlg", "Nabla", "FultonTable",
    "basis", "bruhat_rep", "quantum_bruhat_rep", "relation_check", "quantum_elementary",
    "matchings", "vanishing_check", "multiplicative_dunkl_check", "gaudin_elements",
    "gaudin_check", "h_tilde", "hafnian", "pfaffian_hafnian_check", "nabla_rep",
    "nabla_check", "cyclic_relation", "fulton_matrix", "fulton_det_coeffs",
    "fulton_sum_formula", "solve_g", "fulton_coeffs", "example_g_values", "rep_check",
    "all_pass", "IdentityFailure",
]

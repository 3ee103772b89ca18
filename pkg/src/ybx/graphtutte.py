"""Tutte, chromatic and related graph polynomials on small multigraphs.

``tutte_dc`` is plain deletion-contraction and serves as the oracle for the
generating-function formulas (universal Tutte, multipartite EGF, complete
graphs).  Polynomials are ExactPoly in ``x``, ``y`` (and ``q_ij`` / ``p_ij``).
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .errors import IdentityFailure, SizeError
from .exactpoly import (ONE, ZERO, ExactPoly, int_det, poly_prod, poly_sum,
                        stirling2, var, var_id)

XV, YV, ZV, TV, UV = (var_id(f) for f in "xyztu")
_x, _y, _t = var("x"), var("y"), var("t")


def q_var(i, j):
    return var("qij", min(i, j), max(i, j))


def p_var(i, j):
    return var("p", min(i, j), max(i, j))


class Multigraph:
    """Loopless multigraph on vertices 0..n-1 given by a symmetric multiplicity matrix."""

    def __init__(self, n, mult=None):
        self.n = n
        m = [[0] * n for _ in range(n)]
        if mult is not None:
            for i in range(n):
                for j in range(n):
                    m[i][j] = int(mult[i][j])
        for i in range(n):
            if m[i][i]:
                raise ValueError("loops are not allowed")
            for j in range(i):
                if m[i][j] != m[j][i] or m[i][j] < 0:
                    raise ValueError("multiplicity matrix must be symmetric and non-negative")
        self.mult = tuple(tuple(r) for r in m)

    @classmethod
    def from_edges(cls, n, edges):
        """edges: iterable of (i, j) or (i, j, m), 1-based."""
        m = [[0] * n for _ in range(n)]
        for e in edges:
            i, j = e[0] - 1, e[1] - 1
            k = e[2] if len(e) > 2 else 1
            m[i][j] += k
            m[j][i] += k
        return cls(n, m)

    @classmethod
    def parse(cls, text):
        """First line n, then lines ``i j m``."""
        lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty graph file")
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = [int(v) for v in ln.split()]
            if len(parts) == 2:
                parts.append(1)
            if len(parts) != 3 or not (1 <= parts[0] <= n and 1 <= parts[1] <= n):
                raise ValueError(f"bad edge line: {ln!r}")
            edges.append(tuple(parts))
        return cls.from_edges(n, edges)

    @classmethod
    def complete(cls, n):
        return cls(n, [[int(i != j) for j in range(n)] for i in range(n)])

    @classmethod
    def multipartite(cls, parts, ell=None):
        """K_{n_1..n_r} with multiplicity ell[a][b] between parts a and b (default 1)."""
        r = len(parts)
        ell = _ell_matrix(r, ell)
        lab = [a for a, s in enumerate(parts) for _ in range(s)]
        N = len(lab)
        return cls(N, [[ell[lab[i]][lab[j]] if lab[i] != lab[j] else 0
                        for j in range(N)] for i in range(N)])

    def edges(self):
        return [(i, j, self.mult[i][j]) for i in range(self.n)
                for j in range(i + 1, self.n) if self.mult[i][j]]

    def num_edges(self):
        return sum(m for _, _, m in self.edges())

    def components(self):
        seen, comps = set(), []
        for s in range(self.n):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in range(self.n):
                    if self.mult[v][w] and w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def kappa(self):
        return len(self.components())

    def induced(self, verts):
        return Multigraph(len(verts), [[self.mult[a][b] for b in verts] for a in verts])

    def __repr__(self):
        return f"Multigraph({self.n}, {self.edges()})"


def _ell_matrix(r, ell):
    if ell is None:
        return [[int(a != b) for b in range(r)] for a in range(r)]
    if isinstance(ell, dict):
        m = [[0] * r for _ in range(r)]
        for (a, b), v in ell.items():
            m[a - 1][b - 1] = m[b - 1][a - 1] = v
        return m
    return [list(row) for row in ell]


# ---------------------------------------------------------------------------
# deletion-contraction
# ---------------------------------------------------------------------------

def _certificate(n, edges):
    """Relabel by a degree-refined order; equal certificates mean isomorphic graphs."""
    deg = [0] * n
    nb = [[] for _ in range(n)]
    for (i, j), m in edges.items():
        deg[i] += m
        deg[j] += m
        nb[i].append(m)
        nb[j].append(m)
    order = sorted(range(n), key=lambda v: (deg[v], sorted(nb[v])))
    pos = {v: k for k, v in enumerate(order)}
    return (n, tuple(sorted((min(pos[i], pos[j]), max(pos[i], pos[j]), m)
                            for (i, j), m in edges.items())))


def _ypoly_sum(m):
    """1 + y + ... + y^{m-1}"""
    return poly_sum(_y ** k for k in range(m))


class _DC:
    def __init__(self, rng=None):
        self.memo = {}
        self.rng = rng

    def run(self, n, edges):
        # drop isolated vertices
        used = sorted({v for e in edges for v in e})
        if not used:
            return ONE
        idx = {v: k for k, v in enumerate(used)}
        edges = {(idx[i], idx[j]): m for (i, j), m in edges.items()}
        n = len(used)
        key = _certificate(n, edges)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        comps = _comps(n, edges)
        if len(comps) > 1:
            res = ONE
            for c in comps:
                cs = set(c)
                res = res * self.run(n, {e: m for e, m in edges.items() if e[0] in cs})
        else:
            keys = sorted(edges)
            (u, v) = self.rng.choice(keys) if self.rng else keys[0]
            m = edges[(u, v)]
            g0 = {e: k for e, k in edges.items() if e != (u, v)}
            gc = {}
            for (a, b), k in g0.items():
                a2 = u if a == v else a
                b2 = u if b == v else b
                if a2 == b2:
                    continue
                e = (min(a2, b2), max(a2, b2))
                gc[e] = gc.get(e, 0) + k
            tc = self.run(n, gc)
            if _connected(u, v, g0):
                res = self.run(n, g0) + _ypoly_sum(m) * tc
            else:
                res = (_x + _ypoly_sum(m) - 1) * tc
        self.memo[key] = res
        return res


def _comps(n, edges):
    adj = {v: set() for v in range(n)}
    for (a, b) in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        st, comp = [s], []
        seen.add(s)
        while st:
            v = st.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    st.append(w)
        out.append(comp)
    return out


def _connected(u, v, edges):
    adj = {}
    for (a, b) in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    st, seen = [u], {u}
    while st:
        w = st.pop()
        if w == v:
            return True
        for z in adj.get(w, ()):
            if z not in seen:
                seen.add(z)
                st.append(z)
    return False


def tutte_dc(G: Multigraph, seed=None, max_edges=40) -> ExactPoly:
    """Tutte polynomial by deletion-contraction (product over components).

    With ``seed`` the edge to delete is chosen at random, which is how order
    independence is tested.
    """
    if G.num_edges() > max_edges and len(G.edges()) > 16:
        raise SizeError(f"{G.num_edges()} edges exceeds the deletion-contraction cap")
    rng = random.Random(seed) if seed is not None else None
    edges = {(i, j): m for i, j, m in G.edges()}
    return _DC(rng).run(G.n, edges)


def spanning_trees(G: Multigraph) -> int:
    """Matrix-tree theorem."""
    n = G.n
    if n <= 1:
        return 1
    L = [[(sum(G.mult[i]) if i == j else -G.mult[i][j]) for j in range(1, n)]
         for i in range(1, n)]
    return int(int_det(L))


# ---------------------------------------------------------------------------
# generating-function side
# ---------------------------------------------------------------------------

def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for k in range(len(p)):
            yield p[:k] + [[first] + p[k]] + p[k + 1:]


def _falling_in(X, z, k):
    """(Xz)(Xz-1)...(Xz-k+1)/(Xz) as ExactPoly; k >= 1."""
    out = ONE
    for j in range(1, k):
        out = out * (X * z - j)
    return out


def _shift_back(P, nz):
    """Divide by z^nz (asserting exactness) and put z = y-1, X = x-1."""
    zv = ZV
    terms = {}
    for m, c in P.terms.items():
        d = dict(m)
        e = d.get(zv, 0)
        if e < nz:
            raise IdentityFailure("denominator (y-1) did not clear")
        d[zv] = e - nz
        terms[tuple(sorted((v, k) for v, k in d.items() if k))] = c
    return ExactPoly(terms)


@lru_cache(maxsize=None)
def universal_tutte(n: int) -> ExactPoly:
    """T_n({q_ij}, x, y) by set-partition expansion of the symbolic power.

    (x-1) T_n = Coeff_{t_1..t_n} (sum_S prod_{i<j in S}(1+q_ij z) z^{-|S|} t^S)^{(x-1)z},
    z = y-1.  Expanding the power over set partitions leaves the falling
    factorial of (x-1)z, one factor (x-1)z of which cancels the left side.
    """
    if n < 1:
        raise ValueError("n >= 1")
    if n > 5:
        raise SizeError("universal_tutte is capped at n <= 5")
    X, z = var("x") - 1, var("z")
    acc = ZERO
    for part in set_partitions(range(1, n + 1)):
        w = _falling_in(X, z, len(part))
        for B in part:
            for i, j in combinations(B, 2):
                w = w * (1 + q_var(i, j) * z)
        acc = acc + w
    acc = _shift_back(acc, n - 1)
    return acc.subs({ZV: _y - 1})


def specialize_universal(T: ExactPoly, n: int, G: Multigraph) -> ExactPoly:
    """q_ij -> [m_ij]_y (0 off the edge set)."""
    rules = {}
    for i, j in combinations(range(1, n + 1), 2):
        m = G.mult[i - 1][j - 1]
        rules[q_var(i, j).variables()[0]] = _ypoly_sum(m) if m else ZERO
    return T.subs(rules)


def relabel_q(T: ExactPoly, perm) -> ExactPoly:
    """Apply the vertex relabeling i -> perm[i-1] to the q_ij."""
    rules = {}
    for v in T.variables():
        if v[1] == "qij":
            i, j = v[2]
            rules[v] = q_var(perm[i - 1], perm[j - 1])
    return T.subs(rules)


# --- univariate integer polys in z (lists, low degree first) ---

def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return out


def _mono_shifted(e):
    """y^e written in z = y-1."""
    return [comb(e, k) for k in range(e + 1)]


def _egf_power_coeffs(parts, weight):
    """EGF coefficients hat C_k(z) of G^k at t^parts, k = 1..N.

    G = sum_{m != 0} y^{weight(m)} t^m / m!  (the z^{-|m|} factor is pulled out).
    """
    idx = [()]
    for s in parts:
        idx = [i + (a,) for i in idx for a in range(s + 1)]
    g = {m: _mono_shifted(weight(m)) for m in idx if any(m)}
    N = sum(parts)

    def bin_mult(m, a):
        out = 1
        for mi, ai in zip(m, a):
            out *= comb(mi, ai)
        return out

    cur = dict(g)
    res = {1: cur.get(tuple(parts), [])}
    for k in range(2, N + 1):
        nxt = {}
        for m in idx:
            if sum(m) < k:
                continue
            acc = []
            for a, ga in g.items():
                if all(ai <= mi for ai, mi in zip(a, m)):
                    b = tuple(mi - ai for mi, ai in zip(m, a))
                    cb = cur.get(b)
                    if cb:
                        acc = _padd(acc, [bin_mult(m, a) * c for c in _pmul(ga, cb)])
            if any(acc):
                nxt[m] = acc
        cur = nxt
        res[k] = cur.get(tuple(parts), [])
    return res


def _assemble(C, N, kappa):
    """sum_k binom((x-1)z, k) C_k(z) / (z^N (x-1)^kappa) as ExactPoly in x, y."""
    # coefficients in X = x-1, z
    P = {}
    for k, ck in C.items():
        if not any(ck):
            continue
        fall = [1]  # (s)_k in s = Xz
        for j in range(k):
            fall = _pmul(fall, [-j, 1])
        fk = factorial(k)
        for a, fa in enumerate(fall):
            if not fa:
                continue
            for b, cb in enumerate(ck):
                if cb:
                    key = (a, a + b)
                    P[key] = P.get(key, 0) + Fraction(fa * cb, fk)
    out = {}
    for (a, b), c in P.items():
        if not c:
            continue
        if a < kappa or b < N:
            raise IdentityFailure("generating-function extraction not divisible")
        out[(a - kappa, b - N)] = c
    # expand X = x-1, z = y-1
    X, z = _x - 1, _y - 1
    xs, zs = {}, {}
    total = ZERO
    for (a, b), c in sorted(out.items()):
        if a not in xs:
            xs[a] = X ** a
        if b not in zs:
            zs[b] = z ** b
        total = total + (xs[a] * zs[b]).scale(c)
    return total


def _parts_kappa(parts, ell):
    r = len(parts)
    live = [a for a in range(r) if parts[a]]
    adj = {a: [b for b in live if b != a and ell[a][b]] for a in live}
    seen, kappa = set(), 0
    for a in live:
        if a in seen:
            continue
        st, comp = [a], [a]
        seen.add(a)
        while st:
            c = st.pop()
            for d in adj[c]:
                if d not in seen:
                    seen.add(d)
                    st.append(d)
                    comp.append(d)
        kappa += 1 if len(comp) > 1 else parts[a]
    return kappa


def multipartite_tutte(parts, ell=None):
    """Tutte polynomial of the weighted complete multipartite graph via its EGF.

    Returns (Tutte, kappa); the raw EGF coefficient is (x-1)^kappa Tutte.
    """
    parts = list(parts)
    N = sum(parts)
    if N > 8:
        raise SizeError("multipartite_tutte is capped at N <= 8")
    r = len(parts)
    ell = _ell_matrix(r, ell)

    def weight(m):
        return sum(ell[a][b] * m[a] * m[b] for a in range(r) for b in range(a + 1, r))

    kappa = _parts_kappa(parts, ell)
    return _assemble(_egf_power_coeffs(parts, weight), N, kappa), kappa


@lru_cache(maxsize=None)
def complete_tutte(n: int) -> ExactPoly:
    """Tutte(K_n) from the one-variable EGF with weights y^{binom(m,2)}."""
    if n < 1:
        raise ValueError("n >= 1")
    g = {m: _mono_shifted(comb(m, 2)) for m in range(1, n + 1)}
    cur = dict(g)
    C = {1: cur.get(n, [])}
    for k in range(2, n + 1):
        nxt = {}
        for m in range(k, n + 1):
            acc = []
            for a in range(1, m - k + 2):
                if (m - a) in cur:
                    acc = _padd(acc, [comb(m, a) * c for c in _pmul(g[a], cur[m - a])])
            nxt[m] = acc
        cur = nxt
        C[k] = cur.get(n, [])
    return _assemble(C, n, 1)


# ---------------------------------------------------------------------------
# chromatic side
# ---------------------------------------------------------------------------

def _compositions_bounded(parts):
    if not parts:
        yield ()
        return
    for k in range(1, parts[0] + 1):
        for rest in _compositions_bounded(parts[1:]):
            yield (k,) + rest


def falling(t, m):
    return poly_prod(t - j for j in range(m))


def chromatic_multipartite(parts, t=None):
    """Chrom(K_{n_1..n_r}, t) = sum_k prod S(n_j,k_j) (t)_{|k|} (falling factorial)."""
    t = _t if t is None else t
    parts = [p for p in parts if p]
    return poly_sum(poly_prod([stirling2(n, k) for n, k in zip(parts, ks)] or [1])
                    * falling(t, sum(ks))
                    for ks in _compositions_bounded(parts))


def chromatic_from_tutte(T: ExactPoly, G: Multigraph, t=None) -> ExactPoly:
    """(-1)^{n-k} t^k Tutte(1-t, 0)."""
    t = _t if t is None else t
    k = G.kappa()
    return (-1) ** (G.n - k) * t ** k * T.subs({XV: 1 - t, YV: 0})


def _lam_terms(n):
    """Group set partitions of [n] by type: {lambda: sum p_B}."""
    out = {}
    for part in set_partitions(range(1, n + 1)):
        lam = tuple(sorted((len(B) for B in part), reverse=True))
        mono = ONE
        for B in part:
            for i, j in combinations(B, 2):
                mono = mono * p_var(i, j)
        out[lam] = out.get(lam, ZERO) + mono
    return out


def universal_chromatic(n: int, beta=-1) -> ExactPoly:
    """sum over lambda |- n of Tutte(K_l; x, 0) beta^{n-l} L_lambda, l = len(lambda).

    L_lambda sums p_B over set partitions of type lambda; Tutte(K_1) = 1.
    At beta = -1 this is the universal chromatic polynomial.
    """
    if n > 6:
        raise SizeError("universal_chromatic is capped at n <= 6")
    beta = ExactPoly.coerce(beta)
    out = ZERO
    for lam, pl in sorted(_lam_terms(n).items()):
        l = len(lam)
        out = out + complete_tutte(l).subs({YV: 0}) * beta ** (n - l) * pl
    return out


def universal_chromatic_from_tutte(n: int) -> ExactPoly:
    """Ch_n = T_n(q = 1-p, x, 0)."""
    T = universal_tutte(n).subs({YV: 0})
    rules = {q_var(i, j).variables()[0]: 1 - p_var(i, j)
             for i, j in combinations(range(1, n + 1), 2)}
    return T.subs(rules)


def specialize_p(P: ExactPoly, n: int, G: Multigraph) -> ExactPoly:
    """p_ij -> 0 on edges of G, 1 off edges."""
    return P.subs({p_var(i, j).variables()[0]: 0 if G.mult[i - 1][j - 1] else 1
                   for i, j in combinations(range(1, n + 1), 2)})


# ---------------------------------------------------------------------------
# abelianized algebra, poly-Bernoulli, forests
# ---------------------------------------------------------------------------

def hilb_ab(G: Multigraph, T: ExactPoly | None = None) -> ExactPoly:
    """t^{|V|-1} Tutte(G; 1+1/t, 0), per component for disconnected G."""
    comps = G.components()
    if len(comps) > 1:
        return poly_prod(hilb_ab(G.induced(c)) for c in comps)
    if T is None:
        T = tutte_dc(G)
    d = G.n - 1
    out = ZERO
    for a in range(d + 1):
        c = T.coeff(XV, a).subs({YV: 0}).const_term() if T else 0
        if c:
            out = out + c * (_t + 1) ** a * _t ** (d - a)
    return out


def acyclic_orientations(G: Multigraph) -> int:
    """Brute force; parallel edges must agree, so only the simple support matters."""
    E = [(i, j) for i, j, _ in G.edges()]
    count = 0
    for bits in range(1 << len(E)):
        adj = {v: [] for v in range(G.n)}
        for k, (i, j) in enumerate(E):
            if bits >> k & 1:
                adj[i].append(j)
            else:
                adj[j].append(i)
        state = [0] * G.n
        ok = True

        def dfs(v):
            state[v] = 1
            for w in adj[v]:
                if state[w] == 1 or (state[w] == 0 and not dfs(w)):
                    return False
            state[v] = 2
            return True

        for v in range(G.n):
            if state[v] == 0 and not dfs(v):
                ok = False
                break
        count += ok
    return count


def poly_bernoulli(n: int, m: int) -> int:
    """B_n^{(-m)} = sum_j (j!)^2 S(n+1,j+1) S(m+1,j+1)."""
    if n < 0 or m < 0:
        raise ValueError("n, m >= 0")
    return sum(factorial(j) ** 2 * stirling2(n + 1, j + 1) * stirling2(m + 1, j + 1)
               for j in range(min(n, m) + 1))


@lru_cache(maxsize=None)
def forest_tilde(n: int) -> ExactPoly:
    """F~_n(u, t) = u^{n-1} Tutte(K_n; 1+1/u, t), so that F_n(x, t) = F~_n(xt, t)."""
    if n > 8:
        raise SizeError("forest_poly is capped at n <= 8")
    if n <= 1:
        return ONE
    T = complete_tutte(n)
    out = ZERO
    u = var("u")
    for m, c in T.terms.items():
        d = dict(m)
        a, b = d.get(XV, 0), d.get(YV, 0)
        out = out + ((1 + u) ** a * u ** (n - 1 - a) * _t ** b).scale(c)
    return out


def forest_poly(n: int) -> ExactPoly:
    """F_n(x, t) = sum over forests of x^{edges} t^{inv}."""
    return forest_tilde(n).subs({UV: _x * _t})


def inversion_poly(n: int) -> ExactPoly:
    """I_n(t): top u-coefficient of F~_n."""
    if n <= 1:
        return ONE
    return forest_tilde(n).coeff(UV, n - 1)


def du_poly(n: int) -> ExactPoly:
    """DU_n(x) = F_n(-x, -1)."""
    return forest_poly(n).subs({XV: -_x, TV: -1})


def forest_recurrence(n: int) -> ExactPoly:
    """F~_{n} from F~_{m+1} = sum_k binom(m,k) u^k I_{k+1}(t) F~_{m-k}."""
    u = var("u")
    F = [ONE, ONE]
    for m in range(1, n):
        F.append(poly_sum(comb(m, k) * u ** k * inversion_poly(k + 1) * F[m - k]
                          for k in range(m + 1)))
    return F[n]


def forests_bruteforce(n: int) -> ExactPoly:
    """Enumerate forests; inv counts pairs i<j with j on the path from i to the root.

    Components hang off an extra root through their maximal vertex.
    """
    E = list(combinations(range(1, n + 1), 2))
    out = ZERO
    for k in range(n):
        for es in combinations(E, k):
            parent = _forest_parents(n, es)
            if parent is None:
                continue
            inv = 0
            for i in range(1, n + 1):
                v = parent[i]
                while v != 0:
                    if v > i:
                        inv += 1
                    v = parent[v]
            out = out + _x ** k * _t ** inv
    return out


def _forest_parents(n, es):
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in es:
        adj[a].append(b)
        adj[b].append(a)
    parent = {}
    seen = set()
    for root in range(n, 0, -1):
        if root in seen:
            continue
        parent[root] = 0
        seen.add(root)
        st = [root]
        while st:
            v = st.pop()
            for w in adj[v]:
                if w == parent[v]:
                    continue
                if w in seen:
                    return None
                seen.add(w)
                parent[w] = v
                st.append(w)
    # each component is rooted at its maximal vertex since roots are taken from n down
    return parent


def tutte_report(G: Multigraph, universal=False, chromatic=False, hilb=False):
    T = tutte_dc(G)
    out = {"n": G.n, "edges": [[i + 1, j + 1, m] for i, j, m in G.edges()],
           "kappa": G.kappa(), "tutte": T}
    if chromatic:
        out["chromatic"] = chromatic_from_tutte(T, G)
    if hilb:
        out["hilb_ab"] = hilb_ab(G, T if G.kappa() == 1 else None)
    if universal:
        if G.n > 5:
            raise SizeError("universal specialization is capped at n <= 5")
        U = specialize_universal(universal_tutte(G.n), G.n, G)
        out["universal_specialized"] = U
        out["universal_matches"] = U == T * (_x - 1) ** (G.kappa() - 1)
    return out

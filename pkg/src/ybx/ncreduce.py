"""Reduction in the quasi-classical Yang-Baxter algebra and its abelian variant.

Generators x_ij (i<j) obey x_ij x_kl = x_kl x_ij when {i,j} and {k,l} are
disjoint, and

    x_ij x_jk -> a_i x_ik x_ij + b_i x_jk x_ik + beta_i x_ik + alpha_i.

Words are tuples of letters ``(i, j)``.  In the noncommutative mode two words
are identified when they differ by commuting disjoint letters; we keep the
lexicographic normal form of that trace monoid as the canonical
representative.  In the abelian mode all letters commute and a word is a
sorted tuple.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .errors import SizeError
from .exactpoly import (ALPHA, BETA, ONE, ExactPoly, T, from_coeffs,
                        poly_sum, var, var_id)

Letter = tuple  # (i, j) with i < j
Word = tuple


class NonTermination(RuntimeError):
    """Raised when the rewrite budget is exhausted."""


def _p(v) -> ExactPoly:
    return ExactPoly.coerce(v)


@dataclass
class AlgebraParams:
    """Relation coefficients; each entry is a constant or a callable of the row i."""
    mode: str = "noncommutative"          # or "commutative"
    a: object = 1
    b: object = 1
    beta: object = field(default_factory=lambda: ExactPoly.from_varid(BETA))
    alpha: object = field(default_factory=lambda: ExactPoly.from_varid(ALPHA))

    def _get(self, c, i: int) -> ExactPoly:
        return _p(c(i)) if callable(c) else _p(c)

    def rule(self, i: int):
        return (self._get(self.a, i), self._get(self.b, i),
                self._get(self.beta, i), self._get(self.alpha, i))

    @classmethod
    def multiparameter(cls, mode="noncommutative", **kw):
        """a_i, b_i, beta_i, alpha_i all symbolic and row dependent."""
        d = dict(a=lambda i: var("a", i), b=lambda i: var("b", i),
                 beta=lambda i: var("β", i), alpha=lambda i: var("α", i))
        d.update(kw)
        return cls(mode=mode, **d)


def letter(s) -> Letter:
    if isinstance(s, str):
        s = s.strip()
        if "," in s or " " in s:
            i, j = (int(t) for t in s.replace(",", " ").split())
        else:
            i, j = int(s[:-1]) if len(s) > 2 else int(s[0]), int(s[-1])
            if len(s) > 2:
                raise ValueError(f"ambiguous letter {s!r}; write it as 'i j'")
    else:
        i, j = s
    if not i < j:
        raise ValueError(f"letter x_{i}{j} needs i<j")
    return (i, j)


def parse_word(text: str) -> Word:
    """'12,23,34' or '1-2,2-3' -> ((1,2),(2,3),(3,4))."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if "-" in tok:
            i, j = tok.split("-")
            out.append(letter((int(i), int(j))))
        else:
            out.append(letter(tok))
    return tuple(out)


def _commute(u: Letter, v: Letter) -> bool:
    return u[0] != v[0] and u[0] != v[1] and u[1] != v[0] and u[1] != v[1]


def canonical(word: Sequence[Letter]) -> Word:
    """Lexicographic normal form in the partially commutative monoid."""
    w = list(word)
    out = []
    while w:
        best = None
        for pos, c in enumerate(w):
            if best is not None and not c < w[best]:
                continue
            if all(_commute(c, w[s]) for s in range(pos)):
                best = pos
        out.append(w.pop(best))
    return tuple(out)


def find_pair(word: Sequence[Letter]):
    """Rightmost reducible pair.

    Returns ``(p, r, rearranged)`` where ``rearranged`` is an equivalent word
    in which the two letters sit at positions (s, s+1), or None.
    """
    n = len(word)
    for r in range(n - 1, 0, -1):
        b = word[r]
        for p in range(r - 1, -1, -1):
            a = word[p]
            if a[1] != b[0]:
                continue
            blocked = []
            free = []
            for c in word[p + 1:r]:
                if not _commute(c, a) or any(not _commute(c, f) for f in blocked):
                    blocked.append(c)
                else:
                    free.append(c)
            if any(not _commute(b, f) for f in blocked):
                continue
            new = list(word[:p]) + free + [a, b] + blocked + list(word[r + 1:])
            return p, r, new, p + len(free)
    return None


def is_reduced(word: Sequence[Letter], mode: str = "noncommutative") -> bool:
    if mode == "commutative":
        s = set(word)
        return not any((j, k) in s for (i, j) in s for k in range(j + 1, j + 64))
    return find_pair(word) is None


def _add_into(acc: dict, word, coef):
    cur = acc.get(word)
    s = coef if cur is None else cur + coef
    if s:
        acc[word] = s
    else:
        acc.pop(word, None)


_KBITS = 96


class _Kronecker:
    """Packs univariate integer polynomials into a single big integer.

    Evaluating at v = 2^K turns polynomial products into integer products;
    balanced digits recover signed coefficients as long as they stay below
    2^(K-1) in absolute value.
    """

    def __init__(self, v):
        self.v = v
        self.base = 1 << _KBITS

    def pack(self, p: ExactPoly) -> int:
        if p.is_zero():
            return 0
        cs = p.int_coeffs(self.v) if self.v is not None else [p.const_term()]
        r = 0
        for c in reversed(cs):
            r = r * self.base + c
        return r

    def unpack(self, n: int) -> ExactPoly:
        cs = []
        half = self.base >> 1
        while n:
            d = n & (self.base - 1)
            if d >= half:
                d -= self.base
            cs.append(d)
            n = (n - d) >> _KBITS
        if self.v is None:
            return ExactPoly.const(cs[0] if cs else 0)
        return from_coeffs(cs, self.v)


class Reducer:
    """Memoized reduction of single words to NCPoly dicts."""

    def __init__(self, params: AlgebraParams | None = None, fuel: int = 10**7,
                 packer: _Kronecker | None = None):
        self.params = params or AlgebraParams()
        self.fuel = fuel
        self.memo: dict = {}
        self._rules: dict = {}
        self.packer = packer
        self.one = 1 if packer else ONE

    @classmethod
    def for_letters(cls, params, letters, fuel=10**7) -> "Reducer":
        """Use integer packing when every coefficient is univariate with integer coefficients."""
        params = params or AlgebraParams()
        top = max((l[1] for l in letters), default=1)
        vs = set()
        ok = True
        for i in range(1, top + 1):
            for c in params.rule(i):
                vs.update(c.variables())
                ok = ok and all(isinstance(x, int) for x in c.terms.values())
        if ok and len(vs) <= 1:
            return cls(params, fuel, _Kronecker(next(iter(vs)) if vs else None))
        return cls(params, fuel)

    def _rule(self, i):
        r = self._rules.get(i)
        if r is None:
            r = self.params.rule(i)
            if self.packer:
                r = tuple(self.packer.pack(c) for c in r)
            self._rules[i] = r
        return r

    def _spend(self):
        self.fuel -= 1
        if self.fuel < 0:
            raise NonTermination("rewrite budget exhausted")

    # -- one rewrite step --------------------------------------------------
    def _expand_nc(self, word: Word):
        hit = find_pair(word)
        if hit is None:
            return None
        _, _, new, s = hit
        (i, j), (_, k) = new[s], new[s + 1]
        a, b, be, al = self._rule(i)
        pre, post = new[:s], new[s + 2:]
        out = []
        if a:
            out.append((pre + [(i, k), (i, j)] + post, a))
        if b:
            out.append((pre + [(j, k), (i, k)] + post, b))
        if be:
            out.append((pre + [(i, k)] + post, be))
        if al:
            out.append((pre + post, al))
        return out

    def _expand_ab(self, word: Word):
        present = sorted(set(word))
        starts = {}
        for l in present:
            starts.setdefault(l[0], []).append(l)
        hit = None
        for (i, j) in present:
            for l2 in starts.get(j, ()):
                hit = ((i, j), l2)
                break
            if hit:
                break
        if hit is None:
            return None
        (i, j), (_, k) = hit
        rest = list(word)
        rest.remove((i, j))
        rest.remove((j, k))
        a, b, be, al = self._rule(i)
        out = []
        if a:
            out.append((rest + [(i, k), (i, j)], a))
        if b:
            out.append((rest + [(j, k), (i, k)], b))
        if be:
            out.append((rest + [(i, k)], be))
        if al:
            out.append((rest, al))
        return out

    def normal(self, word) -> Word:
        if self.params.mode == "commutative":
            return tuple(sorted(word))
        return canonical(word)

    def reduce_word(self, word) -> dict:
        """Full reduction of one word; returns {irreducible word: coef}."""
        word = self.normal(word)
        hit = self.memo.get(word)
        if hit is not None:
            return hit
        # explicit stack to avoid deep recursion on long words
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
        res = self._reduce(word)
        return res

    def _reduce(self, word: Word) -> dict:
        memo = self.memo
        got = memo.get(word)
        if got is not None:
            return got
        self._spend()
        exp = self._expand_ab(word) if self.params.mode == "commutative" else self._expand_nc(word)
        if exp is None:
            res = {word: self.one}
        else:
            res = {}
            for w2, c in exp:
                sub = self._reduce(self.normal(w2))
                for w3, c3 in sub.items():
                    _add_into(res, w3, c * c3)
        memo[word] = res
        return res

    def fold(self, letters: Iterable[Letter], group: Callable | None = None) -> dict:
        """Left-to-right folding: multiply by one letter at a time.

        With ``group`` the final words are merged by ``group(word)`` before
        coefficients are unpacked (cheap when only a specialization is needed).
        """
        N = {(): self.one}
        for l in letters:
            nxt: dict = {}
            for w, c in N.items():
                for w2, c2 in self.reduce_word(w + (l,)).items():
                    _add_into(nxt, w2, c * c2)
            N = nxt
        if group is not None:
            G: dict = {}
            for w, c in N.items():
                _add_into(G, group(w), c)
            N = G
        if self.packer:
            return {w: self.packer.unpack(c) for w, c in N.items()}
        return N


# ---------------------------------------------------------------------------
# public operations

def fold_reduce(word: Sequence[Letter], params: AlgebraParams | None = None,
                fuel: int = 10**7) -> dict:
    letters = [letter(l) for l in word]
    return Reducer.for_letters(params, letters, fuel).fold(letters)


def coxeter_word(m: int) -> Word:
    return tuple((i, i + 1) for i in range(1, m + 1))


def coxeter_reduced(m: int, params: AlgebraParams | None = None, fuel: int = 10**7) -> dict:
    return fold_reduce(coxeter_word(m), params, fuel)


def _letter_rule(rule, m=None, p=None):
    t = ExactPoly.from_varid(T)
    if callable(rule):
        f = rule
    elif rule == "all-ones":
        f = lambda l: ONE
    elif rule == "last-column":
        if m is None:
            m = max((l[1] for w in p for l in w), default=1) - 1
        f = lambda l: t if l[1] == m + 1 else ONE
    elif rule == "row":
        f = lambda l: var("t", l[0])
    elif rule == "first-row":
        f = lambda l: t if l[0] == 1 else ONE
    else:
        raise ValueError(f"unknown specialization {rule!r}")
    return f


def specialize_nc(p: Mapping, rule="all-ones", m: int | None = None) -> ExactPoly:
    """Commutative image of an NCPoly under a letter -> value rule.

    ``rule`` is one of 'all-ones', 'last-column' (x_{i,m+1} -> t),
    'row' (x_ij -> t_i), 'first-row' (x_1j -> t), or a callable on letters.
    """
    f = _letter_rule(rule, m, p)
    cache: dict = {}

    def val(l):
        v = cache.get(l)
        if v is None:
            v = cache[l] = _p(f(l))
        return v

    terms = []
    for w, c in p.items():
        r = c
        for l in w:
            r = r * val(l)
        terms.append(r)
    return poly_sum(terms)


def count_words(p: Mapping) -> int:
    return len(p)


def dominant_word(ms: Sequence[int]) -> Word:
    out = []
    for i, e in enumerate(ms, start=1):
        out.extend([(i, i + 1)] * e)
    return tuple(out)


def reduce_specialized(word: Sequence[Letter], params: AlgebraParams | None = None,
                       rule="all-ones", fuel: int = 10**7) -> ExactPoly:
    """Fold a word and return only its commutative specialization."""
    letters = [letter(l) for l in word]
    m = max((l[1] for l in letters), default=2) - 1
    f = _letter_rule(rule, m)
    ones: dict = {}

    def key(w):
        out = []
        for l in w:
            r = ones.get(l)
            if r is None:
                r = ones[l] = (_p(f(l)) == ONE)
            if not r:
                out.append(l)
        return tuple(out)

    red = Reducer.for_letters(params, letters, fuel)
    return specialize_nc(red.fold(letters, group=key), f)


def dominant_reduced(ms: Sequence[int], params: AlgebraParams | None = None,
                     rule="all-ones") -> ExactPoly:
    """Reduced polynomial of x12^m1 x23^m2 ... in the abelian algebra."""
    params = params or AlgebraParams(mode="commutative", alpha=0)
    return reduce_specialized(dominant_word(ms), params, rule)


def longest_word(n: int, exps: Mapping | None = None) -> Word:
    out = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            out.extend([(i, j)] * (exps.get((i, j), 1) if exps else 1))
    return tuple(out)


def longest_reduced(n: int, params: AlgebraParams | None = None, rule="all-ones",
                    exps: Mapping | None = None) -> ExactPoly:
    """Q_n: abelian reduction of the product of all x_ij in lexicographic order."""
    params = params or AlgebraParams(mode="commutative", alpha=0)
    if params.mode != "commutative":
        raise ValueError("the longest element is reduced in the abelian algebra")
    return reduce_specialized(longest_word(n, exps), params, rule)


# ---------------------------------------------------------------------------
# Ehrhart series of the Chan-Robbins-Yuen polytope

def cry_lattice_count(m: int, t: int) -> int:
    """Nonnegative integer m x m matrices with all line sums t and a_ij = 0 for j > i+1."""
    if m < 1 or t < 0:
        raise ValueError("need m >= 1, t >= 0")
    # row by row; state = column sums still owed
    states = {tuple([t] * m): 1}
    for i in range(m):
        allowed = min(i + 2, m)
        nxt: dict = {}
        for owe, c in states.items():
            def place(j, left, cur):
                if j == allowed:
                    if left == 0:
                        key = tuple(cur)
                        nxt[key] = nxt.get(key, 0) + c
                    return
                hi = min(left, cur[j])
                for v in range(hi + 1):
                    cur[j] -= v
                    place(j + 1, left - v, cur)
                    cur[j] += v
            place(0, t, list(owe))
        states = nxt
    return states.get(tuple([0] * m), 0)


def cry_ehrhart_check(n: int, order: int = 8) -> dict:
    """Q_n(b-1) (1-b)^{-binom(n+1,2)-1} against lattice counts of CRY_{n+1}, to ``order``."""
    if n > 4:
        raise SizeError("cry_ehrhart_check: n <= 4")
    from math import comb as _c
    Q = longest_reduced(n).subs({BETA: ExactPoly.from_varid(BETA) - 1}).int_coeffs(BETA)
    d = _c(n + 1, 2) + 1
    series = [sum(Q[j] * _c(k - j + d - 1, d - 1) for j in range(min(k, len(Q) - 1) + 1))
              for k in range(order + 1)]
    counts = [cry_lattice_count(n + 1, k) for k in range(order + 1)]
    return {"series": series, "lattice": counts, "ok": series == counts}


# ---------------------------------------------------------------------------
# multiparameter Narayana, boundary monomials, dissections

def multiparam_narayana(m: int) -> ExactPoly:
    """Coxeter word with row weights beta_i, all x_ij -> 1, then beta_i -> beta_i - 1."""
    params = AlgebraParams(beta=lambda i: var("β", i), alpha=0)
    P = reduce_specialized(coxeter_word(m), params)
    return P.subs({var_id("β", i): var("β", i) - 1 for i in range(1, m)})


def boundary_monomial(lam: Sequence[int]) -> Word:
    """x_12 times one letter per boundary box of lam, column by column from the left.

    Column c contributes lam'_c - lam'_{c+1} letters x_{k,k+1}, ..., x_{k,k+l}
    with k starting at 2 and advancing by l.
    """
    lam = [x for x in lam if x]
    if not lam or any(lam[i] - lam[i + 1] > 1 for i in range(len(lam) - 1)) or lam[-1] != 1:
        raise ValueError("need a partition with steps <= 1 ending in 1")
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] + [0]
    word = [(1, 2)]
    k = 2
    for c in range(lam[0]):
        l = conj[c] - conj[c + 1]
        word += [(k, k + a) for a in range(1, l + 1)]
        k += l
    return tuple(word)


def lambda_monomial_check(lam: Sequence[int]) -> dict:
    """Reduced polynomial of the boundary monomial (all x_ij = 1) against G_{1 x w_lam}(1)."""
    from .grothendieck import grothendieck
    from .perm import dominant
    M = boundary_monomial(lam)
    P = reduce_specialized(M, AlgebraParams(alpha=0))
    G = grothendieck(dominant(lam).shift(1), spec="ones")
    return {"word": M, "P": P, "ok": P == G}


def coxeter_grothendieck_check(m: int) -> bool:
    """P_m(x_ij = t_i) = prod t_i^{m+1-i} G_pi(1/t) with pi = 1 x w_0 in S_{m+1}."""
    from .grothendieck import grothendieck, pi_k
    P = reduce_specialized(coxeter_word(m), AlgebraParams(alpha=0), "row")
    G = grothendieck(pi_k(1, m + 1))
    out = {}
    for mono, c in G.terms.items():
        d = dict(mono)
        new = [(v, e) for v, e in mono if v[1] != "x"]
        for i in range(1, m + 1):
            e = m + 1 - i - d.get(var_id("x", i), 0)
            if e < 0:
                return False
            if e:
                new.append((var_id("t", i), e))
        out[tuple(sorted(new))] = c
    return P == ExactPoly(out)


def _regions(poly: list, diags: set) -> list:
    """Sizes of the cells cut out of a convex polygon (cyclic vertex list) by diagonals."""
    k = len(poly)
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            d = tuple(sorted((poly[a], poly[b])))
            if d in diags:
                rest = diags - {d}
                return _regions(poly[a:b + 1], rest) + _regions(poly[b:] + poly[:a + 1], rest)
    return [k]


def dissection_of(word: Sequence[Letter], m: int) -> frozenset:
    """Diagonals (i, j+1) of the (m+2)-gon on 1..m+2 attached to a word of the m-letter Coxeter reduction."""
    out = set()
    for i, j in word:
        d = (i, j + 1)
        if not (d[1] - d[0] == 1 or (d[0] == 1 and d[1] == m + 2)):
            out.add(d)
    return frozenset(out)


def dissection_expand(m: int, params: AlgebraParams | None = None) -> dict:
    """Multiparameter Coxeter reduction with each word tagged by its polygon dissection.

    Returns {word: (coefficient, diagonals, y-monomial)} where the y-monomial
    carries y_k for every (k+2)-gonal cell.
    """
    params = params or AlgebraParams.multiparameter()
    R = coxeter_reduced(m, params)
    verts = list(range(1, m + 3))
    out = {}
    for w, c in R.items():
        D = dissection_of(w, m)
        y = ONE
        for s in _regions(verts, set(D)):
            y = y * var("y", s - 2)
        out[w] = (c, D, y)
    return out


def B_poly(m: int, a=1) -> ExactPoly:
    """sum over words of coef * y-monomial with b_i = beta_i = 1, alpha_i = 0."""
    params = AlgebraParams(a=a, b=1, beta=1, alpha=0)
    return poly_sum(c * y for c, _, y in dissection_expand(m, params).values())


def lagrange_check(m: int) -> bool:
    """B_m(1, y) against the Lagrange inversion coefficient w_m(y)."""
    from .numfam import lagrange_inverse_poly
    return B_poly(m) == lagrange_inverse_poly(m)


def reversal_check(ms: Sequence[int]) -> bool:
    """P_M(beta) = P_{reverse M}(beta) for the abelian dominant reduction."""
    return dominant_reduced(ms) == dominant_reduced(list(ms)[::-1])

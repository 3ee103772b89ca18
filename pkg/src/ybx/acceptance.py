"""Acceptance suite: thirteen groups of exact checks with embedded reference data.

Every group returns a list of records
``{"criterion", "check", "status", "expected", "computed"}``.  The
reference values below are published displays (tuples are coefficient
lists, lowest degree first) or independent brute-force counts computed
here.  Group 13 collects open conjectures and never blocks.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .exactpoly import (BETA, ONE, Q, T, ZERO, ExactPoly, RatFun, from_coeffs,
                        poly_det, poly_sum, var)

_B = ExactPoly.from_varid(BETA)
_q = ExactPoly.from_varid(Q)


def _show(v):
    if v is None:
        return None
    if isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    return str(v)


def _rec(crit, check, ok, expected=None, computed=None, status=None):
    return {"criterion": crit, "check": check,
            "status": status or ("pass" if ok else "fail"),
            "expected": _show(expected), "computed": _show(computed)}


def _beta_poly(cs, shift=0):
    """sum c_k (beta + shift)^k."""
    base = _B + shift
    return poly_sum(c * base ** k for k, c in enumerate(cs))


# ---------------------------------------------------------------------------
# 1. Coxeter word, Narayana expansion

def crit1():
    from .ncreduce import AlgebraParams, coxeter_reduced, specialize_nc
    from .numfam import catalan, narayana
    out = []
    for m in range(1, 8):
        P = specialize_nc(coxeter_reduced(m, AlgebraParams(alpha=0)))
        N = poly_sum(narayana(m, k) * (1 + _B) ** k for k in range(m))
        out.append(_rec(1, f"m={m}: all-ones value = sum_k N(m,k)(1+b)^k", P == N, N, P))
        out.append(_rec(1, f"m={m}: b=0 gives Catalan", P.evaluate({BETA: 0}) == catalan(m),
                        catalan(m), P.evaluate({BETA: 0})))
        out.append(_rec(1, f"m={m}: b=-1 gives 1", P.evaluate({BETA: -1}) == 1, 1,
                        P.evaluate({BETA: -1})))
    return out


# ---------------------------------------------------------------------------
# 2. Longest element

Q_BETA = {3: (2, 1), 4: (10, 13, 4), 5: (140, 336, 280, 92, 9)}
Q_BETA_PLUS_1 = {
    6: (1, 42, 448, 1674, 2364, 1182, 169),
    7: (1, 99, 2569, 25587, 114005, 242415, 248817, 118587, 22924, 1156),
}


def crit2():
    from .ncreduce import longest_reduced
    from .numfam import catalan
    out = []
    for n in range(2, 8):
        Qn = longest_reduced(n)
        if n in Q_BETA:
            got = tuple(Qn.int_coeffs(BETA))
            out.append(_rec(2, f"Q_{n} in powers of b", got == Q_BETA[n], Q_BETA[n], got))
        if n in Q_BETA_PLUS_1:
            got = tuple(Qn.int_coeffs(BETA, -1))
            out.append(_rec(2, f"Q_{n} in powers of (b+1)",
                            got == Q_BETA_PLUS_1[n], Q_BETA_PLUS_1[n], got))
        want = prod(catalan(j) for j in range(1, n))
        got0 = Qn.evaluate({BETA: 0})
        out.append(_rec(2, f"Q_{n}(0) = prod_(j<n) C_j", got0 == want, want, got0))
    return out


# ---------------------------------------------------------------------------
# 3. Chan-Robbins-Yuen Ehrhart series

def crit3():
    from .ncreduce import cry_ehrhart_check
    r = cry_ehrhart_check(3, 8)
    return [_rec(3, "Q_3(b-1)/(1-b)^7 against lattice points of m CRY_4, m <= 8",
                 r["ok"], r["lattice"], r["series"])]


# ---------------------------------------------------------------------------
# 4. Dominant monomials

P_DOMINANT = {  # (b+1)-coefficients
    (3, 2, 1): (1, 14, 27, 8), (1, 2, 3): (1, 14, 27, 8),
    (2, 3, 1): (1, 15, 30, 9), (1, 3, 2): (1, 15, 30, 9),
    (3, 1, 2): (1, 11, 18, 4), (2, 1, 3): (1, 11, 18, 4),
    (4, 3, 2, 1): (1, 74, 837, 2630, 2708, 885, 68),
}


@lru_cache(maxsize=None)
def _delannoy_paths(n, m):
    if n == 0 or m == 0:
        return 1
    return _delannoy_paths(n - 1, m) + _delannoy_paths(n, m - 1) + _delannoy_paths(n - 1, m - 1)


@lru_cache(maxsize=None)
def _updown_table(N):
    """Permutations of S_N counted by their up/down word."""
    counts: dict = {}
    for w in itertools.permutations(range(N)):
        key = "".join("U" if w[i] < w[i + 1] else "D" for i in range(N - 1))
        counts[key] = counts.get(key, 0) + 1
    return counts


def crit4():
    from .ncreduce import AlgebraParams, dominant_reduced
    out = []
    for ms, want in sorted(P_DOMINANT.items()):
        got = tuple(dominant_reduced(ms).int_coeffs(BETA, -1))
        out.append(_rec(4, f"P_{ms} in powers of (b+1)", got == want, want, got))
    for n in range(7):
        for m in range(7):
            P = dominant_reduced((n, m))
            want = poly_sum(comb(n, k) * comb(m, k) * (1 + _B) ** k for k in range(min(n, m) + 1))
            paths = _delannoy_paths(n, m)
            ok = P == want and P.evaluate({BETA: 1}) == paths
            out.append(_rec(4, f"x12^{n} x23^{m}: binomial sum, b=1 vs lattice paths", ok,
                            paths, P.evaluate({BETA: 1})))
    flat = AlgebraParams(mode="commutative", alpha=0, beta=0)
    for n in range(1, 5):
        for k in range(0, 9 - 2 * n):
            N = 2 * n + k + 1
            got = dominant_reduced((n, n, k), flat).const_term()
            want = _updown_table(N).get("U" * n + "D" * n + "U" * k, 0)
            out.append(_rec(4, f"x12^{n} x23^{n} x34^{k} at b=0 vs up-down count in S_{N}",
                            got == want, want, got))
    return out


# ---------------------------------------------------------------------------
# 5. Grothendieck engines

# beta-degree blocks of G_15432 as printed; two monomials in the b^2 and b^1
# blocks have total degree one short of the homogeneous degree 9 - e.
G15432_PRINTED = r"""
b3 x1^3 x2^3 x3^2 x4
b2 x1^3 x2^3 x3 + 2 x1^3 x2^3 x3 x4 + 3 x1^3 x2^2 x3^2 x4 + 3 x1^2 x2^3 x3^2 x4
b1 x1^3 x2^3 x3 + x1^3 x2^3 x4 + 2 x1^3 x2^2 x3 + 2 x1^2 x2^3 x3^2 + 3 x1^3 x2^2 x3 x4 + 3 x1^3 x2 x3^2 x4 + 3 x1^2 x2^3 x3 x4 + 3 x1^2 x2^2 x3^2 x4 + 3 x1 x2^3 x3^2 x4
b0 x1^3 x2^2 x3 + x1^3 x2^2 x4 + x1^3 x2 x3^2 + x1^3 x2 x3 x4 + x1^3 x3^2 x4 + x1^2 x2^3 x3 + x1^2 x2^3 x4 + x1^2 x2^2 x3^2 + x1^2 x2^2 x3 x4 + x1^2 x2 x3^2 x4 + x1 x2^3 x3^2 + x1 x2^3 x3 x4 + x1 x2^2 x3^2 x4 + x2^3 x3^2 x4
"""
G15432_DEGREE_FIX = {
    (2, "x1^3 x2^3 x3"): "x1^3 x2^3 x3^2",
    (1, "2 x1^3 x2^2 x3"): "2 x1^3 x2^2 x3^2",
}


def _parse_blocks(text, fix=None):
    total = ZERO
    for line in text.strip().splitlines():
        head, _, body = line.partition(" ")
        e = int(head[1:])
        for term in body.split("+"):
            term = term.strip()
            if fix and (e, term) in fix:
                term = fix[(e, term)]
            c, mono = 1, ONE
            for tok in term.split():
                if tok.isdigit():
                    c = int(tok)
                else:
                    v, _, p = tok.partition("^")
                    mono = mono * var("x", int(v[1:])) ** (int(p) if p else 1)
            total = total + c * mono * _B ** e
    return total


def crit5():
    from .grothendieck import PRESETS, grothendieck, idc_expand, schubert_table
    out = []
    G = grothendieck("15432")
    fixed = _parse_blocks(G15432_PRINTED, G15432_DEGREE_FIX)
    out.append(_rec(5, "G_15432 against the printed display, two non-homogeneous terms "
                       "raised to degree 9 - e", G == fixed, fixed, G))
    raw = _parse_blocks(G15432_PRINTED)
    out.append(_rec(5, "G_15432 against the printed display verbatim (erratum, informational)",
                    G == raw, raw, G - raw, status="pass" if G == raw else "erratum"))
    tab = idc_expand(5)
    gen = schubert_table(5, PRESETS["grothendieck"])
    bad = sorted(str(w) for w in tab if tab[w] != gen[w])
    out.append(_rec(5, "Id-Coxeter expansion = divided differences with A=(-b,b,0,1,0), S_5",
                    not bad, [], bad))
    for n in range(1, 6):
        bad = [str(w) for w in idc_expand(n).check_divisibility()]
        out.append(_rec(5, f"x_1^(w(1)-1) divides G_w for all w in S_{n}", not bad, [], bad))
    return out


# ---------------------------------------------------------------------------
# 6. Specializations R_w and H_w

PERM_W = (1, 3, 4, 6, 7, 9, 10, 2, 5, 8)
PERM_U = (2, 3, 5, 6, 8, 9, 1, 4, 7)
# q-degree -> (beta shift, beta-coefficients)
R_DISPLAYS = {
    "w": {0: (0, (1, 6, 21, 36, 51, 48, 26)), 1: (1, (6, 36, 126, 216, 306, 288, 156)),
          2: (3, (20, 125, 242, 403, 460, 289)), 3: (5, (6, 46, 114, 204, 170))},
    "w^-1": {0: (0, (1, 6, 21, 36, 51, 48, 26)), 1: (1, (1, 6, 31, 56, 96, 110, 78)),
             2: (1, (1, 6, 27, 58, 92, 122, 120, 78)),
             3: (1, (1, 6, 24, 58, 92, 126, 132, 102, 26)),
             4: (1, (1, 6, 22, 57, 92, 127, 134, 105, 44)),
             5: (1, (1, 6, 21, 56, 91, 126, 133, 104, 50)),
             6: (1, (1, 6, 21, 56, 91, 126, 133, 104, 50))},
    "u": {0: (0, (1, 6, 11, 16, 11)), 1: (2, (10, 20, 35, 34)), 2: (4, (5, 14, 26))},
}
R_AT_BETA_1 = {"w": (189, 1134, 1539, 540), "w^-1": (189, 378, 504, 567, 588, 588, 588)}
R_U_INV_AT_Q_1 = (1, 6, 21, 36, 51, 48, 26)
F_V_PRINTED = ((1, 2), (1, 6, 19, 24, 13))  # product of two factors


def crit6():
    from .grothendieck import double_special_H, specialize_R
    from .perm import Permutation, all_perms
    out = []
    w, u = Permutation(PERM_W), Permutation(PERM_U)
    perms = {"w": w, "w^-1": w.inverse(), "u": u}
    for name, disp in R_DISPLAYS.items():
        want = poly_sum(_q ** i * _B ** s * from_coeffs(cs, BETA) for i, (s, cs) in disp.items())
        got = specialize_R(perms[name])
        out.append(_rec(6, f"R_{name}(q,b) display", got == want, want, got))
        if name in R_AT_BETA_1:
            g1 = tuple(got.subs({BETA: 1}).int_coeffs(Q))
            out.append(_rec(6, f"R_{name}(q,1)", g1 == R_AT_BETA_1[name], R_AT_BETA_1[name], g1))
    for name, p in (("u^-1", u.inverse()), ("u", u)):
        g = tuple(specialize_R(p).subs({Q: 1}).int_coeffs(BETA))
        out.append(_rec(6, f"R_{name}(1,b)", g == R_U_INV_AT_Q_1, R_U_INV_AT_Q_1, g))
    # H_v for v = u: printed as x^12 (1+2x)(1+6x+19x^2+24x^3+13x^4), x = (1+bq)(1+bt)
    Fp = from_coeffs(F_V_PRINTED[0], BETA) * from_coeffs(F_V_PRINTED[1], BETA)
    H = double_special_H(u)
    x = (1 + _B * _q) * (1 + _B * ExactPoly.from_varid(T))
    Hp = x ** 12 * Fp.subs({BETA: x})
    out.append(_rec(6, "H_v(q,t;b) display", H == Hp, "x^12 (1+2x)(1+6x+19x^2+24x^3+13x^4)",
                    f"(q+t+bqt)^12 F_v(x), F_v = {tuple(specialize_R(u).subs({Q: 1}).int_coeffs(BETA))}"))
    Fv = specialize_R(u).subs({Q: 1})
    out.append(_rec(6, "F_v(b) factorized display", Fv == Fp, Fp.int_coeffs(BETA),
                    Fv.int_coeffs(BETA)))
    bad = []
    for p in all_perms(5):
        a = specialize_R(p, reduced=False).subs({Q: 1})
        b = specialize_R(p.inverse(), reduced=False).subs({Q: 1})
        if a != b:
            bad.append(str(p))
    out.append(_rec(6, "R_w(1,b) = R_(w^-1)(1,b) on S_5", not bad, [], bad))
    return out


# ---------------------------------------------------------------------------
# 7. Hankel identities

def crit7():
    from .grothendieck import grothendieck, hankel_identity_check, pi_k
    from .numfam import schroder_poly
    out = []
    for n in range(2, 7):
        for k in range(1, min(3, n - 1) + 1):
            r = hankel_identity_check(n, k)
            for name, ok in sorted(r.items()):
                out.append(_rec(7, f"{name}, n={n} k={k}", ok))
    D = poly_det([[schroder_poly(4), schroder_poly(3)], [schroder_poly(3), schroder_poly(2)]])
    out.append(_rec(7, "DET[[P_4,P_3],[P_3,P_2]]", D.int_coeffs(BETA) == [3, 6, 4, 1],
                    (3, 6, 4, 1), D.int_coeffs(BETA)))
    G = grothendieck(pi_k(2, 4), spec="ones")
    out.append(_rec(7, "G_1243(1) = 3 + 3b + b^2", G.int_coeffs(BETA) == [3, 3, 1],
                    (3, 3, 1), G.int_coeffs(BETA)))
    return out


# ---------------------------------------------------------------------------
# 8. Dissections

def crit8():
    from .grothendieck import dissection_check
    from .ncreduce import lambda_monomial_check
    out = []
    for k, top in ((1, 6), (2, 4)):
        for n in range(k, top + 1):
            r = dissection_check(n, k)
            for name, ok in sorted(r.items()):
                out.append(_rec(8, f"k={k} n={n} {name}", ok))
    r = lambda_monomial_check((4, 3, 2, 2, 1))
    got = tuple(r["P"].int_coeffs(BETA))
    want = (66, 144, 108, 32, 3)
    out.append(_rec(8, "boundary monomial of 43221", got == want and r["ok"], want, got))
    return out


# ---------------------------------------------------------------------------
# 9. D-numbers

def _d_r1(n, k, b, p):
    f = factorial
    v = Fraction(1)
    for j in range(1, n + 2):
        v *= Fraction(f((n + k - j + 1) * (p + 1) + b) * f((n - j + 1) * p + b + k) * f(j - 1),
                      f((n - j + 1) * (p + 1) + b) * f((k + n - j + 1) * p + b + k) * f(k + j - 1))
    return v


def _d_small_k(n, k, b, p):
    v = Fraction(1)
    for j in range(1, k + 1):
        v *= comb((n + k + 1 - j) * (p + 1) + b, n - j + 1) * comb((k - j) * p + b + k, j)
        v *= Fraction(factorial(j) * factorial(k - j) * factorial(n - j + 1),
                      factorial(n + k - j + 1))
    return v


def crit9():
    from .grothendieck import wachs_D, wachs_D_factorial, wachs_D_product
    from .numfam import cstcpp, fuss_catalan, vsasm
    out = []
    bad = []
    for n, k, p, b in itertools.product(range(5), range(4), range(4), range(3)):
        for r in range(1, p + 2):
            d = wachs_D(n, k, r, b, p)
            if not d == wachs_D_product(n, k, r, b, p) == wachs_D_factorial(n, k, r, b, p):
                bad.append((n, k, r, b, p))
            if r == 1 and d != _d_r1(n, k, b, p):
                bad.append(("r=1", n, k, b, p))
            if r == 1 and k <= n + 1 and d != _d_small_k(n, k, b, p):
                bad.append(("k<=n+1", n, k, b, p))
    out.append(_rec(9, "determinant = products on n<=4, k<=3, p<=3, b<=2, 1<=r<=p+1",
                    not bad, [], bad))
    bad = [(n, b, p) for n in range(5) for b in range(3) for p in range(4)
           if wachs_D(n, 1, 1, b, p) != fuss_catalan(n + 1, p + 1, b)]
    out.append(_rec(9, "D(n,1,1,b,p) = Fuss-Catalan F_(n+1)^(p+1)(b)", not bad, [], bad))
    bad = [(n, b, p) for n in range(5) for b in range(3) for p in range(4)
           if wachs_D(n, 0, 1, b, p) != 1]
    out.append(_rec(9, "D(n,0,1,b,p) = 1", not bad, [], bad))
    # VSASM(m), CSTCPP(m): 1, 3, 26, 646, ... and 1, 2, 11, 170, ... from m = 1
    got = [wachs_D(n, 0, 2, 2, 2) for n in range(5)]
    want = [vsasm(n + 1) for n in range(5)]
    out.append(_rec(9, "D(n,0,2,2,2) = VSASM(n+1)", got == want, want, got))
    got = [wachs_D(n, 0, 2, 1, 2) for n in range(5)]
    want = [cstcpp(n + 1) for n in range(5)]
    out.append(_rec(9, "D(n,0,2,1,2) = CSTCPP(n+1)", got == want, want, got))
    return out


# ---------------------------------------------------------------------------
# 10. Representations

FULTON_G13 = "qij14*((x2-x1)*(x3-x1)+qij23-qij12)+qij24*(qij13-qij12)"
FULTON_G23 = ("qij15*((x3-x1)*(x4-x1)+qij24+qij34-qij12-qij13)"
              "+qij25*((x3-x2)*(x4-x2)+qij14+qij34-qij12-qij23)"
              "+qij35*(qij14+qij24-qij13-qij23)")


def _expr(text):
    """Tiny evaluator for sums and products of x_i and q_ij."""
    def repl(m):
        fam, idx = m.group(1), m.group(2)
        if fam == "x":
            return f"var('x',{idx})"
        return f"var('qij',{idx[0]},{idx[1]})"
    src = re.sub(r"(qij|x)(\d+)", repl, text)
    return eval(src, {"var": var, "__builtins__": {}})


def crit10():
    from .dunklrep import rep_check, solve_g
    out = []
    for kind in ("bruhat", "qbruhat"):
        for n in range(2, 6):
            for r in rep_check(kind, n):
                out.append(_rec(10, f"{kind} n={n}: {r['identity']}", r["status"] == "pass",
                                computed=r.get("witness")))
    for n in range(2, 5):
        for seed in range(10):
            recs = rep_check("gaudin", n, seed=seed)
            bad = [r["identity"] for r in recs if r["status"] != "pass"]
            out.append(_rec(10, f"gaudin n={n} seed={seed}: {len(recs)} identities", not bad,
                            [], bad))
    for r in rep_check("fulton", 5):
        out.append(_rec(10, f"fulton n=5: {r['identity']}", r["status"] == "pass"))
    g = solve_g(5)
    for (a, b), text in (((1, 3), FULTON_G13), ((2, 3), FULTON_G23)):
        want = _expr(text)
        out.append(_rec(10, f"g_{a}[{b}] display", g[(a, b)] == want, want, g[(a, b)]))
    return out


# ---------------------------------------------------------------------------
# 11. Graph polynomials

TUTTE_ANCHORS = {
    (2, 2): "x + x^2 + x^3 + y",
    (3, 2): "x + 3x^2 + 2x^3 + x^4 + y + 3xy + y^2",
    (3, 3): "5x + 11x^2 + 10x^3 + 4x^4 + x^5 + 15xy + 9x^2y + 6xy^2 + 5y + 9y^2 + 5y^3 + y^4",
}
# K_{2,2,2}: y-power -> (x shift, x-coefficients)
TUTTE_K222 = {0: (1, (11, 25, 20, 7, 1)), 1: (0, (11, 46, 39, 8)), 2: (0, (32, 52, 12)),
              3: (0, (40, 24)), 4: (0, (29, 6)), 5: (0, (15,)), 6: (0, (5,)), 7: (0, (1,))}
HILB_AB = {(2, 2): (1, 4, 6, 3), (3, 2): (1, 6, 15, 17, 7)}
WEIGHT_ORDER = ((1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (3, 4))


def _xy(text):
    out = ZERO
    for term in text.replace(" ", "").split("+"):
        m = re.fullmatch(r"(\d*)((?:[xy](?:\^\d+)?)*)", term)
        c = int(m.group(1)) if m.group(1) else 1
        mono = ONE
        for v, e in re.findall(r"([xy])(?:\^(\d+))?", m.group(2)):
            mono = mono * var(v) ** (int(e) if e else 1)
        out = out + c * mono
    return out


def crit11():
    from .graphtutte import (Multigraph, XV, YV, hilb_ab, multipartite_tutte,
                             poly_bernoulli, q_var, spanning_trees, specialize_universal,
                             tutte_dc, universal_tutte, forest_poly, TV)
    out = []
    x, y = var("x"), var("y")
    anchors = {k: _xy(v) for k, v in TUTTE_ANCHORS.items()}
    anchors[(2, 2, 2)] = poly_sum(y ** e * x ** s * from_coeffs(cs, XV)
                                  for e, (s, cs) in TUTTE_K222.items())
    for parts, want in anchors.items():
        G = Multigraph.multipartite(parts)
        dc = tutte_dc(G)
        egf, kappa = multipartite_tutte(parts)
        out.append(_rec(11, f"Tutte K_{parts} by deletion-contraction", dc == want, want, dc))
        out.append(_rec(11, f"Tutte K_{parts} by exponential generating function",
                        egf == want and kappa == 1, want, egf))
    for parts, want in HILB_AB.items():
        got = tuple(hilb_ab(Multigraph.multipartite(parts)).int_coeffs(TV))
        out.append(_rec(11, f"Hilbert polynomial of the abelianized algebra, K_{parts}",
                        got == want, want, got))
    d33 = hilb_ab(Multigraph.multipartite((3, 3))).evaluate({TV: 1})
    out.append(_rec(11, "B_3^(-3) = dim for K_(3,3)", poly_bernoulli(3, 3) == 230 == d33,
                    230, [poly_bernoulli(3, 3), d33]))
    # universal Tutte polynomial
    U = universal_tutte(4)
    E = list(itertools.combinations(range(1, 5), 2))
    bad = []
    for ms in itertools.product(range(3), repeat=6):
        G = Multigraph.from_edges(4, [(i, j, m) for (i, j), m in zip(E, ms) if m])
        if specialize_universal(U, 4, G) != tutte_dc(G) * (x - 1) ** (G.kappa() - 1):
            bad.append(ms)
    for n in (1, 2, 3):
        Un = universal_tutte(n)
        for ms in itertools.product(range(3), repeat=comb(n, 2)):
            G = Multigraph.from_edges(n, [(i, j, m) for (i, j), m in
                                          zip(itertools.combinations(range(1, n + 1), 2), ms) if m])
            if specialize_universal(Un, n, G) != tutte_dc(G) * (x - 1) ** (G.kappa() - 1):
                bad.append(ms)
    out.append(_rec(11, "universal Tutte, n <= 4, multiplicities <= 2", not bad, [], bad))
    q12, q13, q23 = q_var(1, 2), q_var(1, 3), q_var(2, 3)
    T3 = ((1 - q12) * (1 - q13) * (1 - q23) + y * q12 * q13 * q23
          + x * (q12 + q13 + q23 - 2) + x ** 2)
    got = universal_tutte(3)
    out.append(_rec(11, "Tutte_3 display", got == T3, T3, got))
    # weighted K_{2,2,2,2}
    for vals, want in (((6, 3, 4, 5, 2, 4), 1231760640), ((6, 4, 3, 5, 2, 4), 1269768192)):
        ell = dict(zip(WEIGHT_ORDER, vals))
        st = spanning_trees(Multigraph.multipartite((2, 2, 2, 2), ell))
        Tw, _ = multipartite_tutte((2, 2, 2, 2), ell)
        tv = Tw.evaluate({XV: 1, YV: 1})
        out.append(_rec(11, f"weighted K_(2,2,2,2) spanning trees, weights {vals}",
                        st == want == tv, want, [st, tv]))
    F = forest_poly(5).subs({XV: -x, TV: -1})
    got = tuple(F.int_coeffs(XV))
    out.append(_rec(11, "F_5(-x,-1)", got == (1, 10, 25, 20, 5), (1, 10, 25, 20, 5), got))
    return out


# ---------------------------------------------------------------------------
# 12. Number families and Hilbert series

Q_SCHRODER = {
    2: {0: (1, 1), 1: (0, 1)},
    3: {0: (1, 2, 1, 1), 1: (0, 1, 2, 2), 2: (0, 0, 0, 1)},
    4: {0: (1, 3, 3, 3, 2, 1, 1), 1: (0, 1, 3, 5, 6, 3, 3), 2: (0, 0, 0, 1, 2, 3, 3),
        3: (0, 0, 0, 0, 0, 0, 1)},
}
SIX_T_DENOMINATORS = {3: (1, -3, 1), 4: (1, -6, 7, -1), 5: (1, -10, 25, -15, 1),
                      6: (1, -15, 65, -90, 31, -1)}
SUPER_SIX_T_DUAL = {(3, 2): (1, 4, 3), (2, 4): (1, 7, 12, 5), (3, 3): (1, 6, 8),
                    (2, 5): (1, 11, 34, 34, 9), (3, 4): (1, 9, 23, 16), (4, 4): (1, 12, 44, 50, 6),
                    (3, 5): (1, 13, 53, 79, 34), (4, 5): (1, 16, 86, 182, 131, 12),
                    (5, 5): (1, 20, 140, 410, 462, 120)}


def crit12():
    from .numfam import hilbert_series, identity_suite, q_schroder
    out = []
    for n, disp in Q_SCHRODER.items():
        want = poly_sum(_B ** e * from_coeffs(cs, Q) for e, cs in disp.items())
        got = q_schroder(n)
        out.append(_rec(12, f"q-Schroder S_{n}(q;b)", got == want, want, got))
    for name in ("motzkin", "riordan", "bell", "bkl", "exercise33"):
        for r in identity_suite(name):
            out.append(_rec(12, f"{name}: {r['identity']}", r["status"] == "pass",
                            r["expected"], r["computed"]))
    t = ExactPoly.from_varid(T)
    for n, den in SIX_T_DENOMINATORS.items():
        want = RatFun(ONE, from_coeffs(den, T))
        got = hilbert_series("6T", n)
        out.append(_rec(12, f"Hilb(6T_{n})", got == want, want, got))
    for (n, m), want in sorted(SUPER_SIX_T_DUAL.items()):
        for a, b in {(n, m), (m, n)}:
            got = tuple(hilbert_series("super6Tdual", a, b).int_coeffs(T))
            out.append(_rec(12, f"Hilb of the dual super 6T algebra ({a},{b})",
                            got == want, want, got))
    del t
    return out


# ---------------------------------------------------------------------------
# 13. Conjecture watch (non-blocking)

def _compositions(s):
    if s == 0:
        yield ()
        return
    for a in range(1, s + 1):
        for rest in _compositions(s - a):
            yield (a,) + rest


def _unimodal(cs):
    i = cs.index(max(cs))
    return (all(cs[j] <= cs[j + 1] for j in range(i))
            and all(cs[j] >= cs[j + 1] for j in range(i, len(cs) - 1)))


LEADING = {2: (3, 2), 3: (26, 11)}


def crit13():
    from .grothendieck import conjecture_leading
    from .ncreduce import dominant_reduced, multiparam_narayana
    out = []
    for n, (a, b) in LEADING.items():
        r = conjecture_leading(n)
        out.append(_rec(13, f"top coefficient tied to VSASM, n={n}", r["a"] == a == r["vsasm"],
                        a, r["a"]))
        out.append(_rec(13, f"top coefficient tied to CSTCPP, n={n}", r["b"] == b == r["cstcpp"],
                        b, r["b"]))
    for m in range(1, 7):
        P = multiparam_narayana(m)
        neg = [str(c) for c in P.terms.values() if c < 0]
        out.append(_rec(13, f"multiparameter Narayana m={m} has non-negative coefficients",
                        not neg, [], neg))
    bad = []
    for s in range(1, 7):
        for c in _compositions(s):
            cs = dominant_reduced(c).int_coeffs(BETA, -1)
            if min(cs) < 0 or not _unimodal(cs):
                bad.append(c)
    out.append(_rec(13, "P_M(b-1) unimodal and non-negative, |M| <= 6", not bad, [], bad))
    return out


# ---------------------------------------------------------------------------

CRITERIA = {
    1: ("coxeter", "Coxeter word reduced polynomials", crit1),
    2: ("longest", "longest element Q_n", crit2),
    3: ("ehrhart", "Chan-Robbins-Yuen Ehrhart series", crit3),
    4: ("dominant", "dominant monomials, Delannoy and up-down counts", crit4),
    5: ("grothendieck", "Grothendieck engines", crit5),
    6: ("specializations", "R_w and H_w specializations", crit6),
    7: ("hankel", "Schroder-Hankel identities", crit7),
    8: ("dissections", "k-dissections and boundary monomials", crit8),
    9: ("dnumbers", "D-number determinants", crit9),
    10: ("representations", "Dunkl element representations", crit10),
    11: ("graphs", "Tutte, chromatic and Hilbert anchors", crit11),
    12: ("families", "number families and Hilbert series", crit12),
    13: ("conjectures", "conjecture watch (non-blocking)", crit13),
}
NON_BLOCKING = {13}


def resolve_suite(name: str) -> list:
    name = str(name).strip().lower()
    if name == "all":
        return sorted(CRITERIA)
    if name.isdigit() and int(name) in CRITERIA:
        return [int(name)]
    for k, (short, _, _) in CRITERIA.items():
        if name == short:
            return [k]
    known = ", ".join(["all"] + [s for s, _, _ in CRITERIA.values()])
    raise ValueError(f"unknown suite {name!r}; use 1-13 or one of: {known}")


def run_criterion(k: int) -> dict:
    short, title, fn = CRITERIA[k]
    records = fn()
    ok = all(r["status"] in ("pass", "erratum") for r in records)
    return {"criterion": k, "suite": short, "title": title,
            "status": "pass" if ok else "fail", "blocking": k not in NON_BLOCKING,
            "passed": sum(r["status"] == "pass" for r in records), "total": len(records),
            "records": records}


def run_suite(name: str = "all") -> list:
    return [run_criterion(k) for k in resolve_suite(name)]

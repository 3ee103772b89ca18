"""Command line front end: ``ybx <subcommand> [options]``.

Exit codes: 0 success, 1 a reported check failed, 2 usage error,
3 size guard triggered, 4 internal error (identity breach or bug).
Output is deterministic: dict keys are sorted and polynomials print in
the fixed term order of ExactPoly.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from fractions import Fraction

from .errors import IdentityFailure, SizeError
from .exactpoly import BETA, Q, T, ExactPoly, RatFun, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# value conversion and emitters

def _tuple_or_none(p: ExactPoly):
    vs = p.variables()
    if len(vs) == 1 and vs[0] in (BETA, Q, T):
        return p.tuple_form(vs[0])
    if not vs:
        return str(p)
    return None


class _Math(str):
    """A string that is already LaTeX math."""


_GREEK = {"β": r"\beta", "α": r"\alpha", "λ": r"\lambda"}


def _plain(obj, latex=False):
    if isinstance(obj, ExactPoly):
        return _Math(obj.latex()) if latex else str(obj)
    if isinstance(obj, RatFun):
        if latex:
            return _Math(rf"\frac{{{obj.num.latex()}}}{{{obj.den.latex()}}}")
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v, latex) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v, latex) for v in obj]
    return obj


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        if isinstance(obj, list):
            obj = "(" + ",".join(str(v) for v in obj) + ")"
        yield prefix, "" if obj is None else obj


def _latex_escape(s: str) -> str:
    return s.replace("_", r"\_").replace("&", r"\&").replace("%", r"\%").replace("#", r"\#")


def emit(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_plain(result), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in _flatten(_plain(result)):
            w.writerow([k, v])
        return buf.getvalue()
    if fmt == "latex":
        lines = [r"\begin{tabular}{ll}", r"\hline"]
        for k, v in _flatten(_plain(result, latex=True)):
            if isinstance(v, _Math):
                val = f"${v}$"
            elif isinstance(v, str) and re.fullmatch(r"\([-\d,]*\)_\S+", v):
                body, _, name = v.rpartition("_")
                val = f"${body}_{{{_GREEK.get(name, name)}}}$"
            else:
                val = r"\texttt{" + _latex_escape(str(v)) + "}"
            lines.append(rf"\texttt{{{_latex_escape(k)}}} & {val} \\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# helpers

def _param(text, default_symbolic):
    if text is None or text == "sym":
        return default_symbolic
    try:
        return parse_poly(text)
    except ValueError as e:
        raise UsageError(str(e))


def _ints(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}")


def _guard(n, max_n, what):
    if n > max_n:
        raise SizeError(f"{what}: {n} exceeds --max-n {max_n}")


# ---------------------------------------------------------------------------
# subcommands

def cmd_reduce(a):
    from .ncreduce import AlgebraParams, fold_reduce, parse_word, reduce_specialized
    try:
        word = parse_word(a.word)
    except ValueError as e:
        raise UsageError(str(e))
    params = AlgebraParams(mode=a.mode,
                           beta=_param(a.beta, ExactPoly.from_varid(BETA)),
                           alpha=_param(a.alpha, ExactPoly.var("α")))
    out = {"word": a.word, "mode": a.mode, "beta": a.beta, "alpha": a.alpha, "spec": a.spec}
    if a.spec == "none":
        red = fold_reduce(word, params, a.max_fuel)
        out["words"] = [{"letters": [list(l) for l in w], "coef": c}
                        for w, c in sorted(red.items())]
        out["count"] = len(red)
        return out, EXIT_OK
    val = reduce_specialized(word, params, a.spec, a.max_fuel)
    out["value"] = _tuple_or_none(val) if val.variables() == [BETA] else str(val)
    out["poly"] = val
    return out, EXIT_OK


def cmd_groth(a):
    from .grothendieck import generalized_schubert, grothendieck, parse_A
    from .perm import Permutation
    perm = _ints(a.perm)
    try:
        w = Permutation(perm)
    except ValueError as e:
        raise UsageError(str(e))
    _guard(len(perm), a.max_n, "permutation size")
    out = {"perm": list(w), "spec": a.spec, "beta": a.beta}
    if a.A:
        try:
            A = parse_A(a.A)
        except ValueError as e:
            raise UsageError(str(e))
        p = generalized_schubert(w, A)
        out["A"] = a.A
    else:
        beta = "sym" if a.beta == "sym" else _param(a.beta, None)
        p = grothendieck(w, beta=beta, spec=a.spec, shift_beta=a.shift_beta)
        out["shift_beta"] = a.shift_beta
    out["poly"] = p
    t = _tuple_or_none(p)
    if t is not None:
        out["tuple"] = t
    return out, EXIT_OK


def cmd_rep(a):
    from .dunklrep import rep_check
    _guard(a.n, a.max_n, "n")
    recs = rep_check(a.kind, a.n, a.check, a.seed)
    ok = all(r["status"] == "pass" for r in recs)
    return {"kind": a.kind, "n": a.n, "check": a.check, "seed": a.seed,
            "status": "pass" if ok else "fail", "records": recs}, (EXIT_OK if ok else EXIT_FAIL)


def cmd_tutte(a):
    from .graphtutte import Multigraph, tutte_report
    if sum(x is not None for x in (a.graph, a.multipartite, a.complete)) != 1:
        raise UsageError("give exactly one of --graph, --multipartite, --complete")
    if a.graph:
        try:
            with open(a.graph, encoding="utf-8") as fh:
                G = Multigraph.parse(fh.read())
        except OSError as e:
            raise UsageError(str(e))
    elif a.multipartite:
        G = Multigraph.multipartite(_ints(a.multipartite))
    else:
        G = Multigraph.complete(a.complete)
    _guard(G.n, a.max_n, "vertices")
    rep = tutte_report(G, universal=a.universal, chromatic=a.chromatic, hilb=a.hilb)
    if "hilb_ab" in rep:
        rep["hilb_ab_tuple"] = _tuple_or_none(rep["hilb_ab"])
    return rep, EXIT_OK


def cmd_family(a):
    from .numfam import family
    args = [a.n] if a.n is not None else []
    if a.args:
        args += _ints(a.args)
    if args:
        _guard(args[0], a.max_n, "n")
    try:
        v = family(a.name, *args)
    except TypeError as e:
        raise UsageError(f"{a.name}: {e}")
    out = {"name": a.name, "args": args}
    if isinstance(v, ExactPoly):
        t = _tuple_or_none(v)
        out["value"] = t if t is not None else str(v)
        out["poly"] = v
    else:
        out["value"] = v
    return out, EXIT_OK


def cmd_hilb(a):
    from .numfam import hilbert_series
    _guard(a.n, a.max_n, "n")
    h = hilbert_series(a.algebra, a.n, a.m)
    out = {"algebra": a.algebra, "n": a.n, "m": a.m, "hilb": h}
    if isinstance(h, RatFun):
        out["series"] = h.series(T, a.trunc)
    else:
        out["tuple"] = h.tuple_form(T)
        out["series"] = h.int_coeffs(T)[: a.trunc + 1]
    return out, EXIT_OK


def _run_one(k):
    from .acceptance import run_criterion
    t0 = time.perf_counter()
    rep = run_criterion(k)
    return rep, time.perf_counter() - t0


def cmd_verify(a):
    from .acceptance import resolve_suite
    ks = resolve_suite(a.suite)
    try:
        workers = max(1, int(os.environ.get("YBX_THREADS", "1")))
    except ValueError:
        workers = 1
    if workers > 1 and len(ks) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=min(workers, len(ks))) as ex:
            results = list(ex.map(_run_one, ks))
    else:
        results = [_run_one(k) for k in ks]
    reports = []
    for rep, secs in results:
        if a.timings:
            rep["seconds"] = round(secs, 2)
        if not a.details:
            rep["records"] = [r for r in rep["records"] if r["status"] != "pass"]
        reports.append(rep)
    ok = all(r["status"] == "pass" for r in reports if r["blocking"])
    summary = {"suite": a.suite, "status": "pass" if ok else "fail",
               "criteria": reports}
    return summary, (EXIT_OK if ok else EXIT_FAIL)


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="ybx", description="Exact computations for Yang-Baxter "
                                "type algebras, Grothendieck polynomials and graph invariants.")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, max_n):
        sp.add_argument("--format", choices=("json", "csv", "latex"), default=argparse.SUPPRESS)
        sp.add_argument("--max-n", type=int, default=max_n, help=f"size guard (default {max_n})")

    r = sub.add_parser("reduce", help="reduce a monomial in the quasi-classical YB algebra")
    r.add_argument("--word", required=True, help='letters such as "12,23,34" or "1-2,2-10"')
    r.add_argument("--beta", default="sym")
    r.add_argument("--alpha", default="0")
    r.add_argument("--mode", choices=("noncommutative", "commutative"), default="noncommutative")
    r.add_argument("--spec", default="all-ones",
                   choices=("all-ones", "last-column", "row", "first-row", "none"))
    r.add_argument("--max-fuel", type=int, default=10**7)
    common(r, 12)
    r.set_defaults(func=cmd_reduce)

    g = sub.add_parser("groth", help="beta-Grothendieck or generalized Schubert polynomial")
    g.add_argument("--perm", required=True, help='one-line notation "1,5,4,3,2"')
    g.add_argument("--beta", default="sym")
    g.add_argument("--A", default=None, help="preset name or a,b,c,h,e")
    g.add_argument("--spec", default="sym", choices=("sym", "ones", "q1", "principal", "q"))
    g.add_argument("--shift-beta", type=int, default=0)
    common(g, 9)
    g.set_defaults(func=cmd_groth)

    d = sub.add_parser("rep", help="check Dunkl-element identities in a representation")
    d.add_argument("--kind", required=True,
                   choices=("bruhat", "qbruhat", "gaudin", "nabla", "fulton"))
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--check", default="all", choices=("all", "relations", "vanishing",
                                                      "multiplicative"))
    d.add_argument("--seed", type=int, default=0)
    common(d, 6)
    d.set_defaults(func=cmd_rep)

    t = sub.add_parser("tutte", help="Tutte polynomial and related invariants")
    t.add_argument("--graph", help='file: first line n, then "i j m" lines')
    t.add_argument("--multipartite", help='complete multipartite shape "2,2,2"')
    t.add_argument("--complete", type=int, help="complete graph K_n")
    t.add_argument("--universal", action="store_true")
    t.add_argument("--chromatic", action="store_true")
    t.add_argument("--hilb", action="store_true")
    common(t, 12)
    t.set_defaults(func=cmd_tutte)

    f = sub.add_parser("family", help="number families and their polynomial refinements")
    f.add_argument("--name", required=True)
    f.add_argument("--n", type=int)
    f.add_argument("--args", default=None, help="further integer arguments, comma separated")
    common(f, 60)
    f.set_defaults(func=cmd_family)

    h = sub.add_parser("hilb", help="closed-form Hilbert series")
    h.add_argument("--algebra", required=True)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--m", type=int, default=None)
    h.add_argument("--trunc", type=int, default=10)
    common(h, 12)
    h.set_defaults(func=cmd_hilb)

    v = sub.add_parser("verify", help="run acceptance suites")
    v.add_argument("--suite", default="all", help="1-13, a suite name, or all")
    v.add_argument("--details", action="store_true", help="list passing records too")
    v.add_argument("--timings", action="store_true", help="add wall times (not reproducible)")
    common(v, 0)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        result, code = a.func(a)
        sys.stdout.write(emit(result, a.format))
        return code
    except SizeError as e:
        print(f"ybx: size limit: {e}", file=sys.stderr)
        return EXIT_SIZE
    except IdentityFailure as e:
        print(f"ybx: identity failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError) as e:
        print(f"ybx: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001
        print(f"ybx: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``knotcg <command> [flags]``.

Output is JSON (or CSV with ``--csv`` where tabular); rationals are
printed as "num/den" strings. Exit codes: 0 success, 1 domain error,
2 usage error.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import signature_profiles as sp
from . import twisted_doubles as td
from .branched_covers import cover_homology, p_primary
from .casson_gordon import Genus1Data, sigma1_tau
from .core_forms import alexander, validate_seifert
from .errors import KnotCGError
from .torus_signatures import (
    profile_T2,
    profile_Tll1,
    sigma_T2,
    sigma_Tll1,
    torus_jumps,
)


def fmt(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# argument types

def _matrix(text):
    try:
        rows = json.loads(text)
        return validate_seifert([[int(x) for x in row] for row in rows])
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"invalid --matrix {text!r}: {exc}") from None


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _sign(text):
    if text in ("+", "plus", "1", "+1"):
        return 1
    if text in ("-", "minus", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"--sign must be + or -, got {text!r}")


def _torus_profile(m, n):
    if m < 0:
        m, n = -m, -n
    if m == 0 or n == 0:
        raise ValueError("torus parameters must be nonzero")
    if m == 1 or abs(n) == 1:
        return sp.SignatureProfile.zero()
    if m == 2 and n > 0:
        return profile_T2((n - 1) // 2) if n % 2 else sp.profile_from_jumps(torus_jumps(m, n))
    P = sp.profile_from_jumps(torus_jumps(m, abs(n)))
    return P if n > 0 else sp.negate(P)


def parse_companion(text):
    """unknot | torus:m,n | torus-neg:l | seifert:<json> | profile:<json>, joined by '#'."""
    pieces = []
    for part in text.split("#"):
        part = part.strip()
        kind, _, arg = part.partition(":")
        try:
            if kind == "unknot" and not arg:
                pieces.append(sp.SignatureProfile.zero())
            elif kind == "torus":
                m, n = (int(x) for x in arg.split(","))
                pieces.append(_torus_profile(m, n))
            elif kind == "torus-neg":
                pieces.append(profile_Tll1(int(arg)))
            elif kind == "seifert":
                rows = json.loads(arg)
                pieces.append(sp.profile_from_seifert([[int(x) for x in r] for r in rows]))
            elif kind == "profile":
                pieces.append(sp.SignatureProfile.from_json(json.loads(arg)))
            else:
                raise ValueError(f"unknown companion kind {kind!r}")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise argparse.ArgumentTypeError(f"invalid --companion piece {part!r}: {exc}") from None
    return pieces[0] if len(pieces) == 1 else sp.sum_profiles(pieces)


# ---------------------------------------------------------------------------
# commands

def _pmap(fn, items, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_alexander(args):
    return {"matrix": args.matrix.to_json(), "alexander": alexander(args.matrix).to_json()}


def _profile_output(P, rs):
    out = {"profile": P.to_json()}
    if rs:
        out["values"] = {fmt(r): fmt(sp.evaluate(P, r)) for r in rs}
    return out


def cmd_signature(args):
    if args.matrix is not None:
        P = sp.profile_from_seifert(args.matrix)
        out = _profile_output(P, args.r)
        out["sigma_half"] = sp.sigma_half(args.matrix)
        return out
    if args.companion is not None:
        return _profile_output(args.companion, args.r)
    raise KnotCGError("signature needs --matrix or --companion")


def cmd_torus_sig(args):
    if (args.k is None) == (args.l is None):
        raise KnotCGError("torus-sig needs exactly one of --k or --l")
    if args.k is not None:
        P, closed, name = profile_T2(args.k), (lambda r: sigma_T2(args.k, r)), f"T(2,{2 * args.k + 1})"
    else:
        P, closed, name = profile_Tll1(args.l), (lambda r: sigma_Tll1(args.l, r)), f"T({args.l},{-args.l - 1})"
    out = {"knot": name, "profile": P.to_json()}
    if args.r:
        out["values"] = {fmt(r): fmt(closed(r)) for r in args.r}
    return out


def cmd_classify(args):
    return {"k": args.k, "class": td.levine_class(args.k).value}


def cmd_cover(args):
    H = cover_homology(args.matrix, args.q)
    out = H.to_json()
    if args.p is not None and H.is_finite:
        G = p_primary(H.kernel(), args.p)
        out["p_primary"] = {"p": args.p, "orders": [str(o) for o in G.orders],
                            "generators": [g.to_json() for g in G.generators]}
    return out


def cmd_cg_tau(args):
    A = args.matrix.matrix
    if len(A) != 2:
        raise KnotCGError("cg-tau needs a genus-one (2x2) matrix")
    a, m, b = A[0][0], -A[0][1], A[1][1]
    if A[1][0] != -(m + 1):
        raise KnotCGError("matrix is not of the form [[a, -m], [-(m+1), b]]")
    jx = args.companion if args.companion is not None else sp.SignatureProfile.zero()
    data = Genus1Data(a, m, b, sp.profile_from_seifert(args.matrix), jx)
    d = args.d if args.d is not None else args.p
    if d is None:
        raise KnotCGError("cg-tau needs --d (or --p)")
    return {"q": args.q, "d": d, "s": args.s, **sigma1_tau(data, args.q, d, args.s).to_json()}


def cmd_double_q2(args):
    v = td.cg_double_q2(args.k, args.companion, args.p, args.s)
    return {"k": args.k, "p": args.p, "s": args.s, "value": fmt(v)}


def cmd_double_algslice(args):
    v = td.cg_double_algslice(args.l, args.companion, args.q, args.p, args.s, args.sign)
    return {"l": args.l, "q": args.q, "p": args.p, "s": args.s,
            "sign": "+" if args.sign > 0 else "-", "value": fmt(v)}


def cmd_minmax(args):
    def one(k):
        res = td.minmax_bounds(k, args.companion)
        return {"k": k, "min_value": fmt(res.min_value), "argmin": fmt(res.argmin),
                "argmins": [fmt(r) for r in res.argmins], "bound_ok": res.bound_ok,
                "prime_power_min": fmt(res.prime_power_min)}
    return {"results": _pmap(one, args.k, args.jobs)}


def cmd_verdict_ribbon(args):
    def one(k):
        return {"n": args.n, "k": k, **td.ribbon_obstruction_verdict(args.n, k, args.companion).to_json()}
    return {"results": _pmap(one, args.k, args.jobs)}


def cmd_verdict_slice(args):
    def one(l):
        rep = td.slice_obstruction_verdict(args.n, l, args.companion,
                                           tuple(args.exclude_primes), args.max_q)
        return {"n": args.n, "l": l, **rep.to_json()}
    return {"results": _pmap(one, args.l, args.jobs)}


def cmd_independence(args):
    ns = args.n_list or [1]
    if len(ns) == 1:
        ns = ns * len(args.l)
    if len(ns) != len(args.l):
        raise KnotCGError("--n needs one value or one per --l")
    rep = td.independence_certificate(list(zip(args.l, ns)), args.companion,
                                      tuple(args.exclude_primes), args.max_q)
    return rep.to_json()


def cmd_table(args):
    def one(k):
        return td.q2_table([k], args.companion)
    rows = [row for chunk in _pmap(one, args.k, args.jobs) for row in chunk]
    return {"columns": ["k", "r", "value"],
            "rows": [{"k": k, "r": f"{s}/{n}", "value": fmt(v)} for k, s, n, v in rows]}


# ---------------------------------------------------------------------------
# parser

def _table_rows(command, result):
    if command == "table":
        return result["columns"], [[r["k"], r["r"], r["value"]] for r in result["rows"]]
    if command in ("minmax", "verdict-ribbon", "verdict-slice"):
        rows = result["results"]
        cols = [c for c in rows[0] if c != "certificate"] if rows else []
        return cols, [[r[c] for c in cols] for r in rows]
    return None


def build_parser():
    parser = argparse.ArgumentParser(prog="knotcg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--csv", action="store_true", help="CSV output for tabular commands")
        p.add_argument("--jobs", type=int, default=1, help="worker threads for sweeps")
        return p

    def companion(p, required=True):
        p.add_argument("--companion", type=parse_companion, required=required)

    p = add("alexander", cmd_alexander, "Alexander polynomial of a Seifert matrix")
    p.add_argument("--matrix", type=_matrix, required=True)

    p = add("signature", cmd_signature, "signature profile of a Seifert matrix or companion")
    p.add_argument("--matrix", type=_matrix)
    companion(p, required=False)
    p.add_argument("--r", type=_rational, nargs="*", default=[])

    p = add("torus-sig", cmd_torus_sig, "torus-knot signatures: --k for T(2,2k+1), --l for T(l,-l-1)")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--r", type=_rational, nargs="*", default=[])

    p = add("classify", cmd_classify, "algebraic concordance order of D_k")
    p.add_argument("--k", type=int, required=True)

    p = add("cover", cmd_cover, "homology of the q-fold branched cover")
    p.add_argument("--matrix", type=_matrix, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int)

    p = add("cg-tau", cmd_cg_tau, "genus-one Casson-Gordon signature")
    p.add_argument("--matrix", type=_matrix, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--s", type=int, required=True)
    companion(p, required=False)

    p = add("double-q2", cmd_double_q2, "q = 2 value for D_k(K)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    companion(p)

    p = add("double-algslice", cmd_double_algslice, "orbit sum for D_{l(l+1)}(K)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--sign", type=_sign, default=1)
    companion(p)

    p = add("minmax", cmd_minmax, "minimum over the q = 2 character lattice")
    p.add_argument("--k", type=int, nargs="+", required=True)
    companion(p)

    p = add("verdict-ribbon", cmd_verdict_ribbon, "ribbon obstruction for n copies of D_k(K)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, nargs="+", required=True)
    companion(p)

    for name, fn, text in (("verdict-slice", cmd_verdict_slice, "slice obstruction for n copies of D_{l(l+1)}(K)"),
                           ("independence", cmd_independence, "independence certificate for D_{l(l+1)}(K)")):
        p = add(name, fn, text)
        if name == "verdict-slice":
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--n", dest="n_list", type=int, nargs="+")
        p.add_argument("--l", type=int, nargs="+", required=True)
        p.add_argument("--max-q", type=int, default=97)
        p.add_argument("--exclude-primes", type=int, nargs="*", default=[])
        companion(p)

    p = add("table", cmd_table, "the q = 2 table: sigma_1 tau / 2 - sigma_{2r}(K)")
    p.add_argument("--k", type=int, nargs="+", required=True)
    companion(p)
    return parser


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        result = args.func(args)
    except (KnotCGError, ValueError) as exc:
        print(f"knotcg {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.csv:
        table = _table_rows(args.command, result)
        if table is None:
            print(f"knotcg {args.command}: --csv is not available for this command", file=sys.stderr)
            return 2
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table[0])
        writer.writerows(table[1])
        stdout.write(buf.getvalue())
    else:
        stdout.write(json.dumps(result, indent=2) + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""
Command-line interface.

    dspringer union --n 5 --pairs 2,3 4,4
    dspringer hilbert --n 4 --i 3
    dspringer verify --n 3 --p 2

Every verb prints one JSON document (or a plain table with --format table).
Exit codes: 0 ok, 1 verification failure, 2 invalid arguments, 3 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from dspringer.cohomology import (build_ideal, hilbert_series, osp_count,
                                  osp_count_formula, top_degree)
from dspringer.components import (PairIndex, all_pairs, bundle_type, dimension,
                                  dyck_from_pairs, dyck_sum, hasse_edges, intersect,
                                  parse_pairs, poincare_pair, poincare_union,
                                  poincare_union_oracle, poset_leq)
from dspringer.nilpotent import (DEFAULT_BUDGET, BudgetExceeded, IndexFlag,
                                 NilpotentModel, count_points_fp, flag_membership,
                                 thread_cap)
from dspringer.qseries import eval_int
from dspringer.shapes import (GlobalParams, classify_filling, enumerate_components,
                              enumerate_fillings, filling_to_partial_permutation,
                              tableau_to_partial_permutation)
from dspringer.verify import run_verify

SCHEMA = "1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _word(w: Sequence[int]) -> str:
    sep = "" if max(w) < 10 else ","
    return sep.join(str(k) for k in w)


def _pair_record(pair: PairIndex) -> dict:
    return {"pair": [pair.i, pair.j], "dimension": dimension(pair),
            "poincare": poincare_pair(pair).to_json()}


def _params(args) -> GlobalParams:
    return GlobalParams.of(args.n, args.s)


def _pairs(args, params: GlobalParams) -> list[PairIndex]:
    if args.pairs:
        return parse_pairs(params, args.pairs)
    if getattr(args, "i", None) is not None:
        j = args.j if getattr(args, "j", None) is not None else args.i
        return [PairIndex(args.i, j, params.n, params.s)]
    raise ValueError("give --pairs (or --i/--j)")


# -- verbs ------------------------------------------------------------------------

def cmd_components(args) -> dict:
    params = _params(args)
    recs = []
    for t in enumerate_components(params):
        w = tableau_to_partial_permutation(t)
        recs.append({"top_right": t.top_right, "rows": t.rows(),
                     "partial_permutation": list(w), "word": _word(w)})
    return {"n": params.n, "s": params.s, "components": recs}


def cmd_fillings(args) -> dict:
    params = _params(args)
    recs = []
    for f in enumerate_fillings(params):
        w = filling_to_partial_permutation(f)
        recs.append({"rows": f.rows(), "partial_permutation": list(w),
                     "word": _word(w),
                     "components": [i for i in params.component_indices()
                                    if classify_filling(f, i)]})
    return {"n": params.n, "s": params.s, "count": len(recs), "fillings": recs}


def cmd_classify(args) -> dict:
    params = _params(args)
    if args.i is None:
        raise ValueError("classify needs --i")
    params.check_index(args.i)
    model = NilpotentModel.from_params(params)
    recs = []
    agree = True
    for f in enumerate_fillings(params):
        if not classify_filling(f, args.i):
            continue
        w = filling_to_partial_permutation(f)
        agree &= flag_membership(IndexFlag(w), (args.i, args.i), model)
        recs.append({"rows": f.rows(), "word": _word(w)})
    return {"n": params.n, "s": params.s, "i": args.i, "count": len(recs),
            "membership_agrees": agree, "fillings": recs}


def cmd_poincare(args) -> dict:
    params = _params(args)
    pairs = _pairs(args, params) if (args.pairs or args.i) else all_pairs(params)
    recs = []
    for pair in pairs:
        rec = _pair_record(pair)
        rec["bundle_type"] = [f.to_json() for f in bundle_type(pair)]
        recs.append(rec)
    return {"n": params.n, "s": params.s, "results": recs}


def cmd_union(args) -> dict:
    params = _params(args)
    pairs = _pairs(args, params)
    P = poincare_union(pairs)
    oracle = poincare_union_oracle(pairs)
    return {"n": params.n, "s": params.s,
            "pairs": [[p.i, p.j] for p in pairs],
            "dyck_cells": [list(c) for c in dyck_from_pairs(pairs).sorted_cells()],
            "dyck_sum": dyck_sum(pairs).to_json(),
            "poincare": P.to_json(),
            "coeffs": P.to_json(),
            "oracle_agrees": P == oracle}


def cmd_intersect(args) -> dict:
    params = _params(args)
    pairs = _pairs(args, params)
    res = intersect(pairs)
    return {"n": params.n, "s": params.s,
            "inputs": [[p.i, p.j] for p in pairs], **_pair_record(res)}


def cmd_poset(args) -> dict:
    params = _params(args)
    out: dict[str, Any] = {"n": params.n, "s": params.s}
    out["elements"] = [_pair_record(p) for p in all_pairs(params)]
    out["hasse"] = [{"below": [a.i, a.j], "above": [b.i, b.j]}
                    for a, b in hasse_edges(params)]
    if args.pairs:
        pairs = parse_pairs(params, args.pairs)
        if len(pairs) != 2:
            raise ValueError("poset comparison takes exactly two pairs")
        a, b = pairs
        out["compare"] = {"a": [a.i, a.j], "b": [b.i, b.j],
                          "a_in_b": poset_leq(a, b), "b_in_a": poset_leq(b, a)}
    return out


def cmd_hilbert(args) -> dict:
    n, i = args.n, args.i
    if i is None:
        raise ValueError("hilbert needs --i")
    spec = build_ideal(n, i)
    h = hilbert_series(spec)
    P = poincare_pair(PairIndex(i, i, n, n - 1))
    predicted = [str(c) for c in P.coeffs] + ["0"] * (len(h) - len(P.coeffs))
    osp = osp_count(n, i)
    formula = osp_count_formula(n, i)
    top = top_degree(n)
    flags = {
        "hilbert_equals_poincare": [str(v) for v in h] == predicted,
        "rank_equals_osp": sum(h) == osp == formula,
        "palindromic": h[:top + 1] == h[:top + 1][::-1],
        "vanishes_past_top": all(v == 0 for v in h[top + 1:]),
    }
    return {"n": n, "i": i, "truncation": spec.D,
            "generators": [g.name for g in spec.generators],
            "hilbert": [str(v) for v in h], "predicted_poincare": predicted,
            "osp_count": str(osp), "osp_formula": str(formula),
            "checks": {k: "PASS" if v else "FAIL" for k, v in flags.items()}}


def cmd_pointcount(args) -> dict:
    params = _params(args)
    model = NilpotentModel.from_params(params)
    pairs = _pairs(args, params) if (args.pairs or args.i) else all_pairs(params)
    recs = []
    for pair in pairs:
        got = count_points_fp(pair.key, model, args.p, budget=args.budget,
                              workers=thread_cap())
        want = eval_int(poincare_pair(pair), args.p)
        recs.append({"pair": [pair.i, pair.j], "count": str(got),
                     "predicted": str(want), "agrees": got == want})
    return {"n": params.n, "s": params.s, "p": args.p, "results": recs}


def cmd_verify(args) -> dict:
    checks = run_verify(args.n, args.p, args.s, budget=args.budget,
                        workers=thread_cap())
    ok = all(c.passed for c in checks)
    return {"n": args.n, "s": args.s if args.s is not None else args.n - 1,
            "p": args.p, "status": "PASS" if ok else "FAIL",
            "checks": [c.to_json() for c in checks]}


VERBS = {
    "components": cmd_components,
    "fillings": cmd_fillings,
    "classify": cmd_classify,
    "poincare": cmd_poincare,
    "union": cmd_union,
    "intersect": cmd_intersect,
    "poset": cmd_poset,
    "hilbert": cmd_hilbert,
    "pointcount": cmd_pointcount,
    "verify": cmd_verify,
}


# -- output -----------------------------------------------------------------------

def _table(doc: dict) -> str:
    lines = []
    for key, val in doc.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            cols = list(val[0].keys())
            lines.append("  " + "\t".join(cols))
            for rec in val:
                lines.append("  " + "\t".join(_cell(rec.get(c)) for c in cols))
        else:
            lines.append(f"{key}: {_cell(val)}")
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dspringer",
        description="Components of the Delta-Springer fibers Y_{n,(1^{n-1}),s}.")
    sub = ap.add_subparsers(dest="verb", required=True)
    for name in VERBS:
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--s", type=int, default=None, help="defaults to n-1")
        sp.add_argument("--i", type=int, default=None)
        sp.add_argument("--j", type=int, default=None)
        sp.add_argument("--pairs", nargs="+", default=None,
                        help="tokens 'i,j' or 'i' (meaning i,i)")
        sp.add_argument("--p", type=int, default=2)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.add_argument("--format", choices=("json", "table"), default="json")
    return ap


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.verb == "hilbert" and args.s not in (None, args.n - 1):
        print("error: hilbert is only defined for s = n-1", file=sys.stderr)
        return EXIT_USAGE
    try:
        doc = VERBS[args.verb](args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"schema": SCHEMA, "verb": args.verb, **doc}
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(_table(doc) + "\n")
    if args.verb == "verify" and doc["status"] != "PASS":
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

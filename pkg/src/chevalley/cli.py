"""Command-line front end.

Every subcommand prints one JSON report with sorted keys::

    {"command": ..., "inputs": {...}, "results": [...], "status": ..., "elapsed_ms": ...}

Exit codes: 0 pass (or boundary), 1 fail, 2 usage error, 3 budget exceeded.
``elapsed_ms`` is 0 unless ``--timing`` is given, so that repeated runs
produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import acceptance
from . import groups as fg
from . import interp, lattices, reps, roots
from .errors import (BudgetExceeded, ChevalleyError, CharThreeForbiddenForG2, CharTwoForbidden,
                     InadmissibleType, NeedsImaginaryUnit, NotPrime, ParseError, UnknownName,
                     UnsupportedFamily, UsageError)
from .fields import finite_field, parse_field

EXIT = {"pass": 0, "boundary": 0, "fail": 1, "budget_exceeded": 3}
DEFAULT_SAMPLES = 20
DEFAULT_BUDGET = 10 ** 7


# errors caused by the arguments rather than by a computation
USAGE_ERRORS = (UsageError, InadmissibleType, NotPrime, CharTwoForbidden, CharThreeForbiddenForG2,
                NeedsImaginaryUnit, UnsupportedFamily, ParseError, UnknownName, OSError)


def jsonable(x):
    """Convert results to JSON data with a deterministic layout."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if hasattr(x, "item"):          # numpy scalars
        return x.item()
    return str(x)


def status_of(results: list) -> str:
    st = [r.get("status") for r in results if isinstance(r, dict)]
    if "fail" in st:
        return "fail"
    if "boundary" in st:
        return "boundary"
    return "pass"


def _check(name: str, ok: bool, **data) -> dict:
    return {"check": name, "status": "pass" if ok else "fail", **data}


# ------------------------------------------------------------ arguments

def _system(args) -> roots.RootSystem:
    if not args.type:
        raise UsageError("--type is required")
    if args.rank is None:
        return roots.build(args.type)
    return roots.build(args.type, args.rank)


def _field(args, default: Optional[str] = None):
    text = args.field or (f"F{args.q}" if args.q else default)
    if text is None:
        raise UsageError("--field or --q is required")
    try:
        return parse_field(text)
    except (NotPrime, CharTwoForbidden):
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _group(args):
    if not args.group or args.n is None or args.q is None:
        raise UsageError("--group, --n and --q are required")
    return fg.enumerate(args.group, args.n, args.q, args.budget)


def _read_formula(args):
    from .logic.builtins import builtin
    from .logic.syntax import parse_formula
    if args.formula and args.builtin:
        raise UsageError("give either --formula or --builtin")
    if args.formula:
        with open(args.formula, encoding="utf-8") as fh:
            return parse_formula(fh.read())
    if args.builtin:
        params = {}
        for kv in args.param or []:
            k, _, v = kv.partition("=")
            params[k] = int(v) if v.lstrip("-").isdigit() else {"true": True, "false": False}.get(v, v)
        return builtin(args.builtin, params)
    raise UsageError("--formula or --builtin is required")


# ------------------------------------------------------------- commands

def cmd_roots(args) -> list:
    phi = _system(args)
    rec = {"label": phi.label, "root_count": len(phi.roots), "positive": len(phi.positive),
           "simple": [str(r) for r in phi.simple], "highest_root": str(phi.highest_root()),
           "cartan": [list(r) for r in phi.cartan]}
    try:
        want = acceptance.table_positive_count(phi.type_label, phi.rank)
        ok = want == len(phi.positive)
    except KeyError:
        want, ok = None, True
    return [_check("positive_count", ok, table=want, **rec)]


def cmd_weyl(args) -> list:
    phi = _system(args)
    W = roots.weyl(phi)
    pred = roots.predicted_weyl_order(phi)
    return [_check("weyl_order", W.order == pred, label=phi.label, order=W.order,
                   predicted=pred)]


def cmd_lattices(args) -> list:
    phi = _system(args)
    fund = lattices.fundamental_group(phi)
    want = acceptance.expected_fundamental_group(phi.type_label, phi.rank)
    out = [_check("fundamental_group", fund == want, label=phi.label, invariants=fund,
                  expected=want)]
    for L in lattices.standard_lattices(phi):
        out.append({"lattice": L.tag, "index_in_sc": L.index_in_sc,
                    "index_over_ad": L.index_over_ad, "basis": [list(r) for r in L.basis]})
    return out


def cmd_gens(args) -> list:
    phi = _system(args)
    f = _field(args, "Q(i)" if phi.type_label == "G" else "Q")
    rep = reps.representation(phi, None, f)
    r = reps.chevalley_report(rep)
    out = [_check("chevalley_properties", r["ok"], label=phi.label, field=str(f),
                  variant=rep.variant, dimension=rep.n, failures=r["failures"][:20])]
    if f.is_finite and phi.type_label == "G":
        chain = reps.g2_lemma_chain(rep)
        out.append(_check("g2_lemma_chain", chain["involution"] and all(chain["chain"]),
                          **chain))
    return out


def cmd_check_relations(args) -> list:
    phi = _system(args)
    f = _field(args)
    rep = reps.representation(phi, None, f)
    r = reps.verify_relations(rep, args.samples, args.seed)
    return list(r.records)


def cmd_structure_constants(args) -> list:
    phi = _system(args)
    rep = reps.representation(phi)
    out = []
    for a in phi.positive:
        for b in phi.positive:
            consts = reps.structure_constants(rep, a, b, args.seed)
            if consts:
                out.append({"alpha": list(phi.coefficients[a]), "beta": list(phi.coefficients[b]),
                            "terms": [list(c) for c in consts]})
    return out


def cmd_bruhat(args) -> list:
    if args.rank is None or args.q is None:
        raise UsageError("--rank and --q are required")
    n = args.rank + 1
    if fg.sl_order(n, args.q) > args.budget:
        raise BudgetExceeded(f"SL_{n}(F_{args.q}) exceeds the budget")
    r = reps.bruhat_exhaustive(n, args.q)
    ok = r.pop("ok")
    return [_check("bruhat_exhaustive", ok, group=f"SL{n}(F{args.q})", **r)]


def cmd_commutator_width(args) -> list:
    G = _group(args)
    w = reps.commutator_width(G, args.budget)
    out = {"group": str(G.spec), "order": G.order, "width": w}
    if args.expect is not None:
        return [_check("width", w == int(args.expect), expected=int(args.expect), **out)]
    return [out]


def cmd_enumerate(args) -> list:
    G = _group(args)
    pred = fg.predicted_order(args.group, args.n, args.q)
    return [_check("order", G.order == pred, group=str(G.spec), order=G.order, predicted=pred)]


def cmd_involutions(args) -> list:
    G = _group(args)
    out = []
    classes = fg.involution_classes(G)
    for c in classes:
        out.append({"kind": c.kind, "size": c.size, "representative": c.representative})
    if args.expect is not None:
        out.append(_check("class_count", len(classes) == int(args.expect),
                          classes=len(classes), expected=int(args.expect)))
    return out


def cmd_eval_formula(args) -> list:
    from .logic.evaluate import GroupStructure, RingStructure, definable_set, evaluate
    from .logic.syntax import free_vars, to_text
    if args.pipeline:
        return _eval_pipeline(args)
    f = _read_formula(args)
    if args.group:
        S, where = GroupStructure(_group(args)), f"{args.group}{args.n}(F{args.q})"
    else:
        F = _field(args)
        S, where = RingStructure(F), str(F)
    fv = sorted(free_vars(f))
    rec = {"formula": to_text(f), "structure": where}
    if not fv:
        value = evaluate(f, S, budget=args.budget)
        rec["value"] = value
    elif len(fv) == 1:
        elems = definable_set(f, S, fv[0], budget=args.budget)
        rec.update(variable=fv[0], size=len(elems), elements=elems[:200])
        value = bool(elems)
    else:
        raise UsageError(f"formula has free variables {fv}; at most one is allowed")
    if args.expect is not None:
        want = {"true": True, "false": False}[args.expect.lower()]
        return [_check("value", value == want, expected=want, **rec)]
    return [rec]


def _eval_pipeline(args) -> list:
    from .logic.pipelines import eval_pipeline
    if not args.builtin or not args.group:
        raise UsageError("--pipeline needs --builtin and a group")
    params = {k: v for k, v in (kv.partition("=")[::2] for kv in args.param or [])}
    if "N" in params:
        params["N"] = int(params["N"])
    value = eval_pipeline(args.builtin, _group(args), **params)
    rec = {"builtin": args.builtin, "structure": f"{args.group}{args.n}(F{args.q})",
           "method": "pipeline"}
    if isinstance(value, list):
        rec.update(size=len(value), elements=value[:200])
        value = bool(value)
    else:
        rec["value"] = value
    if args.expect is not None:
        want = {"true": True, "false": False}[args.expect.lower()]
        return [_check("value", value == want, expected=want, **rec)]
    return [rec]


def cmd_translate(args) -> list:
    from .logic.evaluate import eval_group, eval_ring
    from .logic.syntax import to_text
    from .logic.translate import sl, translate
    f = _read_formula(args)
    n = args.n or 2
    g = translate(f, sl(n))
    rec = {"formula": to_text(f), "translation": to_text(g), "n": n}
    if args.q is None:
        return [rec]
    a = eval_group(f, fg.enumerate("SL", n, args.q, args.budget), args.budget)
    b = eval_ring(g, finite_field(args.q), args.budget)
    return [_check("transfer", a == b, group_value=a, ring_value=b, q=args.q, **rec)]


def cmd_reconstruct_field(args) -> list:
    if args.q is None:
        raise UsageError("--q is required")
    v = interp.verdict(args.q)
    if v["boundary_case"]:
        return [{"status": "boundary", **v}]
    ok = v["isomorphic"] and v["field_order"] == args.q and v["disambiguation_exactly_one"]
    return [_check("field", ok, **v)]


def cmd_verify_paper(args) -> list:
    nums = [args.criterion] if args.criterion else sorted(acceptance.CRITERIA)
    out = []
    for k in nums:
        if k not in acceptance.CRITERIA:
            raise UsageError(f"no criterion {k}")
        o = acceptance.run(k)
        print(o.line(), file=sys.stderr)
        out.append({"criterion": k, "title": o.title, "status": "pass" if o.ok else "fail",
                    "details": o.details})
    return out


COMMANDS = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "lattices": cmd_lattices,
    "gens": cmd_gens,
    "check-relations": cmd_check_relations,
    "structure-constants": cmd_structure_constants,
    "bruhat": cmd_bruhat,
    "commutator-width": cmd_commutator_width,
    "enumerate": cmd_enumerate,
    "involutions": cmd_involutions,
    "eval-formula": cmd_eval_formula,
    "translate": cmd_translate,
    "reconstruct-field": cmd_reconstruct_field,
    "verify-paper": cmd_verify_paper,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", help="root system type letter or label, e.g. E or E8")
    common.add_argument("--rank", type=int)
    common.add_argument("--q", type=int, help="field order p or p^2")
    common.add_argument("--field", help="F7, F9, Q or Q(i)")
    common.add_argument("--group", help="SL, PSL, Sp, PSp, SO or EO")
    common.add_argument("--n", type=int, help="matrix size")
    common.add_argument("--formula", help="file holding one s-expression formula")
    common.add_argument("--builtin", help="named formula such as Cell or phi_A1")
    common.add_argument("--param", action="append", help="builtin parameter k=v")
    common.add_argument("--pipeline", action="store_true",
                        help="evaluate a builtin through its group-theoretic pipeline")
    common.add_argument("--expect", help="expected value, turning the run into a check")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--criterion", type=int)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="record elapsed_ms")
    p = _Parser(prog="chevalley", description="Exact checks on root systems and Chevalley groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return p


def run(argv: Optional[Sequence[str]] = None):
    """Execute one command; returns (exit code, report or None)."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2, None
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("command", "out", "timing") and v is not None}
    start = time.perf_counter()
    try:
        results = COMMANDS[args.command](args)
        status = status_of(results)
    except BudgetExceeded as exc:
        results, status = [{"error": str(exc)}], "budget_exceeded"
    except USAGE_ERRORS as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2, None
    except ChevalleyError as exc:
        results, status = [{"error": f"{type(exc).__name__}: {exc}", "status": "fail"}], "fail"
    elapsed = int((time.perf_counter() - start) * 1000) if args.timing else 0
    report = {"command": args.command, "inputs": inputs, "results": jsonable(results),
              "status": status, "elapsed_ms": elapsed}
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT[status], report


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())

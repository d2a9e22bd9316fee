"""Command-line front end. Every command writes canonical JSON."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cyclotomic import (
    PrimeLevel,
    gauss_sum,
    gauss_sum_closed_form,
    normal_form,
    order_str,
    p_order,
    p_sum,
    sum_s,
    sum_t,
    sum_u,
    sum_v,
    unknot_bracket_b,
    bo_closed_form,
)
from .invariant import p_bracket_direct, p_bracket_via_phi, tau_p
from .link import DiagramError, catalog, catalog_names, load_link
from .skein import Budget, BudgetExceeded, get_budget, set_budget
from .verify import DEFAULT_BUDGET, DEFAULT_PRIMES, CRITERIA, run_criterion

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"cannot parse prime list {text!r}") from None
    if not primes:
        raise UsageError("empty prime list")
    for p in primes:
        try:
            PrimeLevel(p)
        except ValueError:
            raise UsageError(f"p must be an odd prime, got {p}") from None
    return primes


def positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def canonical(data) -> str:
    return json.dumps(data, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def _element(x) -> dict:
    out = {"reduced": [str(v) for v in x.reduced], "p_order": order_str(p_order(x))}
    out["normal_form"] = None if x.is_zero() else normal_form(x).to_json()
    return out


def _link_meta(L) -> dict:
    d = L.milnor_degree
    return {
        "name": L.name,
        "components": str(L.n_components),
        "crossings": str(L.n_crossings),
        "framings": [str(a) for a in L.framings],
        "milnor_degree": None if d is None else order_str(d),
        "max_cabling_index": None if L.max_cabling_index is None else str(L.max_cabling_index),
        "h1_bordant_to_unlink": L.h1_bordant_to_unlink,
    }


# -- jobs ------------------------------------------------------------------------

def _init_worker(budget):
    set_budget(budget)


def _run_jobs(fn, args_list, jobs: int, budget: Budget):
    if jobs <= 1 or len(args_list) <= 1:
        saved = get_budget()
        set_budget(budget)
        try:
            return [fn(*a) for a in args_list]
        finally:
            set_budget(saved)
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(budget,)) as pool:
        return list(pool.map(fn, *zip(*args_list)))


def _bracket_job(spec: str, p: int) -> dict:
    L = load_link(spec)
    lv = PrimeLevel(p)
    try:
        direct = p_bracket_direct(L, lv)
        via = p_bracket_via_phi(L, lv)
    except BudgetExceeded as exc:
        return {"p": str(p), "skipped": f"budget: {exc}"}
    return {"p": str(p), "bracket": _element(direct), "direct": direct.to_json(),
            "via_phi": via.to_json(), "agree": direct == via}


def _invariant_job(spec: str, p: int, depth) -> dict:
    L = load_link(spec)
    try:
        rep = tau_p(L, PrimeLevel(p), depth=depth)
    except BudgetExceeded as exc:
        return {"p": str(p), "skipped": f"budget: {exc}"}
    out = rep.to_json()
    out["tau_normal_form"] = None if rep.tau.is_zero() else normal_form(rep.tau).to_json()
    return out


def _criterion_job(number: int, primes, budget) -> dict:
    r = run_criterion(number, primes, budget)
    out = r.to_json()
    out["summary"] = r.summary()
    return out


def sums_table(p: int) -> dict:
    lv = PrimeLevel(p)
    n = lv.n
    out = {"p": str(p), "n": str(n), "m": str(lv.m)}
    out["p_sums"] = []
    for c in range(n + 1):
        for a in range(p):
            o = p_order(p_sum(a, c, lv))
            r = 2 if a == 0 else 1
            out["p_sums"].append({"a": str(a), "c": str(c), "p_order": order_str(o),
                                  "bound": str(r * (n - c)), "bound_ok": o >= r * (n - c),
                                  "equals_r(n-c)": o == r * (n - c)})
    out["gauss_sums"] = [
        {"a": str(a), "value": gauss_sum(a, lv).to_json()["reduced"],
         "closed_form_agrees": gauss_sum(a, lv) == gauss_sum_closed_form(a, lv)}
        for a in range(1, p)]
    out["b"] = [{"a": str(a), "p_order": order_str(p_order(unknot_bracket_b(a, lv)))}
                for a in range(-3, 4)]
    out["b_o_closed_form_agrees"] = unknot_bracket_b(0, lv) == bo_closed_form(lv)
    out["s"] = [{"j": str(j), **_element(sum_s(j, lv))} for j in range(1, p)]
    out["t"] = [{"a": str(a), **_element(sum_t(a, lv))} for a in range(-1, p) if a]
    out["u"] = _element(sum_u(lv))
    out["v"] = _element(sum_v(lv))
    return out


# -- commands ----------------------------------------------------------------------

def cmd_catalog(args) -> tuple[object, int]:
    return {"links": [_link_meta(catalog(n)) for n in catalog_names()]}, EXIT_OK


def cmd_bracket(args):
    L = load_link(args.link)
    rows = _run_jobs(_bracket_job, [(args.link, p) for p in args.primes], args.jobs, args.budget)
    status = EXIT_OK if all(r.get("agree", True) for r in rows) else EXIT_FAIL
    return {"link": _link_meta(L), "results": rows}, status


def cmd_invariant(args):
    L = load_link(args.link)
    rows = _run_jobs(_invariant_job, [(args.link, p, args.depth) for p in args.primes],
                     args.jobs, args.budget)
    return {"link": _link_meta(L), "results": rows}, EXIT_OK


def cmd_sums(args):
    return {"tables": [sums_table(p) for p in args.primes]}, EXIT_OK


def cmd_verify(args):
    for name in catalog_names():
        catalog(name)
    numbers = args.criteria or sorted(CRITERIA)
    rows = _run_jobs(_criterion_job, [(i, args.primes, args.budget) for i in numbers],
                     args.jobs, args.budget)
    passed = all(r["pass"] for r in rows)
    for r in rows:
        print(r["summary"], file=sys.stderr)
    report = {"primes": [str(p) for p in args.primes], "pass": passed, "criteria": rows,
              "budget": {"max_crossings": str(args.budget.max_crossings),
                         "max_width": str(args.budget.max_width)}}
    return report, EXIT_OK if passed else EXIT_FAIL


COMMANDS = {"catalog": cmd_catalog, "bracket": cmd_bracket, "invariant": cmd_invariant,
            "sums": cmd_sums, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", "-p", default=None,
                        help="comma-separated odd primes (default 3,5,7)")
    common.add_argument("--max-crossings", type=positive, default=DEFAULT_BUDGET.max_crossings)
    common.add_argument("--max-width", type=positive, default=DEFAULT_BUDGET.max_width)
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--jobs", type=positive, default=1)

    parser = argparse.ArgumentParser(prog="qorders", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", parents=[common], help="list built-in links")
    for name, text in (("bracket", "p-bracket by both summation paths"),
                       ("invariant", "tau_p report for surgery on a framed link")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--link", required=True, help="catalog name or path to link JSON")
        if name == "invariant":
            sp.add_argument("--depth", type=int, default=None,
                            help="largest projection depth (default p-1)")
    sub.add_parser("sums", parents=[common], help="p-sum, Gauss sum and s/t/u/v tables")
    vp = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    vp.add_argument("--criteria", type=lambda s: [int(x) for x in s.split(",")],
                    help="comma-separated criterion numbers (default all)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.primes = parse_primes(args.prime) if args.prime else DEFAULT_PRIMES
        if getattr(args, "depth", None) is not None and args.depth < 0:
            raise UsageError("depth must be non-negative")
        if getattr(args, "criteria", None):
            bad = [i for i in args.criteria if i not in CRITERIA]
            if bad:
                raise UsageError(f"unknown criteria {bad}")
        args.budget = Budget(args.max_crossings, args.max_width)
        data, status = COMMANDS[args.command](args)
    except (UsageError, DiagramError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"qorders: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    text = canonical(data)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

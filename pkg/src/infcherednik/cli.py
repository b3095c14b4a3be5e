"""Command-line interface: ``ich <command> [flags]``.

Every run prints one JSON report
``{"command", "params", "result", "checks", "elapsed_ms"}`` and exits 0
when all checks pass, 1 when a check fails and 2 on usage errors.
"""

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction
from itertools import product

from .cherednik import CasimirError, Filtration, HbContext, min_admissible_prime, pbw_dimension_report
from .exprparse import ExprError, format_expr, parse_expr
from .invariants import cprime_top_symbol, dualize
from .modp import frobenius_central_elements, modp_casimirs, reduction_compatible
from .pbw import commutator
from .poisson import (eliminate_at_point, f_dets, gr_t, poisson_algebra, random_matrix,
                      random_vector, residuals, zero_locus_correspondence, point_values)
from .polyseries import SingularSystemError, scalar_to_str
from .serialize import to_json
from .verma import VermaModule, central_character, scalar_action_failures, singular_vectors

COMMANDS = ("nf", "bracket", "casimir", "verma", "poisson", "modp", "verify")
SUITES = ("pbw", "kostant", "duflo-scalar", "orbit", "modp", "all")
HARD_MAX_DEGREE = 12


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command, params):
        self.command = command
        self.params = params
        self.result = None
        self.checks = []

    def check(self, name, ok, detail=""):
        self.checks.append({"name": name, "pass": bool(ok), "detail": str(detail)})
        return ok

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=1)
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--b", default=None, help='comma-separated b_0,...,b_m with b_m = 1 (default "0,...,0,1")')
    common.add_argument("--char", type=int, default=0)
    common.add_argument("--seed", type=int, default=int(os.environ.get("ICH_SEED", "0")))
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--max-degree", type=int, default=6)
    common.add_argument("--text", action="store_true", help="plain-text output instead of JSON")
    common.add_argument("--no-timing", action="store_true", help="report all timings as 0")

    parser = argparse.ArgumentParser(prog="ich", description="Infinitesimal Cherednik algebras of gl_n")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p = sub.add_parser("bracket", parents=[common], help="commutator of two expressions")
    p.add_argument("expr")
    p.add_argument("expr2")
    p = sub.add_parser("casimir", parents=[common], help="central elements t_i")
    p.add_argument("--i", type=int, default=None)
    p = sub.add_parser("verma", parents=[common], help="central character and singular vectors")
    p.add_argument("--lambda", dest="lam", default=None, help="comma-separated weight")
    p = sub.add_parser("poisson", parents=[common], help="Poisson algebra A_m checks")
    p.add_argument("--check", choices=("jacobi", "central", "fdets"), default="jacobi")
    sub.add_parser("modp", parents=[common], help="restricted powers and mod-p Casimirs")
    p = sub.add_parser("verify", parents=[common], help="bundled verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    return parser


def _b_values(args):
    if args.b is None:
        return [0] * args.m + [1]
    try:
        return [Fraction(s.strip()) for s in args.b.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed --b: {exc}")


def _context(args):
    try:
        return HbContext(args.n, args.m, _b_values(args), args.char)
    except ValueError as exc:
        raise UsageError(str(exc))


def _params(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("text", "no_timing")}


def _elem(e):
    return {"expr": format_expr(e), "terms": to_json(e)}


def _parse(src, ctx, args):
    if args.max_degree > HARD_MAX_DEGREE:
        raise UsageError(f"--max-degree above {HARD_MAX_DEGREE} is refused")
    try:
        return parse_expr(src, ctx, args.max_degree)
    except (ExprError, IndexError) as exc:
        raise UsageError(str(exc))


# commands -----------------------------------------------------------------

def cmd_nf(args, rep):
    ctx = _context(args)
    a = _parse(args.expr, ctx, args)
    rep.result = {"normal_form": _elem(a)}
    rep.check("normal_form_idempotent", _parse(format_expr(a), ctx, args) == a)


def cmd_bracket(args, rep):
    ctx = _context(args)
    a, b = _parse(args.expr, ctx, args), _parse(args.expr2, ctx, args)
    c = commutator(a, b)
    rep.result = {"bracket": _elem(c)}
    rep.check("antisymmetry", commutator(b, a) == -c)


def _casimir_payload(ctx, i):
    res = ctx.casimir(i)
    return {"i": i, "t": _elem(res.t), "c": {"expr": format_expr(ctx.ug_to_hb(res.c)), "terms": to_json(res.c)},
            "metadata": res.metadata}


def cmd_casimir(args, rep):
    ctx = _context(args)
    indices = [args.i] if args.i else list(range(1, ctx.n + 1))
    for i in indices:
        if not 1 <= i <= ctx.n:
            raise UsageError(f"--i {i} out of range [1, {ctx.n}]")
    payload = []
    for i in indices:
        try:
            payload.append(_casimir_payload(ctx, i))
            rep.check(f"t_{i}_central", ctx.is_central(ctx.casimir(i).t))
        except CasimirError as exc:
            rep.check(f"t_{i}_solved", False, exc)
    rep.result = {"casimirs": payload}


def _weight(args, ctx, rng=None):
    if args.lam is None:
        return [0] * ctx.n
    try:
        lam = [Fraction(s.strip()) for s in args.lam.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed --lambda: {exc}")
    if len(lam) != ctx.n:
        raise UsageError(f"--lambda needs {ctx.n} entries")
    return lam


def cmd_verma(args, rep):
    ctx = _context(args)
    lam = _weight(args, ctx)
    depth = 4 if args.depth is None else args.depth
    module = VermaModule(ctx, lam)
    chis = central_character(ctx, module)
    sing = singular_vectors(ctx, module, depth)
    rep.result = {
        "lambda": [scalar_to_str(module.field(v)) for v in lam],
        "central_character": [scalar_to_str(c) for c in chis],
        "weight_space_dims": [module.weight_space_dim(k) for k in range(depth + 1)],
        "singular_vectors": [{"vector": to_json(v), "weight": [scalar_to_str(c) for c in wt], "depth": k}
                             for v, wt, k in sing],
    }
    bad = scalar_action_failures(module, chis, depth)
    rep.check("central_elements_act_by_scalars", not bad, f"depth <= {depth}; failures: {bad[:3]}")


def cmd_poisson(args, rep):
    P = poisson_algebra(args.n, args.m)
    if args.check == "jacobi":
        gens = [P.gen(v) for v in P.generators]
        bad = [(str(a), str(b), str(c)) for a, b, c in product(gens, repeat=3) if P.jacobiator(a, b, c)]
        rep.result = {"triples": len(gens) ** 3, "failures": bad}
        rep.check("jacobi_generator_triples", not bad)
    elif args.check == "central":
        ctx = _context(args)
        syms = []
        for i in range(1, ctx.n + 1):
            try:
                g = gr_t(ctx, i)
                syms.append(to_json(g))
                rep.check(f"gr_t_{i}_poisson_central", True)
            except ArithmeticError as exc:
                rep.check(f"gr_t_{i}_poisson_central", False, exc)
        rep.result = {"gr_t": syms}
    else:
        fx, fy = f_dets(args.n)
        rep.result = {"f_x": to_json(fx), "f_y": to_json(fy)}
        rep.check("f_x_variables", fx.kinds() <= {1, 2})
        rep.check("f_y_variables", fy.kinds() <= {1, 3})


def cmd_modp(args, rep):
    if not args.char:
        raise UsageError("modp requires --char p")
    ctx = _context(args)
    rep.result = suite_modp(ctx, args, rep)


# suites -------------------------------------------------------------------

def suite_pbw(ctx, args, rep):
    samples = 200 if args.samples is None else args.samples
    depth = 3 if args.depth is None else args.depth
    out = {}
    for d in range(depth + 1):
        r = pbw_dimension_report(ctx, d, samples=0)
        out[f"d={d}"] = r
        rep.check(f"pbw_count_d{d}", r["pass"], f"{r['count']} monomials, expected {r['expected']}")
    r = pbw_dimension_report(ctx, 5, samples=samples, seed=args.seed) if samples else None
    if r is not None:
        rep.check("confluence_words_len_le_5", r["mismatches"] == 0, f"{samples} words, {r['mismatches']} mismatches")
    return {"dimensions": out}


def suite_kostant(ctx, args, rep):
    out = []
    results = {}
    for i in range(1, ctx.n + 1):
        try:
            results[i] = ctx.casimir(i)
        except CasimirError as exc:
            rep.check(f"t_{i}_solved", False, exc)
    for i, res in results.items():
        s, s_alt = ctx.casimir_parts(i)
        rep.check(f"t_{i}_central", ctx.is_central(res.t))
        rep.check(f"t_{i}_two_expressions_agree", s == s_alt)
        rep.check(f"c_{i}_matches_cprime_up_to_sign", res.sign != 0, f"sign {res.sign}")
        sym_t = ctx.symbol(res.t, Filtration.GONLY)
        sym_c = ctx.symbol(res.c, Filtration.GONLY)
        rep.check(f"gr_t_{i}_equals_gr_c_{i}", sym_t == sym_c,
                  "exact equality" if sym_t == sym_c else
                  ("symbol(t) = -symbol(c), forced by t = s - c" if sym_t == -sym_c else "mismatch"))
        try:
            gr_t(ctx, i)
            rep.check(f"gr_t_{i}_poisson_central", True)
        except ArithmeticError as exc:
            rep.check(f"gr_t_{i}_poisson_central", False, exc)
        out.append({"i": i, "metadata": res.metadata})
    for i in results:
        for j in results:
            if i < j:
                rep.check(f"[t_{i},t_{j}]=0", commutator(results[i].t, results[j].t).is_zero())
    return {"casimirs": out}


def suite_duflo(ctx, args, rep):
    rng = random.Random(args.seed)
    depth = 3 if args.depth is None else args.depth
    n = 5 if args.samples is None else args.samples
    out = []
    for _ in range(n):
        lam = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(ctx.n)]
        module = VermaModule(ctx, lam)
        chis = central_character(ctx, module)
        bad = scalar_action_failures(module, chis, depth)
        label = ",".join(str(v) for v in lam)
        rep.check(f"scalar_action[{label}]", not bad, f"depth <= {depth}")
        if ctx.n == 1 and ctx.m == 1:
            b0 = ctx.b[0]
            l0 = ctx.field(lam[0])
            rep.check(f"chi_formula[{label}]", chis[0] == (l0 + 1) * (l0 + b0))
            rep.check(f"linkage[{label}]", central_character(ctx, [-l0 - 1 - b0])[0] == chis[0])
        out.append({"lambda": [str(v) for v in lam], "chi": [scalar_to_str(c) for c in chis]})
    return {"weights": out}


def suite_orbit(ctx, args, rep):
    samples = 100 if args.samples is None else args.samples
    corr = {}
    for n in (2, 3):
        r = zero_locus_correspondence(n, samples, args.seed)
        corr[f"n={n}"] = r
        rep.check(f"orbit_cyclicity_n{n}", r["passes"] == samples, f"{r['passes']}/{samples}")
    rng = random.Random(args.seed)
    done = 0
    bad = 0
    attempts = 0
    while done < 50 and attempts < 1000:
        attempts += 1
        A, eta = random_matrix(rng, ctx.n), random_vector(rng, ctx.n)
        try:
            xi = eliminate_at_point(ctx, A, eta=eta)
        except SingularSystemError:
            continue
        done += 1
        if any(residuals(ctx, A, xi, eta)):
            bad += 1
    rep.check("elimination_zero_residual", done == 50 and bad == 0, f"{done} solves, {bad} nonzero residuals")
    return {"correspondence": {k: {kk: vv for kk, vv in v.items() if kk != "failures"} for k, v in corr.items()},
            "eliminations": done}


def suite_modp(ctx, args, rep):
    b = _b_values(args)
    if not ctx.char:
        ctx = HbContext(ctx.n, ctx.m, b, min_admissible_prime(ctx.n, ctx.m))
    out = []
    for label, _, r in frobenius_central_elements(ctx):
        rep.check(f"central[{label}]", r.passed)
        out.append(r.to_json())
    try:
        for t, r in modp_casimirs(ctx):
            rep.check(f"central[{r.label} mod {ctx.char}]", r.passed)
            out.append(r.to_json())
        ctx0 = HbContext(ctx.n, ctx.m, b)
        for i, (central, equal) in enumerate(reduction_compatible(ctx0, ctx), start=1):
            rep.check(f"reduction_t_{i}", central and equal,
                      f"reduced t_{i} central: {central}, equals mod-p solver: {equal}")
    except CasimirError as exc:
        rep.check("modp_casimirs_solved", False, exc)
    return {"p": ctx.char, "reports": out}


SUITE_FUNCS = {"pbw": suite_pbw, "kostant": suite_kostant, "duflo-scalar": suite_duflo,
               "orbit": suite_orbit, "modp": suite_modp}


def cmd_verify(args, rep):
    ctx = _context(args)
    names = list(SUITE_FUNCS) if args.suite == "all" else [args.suite]
    rep.result = {name: SUITE_FUNCS[name](ctx, args, rep) for name in names}


HANDLERS = {"nf": cmd_nf, "bracket": cmd_bracket, "casimir": cmd_casimir, "verma": cmd_verma,
            "poisson": cmd_poisson, "modp": cmd_modp, "verify": cmd_verify}


def _zero_timings(obj):
    if isinstance(obj, dict):
        return {k: (0 if k == "elapsed_ms" else _zero_timings(v)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_zero_timings(v) for v in obj]
    return obj


def render_text(report):
    lines = [f"command: {report['command']}"]
    for c in report["checks"]:
        lines.append(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['name']}" + (f"  ({c['detail']})" if c["detail"] else ""))
    if report["result"] is not None:
        lines.append(json.dumps(report["result"], indent=1, default=str))
    lines.append(f"elapsed_ms: {report['elapsed_ms']}")
    return "\n".join(lines)


def run(argv=None, out=None):
    """Parse ``argv``, run the command, print the report; returns the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report(args.command, _params(args))
    start = time.perf_counter()
    code = None
    try:
        HANDLERS[args.command](args, rep)
    except UsageError as exc:
        rep.check("usage", False, exc)
        code = 2
    except (ValueError, ArithmeticError, CasimirError) as exc:
        rep.check("error", False, f"{type(exc).__name__}: {exc}")
    report = {"command": rep.command, "params": rep.params, "result": rep.result, "checks": rep.checks,
              "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
    if args.no_timing:
        report = _zero_timings(report)
    if args.text:
        print(render_text(report), file=out)
    else:
        print(json.dumps(report, indent=2, default=str), file=out)
    if code is None:
        code = 0 if rep.passed else 1
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line front end.

Subcommands: delta, glue, extend, verify, sweep. Exit codes: 0 success,
2 usage or domain error, 3 construction precondition failure, 4 a
verification check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd

from . import __version__
from .curves import (
    BinomialShape,
    Kind,
    MonomialCurve,
    affine_G,
    base_equations,
    binomial_rules,
    build_fstar,
    default_family,
    is_established,
    make_extension,
    parameterize,
    projective_F,
)
from .errors import ConditionFails, StciError
from .gluing import bad_extension_gluing, check_all_splits
from .mpoly import embed, parse_poly, to_text
from .numsg import as_gens, degree, minimal_representations
from .oracle import (
    EVIDENCE_LABEL,
    FiniteFieldConfig,
    check_eq1,
    contains_up_to_sign,
    default_primes,
    toric_binomials,
    vanishes_on,
    zero_set_compare,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(StciError):
    pass


# -- argument helpers ---------------------------------------------------------

def int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def int_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or A, got {text!r}")


def _ascending(vals, what):
    if any(a >= b for a, b in zip(vals, vals[1:])) or vals[0] <= 0:
        raise UsageError(f"{what} must be positive and strictly ascending: {','.join(map(str, vals))}")


# -- report pieces ------------------------------------------------------------

def gluing_verdicts(exponents) -> tuple[list[dict], dict]:
    report = check_all_splits(exponents)
    rows = []
    for d in report.decisions:
        rows.append({
            "t1": list(d.split.t1),
            "i0": d.i0,
            "glues": d.glues,
            "reason": d.reason.value if d.reason else None,
            "delta": d.delta,
            "witness": list(d.witness) if d.witness is not None else None,
            "slack": d.slack,
            "text": d.describe(),
        })
    first = report.first_gluing
    if first is not None:
        summary = f"GLUES at i0={first.i0}, witness d=({','.join(map(str, first.witness))})"
    else:
        summary = "NO GLUING (all splits fail)"
    return rows, {"glues": report.glues, "summary": summary}


def _zero_sets(equations, param, primes, exclude_line=None):
    out = []
    for q in primes:
        rep = zero_set_compare(equations, param, FiniteFieldConfig(q), exclude_line)
        out.append(rep.to_dict())
    return out


def analyze_extension(base, ell, m, shape=None, strict=False, primes=()):
    """Classify, build every equation, and run the oracle suite on one extension."""
    spec = make_extension(base, ell, m)
    n, nv = spec.n, spec.nvars
    job = {"base": list(spec.base.exponents), "ell": ell, "m": m,
           "exponents": list(spec.exponents), "shape": shape, "strict": strict}
    verdicts = [{"name": "kind", "value": spec.kind.value},
                {"name": "delta", "value": spec.delta},
                {"name": "representation", "value": list(spec.rep.coeffs)}]
    glue_rows, glue_summary = gluing_verdicts(spec.exponents)
    verdicts.append({"name": "gluing", "value": glue_summary["summary"], "glues": glue_summary["glues"],
                     "splits": glue_rows})

    equations = []  # (name, poly, param) triples
    proj = parameterize(spec)
    family = BinomialShape(spec.base.exponents, shape) if shape else default_family(spec.base.exponents)
    base_polys = []
    if family is not None:
        base_polys = [embed(f, nv) for f in base_equations(family)]
        verdicts.append({"name": "base_equations",
                         "value": "established" if is_established(family) else "unverified (user assertion)"})
    for i, f in enumerate(base_polys, start=1):
        equations.append((f"f{i}", f, proj))
    equations.append(("G", affine_G(spec), parameterize(spec, affine=True)))
    F = projective_F(spec)
    equations.append(("F", F, proj))

    oracle = {"vanishing": None, "eq1": None, "zero_set": [], "label": EVIDENCE_LABEL}
    cut = None  # equations expected to cut the curve, and the line to ignore
    if spec.kind is Kind.BAD:
        glued = bad_extension_gluing(spec)
        verdicts.append({"name": "bad_extension", "value": glued.decision.describe()})
        cut = (base_polys + [glued.F], None)
    else:
        rules = ()
        if any(spec.rep.coeffs[:-1]):
            if shape:
                rules = binomial_rules(spec.base.exponents, shape, nv)
            elif isinstance(family, BinomialShape):
                rules = binomial_rules(family.gens, family.form, nv)
            else:
                rules = None
        if rules is None:
            verdicts.append({"name": "fstar", "value": "not built (pass --shape xn or --shape chain)"})
            cut = (base_polys + [F], n)
        else:
            res = build_fstar(spec, rules, strict=strict)
            equations.append(("F*", res.fstar, proj))
            verdicts.append({
                "name": "fstar", "value": "built", "form": res.form, "p": res.p,
                "weights": list(res.weights), "gamma": res.gamma, "alpha": res.alpha, "beta": res.beta,
                "margin": res.margin, "sufficient_inequality": res.hypothesis_holds})
            oracle["eq1"] = check_eq1(spec, rules, res.fstar)
            cut = (base_polys + [res.fstar], None)

    oracle["vanishing"] = all(vanishes_on(f, par) for _, f, par in equations)
    if primes and cut is not None and base_polys:
        oracle["zero_set"] = _zero_sets(cut[0], proj, primes, cut[1])
    return {
        "job": job,
        "verdicts": verdicts,
        "equations": [{"name": name, "poly": to_text(f), "vanishes": vanishes_on(f, par)}
                      for name, f, par in equations],
        "oracle": oracle,
    }


def verification_failed(report) -> bool:
    o = report.get("oracle", {})
    if o.get("vanishing") is False or o.get("eq1") is False:
        return True
    if any(z["missing"] for z in o.get("zero_set", [])):
        return True
    return any(t.get("contained") is False for t in o.get("toric", {}).get("checks", []))


# -- rendering ----------------------------------------------------------------

def render_text(report: dict) -> str:
    lines = []
    job = report.get("job", {})
    if job:
        lines.append("job: " + ", ".join(f"{k}={v}" for k, v in job.items() if v not in (None, False)))
    for v in report.get("verdicts", []):
        extra = {k: val for k, val in v.items() if k not in ("name", "value", "splits")}
        tail = ("  " + " ".join(f"{k}={val}" for k, val in extra.items())) if extra else ""
        lines.append(f"{v['name']}: {v['value']}{tail}")
        for row in v.get("splits", []):
            lines.append(f"  {row['text']}")
    for e in report.get("equations", []):
        mark = "" if e.get("vanishes", True) else "   [DOES NOT VANISH]"
        lines.append(f"{e['name']} = {e['poly']}{mark}")
    o = report.get("oracle")
    if o:
        if o.get("vanishing") is not None:
            lines.append(f"vanishing on curve: {'pass' if o['vanishing'] else 'FAIL'}")
        if o.get("eq1") is not None:
            lines.append(f"F^p = x0^gamma * F* (mod f_i): {'pass' if o['eq1'] else 'FAIL'}")
        for t in o.get("toric", {}).get("checks", []):
            lines.append(f"toric binomial {t['poly']}: {'contained' if t['contained'] else 'NOT contained'}")
        if "toric" in o:
            lines.append(f"toric binomials up to degree {o['toric']['bound']}: {o['toric']['count']}")
        for z in o.get("zero_set", []):
            lines.append(f"zero set over F_{z['q']}: {len(z['extras'])} extra, {len(z['missing'])} missing "
                         f"({z['hypersurface_points']} zeros, {z['curve_points']} curve points)"
                         + (f", line x0..x{z['excluded_line'] - 1}=0 excluded" if z["excluded_line"] else ""))
        if o.get("zero_set"):
            lines.append(o["label"])
    return "\n".join(lines)


def emit(report: dict, as_json: bool, started: float):
    report["timing_ms"] = round((time.perf_counter() - started) * 1000, 3)
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))


# -- subcommands --------------------------------------------------------------

def cmd_delta(args) -> dict:
    gens = as_gens(args.gens)
    rep = degree(args.m, gens)
    report = {
        "job": {"gens": list(gens.gens), "m": args.m},
        "verdicts": [{"name": "delta", "value": rep.weight},
                     {"name": "representation", "value": list(rep.coeffs)}],
    }
    if args.all:
        reps = minimal_representations(args.m, gens, limit=args.limit)
        report["verdicts"].append({"name": "all_minimal", "value": [list(r.coeffs) for r in reps]})
    return report


def cmd_glue(args) -> dict:
    if len(args.curve) < 3:
        raise UsageError("need at least 3 exponents for a gluing question")
    _ascending(args.curve, "--curve")
    rows, summary = gluing_verdicts(args.curve)
    return {"job": {"curve": list(args.curve)},
            "verdicts": [{"name": "gluing", "value": summary["summary"], "glues": summary["glues"],
                          "splits": rows}]}


def _primes(args, exponents):
    if args.q:
        return list(args.q)
    return default_primes(exponents) if args.evidence else []


def cmd_extend(args) -> dict:
    _ascending(args.base, "--base")
    shape = None if args.shape == "none" else args.shape
    exps = tuple(args.ell * g for g in args.base) + (args.m,)
    return analyze_extension(args.base, args.ell, args.m, shape, args.strict, _primes(args, exps))


def cmd_verify(args) -> dict:
    if args.base:
        if args.ell is None or args.m is None:
            raise UsageError("--base needs --ell and --m")
        _ascending(args.base, "--base")
        shape = None if args.shape == "none" else args.shape
        exps = tuple(args.ell * g for g in args.base) + (args.m,)
        report = analyze_extension(args.base, args.ell, args.m, shape, args.strict, _primes(args, exps))
        polys = [parse_poly(e["poly"], len(exps) + 1) for e in report["equations"] if e["name"] != "G"]
    elif args.curve:
        _ascending(args.curve, "--curve")
        exps = args.curve
        if gcd(*exps) != 1:
            raise UsageError("--curve exponents must have gcd 1")
        param = parameterize(exps)
        polys = [parse_poly(t, len(exps) + 1) for t in args.eq]
        report = {
            "job": {"curve": list(exps)},
            "verdicts": [],
            "equations": [{"name": f"eq{i}", "poly": to_text(f), "vanishes": vanishes_on(f, param)}
                          for i, f in enumerate(polys, start=1)],
            "oracle": {"vanishing": all(vanishes_on(f, param) for f in polys), "eq1": None,
                       "zero_set": [], "label": EVIDENCE_LABEL},
        }
        primes = _primes(args, exps)
        if primes and polys:
            report["oracle"]["zero_set"] = _zero_sets(polys, param, primes, args.exclude_line)
    else:
        raise UsageError("verify needs --curve or --base/--ell/--m")
    if args.toric_bound is not None:
        pool = toric_binomials(exps, args.toric_bound)
        checks = [{"poly": to_text(f), "contained": contains_up_to_sign(pool, f)}
                  for f in polys if len(f) == 2 and f.total_degree() <= args.toric_bound]
        report["oracle"]["toric"] = {"bound": args.toric_bound, "count": len(pool), "checks": checks}
    return report


FAMILIES = ("ex45", "ex56", "rational-normal")


def _family_instances(args):
    if args.family == "ex45":
        for s in args.s or range(3, 11):
            yield {"s": s}, (3, 4, 6), 1, 6 * s + 7, "xn"
    elif args.family == "ex56":
        for ell in args.ell or range(1, 4):
            for s in args.s or range(2, 6):
                yield {"ell": ell, "s": s}, (1, 2, 4), ell, 4 * s, "chain"
    else:
        for n in args.n or range(2, 4):
            for ell in args.ell or range(1, 3):
                for s in args.s or range(1, 5):
                    yield {"n": n, "ell": ell, "s": s}, tuple(range(1, n + 1)), ell, s * n, None


def cmd_sweep(args) -> dict:
    instances, skipped = [], []
    for params, base, ell, m, shape in _family_instances(args):
        if gcd(ell, m) != 1:
            skipped.append({"params": params, "reason": f"gcd({ell},{m}) != 1"})
            continue
        exps = tuple(ell * g for g in base) + (m,)
        row = {"params": params}
        try:
            row.update(analyze_extension(base, ell, m, shape, args.strict, _primes(args, exps)))
            row["ok"] = not verification_failed(row)
        except StciError as exc:
            row.update({"error": type(exc).__name__, "message": str(exc), "ok": False})
        instances.append(row)
    return {
        "job": {"family": args.family},
        "instances": instances,
        "skipped": skipped,
        "summary": {"instances": len(instances), "ok": sum(r["ok"] for r in instances),
                    "glue": sum(1 for r in instances if _glues(r))},
    }


def _glues(row) -> bool:
    return any(v["name"] == "gluing" and v["glues"] for v in row.get("verdicts", []))


def render_sweep(report: dict) -> str:
    lines = [f"family {report['job']['family']}: {report['summary']['instances']} instances, "
             f"{report['summary']['ok']} verified, {report['summary']['glue']} obtainable by gluing"]
    for row in report["instances"]:
        p = " ".join(f"{k}={v}" for k, v in row["params"].items())
        if "error" in row:
            lines.append(f"  {p}: {row['error']}: {row['message']}")
            continue
        kind = next(v["value"] for v in row["verdicts"] if v["name"] == "kind")
        glue = "GLUES" if _glues(row) else "NoGlue"
        last = row["equations"][-1]
        lines.append(f"  {p}: C{tuple(row['job']['exponents'])} {kind} {glue} "
                     f"{'verified' if row['ok'] else 'FAILED'}; {last['name']} = {last['poly']}")
    for s in report["skipped"]:
        lines.append(f"  skipped {s['params']}: {s['reason']}")
    return "\n".join(lines)


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stci", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def evidence(p):
        p.add_argument("--q", type=int, action="append", help="field size for zero-set evidence (repeatable)")
        p.add_argument("--evidence", action="store_true", help="zero-set evidence over the default primes")

    p = sub.add_parser("delta", help="degree of m in a numerical semigroup")
    p.add_argument("--gens", type=int_list, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list every minimal representation")
    p.add_argument("--limit", type=int, default=1000)
    common(p)

    p = sub.add_parser("glue", help="gluing verdicts for every split of a curve's semigroup")
    p.add_argument("--curve", type=int_list, required=True)
    common(p)

    for name, helptext in (("extend", "build the equations of an extension"),
                           ("verify", "run the oracle suite")):
        p = sub.add_parser(name, help=helptext)
        if name == "extend":
            p.add_argument("--base", type=int_list, required=True)
            p.add_argument("--ell", type=int, required=True)
            p.add_argument("--m", type=int, required=True)
        else:
            p.add_argument("--curve", type=int_list)
            p.add_argument("--eq", action="append", default=[], help="polynomial in x0..xk (repeatable)")
            p.add_argument("--base", type=int_list)
            p.add_argument("--ell", type=int)
            p.add_argument("--m", type=int)
            p.add_argument("--toric-bound", type=int)
            p.add_argument("--exclude-line", type=int, help="ignore zeros with x0=...=x(K-1)=0")
        p.add_argument("--shape", choices=("xn", "chain", "none"), default="none")
        p.add_argument("--strict", action="store_true",
                       help="require the sufficient inequality before building F*")
        evidence(p)
        common(p)

    p = sub.add_parser("sweep", help="run a named family of extensions")
    p.add_argument("--family", choices=FAMILIES, required=True,
                   help="ex45: C(3,4,6,6s+7); ex56: C(l,2l,4l,4s); rational-normal: C(l,..,nl,sn)")
    p.add_argument("--s", type=int_range)
    p.add_argument("--ell", type=int_range)
    p.add_argument("--n", type=int_range)
    p.add_argument("--strict", action="store_true")
    evidence(p)
    common(p)
    return ap


COMMANDS = {"delta": cmd_delta, "glue": cmd_glue, "extend": cmd_extend, "verify": cmd_verify,
            "sweep": cmd_sweep}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except StciError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.command == "sweep":
        report["timing_ms"] = round((time.perf_counter() - started) * 1000, 3)
        print(json.dumps(report, indent=2) if args.json else render_sweep(report))
        return EXIT_VERIFY if report["summary"]["ok"] < report["summary"]["instances"] else EXIT_OK
    emit(report, args.json, started)
    return EXIT_VERIFY if verification_failed(report) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

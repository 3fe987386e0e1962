"""Command-line front end: ``mmibs <command> [problem.json] [options]``.

Problem files are JSON.  Either a tuple of monomial ideals::

    {"n": 2, "ideals": [{"monomials": [[1, 0]]}, {"monomials": ["x1*x2"]}],
     "options": {"box_max": "1", "max_param": "1", "samples": 5}}

or bare resolution numerics::

    {"resolution_data": {"rays": [[1, 1]], "e": [[1]], "k": [1]}}

Rationals are written as strings "p/q".  Results go to stdout as one JSON
document; exit status is 0 on success, 1 on bad input, 2 when the input lies
outside the family a command supports.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import bernstein, mmi, newton
from .algebra import (
    MonomialIdeal,
    as_rational,
    default_variable_names,
    format_rational,
    minimalize,
    parse_monomial,
    parse_polynomial,
    product_power,
)
from .errors import InvalidArgument, MMIBSError, UnsupportedInput
from .plot import emit_wall_plot


class ProblemError(InvalidArgument):
    pass


@dataclass(frozen=True)
class ProblemFile:
    n: int | None
    generators: tuple[tuple[tuple[int, ...], ...], ...] | None = None
    resolution: newton.ResolutionData | None = None
    options: dict = field(default_factory=dict, compare=True, hash=False)

    @property
    def is_resolution_mode(self) -> bool:
        return self.resolution is not None

    @property
    def ideals(self) -> tuple[MonomialIdeal, ...]:
        if self.generators is None:
            raise UnsupportedInput("this command needs monomial ideals, not bare resolution data")
        return tuple(minimalize(g, self.n) for g in self.generators)

    def resolution_data(self) -> newton.ResolutionData:
        return self.resolution if self.resolution is not None else newton.resolution_data(self.ideals)


OPTION_KEYS = {"box_max": "rational", "max_param": "rational", "samples": "int"}


def _int_list(value, where: str, allow_negative: bool = False) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ProblemError(f"{where}: expected a list of integers")
    if not allow_negative and any(x < 0 for x in value):
        raise ProblemError(f"{where}: negative exponent")
    return tuple(value)


def _rational(value, where: str) -> Fraction:
    try:
        return as_rational(value)
    except InvalidArgument as exc:
        raise ProblemError(f"{where}: {exc}") from None


def parse_problem(text: str) -> ProblemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ProblemError("top level: expected an object")
    unknown = set(doc) - {"n", "ideals", "resolution_data", "options"}
    if unknown:
        raise ProblemError(f"top level: unknown fields {sorted(unknown)}")
    if ("ideals" in doc) == ("resolution_data" in doc):
        raise ProblemError("top level: give exactly one of 'ideals' or 'resolution_data'")

    options = {}
    for key, value in (doc.get("options") or {}).items():
        if key not in OPTION_KEYS:
            raise ProblemError(f"options.{key}: unknown option")
        if OPTION_KEYS[key] == "int":
            if not isinstance(value, int) or value < 1:
                raise ProblemError(f"options.{key}: expected a positive integer")
            options[key] = value
        else:
            options[key] = _rational(value, f"options.{key}")

    n = doc.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 1):
        raise ProblemError("n: expected a positive integer")

    if "ideals" in doc:
        if n is None:
            raise ProblemError("n: required with 'ideals'")
        blocks = doc["ideals"]
        if not isinstance(blocks, list) or not blocks:
            raise ProblemError("ideals: expected a nonempty list")
        gens = []
        for i, block in enumerate(blocks):
            where = f"ideals[{i}]"
            if not isinstance(block, dict) or set(block) != {"monomials"}:
                raise ProblemError(f"{where}: expected {{'monomials': [...]}}")
            mons = block["monomials"]
            if not isinstance(mons, list) or not mons:
                raise ProblemError(f"{where}.monomials: expected a nonempty list")
            vecs = []
            for j, m in enumerate(mons):
                w = f"{where}.monomials[{j}]"
                if isinstance(m, str):
                    try:
                        vec = parse_monomial(m, n)
                    except InvalidArgument as exc:
                        raise ProblemError(f"{w}: {exc}") from None
                else:
                    vec = _int_list(m, w)
                if len(vec) != n:
                    raise ProblemError(f"{w}: dimension mismatch, expected {n} entries")
                vecs.append(vec)
            gens.append(tuple(vecs))
        return ProblemFile(n, tuple(gens), None, options)

    rd = doc["resolution_data"]
    if not isinstance(rd, dict):
        raise ProblemError("resolution_data: expected an object")
    unknown = set(rd) - {"rays", "e", "k", "affine_flags"}
    if unknown:
        raise ProblemError(f"resolution_data: unknown fields {sorted(unknown)}")
    for key in ("e", "k"):
        if key not in rd:
            raise ProblemError(f"resolution_data.{key}: missing")
    k = _int_list(rd["k"], "resolution_data.k", allow_negative=True)
    if not isinstance(rd["e"], list) or not rd["e"]:
        raise ProblemError("resolution_data.e: expected a nonempty list of rows")
    e = tuple(_int_list(row, f"resolution_data.e[{i}]") for i, row in enumerate(rd["e"]))
    for i, row in enumerate(e):
        if len(row) != len(k):
            raise ProblemError(f"resolution_data.e[{i}]: dimension mismatch, expected {len(k)} entries")
    rays = ()
    if "rays" in rd:
        if not isinstance(rd["rays"], list) or len(rd["rays"]) != len(k):
            raise ProblemError(f"resolution_data.rays: expected {len(k)} rays")
        rays = tuple(_int_list(r, f"resolution_data.rays[{j}]") for j, r in enumerate(rd["rays"]))
        dims = {len(r) for r in rays}
        if len(dims) != 1 or (n is not None and dims != {n}):
            raise ProblemError("resolution_data.rays: dimension mismatch")
        n = dims.pop()
    if "affine_flags" in rd:
        flags = rd["affine_flags"]
        if not isinstance(flags, list) or len(flags) != len(k) or not all(isinstance(f, bool) for f in flags):
            raise ProblemError(f"resolution_data.affine_flags: expected {len(k)} booleans")
        flags = tuple(flags)
    else:
        flags = (False,) * len(k)
    return ProblemFile(n, None, newton.ResolutionData(len(e), rays, e, k, flags), options)


def print_problem(problem: ProblemFile) -> str:
    doc: dict[str, Any] = {}
    if problem.n is not None:
        doc["n"] = problem.n
    if problem.generators is not None:
        doc["ideals"] = [{"monomials": [list(v) for v in g]} for g in problem.generators]
    else:
        rd = problem.resolution
        body: dict[str, Any] = {}
        if rd.rays:
            body["rays"] = [list(r) for r in rd.rays]
        body["e"] = [list(row) for row in rd.e]
        body["k"] = list(rd.k)
        body["affine_flags"] = list(rd.affine_flags)
        doc["resolution_data"] = body
    if problem.options:
        doc["options"] = {
            k: (format_rational(v) if isinstance(v, Fraction) else v) for k, v in problem.options.items()
        }
    return json.dumps(doc)


# -- JSON encoding of results --------------------------------------------------------


def _q(x) -> str:
    return format_rational(Fraction(x))


def _point(p) -> list[str]:
    return [_q(x) for x in p]


def _wall(w: mmi.Wall) -> dict:
    return {"coeffs": list(w.coeffs), "rhs": w.rhs}


def _ideal(I: MonomialIdeal) -> list[list[int]]:
    return [list(g) for g in I.generators]


def _halfspace(h: newton.HalfSpace) -> dict:
    return {"normal": list(h.normal), "rhs": _q(h.rhs)}


def _rd(rd: newton.ResolutionData) -> dict:
    return {
        "rays": [list(r) for r in rd.rays],
        "e": [list(row) for row in rd.e],
        "k": list(rd.k),
        "affine_flags": list(rd.affine_flags),
    }


def _product(b: bernstein.ProductOfLinearForms) -> dict:
    return {
        "scale": _q(b.scale),
        "factors": [{"coeffs": list(f.coeffs), "constant": f.constant} for f in b.factors],
        "text": str(b),
    }


# -- commands ------------------------------------------------------------------


def _opt(args, problem: ProblemFile, name: str, flag_value, default=None):
    if flag_value is not None:
        return flag_value
    if name in problem.options:
        return problem.options[name]
    if default is None:
        raise InvalidArgument(f"missing --{name.replace('_', '-')} (or options.{name})")
    return default


def _lambda(text: str | None, ell: int) -> tuple[Fraction, ...]:
    if text is None:
        raise InvalidArgument("missing --lambda")
    return mmi.as_lambda(text.split(","), ell)


def cmd_newton(problem: ProblemFile, args) -> dict:
    if problem.is_resolution_mode:
        return {"mode": "valuation", "resolution_data": _rd(problem.resolution)}
    polys = []
    for I in problem.ideals:
        P = newton.newton_polyhedron(I)
        polys.append({
            "vertices": [list(v) for v in P.vertices],
            "facets": [_halfspace(h) for h in P.facets],
            "coordinate_halfspaces": [_halfspace(h) for h in P.coordinate_halfspaces],
        })
    return {"polyhedra": polys, "resolution_data": _rd(problem.resolution_data())}


def cmd_mmi(problem: ProblemFile, args) -> dict:
    rd = problem.resolution_data()
    lam = _lambda(args.lam, rd.num_ideals)
    if problem.is_resolution_mode:
        return {
            "mode": "valuation",
            "note": "per-ray coefficients of ceil(K - sum lambda_i F_i); the ideal itself is not determined",
            "lambda": _point(lam),
            "values": list(mmi.valuation_profile(rd, lam)),
        }
    return {"generators": _ideal(mmi.mixed_multiplier_ideal(rd, lam))}


def cmd_walls(problem: ProblemFile, args) -> dict:
    rd = problem.resolution_data()
    box = _opt(args, problem, "box_max", args.box, Fraction(1))
    walls = mmi.candidate_walls(rd, box)
    if args.plot:
        emit_wall_plot(walls, args.plot, box, ell=rd.num_ideals)
    return {"walls": [_wall(w) for w in walls]}


def cmd_jump(problem: ProblemFile, args) -> dict:
    rd = problem.resolution_data()
    lam = _lambda(args.lam, rd.num_ideals)
    through = [_wall(w) for w in mmi.walls_through(rd, lam)]
    if problem.is_resolution_mode:
        direction = tuple(int(x > 0) for x in lam)
        eps = mmi.jump_epsilon(rd, lam, direction) if any(lam) else None
        jump = False
        if eps is not None:
            lower = tuple(x - eps * d for x, d in zip(lam, direction))
            jump = mmi.valuation_profile(rd, lower) != mmi.valuation_profile(rd, lam)
        return {"mode": "valuation", "lambda": _point(lam), "divisor_jump": jump, "walls_through": through}
    return {"lambda": _point(lam), "jumping_point": mmi.is_jumping_point(rd, lam), "walls_through": through}


def cmd_region(problem: ProblemFile, args) -> dict:
    if problem.is_resolution_mode:
        raise UnsupportedInput("region reports need monomial ideals")
    rd = problem.resolution_data()
    lam = _lambda(args.lam, rd.num_ideals)
    box = _opt(args, problem, "box_max", args.box, Fraction(1))
    rep = mmi.region_report(rd, lam, box)
    if args.plot:
        emit_wall_plot(mmi.candidate_walls(rd, box), args.plot, box, points=[lam], ell=rd.num_ideals)
    return {
        "base": _point(rep.base),
        "ideal": _ideal(rep.ideal_at_base),
        "walls_active": [_wall(w) for w in rep.walls_active],
        "constancy_sample": [_point(p) for p in rep.constancy_sample],
        "region_sample": [_point(p) for p in rep.region_sample],
        "outside_sample": [_point(p) for p in rep.outside_sample],
        "axis_degenerate": [_point(p) for p in rep.axis_degenerate],
    }


def _alpha(text: str | None) -> tuple[int, ...]:
    if text is None:
        raise InvalidArgument("missing --alpha")
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise InvalidArgument(f"--alpha expects comma-separated integers, got {text!r}") from None


def cmd_ray(problem: ProblemFile, args) -> dict:
    if problem.is_resolution_mode:
        raise UnsupportedInput("ray restriction needs monomial ideals")
    ideals = problem.ideals
    rd = problem.resolution_data()
    alpha = _alpha(args.alpha)
    max_param = _opt(args, problem, "max_param", args.max, Fraction(1))
    mus = mmi.ray_jumping_numbers(rd, ideals, alpha, max_param)
    if args.plot:
        box = max(max_param * a for a in alpha)
        emit_wall_plot(mmi.candidate_walls(rd, box), args.plot, box, alpha=alpha,
                       ray_points=[tuple(mu * a for a in alpha) for mu in mus], ell=rd.num_ideals)
    return {
        "alpha": list(alpha),
        "jumping_numbers": [_q(mu) for mu in mus],
        "product_ideal": _ideal(product_power(ideals, alpha)),
    }


def _candidate_fallback(problem: ProblemFile, reason: str) -> dict:
    walls = bernstein.candidate_zero_locus(problem.ideals)
    return {"status": "unsupported", "reason": reason, "candidate": True,
            "candidate_walls": [_wall(w) for w in walls]}


def cmd_bsideal(problem: ProblemFile, args):
    if problem.is_resolution_mode:
        raise UnsupportedInput("Bernstein-Sato ideals need monomial ideals")
    ideals = problem.ideals
    if not all(I.is_principal for I in ideals):
        return 2, _candidate_fallback(problem, "not a tuple of principal monomial ideals")
    res = bernstein.bs_ideal_principal_monomial(ideals)
    return {
        "family": "principal-monomial",
        "generator": _product(res.generator),
        "reduced": _product(res.reduced),
        "operator": {"ring": list(res.ring_vars), "orders": list(res.operator_orders)},
        "functional_equation": "verified",
        "unit_factor_inclusion": bernstein.inclusion_check_unit_factors(res.generator),
    }


def cmd_verify_main(problem: ProblemFile, args):
    if problem.is_resolution_mode:
        raise UnsupportedInput("theorem verification needs monomial ideals")
    ideals = problem.ideals
    if not all(I.is_principal for I in ideals):
        return 2, _candidate_fallback(problem, "not a tuple of principal monomial ideals")
    samples = _opt(args, problem, "samples", args.samples, 5)
    rep = bernstein.verify_theorem_main(ideals, samples)
    if args.plot:
        emit_wall_plot(rep.walls, args.plot, 1, points=rep.checked_points, ell=len(ideals))
    return {
        "status": rep.status,
        "checked_points": len(rep.checked_points),
        "walls": [_wall(w) for w in rep.walls],
        "points": [_point(p) for p in rep.checked_points],
        "violations": [_point(p) for p in rep.violations],
        "symbolic": [dict(_wall(w), vanishes=ok) for w, ok in rep.symbolic.items()],
        "reduced": _product(rep.reduced),
        "scope": rep.scope,
    }


def cmd_independence(problem: ProblemFile, args) -> dict:
    if problem.is_resolution_mode:
        raise UnsupportedInput("generator independence needs monomial ideals")
    if args.extra is None or args.certificate is None:
        raise InvalidArgument("independence needs --extra and --certificate")
    index = args.ideal - 1
    if not 0 <= index < len(problem.generators):
        raise InvalidArgument(f"--ideal {args.ideal} out of range")
    gens = problem.generators[index]
    xs = default_variable_names(problem.n)
    h = parse_polynomial(args.extra, xs)
    z = [parse_polynomial(c, xs) for c in args.certificate.split(",")]
    ok = bernstein.generator_independence_certificate(gens, h, z, xs)
    return {"ideal": args.ideal, "extra": str(h), "certificate": [str(c) for c in z], "substitution_matches": ok}


COMMANDS = {
    "newton": cmd_newton,
    "mmi": cmd_mmi,
    "walls": cmd_walls,
    "jump": cmd_jump,
    "region": cmd_region,
    "ray": cmd_ray,
    "bsideal": cmd_bsideal,
    "verify-main": cmd_verify_main,
    "independence": cmd_independence,
}


def _rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmibs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("problem", nargs="?", default="-", help="problem file (default: stdin)")
        p.add_argument("--lambda", dest="lam", help="comma-separated rationals, e.g. 1/2,1/3")
        p.add_argument("--box", type=_rational_arg)
        p.add_argument("--alpha")
        p.add_argument("--max", type=_rational_arg)
        p.add_argument("--samples", type=int)
        p.add_argument("--plot", help="write an SVG wall plot (two ideals only)")
        if name == "independence":
            p.add_argument("--ideal", type=int, default=1, help="which ideal gets the extra generator (1-based)")
            p.add_argument("--extra", help="the extra generator h, e.g. 'x1^2 + x1*x2'")
            p.add_argument("--certificate", help="comma-separated z_j with h = sum z_j f_j")
    return parser


def _emit(doc: dict, out) -> None:
    out.write(json.dumps(doc, separators=(",", ":")) + "\n")


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        if args.problem == "-":
            text = stdin.read()
        else:
            with open(args.problem, encoding="utf-8") as fh:
                text = fh.read()
        problem = parse_problem(text)
        result = COMMANDS[args.command](problem, args)
    except UnsupportedInput as exc:
        _emit({"error": {"type": "UnsupportedInput", "message": str(exc)}}, stdout)
        return 2
    except (MMIBSError, OSError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, stdout)
        return 1
    code = 0
    if isinstance(result, tuple):
        code, result = result
    _emit(result, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

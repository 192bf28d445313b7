"""Command-line front end.

Subcommands mirror the library: `dp4` (lines, Galois orbits, Picard rank),
`cubic` (minimality and local solvability), `quadpair` (isotropy search and
the odd-degree descent harness), `obstruct` (genus/parity/index calculus).
Inputs are JSON files with rationals as "p/q" strings; `--json` emits a
machine report whose bytes depend only on the input and flags.

Exit codes: 0 all verdicts consistent; 1 a mathematically required check
failed (a bug, never a property of the input); 2 malformed input;
3 a factorization or search budget was refused.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .cubic import DiagCubic, LocalSpec, ff_point_exists, prime_to_3_insoluble, \
    qp_insoluble, segre_criterion
from .dp4 import QuadricPencil, full_character_group, galois_orbits, \
    invariant_picard_rank, is_smooth, sixteen_lines, verify_anticanonical
from .errors import BudgetError, FactorizationError, InputError, VerificationError
from .exact import SignCharacter, rat_from_str
from .ffield import FFVector
from .obstructions import DegreeFormulaInstance, PicRankOneSurface, \
    adjunction_genus, euler_char_congruence, first_point_over, genus_gap_parity, \
    index_ff, parity_obstruction, rost_audit
from .quadform import DiagQF, amer_brumer_check, descent_suite, find_common_isotropic

KINDS = ("dp4-pencil", "diagonal-cubic", "quad-pair", "pic-rank-one")


def _load(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("input must be an object with a 'kind' field")
    if data["kind"] not in KINDS:
        raise InputError(f"unknown kind {data['kind']!r}; expected one of {KINDS}")
    return data


def _coefficients(data: dict, count: int | None = None) -> list[Fraction]:
    raw = data.get("coefficients")
    if not isinstance(raw, list):
        raise InputError("'coefficients' must be a list of rational strings")
    coeffs = [rat_from_str(str(c)) for c in raw]
    if count is not None and len(coeffs) != count:
        raise InputError(f"kind {data['kind']!r} needs {count} coefficients, "
                         f"got {len(coeffs)}")
    return coeffs


def _params(data: dict) -> dict:
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise InputError("'params' must be an object")
    return params


def _int_param(params: dict, key: str, default=None, override=None) -> int:
    if override is not None:
        return override
    if key not in params:
        if default is not None:
            return default
        raise InputError(f"missing parameter {key!r}")
    try:
        return int(params[key])
    except (TypeError, ValueError) as exc:
        raise InputError(f"parameter {key!r} must be an integer") from exc


def _ff_params(params: dict, args) -> tuple[int, int, int]:
    ff = params.get("ff", {})
    if not isinstance(ff, dict):
        raise InputError("'params.ff' must be an object")
    p = _int_param(ff, "p")
    f = _int_param(ff, "f", default=1)
    kmax = _int_param(ff, "kmax", default=3, override=args.kmax)
    return p, f, kmax


def _vector(w: FFVector | None):
    if w is None:
        return None
    return {"p": w.p, "f": w.f, "coords": w.coeff_lists()}


def _require(kind: str, data: dict, *allowed: str) -> None:
    if data["kind"] not in allowed:
        raise InputError(f"{kind} expects kind in {allowed}, got {data['kind']!r}")


# ---------------------------------------------------------------------------
# dp4

def cmd_dp4(args) -> tuple[dict, dict, bool]:
    data = _load(args.file)
    _require("dp4", data, "dp4-pencil")
    coeffs = _coefficients(data, 10)
    pencil = QuadricPencil(coeffs[:5], coeffs[5:])
    verdicts: dict = {"smooth": is_smooth(pencil)}
    witnesses: dict = {}
    if args.action != "lines" and not verdicts["smooth"]:
        raise InputError("pencil is not smooth; no line system to analyze")

    if args.action == "lines":
        S = sixteen_lines(pencil)
        verdicts.update(lines=16, distinct=True,
                        anticanonical=verify_anticanonical(S.gram),
                        generators=list(S.generators))
        witnesses.update(points=S.to_points(), gram=[list(r) for r in S.gram])
    elif args.action == "galois":
        S = sixteen_lines(pencil)
        orbits = galois_orbits(S, full_character_group(S))
        verdicts.update(orbit_count=len(orbits),
                        orbit_sizes=sorted(len(o) for o in orbits),
                        generators=list(S.generators))
        witnesses.update(orbits=[list(o) for o in orbits])
    elif args.action == "picard":
        S = sixteen_lines(pencil)
        verdicts.update(
            invariant_rank=invariant_picard_rank(S, full_character_group(S)),
            geometric_rank=invariant_picard_rank(S, [SignCharacter.identity()]))
    else:  # report
        S = sixteen_lines(pencil)
        chars = full_character_group(S)
        orbits = galois_orbits(S, chars)
        verdicts.update(
            lines=16,
            orbit_count=len(orbits),
            orbit_sizes=sorted(len(o) for o in orbits),
            invariant_rank=invariant_picard_rank(S, chars),
            geometric_rank=invariant_picard_rank(S, [SignCharacter.identity()]),
            anticanonical=verify_anticanonical(S.gram),
            generators=list(S.generators))
        witnesses.update(gram=[list(r) for r in S.gram])
    return verdicts, witnesses, True


# ---------------------------------------------------------------------------
# cubic

def cmd_cubic(args) -> tuple[dict, dict, bool]:
    data = _load(args.file)
    _require("cubic", data, "diagonal-cubic")
    params = _params(data)
    verdicts: dict = {}
    witnesses: dict = {}
    ok = True

    if args.action == "segre":
        cubic = DiagCubic(_coefficients(data, 4))
        verdicts["segre"] = segre_criterion(cubic)
    elif args.action in ("local", "extensions"):
        local = params.get("local", {})
        if not isinstance(local, dict):
            raise InputError("'params.local' must be an object")
        spec = LocalSpec(_int_param(local, "p"), _int_param(local, "a"),
                         _int_param(local, "fmax", default=10, override=args.fmax))
        if args.action == "local":
            v = qp_insoluble(spec, budget=args.budget)
            verdicts.update(criterion=v.criterion_holds, oracle=v.oracle_agrees)
            if v.witness is not None:
                witnesses["congruence_solution"] = list(v.witness)
            if v.criterion_holds and not v.oracle_agrees:
                ok = False  # the criterion proves the sweep must be empty
        else:
            insoluble = prime_to_3_insoluble(spec)
            criterion = qp_insoluble(spec, budget=args.budget).criterion_holds
            verdicts.update(criterion=criterion, fmax=spec.fmax,
                            insoluble_prime_to_3=insoluble)
            if criterion and not insoluble:
                ok = False  # non-cubes cannot become cubes in prime-to-3 degrees
    else:  # ffpoint
        cubic = DiagCubic(_coefficients(data, 4))
        p, f, _ = _ff_params(params, args)
        w = ff_point_exists(cubic, (p, f), budget=args.budget)
        verdicts["point_found"] = w is not None
        witnesses["point"] = _vector(w)
        if w is None:
            ok = False  # Chevalley-Warning guarantees a point
    return verdicts, witnesses, ok


# ---------------------------------------------------------------------------
# quadpair

def _quad_pair(data: dict) -> tuple[DiagQF, DiagQF]:
    coeffs = _coefficients(data)
    if len(coeffs) < 2 or len(coeffs) % 2:
        raise InputError("quad-pair needs an even number 2r of coefficients")
    r = len(coeffs) // 2
    return DiagQF(coeffs[:r]), DiagQF(coeffs[r:])


def cmd_quadpair(args) -> tuple[dict, dict, bool]:
    data = _load(args.file)
    _require("quadpair", data, "quad-pair")
    params = _params(data)
    verdicts: dict = {}
    witnesses: dict = {}
    ok = True

    if args.action == "search":
        Q1, Q2 = _quad_pair(data)
        p, f, _ = _ff_params(params, args)
        w = find_common_isotropic(Q1, Q2, (p, f), budget=args.budget)
        verdicts.update(found=w is not None, p=p, f=f)
        witnesses["vector"] = _vector(w)
    else:  # descent
        trials = params.get("trials")
        if trials is not None:
            p = _int_param(params.get("ff", {}), "p")
            kmax = _int_param(params.get("ff", {}), "kmax", default=3,
                              override=args.kmax)
            seed = _int_param(params, "seed", default=0, override=args.seed)
            reports = descent_suite(p=p, trials=int(trials), kmax=kmax,
                                    seed=seed, budget=args.budget)
            verdicts.update(trials=int(trials), p=p, kmax=kmax, seed=seed,
                            descent_consistent=all(r.descent_consistent
                                                   for r in reports))
        else:
            Q1, Q2 = _quad_pair(data)
            p, f, kmax = _ff_params(params, args)
            report = amer_brumer_check(Q1, Q2, (p, f), kmax, budget=args.budget)
            verdicts.update(
                p=p, f=f, kmax=kmax,
                exists={str(k): v for k, v in sorted(report.exists.items())},
                descent_consistent=report.descent_consistent)
            witnesses.update(vectors={str(k): _vector(w)
                                      for k, w in sorted(report.witnesses.items())})
            if not report.descent_consistent:
                ok = False
    return verdicts, witnesses, ok


# ---------------------------------------------------------------------------
# obstruct

def cmd_obstruct(args) -> tuple[dict, dict, bool]:
    data = _load(args.file)
    params = _params(data)
    verdicts: dict = {}
    witnesses: dict = {}

    if args.action in ("genus", "parity"):
        _require("obstruct", data, "pic-rank-one")
        coeffs = _coefficients(data, 2)
        surface = PicRankOneSurface(int(coeffs[0]), int(coeffs[1]))
        n = _int_param(params, "n")
        if args.action == "genus":
            verdicts.update(n=n, genus=adjunction_genus(surface, n))
        else:
            ell = _int_param(params, "ell", default=2)
            residue = parity_obstruction(surface, n, ell)
            verdicts.update(n=n, ell=ell, residue=residue, fires=residue == 0)
    elif args.action == "chi":
        _require("obstruct", data, "pic-rank-one")
        out = euler_char_congruence(_int_param(params, "chi_c"),
                                    _int_param(params, "r"),
                                    _int_param(params, "ell", default=2))
        verdicts.update(residue=out.residue, unit=out.unit)
        gap = params.get("genus_gap")
        if isinstance(gap, dict):
            g = genus_gap_parity(_int_param(gap, "p_a"), _int_param(gap, "p_g"))
            verdicts.update(delta=g.delta, delta_odd=g.odd)
    elif args.action == "rost":
        _require("obstruct", data, "pic-rank-one")
        rost = params.get("rost", {})
        if not isinstance(rost, dict):
            raise InputError("'params.rost' must be an object")
        inst = DegreeFormulaInstance(
            p=_int_param(rost, "p"), n_x=_int_param(rost, "n_x"),
            n_y=_int_param(rost, "n_y"), eta_y=_int_param(rost, "eta_y"),
            deg_q=_int_param(rost, "deg_q"), deg_r=_int_param(rost, "deg_r", default=0))
        out = rost_audit(inst)
        verdicts.update(eta_ypp=out.eta_ypp,
                        deg_r_constraint=out.deg_r_constraint,
                        contradiction=out.contradiction_with_brauer_injectivity)
    else:  # index
        _require("obstruct", data, "quad-pair", "diagonal-cubic")
        if data["kind"] == "quad-pair":
            equations = list(_quad_pair(data))
        else:
            equations = [DiagCubic(_coefficients(data, 4))]
        p, f, kmax = _ff_params(params, args)
        value = index_ff(equations, (p, f), kmax, budget=args.budget)
        verdicts.update(p=p, f=f, kmax=kmax, index=value,
                        upper_bound_established=value != 0)
        witnesses["point"] = _vector(first_point_over(equations, (p, f),
                                                      budget=args.budget))
    return verdicts, witnesses, True


# ---------------------------------------------------------------------------

COMMANDS = {
    "dp4": (cmd_dp4, ["lines", "galois", "picard", "report"]),
    "cubic": (cmd_cubic, ["segre", "local", "extensions", "ffpoint"]),
    "quadpair": (cmd_quadpair, ["search", "descent"]),
    "obstruct": (cmd_obstruct, ["genus", "parity", "chi", "rost", "index"]),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delpezzo",
        description="exact verification of del Pezzo surface arithmetic")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, actions) in COMMANDS.items():
        p = sub.add_parser(name)
        p.add_argument("action", choices=actions)
        p.add_argument("file", help="JSON input file")
        p.add_argument("--json", action="store_true", dest="as_json",
                       help="machine-readable report on stdout")
        p.add_argument("--budget", type=int, default=None,
                       help="candidate budget for exhaustive searches")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized harnesses")
        p.add_argument("--kmax", type=int, default=None,
                       help="extension-degree bound")
        p.add_argument("--fmax", type=int, default=None,
                       help="residue-degree bound")
    return parser


def _emit(args, verdicts: dict, witnesses: dict, elapsed: float) -> None:
    if args.as_json:
        report = {
            "command": [args.command, args.action, args.file],
            "verdicts": verdicts,
            "witnesses": witnesses,
        }
        sys.stdout.write(json.dumps(report, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        print(f"{args.command} {args.action} {args.file}")
        for key in sorted(verdicts):
            print(f"  {key}: {json.dumps(verdicts[key], sort_keys=True)}")
        for key in sorted(witnesses):
            if witnesses[key] is not None:
                print(f"  {key}: {json.dumps(witnesses[key], sort_keys=True)}")
        print(f"  elapsed: {elapsed:.3f}s")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler, _ = COMMANDS[args.command]
    start = time.monotonic()
    try:
        verdicts, witnesses, ok = handler(args)
    except (FactorizationError, BudgetError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    _emit(args, verdicts, witnesses, time.monotonic() - start)
    if not ok:
        print("verification failed: a theorem-backed check did not hold",
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``rexosc <subcommand> [flags]``.

Every subcommand writes a JSON document (or CSV for ``coherent``) to
stdout or ``--out``.  Exit status is 0 on success, 1 when a precondition
fails or a verification does not pass, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .algebra import DEFAULT_TRUNCATION, Poly, RationalFunction
from .coherent import (
    Grid,
    annihilator_eigen_residual,
    bound_state_coefficient,
    classical_checks,
    coefficient_defect,
    coherent_csv,
    generating_series,
    series_eigen_defect,
    series_pde_defect,
    tdse_residual,
)
from .combinatorics import (
    MayaDiagram,
    Partition,
    critical_degrees,
    d_lambda,
    krein_adler_regular,
    maya_from_index_set,
    multi_flip,
)
from .errors import DomainError, InconsistencyError
from .extension import (
    RationalExtension,
    check_eigenrelation,
    eigenfunction,
    normalized_pseudo_wronskian,
    potential,
    pseudo_wronskian,
    schur_form,
    sturm_root_count,
)
from .ladder import (
    annihilator_constant,
    annihilator_flips,
    check_composition_on_basis,
    check_intertwining,
    gamma_polynomial,
    intertwiner,
    ladder_coefficient,
    ladder_operator,
)


# -- argument helpers -----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _maya_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("Maya diagram (give --flips, or --partition with optional --sigma)")
    g.add_argument("--flips", type=_int_list, help="index set K, e.g. 2,3")
    g.add_argument("--partition", type=_int_list, help="partition parts, e.g. 2,2")
    g.add_argument("--sigma", type=int, default=0, help="index sigma (with --partition)")


def _maya(args) -> MayaDiagram:
    if args.flips is not None and args.partition is not None:
        raise DomainError("give either --flips or --partition, not both")
    if args.flips is not None:
        if len(set(args.flips)) != len(args.flips):
            raise DomainError("--flips contains repeated positions")
        return maya_from_index_set(args.flips)
    if args.partition is not None:
        return MayaDiagram(_partition(args.partition), args.sigma)
    return MayaDiagram.trivial()


def _partition(parts) -> Partition:
    try:
        return Partition.of(parts)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly(p: Poly) -> dict:
    return {"pretty": p.pretty(), "coefficients": p.to_json()}


def _maya_json(M: MayaDiagram) -> dict:
    return {
        "partition": M.partition.to_json(),
        "sigma": M.sigma,
        "index_set": sorted(M.index_set()),
        "diagram": M.diagram(),
    }


def _display_form(r: RationalFunction) -> tuple[Poly, Poly]:
    """Scale ``num/den`` so that the denominator has coprime integer coefficients."""
    content, prim = r.den.primitive()
    den = Poly(prim)
    return r.num * (1 / content), den


# -- subcommands ----------------------------------------------------------------


def cmd_partition(args) -> dict:
    lam = _partition(args.partition or [])
    return {
        "partition": lam.to_json(),
        "weight": lam.weight,
        "length": lam.length,
        "conjugate": lam.conjugate().to_json(),
        "hooklengths": lam.hooklengths(),
        "d_lambda": d_lambda(lam),
        "maya": _maya_json(MayaDiagram(lam, 0)),
    }


def cmd_maya(args) -> dict:
    M = _maya(args)
    out = {"maya": _maya_json(M), "regular": krein_adler_regular(M)}
    if args.apply:
        out["flipped"] = _maya_json(multi_flip(M, args.apply))
    return out


def cmd_degrees(args) -> dict:
    M = _maya(args)
    lam = M.partition
    qc = lam.first + lam.length
    q_max = args.qmax if args.qmax is not None else max(qc + 6, 1)
    degrees, qc = critical_degrees(lam, q_max)
    return {
        "partition": lam.to_json(),
        "q_max": q_max,
        "critical_degrees": sorted(degrees),
        "threshold": qc,
        "annihilator_flips": {
            str(q): sorted(annihilator_flips(M, q)) for q in sorted(degrees)
        },
    }


def cmd_extension(args) -> dict:
    return RationalExtension.of(_maya(args)).report()


def cmd_states(args) -> dict:
    M = _maya(args)
    ms = args.m if args.m is not None else list(range(M.lo - 1, M.hi + 3))
    rows = []
    for m in ms:
        psi = eigenfunction(M, m)
        num, den = _display_form(psi.rat)
        rows.append(
            {
                "m": m,
                "bound_state": m not in M,
                "gauss": psi.gauss,
                "eigenvalue": 2 * m + 1,
                "numerator": _poly(num),
                "denominator": _poly(den),
                "normalized_numerator": _poly(normalized_pseudo_wronskian(multi_flip(M, [m]))),
            }
        )
    return {
        "maya": _maya_json(M),
        "H_M_normalized": _poly(normalized_pseudo_wronskian(M)),
        "states": rows,
    }


def cmd_ladder(args) -> dict:
    M = _maya(args)
    if (args.n is None) == (args.K is None):
        raise DomainError("give exactly one of --n (ladder shift) or --K (flip set)")
    if args.n is not None:
        a = ladder_operator(M, args.n)
    else:
        a = intertwiner(M, args.K)
    out = {"intertwiner": a.to_json()}
    if args.n is not None:
        n = args.n
        if n > 0 and M.is_q_core(n):
            out["gamma"] = _poly(gamma_polynomial(M, n))
        ms = args.m if args.m is not None else [m for m in range(M.lo, M.hi + n + 3) if m not in M]
        out["coefficients"] = {str(m): _frac(ladder_coefficient(M, n, m)) for m in ms}
    return out


def cmd_series(args) -> dict:
    M = _maya(args)
    trunc = args.trunc
    gs = generating_series(M.partition, trunc)
    out = gs.to_json()
    out["sigma"] = M.sigma
    out["bound_state_coefficients"] = {
        str(m): _frac(bound_state_coefficient(M, m))
        for m in range(M.lo, trunc + M.sigma + 1)
        if m not in M
    }
    return out


def cmd_coherent(args):
    M = _maya(args)
    lam = M.partition
    grid = Grid(args.x_min, args.x_max, args.n_x, args.t_min, args.t_max, args.n_t)
    if args.format == "csv":
        return coherent_csv(lam, args.alpha, grid)
    rng = np.random.default_rng(args.seed)
    samples = np.column_stack(
        [rng.uniform(args.x_min, args.x_max, args.samples), rng.uniform(args.t_min, args.t_max, args.samples)]
    )
    qc = max(lam.first + lam.length, 1)
    eig = {
        str(q): annihilator_eigen_residual(lam, q, args.alpha, samples)
        for q in (qc, qc + 1, qc + 2)
        if MayaDiagram(lam, 0).is_q_core(q)
    }
    return {
        "partition": lam.to_json(),
        "alpha": [args.alpha.real, args.alpha.imag],
        "grid": grid.__dict__,
        "tdse_residual": tdse_residual(lam, args.alpha, grid),
        "eigen_residuals": eig,
    }


# -- verify ---------------------------------------------------------------------


SUITES = (
    "eigen",
    "intertwining",
    "composition",
    "gamma",
    "translation",
    "schur",
    "series",
    "sturm",
)


def _suite_eigen(M, rng, trunc):
    lam = M.partition
    ms = range(M.sigma - lam.length - 2, M.sigma + lam.first + 5)
    return [(f"T_M psi_m = (2m+1) psi_m, m={m}", check_eigenrelation(M, m)) for m in ms]


def _small_sets(rng, lo, hi, size_max, count):
    out = []
    for _ in range(count):
        size = rng.randint(1, size_max)
        out.append(sorted(rng.sample(range(lo, hi + 1), size)))
    return out


def _suite_intertwining(M, rng, trunc):
    ms = range(M.lo - 2, M.hi + 4)
    return [
        (f"A T_M = T_f(M) A, K={K}", check_intertwining(M, K, ms))
        for K in _small_sets(rng, M.lo - 1, M.hi + 2, 3, 5)
    ]


def _suite_composition(M, rng, trunc):
    ms = range(M.lo - 2, M.hi + 4)
    out = []
    for _ in range(5):
        K1, K2 = _small_sets(rng, M.lo - 1, M.hi + 2, 2, 2)
        out.append((f"composition K1={K1} K2={K2}", check_composition_on_basis(M, K1, K2, ms)))
    return out


def _suite_gamma(M, rng, trunc):
    lam = M.partition
    qc = lam.first + lam.length
    out = []
    for q in range(1, qc + 4):
        if not M.is_q_core(q):
            continue
        ok = True
        for m in range(M.lo - 2, M.hi + q + 3):
            if m in M:
                continue
            c = annihilator_constant(M, q, m)
            if c is not None and c != 2 ** q:
                ok = False
        out.append((f"L^({q}) psi_m = 2^{q} gamma(m) psi_(m-{q})", ok))
    return out


def _suite_translation(M, rng, trunc):
    out = []
    for n in range(-3, 4):
        N = M + n
        ok = normalized_pseudo_wronskian(N) == normalized_pseudo_wronskian(M)
        ok = ok and potential(N) == potential(M) + RationalFunction(Poly([2 * n]))
        ms = range(M.lo - 1, M.hi + 2)
        ok = ok and all(eigenfunction(N, m + n) == eigenfunction(M, m) for m in ms)
        ok = ok and intertwiner(N, [k + n for k in (M.lo, M.hi)]).operator == intertwiner(
            M, [M.lo, M.hi]
        ).operator
        out.append((f"translation by {n}", ok))
    return out


def _suite_schur(M, rng, trunc):
    return [("Ĥ_M = 2^N N!/d S(x,-1/4,0,...)", normalized_pseudo_wronskian(M) == schur_form(M))]


def _suite_series(M, rng, trunc):
    lam = M.partition
    trunc = max(trunc, lam.first + lam.length)
    qc = max(lam.first + lam.length, 1)
    out = [
        ("T_M Psi = (2 z d/dz + 1 + 2 sigma) Psi", not series_pde_defect(M, trunc)),
        ("series coefficients = bound-state coefficients * psi_m", not coefficient_defect(M, trunc)),
    ]
    for q in (qc, qc + 1, qc + 2):
        if M.is_q_core(q):
            out.append((f"L^({q}) Psi = z^{q} Psi", not series_eigen_defect(M, q, trunc)))
    out.extend((f"classical {k}", v) for k, v in classical_checks(trunc).items())
    return out


def _suite_sturm(M, rng, trunc):
    h = pseudo_wronskian(M)
    r = 100
    roots = sturm_root_count(h, -r, r)
    regular = krein_adler_regular(M)
    return [(f"regular={regular} and H_M has {roots} real roots", regular == (roots == 0))]


_SUITE_FUNCS = {
    "eigen": _suite_eigen,
    "intertwining": _suite_intertwining,
    "composition": _suite_composition,
    "gamma": _suite_gamma,
    "translation": _suite_translation,
    "schur": _suite_schur,
    "series": _suite_series,
    "sturm": _suite_sturm,
}


def cmd_verify(args) -> tuple[dict, bool]:
    M = _maya(args)
    if args.all or not args.suite:
        suites = list(SUITES)
    else:
        suites = args.suite
    rng = random.Random(args.seed)
    checks = []
    for name in suites:
        for label, ok in _SUITE_FUNCS[name](M, rng, args.trunc):
            checks.append({"suite": name, "check": label, "passed": bool(ok)})
    passed = all(c["passed"] for c in checks)
    return {
        "maya": _maya_json(M),
        "suites": suites,
        "checks": checks,
        "passed": passed,
        "summary": {"total": len(checks), "failed": sum(not c["passed"] for c in checks)},
    }, passed


# -- parser and entry point -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the result to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION, help="series truncation order")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(
        prog="rexosc",
        description="Rational extensions of the harmonic oscillator: exact construction and verification.",
    )
    parser.add_argument("--version", action="version", version=f"rexosc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", parents=[common], help="hooklengths and d_lambda")
    p.add_argument("--partition", type=_int_list, required=True)

    p = sub.add_parser("maya", parents=[common], help="canonical form and flips")
    _maya_args(p)
    p.add_argument("--apply", type=_int_list, help="extra flips to apply")

    p = sub.add_parser("degrees", parents=[common], help="critical degrees and threshold")
    _maya_args(p)
    p.add_argument("--qmax", type=int)

    p = sub.add_parser("extension", parents=[common], help="H_M, Ĥ_M, U_M and regularity")
    _maya_args(p)

    p = sub.add_parser("states", parents=[common], help="table of eigenfunctions")
    _maya_args(p)
    p.add_argument("--m", type=_int_list, help="state labels (default: a window around M)")

    p = sub.add_parser("ladder", parents=[common], help="intertwiners and ladder operators")
    _maya_args(p)
    p.add_argument("--n", type=int, help="ladder shift n")
    p.add_argument("--K", type=_int_list, help="flip set of an intertwiner")
    p.add_argument("--m", type=_int_list, help="labels for ladder coefficients")

    p = sub.add_parser("series", parents=[common], help="generating-function prefactor and coefficients")
    _maya_args(p)

    p = sub.add_parser("coherent", parents=[common], help="coherent-state table or residual report")
    _maya_args(p)
    p.add_argument("--alpha", type=_complex, default=complex(1))
    p.add_argument("--x-min", type=float, default=-5.0)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--n-x", type=int, default=201)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--n-t", type=int, default=201)
    p.add_argument("--samples", type=int, default=100)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    _maya_args(p)
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--suite", action="append", choices=SUITES)
    return parser


_COMMANDS = {
    "partition": cmd_partition,
    "maya": cmd_maya,
    "degrees": cmd_degrees,
    "extension": cmd_extension,
    "states": cmd_states,
    "ladder": cmd_ladder,
    "series": cmd_series,
    "coherent": cmd_coherent,
    "verify": cmd_verify,
}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "coherent":
        parser.error("--format csv is only available for the coherent subcommand")
    try:
        result = _COMMANDS[args.command](args)
    except (DomainError, InconsistencyError) as exc:
        print(f"rexosc {args.command}: {exc}", file=sys.stderr)
        return 1
    ok = True
    if isinstance(result, tuple):
        result, ok = result
    if isinstance(result, str):
        _emit(result, args.out)
    else:
        doc = {"tool": "rexosc", "version": __version__, "command": args.command, "data": result}
        _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance suite: one check per criterion, each reporting a PASS/FAIL line.

The lines are printed at the end of a pytest run (see ``conftest.py``) and
also when this file is executed directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import factorial, pi, sqrt
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rexosc.algebra import Poly, RationalFunction  # noqa: E402
from rexosc.coherent import (  # noqa: E402
    annihilator_eigen_residual,
    canonical_coherent,
    classical_checks,
    coherent_eval,
    prefactor,
    series_eigen_defect,
    series_pde_defect,
    tdse_residual,
)
from rexosc.combinatorics import (  # noqa: E402
    EMPTY,
    MayaDiagram,
    Partition,
    critical_degrees,
    d_lambda,
    hook_product,
    hook_product_from_maya,
    maya_from_index_set,
    partitions_up_to,
)
from rexosc.extension import check_eigenrelation, eigenfunction, normalized_pseudo_wronskian, potential, schur_form  # noqa: E402
from rexosc.families import hermite, hermite_bell, hermite_rodrigues, vertex_compose  # noqa: E402
from rexosc.ladder import (  # noqa: E402
    annihilator_flips,
    check_composition_on_basis,
    check_intertwining,
    gamma_polynomial,
    ladder_coefficient,
)
from test_combinatorics import count_tableaux  # noqa: E402

RESULTS: dict[int, str] = {}

TITLES = {
    1: "worked example K={2,3}",
    2: "generating-function prefactor for (2,2)",
    3: "eigen-relation suite",
    4: "intertwining and composition",
    5: "annihilator action",
    6: "Schur correspondence",
    7: "combinatorial identities",
    8: "series identities",
    9: "numeric residuals",
    10: "Hermite family",
}

D4 = Poly([3, 0, 0, 0, 4])  # 4x^4 + 3


def criterion_1():
    M = maya_from_index_set({2, 3})
    facts = {}
    facts["partition"] = M.partition.parts == (2, 2)
    facts["sigma"] = M.sigma == 2
    degrees, qc = critical_degrees(M.partition, 10)
    facts["q_c"] = qc == 4
    facts["degrees"] = degrees == frozenset(range(4, 11))
    x2 = Poly([0, 0, 1])
    u = RationalFunction(Poly([4, 0, 1])) + RationalFunction(x2 * 32, D4) - RationalFunction(x2 * 384, D4 * D4)
    facts["potential"] = potential(M) == u
    sets = [annihilator_flips(M, q) for q in (4, 5, 6, 7)]
    facts["annihilator sets"] = sets == [{0, 1, 6, 7}, {0, 1, 4, 7, 8}, {0, 1, 4, 5, 8, 9}, {0, 1, 4, 5, 6, 9, 10}]
    table = {
        0: Poly([Fraction(1, 2), 0, 1]),
        1: Poly([0, 3, 0, 2]),
        4: Poly([-18, 0, 36, 0, 24, 0, 16]),
        5: Poly([0, -60, 0, 40, 0, 16, 0, 32]),
        6: Poly([60, 0, -240, 0, 0, 0, -64, 0, 64]),
    }
    constants = {}
    for m, h in table.items():
        psi = eigenfunction(M, m)
        numerator = psi.rat * RationalFunction(D4)
        ratio = None
        if psi.gauss == -1 and numerator.is_polynomial() and numerator.num:
            c = numerator.num.lc / h.lc
            ratio = c if numerator.num == h * c else None
        constants[m] = ratio
    facts["table numerators"] = all(c is not None for c in constants.values())
    failed = [k for k, v in facts.items() if not v]
    shown = ", ".join(f"m={m}:{c}" for m, c in constants.items())
    return not failed, f"table constants {shown}" + (f"; failed {failed}" if failed else "")


def criterion_2():
    pre = prefactor(Partition((2, 2)))
    expected = {
        0: RationalFunction(Poly([1])),
        -1: RationalFunction(Poly([0, 0, 0, -16]), D4),
        -2: RationalFunction(Poly([12, 0, 24]), D4),
    }
    return pre.terms == expected, "1 - 16x^3/(4x^4+3) z^-1 + 12(2x^2+1)/(4x^4+3) z^-2"


def criterion_3():
    count, bad = 0, []
    for size in range(4):
        for K in combinations(range(-4, 7), size):
            M = maya_from_index_set(K)
            lam = M.partition
            for m in range(M.sigma - lam.length - 2, M.sigma + lam.first + 5):
                count += 1
                if not check_eigenrelation(M, m):
                    bad.append((K, m))
    return not bad, f"{count} eigen-relations, {len(bad)} failed"


def criterion_4():
    rng = random.Random(2024)
    bad = 0
    for _ in range(50):
        K0 = rng.sample(range(-3, 6), rng.randint(0, 2))
        M = maya_from_index_set(K0)
        K1 = rng.sample(range(M.lo - 1, M.hi + 3), rng.randint(1, 2))
        K2 = rng.sample(range(M.lo - 1, M.hi + 3), rng.randint(1, 2))
        ms = range(M.lo - 2, M.hi + 4)
        if not (check_intertwining(M, K1, ms) and check_composition_on_basis(M, K1, K2, ms)):
            bad += 1
    return bad == 0, f"50 random cases, {bad} failed"


def criterion_5():
    count, bad = 0, []
    for lam in partitions_up_to(6):
        M = MayaDiagram(lam, 0)
        qc = lam.first + lam.length
        degrees, _ = critical_degrees(lam, qc + 3)
        for q in sorted(degrees):
            g = gamma_polynomial(M, q)
            for m in range(M.lo - 2, M.hi + q + 2):
                if m in M:
                    continue
                count += 1
                if ladder_coefficient(M, q, m) != 2 ** q * g(m):
                    bad.append((lam.parts, q, m))
    return not bad, f"constant 2^q confirmed in {count} checks, {len(bad)} failed"


def criterion_6():
    bad = [lam for lam in partitions_up_to(8) if normalized_pseudo_wronskian(MayaDiagram(lam, 0)) != schur_form(lam)]
    example = schur_form(Partition((2, 2))) == Poly([Fraction(1, 16), 0, 0, 0, Fraction(1, 12)]) * 192 == Poly(
        [12, 0, 0, 0, 16]
    )
    return not bad and example, f"{sum(1 for _ in partitions_up_to(8))} partitions, {len(bad)} failed; (2,2) -> 16x^4+12"


def criterion_7():
    hooks = all(hook_product_from_maya(lam) == hook_product(lam) for lam in partitions_up_to(6))
    syt = all(d_lambda(lam) == count_tableaux(lam.parts) for lam in partitions_up_to(10))
    vertex_bad = 0
    for lam in partitions_up_to(6):
        for m in range(-6, 9):
            for n in range(-6, 9):
                a = vertex_compose([m, n], lam)
                b = vertex_compose([n - 1, m + 1], lam)
                cancels = (a.sign == 0 and b.sign == 0) or (
                    a.sign != 0 and b.sign != 0 and a.partition == b.partition and a.sign == -b.sign
                )
                vertex_bad += not cancels
    ok = hooks and syt and vertex_bad == 0
    return ok, f"hook/Maya {hooks}, SYT {syt}, vertex relation failures {vertex_bad}"


def criterion_8():
    trunc = 12
    bad, literal_holds = [], 0
    lams = list(partitions_up_to(6))
    for lam in lams:
        M = MayaDiagram(lam, 0)
        if series_pde_defect(M, trunc):
            bad.append((lam.parts, "pde"))
        if not series_pde_defect(M, trunc, factor=1):
            literal_holds += 1
        qc = max(lam.first + lam.length, 1)
        for q in (qc, qc + 1, qc + 2):
            if series_eigen_defect(M, q, trunc):
                bad.append((lam.parts, q))
    classical = all(classical_checks(trunc).values())
    ok = not bad and classical and literal_holds == 0
    return ok, (
        f"2z d/dz form and z^q eigenrelation hold through z^{trunc}; "
        f"literal z d/dz form fails for {len(lams) - literal_holds} of {len(lams)} partitions"
    )


def criterion_9():
    tdse_empty = tdse_residual(EMPTY, 1)
    tdse_22 = tdse_residual(Partition((2, 2)), 1)
    rng = np.random.default_rng(9)
    samples = np.column_stack([rng.uniform(-4, 4, 100), rng.uniform(0, 2 * pi, 100)])
    eig = annihilator_eigen_residual(Partition((2, 2)), 4, 1, samples)
    x = rng.uniform(-4, 4, 1000)
    t = rng.uniform(0, 2 * pi, 1000)
    alpha = rng.uniform(-2, 2, 1000) + 1j * rng.uniform(-2, 2, 1000)
    canon = float(np.max(np.abs(coherent_eval(EMPTY, alpha, x, t) - canonical_coherent(x, t, alpha))))
    ok = tdse_empty < 1e-6 and tdse_22 < 1e-6 and eig < 1e-8 and canon < 1e-12
    return ok, f"tdse {tdse_empty:.2e} / {tdse_22:.2e}, eigen {eig:.2e}, canonical {canon:.2e}"


def criterion_10():
    routes = all(
        hermite_rodrigues(n, c) == hermite(n, c) == hermite_bell(n, c) for n in range(31) for c in (False, True)
    )
    nodes, weights = np.polynomial.hermite.hermgauss(40)
    worst = 0.0
    for m in range(11):
        for n in range(11):
            value = float(np.sum(weights * hermite(m)(nodes) * hermite(n)(nodes)))
            norm = sqrt(pi) * 2 ** max(m, n) * factorial(max(m, n))
            expected = norm if m == n else 0.0
            worst = max(worst, abs(value - expected) / norm)
    return routes and worst < 1e-10, f"routes agree {routes}, worst relative quadrature error {worst:.1e}"


CHECKS = {
    1: (criterion_1, 5.0),
    2: (criterion_2, None),
    3: (criterion_3, 60.0),
    4: (criterion_4, None),
    5: (criterion_5, None),
    6: (criterion_6, None),
    7: (criterion_7, None),
    8: (criterion_8, None),
    9: (criterion_9, 30.0),
    10: (criterion_10, None),
}


def run_criterion(n: int) -> bool:
    fn, limit = CHECKS[n]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash counts as a failure of that criterion
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    timing = f"{elapsed:.1f}s"
    if limit is not None:
        within = elapsed < limit
        ok = ok and within
        timing += f" (limit {limit:.0f}s{'' if within else ', exceeded'})"
    RESULTS[n] = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {TITLES[n]}: {detail} [{timing}]"
    print(RESULTS[n])
    return ok


@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n):
    assert run_criterion(n), RESULTS[n]


if __name__ == "__main__":
    outcomes = [run_criterion(n) for n in sorted(CHECKS)]
    sys.exit(0 if all(outcomes) else 1)

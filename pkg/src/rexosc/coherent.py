"""Generating functions of bound states and the associated coherent states.

The generating function factors as ``Psi = P(x, z) * Psi_0(x, z)`` where
``P`` is a Laurent polynomial in ``z^-1`` with rational coefficients and
``Psi_0 = exp(-x^2/2 + x z - z^2/4)``.  Exact work uses the Hermite
expansion of ``Psi_0``; numerical work uses the closed form, with
x-derivatives obtained symbolically from ``D(E B) = E (B' + (z - x) B)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

import numpy as np

from .algebra import DEFAULT_TRUNCATION, DiffOperator, LaurentSeries, Poly, QuasiRational, RationalFunction
from .combinatorics import MayaDiagram, Partition, as_maya
from .errors import DomainError
from .extension import eigenfunction, hamiltonian
from .families import hermite, schur_hermite, schur_specialized
from .ladder import ladder_operator

_X = Poly([0, 1])


def _as_partition(lam) -> Partition:
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, MayaDiagram):
        return lam.partition
    return Partition.of(lam)


@lru_cache(maxsize=256)
def prefactor(lam: Partition) -> LaurentSeries:
    """``S^(lam)(x - 1/z, -1/4 - 1/(2z^2), -1/(3z^3), ...) / S^(lam)(x, -1/4, 0, ...)``.

    Returned as an exact Laurent polynomial in ``z`` with rational-function
    coefficients.
    """
    lam = _as_partition(lam)
    n = max(lam.weight, 1)
    one = LaurentSeries.exact({0: Poly([1])})
    subst = {
        1: LaurentSeries.exact({0: _X, -1: Poly([-1])}),
        2: LaurentSeries.exact({0: Poly([Fraction(-1, 4)]), -2: Poly([Fraction(-1, 2)])}),
    }
    for j in range(3, n + 1):
        subst[j] = LaurentSeries.exact({-j: Poly([Fraction(-1, j)])})
    numerator = schur_specialized(lam, subst, one)
    base = schur_hermite(lam)
    return LaurentSeries.exact({k: RationalFunction(c, base) for k, c in numerator.terms.items()})


def ground_series(trunc: int) -> LaurentSeries:
    """``Psi_0 = sum_n e^{-x^2/2} H_n z^n / (2^n n!)`` through ``z^trunc``."""
    return LaurentSeries(
        {
            n: QuasiRational.poly(hermite(n) / (2 ** n * factorial(n)), -1)
            for n in range(max(trunc, -1) + 1)
        },
        trunc=trunc,
    )


@dataclass(frozen=True)
class GeneratingSeries:
    """``Psi^(lam)`` truncated after ``z^trunc``."""

    partition: Partition
    trunc: int
    prefactor: LaurentSeries
    series: LaurentSeries

    @property
    def low(self) -> int | None:
        return self.series.low

    def coefficient(self, k: int) -> QuasiRational:
        return self.series.coefficient(k, QuasiRational(0, -1))

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "truncation": self.trunc,
            "prefactor": {
                str(k): {"pretty": c.pretty(), "exact": c.to_json()}
                for k, c in sorted(self.prefactor.terms.items(), reverse=True)
            },
            "coefficients": {
                str(k): {"pretty": c.rat.pretty(), "exact": c.to_json()}
                for k, c in sorted(self.series.terms.items())
            },
        }


def generating_series(lam, trunc: int = DEFAULT_TRUNCATION) -> GeneratingSeries:
    lam = _as_partition(lam)
    if trunc < lam.first + lam.length:
        raise DomainError(
            f"truncation {trunc} is below lam_1 + len(lam) = {lam.first + lam.length}"
        )
    pre = prefactor(lam)
    depth = -(pre.low or 0)
    psi0 = ground_series(trunc + depth)
    lifted = LaurentSeries.exact(
        {k: QuasiRational(c, 0) for k, c in pre.terms.items()}
    )
    return GeneratingSeries(lam, trunc, pre, (lifted * psi0).truncate(trunc))


def bound_state_coefficient(M, m: int) -> Fraction:
    """``prod_{i<=l} (m - m_i) / (m - sigma + l)! * 2^{-(m - sigma)}``."""
    M = as_maya(M)
    if m in M:
        raise DomainError(f"{m} belongs to the Maya diagram, so it labels no bound state")
    ell = M.partition.length
    shift = m - M.sigma
    if shift + ell < 0:
        raise DomainError(f"{m} lies below sigma - l = {M.sigma - ell}")
    top = prod(m - mi for mi in M.decreasing(ell))
    return Fraction(top, factorial(shift + ell)) * Fraction(1, 2) ** shift


# -- exact series identities ----------------------------------------------------


def series_pde_defect(M, trunc: int = DEFAULT_TRUNCATION, factor: int = 2) -> list[int]:
    """Exponents ``k`` where ``T_M Psi`` and ``(factor z d/dz + 1 + 2 sigma) Psi`` differ.

    ``M`` fixes both the partition and ``sigma``.  An empty list means the
    identity holds through ``z^trunc``.
    """
    M = as_maya(M)
    gs = generating_series(M.partition, trunc)
    t = hamiltonian(M)
    bad = []
    for k in range(gs.low or 0, trunc + 1):
        c = gs.coefficient(k)
        if t.apply(c) != c * (factor * k + 1 + 2 * M.sigma):
            bad.append(k)
    return bad


def series_eigen_defect(M, q: int, trunc: int = DEFAULT_TRUNCATION) -> list[int]:
    """Exponents ``k`` where ``L_M^(q) Psi`` and ``z^q Psi`` differ."""
    M = as_maya(M)
    if q < 1 or not M.is_q_core(q):
        raise DomainError(f"{q} is not a critical degree of {M.partition}")
    gs = generating_series(M.partition, trunc)
    op = ladder_operator(M, q)
    bad = []
    for k in range(gs.low or 0, trunc + 1):
        lhs = op(gs.coefficient(k))
        rhs = gs.coefficient(k - q) if k - q >= (gs.low or 0) else QuasiRational(0, -1)
        if lhs != rhs:
            bad.append(k)
    return bad


def coefficient_defect(M, trunc: int = DEFAULT_TRUNCATION) -> list[int]:
    """Labels ``m`` where the series coefficient differs from ``bound_state_coefficient * psi_{M,m}``."""
    M = as_maya(M)
    gs = generating_series(M.partition, trunc)
    bad = []
    for m in range(M.lo - 1, trunc + M.sigma + 1):
        c = gs.coefficient(m - M.sigma)
        if m in M:
            ok = c.is_zero()
        else:
            ok = c == eigenfunction(M, m) * bound_state_coefficient(M, m)
        if not ok:
            bad.append(m)
    return bad


def classical_checks(trunc: int = DEFAULT_TRUNCATION) -> dict[str, bool]:
    """Lowering ``D + x``, raising ``x - D`` and energy relations on ``Psi_0``."""
    psi0 = ground_series(trunc + 1)
    lower = DiffOperator([_X, 1])
    raise_ = DiffOperator([_X, -1])
    energy = DiffOperator([_X * _X, 0, -1])
    zero = QuasiRational(0, -1)

    def coef(s, k):
        return s.coefficient(k, zero) if k >= 0 else zero

    out = {"lowering": True, "raising": True, "energy": True}
    for k in range(trunc + 1):
        c = coef(psi0, k)
        if lower.apply(c) != coef(psi0, k - 1):
            out["lowering"] = False
        if raise_.apply(c) != coef(psi0, k + 1) * (2 * (k + 1)):
            out["raising"] = False
        if energy.apply(c) != c * (2 * k + 1):
            out["energy"] = False
    return out


# -- numerical evaluation -----------------------------------------------------


def derivative_laurent(lam, order: int) -> list[LaurentSeries]:
    """``[B_0, ..., B_order]`` with ``D^j Psi = exp(-x^2/2 + x z - z^2/4) B_j``."""
    lam = _as_partition(lam)
    bs = [prefactor(lam)]
    for _ in range(order):
        b = bs[-1]
        nxt = b.map(lambda c: c.deriv()) + b.shift(1) - b.map(lambda c: c * _X)
        bs.append(nxt)
    return bs


def _eval_laurent(b: LaurentSeries, x: np.ndarray, z: np.ndarray) -> np.ndarray:
    total = np.zeros(np.broadcast(x, z).shape, dtype=complex)
    for k, c in b.terms.items():
        total = total + c(x) * z ** k
    return total


def _gaussian(x, z):
    return np.exp(-x * x / 2 + x * z - z * z / 4)


def _check_amplitude(lam: Partition, alpha) -> None:
    if lam.weight and alpha == 0:
        raise DomainError("zero amplitude is not allowed for a nontrivial partition")


def _check_poles(lam: Partition, x) -> None:
    base = schur_hermite(lam)
    if base.is_constant():
        return
    for v in np.atleast_1d(np.asarray(x, dtype=float)).ravel():
        if base(Fraction(float(v))) == 0:
            raise DomainError(f"pole of the coherent state at x = {v}")


def generating_eval(lam, x, z):
    """``Psi^(lam)(x, z)`` from the closed form."""
    lam = _as_partition(lam)
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=complex)
    return _eval_laurent(prefactor(lam), x, z) * _gaussian(x, z)


def coherent_eval(lam, alpha, x, t, sigma: int = 0):
    """``Phi^(lam)(x, t; alpha) = e^{-(1+2 sigma) i t} Psi^(lam)(x, alpha e^{-2it})``."""
    lam = _as_partition(lam)
    _check_amplitude(lam, alpha)
    _check_poles(lam, x)
    t = np.asarray(t, dtype=float)
    z = alpha * np.exp(-2j * t)
    return np.exp(-(1 + 2 * sigma) * 1j * t) * generating_eval(lam, x, z)


def canonical_coherent(x, t, alpha):
    """``exp(-it + x^2/2 - (x - alpha e^{-2it}/2)^2)``."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    return np.exp(-1j * t + x * x / 2 - (x - alpha * np.exp(-2j * t) / 2) ** 2)


def _coherent_derivatives(lam: Partition, alpha, x, t, order: int, sigma: int = 0):
    """``[Phi, D Phi, ..., D^order Phi]`` evaluated on broadcast ``(x, t)``."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    z = alpha * np.exp(-2j * t)
    common = np.exp(-(1 + 2 * sigma) * 1j * t) * _gaussian(x, z)
    return [_eval_laurent(b, x, z) * common for b in derivative_laurent(lam, order)]


@dataclass(frozen=True)
class Grid:
    x_min: float = -5.0
    x_max: float = 5.0
    n_x: int = 201
    t_min: float = 0.0
    t_max: float = 1.0
    n_t: int = 201

    def __post_init__(self):
        if self.n_x < 8 or self.n_t < 8:
            raise DomainError("grids need at least 8 points per axis")

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.linspace(self.x_min, self.x_max, self.n_x),
            np.linspace(self.t_min, self.t_max, self.n_t),
        )


def tdse_residual(lam, alpha, grid: Grid = Grid(), step: float | None = None) -> float:
    """``max |i d_t Phi - T_M Phi|`` over interior grid points.

    ``d_t`` is the fourth-order central difference with the grid spacing
    (or ``step``); ``d_x^2`` comes from the symbolic closed form.
    """
    lam = _as_partition(lam)
    _check_amplitude(lam, alpha)
    xs, ts = grid.axes()
    _check_poles(lam, xs)
    xs_in = xs[1:-1]
    ts_in = ts[1:-1]
    h = step if step is not None else (ts[1] - ts[0])
    X, T = np.meshgrid(xs_in, ts_in, indexing="ij")

    def phi(tt):
        return coherent_eval(lam, alpha, X, tt)

    dt = (-phi(T + 2 * h) + 8 * phi(T + h) - 8 * phi(T - h) + phi(T - 2 * h)) / (12 * h)
    f0, _, f2 = _coherent_derivatives(lam, alpha, X, T, 2)
    u = hamiltonian(MayaDiagram(lam, 0)).coeff(0)
    rhs = -f2 + u(X) * f0
    return float(np.max(np.abs(1j * dt - rhs)))


def annihilator_eigen_residual(lam, q: int, alpha, samples) -> float:
    """``max |L^(q) Phi - alpha^q e^{-2iqt} Phi|`` at the ``(x, t)`` samples."""
    lam = _as_partition(lam)
    M = MayaDiagram(lam, 0)
    if q < 1 or not M.is_q_core(q):
        raise DomainError(f"{q} is not a critical degree of {lam}")
    _check_amplitude(lam, alpha)
    samples = np.asarray(samples, dtype=float).reshape(-1, 2)
    x, t = samples[:, 0], samples[:, 1]
    _check_poles(lam, x)
    op = ladder_operator(M, q).operator
    ds = _coherent_derivatives(lam, alpha, x, t, op.order)
    lhs = sum(c(x) * ds[j] for j, c in enumerate(op.coeffs) if c)
    rhs = alpha ** q * np.exp(-2j * q * t) * ds[0]
    return float(np.max(np.abs(lhs - rhs)))


def coherent_table(lam, alpha, grid: Grid) -> list[tuple[float, float, complex]]:
    xs, ts = grid.axes()
    X, T = np.meshgrid(xs, ts, indexing="ij")
    values = coherent_eval(_as_partition(lam), alpha, X, T)
    return [
        (float(X[i, j]), float(T[i, j]), complex(values[i, j]))
        for i in range(len(xs))
        for j in range(len(ts))
    ]


def coherent_csv(lam, alpha, grid: Grid) -> str:
    """CSV with columns ``x, t, re, im, abs2``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "t", "re", "im", "abs2"])
    for x, t, v in coherent_table(lam, alpha, grid):
        w.writerow([repr(x), repr(t), repr(v.real), repr(v.imag), repr(abs(v) ** 2)])
    return buf.getvalue()

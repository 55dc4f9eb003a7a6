"""Rational extensions of the harmonic oscillator.

For a Maya diagram ``M`` the pseudo-Wronskian ``H_M`` is a polynomial whose
log-derivatives give the extended potential ``U_M``; the exact
eigenfunctions of ``T_M = -D^2 + U_M`` are quotients of normalized
pseudo-Wronskians.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .algebra import (
    DiffOperator,
    Poly,
    QuasiRational,
    RationalFunction,
    poly_det,
    to_scalar,
    wronskian,
)
from .combinatorics import MayaDiagram, as_maya, krein_adler_regular, multi_flip
from .errors import DomainError, InconsistencyError
from .combinatorics import d_lambda
from .families import hermite, schur_hermite


def split_index_set(M: MayaDiagram) -> tuple[list[int], list[int]]:
    """``(s, t)``: empty negatives in decreasing order, filled non-negatives increasing."""
    K = M.index_set()
    return sorted((k for k in K if k < 0), reverse=True), sorted(k for k in K if k >= 0)


def oscillator_state(n: int) -> QuasiRational:
    """``psi_n``: ``e^{-x^2/2} H_n`` for ``n >= 0`` and ``e^{x^2/2} H~_{-n-1}`` otherwise."""
    if n >= 0:
        return QuasiRational.poly(hermite(n), -1)
    return QuasiRational.poly(hermite(-n - 1, True), 1)


def _wronskian_route(M: MayaDiagram) -> Poly:
    s, t = split_index_set(M)
    ks = s + t
    if not ks:
        return Poly([1])
    w = wronskian([oscillator_state(k) for k in ks])
    if w.gauss + M.sigma != 0 or not w.rat.is_polynomial():
        raise InconsistencyError(f"Wronskian of {M} is not a polynomial")
    return w.rat.num


def _determinant_route(M: MayaDiagram) -> Poly:
    s, t = split_index_set(M)
    n = len(s) + len(t)
    if n == 0:
        return Poly([1])
    rows = []
    for si in s:
        base = -si - 1
        rows.append([hermite(base + j, True) for j in range(n)])
    for tj in t:
        h = hermite(tj)
        row = [h]
        for _ in range(n - 1):
            row.append(row[-1].deriv())
        rows.append(row)
    return poly_det(rows)


@lru_cache(maxsize=4096)
def pseudo_wronskian(M) -> Poly:
    """``H_M`` computed two ways (Wronskian of states, pseudo-Wronskian matrix)."""
    M = as_maya(M)
    a = _wronskian_route(M)
    b = _determinant_route(M)
    if a != b:
        raise InconsistencyError(f"pseudo-Wronskian routes disagree for {M}")
    return a


def normalization_constant(M: MayaDiagram) -> Fraction:
    """The divisor turning ``H_M`` into the translation-invariant ``Ĥ_M``."""
    s, t = split_index_set(M)
    p, q = len(s), len(t)
    c = prod(2 * (s[i] - s[j]) for i in range(p) for j in range(i + 1, p))
    c *= prod(2 * (t[j] - t[i]) for i in range(q) for j in range(i + 1, q))
    return Fraction(-c if (p * q) % 2 else c)


@lru_cache(maxsize=4096)
def normalized_pseudo_wronskian(M) -> Poly:
    M = as_maya(M)
    return pseudo_wronskian(M) / normalization_constant(M)


def schur_form(M) -> Poly:
    """``(2^N N! / d_lam) S^(lam)(x, -1/4, 0, ...)`` for the partition of ``M``."""
    lam = as_maya(M).partition
    n = lam.weight
    return schur_hermite(lam) * Fraction(2 ** n * factorial(n), d_lambda(lam))


def potential(M) -> RationalFunction:
    """``U_M = x^2 + 2 (H'/H)^2 - 2 H''/H + 2 sigma``."""
    M = as_maya(M)
    h = pseudo_wronskian(M)
    h1, h2 = h.deriv(), h.deriv(2)
    num = Poly([2 * M.sigma, 0, 1]) * h * h + h1 * h1 * 2 - h2 * h * 2
    return RationalFunction(num, h * h)


def hamiltonian(M) -> DiffOperator:
    """``T_M = -D^2 + U_M``."""
    return DiffOperator([potential(M), 0, -1])


def gauss_sign(M: MayaDiagram, m: int) -> int:
    """``-1`` for bound states (``m`` outside ``M``), ``+1`` otherwise."""
    return 1 if m in M else -1


def eigenfunction(M, m: int) -> QuasiRational:
    """``e^{eps x^2/2} Ĥ_{f_m(M)} / Ĥ_M`` with eigenvalue ``2m + 1``."""
    M = as_maya(M)
    num = normalized_pseudo_wronskian(multi_flip(M, [m]))
    den = normalized_pseudo_wronskian(M)
    return QuasiRational(RationalFunction(num, den), gauss_sign(M, m))


def is_bound_state(M, m: int) -> bool:
    return m not in as_maya(M)


def check_eigenrelation(M, m: int) -> bool:
    """Exact check of ``T_M psi_{M,m} = (2m+1) psi_{M,m}``."""
    M = as_maya(M)
    psi = eigenfunction(M, m)
    return hamiltonian(M).apply(psi) == psi * (2 * m + 1)


# -- Sturm sequences ----------------------------------------------------------


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.deriv()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    return [q for q in seq if q]


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    signs = [v > 0 for v in (q(x) for q in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p: Poly, a, b) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(a, b)``."""
    a, b = to_scalar(a), to_scalar(b)
    if not p:
        raise DomainError("root count of the zero polynomial")
    if a >= b:
        raise DomainError("interval must satisfy a < b")
    if p(a) == 0 or p(b) == 0:
        raise DomainError("polynomial vanishes at an interval endpoint")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(p)
    return _sign_changes(seq, a) - _sign_changes(seq, b)


# -- bundled record -------------------------------------------------------------


@dataclass(frozen=True)
class RationalExtension:
    maya: MayaDiagram
    hM: Poly
    hM_normalized: Poly
    potential: RationalFunction
    hamiltonian: DiffOperator

    @classmethod
    def of(cls, M) -> "RationalExtension":
        M = as_maya(M)
        return cls(
            M,
            pseudo_wronskian(M),
            normalized_pseudo_wronskian(M),
            potential(M),
            hamiltonian(M),
        )

    def eigenfunction(self, m: int) -> QuasiRational:
        return eigenfunction(self.maya, m)

    def eigenvalue(self, m: int) -> int:
        return 2 * m + 1

    def rational_part(self) -> RationalFunction:
        """``U_M - x^2 - 2 sigma``, which vanishes at infinity."""
        return self.potential - RationalFunction(Poly([2 * self.maya.sigma, 0, 1]))

    def regular(self) -> bool:
        return krein_adler_regular(self.maya)

    def report(self) -> dict:
        M = self.maya
        return {
            "index_set": sorted(M.index_set()),
            "partition": M.partition.to_json(),
            "sigma": M.sigma,
            "H_M": {"pretty": self.hM.pretty(), "coefficients": self.hM.to_json()},
            "H_M_normalized": {
                "pretty": self.hM_normalized.pretty(),
                "coefficients": self.hM_normalized.to_json(),
            },
            "U_M": {"pretty": self.potential.pretty(), "exact": self.potential.to_json()},
            "regular": self.regular(),
        }


def extension_report(M) -> dict:
    return RationalExtension.of(M).report()


__all__ = [
    "InconsistencyError",
    "RationalExtension",
    "check_eigenrelation",
    "eigenfunction",
    "extension_report",
    "gauss_sign",
    "hamiltonian",
    "is_bound_state",
    "normalization_constant",
    "normalized_pseudo_wronskian",
    "oscillator_state",
    "potential",
    "pseudo_wronskian",
    "split_index_set",
    "sturm_root_count",
    "schur_form",
    "sturm_sequence",
]

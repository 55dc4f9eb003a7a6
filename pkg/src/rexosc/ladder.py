"""Intertwiners between rational extensions, ladder operators and the
annihilator action on eigenfunctions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .algebra import DiffOperator, Poly, operator_polynomial, wronskian_operator
from .combinatorics import MayaDiagram, as_maya, multi_flip, symmetric_difference
from .errors import DomainError, InconsistencyError
from .extension import eigenfunction, hamiltonian


@dataclass(frozen=True)
class Intertwiner:
    """``A_{M,K}``: monic operator of order ``|K|`` with ``A T_M = T_{f_K(M)} A``."""

    source: MayaDiagram
    flips: tuple[int, ...]
    target: MayaDiagram
    operator: DiffOperator

    @property
    def order(self) -> int:
        return self.operator.order

    def __call__(self, f):
        return self.operator.apply(f)

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "flips": list(self.flips),
            "target": self.target.to_json(),
            "order": self.order,
            "coefficients": self.operator.to_json(),
            "pretty": self.operator.pretty(),
        }


@lru_cache(maxsize=1024)
def _intertwiner(M: MayaDiagram, K: tuple[int, ...]) -> Intertwiner:
    if K:
        op = wronskian_operator([eigenfunction(M, k) for k in K])
    else:
        op = DiffOperator.identity()
    return Intertwiner(M, K, multi_flip(M, K), op)


def intertwiner(M, K) -> Intertwiner:
    """``y -> Wr[psi_{M,k} : k in K, y] / Wr[psi_{M,k} : k in K]`` with ``K`` sorted."""
    return _intertwiner(as_maya(M), tuple(sorted(set(K))))


def annihilator_flips(M, n: int) -> frozenset[int]:
    """``(M + n) ⊖ M``."""
    M = as_maya(M)
    return symmetric_difference(M + n, M)


def ladder_operator(M, n: int) -> Intertwiner:
    """``L_M^(n)``, shifting eigenvalues by ``-2n``."""
    if n == 0:
        raise DomainError("ladder operator needs a nonzero shift")
    return intertwiner(M, annihilator_flips(M, n))


def gamma_polynomial(M, q: int) -> Poly:
    """``prod_{k in (M+q) minus M} (x - k)``."""
    M = as_maya(M)
    if q < 1 or not M.is_q_core(q):
        raise DomainError(f"{M} is not a {q}-core")
    roots = sorted(k for k in annihilator_flips(M, q) if k not in M)
    return prod((Poly([-k, 1]) for k in roots), start=Poly([1]))


def ladder_coefficient(M, n: int, k: int) -> Fraction:
    """The scalar ``C`` with ``L_M^(n) psi_{M,k} = C psi_{M,k-n}``."""
    M = as_maya(M)
    if k in M:
        raise DomainError(f"{k} belongs to {M}, so psi_{{M,{k}}} is not a bound state")
    image = ladder_operator(M, n)(eigenfunction(M, k))
    if image.is_zero():
        return Fraction(0)
    c = image.ratio(eigenfunction(M, k - n))
    if c is None:
        raise InconsistencyError(f"L^({n}) psi_{k} is not proportional to psi_{k - n}")
    return c


def annihilator_constant(M, q: int, m: int) -> Fraction | None:
    """``C / gamma(m)`` for the annihilator ``L_M^(q)`` acting on ``psi_{M,m}``.

    Returns None when ``gamma(m) = 0`` (the coefficient must then vanish too).
    """
    g = gamma_polynomial(M, q)(m)
    c = ladder_coefficient(M, q, m)
    if g == 0:
        if c != 0:
            raise InconsistencyError("annihilator does not vanish on a root of gamma")
        return None
    return c / g


def transition_polynomial(K1, K2) -> Poly:
    """``prod_{k in K1 ∩ K2} (2k + 1 - x)``."""
    common = sorted(set(K1) & set(K2))
    return prod((Poly([2 * k + 1, -1]) for k in common), start=Poly([1]))


def composition_sides(M1, K1, K2) -> tuple[DiffOperator, DiffOperator]:
    """Both sides of ``A_{M2,K2} A_{M1,K1} = A_{M1,K1 ⊖ K2} p(T_{M1})``."""
    M1 = as_maya(M1)
    first = intertwiner(M1, K1)
    second = intertwiner(first.target, K2)
    lhs = second.operator @ first.operator
    combined = intertwiner(M1, set(K1) ^ set(K2))
    p = transition_polynomial(K1, K2)
    rhs = combined.operator @ operator_polynomial(hamiltonian(M1), p.coeffs)
    return lhs, rhs


def check_composition(M1, K1, K2) -> bool:
    lhs, rhs = composition_sides(M1, K1, K2)
    return lhs == rhs


def check_composition_on_basis(M1, K1, K2, ms) -> bool:
    """Composition law tested by action on ``psi_{M1,m}`` for ``m`` in ``ms``."""
    M1 = as_maya(M1)
    first = intertwiner(M1, K1)
    second = intertwiner(first.target, K2)
    combined = intertwiner(M1, set(K1) ^ set(K2))
    p = transition_polynomial(K1, K2)
    for m in ms:
        psi = eigenfunction(M1, m)
        if second(first(psi)) != combined(psi) * p(2 * m + 1):
            return False
    return True


def check_intertwining(M, K, ms) -> bool:
    """``A T_M psi = T_{f_K(M)} A psi`` for ``psi = psi_{M,m}``."""
    M = as_maya(M)
    a = intertwiner(M, K)
    t_src, t_dst = hamiltonian(M), hamiltonian(a.target)
    for m in ms:
        psi = eigenfunction(M, m)
        if a(t_src(psi)) != t_dst(a(psi)):
            return False
    return True


def kernel_dimension(M, K, ms) -> int:
    """How many of ``psi_{M,m}``, ``m`` in ``ms``, are annihilated by ``A_{M,K}``."""
    a = intertwiner(M, K)
    M = as_maya(M)
    return sum(1 for m in ms if a(eigenfunction(M, m)).is_zero())

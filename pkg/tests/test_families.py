from fractions import Fraction
from itertools import product
from math import factorial, sqrt, pi

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rexosc.algebra import LaurentSeries, Poly
from rexosc.combinatorics import EMPTY, Partition, partitions, partitions_up_to
from rexosc.families import (
    MultiPoly,
    SignedPartition,
    bell_sequence,
    bell_symbolic,
    hermite,
    hermite_bell,
    hermite_rodrigues,
    insertion_series,
    schur_polynomial,
    schur_raising,
    schur_wronskian,
    vertex_compose,
    vertex_insert,
    vertex_series,
)

t1, t2, t3 = (MultiPoly.var(i) for i in (1, 2, 3))
X = Poly([0, 1])


def multinomial_bell(k: int) -> MultiPoly:
    """``B_k = sum over mu with sum j mu_j = k of prod t_j^mu_j / mu_j!``."""
    total = MultiPoly()
    ranges = [range(k // j + 1) for j in range(1, k + 1)]
    for mu in product(*ranges):
        if sum((j + 1) * m for j, m in enumerate(mu)) != k:
            continue
        term = MultiPoly.const(1)
        for j, m in enumerate(mu):
            term = term * (MultiPoly.var(j + 1) ** m) * Fraction(1, factorial(m))
        total = total + term
    return total


# -- Bell polynomials ---------------------------------------------------------


def test_bell_second():
    assert bell_symbolic(2)[2] == t1 * t1 * Fraction(1, 2) + t2


def test_bell_all_zero():
    assert bell_sequence({}, 5) == [1, 0, 0, 0, 0, 0]


def test_bell_hermite_specialization():
    bs = bell_sequence({1: X, 2: Poly([Fraction(-1, 4)])}, 3, Poly([1]))
    assert bs[3] == Poly([0, Fraction(-1, 4), 0, Fraction(1, 6)])
    assert bs[3] * 48 == Poly([0, -12, 0, 8])


def test_bell_recurrence_matches_multinomial_sum():
    bs = bell_symbolic(8)
    for k in range(9):
        assert bs[k] == multinomial_bell(k), k


def test_bell_over_laurent_coefficients():
    # t_1 = z: B_k = z^k / k!
    z = LaurentSeries.exact({1: Fraction(1)})
    bs = bell_sequence({1: z}, 4, LaurentSeries.exact({0: Fraction(1)}))
    assert bs[4].terms == {4: Fraction(1, 24)}


# -- Hermite ------------------------------------------------------------------


def test_hermite_examples():
    assert hermite(0) == Poly([1])
    assert hermite(2) == Poly([-2, 0, 4])
    assert hermite(2, True) == Poly([2, 0, 4])
    assert hermite(3) == Poly([0, -12, 0, 8])


def test_hermite_negative_index_rejected():
    with pytest.raises(ValueError):
        hermite(-1)


@pytest.mark.parametrize("conjugate", [False, True])
def test_hermite_three_routes_agree(conjugate):
    for n in range(31):
        h = hermite(n, conjugate)
        assert h.degree == n and h.lc == 2 ** n
        assert hermite_rodrigues(n, conjugate) == h
        assert hermite_bell(n, conjugate) == h


def test_conjugate_hermite_is_rotated_hermite():
    # H~_n(x) = i^{-n} H_n(i x): even part keeps sign pattern, alternate signs flip
    for n in range(12):
        h, ht = hermite(n), hermite(n, True)
        for k in range(n + 1):
            sign = (-1) ** ((k - n) // 2) if (n - k) % 2 == 0 else 0
            assert ht[k] == sign * h[k]


def test_hermite_generating_function():
    trunc = 12
    u = LaurentSeries({1: X, 2: Poly([Fraction(-1, 4)])}, trunc=trunc)
    expo = LaurentSeries({0: Poly([1])}, trunc=trunc)
    power = LaurentSeries({0: Poly([1])}, trunc=trunc)
    for k in range(1, trunc + 1):
        power = power * u
        expo = expo + power * Fraction(1, factorial(k))
    for n in range(trunc + 1):
        assert expo.coefficient(n, Poly()) == hermite(n) / (2 ** n * factorial(n))


def test_hermite_orthogonality_by_quadrature():
    nodes, weights = np.polynomial.hermite.hermgauss(40)
    for m in range(11):
        for n in range(11):
            value = float(np.sum(weights * hermite(m)(nodes) * hermite(n)(nodes)))
            expected = sqrt(pi) * 2 ** n * factorial(n) if m == n else 0.0
            scale = sqrt(pi) * 2 ** max(m, n) * factorial(max(m, n))
            assert abs(value - expected) <= 1e-10 * scale


# -- Schur functions ----------------------------------------------------------


def test_schur_examples():
    assert schur_polynomial(Partition((2, 2))) == t1 ** 4 * Fraction(1, 12) + t2 * t2 - t1 * t3
    assert schur_polynomial(EMPTY) == MultiPoly.const(1)
    assert schur_polynomial(Partition((1,))) == t1


def test_schur_routes_agree():
    for lam in partitions_up_to(6):
        s = schur_polynomial(lam)
        assert schur_wronskian(lam) == s, lam
        assert schur_raising(lam) == s, lam


def test_schur_one_row_is_bell():
    bs = bell_symbolic(6)
    for n in range(1, 7):
        assert schur_polynomial(Partition((n,))) == bs[n]


def test_multipoly_json_round_trip():
    s = schur_polynomial(Partition((2, 2)))
    data = s.to_json()
    assert data[0] == {"exponents": [4], "coefficient": "1/12"}
    assert MultiPoly.from_json(data) == s


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5)))
def test_multipoly_derivative_is_a_derivation(terms):
    p = MultiPoly(terms)
    q = p * t1 + t2
    assert (p * q).diff(1) == p.diff(1) * q + p * q.diff(1)


# -- vertex operators -----------------------------------------------------------


def test_vertex_insert_examples():
    for m in range(6):
        assert vertex_insert(m, EMPTY) == SignedPartition(1, Partition((m,)) if m else EMPTY)
    assert vertex_insert(-1, EMPTY).sign == 0
    assert vertex_compose([2, 2], EMPTY) == SignedPartition(1, Partition((2, 2)))


def test_signed_partition_validation():
    with pytest.raises(ValueError):
        SignedPartition(0, EMPTY)
    with pytest.raises(ValueError):
        SignedPartition(1)


def _cancels(a: SignedPartition, b: SignedPartition) -> bool:
    if a.sign == 0 or b.sign == 0:
        return a.sign == 0 and b.sign == 0
    return a.partition == b.partition and a.sign == -b.sign


def test_vertex_relation_on_schur_basis():
    for lam in partitions_up_to(6):
        for m in range(-3, 6):
            for n in range(-3, 6):
                lhs = vertex_compose([m, n], lam)
                rhs = vertex_compose([n - 1, m + 1], lam)
                assert _cancels(lhs, rhs), (lam, m, n)


def test_vertex_operator_matches_insertion_rule():
    for lam in partitions_up_to(4):
        series = vertex_series(schur_polynomial(lam), 10)
        expected = insertion_series(lam, 10)
        for k in range(-lam.length - 2, 11):
            got = series.coefficient(k, MultiPoly())
            r = expected.get(k)
            want = MultiPoly() if r is None else schur_polynomial(r.partition) * r.sign
            assert got == want, (lam, k)


@pytest.mark.slow
def test_vertex_operator_matches_insertion_rule_weight_5_and_6():
    for lam in list(partitions(5)) + list(partitions(6)):
        series = vertex_series(schur_polynomial(lam), 10)
        for k, r in insertion_series(lam, 10).items():
            assert series.coefficient(k, MultiPoly()) == schur_polynomial(r.partition) * r.sign

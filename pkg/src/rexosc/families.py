"""Bell, Hermite and Schur polynomials and the vertex-operator action.

Bell polynomials are produced by the recurrence
``k B_k = sum_{j=1..k} j t_j B_{k-j}`` over any commutative ring, so the
same code yields symbolic Bell polynomials, Hermite polynomials and the
Laurent-series specializations used by the generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import LaurentSeries, Poly, QuasiRational, det
from .combinatorics import MayaDiagram, Partition, multi_flip


class MultiPoly:
    """Sparse polynomial in ``t_1, t_2, ...`` with rational coefficients.

    Monomials are exponent tuples ``(e_1, e_2, ...)`` with trailing zeros
    stripped; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = _strip(exps)
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def var(cls, i: int) -> "MultiPoly":
        """The variable ``t_i`` (1-based)."""
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def weighted_degree(self) -> int:
        """Degree with ``t_k`` of weight ``k``."""
        return max((sum((k + 1) * e for k, e in enumerate(exps)) for exps in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return _raw({})
            return _raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exps(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return _raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = MultiPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def diff(self, i: int) -> "MultiPoly":
        """Partial derivative with respect to ``t_i``."""
        out = {}
        k = i - 1
        for e, c in self.terms.items():
            if k < len(e) and e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1:]
                out[_strip(ne)] = c * e[k]
        return _raw(out)

    def evaluate(self, values, one=None):
        """Substitute ``t_i -> values[i-1]`` (missing values count as zero).

        ``values`` may hold elements of any commutative ring; the result
        lives in that ring.  ``one`` is the ring's unit (inferred if omitted).
        """
        values = list(values)
        if one is None:
            one = _infer_one(values)
        powers: dict[tuple[int, int], object] = {}

        def pw(k, e):
            key = (k, e)
            if key not in powers:
                powers[key] = values[k] if e == 1 else pw(k, e - 1) * values[k]
            return powers[key]

        total = None
        for exps, c in self.terms.items():
            term = one * c
            dead = False
            for k, e in enumerate(exps):
                if not e:
                    continue
                if k >= len(values) or _is_zero(values[k]):
                    dead = True
                    break
                term = term * pw(k, e)
            if dead:
                continue
            total = term if total is None else total + term
        return total if total is not None else one * 0

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "coefficient": _frac_str(c)}
            for e, c in sorted(self.terms.items(), key=_monomial_key)
        ]

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        return cls({tuple(r["exponents"]): Fraction(r["coefficient"]) for r in data})

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=_monomial_key):
            mono = "*".join(
                f"t{k + 1}" if p == 1 else f"t{k + 1}^{p}" for k, p in enumerate(e) if p
            )
            if not mono:
                parts.append(_frac_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_frac_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly('{self.pretty()}')"


def _raw(terms) -> MultiPoly:
    m = MultiPoly.__new__(MultiPoly)
    m.terms = terms
    return m


def _strip(exps) -> tuple:
    exps = tuple(int(e) for e in exps)
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def _add_exps(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _monomial_key(item):
    e = item[0]
    # graded by weight, then reverse-lex by exponent tuple
    return (-sum((k + 1) * p for k, p in enumerate(e)), tuple(-p for p in e))


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _is_zero(v) -> bool:
    return not v


def _infer_one(values):
    for v in values:
        if isinstance(v, (int, Fraction)):
            continue
        if isinstance(v, LaurentSeries):
            return LaurentSeries.exact({0: _infer_one(list(v.terms.values()))})
        return v * 0 + 1
    return Fraction(1)


# -- Bell polynomials ---------------------------------------------------------


def bell_sequence(substitution, k_max: int, one=None) -> list:
    """``[B_0, ..., B_{k_max}]`` with ``t_j`` replaced by ``substitution[j]``.

    ``substitution`` maps ``j -> ring element`` (a dict, or a sequence
    indexed from ``t_1``); absent entries mean ``t_j = 0``.
    """
    if not isinstance(substitution, dict):
        substitution = {j: v for j, v in enumerate(substitution, start=1)}
    ts = {j: v for j, v in substitution.items() if 1 <= j <= k_max and not _is_zero(v)}
    if one is None:
        one = _infer_one(list(ts.values()))
    # j * t_j, computed once
    jt = {j: v * j for j, v in ts.items()}
    bs = [one]
    for k in range(1, k_max + 1):
        acc = None
        for j, v in jt.items():
            if j > k:
                continue
            term = v * bs[k - j]
            acc = term if acc is None else acc + term
        bs.append(acc * Fraction(1, k) if acc is not None else one * 0)
    return bs


def bell_symbolic(k_max: int) -> list[MultiPoly]:
    """Symbolic Bell polynomials ``B_k(t_1, ..., t_k)``."""
    return bell_sequence({j: MultiPoly.var(j) for j in range(1, k_max + 1)}, k_max, MultiPoly.const(1))


# -- Hermite polynomials ------------------------------------------------------


@lru_cache(maxsize=None)
def hermite(n: int, conjugate: bool = False) -> Poly:
    """Hermite ``H_n`` or conjugate Hermite ``H~_n`` by the 3-term recurrence."""
    if n < 0:
        raise ValueError("Hermite index must be non-negative")
    if n == 0:
        return Poly([1])
    if n == 1:
        return Poly([0, 2])
    s = 1 if conjugate else -1
    return Poly([0, 2]) * hermite(n - 1, conjugate) + hermite(n - 2, conjugate) * (s * 2 * (n - 1))


def hermite_rodrigues(n: int, conjugate: bool = False) -> Poly:
    """``(-1)^n e^{x^2} D^n e^{-x^2}``, or ``e^{-x^2} D^n e^{x^2}`` when conjugate."""
    f = QuasiRational.poly(Poly([1]), 2 if conjugate else -2)
    for _ in range(n):
        f = f.deriv()
    p = f.rat.num
    return p if conjugate or n % 2 == 0 else -p


def hermite_bell(n: int, conjugate: bool = False) -> Poly:
    """``n! 2^n B_n(x, -1/4, 0, ...)`` (``+1/4`` for the conjugate family)."""
    t2 = Fraction(1, 4) if conjugate else Fraction(-1, 4)
    bs = bell_sequence({1: Poly([0, 1]), 2: Poly([t2])}, n, Poly([1]))
    return bs[n] * (factorial(n) * 2 ** n)


# -- Schur functions ----------------------------------------------------------


def _jacobi_trudi(lam: Partition, bs, one):
    ell = lam.length
    zero = one * 0
    m = [lam[i] - (i + 1) for i in range(ell)]
    mat = [
        [bs[m[i] + j] if m[i] + j >= 0 else zero for j in range(1, ell + 1)]
        for i in range(ell)
    ]
    return det(mat, one=one)


def schur_specialized(lam: Partition, substitution, one=None):
    """``S^(lam)`` with ``t_j -> substitution[j]``, computed in that ring."""
    if not isinstance(substitution, dict):
        substitution = {j: v for j, v in enumerate(substitution, start=1)}
    if one is None:
        one = _infer_one(list(substitution.values()))
    n = max(lam.weight, 1)
    bs = bell_sequence(substitution, n, one)
    return _jacobi_trudi(lam, bs, one)


@lru_cache(maxsize=256)
def schur_hermite(lam: Partition) -> Poly:
    """``S^(lam)(x, -1/4, 0, ...)``."""
    return schur_specialized(lam, {1: Poly([0, 1]), 2: Poly([Fraction(-1, 4)])}, Poly([1]))


def schur_polynomial(lam: Partition) -> MultiPoly:
    """Schur function as the Jacobi-Trudi determinant of Bell polynomials."""
    n = max(lam.weight, 1)
    return _jacobi_trudi(lam, bell_symbolic(n), MultiPoly.const(1))


def schur_wronskian(lam: Partition) -> MultiPoly:
    """Schur function as a Wronskian in ``t_1`` of Bell polynomials."""
    ell = lam.length
    if ell == 0:
        return MultiPoly.const(1)
    bs = bell_symbolic(lam.weight + ell)
    m = [lam[i] - (i + 1) for i in range(ell)]
    funcs = [bs[m[i] + ell] for i in reversed(range(ell))]
    mat = []
    for f in funcs:
        row = [f]
        for _ in range(ell - 1):
            row.append(row[-1].diff(1))
        mat.append(row)
    # rows are functions, columns derivative orders
    return det(mat, one=MultiPoly.const(1))


def schur_raising(lam: Partition) -> MultiPoly:
    """``X_{lam_1} ... X_{lam_l} 1`` with each ``X_m`` applied via the substitution formula."""
    p = MultiPoly.const(1)
    for m in reversed(lam.parts):
        p = vertex_operator_apply(p, m)
    return p


def shifted_arguments(nvars: int) -> list[LaurentSeries]:
    """``t_k - z^{-k}/k`` for ``k = 1..nvars`` as exact Laurent polynomials."""
    return [
        LaurentSeries.exact({0: MultiPoly.var(k), -k: MultiPoly.const(Fraction(-1, k))})
        for k in range(1, nvars + 1)
    ]


def vertex_series(p: MultiPoly, trunc: int) -> LaurentSeries:
    """``V(t, z) P(t) = exp(sum t_k z^k) P(t_1 - 1/z, t_2 - 1/(2z^2), ...)`` through ``z^trunc``."""
    w = p.weighted_degree()
    nvars = max(p.nvars, 1)
    one = LaurentSeries.exact({0: MultiPoly.const(1)})
    shifted = p.evaluate(shifted_arguments(nvars), one=one)
    top = trunc + w
    bells = bell_symbolic(max(top, 0))
    expo = LaurentSeries({j: b for j, b in enumerate(bells)}, trunc=top)
    return (expo * shifted).truncate(trunc)


def vertex_operator_apply(p: MultiPoly, m: int) -> MultiPoly:
    """``X_m P``: the ``z^m`` coefficient of ``V(t, z) P``."""
    series = vertex_series(p, m)
    return series.coefficient(m, MultiPoly())


# -- vertex insertion -----------------------------------------------------------


@dataclass(frozen=True)
class SignedPartition:
    """``sign * S^(partition)``; sign 0 means the zero function."""

    sign: int
    partition: Partition | None = None

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if (self.sign == 0) != (self.partition is None):
            raise ValueError("a partition is present exactly when the sign is nonzero")

    def to_json(self) -> dict:
        return {"sign": self.sign, "partition": None if self.partition is None else list(self.partition)}


def vertex_insert(m: int, lam: Partition) -> SignedPartition:
    """Action of ``X_m`` on ``S^(lam)`` by inserting position ``m`` into ``M(lam)``."""
    M = MayaDiagram(lam, 0)
    if m in M:
        return SignedPartition(0)
    above = sum(1 for k in M.members(m + 1, M.hi - 1))
    flipped = multi_flip(M, [m])
    return SignedPartition(-1 if above % 2 else 1, flipped.partition)


def vertex_compose(ms, lam: Partition) -> SignedPartition:
    """Apply ``X_{ms[0]} X_{ms[1]} ...`` (rightmost first) to ``S^(lam)``."""
    sign, cur = 1, lam
    for m in reversed(list(ms)):
        r = vertex_insert(m, cur)
        if r.sign == 0:
            return r
        sign *= r.sign
        cur = r.partition
    return SignedPartition(sign, cur)


def insertion_series(lam: Partition, trunc: int) -> dict[int, SignedPartition]:
    """Nonzero terms ``m -> sign * S_{m ▷ lam}`` of ``V(t, z) S^(lam)`` for ``m <= trunc``."""
    out = {}
    for m in range(-lam.length - 1, trunc + 1):
        r = vertex_insert(m, lam)
        if r.sign:
            out[m] = r
    return out

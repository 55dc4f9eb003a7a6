"""Linear differential operators with rational coefficients, and Wronskians."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .linalg import poly_det
from .poly import ONE, Poly, lcm
from .rational import QuasiRational, RationalFunction, as_rational


def _derivative_chain(f: QuasiRational, k: int) -> tuple[list[Poly], Poly]:
    """Numerators ``N_j`` with ``f^(j) = exp(g x^2/2) N_j / Q^(j+1)``, j <= k."""
    num, den = f.rat.num, f.rat.den
    dden = den.deriv()
    gx = Poly([0, f.gauss])
    out = [num]
    for j in range(1, k + 1):
        prev = out[-1]
        nj = prev.deriv() * den - prev * dden * j
        if f.gauss:
            nj = nj + prev * gx * den
        out.append(nj)
    return out, den


def _scaled_rows(fs: list[QuasiRational], ncols: int):
    """Rows of the derivative matrix scaled to polynomials.

    Row ``i`` is multiplied by ``Q_i**ncols`` so that entry ``j`` becomes
    ``N_ij * Q_i**(ncols-1-j)``.  Returns the rows and the product of scales.
    """
    rows, scale = [], ONE
    for f in fs:
        nums, q = _derivative_chain(f, ncols - 1)
        if q.is_constant():
            c = q[0]
            rows.append([n / c for n in nums])
        else:
            rows.append([n * q ** (ncols - 1 - j) for j, n in enumerate(nums)])
            scale = scale * q ** ncols
    return rows, scale


def wronskian(fs) -> QuasiRational:
    """Wronskian determinant of quasi-rational functions.

    Each row carries its own Gaussian factor, so the result has weight equal
    to the sum of the weights.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("Wronskian of an empty list")
    n = len(fs)
    rows, scale = _scaled_rows(fs, n)
    d = poly_det(rows)
    return QuasiRational(RationalFunction(d, scale), sum(f.gauss for f in fs))


class DiffOperator:
    """``sum_j coeffs[j](x) * (d/dx)**j`` with rational-function coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def identity(cls) -> "DiffOperator":
        return cls([1])

    @classmethod
    def d(cls) -> "DiffOperator":
        return cls([0, 1])

    @classmethod
    def multiplication(cls, c) -> "DiffOperator":
        return cls([c])

    @classmethod
    def first_order(cls, w) -> "DiffOperator":
        """The operator ``d/dx - w``."""
        return cls([-as_rational(w), 1])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, j: int) -> RationalFunction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return RationalFunction(0)

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, DiffOperator):
            other = DiffOperator.multiplication(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOperator([self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOperator([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, DiffOperator):
            other = DiffOperator.multiplication(other)
        return self + (-other)

    def __rmul__(self, c):
        """Left multiplication by a function or scalar."""
        c = as_rational(c)
        return DiffOperator([c * a for a in self.coeffs])

    def __matmul__(self, other: "DiffOperator") -> "DiffOperator":
        """Composition ``self ∘ other``."""
        return self.compose(other)

    def compose(self, other: "DiffOperator") -> "DiffOperator":
        if not isinstance(other, DiffOperator):
            return NotImplemented
        out: dict[int, RationalFunction] = {}
        # derivatives of other's coefficients, computed once
        dmax = self.order
        dcache = []
        for b in other.coeffs:
            ds = [b]
            for _ in range(dmax):
                ds.append(ds[-1].deriv())
            dcache.append(ds)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, ds in enumerate(dcache):
                for k in range(i + 1):
                    bk = ds[k]
                    if not bk:
                        continue
                    term = a * bk * comb(i, k)
                    idx = i - k + j
                    out[idx] = out[idx] + term if idx in out else term
        n = max(out) + 1 if out else 0
        return DiffOperator([out.get(j, RationalFunction(0)) for j in range(n)])

    def power(self, n: int) -> "DiffOperator":
        result = DiffOperator.identity()
        for _ in range(n):
            result = self.compose(result)
        return result

    def apply(self, f: QuasiRational) -> QuasiRational:
        """Apply to a quasi-rational function; the Gaussian weight is kept."""
        if not self.coeffs or f.is_zero():
            return QuasiRational(0, f.gauss)
        p = self.order
        nums, q = _derivative_chain(f, p)
        denoms = [c.den for c in self.coeffs if c]
        big = denoms[0]
        for d in denoms[1:]:
            if d != big:
                big = lcm(big, d)
        total = Poly()
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            factor = c.num * big.exact_div(c.den) if c.den != big else c.num
            term = factor * nums[j]
            if p - j:
                term = term * q ** (p - j)
            total = total + term
        return QuasiRational(RationalFunction(total, big * q ** (p + 1)), f.gauss)

    __call__ = apply

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "DiffOperator":
        return cls([RationalFunction.from_json(c) for c in data])

    def pretty(self) -> str:
        parts = []
        for j in range(self.order, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            dj = "" if j == 0 else ("D" if j == 1 else f"D^{j}")
            if c == 1 and dj:
                parts.append(dj)
            else:
                parts.append(f"[{c.pretty()}]" + (f"*{dj}" if dj else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"DiffOperator('{self.pretty()}')"


def apply_operator(op: DiffOperator, f: QuasiRational) -> QuasiRational:
    return op.apply(f)


def operator_polynomial(op: DiffOperator, coeffs) -> DiffOperator:
    """Evaluate ``sum_k coeffs[k] * op**k`` (coefficients lowest first)."""
    result = DiffOperator([])
    power = DiffOperator.identity()
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if c:
            result = result + c * power
        if k + 1 < len(coeffs):
            power = op.compose(power)
    return result


def first_order_apply(w: RationalFunction, f: QuasiRational) -> QuasiRational:
    """``f' - w f``."""
    return QuasiRational(f.deriv().rat - w * f.rat, f.gauss)


def crum_factors(fs) -> list[RationalFunction]:
    """First-order factors ``w_k`` with ``Wr[f, y]/Wr[f] = (D - w_p)...(D - w_1) y``.

    Each step divides out the first remaining function and maps the others
    through ``y -> y' - (f'/f) y``.
    """
    us = list(fs)
    ws = []
    while us:
        head, rest = us[0], us[1:]
        if head.is_zero():
            raise ValueError("linearly dependent functions in Wronskian quotient")
        w = head.log_derivative()
        ws.append(w)
        us = [first_order_apply(w, u) for u in rest]
    return ws


def expand_factors(ws) -> DiffOperator:
    """Expand ``(D - w_p)...(D - w_1)`` into a monic operator."""
    cs: list[RationalFunction] = [RationalFunction(1)]
    for w in ws:
        new = [RationalFunction(0)] * (len(cs) + 1)
        for j, c in enumerate(cs):
            new[j] = new[j] + c.deriv() - w * c
            new[j + 1] = new[j + 1] + c
        cs = new
    return DiffOperator(cs)


def wronskian_operator(fs) -> DiffOperator:
    """Monic operator ``y -> Wr[f_1..f_p, y] / Wr[f_1..f_p]`` (Crum expansion)."""
    return expand_factors(crum_factors(fs))


def wronskian_operator_cofactor(fs) -> DiffOperator:
    """Same operator obtained by cofactor expansion along the ``y`` row."""
    fs = list(fs)
    p = len(fs)
    if p == 0:
        return DiffOperator.identity()
    rows, _ = _scaled_rows(fs, p + 1)
    minors = []
    for j in range(p + 1):
        sub = [[r[c] for c in range(p + 1) if c != j] for r in rows]
        minors.append(poly_det(sub))
    lead = minors[p]
    if not lead:
        raise ValueError("linearly dependent functions in Wronskian quotient")
    coeffs = []
    for j in range(p + 1):
        m = minors[j] if (p + j) % 2 == 0 else -minors[j]
        coeffs.append(RationalFunction(m, lead))
    return DiffOperator(coeffs)

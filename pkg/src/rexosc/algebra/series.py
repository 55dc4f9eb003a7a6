"""Truncated Laurent series in ``z`` over a generic coefficient ring."""

from __future__ import annotations

from fractions import Fraction

#: Default highest retained power of ``z``.
DEFAULT_TRUNCATION = 12


class LaurentSeries:
    """Laurent series ``sum_k c_k z**k`` known up to ``z**trunc``.

    Coefficients live in any commutative ring whose elements support
    ``+``, ``-``, ``*`` and multiplication by Fractions and whose zero is
    falsy.  ``trunc=None`` marks a finite (exact) Laurent polynomial.
    Zero coefficients are not stored.
    """

    __slots__ = ("terms", "trunc")

    def __init__(self, terms=None, trunc: int | None = DEFAULT_TRUNCATION):
        self.trunc = trunc
        clean = {}
        for k, c in (terms or {}).items():
            if trunc is not None and k > trunc:
                continue
            if c:
                clean[int(k)] = c
        self.terms = clean

    @classmethod
    def exact(cls, terms) -> "LaurentSeries":
        return cls(terms, trunc=None)

    @property
    def low(self) -> int | None:
        """Lowest exponent with a nonzero coefficient."""
        return min(self.terms) if self.terms else None

    @property
    def high(self) -> int | None:
        return max(self.terms) if self.terms else None

    def __getitem__(self, k: int):
        if self.trunc is not None and k > self.trunc:
            raise IndexError(f"coefficient of z^{k} lies beyond the truncation z^{self.trunc}")
        return self.terms.get(k, 0)

    def coefficient(self, k: int, zero=0):
        self[k]  # bounds check
        return self.terms.get(k, zero)

    def is_exact(self) -> bool:
        return self.trunc is None

    def _merge_trunc(self, other) -> int | None:
        if self.trunc is None:
            return other.trunc
        if other.trunc is None:
            return self.trunc
        return min(self.trunc, other.trunc)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.exact({0: other})
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentSeries(out, self._merge_trunc(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries({k: -c for k, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.exact({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return LaurentSeries({k: c * other for k, c in self.terms.items()}, self.trunc)
        trunc = _product_trunc(self, other)
        out: dict[int, object] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                if trunc is not None and k > trunc:
                    continue
                t = a * b
                out[k] = out[k] + t if k in out else t
        return LaurentSeries(out, trunc)

    def __rmul__(self, other):
        return LaurentSeries({k: other * c for k, c in self.terms.items()}, self.trunc)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent series")
        result = None
        for _ in range(n):
            result = self if result is None else result * self
        return result if result is not None else LaurentSeries.exact({0: Fraction(1)})

    def shift(self, q: int) -> "LaurentSeries":
        """Multiply by ``z**q``."""
        trunc = None if self.trunc is None else self.trunc + q
        return LaurentSeries({k + q: c for k, c in self.terms.items()}, trunc)

    def z_dz(self) -> "LaurentSeries":
        """Apply the Euler operator ``z d/dz``."""
        return LaurentSeries({k: c * k for k, c in self.terms.items() if k}, self.trunc)

    def dz(self) -> "LaurentSeries":
        """Apply ``d/dz``."""
        trunc = None if self.trunc is None else self.trunc - 1
        return LaurentSeries({k - 1: c * k for k, c in self.terms.items() if k}, trunc)

    def map(self, fn) -> "LaurentSeries":
        """Apply ``fn`` to every coefficient (a coefficient-wise linear map)."""
        return LaurentSeries({k: fn(c) for k, c in self.terms.items()}, self.trunc)

    def truncate(self, trunc: int) -> "LaurentSeries":
        if self.trunc is not None:
            trunc = min(trunc, self.trunc)
        return LaurentSeries(self.terms, trunc)

    def agrees_with(self, other: "LaurentSeries", upto: int | None = None) -> bool:
        """Coefficient-wise equality through ``z**upto`` (default: common truncation)."""
        limit = self._merge_trunc(other)
        if upto is not None:
            limit = upto if limit is None else min(limit, upto)
        keys = set(self.terms) | set(other.terms)
        for k in keys:
            if limit is not None and k > limit:
                continue
            a, b = self.terms.get(k), other.terms.get(k)
            if a is None or b is None:
                if (a if a is not None else b):
                    return False
                continue
            if not (a == b):
                return False
        return True

    def __repr__(self):
        body = ", ".join(f"z^{k}: {c!r}" for k, c in sorted(self.terms.items()))
        tail = "" if self.trunc is None else f", O(z^{self.trunc + 1})"
        return f"LaurentSeries({{{body}}}{tail})"


def _product_trunc(a: LaurentSeries, b: LaurentSeries) -> int | None:
    cands = []
    if a.trunc is not None:
        cands.append(a.trunc + (b.low if b.low is not None else 0))
    if b.trunc is not None:
        cands.append(b.trunc + (a.low if a.low is not None else 0))
    return min(cands) if cands else None

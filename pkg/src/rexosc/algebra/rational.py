"""Rational functions and quasi-rational functions in one variable."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .poly import ONE, ZERO, Poly, gcd, to_scalar


class RationalFunction:
    """Quotient ``num/den`` of polynomials in lowest terms, ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        num = _as_poly(num)
        den = ONE if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        if not reduced and not den.is_constant():
            g = gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p) -> "RationalFunction":
        return cls(p, ONE, reduced=True)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = gcd(self.den, other.den)
        if g.is_constant():
            return RationalFunction(
                self.num * other.den + other.num * self.den,
                self.den * other.den,
                reduced=True,
            )
        a = other.den.exact_div(g)
        b = self.den.exact_div(g)
        return RationalFunction(self.num * a + other.num * b, self.den * a)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den, reduced=True)
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return RationalFunction(ZERO)
        # cross-cancel before multiplying to keep degrees down
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        n1, d2 = self.num, other.den
        if not g1.is_constant():
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = other.num, self.den
        if not g2.is_constant():
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return RationalFunction(n1 * n2, d1 * d2, reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, reduced=True)

    def deriv(self) -> "RationalFunction":
        return RationalFunction(
            self.num.deriv() * self.den - self.num * self.den.deriv(), self.den * self.den
        )

    def __call__(self, value):
        if isinstance(value, (int, Fraction)):
            d = self.den(value)
            if d == 0:
                raise ZeroDivisionError(f"pole at x = {value}")
            return self.num(value) / d
        return self.num(value) / self.den(value)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def pretty(self, var: str = "x") -> str:
        if self.den.is_constant():
            return self.num.pretty(var)
        return f"({self.num.pretty(var)})/({self.den.pretty(var)})"

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"RationalFunction('{self.pretty()}')"


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly([p])
    raise TypeError(f"expected a polynomial, got {type(p).__name__}")


def _coerce(other):
    if isinstance(other, RationalFunction):
        return other
    if isinstance(other, Poly):
        return RationalFunction(other, ONE, reduced=True)
    if isinstance(other, (int, Fraction)):
        return RationalFunction(Poly([other]), ONE, reduced=True)
    return None


def as_rational(value) -> RationalFunction:
    r = _coerce(value)
    if r is None:
        raise TypeError(f"cannot convert {type(value).__name__} to a rational function")
    return r


class QuasiRational:
    """The function ``rat(x) * exp(gauss * x**2 / 2)``.

    The Gaussian weight is an integer; derivatives stay in the class and
    products add weights.  Sums are only defined for equal weights (or when
    one side is zero).
    """

    __slots__ = ("rat", "gauss")

    def __init__(self, rat, gauss: int = 0):
        self.rat = as_rational(rat)
        self.gauss = int(gauss)

    @classmethod
    def poly(cls, num, gauss: int = 0) -> "QuasiRational":
        return cls(RationalFunction.from_poly(num), gauss)

    def is_zero(self) -> bool:
        return not self.rat.num

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, QuasiRational):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.gauss != other.gauss:
            return False
        # cross-multiplied polynomial identity
        return self.rat.num * other.rat.den == other.rat.num * self.rat.den

    def __hash__(self):
        return hash((self.rat, self.gauss if self.rat.num else 0))

    def __add__(self, other):
        if not isinstance(other, QuasiRational):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.gauss != other.gauss:
            raise ValueError("cannot add quasi-rational functions with different Gaussian weights")
        return QuasiRational(self.rat + other.rat, self.gauss)

    def __neg__(self):
        return QuasiRational(-self.rat, self.gauss)

    def __sub__(self, other):
        if not isinstance(other, QuasiRational):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QuasiRational):
            return QuasiRational(self.rat * other.rat, self.gauss + other.gauss)
        if isinstance(other, (int, Fraction, Poly, RationalFunction)):
            return QuasiRational(self.rat * as_rational(other), self.gauss)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuasiRational):
            return QuasiRational(self.rat / other.rat, self.gauss - other.gauss)
        if isinstance(other, (int, Fraction, Poly, RationalFunction)):
            return QuasiRational(self.rat / as_rational(other), self.gauss)
        return NotImplemented

    def deriv(self) -> "QuasiRational":
        r = self.rat.deriv()
        if self.gauss:
            r = r + self.rat * Poly([0, self.gauss])
        return QuasiRational(r, self.gauss)

    def derivatives(self, k: int) -> list["QuasiRational"]:
        """``[f, f', ..., f^(k)]`` sharing one unreduced denominator chain."""
        num, den = self.rat.num, self.rat.den
        dden = den.deriv()
        gx = Poly([0, self.gauss])
        out = [self]
        # f^(j) = e^{g x^2/2} N_j / den^(j+1)
        nj = num
        for j in range(1, k + 1):
            nj = nj.deriv() * den - nj * dden * j + nj * gx * den
            out.append(QuasiRational(RationalFunction(nj, den ** (j + 1)), self.gauss))
        return out

    def log_derivative(self) -> RationalFunction:
        """``f'/f`` as a rational function."""
        return self.deriv().rat / self.rat

    def __call__(self, x):
        return self.rat(x) * np.exp(self.gauss * np.asarray(x) ** 2 / 2)

    def ratio(self, other: "QuasiRational"):
        """Return ``c`` with ``self == c * other`` if such a scalar exists, else None."""
        if other.is_zero():
            raise ZeroDivisionError("ratio against the zero function")
        if self.is_zero():
            return Fraction(0)
        if self.gauss != other.gauss:
            return None
        q = self.rat / other.rat
        if not q.is_polynomial() or q.num.degree > 0:
            return None
        return q.num[0] / q.den[0]

    def to_json(self) -> dict:
        return {"rat": self.rat.to_json(), "gauss": self.gauss}

    def pretty(self) -> str:
        body = self.rat.pretty()
        if self.gauss == 0:
            return body
        return f"{_gauss_str(self.gauss)} * ({body})"

    def __repr__(self):
        return f"QuasiRational('{self.rat.pretty()}', gauss={self.gauss})"


def _gauss_str(g: int) -> str:
    sign = "-" if g < 0 else ""
    g = abs(g)
    if g == 2:
        return f"exp({sign}x^2)"
    if g % 2 == 0:
        return f"exp({sign}{g // 2}*x^2)"
    return f"exp({sign}x^2/2)" if g == 1 else f"exp({sign}{g}*x^2/2)"


def scalar(value) -> RationalFunction:
    return RationalFunction(Poly([to_scalar(value)]), ONE, reduced=True)



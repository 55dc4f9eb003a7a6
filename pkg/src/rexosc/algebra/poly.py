"""Dense univariate polynomials over the rationals.

A polynomial is stored as a tuple of integer numerators (lowest degree
first) over one positive common denominator, kept in lowest terms.  All
arithmetic therefore runs on Python integers and only a single gcd per
result is needed to renormalize, which is much cheaper than carrying a
``Fraction`` per coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

import numpy as np

Scalar = Fraction

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -1


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def scalar_to_str(value: Fraction) -> str:
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Poly:
    """Polynomial in ``x`` with exact rational coefficients.

    >>> p = Poly([-2, 0, 4])
    >>> p
    Poly('4*x^2 - 2')
    >>> p.deriv()
    Poly('8*x')
    """

    __slots__ = ("_num", "_den", "_hash", "_float")

    def __init__(self, coeffs=()):
        fracs = [to_scalar(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        self._set(tuple(f.numerator * (den // f.denominator) for f in fracs), den)

    def _set(self, num, den):
        num = list(num)
        while num and num[-1] == 0:
            num.pop()
        if not num:
            self._num, self._den = (), 1
        else:
            if den < 0:
                num = [-c for c in num]
                den = -den
            g = math.gcd(den, *num)
            if g != 1:
                num = [c // g for c in num]
                den //= g
            self._num, self._den = tuple(num), den
        self._hash = None
        self._float = None

    @classmethod
    def _raw(cls, num, den=1) -> "Poly":
        p = cls.__new__(cls)
        p._set(num, den)
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw((0, 1))

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._num) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def int_parts(self) -> tuple[tuple[int, ...], int]:
        """Integer numerators and the common denominator."""
        return self._num, self._den

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    @property
    def lc(self) -> Fraction:
        return self[self.degree] if self._num else Fraction(0)

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    def __bool__(self):
        return bool(self._num)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        l = math.lcm(self._den, other._den)
        a, b = l // self._den, l // other._den
        n = max(len(self._num), len(other._num))
        out = [0] * n
        for i, c in enumerate(self._num):
            out[i] = c * a
        for i, c in enumerate(other._num):
            out[i] += c * b
        return Poly._raw(out, l)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Poly._raw(
                tuple(c * other.numerator for c in self._num),
                self._den * other.denominator,
            )
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._raw(_int_mul(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = _divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- calculus and evaluation ------------------------------------------

    def deriv(self, k: int = 1) -> "Poly":
        num = self._num
        for _ in range(k):
            num = tuple(i * c for i, c in enumerate(num))[1:]
        return Poly._raw(num, self._den)

    def shift_mul_x(self, k: int = 1) -> "Poly":
        """Multiply by ``x**k``."""
        if not self._num:
            return self
        return Poly._raw((0,) * k + self._num, self._den)

    def __call__(self, value):
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            p, q = value.numerator, value.denominator
            # Horner over the common denominator q**deg
            acc, qpow = 0, 1
            for c in reversed(self._num):
                acc = acc * p + c * qpow
                qpow *= q
            return Fraction(acc, self._den * q ** max(len(self._num) - 1, 0))
        return np.polyval(self.float_coeffs()[::-1], value) if self._num else value * 0.0

    def float_coeffs(self) -> np.ndarray:
        """Coefficients as float64, lowest degree first."""
        if self._float is None:
            self._float = np.array(
                [float(Fraction(c, self._den)) for c in self._num], dtype=float
            )
        return self._float

    def monic(self) -> "Poly":
        if not self._num:
            return self
        return Poly._raw(self._num, self._num[-1])

    def primitive(self) -> tuple[Fraction, tuple[int, ...]]:
        """Split as ``content * primitive`` with an integer primitive part."""
        if not self._num:
            return Fraction(0), ()
        g = math.gcd(*self._num)
        if self._num[-1] < 0:
            g = -g
        return Fraction(g, self._den), tuple(c // g for c in self._num)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[str]:
        return [scalar_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls(Fraction(s) for s in data)

    def pretty(self, var: str = "x") -> str:
        if not self._num:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = scalar_to_str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{scalar_to_str(a)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Poly('{self.pretty()}')"


X = Poly.x()
ONE = Poly._raw((1,))
ZERO = Poly._raw(())


def _int_mul(a, b):
    if not a or not b:
        return ()
    if len(a) > len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _divmod(a: Poly, b: Poly):
    if not b._num:
        raise ZeroDivisionError("polynomial division by zero")
    n, m = len(a._num) - 1, len(b._num) - 1
    if n < m:
        return ZERO, a
    bn = b._num
    lb = bn[-1]
    rem = list(a._num)
    quo = [0] * (n - m + 1)
    # pseudo-division: track a running scale so that
    #   scale * a = quo * b + rem   (all integer numerators)
    scale = 1
    for i in range(n - m, -1, -1):
        c = rem[i + m]
        if c == 0:
            continue
        g = math.gcd(c, lb)
        f, cb = lb // g, c // g
        if f != 1:
            rem = [r * f for r in rem]
            quo = [q * f for q in quo]
            scale *= f
        quo[i] += cb
        for j in range(m + 1):
            rem[i + j] -= cb * bn[j]
    # a/da = (quo/(scale*da)) * (b/db) * db + ...
    q = Poly._raw(quo, scale * a._den) * b._den
    r = Poly._raw(rem[:m], scale * a._den)
    return q, r


# -- gcd ----------------------------------------------------------------

def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(start: int, count: int) -> list[int]:
    out, n = [], start
    while len(out) < count:
        n -= 1
        if _is_probable_prime(n):
            out.append(n)
    return out


_GCD_PRIMES = _primes_below(1 << 62, 64)


def _gcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of integer coefficient lists modulo ``p``."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1] * inv % p
            shift = len(a) - 1 - db
            if c:
                for j in range(db + 1):
                    a[shift + j] = (a[shift + j] - c * b[j]) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _rational_reconstruct(u: int, m: int):
    bound = math.isqrt(m // 2)
    r0, r1 = m, u % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def _euclid_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        _, r = _divmod(a, b)
        a, b = b, r.monic() if r else r
    return a.monic()


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over Q (zero only if both are zero).

    Uses a multi-modular algorithm: the gcd is computed modulo word-size
    primes, combined by CRT, rationally reconstructed and confirmed by exact
    trial division.  A trivial modular gcd proves coprimality immediately.
    """
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return ONE
    _, pa = a.primitive()
    _, pb = b.primitive()
    lead = pa[-1] * pb[-1]
    best_deg = None
    modulus, acc = 1, None
    for p in _GCD_PRIMES:
        if lead % p == 0:
            continue
        g = _gcd_mod(list(pa), list(pb), p)
        d = len(g) - 1
        if d == 0:
            return ONE
        if best_deg is None or d < best_deg:
            best_deg, modulus, acc = d, p, g
        elif d > best_deg:
            continue
        else:
            acc = [
                _crt(ca, modulus, cg, p) for ca, cg in zip(acc, g)
            ]
            modulus *= p
        coeffs = [_rational_reconstruct(c, modulus) for c in acc]
        if any(c is None for c in coeffs):
            continue
        cand = Poly(coeffs)
        if not (_divmod(a, cand)[1] or _divmod(b, cand)[1]):
            return cand
    return _euclid_gcd(a, b)


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t


def lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    return (a * b).exact_div(gcd(a, b)).monic()

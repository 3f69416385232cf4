"""Exact arithmetic in real quadratic fields.

A value is (p + q*sqrt(d)) / r with arbitrary-precision integers p, q, r
and a square-free radicand d.  Circle points, interval lengths, Lagrange
constants and spectrum values are all instances of this one type, so every
comparison made by the package is an exact integer sign computation and
floating point never enters any decision.

Addition, subtraction, multiplication and division require both operands
to live in the same field (rationals, having q == 0, are compatible with
everything).  Comparisons work across distinct radicands as well, via sign
analysis of the difference; see :func:`QuadReal.compare`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from ._ntheory import squarefree_split

__all__ = ["QuadReal", "MixedRadicandError", "sqrt", "dist_to_int"]


class MixedRadicandError(ValueError):
    """Arithmetic attempted between values of distinct quadratic fields."""


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _sign_pair(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d), for integers a, b and d >= 0."""
    if b == 0 or d == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    s = _sign(a * a - b * b * d)
    return s if a > 0 else -s


def _floor_parts(p: int, q: int, d: int, r: int) -> int:
    """floor((p + q*sqrt(d)) / r) with r > 0."""
    if q == 0 or d == 0:
        return p // r
    m = q * q * d
    s = isqrt(m)
    t = s if q > 0 else (-s if s * s == m else -s - 1)
    n = (p + t) // r
    # t only brackets q*sqrt(d) within one unit; settle the candidate exactly.
    if _sign_pair(p - (n + 1) * r, q, d) >= 0:
        n += 1
    return n


class QuadReal:
    """Immutable exact real (p + q*sqrt(d)) / r."""

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if q == 0 or d == 0:
            q = 0
            d = 0
        else:
            f, d = squarefree_split(d)
            q *= f
            if d == 1:
                p += q
                q = 0
                d = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p //= g
            q //= g
            r //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("QuadReal is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_fraction(cls, fr: Fraction | int) -> "QuadReal":
        fr = Fraction(fr)
        return cls(fr.numerator, 0, 0, fr.denominator)

    def to_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError("value is irrational")
        return Fraction(self.p, self.r)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    # -- field compatibility -------------------------------------------------

    def _merged_d(self, other: "QuadReal") -> int:
        if self.q == 0:
            return other.d
        if other.q == 0 or other.d == self.d:
            return self.d
        raise MixedRadicandError(
            f"cannot mix sqrt({self.d}) with sqrt({other.d}) arithmetic"
        )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._merged_d(other)
        return QuadReal(
            self.p * other.r + other.p * self.r,
            self.q * other.r + other.q * self.r,
            d,
            self.r * other.r,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return QuadReal(-self.p, -self.q, self.d, self.r)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._merged_d(other)
        return QuadReal(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
            self.r * other.r,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "QuadReal":
        den = self.p * self.p - self.q * self.q * self.d
        if den == 0:
            raise ZeroDivisionError("division by zero")
        return QuadReal(self.r * self.p, -self.r * self.q, self.d, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        self._merged_d(other)
        return self * other._inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self._inverse()

    def __abs__(self):
        return -self if self.compare(_ZERO) < 0 else self

    # -- comparison ----------------------------------------------------------

    def compare(self, other) -> int:
        """Exact sign of self - other; works across distinct radicands."""
        other = _coerce(other)
        if other is None:
            raise TypeError(f"cannot compare QuadReal with {type(other)!r}")
        if self.q == 0 or other.q == 0 or self.d == other.d:
            d = self.d if self.q else other.d
            a = self.p * other.r - other.p * self.r
            b = self.q * other.r - other.q * self.r
            return _sign_pair(a, b, d)
        # Distinct radicands: sign of X + Y with X = A + B*sqrt(d1) and
        # Y = C*sqrt(d2).  When the two parts pull in opposite directions,
        # squaring lands back in the first field.
        a = self.p * other.r - other.p * self.r
        b = self.q * other.r
        c = -other.q * self.r
        sx = _sign_pair(a, b, self.d)
        sy = _sign(c)
        if sx == 0:
            return sy
        if sy == 0 or sx == sy:
            return sx
        s = _sign_pair(a * a + b * b * self.d - c * c * other.d, 2 * a * b, self.d)
        if s > 0:
            return sx
        if s < 0:
            return sy
        return 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (
            self.p == other.p
            and self.q == other.q
            and self.d == other.d
            and self.r == other.r
        )

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def sign(self) -> int:
        return _sign_pair(self.p, self.q, self.d)

    # -- integer part --------------------------------------------------------

    def floor(self) -> int:
        return _floor_parts(self.p, self.q, self.d, self.r)

    __floor__ = floor

    def frac(self) -> "QuadReal":
        """Fractional part, exact, in [0, 1)."""
        n = self.floor()
        return QuadReal(self.p - n * self.r, self.q, self.d, self.r)

    # -- rendering -----------------------------------------------------------

    def decimal(self, digits: int = 40) -> str:
        """Correctly rounded positional decimal with `digits` significant digits."""
        if digits < 1:
            raise ValueError("need at least one significant digit")
        if not self:
            return "0"
        x = abs(self)
        ip = x.floor()
        if ip > 0:
            e = len(str(ip)) - 1
        else:
            e = 0
            scale = 10
            while _floor_parts(x.p * scale, x.q * scale, x.d, x.r) == 0:
                e -= 1
                scale *= 10
            e -= 1
        shift = digits - 1 - e
        if shift >= 0:
            sp, sq, sr = x.p * 10**shift, x.q * 10**shift, x.r
        else:
            sp, sq, sr = x.p, x.q, x.r * 10**-shift
        # round half up: floor((2*scaled + 1) / 2)
        n = _floor_parts(2 * sp + sr, 2 * sq, x.d, 2 * sr)
        if n >= 10**digits:
            n //= 10
            e += 1
        s = str(n)
        sign = "-" if self.compare(_ZERO) < 0 else ""
        if e >= digits - 1:
            return sign + s + "0" * (e - digits + 1)
        if e >= 0:
            return sign + s[: e + 1] + "." + s[e + 1 :]
        return sign + "0." + "0" * (-e - 1) + s

    def __float__(self):
        out = self.p / self.r
        if self.q:
            out += self.q * self.d**0.5 / self.r
        return out

    def __str__(self):
        if self.q == 0:
            return str(self.p) if self.r == 1 else f"{self.p}/{self.r}"
        if self.q == 1:
            root = f"sqrt({self.d})"
        elif self.q == -1:
            root = f"-sqrt({self.d})"
        else:
            root = f"{self.q}*sqrt({self.d})"
        body = root if self.p == 0 else f"{self.p}{'+' if self.q > 0 else ''}{root}"
        return body if self.r == 1 else f"({body})/{self.r}"

    def __repr__(self):
        return f"QuadReal({self})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "q": str(self.q),
            "d": str(self.d),
            "r": str(self.r),
            "decimal": self.decimal(40),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuadReal":
        return cls(int(obj["p"]), int(obj["q"]), int(obj["d"]), int(obj["r"]))


def _coerce(x) -> QuadReal | None:
    if isinstance(x, QuadReal):
        return x
    if isinstance(x, int):
        return QuadReal(x)
    if isinstance(x, Fraction):
        return QuadReal(x.numerator, 0, 0, x.denominator)
    return None


_ZERO = QuadReal(0)


def sqrt(n: int) -> QuadReal:
    """Exact square root of a nonnegative integer."""
    return QuadReal(0, 1, n, 1)


def dist_to_int(x: QuadReal) -> QuadReal:
    """Distance from x to the nearest integer, exact."""
    f = x.frac()
    other = QuadReal(f.r - f.p, -f.q, f.d, f.r)  # 1 - f
    return f if f.compare(other) <= 0 else other

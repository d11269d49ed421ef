"""Exact scalar arithmetic in the field Q(sqrt2, i).

Every exact quantity in this package lives in the number field generated over
the rationals by sqrt(2) and the imaginary unit.  sqrt(2) is forced on us by
the orthonormal coordinate bases of the matrix algebras (off-diagonal units
carry a 1/sqrt2 normalization) and by half-integer powers of 2 in norm
bookkeeping; i is needed for complexified algebra elements and Lie brackets.

A scalar is stored as four Fractions (ra, rb, ia, ib) meaning

    (ra + rb*sqrt2) + i*(ia + ib*sqrt2).

All operations are exact.  Division rationalizes first by the complex
conjugate and then by the sqrt2-conjugate.  Comparisons are defined for real
values only and use an exact sign computation (a + b*sqrt2 > 0 is decided by
comparing a^2 with 2 b^2 when the signs of a and b disagree).
"""

from __future__ import annotations

from fractions import Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} into an exact scalar component")


class Scalar:
    """An element of Q(sqrt2, i), kept in exact rational components."""

    __slots__ = ("ra", "rb", "ia", "ib")

    def __init__(self, ra=0, rb=0, ia=0, ib=0):
        self.ra = _as_fraction(ra)
        self.rb = _as_fraction(rb)
        self.ia = _as_fraction(ia)
        self.ib = _as_fraction(ib)

    # -- constructors -------------------------------------------------

    @staticmethod
    def of(x) -> "Scalar":
        """Coerce an int, Fraction, or Scalar into a Scalar."""
        if isinstance(x, Scalar):
            return x
        return Scalar(_as_fraction(x))

    @staticmethod
    def rt2(coef=1) -> "Scalar":
        """coef * sqrt(2)."""
        return Scalar(0, coef)

    @staticmethod
    def imag_unit() -> "Scalar":
        return Scalar(0, 0, 1)

    # -- structure ----------------------------------------------------

    def is_real(self) -> bool:
        return not self.ia and not self.ib

    def is_rational(self) -> bool:
        return not self.rb and self.is_real()

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.ra

    def real(self) -> "Scalar":
        return Scalar(self.ra, self.rb)

    def imag(self) -> "Scalar":
        return Scalar(self.ia, self.ib)

    def conj(self) -> "Scalar":
        return Scalar(self.ra, self.rb, -self.ia, -self.ib)

    # -- arithmetic ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.ra or self.rb or self.ia or self.ib)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.ra == other.ra and self.rb == other.rb
                and self.ia == other.ia and self.ib == other.ib)

    __hash__ = None  # mutable-free but not meant for dict keys

    def __neg__(self) -> "Scalar":
        return Scalar(-self.ra, -self.rb, -self.ia, -self.ib)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(self.ra + other, self.rb, self.ia, self.ib)
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.ra + other.ra, self.rb + other.rb,
                      self.ia + other.ia, self.ib + other.ib)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(self.ra - other, self.rb, self.ia, self.ib)
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.ra - other.ra, self.rb - other.rb,
                      self.ia - other.ia, self.ib - other.ib)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(self.ra * other, self.rb * other,
                          self.ia * other, self.ib * other)
        if not isinstance(other, Scalar):
            return NotImplemented
        # (x1 + i y1)(x2 + i y2) with x, y pairs over Q(sqrt2)
        if not (self.ia or self.ib or other.ia or other.ib):
            a, b = _pair_mul(self.ra, self.rb, other.ra, other.rb)
            return Scalar(a, b)
        xa, xb = _pair_mul(self.ra, self.rb, other.ra, other.rb)
        ya, yb = _pair_mul(self.ia, self.ib, other.ia, other.ib)
        ua, ub = _pair_mul(self.ra, self.rb, other.ia, other.ib)
        va, vb = _pair_mul(self.ia, self.ib, other.ra, other.rb)
        return Scalar(xa - ya, xb - yb, ua + va, ub + vb)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.is_real():
            a, b = _pair_inv(self.ra, self.rb)
            return Scalar(a, b)
        # 1/z = conj(z) / (z conj(z)); the denominator is real
        na, nb = _pair_mul(self.ra, self.rb, self.ra, self.rb)
        ma, mb = _pair_mul(self.ia, self.ib, self.ia, self.ib)
        da, db = _pair_inv(na + ma, nb + mb)
        return self.conj() * Scalar(da, db)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1, 1) / other
            return self * inv
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- order (real values only) --------------------------------------

    def sign(self) -> int:
        """Exact sign of a real scalar (-1, 0, +1)."""
        if not self.is_real():
            raise ValueError(f"sign of non-real scalar {self}")
        a, b = self.ra, self.rb
        if not a and not b:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # signs disagree: compare a^2 against 2 b^2 (never equal, sqrt2 irrational)
        if a * a > 2 * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __lt__(self, other):
        other = Scalar.of(other) if isinstance(other, (int, Fraction)) else other
        return (self - other).sign() < 0

    def __le__(self, other):
        other = Scalar.of(other) if isinstance(other, (int, Fraction)) else other
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = Scalar.of(other) if isinstance(other, (int, Fraction)) else other
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = Scalar.of(other) if isinstance(other, (int, Fraction)) else other
        return (self - other).sign() >= 0

    # -- numeric views --------------------------------------------------

    _SQRT2 = 2 ** 0.5

    def __float__(self) -> float:
        if not self.is_real():
            raise ValueError(f"float() of non-real scalar {self}")
        return float(self.ra) + float(self.rb) * Scalar._SQRT2

    def __complex__(self) -> complex:
        return complex(float(self.ra) + float(self.rb) * Scalar._SQRT2,
                       float(self.ia) + float(self.ib) * Scalar._SQRT2)

    # -- display --------------------------------------------------------

    def __repr__(self) -> str:
        def part(a, b):
            chunks = []
            if a:
                chunks.append(str(a))
            if b:
                chunks.append(f"{b}*r2" if b != 1 else "r2")
            return "+".join(chunks).replace("+-", "-") or "0"

        re_s = part(self.ra, self.rb)
        if self.is_real():
            return re_s
        im_s = part(self.ia, self.ib)
        return f"({re_s})+({im_s})i"


def _pair_mul(a1: Fraction, b1: Fraction, a2: Fraction, b2: Fraction):
    """(a1 + b1 r2)(a2 + b2 r2) in Q(sqrt2)."""
    if not b1 and not b2:
        return a1 * a2, _F0
    return a1 * a2 + 2 * b1 * b2, a1 * b2 + b1 * a2


def _pair_inv(a: Fraction, b: Fraction):
    """1 / (a + b r2) in Q(sqrt2)."""
    if not b:
        return _F1 / a, _F0
    d = a * a - 2 * b * b
    return a / d, -b / d


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar.rt2()
HALF_SQRT2 = Scalar(0, Fraction(1, 2))  # 1/sqrt2
IMAG = Scalar.imag_unit()


def sc(x) -> Scalar:
    """Shorthand coercion used throughout the package."""
    return Scalar.of(x)

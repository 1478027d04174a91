"""Exact arithmetic over F_p, F_{p^2}, Q and Q(i).

A field is described by a small immutable object (``PrimeField``,
``QuadraticField``, ``RationalField``, ``GaussianField``).  Elements are
stored as canonical *raw* values so that hot loops in the matrix code can
work on plain Python values:

    prime       int in [0, p)
    quadratic   (a, b) with a, b in [0, p), meaning a + b*x, x^2 = n
    rationals   Fraction
    gaussian    (Fraction, Fraction), meaning re + im*i

``FieldElement`` wraps a raw value together with its field for user-facing
code.  Equality is representational equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional

from .errors import CharTwoForbidden, DivisionByZero, FieldMismatch, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _sqrt_mod_p(a: int, p: int) -> Optional[int]:
    """Tonelli-Shanks; returns the smaller of the two roots or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def _rational_sqrt(a: Fraction) -> Optional[Fraction]:
    if a < 0:
        return None
    n, d = isqrt(a.numerator), isqrt(a.denominator)
    if n * n == a.numerator and d * d == a.denominator:
        return Fraction(n, d)
    return None


class Field:
    """Common interface.  Subclasses implement the raw operations."""

    kind: str = ""
    p: Optional[int] = None

    def key(self):
        return (self.kind, self.p, getattr(self, "nonresidue", None))

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # convenience -------------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self}")
            return value
        return FieldElement(self, self.convert(value))

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def elements(self) -> list:
        raise TypeError(f"{self} is infinite")

    @property
    def order(self) -> Optional[int]:
        return None

    def i_unit(self):
        """A raw square root of -1, or None."""
        return self.sqrt(self.neg(self.one))


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        self.p = p
        self.zero, self.one = 0, 1

    def __repr__(self):
        return f"F_{self.p}"

    @property
    def order(self):
        return self.p

    def convert(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return list(range(self.p))

    def code(self, a) -> int:
        return a

    def from_code(self, c: int):
        return c

    def sqrt(self, a):
        return _sqrt_mod_p(a, self.p)

    def fmt(self, a) -> str:
        return str(a)


class QuadraticField(Field):
    """F_p[x]/(x^2 - n) with n a quadratic nonresidue."""

    kind = "quadratic"

    def __init__(self, p: int, nonresidue: int):
        self.p = p
        self.nonresidue = nonresidue
        self.zero, self.one = (0, 0), (1, 0)

    def __repr__(self):
        return f"F_{self.p}^2[x^2={self.nonresidue}]"

    @property
    def order(self):
        return self.p * self.p

    def convert(self, value):
        if isinstance(value, tuple):
            return (value[0] % self.p, value[1] % self.p)
        if isinstance(value, Fraction):
            num = self.from_int(value.numerator)
            return self.div(num, self.from_int(value.denominator))
        return (int(value) % self.p, 0)

    def from_int(self, n: int):
        return (n % self.p, 0)

    def add(self, a, b):
        p = self.p
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)

    def sub(self, a, b):
        p = self.p
        return ((a[0] - b[0]) % p, (a[1] - b[1]) % p)

    def neg(self, a):
        return (-a[0] % self.p, -a[1] % self.p)

    def mul(self, a, b):
        p = self.p
        return ((a[0] * b[0] + self.nonresidue * a[1] * b[1]) % p,
                (a[0] * b[1] + a[1] * b[0]) % p)

    def inv(self, a):
        p = self.p
        norm = (a[0] * a[0] - self.nonresidue * a[1] * a[1]) % p
        if norm == 0:
            raise DivisionByZero("inverse of 0")
        ni = pow(norm, p - 2, p)
        return (a[0] * ni % p, -a[1] * ni % p)

    def elements(self):
        p = self.p
        return [(c % p, c // p) for c in range(p * p)]

    def code(self, a) -> int:
        return a[0] + self.p * a[1]

    def from_code(self, c: int):
        return (c % self.p, c // self.p)

    def sqrt(self, a):
        p, n = self.p, self.nonresidue
        a0, a1 = a
        if a1 == 0:
            r = _sqrt_mod_p(a0, p)
            if r is not None:
                cands = [(r, 0)]
            else:
                # a0 = n * c^2, so sqrt(a0) = c*x
                c = _sqrt_mod_p(a0 * pow(n, p - 2, p), p)
                cands = [(0, c)]
        else:
            r = _sqrt_mod_p(a0 * a0 - n * a1 * a1, p)
            if r is None:
                return None
            half = pow(2, p - 2, p)
            cands = []
            for s in (r, -r):
                x = _sqrt_mod_p((a0 + s) * half, p)
                if x:
                    y = a1 * pow(2 * x, p - 2, p) % p
                    cands.append((x, y))
                    break
            if not cands:
                return None
        w = cands[0]
        assert self.mul(w, w) == (a0, a1)
        return min(w, self.neg(w), key=self.code)

    def fmt(self, a) -> str:
        if a[1] == 0:
            return str(a[0])
        return f"{a[0]}+{a[1]}x"


class RationalField(Field):
    kind = "rationals"

    def __init__(self):
        self.zero, self.one = Fraction(0), Fraction(1)

    def __repr__(self):
        return "Q"

    def convert(self, value):
        return Fraction(value)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / a

    def sqrt(self, a):
        return _rational_sqrt(a)

    def fmt(self, a) -> str:
        return str(a)


class GaussianField(Field):
    kind = "gaussian_rationals"

    def __init__(self):
        self.zero, self.one = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))

    def __repr__(self):
        return "Q(i)"

    def convert(self, value):
        if isinstance(value, tuple):
            return (Fraction(value[0]), Fraction(value[1]))
        if isinstance(value, complex):
            return (Fraction(value.real), Fraction(value.imag))
        return (Fraction(value), Fraction(0))

    def from_int(self, n: int):
        return (Fraction(n), Fraction(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def inv(self, a):
        norm = a[0] * a[0] + a[1] * a[1]
        if norm == 0:
            raise DivisionByZero("inverse of 0")
        return (a[0] / norm, -a[1] / norm)

    def sqrt(self, a):
        re, im = a
        r = _rational_sqrt(re * re + im * im)
        if r is None:
            return None
        x = _rational_sqrt((re + r) / 2)
        if x is None:
            return None
        if x == 0:
            y = _rational_sqrt(-re)
            if y is None:
                return None
        else:
            y = im / (2 * x)
        w = (x, y)
        assert self.mul(w, w) == a
        if x < 0 or (x == 0 and y < 0):
            w = self.neg(w)
        return w

    def fmt(self, a) -> str:
        re, im = a
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        return f"{re}{'+' if im > 0 else '-'}{abs(im)}i"


KINDS = {
    "prime": "prime",
    "quadratic": "quadratic",
    "rationals": "rationals",
    "rational": "rationals",
    "gaussian": "gaussian_rationals",
    "gaussian_rationals": "gaussian_rationals",
}


@lru_cache(maxsize=None)
def make_field(kind: str, p: Optional[int] = None, nonresidue: Optional[int] = None) -> Field:
    """Build a validated field descriptor.

    >>> make_field("quadratic", 3).nonresidue
    2
    """
    kind = KINDS.get(kind, kind)
    if kind == "rationals":
        return RationalField()
    if kind == "gaussian_rationals":
        return GaussianField()
    if kind not in ("prime", "quadratic"):
        raise ValueError(f"unknown field kind {kind!r}")
    if p is None or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise CharTwoForbidden("characteristic 2 is excluded")
    if kind == "prime":
        return PrimeField(p)
    if nonresidue is None:
        nonresidue = next(n for n in range(2, p) if legendre(n, p) == -1)
    elif legendre(nonresidue, p) != -1:
        raise ValueError(f"{nonresidue} is a quadratic residue mod {p}")
    return QuadraticField(p, nonresidue % p)


def finite_field(q: int) -> Field:
    """F_q for q = p or q = p^2."""
    if is_prime(q):
        return make_field("prime", q)
    r = isqrt(q)
    if r * r == q and is_prime(r):
        return make_field("quadratic", r)
    raise NotPrime(f"{q} is neither a prime nor the square of a prime")


def parse_field(text: str) -> Field:
    """Parse CLI-style field names: 'F7', 'F_9', 'Q', 'Q(i)'."""
    t = text.strip().replace("_", "").replace(" ", "")
    if t in ("Q", "QQ", "rationals"):
        return make_field("rationals")
    if t in ("Q(i)", "Qi", "gaussian"):
        return make_field("gaussian_rationals")
    if t[:1] in "Ff" and t[1:].isdigit():
        return finite_field(int(t[1:]))
    if t.isdigit():
        return finite_field(int(t))
    raise ValueError(f"cannot parse field {text!r}")


class FieldElement:
    """An exact element together with its field."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.raw
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.raw, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.raw, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.raw))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.raw, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.raw, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(b, self.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.raw))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.power(self.raw, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.raw))

    def is_zero(self) -> bool:
        return self.raw == self.field.zero

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, (int, Fraction)):
            return self.raw == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __repr__(self):
        return f"{self.field!r}({self.field.fmt(self.raw)})"

    def __str__(self):
        return self.field.fmt(self.raw)


def arith(a: FieldElement, b: Optional[FieldElement], op: str) -> FieldElement:
    """Apply one of add, sub, mul, div, neg, inv."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if not isinstance(b, FieldElement) or b.field != a.field:
        raise FieldMismatch("operands live in different fields")
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__,
            "div": a.__truediv__}[op](b)


def square_root(a: FieldElement) -> Optional[FieldElement]:
    """Smallest witness w with w*w == a, or None for a non-square."""
    w = a.field.sqrt(a.raw)
    return None if w is None else FieldElement(a.field, w)


def has_i(field: Field) -> Optional[FieldElement]:
    """A square root of -1 in the field, if there is one."""
    w = field.i_unit()
    return None if w is None else FieldElement(field, w)

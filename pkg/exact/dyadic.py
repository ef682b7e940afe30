# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
"""
Dyadic rationals m/2^k with arbitrary-precision numerators.

Values are kept in canonical form at construction: the exponent is zero or
the numerator is odd, so equality and hashing work on the raw pair.
"""
import re
from fractions import Fraction
from functools import total_ordering

from util.errors import ParseError, DomainError


_DYADIC_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(?:2\s*\^\s*(\d+)|(\d+)))?\s*$')


@total_ordering
class Dyadic(object):
    __slots__ = ('num', 'exp')

    def __init__(self, num, exp=0):
        num = int(num)
        exp = int(exp)
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        elif exp > 0:
            tz = (num & -num).bit_length() - 1
            if tz:
                shift = min(tz, exp)
                num >>= shift
                exp -= shift
        self.num = num
        self.exp = exp

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, bool):
            raise DomainError("not a dyadic value: {!r}".format(value))
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            den = value.denominator
            if den & (den - 1):
                raise DomainError("{} is not dyadic".format(value))
            return cls(value.numerator, den.bit_length() - 1)
        if isinstance(value, str):
            return dyadic_parse(value)
        raise DomainError("not a dyadic value: {!r}".format(value))

    # -- arithmetic -------------------------------------------------------
    def _aligned(self, other):
        if self.exp >= other.exp:
            return self.num, other.num << (self.exp - other.exp), self.exp
        return self.num << (other.exp - self.exp), other.num, other.exp

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int):
                other = Dyadic(other)
            else:
                return NotImplemented
        a, b, e = self._aligned(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int):
                other = Dyadic(other)
            else:
                return NotImplemented
        a, b, e = self._aligned(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        if isinstance(other, int):
            return Dyadic(other) - self
        return NotImplemented

    def __mul__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int):
                other = Dyadic(other)
            else:
                return NotImplemented
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __abs__(self):
        return Dyadic(abs(self.num), self.exp)

    def scale_pow2(self, k):
        """Exact self * 2^k for any signed integer k."""
        return Dyadic(self.num, self.exp - int(k))

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, int) and not isinstance(other, bool):
            return self.exp == 0 and self.num == other
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Dyadic):
            if isinstance(other, int):
                other = Dyadic(other)
            else:
                return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __hash__(self):
        if self.exp == 0:
            return hash(self.num)
        return hash((self.num, self.exp))

    def __bool__(self):
        return self.num != 0

    # -- inspection -------------------------------------------------------
    def floor(self):
        return self.num >> self.exp

    def floor_log2(self):
        """Largest k with 2^k <= self; self must be positive."""
        if self.num <= 0:
            raise DomainError("floor_log2 of non-positive {}".format(self))
        return self.num.bit_length() - 1 - self.exp

    def ceil_log2(self):
        """Smallest k with 2^k >= self; self must be positive."""
        k = self.floor_log2()
        if self.num & (self.num - 1):
            k += 1
        return k

    def is_integer(self):
        return self.exp == 0

    def is_power_of_two(self):
        """2^k for some signed k; in canonical form the numerator is then a power of two."""
        return self.num > 0 and self.num & (self.num - 1) == 0

    def to_fraction(self):
        return Fraction(self.num, 1 << self.exp)

    def __float__(self):
        return self.num / (1 << self.exp)

    def __str__(self):
        return dyadic_format(self)

    def __repr__(self):
        return "Dyadic({})".format(dyadic_format(self))

    def __reduce__(self):
        return (Dyadic, (self.num, self.exp))


def pow2(k):
    return Dyadic(1, -int(k))


def dyadic_add(a, b):
    return a + b


def dyadic_sub(a, b):
    return a - b


def dyadic_mul(a, b):
    return a * b


def dyadic_scale_pow2(a, k):
    return a.scale_pow2(k)


def dyadic_format(a):
    if a.exp == 0:
        return str(a.num)
    return "{}/2^{}".format(a.num, a.exp)


def dyadic_parse(text):
    m = _DYADIC_RE.match(text)
    if m is None:
        raise ParseError("malformed dyadic: {!r}".format(text))
    num = int(m.group(1))
    if m.group(2) is not None:
        return Dyadic(num, int(m.group(2)))
    if m.group(3) is not None:
        den = int(m.group(3))
        if den <= 0 or den & (den - 1):
            raise ParseError("denominator of {!r} is not a power of two".format(text))
        return Dyadic(num, den.bit_length() - 1)
    return Dyadic(num)

"""Exact scalar arithmetic over the rationals or a prime field GF(p).

Rational scalars are `fractions.Fraction` values (always reduced, positive
denominator by construction).  GF(p) scalars are plain ints in [0, p).
Containers carry the field; scalars themselves stay lightweight.
"""

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of the two concrete fields."""

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero

    def format(self, a):
        raise NotImplementedError

    def parse(self, text, line=None):
        raise NotImplementedError


class RationalField(Field):
    """The field of rational numbers with exact Fraction arithmetic."""

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def neg(self, a):
        return -a

    def from_int(self, k):
        return Fraction(k)

    def format(self, a):
        return str(a)

    def parse(self, text, line=None):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {text!r}: {exc}", line)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """GF(p) with residues stored as ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return (a * pow(b, -1, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def from_int(self, k):
        return k % self.p

    def format(self, a):
        return str(a % self.p)

    def parse(self, text, line=None):
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.div(int(num) % self.p, int(den) % self.p)
            return int(text) % self.p
        except (ValueError, DivisionByZero) as exc:
            raise ParseError(f"bad GF({self.p}) scalar {text!r}: {exc}", line)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def check_same_field(f, g):
    if f != g:
        raise FieldMismatch(f"cannot mix {f!r} and {g!r}")


def field_ops(field, a, b, op):
    """Dispatch a single exact field operation by name."""
    try:
        fn = {"add": field.add, "sub": field.sub,
              "mul": field.mul, "div": field.div}[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}")
    return fn(a, b)

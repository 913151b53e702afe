"""Coefficient fields: the rationals and prime fields F_p.

Elements are plain Python values (Fraction over Q, int in [0, p) over F_p);
the FieldSpec object supplies the arithmetic.  Everything is exact, there
is no floating point anywhere in the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RATIONALS = "Q"
PRIME_FIELD = "Fp"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    # deterministic Miller-Rabin, valid far beyond any prime we will see
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field k: kind 'Q' or 'Fp' with the characteristic."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")

    @property
    def kind(self) -> str:
        return RATIONALS if self.characteristic == 0 else PRIME_FIELD

    # -- element constructors ------------------------------------------------

    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def from_int(self, n: int):
        if self.characteristic == 0:
            return Fraction(n)
        return n % self.characteristic

    def from_fraction(self, num: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator in coefficient")
        if self.characteristic == 0:
            return Fraction(num, den)
        p = self.characteristic
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} not invertible mod {p}")
        return num * pow(den, -1, p) % p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        c = a + b
        return c if self.characteristic == 0 else c % self.characteristic

    def sub(self, a, b):
        c = a - b
        return c if self.characteristic == 0 else c % self.characteristic

    def mul(self, a, b):
        c = a * b
        return c if self.characteristic == 0 else c % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverting zero field element")
        if self.characteristic == 0:
            return Fraction(1) / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == self.one()

    # -- formatting ----------------------------------------------------------

    def element_str(self, a) -> str:
        if self.characteristic == 0 and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


QQ = FieldSpec(0)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p)

"""Exact arithmetic in cyclotomic fields.

A CycloNum is an element of Q(zeta_M) written in the power basis of
Q[x]/Phi_M(x) with Fraction coordinates. Conductors congruent to 2 mod 4
are folded onto M/2, so the stored conductor is never 2 mod 4 and two
operands always meet at the lcm of their conductors.

The complex embedding is zeta_M = exp(2*pi*i/M).
"""
from __future__ import annotations

import cmath
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import Poly, Symbol, cyclotomic_poly, factorint

from config import check_conductor

logger = logging.getLogger(__name__)

Scalar = int | Fraction


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first"""
    x = Symbol("x")
    coeffs = Poly(cyclotomic_poly(m, x), x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(m: int, dense: list[Fraction]) -> dict[int, Fraction]:
    """Reduce a dense exponent vector modulo Phi_m and drop zero coordinates"""
    phi = cyclotomic_coefficients(m)
    deg = len(phi) - 1
    for d in range(len(dense) - 1, deg - 1, -1):
        c = dense[d]
        if c:
            shift = d - deg
            for k, a in enumerate(phi):
                if a:
                    dense[shift + k] -= c * a
    return {k: dense[k] for k in range(min(deg, len(dense))) if dense[k]}


def _from_terms(m: int, terms: dict[int, Fraction]) -> CycloNum:
    """Build the value sum c * zeta_m^k for arbitrary integer exponents k"""
    if m % 4 == 2:
        half = m // 2
        step = (half + 1) // 2
        folded: dict[int, Fraction] = {}
        for k, c in terms.items():
            k %= m
            e = (k * step) % half
            folded[e] = folded.get(e, Fraction(0)) + (-c if k % 2 else c)
        m, terms = half, folded
    check_conductor(m)
    dense = [Fraction(0)] * m
    for k, c in terms.items():
        dense[k % m] += c
    return CycloNum(m, _reduce(m, dense))


class CycloNum:
    """Immutable element of a cyclotomic field"""

    __slots__ = ("conductor", "coords")

    def __init__(self, conductor: int = 1, coords: dict[int, Fraction] | None = None):
        self.conductor = conductor
        self.coords = coords if coords is not None else {}

    # construction

    @classmethod
    def from_rational(cls, value: Scalar) -> CycloNum:
        value = Fraction(value)
        return cls(1, {0: value} if value else {})

    @classmethod
    def coerce(cls, value: CycloNum | Scalar) -> CycloNum:
        if isinstance(value, CycloNum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_rational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to CycloNum")

    # structure

    def lift(self, target: int) -> CycloNum:
        """Re-express the value at a multiple of its conductor"""
        if target == self.conductor:
            return self
        if target % self.conductor or target % 4 == 2:
            raise ValueError(f"cannot lift conductor {self.conductor} to {target}")
        factor = target // self.conductor
        return _from_terms(target, {k * factor: c for k, c in self.coords.items()})

    def _common(self, other: CycloNum) -> tuple[int, dict, dict]:
        m = lcm(self.conductor, other.conductor)
        return m, self.lift(m).coords, other.lift(m).coords

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def is_rational(self) -> bool:
        return all(k == 0 for k in self.coords)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.render()} is not rational")
        return self.coords.get(0, Fraction(0))

    def key(self, conductor: int) -> tuple:
        """Hashable canonical form at a fixed common conductor"""
        return tuple(sorted(self.lift(conductor).coords.items()))

    # arithmetic

    def __add__(self, other: CycloNum | Scalar) -> CycloNum:
        other = CycloNum.coerce(other)
        m, a, b = self._common(other)
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, Fraction(0)) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return CycloNum(m, out)

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.conductor, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other: CycloNum | Scalar) -> CycloNum:
        return self + (-CycloNum.coerce(other))

    def __rsub__(self, other: CycloNum | Scalar) -> CycloNum:
        return CycloNum.coerce(other) + (-self)

    def _scale(self, c: Fraction) -> CycloNum:
        if not c:
            return CycloNum()
        return CycloNum(self.conductor, {k: v * c for k, v in self.coords.items()})

    def __mul__(self, other: CycloNum | Scalar) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(other))
        other = CycloNum.coerce(other)
        if other.is_rational():
            return self._scale(other.coords.get(0, Fraction(0)))
        if self.is_rational():
            return other._scale(self.coords.get(0, Fraction(0)))
        m, a, b = self._common(other)
        dense = [Fraction(0)] * m
        for i, x in a.items():
            for j, y in b.items():
                dense[(i + j) % m] += x * y
        return CycloNum(m, _reduce(m, dense))

    __rmul__ = __mul__

    def galois(self, a: int) -> CycloNum:
        """Apply the automorphism zeta_M -> zeta_M^a (a coprime to M)"""
        m = self.conductor
        if gcd(a, m) != 1:
            raise ValueError(f"{a} is not a unit modulo {m}")
        return _from_terms(m, {k * a: c for k, c in self.coords.items()})

    def conjugate(self) -> CycloNum:
        return self.galois(-1)

    def inverse(self) -> CycloNum:
        if not self.coords:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.is_rational():
            return CycloNum.from_rational(1 / self.coords[0])
        m = self.conductor
        others = CycloNum.from_rational(1)
        for a in range(2, m):
            if gcd(a, m) == 1:
                others = others * self.galois(a)
        norm = (self * others).to_fraction()
        return others._scale(1 / norm)

    def __truediv__(self, other: CycloNum | Scalar) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return self._scale(1 / Fraction(other))
        return self * CycloNum.coerce(other).inverse()

    def __rtruediv__(self, other: CycloNum | Scalar) -> CycloNum:
        return CycloNum.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNum.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (CycloNum, int, Fraction)):
            return NotImplemented
        other = CycloNum.coerce(other)
        _, a, b = self._common(other)
        return a == b

    __hash__ = None

    # p-local integrality

    def is_p_integral(self, p: int) -> bool:
        """True iff every power-basis coordinate has denominator prime to p"""
        return all(c.denominator % p for c in self.coords.values())

    # rendering

    def __complex__(self) -> complex:
        m = self.conductor
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * k / m) for k, c in self.coords.items()),
            0j,
        )

    def render(self) -> str:
        """Exact expression string: sum of 'c * z(M)^k' terms"""
        if self.is_rational():
            return str(self.coords.get(0, Fraction(0)))
        return " + ".join(f"{c} * z({self.conductor})^{k}" for k, c in sorted(self.coords.items()))

    def decimal(self, digits: int = 6) -> str:
        z = complex(self)
        re = 0.0 if abs(z.real) < 10 ** -digits else z.real
        im = 0.0 if abs(z.imag) < 10 ** -digits else z.imag
        return f"{re:.{digits}f}{im:+.{digits}f}i"

    def __repr__(self) -> str:
        return f"CycloNum({self.render()!r})"

    __str__ = render


def parse(text: str) -> CycloNum:
    """Parse the render format back into a CycloNum"""
    text = text.strip()
    if text == "0":
        return CycloNum()
    total = CycloNum()
    for term in text.split(" + "):
        if " * z(" in term:
            coeff, rest = term.split(" * z(")
            m, k = rest.split(")^")
            total = total + make_root_of_unity(int(m), int(k)) * Fraction(coeff)
        else:
            total = total + Fraction(term)
    return total


def make_root_of_unity(m: int, k: int = 1) -> CycloNum:
    """zeta_m^k in canonical form"""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    return _from_terms(m, {k: Fraction(1)})


ONE = CycloNum.from_rational(1)
I = make_root_of_unity(4, 1)


def i_power(k: int) -> CycloNum:
    return make_root_of_unity(4, k)


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else (-1 if r == p - 1 else 0)


@lru_cache(maxsize=None)
def gauss_sum(p: int) -> CycloNum:
    """Quadratic Gauss sum over the odd prime p; equals i^(((p-1)/2)^2) sqrt(p)"""
    return _from_terms(p, {j: Fraction(_legendre(j, p)) for j in range(1, p)})


@lru_cache(maxsize=None)
def sqrt_int(n: int) -> CycloNum:
    """Positive square root of a positive integer as a cyclotomic number"""
    if n <= 0:
        raise ValueError(f"sqrt_int needs a positive integer, got {n}")
    result = ONE
    for prime, e in factorint(n).items():
        result = result * prime ** (e // 2)
        if e % 2:
            if prime == 2:
                root = make_root_of_unity(8, 1) + make_root_of_unity(8, 7)
            elif prime % 4 == 1:
                root = gauss_sum(prime)
            else:
                root = -(I * gauss_sum(prime))
            result = result * root
    return result


def sqrt_odd(q: int) -> CycloNum:
    """Positive sqrt(q) for odd q >= 1, built from quadratic Gauss sums"""
    if q <= 0 or q % 2 == 0:
        raise ValueError(f"sqrt_odd needs an odd positive integer, got {q}")
    return sqrt_int(q)


def sqrt_rational(value: Scalar) -> CycloNum:
    value = Fraction(value)
    if value < 0:
        raise ValueError(f"sqrt_rational needs a non-negative value, got {value}")
    if not value:
        return CycloNum()
    return sqrt_int(value.numerator * value.denominator) / value.denominator


def i_sqrt_odd(q: int) -> CycloNum:
    """i^((q-1)/2) * sqrt(q); the Gauss sum up to sign when q is prime, equal to it for q = 1, 3 mod 8"""
    return i_power((q - 1) // 2) * sqrt_odd(q)


def gauss_half(p: int, sign: int = 1) -> CycloNum:
    """(-1 + sign * i^((p-1)/2) sqrt(p)) / 2"""
    return (i_sqrt_odd(p) * sign - 1) / 2


def is_p_integral(a: CycloNum | Scalar, p: int) -> bool:
    return CycloNum.coerce(a).is_p_integral(p)


def conjugate(a: CycloNum | Scalar) -> CycloNum:
    return CycloNum.coerce(a).conjugate()


def csum(values) -> CycloNum:
    total = CycloNum()
    for v in values:
        total = total + v
    return total

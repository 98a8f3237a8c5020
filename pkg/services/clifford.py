"""Complex Clifford algebra C_n and the basic spin representation.

Basis monomials e_I are stored as bitmasks (bit k-1 for e_k); the product
sign of e_I e_J is (-1)^(#pairs i in I, j in J with i > j) and e_k^2 = 1.
"""
import logging
from functools import lru_cache

from config import VerificationError
from services.covers import CoverElt, lift_parity, multiply, reduced_word
from services.cyclo import I, CycloNum, i_power, sqrt_int

logger = logging.getLogger(__name__)

Terms = dict[int, CycloNum]


def _swap_sign(a: int, b: int) -> int:
    """Parity of the reordering needed for e_a e_b"""
    parity = 0
    while b:
        low = b & -b
        parity ^= bin(a & ~((low << 1) - 1)).count("1") & 1
        b ^= low
    return parity


class CliffordElt:
    """Element of C_n as a sparse map bitmask -> coefficient"""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Terms | None = None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def scalar(cls, n: int, value) -> "CliffordElt":
        return cls(n, {0: CycloNum.coerce(value)})

    @classmethod
    def basis(cls, n: int, indices) -> "CliffordElt":
        """The monomial e_i1 e_i2 ... in the given order"""
        out = cls.scalar(n, 1)
        for k in indices:
            out = out * cls(n, {1 << (k - 1): CycloNum.coerce(1)})
        return out

    def __add__(self, other: "CliffordElt") -> "CliffordElt":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return CliffordElt(self.n, out)

    def __neg__(self) -> "CliffordElt":
        return CliffordElt(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "CliffordElt") -> "CliffordElt":
        return self + (-other)

    def __mul__(self, other) -> "CliffordElt":
        if not isinstance(other, CliffordElt):
            c = CycloNum.coerce(other)
            return CliffordElt(self.n, {k: v * c for k, v in self.terms.items()})
        return cmul(self, other)

    __rmul__ = __mul__

    def coefficient(self, mask: int) -> CycloNum:
        return self.terms.get(mask, CycloNum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElt):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{bin(k)}: {v.render()}" for k, v in sorted(self.terms.items()))
        return f"CliffordElt(n={self.n}, {{{body}}})"


def cmul(x: CliffordElt, y: CliffordElt) -> CliffordElt:
    out: Terms = {}
    for a, u in x.terms.items():
        for b, v in y.terms.items():
            term = u * v
            if _swap_sign(a, b):
                term = -term
            key = a ^ b
            out[key] = out[key] + term if key in out else term
    return CliffordElt(x.n, out)


@lru_cache(maxsize=None)
def phi(cover: str, n: int, j: int) -> CliffordElt:
    """Image of t_j: (e_j + e_j+1)/sqrt 2, times i on the S^- cover"""
    coeff = sqrt_int(2) / 2
    if cover == "-":
        coeff = coeff * I
    return CliffordElt(n, {1 << (j - 1): coeff, 1 << j: coeff})


def lift_word(cover: str, n: int, word, sign: int = 0) -> CliffordElt:
    """Image of z^sign t_w1 ... t_wk"""
    out = CliffordElt.scalar(n, -1 if sign else 1)
    for j in word:
        out = out * phi(cover, n, j)
    return out


def image(x: CoverElt) -> CliffordElt:
    """Clifford image of a cover element"""
    return lift_word(x.cover, x.n, reduced_word(x.perm), x.sign ^ lift_parity(x.perm))


def full_element(n: int) -> int:
    return (1 << n) - 1


def cliff_char(x: CliffordElt, variant: str = "full", sign: int = 1) -> CycloNum:
    """Trace of x on an irreducible module.

    variant "full" is a simple module of C_n (for odd n the sign picks one
    of the two), "even" a simple module of the even subalgebra (for even n
    the sign picks one of the two).
    """
    n = x.n
    k, odd = divmod(n, 2)
    c0 = x.coefficient(0)
    top = x.coefficient(full_element(n))
    if variant == "full":
        if not odd:
            return c0 * 2 ** k
        return c0 * 2 ** k + top * (i_power(k) * 2 ** k) * sign
    if variant == "even":
        if any(bin(mask).count("1") % 2 for mask in x.terms):
            raise ValueError("the even module needs an element of the even subalgebra C_n^+")
        if odd:
            return c0 * 2 ** k
        if k == 0:
            return c0
        return c0 * 2 ** (k - 1) + top * (I * i_power(k - 1) * 2 ** (k - 1)) * sign
    raise ValueError(f"unknown Clifford module variant '{variant}'")


def associator(n: int) -> CliffordElt:
    """Odd-grading operator on the simple module of C_n for even n, squaring to 1"""
    if n % 2:
        raise ValueError("C_n has a grading associator only for even n")
    top = CliffordElt(n, {full_element(n): CycloNum.coerce(1)})
    return top if n % 4 == 0 else top * I


def basic_spin_value(x: CoverElt) -> CycloNum:
    """Character of the basic spin module restricted from C_n: 2^floor((n-1)/2) c_0"""
    return image(x).coefficient(0) * 2 ** ((x.n - 1) // 2)


@lru_cache(maxsize=None)
def cocycle_sign(cover: str, sigma_perm: tuple, tau_perm: tuple) -> int:
    """s with T(sigma) T(tau) = z^((1 - s)/2) T(sigma tau), read off the Clifford model"""
    n = len(sigma_perm)
    a = CoverElt(sigma_perm, 0, cover)
    b = CoverElt(tau_perm, 0, cover)
    lhs = image(a) * image(b)
    ab = CoverElt(tuple(sigma_perm[i] for i in tau_perm), 0, cover)
    rhs = image(ab)
    if lhs == rhs:
        s = 1
    elif lhs == -rhs:
        s = -1
    else:
        raise VerificationError(f"Clifford images of T({sigma_perm})T({tau_perm}) are not proportional")
    predicted = multiply(a, b).sign
    if (s == -1) != bool(predicted):
        raise VerificationError(f"cocycle mismatch for {sigma_perm}, {tau_perm} on cover {cover}")
    return s

"""The double cover of the normalizer N_p = C_p : C_(p-1) inside the cover of S_p.

Points are residues 0..p-1. c is r -> r + 1 and y is r -> b r for the
primitive root b returned by sympy. Every element is written uniquely as
o(c)^alpha y^beta z^s with y the canonical lift of y and o(c) the
odd-order lift of c. zeta_0 is induced from <o(c), z> with coset
representatives y^k, k = 0..p-2.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import isprime, primitive_root

from config import VerificationError
from services.covers import (
    CoverElt,
    lift,
    multiply,
    odd_lift,
    power,
    times_z,
)
from services.cyclo import CycloNum, i_sqrt_odd, make_root_of_unity
from services.monomial import Monomial

logger = logging.getLogger(__name__)

NormalForm = tuple[int, int, int]


@dataclass(frozen=True, slots=True)
class LinearLabel:
    """zeta_j^+ or zeta_j^- for 1 <= j <= (p-1)/2"""

    j: int
    sign: int

    def render(self) -> str:
        return f"zeta_{self.j}{'+' if self.sign > 0 else '-'}"


class NTilde:
    """Concrete model of the double cover of N_p"""

    def __init__(self, p: int, cover: str):
        if p < 3 or not isprime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        self.p = p
        self.cover = cover
        self.b = int(primitive_root(p))
        self.c_hat = odd_lift(tuple((r + 1) % p for r in range(p)), cover)
        self.y_hat = lift(tuple((self.b * r) % p for r in range(p)), cover)
        self.u = power(self.y_hat, p - 1).sign
        self.b_inverse = pow(self.b, -1, p)
        self.dlog = {pow(self.b, k, p): k for k in range(p - 1)}

    # elements

    @lru_cache(maxsize=None)
    def element(self, alpha: int, beta: int, s: int = 0) -> CoverElt:
        x = multiply(power(self.c_hat, alpha % self.p), power(self.y_hat, beta % (self.p - 1)))
        return times_z(x) if s % 2 else x

    @cached_property
    def elements(self) -> list[NormalForm]:
        return [(a, b, s) for a in range(self.p) for b in range(self.p - 1) for s in (0, 1)]

    def form_of_perm(self, perm: tuple[int, ...]) -> tuple[int, int]:
        """(alpha, beta) with perm = r -> b^beta r + alpha"""
        p = self.p
        alpha = perm[0]
        step = (perm[1] - alpha) % p
        if step == 0 or step not in self.dlog:
            raise ValueError(f"{perm} is not in N_{p}")
        beta = self.dlog[step]
        if any(perm[r] != (pow(self.b, beta, p) * r + alpha) % p for r in range(p)):
            raise ValueError(f"{perm} is not in N_{p}")
        return alpha, beta

    def normal_form(self, x: CoverElt) -> NormalForm:
        """(alpha, beta, s) of an element of the cover of S_p lying in the double cover of N_p"""
        alpha, beta = self.form_of_perm(x.perm)
        s = x.sign ^ self.element(alpha, beta, 0).sign
        return alpha, beta, s

    @staticmethod
    def parity(form: NormalForm) -> int:
        return form[1] % 2

    def type_index(self, form: NormalForm) -> int:
        """Index j of the N_p class y_j: 0 for p-cycles, p-1 for the identity, beta otherwise"""
        alpha, beta, _ = form
        if beta % (self.p - 1):
            return beta % (self.p - 1)
        return self.p - 1 if alpha % self.p == 0 else 0

    def type_of_perm(self, perm: tuple[int, ...]) -> int:
        return self.type_index(self.form_of_perm(perm) + (0,))

    def class_perm(self, j: int) -> tuple[int, ...]:
        """A permutation of N_p type j"""
        p = self.p
        if j == 0:
            return tuple((r + 1) % p for r in range(p))
        if j == p - 1:
            return tuple(range(p))
        return tuple((pow(self.b, j, p) * r) % p for r in range(p))

    # characters

    def linear_labels(self) -> list[LinearLabel]:
        return [LinearLabel(j, s) for j in range(1, (self.p + 1) // 2) for s in (1, -1)]

    def _omega(self, j: int) -> CycloNum:
        """zeta_j^+(y)"""
        k = j - 1
        if self.u == 0:
            return make_root_of_unity(self.p - 1, k)
        return make_root_of_unity(2 * (self.p - 1), 2 * k + 1)

    def linear_value(self, label: LinearLabel, form: NormalForm) -> CycloNum:
        _, beta, s = form
        value = self._omega(label.j) ** beta
        if label.sign < 0 and beta % 2:
            value = -value
        return -value if s else value

    def zeta0_value(self, form: NormalForm) -> CycloNum:
        alpha, beta, s = form
        if beta % (self.p - 1):
            return CycloNum()
        value = CycloNum.coerce(self.p - 1 if alpha % self.p == 0 else -1)
        return -value if s else value

    def zeta0_alt_value(self, form: NormalForm, sign: int = 1) -> CycloNum:
        """zeta-bar_0^+ (sign 1) or zeta-bar_0^- on an even element"""
        if self.parity(form):
            raise ValueError("zeta-bar_0 is defined on even elements only")
        return (self.zeta0_value(form) + self.zeta0_associator(form) * sign) / 2

    def zeta0_associator(self, form: NormalForm) -> CycloNum:
        return (self.S @ self.rho(form)).trace()

    # the monomial module of zeta_0

    @lru_cache(maxsize=None)
    def rho(self, form: NormalForm) -> Monomial:
        alpha, beta, s = form
        p, d = self.p, self.p - 1
        targets, coeffs = [0] * d, [CycloNum()] * d
        for k in range(d):
            q, k2 = divmod(beta % d + k, d)
            value = make_root_of_unity(p, alpha * pow(self.b_inverse, k2, p))
            if (s + self.u * q) % 2:
                value = -value
            targets[k] = k2
            coeffs[k] = value
        return Monomial(targets, coeffs)

    @cached_property
    def S(self) -> Monomial:
        """Associator of zeta_0: +-diag((-1)^k), signed so that tr(S rho(o(c))) = i^((p-1)/2) sqrt(p)"""
        base = Monomial.diagonal([(-1) ** k for k in range(self.p - 1)])
        g = i_sqrt_odd(self.p)
        trace = (base @ self.rho((1, 0, 0))).trace()
        if trace == g:
            return base
        if trace == -g:
            return base.scale(-1)
        raise VerificationError(f"associator trace {trace.render()} is not +-i^((p-1)/2) sqrt(p) for p={self.p}")

    def s_sign(self, k: int) -> int:
        return self.S.coeffs[k].to_fraction().numerator

    @cached_property
    def T(self) -> Monomial:
        """Swap on U (x) U with -1 exactly on the (-1)-eigenvectors of S (x) S"""
        d = self.p - 1
        targets, coeffs = [], []
        for k in range(d):
            for l in range(d):
                targets.append(l * d + k)
                coeffs.append(-1 if self.s_sign(k) < 0 and self.s_sign(l) < 0 else 1)
        return Monomial(targets, coeffs)


@lru_cache(maxsize=None)
def ntilde(p: int, cover: str = "+") -> NTilde:
    return NTilde(p, cover)

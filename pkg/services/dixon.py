"""Dixon-Schneider character tables of enumerated groups.

Class multiplication coefficients are read off the enumerated group, their
common eigenvectors are computed over GF(q) for a prime q = 1 mod the
exponent, and each character value is lifted back to Q(zeta_e) by solving
the Vandermonde system of its Galois conjugates.
"""
import logging
from dataclasses import dataclass
from math import gcd, isqrt, lcm

from sympy import FiniteField, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from config import VerificationError, check_conductor
from services.cyclo import CycloNum, csum, make_root_of_unity
from services.groups import EnumeratedGroup

logger = logging.getLogger(__name__)


@dataclass
class ClassStructure:
    """Classes of the whole enumerated group or of its even subgroup"""

    group: EnumeratedGroup
    classes: list[list[int]]
    class_of: dict[int, int] | list[int]

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.classes)

    def rep(self, i: int) -> int:
        return self.classes[i][0]

    @property
    def exponent(self) -> int:
        return lcm(*(self.group.element_order(self.rep(i)) for i in range(len(self.classes))))


def class_structure(group: EnumeratedGroup, even: bool = False) -> ClassStructure:
    if even:
        return ClassStructure(group, group.even_classes, group.even_class_of)
    return ClassStructure(group, group.classes, group.class_of)


def class_matrix(cs: ClassStructure, r: int) -> list[list[int]]:
    """N[i][t] = #{g in C_r : g^-1 x_i in C_t}"""
    g = cs.group
    k = len(cs.classes)
    out = [[0] * k for _ in range(k)]
    inverses = [g.inv(x) for x in cs.classes[r]]
    for i in range(k):
        x = cs.rep(i)
        row = out[i]
        for gi in inverses:
            row[cs.class_of[g.mul(gi, x)]] += 1
    return out


def dixon_prime(order: int, exponent: int) -> int:
    """A prime q = 1 mod exponent, large enough for the power-basis coordinates to lift"""
    q = 4 * order + 2 * isqrt(order)
    while True:
        q = nextprime(q)
        if q % exponent == 1:
            return q


def eigenspace_decomposition(A: DomainMatrix) -> list[DomainMatrix]:
    """Left eigenspaces of A over its ground field, as row bases in rref"""
    At = A.transpose()
    F = A.domain
    n = A.shape[0]
    charpoly = Poly(A.charpoly(), Symbol("x"), domain=F)
    spaces = []
    for z in charpoly.ground_roots():
        z = F(z)
        basis = (At - At.diag([z] * n, F)).nullspace()
        basis, _ = basis.rref()
        spaces.append(basis)
    return spaces


def refine_spaces(spaces: list[DomainMatrix], N: DomainMatrix) -> list[DomainMatrix]:
    out = []
    for S in spaces:
        if S.shape[0] <= 1:
            out.append(S)
            continue
        _, pivots = S.rref()
        restricted = (S * N).extract(list(range(S.shape[0])), list(pivots))
        for sub in eigenspace_decomposition(restricted):
            out.append(sub * S)
    return out


def common_esd(cs: ClassStructure, F) -> list[list[int]]:
    """Common left eigenvectors of all class matrices, one row per character"""
    k = len(cs.classes)
    spaces = [DomainMatrix.eye(k, F)]
    for r in range(1, k):
        if len(spaces) == k:
            break
        N = DomainMatrix([[F(v) for v in row] for row in class_matrix(cs, r)], (k, k), F)
        spaces = refine_spaces(spaces, N)
    if k == 1:
        spaces = [DomainMatrix([[F(1)]], (1, 1), F)]
    if len(spaces) != k:
        raise VerificationError(f"eigenspace decomposition left {len(spaces)} spaces for {k} classes")
    return [[int(v) for v in S.to_list()[0]] for S in spaces]


def normalize_fp(cs: ClassStructure, vectors: list[list[int]], q: int) -> list[list[int]]:
    """Turn central-character eigenvectors into character values mod q"""
    g = cs.group
    k = len(cs.classes)
    sizes = [len(c) for c in cs.classes]
    identity_class = cs.class_of[0]
    inverse_class = [cs.class_of[g.inv(cs.rep(i))] for i in range(k)]
    rows = []
    for vec in vectors:
        ratios = [vec[i] * pow(sizes[i], -1, q) % q for i in range(k)]
        scale = pow(ratios[identity_class], -1, q)
        ratios = [r * scale % q for r in ratios]
        dot = sum(sizes[i] * ratios[i] * ratios[inverse_class[i]] for i in range(k)) % q
        degree_sq = cs.order * pow(dot, -1, q) % q
        root = sqrt_mod(degree_sq, q)
        if root is None:
            raise VerificationError(f"no square root of {degree_sq} mod {q}")
        rows.append([r * root % q for r in ratios])
    return rows


def power_maps(cs: ClassStructure, exponents: list[int]) -> list[list[int]]:
    g = cs.group
    return [[cs.class_of[g.power(cs.rep(i), a)] for a in exponents] for i in range(len(cs.classes))]


def lift_rows(cs: ClassStructure, rows: list[list[int]], q: int, e: int) -> list[list[CycloNum]]:
    check_conductor(e)
    F = FiniteField(q)
    x = pow(int(primitive_root(q)), (q - 1) // e, q)
    gal = [a for a in range(max(e, 1)) if gcd(a, e) == 1]
    phi = len(gal)
    V = DomainMatrix([[F(pow(x, a * i, q)) for i in range(phi)] for a in gal], (phi, phi), F)
    V_inv = V.inv()
    pm = power_maps(cs, gal)
    k = len(cs.classes)
    roots = [make_root_of_unity(e, i) for i in range(phi)]
    half = q // 2
    out = []
    for row in rows:
        B = DomainMatrix([[F(row[pm[j][a]]) for j in range(k)] for a in range(phi)], (phi, k), F)
        coords = (V_inv * B).to_list()
        lifted = []
        for j in range(k):
            terms = []
            for i in range(phi):
                c = int(coords[i][j])
                c = c if c <= half else c - q
                if c:
                    terms.append(roots[i] * c)
            lifted.append(csum(terms))
        out.append(lifted)
    return out


def character_table(group: EnumeratedGroup, even: bool = False) -> tuple[ClassStructure, list[list[CycloNum]]]:
    """All irreducible characters of the group (or its even subgroup), on its classes in enumeration order"""
    cs = class_structure(group, even)
    e = cs.exponent
    q = dixon_prime(cs.order, e)
    logger.debug("Dixon on %s%s: %d classes, exponent %d, prime %d",
                 group.name, " (even)" if even else "", len(cs.classes), e, q)
    F = FiniteField(q)
    vectors = common_esd(cs, F)
    rows = normalize_fp(cs, vectors, q)
    table = lift_rows(cs, rows, q, e)
    logger.info("Dixon table of %s%s: %d characters", group.name, " (even)" if even else "", len(table))
    return cs, table


def spin_rows(group: EnumeratedGroup, even: bool = False) -> tuple[ClassStructure, list[list[CycloNum]]]:
    """The rows with chi(z) = -chi(1)"""
    cs, table = character_table(group, even)
    z_class = cs.class_of[group.z_index]
    one_class = cs.class_of[0]
    return cs, [row for row in table if row[z_class] == -row[one_class]]


def compare_rows(constructed: list[list[CycloNum]], oracle: list[list[CycloNum]]) -> list[int]:
    """Indices of constructed rows with no equal oracle row (each oracle row used once)"""
    unused = list(range(len(oracle)))
    missing = []
    for i, row in enumerate(constructed):
        for j in unused:
            if all(a == b for a, b in zip(row, oracle[j])):
                unused.remove(j)
                break
        else:
            missing.append(i)
    return missing

"""Spin characters of the double cover of N_p wr S_t inside the cover of S_pt.

The group acts on t blocks of p points, block k holding the points
p*k .. p*k + p - 1. The double cover of N_p sits on the first block and is
moved to block k by the ladder L_k = b_(k-1) ... b_1, where b_j is the lift
of the pointwise swap of blocks j-1 and j, rescaled by z on odd j when
that is needed for the b_j to satisfy the Coxeter relations of one of the
covers of S_t (the "abstract" cover). Every element factors uniquely as

    h = z^e iota_1(a_1) ... iota_t(a_t) s_pi

with a_k = o(c)^alpha y^beta in normal form and s_pi the image of the
canonical lift of the block permutation pi.

Irreducible spin characters are labelled by multipartitions
lambda = (lambda_0, lambda_1, ...) of t. Each is induced from the subgroup
preserving the block regions of sizes t(lambda): the lambda_0 region
carries the extension of zeta_0^(x t_0) tensored with xi_lambda_0, the
other regions a Clifford module of the linear characters zeta_j^+ tensored
with ordinary characters of symmetric groups.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import factorial

from config import VerificationError, check_group_order
from services.clifford import CliffordElt, associator, cliff_char, image
from services.covers import (
    MINUS,
    MINUS_B,
    PLUS,
    PLUS_B,
    UNSPLIT,
    CoverElt,
    Perm,
    central_z,
    classify_alt,
    classify_sym,
    conjugate_by,
    cycle_type,
    identity,
    invert,
    lift,
    lift_parity,
    multiply,
    odd_lift,
    perm_cycles,
    perm_order,
    perm_parity,
    power,
    reduced_word,
    times_z,
)
from services.cyclo import ONE, I, CycloNum, csum
from services.dixon import compare_rows, spin_rows
from services.groups import EnumeratedGroup
from services.monomial import Monomial, kron_all
from services.ntilde import LinearLabel, NTilde, ntilde
from services.partitions import (
    MultiPartition,
    Partition,
    delta_set,
    is_odd_parts,
    multi_sigma,
    normalize,
    remove_q_bars,
    remove_q_hooks,
    render_multipartition,
    sigma,
    t_vector,
)
from services.spin_sym import SpinCharLabel, alt_associator_value, qcycle_sign, xi_value

logger = logging.getLogger(__name__)

UNSPLIT_B = "unsplit_b"
TAG_ORDER = {PLUS: 0, MINUS: 1, UNSPLIT: 2, PLUS_B: 3, MINUS_B: 4, UNSPLIT_B: 5}
_B_TAG = {PLUS: PLUS_B, MINUS: MINUS_B, UNSPLIT: UNSPLIT_B}
SELF = ""

WreathType = tuple[Partition, ...]
Form = tuple[int, int]


@dataclass(frozen=True, slots=True)
class WreathClassLabel:
    """Type (pi_0, ..., pi_(p-1)) plus split tag; pi_j collects the block cycles whose product has N_p type j"""

    wtype: WreathType
    tag: str

    def render(self) -> str:
        return f"({render_multipartition(self.wtype)}){'' if self.tag == UNSPLIT else self.tag}"

    def sort_key(self) -> tuple:
        return self.wtype, TAG_ORDER[self.tag]


@dataclass(frozen=True, slots=True)
class WreathCharLabel:
    partition: MultiPartition
    variant: str
    ambient: str = "sym"

    def render(self) -> str:
        return f"({render_multipartition(self.partition)}){self.variant}"

    @property
    def sign(self) -> int:
        return -1 if self.variant == "-" else 1


@dataclass(frozen=True, slots=True)
class NTildeChar:
    """zeta_0, zeta_j^+- (j >= 1) or, on the even part, zeta-bar_0^+-"""

    j: int
    variant: str
    values: tuple[CycloNum, ...]

    def render(self) -> str:
        if self.j == 0:
            return f"zeta_0{self.variant}" if self.variant == SELF else f"zetabar_0{self.variant}"
        return f"zeta_{self.j}{self.variant}"


@dataclass(frozen=True, slots=True)
class Split:
    """h = z^sign h_0 h' with h_0 on the lambda_0 region and h' on the rest"""

    sign: int
    forms0: tuple[Form, ...]
    pi0: Perm
    forms1: tuple[Form, ...]
    pi1: Perm
    parity0: int
    parity1: int


def wreath_order(p: int, t: int) -> int:
    return 2 * (p * (p - 1)) ** t * factorial(t)


def wreath_labels(p: int, t: int, ambient: str = "sym") -> list[WreathCharLabel]:
    """Labels of the spin characters: one per multipartition or an associate pair"""
    if ambient not in ("sym", "alt"):
        raise ValueError(f"ambient must be 'sym' or 'alt', got '{ambient}'")
    out = []
    for lam in delta_set(t, p):
        self_assoc = (multi_sigma(lam) == 1) == (ambient == "sym")
        for v in ((SELF,) if self_assoc else ("+", "-")):
            out.append(WreathCharLabel(lam, v, ambient))
    return out


def check_wreath_label(char: WreathCharLabel, p: int, t: int) -> None:
    lam = char.partition
    if len(lam) != (p + 1) // 2:
        raise ValueError(f"{char.render()} needs {(p + 1) // 2} components for p={p}")
    if sum(sum(c) for c in lam) != t:
        raise ValueError(f"size mismatch: |{char.render()}| != {t}")
    if any(a <= b for a, b in zip(lam[0], lam[0][1:])):
        raise ValueError(f"component 0 of {char.render()} is not strict")
    self_assoc = (multi_sigma(lam) == 1) == (char.ambient == "sym")
    if self_assoc != (char.variant == SELF):
        kind = "self-associate" if self_assoc else "an associate pair"
        raise ValueError(f"{char.render()} on {char.ambient}: the character is {kind}")


@lru_cache(maxsize=None)
def ordinary_char(lam: Partition, mu: Partition) -> int:
    """Ordinary character chi^lam of S_n on cycle type mu (Murnaghan-Nakayama)"""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not mu:
        return 1
    q, rest = mu[0], mu[1:]
    return sum((-1) ** leg * ordinary_char(nu, rest) for nu, leg in remove_q_hooks(lam, q))


@lru_cache(maxsize=None)
def _abstract_sym_label(pi: Perm, cover: str):
    return classify_sym(lift(pi, cover))


@lru_cache(maxsize=None)
def _abstract_alt_label(pi: Perm, cover: str):
    return classify_alt(lift(pi, cover))


# the extension of zeta_0 x ... x zeta_0 to N^m : S_m

@lru_cache(maxsize=None)
def swap_operator(p: int, cover: str, m: int, j: int) -> Monomial:
    """T_j = S x ... x S x T x S x ... x S with T on slots j, j+1"""
    nt = ntilde(p, cover)
    return kron_all([nt.S] * (j - 1) + [nt.T] + [nt.S] * (m - j - 1))


@lru_cache(maxsize=None)
def permutation_operator(p: int, cover: str, pi: Perm) -> Monomial:
    m = len(pi)
    out = Monomial.identity((p - 1) ** m)
    for j in reduced_word(pi):
        out = out @ swap_operator(p, cover, m, j)
    return out


@lru_cache(maxsize=None)
def exten_trace(p: int, cover: str, forms: tuple[Form, ...], pi: Perm, with_s: bool = False) -> CycloNum:
    """Trace of rho(x) rho(pi) on U^(x m), optionally after the associator S^(x m)"""
    nt = ntilde(p, cover)
    eps = [beta % 2 for _, beta in forms]
    factors = []
    for k, (alpha, beta) in enumerate(forms):
        f = nt.rho((alpha, beta, 0))
        if sum(eps[k + 1:]) % 2:
            f = f @ nt.S
        if with_s:
            f = nt.S @ f
        factors.append(f)
    return (kron_all(factors) @ permutation_operator(p, cover, pi)).trace()


EXTEN_KINDS = ("exten+", "exten-", "extenbar+", "extenbar-")


def _cycle_data(cycles: list[tuple[Form, int]]) -> tuple[tuple[Form, ...], Perm]:
    """Slot forms and block permutation of prod_l ((x_l, 1, ..., 1); (n_(l-1)+1 ... n_l))"""
    forms: list[Form] = []
    pi: list[int] = []
    for form, length in cycles:
        if length < 1:
            raise ValueError(f"cycle length must be positive, got {length}")
        start = len(pi)
        forms.extend([tuple(form)] + [(0, 0)] * (length - 1))
        pi.extend(start + (k + 1) % length for k in range(length))
    return tuple(forms), tuple(pi)


def _half(cycles: list[tuple[Form, int]]) -> bool:
    """Whether the element lies over the alternating group"""
    return (sum(beta for (_, beta), _ in cycles) + sum(m - 1 for _, m in cycles)) % 2 == 0


def exten_value(kind: str, p: int, cycles: list[tuple[Form, int]], cover: str = "+") -> CycloNum:
    """Closed form of Exten^+-_t or ExtenBar^+-_t on disjoint cycle data [((alpha, beta), length), ...]"""
    if kind not in EXTEN_KINDS:
        raise ValueError(f"unknown extension kind '{kind}'")
    nt = ntilde(p, cover)
    if any(beta % 2 for (_, beta), _ in cycles):
        return CycloNum()
    half = _half(cycles)
    forms = [(alpha, beta, 0) for (alpha, beta), _ in cycles]
    if kind.startswith("extenbar"):
        if not half:
            raise ValueError("ExtenBar is defined over the alternating group only")
        target = 1 if kind.endswith("+") else -1
        odd = [f for f, (_, m) in zip(forms, cycles) if m % 2]
        even = [f for f, (_, m) in zip(forms, cycles) if m % 2 == 0]
        rest = ONE
        for f in even:
            rest = rest * nt.zeta0_associator(f)
        total = CycloNum()
        for signs in product((1, -1), repeat=len(odd)):
            if _sign_product(signs) != target:
                continue
            term = ONE
            for f, s in zip(odd, signs):
                term = term * nt.zeta0_alt_value(f, s)
            total = total + term
        return total * rest
    value = ONE
    for f, (_, m) in zip(forms, cycles):
        value = value * (nt.zeta0_value(f) if half and m % 2 else nt.zeta0_associator(f))
    if kind == "exten-" and not half:
        value = -value
    return value


def _sign_product(signs) -> int:
    out = 1
    for s in signs:
        out *= s
    return out


def exten_trace_value(kind: str, p: int, cycles: list[tuple[Form, int]], cover: str = "+") -> CycloNum:
    """The same extension characters read off the monomial operators"""
    if kind not in EXTEN_KINDS:
        raise ValueError(f"unknown extension kind '{kind}'")
    forms, pi = _cycle_data(cycles)
    value = exten_trace(p, cover, forms, pi)
    if kind == "exten+":
        return value
    if kind == "exten-":
        return value if _half(cycles) else -value
    if not _half(cycles):
        raise ValueError("ExtenBar is defined over the alternating group only")
    other = exten_trace(p, cover, forms, pi, True)
    return (value + other) / 2 if kind == "extenbar+" else (value - other) / 2


# the concrete group

class WreathGroup:
    """The double cover of N_p wr S_t as a subgroup of the cover of S_pt"""

    def __init__(self, p: int, t: int, cover: str = "+"):
        if t < 1:
            raise ValueError(f"t must be positive, got {t}")
        check_group_order(wreath_order(p, t), f"N_{p} wr S_{t}")
        self.p = p
        self.t = t
        self.cover = cover
        self.n = p * t
        self.nt: NTilde = ntilde(p, cover)
        self._setup_swaps()

    def _swap_perm(self, j: int) -> Perm:
        p = self.p
        perm = list(range(self.n))
        for r in range(p):
            perm[p * (j - 1) + r], perm[p * j + r] = p * j + r, p * (j - 1) + r
        return tuple(perm)

    def _setup_swaps(self) -> None:
        swaps = [lift(self._swap_perm(j), self.cover) for j in range(1, self.t)]
        if not swaps:
            self.abstract_cover = self.cover
        else:
            self.abstract_cover = "+" if multiply(swaps[0], swaps[0]).sign == 0 else "-"
            if self.t >= 3:
                braid = power(multiply(swaps[0], swaps[1]), 3).sign
                if braid != (1 if self.abstract_cover == "+" else 0):
                    swaps = [times_z(b) if j % 2 else b for j, b in enumerate(swaps, start=1)]
        self.swaps = swaps
        logger.debug("N_%d wr S_%d on cover %s: block swaps follow cover %s",
                     self.p, self.t, self.cover, self.abstract_cover)

    def check_relations(self) -> None:
        """Coxeter relations of the b_j in the abstract cover and the slot commutations"""
        t, cover = self.t, self.abstract_cover
        z = central_z(self.n, self.cover)
        one = identity(self.n, self.cover)
        square = one if cover == "+" else z
        braid = z if cover == "+" else one
        for j, b in enumerate(self.swaps, start=1):
            if multiply(b, b) != square:
                raise VerificationError(f"b_{j}^2 does not match the {cover} cover")
            if j < t - 1 and power(multiply(b, self.swaps[j]), 3) != braid:
                raise VerificationError(f"braid relation fails for b_{j}, b_{j + 1}")
            for k in range(j + 2, t):
                c = self.swaps[k - 1]
                if multiply(multiply(b, c), multiply(b, c)) != z:
                    raise VerificationError(f"b_{j} and b_{k} do not anticommute")
        for k in range(1, t + 1):
            for j in range(1, t):
                if k in (j, j + 1):
                    continue
                for alpha, beta in ((1, 0), (0, 1)):
                    x = self.embed(k, alpha, beta)
                    moved = conjugate_by(x, self.swaps[j - 1])
                    expect = times_z(x) if beta % 2 else x
                    if moved != expect:
                        raise VerificationError(f"b_{j} does not (anti)commute with slot {k}")

    # slots

    @cached_property
    def ladders(self) -> list[CoverElt]:
        out = [identity(self.n, self.cover)]
        for b in self.swaps:
            out.append(multiply(b, out[-1]))
        return out

    @lru_cache(maxsize=None)
    def embed(self, k: int, alpha: int, beta: int) -> CoverElt:
        """iota_k(o(c)^alpha y^beta)"""
        a = self.nt.element(alpha % self.p, beta % (self.p - 1), 0)
        first = CoverElt(a.perm + tuple(range(self.p, self.n)), a.sign, self.cover)
        return first if k == 1 else conjugate_by(first, self.ladders[k - 1])

    @lru_cache(maxsize=None)
    def abstract_lift(self, pi: Perm) -> CoverElt:
        """s_pi: the image of the canonical lift of the block permutation pi"""
        out = identity(self.n, self.cover)
        for j in reduced_word(pi):
            out = multiply(out, self.swaps[j - 1])
        return times_z(out) if lift_parity(pi) else out

    def block_perm(self, perm: Perm) -> Perm:
        p = self.p
        return tuple(perm[p * k] // p for k in range(self.t))

    def decompose(self, x: CoverElt) -> tuple[tuple[Form, ...], Perm, int]:
        """(forms, pi, e) with x = z^e iota_1(a_1) ... iota_t(a_t) s_pi"""
        p = self.p
        pi = self.block_perm(x.perm)
        rest = multiply(x, invert(self.abstract_lift(pi)))
        forms = []
        built = identity(self.n, self.cover)
        for k in range(self.t):
            resid = tuple(rest.perm[p * k + r] - p * k for r in range(p))
            alpha, beta = self.nt.form_of_perm(resid)
            forms.append((alpha, beta))
            built = multiply(built, self.embed(k + 1, alpha, beta))
        if built.perm != rest.perm:
            raise VerificationError(f"slot factorization failed for {x.perm}")
        return tuple(forms), pi, rest.sign ^ built.sign

    def compose(self, forms, pi: Perm, e: int = 0) -> CoverElt:
        out = identity(self.n, self.cover)
        for k, (alpha, beta) in enumerate(forms, start=1):
            out = multiply(out, self.embed(k, alpha, beta))
        out = multiply(out, self.abstract_lift(tuple(pi)))
        return times_z(out) if e % 2 else out

    # types and classes

    def element_type(self, x: CoverElt) -> WreathType:
        p = self.p
        comps: list[list[int]] = [[] for _ in range(p)]
        for cyc in perm_cycles(self.block_perm(x.perm)):
            k, m = cyc[0], len(cyc)
            img = [p * k + r for r in range(p)]
            for _ in range(m):
                img = [x.perm[i] for i in img]
            comps[self.nt.type_of_perm(tuple(i - p * k for i in img))].append(m)
        return tuple(normalize(c) for c in comps)

    @lru_cache(maxsize=None)
    def canonical_rep(self, wtype: WreathType) -> CoverElt:
        """Block cycles laid out in type order; the last block of each cycle returns through x_j"""
        p = self.p
        if sum(sum(c) for c in wtype) != self.t or len(wtype) != p:
            raise ValueError(f"({render_multipartition(wtype)}) is not a type of N_{p} wr S_{self.t}")
        perm = [0] * self.n
        start = 0
        for j, parts in enumerate(wtype):
            base = self.nt.class_perm(j)
            for m in parts:
                for i in range(m):
                    blk = start + i
                    for r in range(p):
                        perm[p * blk + r] = p * (blk + 1) + r if i < m - 1 else p * start + base[r]
                start += m
        perm = tuple(perm)
        return odd_lift(perm, self.cover) if perm_order(perm) % 2 else lift(perm, self.cover)

    def s_beta_prime(self, beta: Partition) -> CoverElt:
        """prod_l ((a, 1, ..., 1); tau_l) with a = o(c) and tau_l a beta_l-cycle of blocks"""
        if not is_odd_parts(beta):
            raise ValueError(f"beta must have odd parts, got {beta}")
        if sum(beta) > self.t:
            raise ValueError(f"|beta| = {sum(beta)} exceeds t = {self.t}")
        forms = [(0, 0)] * self.t
        pi = list(range(self.t))
        start = 0
        for m in beta:
            forms[start] = (1, 0)
            for i in range(m):
                pi[start + i] = start + (i + 1) % m
            start += m
        return self.compose(forms, tuple(pi))

    @cached_property
    def group(self) -> EnumeratedGroup:
        gens = [self.embed(1, 1, 0), self.embed(1, 0, 1), *self.swaps, central_z(self.n, self.cover)]
        return EnumeratedGroup(gens, self.n, self.cover, name=f"N_{self.p} wr S_{self.t}")

    @cached_property
    def _sym_data(self) -> tuple[list[dict], list[int]]:
        g = self.group
        rows = []
        for c in range(len(g.classes)):
            rep = g.elements[g.representative(c)]
            wtype = self.element_type(rep)
            can = self.canonical_rep(wtype)
            plus = g.class_of[g.id_of(can)]
            minus = g.class_of[g.id_of(times_z(can))]
            if plus == minus:
                tag = UNSPLIT
            elif c == plus:
                tag = PLUS
            elif c == minus:
                tag = MINUS
            else:
                raise VerificationError(f"class {c} of type {wtype} holds neither canonical element")
            rows.append((WreathClassLabel(wtype, tag), c))
        rows.sort(key=lambda r: r[0].sort_key())
        table = [{"label": label, "size": g.class_size(c), "centralizer": g.centralizer_order(c),
                  "p_regular": g.class_order(c) % self.p != 0} for label, c in rows]
        return table, [c for _, c in rows]

    def classes(self) -> list[dict]:
        return self._sym_data[0]

    @cached_property
    def _alt_data(self) -> tuple[list[dict], list[int], list[int]]:
        g = self.group
        rows = []
        for row, c in zip(*self._sym_data):
            members = g.classes[c]
            if not g.is_even(members[0]):
                continue
            label = row["label"]
            can = self.canonical_rep(label.wtype)
            if label.tag == MINUS:
                can = times_z(can)
            home = g.even_class_of[g.id_of(can)]
            for d in sorted({g.even_class_of[x] for x in members}):
                tag = label.tag if d == home else _B_TAG[label.tag]
                rows.append((WreathClassLabel(label.wtype, tag), d, c, row["p_regular"]))
        rows.sort(key=lambda r: r[0].sort_key())
        table = [{"label": lab, "size": len(g.even_classes[d]), "centralizer": g.even_centralizer_order(d),
                  "p_regular": regular} for lab, d, _, regular in rows]
        return table, [d for _, d, _, _ in rows], [c for _, _, c, _ in rows]

    def alt_classes(self) -> list[dict]:
        return self._alt_data[0]

    def class_reps(self, ambient: str = "sym") -> list[CoverElt]:
        g = self.group
        if ambient == "sym":
            return [g.elements[g.representative(c)] for c in self._sym_data[1]]
        return [g.elements[g.even_classes[d][0]] for d in self._alt_data[1]]

    def enumerated_classes(self, ambient: str = "sym") -> list[int]:
        """Enumerated class ids (even class ids on alt) in the order of classes() or alt_classes()"""
        return list(self._sym_data[1] if ambient == "sym" else self._alt_data[1])

    def parent_positions(self) -> list[int]:
        """Index into classes() of the class holding each alt class"""
        order = self._sym_data[1]
        return [order.index(c) for c in self._alt_data[2]]

    def position_of(self, x: CoverElt) -> int:
        """Index into classes() of the class containing x"""
        return self._sym_data[1].index(self.group.class_of[self.group.id_of(x)])

    # characters

    @lru_cache(maxsize=None)
    def _splits(self, tvec: tuple[int, ...]) -> list[tuple[int, Split]]:
        """Elements of the region-preserving subgroup with their factorization"""
        region = [j for j, size in enumerate(tvec) for _ in range(size)]
        t0 = tvec[0]
        out = []
        for idx, x in enumerate(self.group.elements):
            pi = self.block_perm(x.perm)
            if any(region[pi[k]] != region[k] for k in range(self.t)):
                continue
            out.append((idx, self._split(x, t0)))
        logger.debug("region subgroup %s of N_%d wr S_%d: order %d", tvec, self.p, self.t, len(out))
        return out

    def _split(self, x: CoverElt, t0: int) -> Split:
        forms, pi, e = self.decompose(x)
        t, acover = self.t, self.abstract_cover
        pi0 = pi[:t0]
        pi1 = tuple(v - t0 for v in pi[t0:])
        a0 = CoverElt(pi0 + tuple(range(t0, t)), 0, acover)
        a1 = CoverElt(tuple(range(t0)) + pi[t0:], 0, acover)
        f = multiply(a0, a1).sign
        par0 = perm_parity(pi0)
        eps1 = sum(beta for _, beta in forms[t0:]) % 2
        return Split(
            sign=e ^ f ^ (eps1 & par0),
            forms0=forms[:t0], pi0=pi0, forms1=forms[t0:], pi1=pi1,
            parity0=(sum(beta for _, beta in forms[:t0]) + par0) % 2,
            parity1=(eps1 + perm_parity(pi1)) % 2,
        )

    def _lambda0_part(self, lam0: Partition, sp: Split) -> tuple[CycloNum, CycloNum, CycloNum | None]:
        """(chi_0^+, chi_0^-, associator trace) on h_0"""
        if not sp.forms0:
            return ONE, ONE, ONE
        acover = self.abstract_cover
        trace = exten_trace(self.p, self.cover, sp.forms0, sp.pi0)
        label = _abstract_sym_label(sp.pi0, acover)
        if sigma(lam0) == -1:
            plus = trace * xi_value(SpinCharLabel(lam0, "+"), label, acover)
            minus = trace * xi_value(SpinCharLabel(lam0, "-"), label, acover)
            return plus, minus, None
        value = trace * xi_value(SpinCharLabel(lam0, SELF), label, acover)
        delta = CycloNum()
        if not sp.parity0 and not perm_parity(sp.pi0):
            assoc = alt_associator_value(lam0, _abstract_alt_label(sp.pi0, acover))
            if assoc:
                delta = exten_trace(self.p, self.cover, sp.forms0, sp.pi0, True) * assoc
        return value, value, delta

    def _clifford_part(self, lam: MultiPartition, sp: Split) -> tuple[CycloNum, CycloNum, CycloNum | None]:
        """(chi'^+, chi'^-, associator trace) on h'"""
        m = len(sp.forms1)
        if m == 0:
            return ONE, ONE, ONE
        sizes = [sum(c) for c in lam[1:]]
        owner = [j + 1 for j, size in enumerate(sizes) for _ in range(size)]
        x = CliffordElt.scalar(m, 1)
        for k, (alpha, beta) in enumerate(sp.forms1):
            value = self.nt.linear_value(LinearLabel(owner[k], 1), (alpha, beta, 0))
            factor = CliffordElt.basis(m, [k + 1] if beta % 2 else []) * value
            x = x * factor
        x = x * image(CoverElt(sp.pi1, 0, self.abstract_cover))
        sym = 1
        start = 0
        for comp, size in zip(lam[1:], sizes):
            sub = tuple(v - start for v in sp.pi1[start:start + size])
            sym *= ordinary_char(comp, cycle_type(sub))
            start += size
        if not sym:
            zero = CycloNum()
            return zero, zero, (zero if m % 2 == 0 else None)
        plus = cliff_char(x, "full", 1) * sym
        minus = cliff_char(x, "full", -1) * sym
        delta = None
        if m % 2 == 0:
            delta = (associator(m) * x).coefficient(0) * (2 ** (m // 2) * sym)
        return plus, minus, delta

    def psi(self, char: WreathCharLabel, sp: Split) -> tuple[CycloNum, CycloNum | None]:
        """Value on the region subgroup and, for sigma(lambda) = +1, its associator trace"""
        lam = char.partition
        c0p, c0m, d0 = self._lambda0_part(lam[0], sp)
        c1p, c1m, d1 = self._clifford_part(lam, sp)
        s0 = sigma(lam[0])
        s1 = 1 if len(sp.forms1) % 2 == 0 else -1
        sign = char.sign
        delta = None
        if s0 == 1 and s1 == 1:
            value = c0p * c1p
            delta = d0 * d1 if not sp.parity0 and not sp.parity1 else CycloNum()
        elif s0 == 1:
            value = (c0p if not sp.parity1 else d0) * (c1p if sign > 0 else c1m)
        elif s1 == 1:
            value = (c0p if sign > 0 else c0m) * (c1p if not sp.parity0 else d1)
        else:
            both_even = not sp.parity0 and not sp.parity1
            value = c0p * c1p * 2 if both_even else CycloNum()
            delta = c0p * c1p * I * 2 if sp.parity0 and sp.parity1 else CycloNum()
        if sp.sign:
            value = -value
            delta = -delta if delta is not None else None
        return value, delta

    @lru_cache(maxsize=None)
    def _induced(self, lam: MultiPartition, variant: str) -> tuple[dict[int, CycloNum], dict[int, CycloNum]]:
        """Induced values by enumerated class and induced associator traces by even class"""
        g = self.group
        char = WreathCharLabel(lam, variant)
        splits = self._splits(t_vector(lam))
        sums: dict[int, CycloNum] = defaultdict(CycloNum)
        dsums: dict[int, CycloNum] = defaultdict(CycloNum)
        even_h = 0
        for idx, sp in splits:
            value, delta = self.psi(char, sp)
            if value:
                sums[g.class_of[idx]] += value
            if g.is_even(idx):
                even_h += 1
                if delta:
                    dsums[g.even_class_of[idx]] += delta
        order = len(g)
        values = {c: total * Fraction(order, g.class_size(c) * len(splits)) for c, total in sums.items()}
        deltas = {d: total * Fraction(g.even_order, len(g.even_classes[d]) * even_h)
                  for d, total in dsums.items()}
        return values, deltas

    def char_values(self, char: WreathCharLabel) -> list[CycloNum]:
        """Values on classes() for sym labels, on alt_classes() for alt labels"""
        check_wreath_label(char, self.p, self.t)
        lam = char.partition
        if char.ambient == "sym":
            values, _ = self._induced(lam, char.variant)
            return [values.get(c, CycloNum()) for c in self._sym_data[1]]
        _, evens, parents = self._alt_data
        if multi_sigma(lam) == -1:
            values, _ = self._induced(lam, "+")
            return [values.get(c, CycloNum()) for c in parents]
        values, deltas = self._induced(lam, SELF)
        out = []
        for d, c in zip(evens, parents):
            diff = deltas.get(d, CycloNum())
            out.append((values.get(c, CycloNum()) + diff * char.sign) / 2)
        return out

    def table(self, ambient: str = "sym") -> dict:
        classes = self.classes() if ambient == "sym" else self.alt_classes()
        labels = wreath_labels(self.p, self.t, ambient)
        values = [self.char_values(ch) for ch in labels]
        logger.info("wreath table p=%d t=%d %s cover %s: %d characters on %d classes",
                    self.p, self.t, ambient, self.cover, len(labels), len(classes))
        return {"p": self.p, "t": self.t, "ambient": ambient, "cover": self.cover,
                "classes": classes, "characters": labels, "values": values}

    def class_index(self, label: WreathClassLabel, ambient: str = "sym") -> int:
        classes = self.classes() if ambient == "sym" else self.alt_classes()
        for k, row in enumerate(classes):
            if row["label"] == label:
                return k
        raise ValueError(f"no class {label.render()} in N_{self.p} wr S_{self.t} ({ambient})")

    def total_char(self, lam: MultiPartition) -> list[CycloNum]:
        """chi^lambda, or chi^lambda+ + chi^lambda- for a pair"""
        if multi_sigma(lam) == 1:
            return self.char_values(WreathCharLabel(lam, SELF))
        plus = self.char_values(WreathCharLabel(lam, "+"))
        minus = self.char_values(WreathCharLabel(lam, "-"))
        return [a + b for a, b in zip(plus, minus)]

    def shift_element(self, x: CoverElt, small: "WreathGroup") -> CoverElt:
        """[q]x: the element x of the smaller group moved onto the last blocks"""
        q = self.t - small.t
        forms, pi, e = small.decompose(x)
        shifted = tuple(range(q)) + tuple(v + q for v in pi)
        return self.compose([(0, 0)] * q + list(forms), shifted, e)


@lru_cache(maxsize=None)
def _wreath_group(p: int, t: int, cover: str) -> WreathGroup:
    return WreathGroup(p, t, cover)


def wreath_group(p: int, t: int, cover: str = "+") -> WreathGroup:
    check_group_order(wreath_order(p, t), f"N_{p} wr S_{t}")
    return _wreath_group(p, t, cover)


def wreath_table(p: int, t: int, ambient: str = "sym", cover: str = "+") -> dict:
    return wreath_group(p, t, cover).table(ambient)


def wreath_char_value(char: WreathCharLabel, label: WreathClassLabel, p: int, cover: str = "+") -> CycloNum:
    if char.ambient != "sym":
        raise ValueError(f"{char.render()} is a character of the even subgroup")
    t = sum(sum(c) for c in char.partition)
    if sum(sum(c) for c in label.wtype) != t:
        raise ValueError(f"size mismatch: {char.render()} against class {label.render()}")
    group = wreath_group(p, t, cover)
    return group.char_values(char)[group.class_index(label)]


def wreath_alt_value(char: WreathCharLabel, label: WreathClassLabel, p: int, cover: str = "+") -> CycloNum:
    t = sum(sum(c) for c in char.partition)
    group = wreath_group(p, t, cover)
    if char.ambient != "alt":
        char = WreathCharLabel(char.partition, char.variant, "alt")
    return group.char_values(char)[group.class_index(label, "alt")]


# characters of the double cover of N_p

def ntilde_chars(p: int, cover: str = "+", ambient: str = "sym") -> dict:
    """zeta_0 and the zeta_j^+- on the classes of the double cover of N_p (or zeta-bar on its even part)"""
    group = wreath_group(p, 1, cover)
    nt = group.nt
    classes = group.classes() if ambient == "sym" else group.alt_classes()
    forms = [nt.normal_form(rep) for rep in group.class_reps(ambient)]
    chars = []
    if ambient == "sym":
        chars.append(NTildeChar(0, SELF, tuple(nt.zeta0_value(f) for f in forms)))
        for label in nt.linear_labels():
            variant = "+" if label.sign > 0 else "-"
            chars.append(NTildeChar(label.j, variant, tuple(nt.linear_value(label, f) for f in forms)))
    else:
        for sign, variant in ((1, "+"), (-1, "-")):
            chars.append(NTildeChar(0, variant, tuple(nt.zeta0_alt_value(f, sign) for f in forms)))
        for j in range(1, (p + 1) // 2):
            chars.append(NTildeChar(j, SELF, tuple(nt.linear_value(LinearLabel(j, 1), f) for f in forms)))
    return {"p": p, "cover": cover, "ambient": ambient, "classes": classes, "characters": chars}


# stripping y_0-type cycles

def _mn_terms(lam: MultiPartition, q: int) -> list[tuple[MultiPartition, int]]:
    """(nu, coefficient) for the label-insensitive MN rule"""
    out = []
    s_lam = multi_sigma(lam)
    for mu, leg in remove_q_bars(lam[0], q):
        nu = (mu,) + lam[1:]
        weight = 2 if s_lam == -1 and multi_sigma(nu) == 1 else 1
        out.append((nu, -((-1) ** leg) * weight))
    for j in range(1, len(lam)):
        for mu, leg in remove_q_hooks(lam[j], q):
            nu = lam[:j] + (mu,) + lam[j + 1:]
            weight = 2 if s_lam == -1 and multi_sigma(nu) == 1 else 1
            out.append((nu, (-1) ** leg * weight))
    return out


def mn_check(p: int, t: int, q: int, cover: str = "+") -> list[dict]:
    """Compare chi_tot(g [q]x) with the MN expansion over every class x of the smaller group"""
    if q % 2 == 0 or not 1 <= q <= t:
        raise ValueError(f"q must be odd with 1 <= q <= t, got {q}")
    big = wreath_group(p, t, cover)
    wtype = ((q,),) + ((),) * (p - 2) + ((1,) * (t - q),)
    g = big.canonical_rep(wtype)
    if t - q == 0:
        points = [None]
    else:
        small = wreath_group(p, t - q, cover)
        points = small.class_reps()
    bad = []
    for lam in delta_set(t, p):
        big_values = big.total_char(lam)
        terms = _mn_terms(lam, q)
        small_values = {}
        if t - q:
            for nu, _ in terms:
                if nu not in small_values:
                    small_values[nu] = small.total_char(nu)
        for k, x in enumerate(points):
            if x is None:
                element = g
                rhs = csum(CycloNum.coerce(coeff) for _, coeff in terms)
            else:
                element = multiply(g, big.shift_element(x, small))
                rhs = csum(small_values[nu][k] * coeff for nu, coeff in terms)
            rhs = rhs * qcycle_sign(q)
            lhs = big_values[big.position_of(element)]
            if lhs != rhs:
                bad.append({"lambda": render_multipartition(lam), "x": k, "lhs": lhs.render(), "rhs": rhs.render()})
    if bad:
        logger.warning("MN rule p=%d t=%d q=%d: %d mismatches", p, t, q, len(bad))
    return bad


# oracle

def monomial_identities(p: int, cover: str = "+") -> list[str]:
    """Failures among the identities satisfied by the associator S and the swap T"""
    nt = ntilde(p, cover)
    d = p - 1
    S, T = nt.S, nt.T
    one2 = Monomial.identity(d * d)
    failures = []
    if S @ S != Monomial.identity(d):
        failures.append("S^2 != 1")
    if T @ T != one2:
        failures.append("T^2 != 1")
    if T @ S.kron(S) != S.kron(S) @ T:
        failures.append("T does not commute with S (x) S")
    braid = swap_operator(p, cover, 3, 2) @ swap_operator(p, cover, 3, 1)
    if braid @ braid @ braid != Monomial.identity(d ** 3):
        failures.append("((S (x) T)(T (x) S))^3 != 1")
    for form in ((1, 0, 0), (0, 1, 0)):
        rho = nt.rho(form)
        moved = T @ rho.kron(Monomial.identity(d)) @ T
        left = S if form[1] % 2 else Monomial.identity(d)
        if moved != left.kron(rho):
            failures.append(f"T (rho(x) (x) 1) T != S^eps (x) rho(x) at x = {form}")
    for m in (3, 4):
        for j in range(1, m):
            Tj = swap_operator(p, cover, m, j)
            for k in range(j + 2, m):
                Tk = swap_operator(p, cover, m, k)
                if Tj @ Tk != Tk @ Tj:
                    failures.append(f"T_{j} and T_{k} do not commute on {m} slots")
    for cycles in _oracle_cycle_data():
        for kind in EXTEN_KINDS:
            if kind.startswith("extenbar") and not _half(cycles):
                continue
            closed = exten_value(kind, p, cycles, cover)
            traced = exten_trace_value(kind, p, cycles, cover)
            if closed != traced:
                failures.append(f"{kind} at {cycles}: closed form {closed.render()} != trace {traced.render()}")
    return failures


def _oracle_cycle_data() -> list[list[tuple[Form, int]]]:
    forms = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]
    out = [[(f, 1)] for f in forms] + [[(f, 2)] for f in forms] + [[(f, 3)] for f in forms[:3]]
    out += [[(f, 1), (g, 1)] for f in forms for g in forms[:3]]
    out += [[(f, 2), (g, 1)] for f in forms[:3] for g in forms[:3]]
    return out


def matrix_oracle(p: int, t: int, cover: str = "+", ambients: tuple[str, ...] = ("sym", "alt")) -> dict:
    """Compare the constructed tables with Dixon tables and check the monomial identities"""
    group = wreath_group(p, t, cover)
    diffs = [f"monomial: {f}" for f in monomial_identities(p, cover)]
    try:
        group.check_relations()
    except VerificationError as e:
        diffs.append(f"relations: {e}")
    checked = {}
    for ambient in ambients:
        table = group.table(ambient)
        _, rows = spin_rows(group.group, even=ambient == "alt")
        order = group.enumerated_classes(ambient)
        oracle = [[row[c] for c in order] for row in rows]
        if len(oracle) != len(table["values"]):
            diffs.append(f"{ambient}: {len(table['values'])} constructed characters, {len(oracle)} from Dixon")
        for k in compare_rows(table["values"], oracle):
            diffs.append(f"{ambient}: {table['characters'][k].render()} has no matching Dixon row")
        checked[ambient] = len(oracle)
    if diffs:
        logger.warning("matrix oracle p=%d t=%d cover %s: %d diffs", p, t, cover, len(diffs))
    else:
        logger.info("matrix oracle p=%d t=%d cover %s: tables agree", p, t, cover)
    return {"p": p, "t": t, "cover": cover, "characters": checked, "diffs": diffs}

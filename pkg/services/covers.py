"""Elements and conjugacy classes of the double covers of S_n and A_n.

An element is a permutation of {0, ..., n-1} together with a z-bit relative
to the canonical lift T(sigma). T(sigma) is z^e(w) t_w1 ... t_wk where w is
the reduced word obtained by peeling the smallest right descent and e(w) is
the parity needed to sort the inversions created along w into
lexicographic order. Right multiplication by a generator t_j then only
needs the number of current inversions lexicographically above the pair
being created.

The two covers follow the presentations
  S^+: t_j^2 = 1, (t_j t_j+1)^3 = z,   S^-: t_j^2 = z, (t_j t_j+1)^3 = 1,
with t_j t_k = z t_k t_j for |j - k| > 1 in both. Composition is
(sigma tau)(i) = sigma(tau(i)).
"""
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, lcm

from services.partitions import (
    Partition,
    centralizer_order,
    is_odd_parts,
    is_strict,
    partitions_of,
    sigma,
)

Perm = tuple[int, ...]
COVERS = ("+", "-")

UNSPLIT = "unsplit"
PLUS = "plus"
MINUS = "minus"
PLUS_B = "plus_b"
MINUS_B = "minus_b"


@dataclass(frozen=True, slots=True)
class CoverElt:
    perm: Perm
    sign: int
    cover: str

    @property
    def n(self) -> int:
        return len(self.perm)


@dataclass(frozen=True, slots=True)
class SymClassLabel:
    cycle_type: Partition
    tag: str

    def render(self) -> str:
        return f"({','.join(map(str, self.cycle_type))}){'' if self.tag == UNSPLIT else self.tag}"


# permutations

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def perm_cycles(a: Perm) -> list[list[int]]:
    """Cycles (including fixed points) ordered by smallest point"""
    seen = [False] * len(a)
    cycles = []
    for i in range(len(a)):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = a[j]
            cycles.append(cyc)
    return cycles


def cycle_type(a: Perm) -> Partition:
    return tuple(sorted((len(c) for c in perm_cycles(a)), reverse=True))


def perm_parity(a: Perm) -> int:
    return sum(len(c) - 1 for c in perm_cycles(a)) % 2


def perm_order(a: Perm) -> int:
    return lcm(*(len(c) for c in perm_cycles(a))) if a else 1


def transposition(n: int, j: int) -> Perm:
    """The Coxeter generator s_j (1 <= j <= n-1) swapping points j-1 and j"""
    p = list(range(n))
    p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


def standard_perm(pi: Partition) -> Perm:
    """Consecutive cycles i -> i+1 in the order of the parts of pi"""
    out = []
    start = 0
    for part in pi:
        out.extend(start + (k + 1) % part for k in range(part))
        start += part
    return tuple(out)


# canonical lift

def _lex_above(perm: list[int], m: int, big: int) -> int:
    """Inversions (a, b) of perm, a < b with b placed before a, lex-greater than (m, big)"""
    count = 0
    n = len(perm)
    for i in range(n):
        b = perm[i]
        for k in range(i + 1, n):
            a = perm[k]
            if a < b and (a > m or (a == m and b > big)):
                count += 1
    return count


def _right_letter(perm: list[int], sign: int, j: int, cover: str) -> int:
    """Right-multiply (perm, sign) by t_j in place; return the new sign"""
    a, b = perm[j - 1], perm[j]
    perm[j - 1], perm[j] = b, a
    if a < b:
        return sign ^ (_lex_above(perm, a, b) & 1)
    # descent: T(perm) = z^c T(perm s_j) t_j, so T(perm) t_j = z^c T(perm s_j) t_j^2
    sign ^= _lex_above(perm, b, a) & 1
    if cover == "-":
        sign ^= 1
    return sign


@lru_cache(maxsize=None)
def reduced_word(perm: Perm) -> tuple[int, ...]:
    """Reduced word peeling the smallest right descent each time"""
    word: list[int] = []
    current = list(perm)
    while True:
        for j in range(1, len(current)):
            if current[j - 1] > current[j]:
                current[j - 1], current[j] = current[j], current[j - 1]
                word.append(j)
                break
        else:
            break
    return tuple(reversed(word))


@lru_cache(maxsize=None)
def lift_parity(perm: Perm) -> int:
    """e(w) for the reduced word of perm"""
    current = list(range(len(perm)))
    e = 0
    for j in reduced_word(perm):
        a, b = current[j - 1], current[j]
        current[j - 1], current[j] = b, a
        e ^= _lex_above(current, a, b) & 1
    return e


def right_mul_word(x: CoverElt, word) -> CoverElt:
    perm = list(x.perm)
    sign = x.sign
    for j in word:
        sign = _right_letter(perm, sign, j, x.cover)
    return CoverElt(tuple(perm), sign, x.cover)


def multiply(a: CoverElt, b: CoverElt) -> CoverElt:
    if a.cover != b.cover or a.n != b.n:
        raise ValueError("cannot multiply elements of different covers")
    start = CoverElt(a.perm, a.sign ^ b.sign ^ lift_parity(b.perm), a.cover)
    return right_mul_word(start, reduced_word(b.perm))


def identity(n: int, cover: str) -> CoverElt:
    return CoverElt(identity_perm(n), 0, cover)


def central_z(n: int, cover: str) -> CoverElt:
    return CoverElt(identity_perm(n), 1, cover)


def generator(n: int, j: int, cover: str) -> CoverElt:
    if not 1 <= j <= n - 1:
        raise ValueError(f"generator index {j} out of range for n={n}")
    return CoverElt(transposition(n, j), 0, cover)


def times_z(a: CoverElt) -> CoverElt:
    return CoverElt(a.perm, a.sign ^ 1, a.cover)


def invert(a: CoverElt) -> CoverElt:
    inv = perm_inv(a.perm)
    trial = multiply(a, CoverElt(inv, 0, a.cover))
    return CoverElt(inv, trial.sign, a.cover)


def power(a: CoverElt, k: int) -> CoverElt:
    if k < 0:
        return power(invert(a), -k)
    result = identity(a.n, a.cover)
    base = a
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def conjugate_by(a: CoverElt, g: CoverElt) -> CoverElt:
    """g a g^-1"""
    return multiply(multiply(g, a), invert(g))


def order(a: CoverElt) -> int:
    m = perm_order(a.perm)
    return m if power(a, m).sign == 0 else 2 * m


def is_even(a: CoverElt) -> bool:
    return perm_parity(a.perm) == 0


def lift(perm: Perm, cover: str) -> CoverElt:
    """The canonical lift T(perm)"""
    return CoverElt(tuple(perm), 0, cover)


def odd_lift(perm: Perm, cover: str) -> CoverElt:
    """o(g): the lift of an odd-order permutation that has the same odd order"""
    m = perm_order(perm)
    if m % 2 == 0:
        raise ValueError(f"o(g) needs an odd-order permutation, got order {m}")
    h = lift(perm, cover)
    return h if power(h, m).sign == 0 else times_z(h)


def shift(a: CoverElt, offset: int, n: int) -> CoverElt:
    """Image of a under t_j -> t_{j+offset} inside the cover of S_n"""
    perm = list(range(n))
    for i, v in enumerate(a.perm):
        perm[i + offset] = v + offset
    return CoverElt(tuple(perm), a.sign, a.cover)


# classes of the double cover of S_n

def is_split_type(pi: Partition) -> bool:
    """Schur: the preimage of C_pi splits iff pi in O_n or pi in D_n^-"""
    return is_odd_parts(pi) or (is_strict(pi) and sigma(pi) == -1)


def canonical_rep(pi: Partition, cover: str) -> CoverElt:
    """o(sigma_pi) for odd-part types, T(sigma_pi) otherwise"""
    perm = standard_perm(pi)
    return odd_lift(perm, cover) if is_odd_parts(pi) else lift(perm, cover)


def _conjugator(perm: Perm, pi: Partition) -> Perm:
    """A permutation g with g perm g^-1 = standard_perm(pi)"""
    cycles = sorted(perm_cycles(perm), key=lambda c: (-len(c), c[0]))
    g = [0] * len(perm)
    start = 0
    for cyc in cycles:
        for k, point in enumerate(cyc):
            g[point] = start + k
        start += len(cyc)
    return tuple(g)


def _transport(x: CoverElt, pi: Partition, even_only: bool = False) -> tuple[CoverElt, int]:
    """Conjugate x onto the standard permutation of its type; return it and the conjugator parity"""
    g = _conjugator(x.perm, pi)
    if even_only and perm_parity(g):
        # compose with an odd permutation centralizing standard_perm(pi): an even-length cycle
        start = 0
        for part in pi:
            if part % 2 == 0:
                fix = list(range(len(g)))
                for k in range(part):
                    fix[start + k] = start + (k + 1) % part
                g = perm_mul(tuple(fix), g)
                break
            start += part
    G = lift(g, x.cover)
    return conjugate_by(x, G), perm_parity(g)


def classify_sym(x: CoverElt) -> SymClassLabel:
    pi = cycle_type(x.perm)
    if not is_split_type(pi):
        return SymClassLabel(pi, UNSPLIT)
    if is_odd_parts(pi):
        return SymClassLabel(pi, PLUS if order(x) % 2 else MINUS)
    y, _ = _transport(x, pi)
    return SymClassLabel(pi, PLUS if y.sign == canonical_rep(pi, x.cover).sign else MINUS)


def class_rep(label: SymClassLabel, cover: str) -> CoverElt:
    rep = canonical_rep(label.cycle_type, cover)
    return times_z(rep) if label.tag == MINUS else rep


def sym_classes(n: int, cover: str, p: int | None = None) -> list[dict]:
    """Class list of the double cover of S_n: label, size, centralizer, p-regularity"""
    out = []
    for pi in sorted(partitions_of(n)):
        z_pi = centralizer_order(pi)
        regular = p is None or all(a % p for a in pi)
        if is_split_type(pi):
            for tag in (PLUS, MINUS):
                out.append({"label": SymClassLabel(pi, tag), "size": factorial(n) // z_pi,
                            "centralizer": 2 * z_pi, "p_regular": regular})
        else:
            out.append({"label": SymClassLabel(pi, UNSPLIT), "size": 2 * factorial(n) // z_pi,
                        "centralizer": z_pi, "p_regular": regular})
    return out


# classes of the double cover of A_n

def alt_split_kind(pi: Partition) -> int:
    """Number of classes of the double cover of A_n above an even type pi"""
    if sigma(pi) != 1:
        raise ValueError(f"type {pi} is not even")
    odd, strict = is_odd_parts(pi), is_strict(pi)
    if odd and strict:
        return 4
    if odd or strict:
        return 2
    return 1


def classify_alt(x: CoverElt) -> SymClassLabel:
    pi = cycle_type(x.perm)
    if perm_parity(x.perm):
        raise ValueError("element is not in the double cover of A_n")
    kind = alt_split_kind(pi)
    if kind == 1:
        return SymClassLabel(pi, UNSPLIT)
    if is_odd_parts(pi):
        plus = order(x) % 2 == 1
        if kind == 2:
            return SymClassLabel(pi, PLUS if plus else MINUS)
        _, parity = _transport(x, pi)
        if parity:
            return SymClassLabel(pi, PLUS_B if plus else MINUS_B)
        return SymClassLabel(pi, PLUS if plus else MINUS)
    y, _ = _transport(x, pi, even_only=True)
    return SymClassLabel(pi, PLUS if y.sign == canonical_rep(pi, x.cover).sign else MINUS)


def alt_class_rep(label: SymClassLabel, cover: str) -> CoverElt:
    rep = canonical_rep(label.cycle_type, cover)
    if label.tag in (MINUS, MINUS_B):
        rep = times_z(rep)
    if label.tag in (PLUS_B, MINUS_B):
        rep = conjugate_by(rep, generator(rep.n, 1, cover))
    return rep


def sym_tag_of_alt(label: SymClassLabel) -> SymClassLabel:
    """The class of the double cover of S_n containing an alternating class"""
    pi = label.cycle_type
    if not is_split_type(pi):
        return SymClassLabel(pi, UNSPLIT)
    return SymClassLabel(pi, PLUS if label.tag in (PLUS, PLUS_B) else MINUS)


def alt_classes(n: int, cover: str, p: int | None = None) -> list[dict]:
    out = []
    half = factorial(n) // 2
    for pi in sorted(partitions_of(n)):
        if sigma(pi) != 1:
            continue
        z_pi = centralizer_order(pi)
        size = factorial(n) // z_pi
        regular = p is None or all(a % p for a in pi)
        kind = alt_split_kind(pi)
        tags = {4: (PLUS, MINUS, PLUS_B, MINUS_B), 2: (PLUS, MINUS), 1: (UNSPLIT,)}[kind]
        class_size = {4: size // 2, 2: size, 1: 2 * size}[kind]
        for tag in tags:
            out.append({"label": SymClassLabel(pi, tag), "size": class_size,
                        "centralizer": 2 * half // class_size, "p_regular": regular})
    return out


# C/S factorization

def s_beta(beta: Partition, p: int, n: int, cover: str) -> CoverElt:
    """o((1..p b1)(p b1 + 1 ..)...) for a partition beta with odd parts"""
    if not is_odd_parts(beta):
        raise ValueError(f"beta must have odd parts, got {beta}")
    if p * sum(beta) > n:
        raise ValueError(f"p|beta| = {p * sum(beta)} exceeds n = {n}")
    pi = tuple(p * b for b in beta) + (1,) * (n - p * sum(beta))
    return odd_lift(standard_perm(pi), cover)


def in_c_set(pi: Partition, p: int) -> bool:
    """No part an odd multiple of p"""
    return all(not (a % p == 0 and (a // p) % 2 == 1) for a in pi)


def decompose_cs(x: CoverElt, p: int) -> tuple[CoverElt, CoverElt]:
    """x = x_C x_S with x_S the odd-order lift of the cycles of length an odd multiple of p"""
    s_perm = list(range(x.n))
    for cyc in perm_cycles(x.perm):
        if len(cyc) % p == 0 and (len(cyc) // p) % 2 == 1:
            for point in cyc:
                s_perm[point] = x.perm[point]
    x_s = odd_lift(tuple(s_perm), x.cover)
    x_c = multiply(x, invert(x_s))
    return x_c, x_s

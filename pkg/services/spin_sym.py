"""Spin characters of the double covers of S_n and A_n.

Values on classes of odd-part type come from the Murnaghan-Nakayama
recursion stripping one odd cycle at a time; off those classes only the
special values at type lambda survive. Associate pairs are labelled so
that the `+` character takes the anchor value on the `plus` class of its
own type.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from config import check_group_order
from services.covers import (
    MINUS,
    MINUS_B,
    PLUS,
    PLUS_B,
    UNSPLIT,
    SymClassLabel,
    alt_classes,
    alt_split_kind,
    central_z,
    classify_alt,
    classify_sym,
    generator,
    sym_classes,
    sym_tag_of_alt,
)
from services.cyclo import CycloNum, conjugate, csum, i_power, i_sqrt_odd, sqrt_int, sqrt_rational
from services.dixon import compare_rows, spin_rows
from services.groups import EnumeratedGroup
from services.partitions import (
    Partition,
    is_odd_parts,
    is_strict,
    remove_q_bars,
    render_partition,
    sigma,
    strict_partitions,
)

logger = logging.getLogger(__name__)

SELF = ""
AMBIENTS = ("sym", "alt")


@dataclass(frozen=True, slots=True)
class SpinCharLabel:
    partition: Partition
    variant: str
    ambient: str = "sym"

    def render(self) -> str:
        return f"({render_partition(self.partition)}){self.variant}"

    @property
    def sign(self) -> int:
        return -1 if self.variant == "-" else 1


def spin_labels(n: int, ambient: str = "sym") -> list[SpinCharLabel]:
    """Labels of the spin characters, one or two per strict partition of n"""
    if ambient not in AMBIENTS:
        raise ValueError(f"ambient must be one of {AMBIENTS}, got '{ambient}'")
    out = []
    for lam in strict_partitions(n):
        self_assoc = (sigma(lam) == 1) == (ambient == "sym")
        for v in ((SELF,) if self_assoc else ("+", "-")):
            out.append(SpinCharLabel(lam, v, ambient))
    return out


def check_label(char: SpinCharLabel) -> None:
    lam = char.partition
    if not is_strict(lam):
        raise ValueError(f"{lam} is not a strict partition")
    self_assoc = (sigma(lam) == 1) == (char.ambient == "sym")
    if self_assoc != (char.variant == SELF):
        kind = "self-associate" if self_assoc else "an associate pair"
        raise ValueError(f"{char.render()} on {char.ambient}: the character is {kind}")


def qcycle_sign(q: int) -> int:
    """(-1)^((q^2-1)/8)"""
    return -1 if (q * q - 1) // 8 % 2 else 1


# odd-part classes

@lru_cache(maxsize=None)
def odd_class_value(lam: Partition, pi: Partition, strip: str = "largest") -> CycloNum:
    """Value of xi_lam (either member of a pair) on the odd-order lift of type pi"""
    if sum(lam) != sum(pi):
        raise ValueError(f"size mismatch: |{lam}| != |{pi}|")
    if not pi:
        return CycloNum.coerce(1)
    q = pi[0] if strip == "largest" else pi[-1]
    rest = list(pi)
    rest.remove(q)
    rest = tuple(rest)
    total = CycloNum()
    for mu, leg in remove_q_bars(lam, q):
        weight = 2 if sigma(lam) == 1 and sigma(mu) == -1 else 1
        total = total + odd_class_value(mu, rest, strip) * ((-1) ** leg * weight)
    return total * qcycle_sign(q)


# special values

def strict_minus_anchor(lam: Partition, cover: str) -> CycloNum:
    """xi^+_lam on the plus class of its own type, lam in D^-"""
    n, l = sum(lam), len(lam)
    exponent = (n - l + 1) // 2 if cover == "-" else (1 - (n - l)) // 2
    return i_power(exponent) * sqrt_rational(Fraction(prod(lam), 2))


def associator_anchor(lam: Partition) -> CycloNum:
    """xi-bar^+ - xi-bar^- on the plus class of type lam, lam in D^+"""
    value = CycloNum.coerce(1)
    evens = [a for a in lam if a % 2 == 0]
    for q in lam:
        if q % 2:
            value = value * i_sqrt_odd(q) * qcycle_sign(q)
    if evens:
        value = value * i_power((sum(evens) - len(evens)) // 2) * sqrt_int(prod(evens))
    return value


def _tag_sign(tag: str) -> int:
    return -1 if tag in (MINUS, PLUS_B) else 1


def xi_value(char: SpinCharLabel, label: SymClassLabel, cover: str = "+") -> CycloNum:
    """Value of a spin character of the double cover of S_n on a class"""
    check_label(char)
    lam, pi = char.partition, label.cycle_type
    if sum(lam) != sum(pi):
        raise ValueError(f"size mismatch: |{render_partition(lam)}| != |{render_partition(pi)}|")
    if label.tag == UNSPLIT:
        return CycloNum()
    sign = -1 if label.tag == MINUS else 1
    if is_odd_parts(pi):
        return odd_class_value(lam, pi) * sign
    if char.variant != SELF and pi == lam:
        return strict_minus_anchor(lam, cover) * (sign * char.sign)
    return CycloNum()


def xi_alt_value(char: SpinCharLabel, label: SymClassLabel, cover: str = "+") -> CycloNum:
    """Value of a spin character of the double cover of A_n on a class"""
    check_label(char)
    lam, pi = char.partition, label.cycle_type
    if sigma(pi) != 1:
        raise ValueError(f"type ({render_partition(pi)}) is not in the alternating group")
    outer = SpinCharLabel(lam, "+" if sigma(lam) == -1 else SELF, "sym")
    restricted = xi_value(outer, sym_tag_of_alt(label), cover)
    if char.variant == SELF:
        return restricted
    diff = CycloNum()
    if pi == lam and label.tag != UNSPLIT:
        diff = associator_anchor(lam) * _tag_sign(label.tag)
    return (restricted + diff * char.sign) / 2


def alt_associator_value(lam: Partition, label: SymClassLabel) -> CycloNum:
    """xi-bar^+_lam - xi-bar^-_lam on an alternating class"""
    if label.cycle_type != lam or label.tag == UNSPLIT:
        return CycloNum()
    return associator_anchor(lam) * _tag_sign(label.tag)


# Murnaghan-Nakayama expansion

def mn_expand(char: SpinCharLabel, q: int) -> list[tuple[SpinCharLabel, CycloNum]]:
    """Coefficients of xi_lam(g * o(q-cycle)) in the characters xi_mu(g) of the smaller cover"""
    check_label(char)
    if q % 2 == 0:
        raise ValueError(f"q must be odd, got {q}")
    lam = char.partition
    out = []
    for mu, leg in remove_q_bars(lam, q):
        base = CycloNum.coerce(qcycle_sign(q) * (-1) ** leg)
        if sigma(mu) == 1:
            out.append((SpinCharLabel(mu, SELF), base))
        elif sigma(lam) == 1:
            for eta in ("+", "-"):
                out.append((SpinCharLabel(mu, eta), base))
        else:
            twist = i_sqrt_odd(q) * qcycle_sign(q)
            for eta in ("+", "-"):
                e = char.sign * (-1 if eta == "-" else 1)
                out.append((SpinCharLabel(mu, eta), (base + twist * e) / 2))
    return out


# tables and inner products

def spin_degree(lam: Partition) -> int:
    """Schur's degree formula for xi_lam (each member of a pair)"""
    n, l = sum(lam), len(lam)
    g = Fraction(factorial(n), prod(factorial(a) for a in lam))
    for i in range(l):
        for j in range(i + 1, l):
            g *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    value = g * 2 ** ((n - l) // 2)
    if value.denominator != 1:
        raise ValueError(f"non-integral degree for {lam}")
    return int(value)


def spin_table(n: int, ambient: str = "sym", cover: str = "+", p: int | None = None) -> dict:
    """All spin characters of the double cover of S_n or A_n on all classes"""
    classes = sym_classes(n, cover, p) if ambient == "sym" else alt_classes(n, cover, p)
    labels = spin_labels(n, ambient)
    evaluate = xi_value if ambient == "sym" else xi_alt_value
    values = [[evaluate(ch, c["label"], cover) for c in classes] for ch in labels]
    logger.debug("spin table n=%d %s cover %s: %d x %d", n, ambient, cover, len(labels), len(classes))
    return {"n": n, "ambient": ambient, "cover": cover, "classes": classes,
            "characters": labels, "values": values}


def group_order(classes: list[dict]) -> int:
    return sum(c["size"] for c in classes)


def inner_product(a: list[CycloNum], b: list[CycloNum], classes: list[dict]) -> CycloNum:
    total = csum(x * conjugate(y) * c["size"] for x, y, c in zip(a, b, classes))
    return total / group_order(classes)


# Dixon oracle

@lru_cache(maxsize=None)
def _sym_group(n: int, cover: str) -> EnumeratedGroup:
    gens = [generator(n, j, cover) for j in range(1, n)] + [central_z(n, cover)]
    return EnumeratedGroup(gens, n, cover, name=f"S~_{n}")


def sym_group(n: int, cover: str = "+") -> EnumeratedGroup:
    """The double cover of S_n enumerated from t_1, ..., t_(n-1) and z"""
    check_group_order(2 * factorial(n), f"S~_{n}")
    return _sym_group(n, cover)


def dixon_check(n: int, ambient: str = "sym", cover: str = "+") -> list[str]:
    """Differences between spin_table and the Dixon spin rows of the enumerated cover"""
    group = sym_group(n, cover)
    table = spin_table(n, ambient, cover)
    cs, rows = spin_rows(group, even=ambient == "alt")
    classify = classify_sym if ambient == "sym" else classify_alt
    position = {classify(group.elements[cs.rep(i)]): i for i in range(len(cs.classes))}
    diffs = []
    order = []
    for c in table["classes"]:
        if c["label"] not in position:
            diffs.append(f"class {c['label'].render()} not found in the enumerated group")
            continue
        order.append(position[c["label"]])
    if diffs:
        return diffs
    oracle = [[row[i] for i in order] for row in rows]
    if len(oracle) != len(table["values"]):
        diffs.append(f"{len(table['values'])} constructed characters, {len(oracle)} from Dixon")
    for k in compare_rows(table["values"], oracle):
        diffs.append(f"{table['characters'][k].render()} has no matching Dixon row")
    if diffs:
        logger.warning("Dixon check n=%d %s cover %s: %d diffs", n, ambient, cover, len(diffs))
    return diffs

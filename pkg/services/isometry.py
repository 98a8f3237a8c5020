"""Signed bijections between a spin block and the spin characters of its local group.

I sends the block of the double cover of S_n with p-bar core gamma and
weight w onto the spin characters of N_p wr S_w; I_A does the same for the
double cover of A_n and the even part of N_p wr S_w. verify_broue checks the
perfect isometry conditions on every pair of classes of the two groups.
"""
import logging
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from services.blocks import block_characters, block_for_core, psi
from services.covers import (
    CoverElt,
    alt_classes,
    classify_alt,
    classify_sym,
    generator,
    in_c_set,
    invert,
    is_even,
    multiply,
    shift,
    sym_classes,
    sym_tag_of_alt,
)
from services.cyclo import CycloNum, csum, is_p_integral
from services.groups import EnumeratedGroup
from services.partitions import (
    Partition,
    bar_sign,
    is_strict,
    quotient_sign,
    render_partition,
    sigma,
    size,
)
from services.spin_sym import SELF, SpinCharLabel, alt_associator_value, xi_alt_value, xi_value
from services.wreath import WreathCharLabel, wreath_group, wreath_labels

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class GluedLabel:
    """xi_gamma . chi on the Brauer correspondent S~_m (N~_p^w S~_w)[m]"""

    core: Partition
    char: WreathCharLabel

    def render(self) -> str:
        return f"({render_partition(self.core)}).{self.char.render()}"


@dataclass
class CharacterSide:
    """Classes of one group and the values of its block characters on them"""

    name: str
    classes: list[dict]
    labels: list
    values: list[list[CycloNum]]

    def row(self, label) -> list[CycloNum]:
        return self.values[self.labels.index(label)]

    @property
    def order(self) -> int:
        return sum(c["size"] for c in self.classes)


@dataclass(frozen=True, slots=True)
class MapEntry:
    source: object
    sign: int
    target: object

    def as_dict(self) -> dict:
        return {"source": self.source.render(), "sign": self.sign, "target": self.target.render()}


@dataclass
class IsometryMap:
    p: int
    n: int
    core: Partition
    weight: int
    side: str
    cover: str
    source: CharacterSide
    target: CharacterSide
    entries: list[MapEntry] = field(default_factory=list)
    brauer: bool = False

    def with_entries(self, entries: list[MapEntry]) -> "IsometryMap":
        return replace(self, entries=list(entries))

    def describe(self) -> dict:
        return {"n": self.n, "p": self.p, "core": list(self.core), "weight": self.weight,
                "side": self.side, "cover": self.cover, "brauer": self.brauer,
                "source": self.source.name, "target": self.target.name,
                "entries": [e.as_dict() for e in self.entries]}


# the two sides

def sym_side(n: int, p: int, core: Partition, cover: str = "+", side: str = "sym") -> CharacterSide:
    block = block_for_core(n, p, core, side)
    if side == "sym":
        classes, evaluate = sym_classes(n, cover, p), xi_value
    else:
        classes, evaluate = alt_classes(n, cover, p), xi_alt_value
    classes = [dict(c, in_c=in_c_set(c["label"].cycle_type, p)) for c in classes]
    labels = block_characters(block)
    values = [[evaluate(ch, c["label"], cover) for c in classes] for ch in labels]
    name = f"{'S' if side == 'sym' else 'A'}~_{n} block ({render_partition(tuple(core))})"
    return CharacterSide(name, classes, labels, values)


def wreath_side(p: int, w: int, cover: str = "+", ambient: str = "sym") -> CharacterSide:
    group = wreath_group(p, w, cover)
    classes = group.classes() if ambient == "sym" else group.alt_classes()
    classes = [dict(c, in_c=all(part % 2 == 0 for part in c["label"].wtype[0])) for c in classes]
    labels = wreath_labels(p, w, ambient)
    values = [group.char_values(ch) for ch in labels]
    name = f"N~_{p}^{w} S~_{w}" + (" ∩ A~" if ambient == "alt" else "")
    return CharacterSide(name, classes, labels, values)


# signs

def isometry_sign(lam: Partition, p: int, w: int) -> int:
    """delta(lam) delta(Psi(lam)) (-1)^(w(p^2-1)/8 + |Psi(lam)_0|)"""
    quotient = psi(lam, p)
    exponent = w * (p * p - 1) // 8 + size(quotient[0])
    return bar_sign(lam, p) * quotient_sign(quotient, p) * (-1) ** exponent


def pair_sign(lam: Partition, p: int, w: int) -> int:
    """eta(lam) / eta: which member of the target pair xi_lam^+ is sent to"""
    quotient = psi(lam, p)
    lam0 = quotient[0]
    twist = size(lam0) - len(lam0) + (0 if sigma(lam0) == 1 else 1)
    exponent = w + (p - 1) * twist // 4
    return bar_sign(lam, p) * quotient_sign(quotient, p) * (-1) ** exponent


def _variant(sign: int) -> str:
    return "+" if sign > 0 else "-"


def _identity_map(n: int, p: int, core: Partition, side: str, cover: str) -> IsometryMap:
    source = sym_side(n, p, core, cover, side)
    entries = [MapEntry(ch, 1, ch) for ch in source.labels]
    return IsometryMap(p, n, tuple(core), 0, side, cover, source, source, entries)


def _check_case(n: int, p: int, core: Partition) -> int:
    core = tuple(core)
    block = block_for_core(n, p, core)
    if sigma(core) != 1:
        raise ValueError(f"core ({render_partition(core)}) has sigma = -1; this map needs sigma(core) = +1")
    if block.weight >= p:
        raise ValueError(f"non-abelian defect: weight {block.weight} >= p={p}")
    return block.weight


def build_I(n: int, p: int, core: Partition, cover: str = "+") -> IsometryMap:
    """The signed bijection from the sym block onto the spin characters of N~_p^w S~_w"""
    w = _check_case(n, p, core)
    if w == 0:
        return _identity_map(n, p, core, "sym", cover)
    source = sym_side(n, p, core, cover, "sym")
    target = wreath_side(p, w, cover, "sym")
    entries = []
    for ch in source.labels:
        lam = ch.partition
        sign = isometry_sign(lam, p, w)
        quotient = psi(lam, p, core)
        if ch.variant == SELF:
            image = WreathCharLabel(quotient, SELF)
        else:
            image = WreathCharLabel(quotient, _variant(ch.sign * pair_sign(lam, p, w)))
        entries.append(MapEntry(ch, sign, image))
    logger.info("built I for n=%d p=%d core (%s): %d entries", n, p, render_partition(tuple(core)), len(entries))
    return IsometryMap(p, n, tuple(core), w, "sym", cover, source, target, entries)


def build_IA(n: int, p: int, core: Partition, cover: str = "+") -> IsometryMap:
    """The alt-side analogue onto the even part of N~_p^w S~_w"""
    w = _check_case(n, p, core)
    if w == 0:
        return _identity_map(n, p, core, "alt", cover)
    source = sym_side(n, p, core, cover, "alt")
    target = wreath_side(p, w, cover, "alt")
    entries = []
    for ch in source.labels:
        quotient = psi(ch.partition, p, core)
        image = WreathCharLabel(quotient, ch.variant, "alt")
        entries.append(MapEntry(ch, isometry_sign(ch.partition, p, w), image))
    logger.info("built I_A for n=%d p=%d core (%s): %d entries", n, p, render_partition(tuple(core)), len(entries))
    return IsometryMap(p, n, tuple(core), w, "alt", cover, source, target, entries)


# kernels

def image_rows(imap: IsometryMap) -> list[list[CycloNum]]:
    return [[v * e.sign for v in imap.target.row(e.target)] for e in imap.entries]


def kernel_matrix(imap: IsometryMap) -> list[list[CycloNum]]:
    """K[x][x'] = sum over the block of conj(chi(x)) I(chi)(x')"""
    left = [[v.conjugate() for v in imap.source.row(e.source)] for e in imap.entries]
    right = image_rows(imap)
    nx, ny = len(imap.source.classes), len(imap.target.classes)
    return [[csum(a[i] * b[j] for a, b in zip(left, right) if a[i] and b[j]) for j in range(ny)]
            for i in range(nx)]


def kernel(imap: IsometryMap, x: int, x_prime: int) -> CycloNum:
    """The kernel at class x of the source group and class x' of the target"""
    if not 0 <= x < len(imap.source.classes) or not 0 <= x_prime < len(imap.target.classes):
        raise ValueError(f"class pair ({x}, {x_prime}) out of range")
    total = CycloNum()
    for e in imap.entries:
        a = imap.source.row(e.source)[x]
        b = imap.target.row(e.target)[x_prime]
        if a and b:
            total = total + a.conjugate() * b * e.sign
    return total


def _gram_defects(rows: list[list[CycloNum]], classes: list[dict], names: list[str], where: str) -> list[dict]:
    order = sum(c["size"] for c in classes)
    bad = []
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            value = csum(x * y.conjugate() * c["size"] for x, y, c in zip(rows[a], rows[b], classes)) / order
            if value != (1 if a == b else 0):
                bad.append({"kind": "isometry", "where": where, "left": names[a], "right": names[b],
                            "value": value.render()})
    return bad


def verify_broue(imap: IsometryMap, generalized: bool | None = None, first_only: bool = False) -> dict:
    """Check integrality, regular/singular vanishing and (on the sym side) C-set vanishing on every class pair"""
    started = time.perf_counter()
    p = imap.p
    if generalized is None:
        generalized = imap.side == "sym"
    names = [e.source.render() for e in imap.entries]
    violations = _gram_defects([imap.source.row(e.source) for e in imap.entries], imap.source.classes, names,
                               "source")
    violations += _gram_defects(image_rows(imap), imap.target.classes, names, "target")
    K = kernel_matrix(imap)
    checked = 0
    for i, cx in enumerate(imap.source.classes):
        for j, cy in enumerate(imap.target.classes):
            if first_only and violations:
                break
            checked += 1
            value = K[i][j]
            if not value:
                continue
            pair = {"x": cx["label"].render(), "x_prime": cy["label"].render(), "value": value.render()}
            if not is_p_integral(value / cx["centralizer"], p):
                violations.append({"kind": "integrality_source", **pair})
            if not is_p_integral(value / cy["centralizer"], p):
                violations.append({"kind": "integrality_target", **pair})
            if cx["p_regular"] != cy["p_regular"]:
                violations.append({"kind": "vanishing", **pair})
            if generalized and cx["in_c"] != cy["in_c"]:
                violations.append({"kind": "generalized", **pair})
    runtime = time.perf_counter() - started
    if violations:
        logger.warning("perfect isometry check n=%d p=%d %s: %d violations",
                       imap.n, imap.p, imap.side, len(violations))
    else:
        logger.info("perfect isometry check n=%d p=%d %s: %d pairs pass", imap.n, imap.p, imap.side, checked)
    return {**{k: v for k, v in imap.describe().items() if k != "entries"},
            "pairs_checked": checked, "violations": violations, "runtime": round(runtime, 3)}


def mutation_report(imap: IsometryMap) -> list[dict]:
    """Flip each sign and swap each +- pair; sign flips must be caught"""
    out = []
    for k, e in enumerate(imap.entries):
        entries = list(imap.entries)
        entries[k] = MapEntry(e.source, -e.sign, e.target)
        found = len(verify_broue(imap.with_entries(entries), first_only=True)["violations"])
        out.append({"mutation": f"flip {e.source.render()}", "violations": found,
                    "status": "detected" if found else "undetected"})
    pairs: dict = {}
    for k, e in enumerate(imap.entries):
        if e.source.variant in ("+", "-"):
            pairs.setdefault(e.source.partition, []).append(k)
    for lam, (a, b) in pairs.items():
        entries = list(imap.entries)
        ea, eb = entries[a], entries[b]
        entries[a] = MapEntry(ea.source, ea.sign, eb.target)
        entries[b] = MapEntry(eb.source, eb.sign, ea.target)
        found = len(verify_broue(imap.with_entries(entries), first_only=True)["violations"])
        out.append({"mutation": f"swap ({render_partition(lam)})+-", "violations": found,
                    "status": "detected" if found else "label-insensitive"})
    undetected = [m for m in out if m["status"] == "undetected"]
    if undetected:
        logger.warning("%d sign flips pass the perfect isometry check", len(undetected))
    return out


def coherence_check(n: int, p: int, core: Partition, cover: str = "+") -> list[dict]:
    """(K_A - K/2)(x, x') vanishes unless x has type lam, lam strict with sigma(lam) = +1"""
    full, alt = build_I(n, p, core, cover), build_IA(n, p, core, cover)
    K, KA = kernel_matrix(full), kernel_matrix(alt)
    sym_labels = [c["label"] for c in full.source.classes]
    x_parent = [sym_labels.index(sym_tag_of_alt(c["label"])) for c in alt.source.classes]
    if alt.weight:
        y_parent = wreath_group(p, alt.weight, cover).parent_positions()
    else:
        y_parent = x_parent
    bad = []
    for i, cx in enumerate(alt.source.classes):
        pi = cx["label"].cycle_type
        allowed = is_strict(pi) and sigma(pi) == 1
        for j, cy in enumerate(alt.target.classes):
            diff = KA[i][j] - K[x_parent[i]][y_parent[j]] * Fraction(1, 2)
            if diff and not allowed:
                bad.append({"x": cx["label"].render(), "x_prime": cy["label"].render(), "value": diff.render()})
    if bad:
        logger.warning("I_A and I disagree off D+ types at %d pairs", len(bad))
    return bad


# composition with the Brauer correspondent

class Correspondent:
    """S~_m (N~_p^w S~_w)[m] inside the cover of S_(m + pw), m = |gamma|"""

    def __init__(self, p: int, w: int, core: Partition, cover: str = "+"):
        self.p, self.w, self.core, self.cover = p, w, tuple(core), cover
        self.m = size(self.core)
        self.n = self.m + p * w
        self.local = wreath_group(p, w, cover)
        gens = [generator(self.n, j, cover) for j in range(1, self.m)]
        gens += [shift(g, self.m, self.n) for g in self.local.group.generators]
        self.group = EnumeratedGroup(gens, self.n, cover, name=f"S~_{self.m} x N~_{p}^{w} S~_{w}")

    def split(self, x: CoverElt) -> tuple[CoverElt, CoverElt]:
        """x = x0 x1 with x0 in S~_m on the first m points and x1 in the shifted local group"""
        m, n = self.m, self.n
        perm0 = x.perm[:m]
        x0_big = CoverElt(perm0 + tuple(range(m, n)), 0, self.cover)
        x1_big = multiply(invert(x0_big), x)
        x0 = CoverElt(perm0, 0, self.cover)
        x1 = CoverElt(tuple(v - m for v in x1_big.perm[m:]), x1_big.sign, self.cover)
        return x0, x1

    def side(self) -> CharacterSide:
        g = self.group
        reps = [g.elements[g.representative(c)] for c in range(len(g.classes))]
        parts = [self.split(x) for x in reps]
        local_classes = self.local.classes()
        core_label = SpinCharLabel(self.core, SELF)
        classes = []
        for c, (x0, x1) in enumerate(parts):
            local = local_classes[self.local.position_of(x1)]["label"]
            classes.append({
                "label": _PairLabel(classify_sym(x0).render(), local.render()),
                "size": g.class_size(c),
                "centralizer": g.centralizer_order(c),
                "p_regular": g.class_order(c) % self.p != 0,
                "in_c": in_c_set(classify_sym(x0).cycle_type, self.p) and all(a % 2 == 0 for a in local.wtype[0]),
            })
        core_values = [xi_value(core_label, classify_sym(x0), self.cover) for x0, _ in parts]
        core_deltas = [alt_associator_value(self.core, classify_alt(x0)) if is_even(x0) else CycloNum()
                       for x0, _ in parts]
        positions = [self.local.position_of(x1) for _, x1 in parts]
        labels, values = [], []
        for ch in wreath_labels(self.p, self.w):
            local_values = self.local.char_values(ch)
            row = []
            for k, (_, x1) in enumerate(parts):
                head = core_values[k]
                if ch.variant != SELF and not is_even(x1):
                    head = core_deltas[k]
                row.append(head * local_values[positions[k]])
            labels.append(GluedLabel(self.core, ch))
            values.append(row)
        logger.debug("correspondent of core (%s), w=%d: %d classes", render_partition(self.core), self.w, len(classes))
        return CharacterSide(g.name, classes, labels, values)


@dataclass(frozen=True, slots=True)
class _PairLabel:
    head: str
    tail: str

    def render(self) -> str:
        return f"{self.head}.{self.tail}"


def brauer_composed(n: int, p: int, core: Partition, cover: str = "+", side: str = "sym") -> IsometryMap:
    """I followed by chi -> xi_gamma . chi onto the Brauer correspondent's spin characters"""
    if side != "sym":
        raise ValueError("the composed map is built for the sym side only")
    base = build_I(n, p, core, cover)
    if not base.core or base.weight == 0:
        return replace(base, brauer=True)
    target = Correspondent(p, base.weight, base.core, cover).side()
    entries = [MapEntry(e.source, e.sign, GluedLabel(base.core, e.target)) for e in base.entries]
    logger.info("composed I with the correspondent of core (%s)", render_partition(base.core))
    return IsometryMap(p, n, base.core, base.weight, "sym", cover, base.source, target, entries, brauer=True)

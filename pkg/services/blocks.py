"""p-blocks of the double covers of S_n and A_n and their local counterparts.

A block is named by its p-bar core and weight. Block idempotents are only
labels here; everything checkable about a block is read off its character
list and the character tables.
"""
import logging
from dataclasses import dataclass

from services.covers import in_c_set
from services.cyclo import csum
from services.partitions import (
    MultiPartition,
    Partition,
    bar_core,
    bar_quotient,
    from_bar_core_quotient,
    is_strict,
    render_multipartition,
    render_partition,
    sigma,
    size,
    strict_with_core,
)
from services.spin_sym import SELF, SpinCharLabel, spin_labels, spin_table
from services.wreath import wreath_labels

logger = logging.getLogger(__name__)

SIDES = ("sym", "alt", "wreath")


@dataclass(frozen=True, slots=True)
class BlockDescriptor:
    """p-block of weight w with p-bar core gamma; variant picks one of a split pair"""

    p: int
    n: int
    core: Partition
    weight: int
    side: str
    split: bool = False
    variant: str = SELF
    ambient: str = "sym"

    @property
    def abelian_defect(self) -> bool:
        return self.weight < self.p

    def render(self) -> str:
        core = render_partition(self.core) or "∅"
        tail = f"{self.variant}" if self.split else ""
        return f"{self.side} n={self.n} p={self.p} core=({core}){tail} w={self.weight}"

    def as_dict(self) -> dict:
        return {
            "p": self.p, "n": self.n, "core": list(self.core), "weight": self.weight,
            "side": self.side, "ambient": self.ambient, "split": self.split, "variant": self.variant,
            "abelian_defect": self.abelian_defect,
        }


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got '{side}'")


def _splits_at_weight_zero(core: Partition, side: str) -> bool:
    """The sym side splits sigma = -1 cores, the alt side sigma = +1 cores"""
    return (side == "sym" and sigma(core) == -1) or (side == "alt" and sigma(core) == 1)


def block_of(lam: Partition, p: int, side: str = "sym", variant: str = SELF) -> BlockDescriptor:
    """The block holding xi_lam (or xi_lam^variant when the block splits)"""
    _check_side(side)
    if side == "wreath":
        raise ValueError("wreath blocks are built with wreath_block(p, w)")
    if not is_strict(lam):
        raise ValueError(f"{lam} is not a strict partition")
    core = bar_core(lam, p)
    n = size(lam)
    weight = (n - size(core)) // p
    split = weight == 0 and _splits_at_weight_zero(core, side)
    if split and variant not in ("+", "-"):
        variant = "±"
    if not split:
        variant = SELF
    return BlockDescriptor(p, n, core, weight, side, split, variant, side)


def block_for_core(n: int, p: int, core: Partition, side: str = "sym", variant: str = SELF) -> BlockDescriptor:
    """The block of the double cover of S_n or A_n labelled by a p-bar core"""
    _check_side(side)
    core = tuple(core)
    if not is_strict(core):
        raise ValueError(f"{core} is not a strict partition")
    if bar_core(core, p) != core:
        raise ValueError(f"({render_partition(core)}) is not a {p}-bar core")
    rest = n - size(core)
    if rest < 0 or rest % p:
        raise ValueError(f"n={n} is not |core| + {p}w for core ({render_partition(core)})")
    weight = rest // p
    split = weight == 0 and _splits_at_weight_zero(core, side)
    if not split:
        variant = SELF
    elif variant not in ("+", "-"):
        variant = "±"
    return BlockDescriptor(p, n, core, weight, side, split, variant, side)


def wreath_block(p: int, w: int, ambient: str = "sym") -> BlockDescriptor:
    """All spin characters of N_p wr S_w (or of its even part) as one block"""
    if ambient not in ("sym", "alt"):
        raise ValueError(f"ambient must be 'sym' or 'alt', got '{ambient}'")
    return BlockDescriptor(p, p * w, (), w, "wreath", ambient=ambient)


def block_characters(block: BlockDescriptor) -> list:
    """Spin character labels of the block, with +- doubling by sigma"""
    if block.side == "wreath":
        return wreath_labels(block.p, block.weight, block.ambient)
    members = set(strict_with_core(block.n, block.core, block.p))
    out = [ch for ch in spin_labels(block.n, block.side) if ch.partition in members]
    if block.split and block.variant in ("+", "-"):
        out = [ch for ch in out if ch.variant == block.variant]
    logger.debug("block %s: %d characters", block.render(), len(out))
    return out


def psi(lam: Partition, p: int, core: Partition | None = None) -> MultiPartition:
    """The p-bar quotient of lam, checked against an expected core"""
    if core is not None and bar_core(lam, p) != tuple(core):
        raise ValueError(
            f"({render_partition(lam)}) has {p}-bar core ({render_partition(bar_core(lam, p))}), "
            f"not ({render_partition(tuple(core))})"
        )
    return bar_quotient(lam, p)


def psi_inverse(quotient: MultiPartition, core: Partition, p: int) -> Partition:
    return from_bar_core_quotient(tuple(core), quotient, p)


def psi_table(n: int, p: int, core: Partition) -> list[dict]:
    """lam -> Psi(lam) over the block, with the reconstruction check"""
    out = []
    for lam in strict_with_core(n, tuple(core), p):
        quotient = psi(lam, p, core)
        if psi_inverse(quotient, core, p) != lam:
            raise ValueError(f"Psi does not invert at ({render_partition(lam)})")
        out.append({"partition": lam, "quotient": quotient, "sigma": sigma(lam)})
    return out


def _idempotent(name: str, m: int, core: Partition, variant: str = "") -> str:
    return f"{name}{variant}_{m},({render_partition(core)})"


def brauer_data(block: BlockDescriptor) -> dict:
    """Defect group, its normalizer and the Brauer correspondent's idempotent"""
    p, w, core = block.p, block.weight, block.core
    if block.side == "wreath":
        raise ValueError("brauer_data applies to blocks of the double covers of S_n and A_n")
    if w >= p:
        raise ValueError(f"non-abelian defect: weight {w} >= p={p}")
    m = block.n - p * w
    if w == 0:
        return {"defect_group": "trivial", "defect_order": 1,
                "normalizer": f"S~_{block.n}" if block.side == "sym" else f"A~_{block.n}",
                "idempotent": _idempotent("e" if block.side == "sym" else "ebar", m, core,
                                          block.variant if block.split else "")}
    if block.side == "sym":
        idem = (_idempotent("e", m, core) if sigma(core) == 1 else
                f"{_idempotent('e', m, core, '+')} + {_idempotent('e', m, core, '-')}")
        normalizer = f"S~_{m} (N~_{p}^{w} S~_{w})[{m}]"
    else:
        idem = (_idempotent("ebar", m, core) if sigma(core) == -1 else
                f"{_idempotent('ebar', m, core, '+')} + {_idempotent('ebar', m, core, '-')}")
        normalizer = f"S~_{m} (N~_{p}^{w} S~_{w})[{m}] ∩ A~_{block.n}"
    return {"defect_group": f"C_{p}^{w}", "defect_order": p ** w, "normalizer": normalizer, "idempotent": idem}


def blocks_of_n(n: int, p: int, side: str = "sym") -> list[dict]:
    """Every block of spin characters of the double cover of S_n or A_n with its members"""
    _check_side(side)
    seen: dict[tuple, BlockDescriptor] = {}
    for ch in spin_labels(n, side):
        block = block_of(ch.partition, p, side, ch.variant)
        seen.setdefault((block.core, block.variant), block)
    out = []
    for key in sorted(seen, key=lambda k: (k[0], k[1])):
        block = seen[key]
        labels = block_characters(block)
        out.append({"block": block.as_dict(), "characters": [ch.render() for ch in labels],
                    "quotients": [render_multipartition(psi(ch.partition, p)) for ch in labels]})
    logger.info("%d blocks of spin characters for n=%d p=%d (%s)", len(out), n, p, side)
    return out


def c_block_check(n: int, p: int, cover: str = "+") -> list[dict]:
    """Characters linked through res_C that lie in different bar-core blocks"""
    table = spin_table(n, "sym", cover, p)
    classes = table["classes"]
    c_rows = [k for k, c in enumerate(classes) if in_c_set(c["label"].cycle_type, p)]
    labels: list[SpinCharLabel] = table["characters"]
    values = table["values"]
    bad = []
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            linked = csum(values[a][k] * values[b][k].conjugate() * classes[k]["size"] for k in c_rows)
            if not linked:
                continue
            if bar_core(labels[a].partition, p) != bar_core(labels[b].partition, p):
                bad.append({"left": labels[a].render(), "right": labels[b].render()})
    if bad:
        logger.warning("C-blocks cross bar-core blocks for n=%d p=%d: %d pairs", n, p, len(bad))
    return bad

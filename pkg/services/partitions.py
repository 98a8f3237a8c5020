"""Partition combinatorics: hooks, bars, cores, quotients and signs.

Partitions are weakly decreasing tuples of positive integers, the empty
partition is (). A multipartition is a tuple of partitions
(lambda_0, lambda_1, ..., lambda_{(p-1)/2}) with lambda_0 strict.
"""
import logging
from functools import lru_cache
from math import factorial, prod

from config import VerificationError

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]
MultiPartition = tuple[Partition, ...]


def size(lam: Partition) -> int:
    return sum(lam)


def sigma(lam: Partition) -> int:
    """(-1)^(|lam| - l(lam)); +1 on the empty partition"""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def is_strict(lam: Partition) -> bool:
    return all(a > b for a, b in zip(lam, lam[1:]))


def is_odd_parts(lam: Partition) -> bool:
    return all(a % 2 for a in lam)


def normalize(parts) -> Partition:
    """Sort descending and drop zero parts"""
    return tuple(sorted((a for a in parts if a > 0), reverse=True))


def parse_partition(text: str) -> Partition:
    """Parse '4,2' (or '' for the empty partition)"""
    text = text.strip().strip("()")
    if not text or text == "-":
        return ()
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"'{text}' is not a comma separated list of integers")
    if any(a <= 0 for a in parts):
        raise ValueError(f"partition parts must be positive: '{text}'")
    return normalize(parts)


def render_partition(lam: Partition) -> str:
    return ",".join(str(a) for a in lam)


def parse_multipartition(text: str) -> MultiPartition:
    """Parse '3|2,1|' style component lists"""
    return tuple(parse_partition(part) for part in text.split("|"))


def render_multipartition(lam: MultiPartition) -> str:
    return "|".join(render_partition(c) for c in lam)


# enumeration

@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order"""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def strict_partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def odd_partitions(n: int) -> tuple[Partition, ...]:
    """The set O_n: partitions of n with all parts odd"""
    return tuple(lam for lam in partitions_of(n) if is_odd_parts(lam))


def strict_plus(n: int) -> tuple[Partition, ...]:
    """D_n^+"""
    return tuple(lam for lam in strict_partitions(n) if sigma(lam) == 1)


def strict_minus(n: int) -> tuple[Partition, ...]:
    """D_n^-"""
    return tuple(lam for lam in strict_partitions(n) if sigma(lam) == -1)


def centralizer_order(pi: Partition) -> int:
    """z_pi = prod_j j^(m_j) m_j! for the multiplicities m_j of pi"""
    mult: dict[int, int] = {}
    for a in pi:
        mult[a] = mult.get(a, 0) + 1
    return prod(j ** m * factorial(m) for j, m in mult.items())


# hooks via beta-numbers

def beta_numbers(lam: Partition, length: int | None = None) -> list[int]:
    length = len(lam) if length is None else length
    padded = list(lam) + [0] * (length - len(lam))
    return [padded[i] + length - 1 - i for i in range(length)]


def from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return normalize(b - (length - 1 - i) for i, b in enumerate(beta))


def remove_q_hooks(lam: Partition, q: int) -> list[tuple[Partition, int]]:
    """All (mu, leg length) obtained by removing one q-hook from lam"""
    if q < 1:
        raise ValueError(f"hook length must be positive, got {q}")
    beta = beta_numbers(lam)
    present = set(beta)
    out = []
    for b in beta:
        target = b - q
        if target < 0 or target in present:
            continue
        leg = sum(1 for c in beta if target < c < b)
        out.append((from_beta((present - {b}) | {target}), leg))
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def q_sign(lam: Partition, q: int) -> int:
    """delta_q: product of (-1)^leg along a removal sequence down to the q-core"""
    moves = remove_q_hooks(lam, q)
    if not moves:
        return 1
    mu, leg = moves[0]
    return (-1) ** leg * q_sign(mu, q)


@lru_cache(maxsize=None)
def q_core(lam: Partition, q: int) -> Partition:
    moves = remove_q_hooks(lam, q)
    return lam if not moves else q_core(moves[0][0], q)


def q_quotient(lam: Partition, q: int) -> tuple[Partition, ...]:
    """Runner quotient from a beta-set whose length is a multiple of q"""
    length = -(-len(lam) // q) * q
    beta = beta_numbers(lam, length)
    return tuple(
        from_beta([b // q for b in beta if b % q == r]) for r in range(q)
    )


def core_quotient(lam: Partition, q: int) -> tuple[Partition, tuple[Partition, ...], int, int]:
    """(q-core, q-quotient, q-weight, delta_q) of an ordinary partition"""
    core = q_core(lam, q)
    return core, q_quotient(lam, q), (size(lam) - size(core)) // q, q_sign(lam, q)


# bars

def remove_q_bars(lam: Partition, q: int) -> list[tuple[Partition, int]]:
    """All (mu, leg length) obtained by removing one q-bar from a strict lam.

    Type 1 moves a part a to a-q (deleting it when a == q) and passes over
    the parts strictly between a-q and a. Type 2 deletes two parts a > b
    with a + b == q; its leg length is b plus the parts strictly between
    b and a.
    """
    if q % 2 == 0 or q < 1:
        raise ValueError(f"bar length must be an odd positive integer, got {q}")
    if not is_strict(lam):
        raise ValueError(f"{lam} is not a strict partition")
    parts = set(lam)
    out = []
    for a in lam:
        target = a - q
        if target < 0 or (target > 0 and target in parts):
            continue
        leg = sum(1 for c in lam if target < c < a)
        out.append((normalize((parts - {a}) | ({target} if target else set())), leg))
    for a in lam:
        b = q - a
        if 0 < b < a and b in parts:
            leg = b + sum(1 for c in lam if b < c < a)
            out.append((normalize(parts - {a, b}), leg))
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def bar_sign(lam: Partition, q: int) -> int:
    """delta_qbar: product of (-1)^leg along a bar removal sequence"""
    moves = remove_q_bars(lam, q)
    if not moves:
        return 1
    mu, leg = moves[0]
    return (-1) ** leg * bar_sign(mu, q)


@lru_cache(maxsize=None)
def bar_core(lam: Partition, q: int) -> Partition:
    moves = remove_q_bars(lam, q)
    return lam if not moves else bar_core(moves[0][0], q)


def _runner_pair_partition(lam: Partition, p: int, i: int) -> tuple[Partition, int]:
    positive = sorted(((a - i) // p for a in lam if a % p == i), reverse=True)
    holes = {-1 - (a - (p - i)) // p for a in lam if a % p == p - i}
    charge = len(positive) - len(holes)
    low = min(holes, default=0) - 1
    beads = positive + [k for k in range(-1, low - 1, -1) if k not in holes]
    parts = [b - (charge - 1 - j) for j, b in enumerate(beads)]
    return normalize(parts), charge


def bar_quotient(lam: Partition, p: int) -> MultiPartition:
    """(lambda_0, lambda_1, ..., lambda_{(p-1)/2}) of a strict partition"""
    lam0 = normalize(a // p for a in lam if a % p == 0)
    rest = tuple(_runner_pair_partition(lam, p, i)[0] for i in range(1, (p - 1) // 2 + 1))
    return (lam0,) + rest


def bar_core_quotient(lam: Partition, p: int) -> tuple[Partition, MultiPartition, int, int]:
    """(p-bar core, p-bar quotient, p-bar weight, delta_pbar)"""
    core = bar_core(lam, p)
    return core, bar_quotient(lam, p), (size(lam) - size(core)) // p, bar_sign(lam, p)


def from_bar_core_quotient(core: Partition, quotient: MultiPartition, p: int) -> Partition:
    """Rebuild the strict partition with the given p-bar core and quotient"""
    if bar_core(core, p) != core:
        raise ValueError(f"{render_partition(core)} is not a {p}-bar core")
    if len(quotient) != (p + 1) // 2:
        raise ValueError(f"a {p}-bar quotient has {(p + 1) // 2} components")
    parts = [p * a for a in quotient[0]]
    for i in range(1, (p - 1) // 2 + 1):
        _, charge = _runner_pair_partition(core, p, i)
        mu = quotient[i]
        # every position below floor is a bead
        floor = min(charge - len(mu), 0) - 1
        beads = set()
        j = 0
        while True:
            bead = (mu[j] if j < len(mu) else 0) + charge - 1 - j
            if bead < floor:
                break
            beads.add(bead)
            j += 1
        for k in beads:
            if k >= 0:
                parts.append(i + k * p)
        for k in range(floor + 1, 0):
            if k not in beads:
                parts.append((p - i) + (-k - 1) * p)
    lam = normalize(parts)
    if len(set(lam)) != len(lam):
        raise VerificationError(f"reconstruction produced a non-strict partition {lam}")
    return lam


def quotient_sign(quotient: MultiPartition, p: int) -> int:
    """delta_pbar(lambda_0) * prod_j delta_p(lambda_j)"""
    sign = bar_sign(quotient[0], p)
    for comp in quotient[1:]:
        sign *= q_sign(comp, p)
    return sign


# multipartitions

def multi_size(lam: MultiPartition) -> int:
    return sum(size(c) for c in lam)


def multi_sigma(lam: MultiPartition) -> int:
    """sigma(lambda_0) * (-1)^(t - t_0)"""
    return sigma(lam[0]) * (-1) ** (multi_size(lam) - size(lam[0]))


def t_vector(lam: MultiPartition) -> tuple[int, ...]:
    return tuple(size(c) for c in lam)


def delta_set(t: int, p: int) -> tuple[MultiPartition, ...]:
    """Delta_t: multipartitions of total size t, lambda_0 strict"""
    comps = (p + 1) // 2

    def build(remaining: int, index: int) -> list[MultiPartition]:
        if index == comps - 1:
            pool = strict_partitions(remaining) if index == 0 else partitions_of(remaining)
            return [(c,) for c in pool]
        out = []
        for k in range(remaining, -1, -1):
            pool = strict_partitions(k) if index == 0 else partitions_of(k)
            for c in pool:
                for tail in build(remaining - k, index + 1):
                    out.append((c,) + tail)
        return out

    return tuple(build(t, 0))


def delta_plus(t: int, p: int) -> tuple[MultiPartition, ...]:
    return tuple(lam for lam in delta_set(t, p) if multi_sigma(lam) == 1)


def delta_minus(t: int, p: int) -> tuple[MultiPartition, ...]:
    return tuple(lam for lam in delta_set(t, p) if multi_sigma(lam) == -1)


def strict_with_core(n: int, core: Partition, p: int) -> tuple[Partition, ...]:
    """E_gamma restricted to partitions of n"""
    return tuple(lam for lam in strict_partitions(n) if bar_core(lam, p) == core)


def check_leg_lengths(max_size: int = 18, primes: tuple[int, ...] = (3, 5, 7)) -> int:
    """Check (-1)^leg == delta(lam) delta(mu) for every removal; return the count checked"""
    checked = 0
    for n in range(max_size + 1):
        for q in primes:
            for lam in strict_partitions(n):
                for mu, leg in remove_q_bars(lam, q):
                    if (-1) ** leg != bar_sign(lam, q) * bar_sign(mu, q):
                        raise VerificationError(f"bar leg length mismatch at {lam} -> {mu}, q={q}")
                    checked += 1
            for lam in partitions_of(n) if n <= 12 else ():
                for mu, leg in remove_q_hooks(lam, q):
                    if (-1) ** leg != q_sign(lam, q) * q_sign(mu, q):
                        raise VerificationError(f"hook leg length mismatch at {lam} -> {mu}, q={q}")
                    checked += 1
    logger.debug("leg length self-check passed on %d removals", checked)
    return checked

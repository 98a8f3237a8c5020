"""Local value lemmas asserted on the computed tables of the double cover of N_p wr S_t.

Each check returns a list of failures; an empty list means the property
held on every applicable (character, class) pair.
"""
import logging

from services.covers import UNSPLIT, is_even
from services.cyclo import gauss_half, is_p_integral, sqrt_int
from services.wreath import WreathCharLabel, wreath_group

logger = logging.getLogger(__name__)

LEMMAS = ("sqrt", "p'", "oneeven", ">0=", "lambda0=", "sqrtR", "sqrtAR", "lambda0p")


def _failure(lemma: str, char: str, cls: str, detail: str) -> dict:
    return {"lemma": lemma, "character": char, "class": cls, "detail": detail}


def _a_p_types(p: int) -> range:
    """N_p types y_j lying in A_p: j even, including the p-cycle (0) and the identity (p-1)"""
    return range(0, p, 2)


def _has_a_p_cycle(wtype, p: int) -> bool:
    return any(wtype[j] for j in _a_p_types(p))


def _sqrt_p_power(p: int, length: int):
    return sqrt_int(p) ** length


def check_sqrt(p: int, cover: str = "+") -> list[dict]:
    """zeta-bar_0^+- on o(c) are (-1 +- i^((p-1)/2) sqrt(p)) / 2, in that order"""
    nt = wreath_group(p, 1, cover).nt
    out = []
    for s, sign in ((0, 1), (1, -1)):
        for variant, half_sign in (("+", 1), ("-", -1)):
            value = nt.zeta0_alt_value((1, 0, s), 1 if variant == "+" else -1)
            expect = gauss_half(p, half_sign) * sign
            if value != expect:
                out.append(_failure("sqrt", f"zetabar_0{variant}", f"(1,0,{s})",
                                    f"{value.render()} != {expect.render()}"))
    return out


def check_p_prime(p: int, cover: str = "+") -> list[dict]:
    """zeta-bar_0^+ = zeta-bar_0^- on every even p'-element"""
    nt = wreath_group(p, 1, cover).nt
    out = []
    for form in nt.elements:
        alpha, beta, _ = form
        if nt.parity(form) or (beta % (p - 1) == 0 and alpha % p):
            continue
        if nt.zeta0_alt_value(form, 1) != nt.zeta0_alt_value(form, -1):
            out.append(_failure("p'", "zetabar_0", str(form), "associate values differ"))
    return out


def check_oneeven(p: int, t: int, cover: str = "+") -> list[dict]:
    """x ~ zx when some pi_j with j even has an even part and x is even or pi_j repeats a part"""
    group = wreath_group(p, t, cover)
    out = []
    for row, rep in zip(group.classes(), group.class_reps()):
        label = row["label"]
        for j in _a_p_types(p):
            parts = label.wtype[j]
            if not any(m % 2 == 0 for m in parts):
                continue
            if is_even(rep) or len(set(parts)) < len(parts):
                if label.tag != UNSPLIT:
                    out.append(_failure("oneeven", "-", label.render(), "class is not fused with its z-multiple"))
                break
    return out


def _rows(table: dict) -> dict:
    return {ch: values for ch, values in zip(table["characters"], table["values"])}


def check_pairs_sym(p: int, t: int, cover: str = "+") -> list[dict]:
    """>0=, lambda0= (first part) and sqrtR on the associate pairs of the full group"""
    group = wreath_group(p, t, cover)
    table = group.table("sym")
    rows = _rows(table)
    reps = group.class_reps()
    out = []
    for ch in table["characters"]:
        if ch.variant != "+":
            continue
        lam = ch.partition
        plus = rows[ch]
        minus = rows[WreathCharLabel(lam, "-")]
        t0 = sum(lam[0])
        root = _sqrt_p_power(p, len(lam[0]))
        for k, row in enumerate(table["classes"]):
            label = row["label"]
            equal = plus[k] == minus[k]
            if t0 > 0 and row["p_regular"] and not equal:
                out.append(_failure(">0=", ch.render(), label.render(), "associates differ on a p-regular class"))
            if t0 == 0 and _has_a_p_cycle(label.wtype, p) and not equal:
                out.append(_failure("lambda0=", ch.render(), label.render(), "associates differ"))
            if not is_even(reps[k]) and not is_p_integral(plus[k] / root, p):
                out.append(_failure("sqrtR", ch.render(), label.render(),
                                    f"{plus[k].render()} is not in sqrt(p)^{len(lam[0])} R"))
    return out


def check_pairs_alt(p: int, t: int, cover: str = "+") -> list[dict]:
    """lambda0= (second part), sqrtAR and lambda0p on the associate pairs of the even part"""
    group = wreath_group(p, t, cover)
    table = group.table("alt")
    rows = _rows(table)
    out = []
    for ch in table["characters"]:
        if ch.variant != "+":
            continue
        lam = ch.partition
        diff = [a - b for a, b in zip(rows[ch], rows[WreathCharLabel(lam, "-", "alt")])]
        t0 = sum(lam[0])
        root = _sqrt_p_power(p, len(lam[0]))
        for k, row in enumerate(table["classes"]):
            label = row["label"]
            if t0 == 0 and _has_a_p_cycle(label.wtype, p) and diff[k]:
                out.append(_failure("lambda0=", ch.render(), label.render(), "associates differ"))
            if t0 > 0 and row["p_regular"] and diff[k]:
                out.append(_failure("lambda0p", ch.render(), label.render(),
                                    "associates differ on a p-regular class"))
            if not is_p_integral(diff[k] / root, p):
                out.append(_failure("sqrtAR", ch.render(), label.render(),
                                    f"{diff[k].render()} is not in sqrt(p)^{len(lam[0])} R"))
    return out


def lemma_suite(p: int, t: int, cover: str = "+") -> dict:
    """Run every local lemma on the tables of N_p wr S_t; failures are listed, never raised"""
    failures = (check_sqrt(p, cover) + check_p_prime(p, cover) + check_oneeven(p, t, cover)
                + check_pairs_sym(p, t, cover) + check_pairs_alt(p, t, cover))
    if failures:
        logger.warning("lemma suite p=%d t=%d cover %s: %d failures", p, t, cover, len(failures))
    else:
        logger.info("lemma suite p=%d t=%d cover %s: all lemmas hold", p, t, cover)
    return {"p": p, "t": t, "cover": cover, "lemmas": list(LEMMAS), "failures": failures}

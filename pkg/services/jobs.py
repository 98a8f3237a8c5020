"""One entry point for every batch operation, shared by the CLI and the HTTP routes.

run_job returns plain JSON-able dicts in a stable order; render turns them
into json, csv or a padded text table.
"""
import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor

from config import VerificationError, active_caps, resource_caps
from models.jobs import JobSpec
from services.blocks import block_for_core, blocks_of_n, brauer_data, c_block_check
from services.clifford import basic_spin_value
from services.golden import check_golden, golden_dir, select, write_golden
from services.covers import PLUS, SymClassLabel, alt_classes, canonical_rep, odd_lift, standard_perm, sym_classes
from services.isometry import brauer_composed, build_I, build_IA, coherence_check, mutation_report, verify_broue
from services.lemmas import lemma_suite
from services.partitions import (
    bar_core_quotient,
    check_leg_lengths,
    core_quotient,
    is_strict,
    odd_partitions,
    parse_partition,
    render_multipartition,
    render_partition,
    sigma,
)
from services.spin_sym import (
    SELF,
    SpinCharLabel,
    dixon_check,
    inner_product,
    qcycle_sign,
    spin_degree,
    spin_labels,
    spin_table,
    xi_alt_value,
    xi_value,
)
from services.wreath import matrix_oracle, ntilde_chars, wreath_table

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


# serialization

def serialize_classes(classes: list[dict]) -> list[dict]:
    return [{"label": c["label"].render(), "size": c["size"], "centralizer": c["centralizer"],
             "p_regular": c["p_regular"]} for c in classes]


def _identity_index(classes: list[dict]) -> int:
    return next(k for k, c in enumerate(classes) if c["size"] == 1 and c["label"].tag == PLUS)


def serialize_table(group: str, table: dict, labels: list[str], decimals: int | None = None) -> dict:
    """Exact values as expression strings, plus an optional decimal column"""
    one = _identity_index(table["classes"])
    rows = []
    for label, values in zip(labels, table["values"]):
        row = {"label": label, "degree": values[one].render(), "values": [v.render() for v in values]}
        if decimals:
            row["decimals"] = [v.decimal(decimals) for v in values]
        rows.append(row)
    return {"schema_version": SCHEMA_VERSION, "group": group, "cover": table["cover"],
            "classes": serialize_classes(table["classes"]), "characters": rows}


# commands

def _map_rows(fn, items: list, parallelism: int) -> list:
    """fn over items in order; threads only change the schedule"""
    if parallelism <= 1:
        return [fn(item) for item in items]
    caps = active_caps()

    def run(item):
        with resource_caps(*caps):
            return fn(item)

    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(run, items))


def job_classes(spec: JobSpec) -> dict:
    if spec.group == "sym":
        classes = sym_classes(spec.n, spec.cover, spec.p)
    elif spec.group == "alt":
        classes = alt_classes(spec.n, spec.cover, spec.p)
    else:
        table = ntilde_chars(spec.p, spec.cover, spec.side) if spec.group == "ntilde" else \
            wreath_table(spec.p, spec.t, spec.side, spec.cover)
        classes = table["classes"]
    rows = serialize_classes(classes)
    return {"schema_version": SCHEMA_VERSION, "group": spec.group, "cover": spec.cover,
            "count": len(rows), "order": sum(r["size"] for r in rows), "classes": rows}


def _sym_chartable(spec: JobSpec) -> dict:
    classes = sym_classes(spec.n, spec.cover, spec.p) if spec.group == "sym" else \
        alt_classes(spec.n, spec.cover, spec.p)
    labels = spin_labels(spec.n, spec.group)
    evaluate = xi_value if spec.group == "sym" else xi_alt_value
    values = _map_rows(lambda ch: [evaluate(ch, c["label"], spec.cover) for c in classes], labels,
                       spec.parallelism)
    table = {"cover": spec.cover, "classes": classes, "values": values}
    out = serialize_table(spec.group, table, [ch.render() for ch in labels], spec.decimals)
    out["n"] = spec.n
    if spec.oracle:
        out["diffs"] = dixon_check(spec.n, spec.group, spec.cover)
    return out


def job_chartable(spec: JobSpec) -> dict:
    if spec.group in ("sym", "alt"):
        return _sym_chartable(spec)
    if spec.group == "ntilde":
        table = ntilde_chars(spec.p, spec.cover, spec.side)
        table = dict(table, values=[list(ch.values) for ch in table["characters"]])
        out = serialize_table("ntilde", table, [ch.render() for ch in table["characters"]], spec.decimals)
        t = 1
    else:
        table = wreath_table(spec.p, spec.t, spec.side, spec.cover)
        out = serialize_table("wreath", table, [ch.render() for ch in table["characters"]], spec.decimals)
        t = spec.t
    out.update(p=spec.p, t=t, side=spec.side)
    if spec.oracle:
        out["diffs"] = matrix_oracle(spec.p, t, spec.cover, (spec.side,))["diffs"]
    return out


def job_barcore(spec: JobSpec) -> dict:
    lam = parse_partition(spec.partition)
    if not is_strict(lam):
        raise ValueError(f"({render_partition(lam)}) is not a strict partition")
    core, _, weight, sign = bar_core_quotient(lam, spec.p)
    return {"partition": list(lam), "q": spec.p, "core": list(core), "weight": weight, "sign": sign}


def job_barquot(spec: JobSpec) -> dict:
    lam = parse_partition(spec.partition)
    if not is_strict(lam):
        raise ValueError(f"({render_partition(lam)}) is not a strict partition")
    core, quotient, weight, sign = bar_core_quotient(lam, spec.p)
    return {"partition": list(lam), "p": spec.p, "core": list(core),
            "quotient": [list(c) for c in quotient], "rendered": render_multipartition(quotient),
            "weight": weight, "sign": sign}


def job_core(spec: JobSpec) -> dict:
    lam = parse_partition(spec.partition)
    core, quotient, weight, sign = core_quotient(lam, spec.p)
    return {"partition": list(lam), "q": spec.p, "core": list(core),
            "quotient": [list(c) for c in quotient], "weight": weight, "sign": sign}


def job_blocks(spec: JobSpec) -> dict:
    blocks = blocks_of_n(spec.n, spec.p, spec.side)
    for entry in blocks:
        b = entry["block"]
        descriptor = block_for_core(spec.n, spec.p, tuple(b["core"]), spec.side, b["variant"])
        entry["brauer"] = brauer_data(descriptor) if descriptor.abelian_defect else None
    out = {"n": spec.n, "p": spec.p, "side": spec.side, "blocks": blocks}
    if spec.oracle and spec.side == "sym":
        out["c_block_crossings"] = c_block_check(spec.n, spec.p, spec.cover)
    return out


def job_verify(spec: JobSpec) -> dict:
    core = parse_partition(spec.core)
    if spec.brauer:
        imap = brauer_composed(spec.n, spec.p, core, spec.cover, spec.side)
    elif spec.side == "sym":
        imap = build_I(spec.n, spec.p, core, spec.cover)
    else:
        imap = build_IA(spec.n, spec.p, core, spec.cover)
    report = verify_broue(imap)
    report["entries"] = [e.as_dict() for e in imap.entries]
    if spec.mutate:
        report["mutations"] = mutation_report(imap)
    if spec.oracle and imap.weight:
        report["coherence"] = coherence_check(spec.n, spec.p, core, spec.cover)
    if not spec.timing:
        report.pop("runtime", None)
    return report


# selftest

def _check(name: str, fn) -> dict:
    try:
        detail = fn()
    except VerificationError as e:
        logger.warning("selftest %s failed: %s", name, e)
        return {"name": name, "status": "failed", "detail": str(e)}
    return {"name": name, "status": "ok", "detail": detail}


def _expect_empty(what: str, found: list) -> str:
    if found:
        raise VerificationError(f"{what}: {found[:3]}")
    return "no differences"


def _qcycle() -> str:
    for cover in ("+", "-"):
        for q in (1, 3, 5, 7, 9):
            value = basic_spin_value(odd_lift(standard_perm((q,)), cover))
            if value != qcycle_sign(q):
                raise VerificationError(f"q={q} cover {cover}: {value.render()} != {qcycle_sign(q)}")
    return "q in 1,3,5,7,9 on both covers"


def _clifford_basic(max_n: int = 8) -> str:
    checked = 0
    for cover in ("+", "-"):
        for n in range(2, max_n + 1):
            char = SpinCharLabel((n,), SELF if sigma((n,)) == 1 else "+")
            for pi in odd_partitions(n):
                traced = basic_spin_value(canonical_rep(pi, cover))
                value = xi_value(char, SymClassLabel(pi, PLUS), cover)
                if traced != value:
                    raise VerificationError(
                        f"basic spin ({n}) on ({render_partition(pi)}) cover {cover}: "
                        f"Clifford {traced.render()} != recursion {value.render()}")
                checked += 1
    return f"{checked} odd classes"


def _degrees(max_n: int = 8) -> str:
    for n in range(1, max_n + 1):
        for ch in spin_labels(n):
            value = xi_value(ch, SymClassLabel((1,) * n, PLUS))
            if value != spin_degree(ch.partition):
                raise VerificationError(f"{ch.render()}(1) = {value.render()} != {spin_degree(ch.partition)}")
    return f"n <= {max_n}"


def _orthonormality(max_n: int = 5) -> str:
    for cover in ("+", "-"):
        for ambient in ("sym", "alt"):
            for n in range(2, max_n + 1):
                table = spin_table(n, ambient, cover)
                rows = table["values"]
                for a in range(len(rows)):
                    for b in range(a, len(rows)):
                        value = inner_product(rows[a], rows[b], table["classes"])
                        if value != (1 if a == b else 0):
                            raise VerificationError(
                                f"<{table['characters'][a].render()}, {table['characters'][b].render()}> = "
                                f"{value.render()} on {ambient} n={n} cover {cover}")
    return f"n <= {max_n}"


def job_selftest(spec: JobSpec) -> dict:
    checks = [
        _check("leg-lengths", lambda: f"{check_leg_lengths(18)} removals"),
        _check("qcycle", _qcycle),
        _check("clifford-basic", _clifford_basic),
        _check("schur-degrees", _degrees),
        _check("orthonormality", _orthonormality),
        _check("wreath-oracle", lambda: _expect_empty("p=3 t=1", matrix_oracle(3, 1, spec.cover)["diffs"])),
        _check("lemmas", lambda: _expect_empty("p=3 t=1", lemma_suite(3, 1, spec.cover)["failures"])),
        _check("isometry", lambda: _expect_empty("n=3 p=3", verify_broue(build_I(3, 3, (), spec.cover))["violations"])),
    ]
    failed = sum(1 for c in checks if c["status"] != "ok")
    logger.info("selftest: %d of %d checks passed", len(checks) - failed, len(checks))
    return {"checks": checks, "failed": failed}


def _render_golden(spec: JobSpec) -> str:
    return render(run_job(spec), "json")


def job_golden(spec: JobSpec) -> dict:
    """Check the golden reports, or regenerate them with write"""
    directory = str(golden_dir(spec.directory))
    if spec.write:
        written = write_golden(_render_golden, spec.directory, spec.only)
        return {"schema_version": SCHEMA_VERSION, "directory": directory, "written": written}
    checked = select(spec.only)
    diffs = check_golden(_render_golden, spec.directory, spec.only)
    return {"schema_version": SCHEMA_VERSION, "directory": directory, "checked": checked, "diffs": diffs}


COMMANDS = {
    "classes": job_classes,
    "chartable": job_chartable,
    "barcore": job_barcore,
    "barquot": job_barquot,
    "core": job_core,
    "blocks": job_blocks,
    "verify-isometry": job_verify,
    "selftest": job_selftest,
    "golden": job_golden,
}


def run_job(spec: JobSpec) -> dict:
    """Dispatch a validated JobSpec under its resource caps"""
    logger.info("running %s", spec.command)
    with resource_caps(spec.max_group_order, spec.max_conductor):
        return COMMANDS[spec.command](spec)


def failed(result: dict) -> bool:
    """True when a result carries oracle diffs, isometry violations or failed checks"""
    mutations = result.get("mutations") or []
    return bool(result.get("diffs") or result.get("violations") or result.get("failed")
                or result.get("coherence") or result.get("c_block_crossings")
                or any(m["status"] == "undetected" for m in mutations))


# rendering

def _table_rows(result: dict) -> tuple[list[str], list[list]] | None:
    if "characters" in result and "classes" in result:
        header = ["character", "degree"] + [c["label"] for c in result["classes"]]
        return header, [[row["label"], row["degree"], *row["values"]] for row in result["characters"]]
    if "classes" in result:
        header = ["label", "size", "centralizer", "p_regular"]
        return header, [[c[h] for h in header] for c in result["classes"]]
    if "checks" in result:
        return ["name", "status", "detail"], [[c["name"], c["status"], c["detail"]] for c in result["checks"]]
    if "violations" in result:
        header = ["kind", "x", "x_prime", "value"]
        return header, [[v.get(h, "") for h in header] for v in result["violations"]]
    if "blocks" in result:
        header = ["core", "variant", "weight", "characters"]
        return header, [[render_partition(tuple(b["block"]["core"])) or "-", b["block"]["variant"],
                         b["block"]["weight"], " ".join(b["characters"])] for b in result["blocks"]]
    return None


def render(result: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(result, indent=2, ensure_ascii=False)
    table = _table_rows(result)
    if table is None:
        table = (list(result), [[json.dumps(v, ensure_ascii=False) if isinstance(v, (list, dict)) else v
                                 for v in result.values()]])
    header, rows = table
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    cells = [[str(h) for h in header]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells)

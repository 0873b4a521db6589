"""Machine-readable verification reports (JSON documents and CSV tables).

Exact rationals are serialized as "p/q" decimal strings so arbitrary
precision survives every JSON parser; float-mode values are serialized with
``repr`` round-trip fidelity. Report rows are keyed and ordered by
(two_j, k, form), which together with sorted JSON keys makes documents
byte-reproducible up to the ``generated_at`` timestamp and ``elapsed_us``
timings.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from fractions import Fraction

from .exact import HalfInt
from .sumrule import Form, SumRuleReport, lhs_float, rhs_3j, rhs_cg, verify

SCHEMA_VERSION = "1"

CSV_COLUMNS = ("two_j", "k", "form", "lhs", "rhs", "pass", "term_count", "elapsed_us")

# |lhs - rhs| <= FLOAT_TOL * (1 + |rhs|) for float-mode passes
FLOAT_TOL = 1e-12


def exact_record(report: SumRuleReport) -> dict:
    return {
        "two_j": report.two_j,
        "k": report.k,
        "form": report.form.value,
        "lhs": str(report.lhs),
        "rhs": str(report.rhs),
        "pass": report.passed,
        "term_count": report.term_count,
        "elapsed_us": int(round(report.elapsed * 1e6)),
    }


def float_record(two_j: int, k: int, form: Form) -> dict:
    import time

    j = HalfInt(two_j)
    start = time.perf_counter()
    lhs = lhs_float(j, k, form)
    rhs = float(rhs_cg(j, k) if form is Form.CG else rhs_3j(j, k))
    elapsed = time.perf_counter() - start
    return {
        "two_j": two_j,
        "k": k,
        "form": form.value,
        "lhs": repr(lhs),
        "rhs": repr(rhs),
        "pass": abs(lhs - rhs) <= FLOAT_TOL * (1.0 + abs(rhs)),
        "term_count": (two_j + 1) ** 2,
        "elapsed_us": int(round(elapsed * 1e6)),
    }


def run_cells(cells: list[tuple[int, int, Form]], mode: str, threads: int = 1) -> list[dict]:
    """Evaluate report records for the given cells, deterministically ordered."""

    def one(cell: tuple[int, int, Form]) -> dict:
        two_j, k, form = cell
        if mode == "exact":
            return exact_record(verify(HalfInt(two_j), k, form))
        return float_record(two_j, k, form)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(one, cells))
    else:
        records = [one(cell) for cell in cells]
    records.sort(key=lambda r: (r["two_j"], r["k"], r["form"] != Form.CG.value))
    return records


def build_document(parameters: dict, records: list[dict]) -> dict:
    passed = sum(1 for r in records if r["pass"])
    return {
        "schema_version": SCHEMA_VERSION,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "parameters": parameters,
        "reports": records,
        "summary": {
            "total": len(records),
            "passed": passed,
            "failed": len(records) - passed,
        },
    }


def document_to_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def records_to_csv(records: list[dict]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        row = []
        for col in CSV_COLUMNS:
            value = r[col]
            if isinstance(value, bool):
                row.append("true" if value else "false")
            else:
                row.append(str(value))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def summary_line(records: list[dict]) -> str:
    passed = sum(1 for r in records if r["pass"])
    return f"passed {passed}/{len(records)}"


def rational_from_string(text: str) -> Fraction:
    """Parse the "p/q" serialization back to an exact rational."""
    return Fraction(text)

"""File formats: matrices, campaign configs, reports.

Matrices travel as {"n": N, "data": [[[re, im], ...], ...]} with data laid
out row-major, N rows of N entries, each entry a [real, imag] pair. Reports
are a single object with config echo, record list, per-check summary,
runtime placeholder, and tool version; a JSON Schema for them ships inside
the package.
"""

from __future__ import annotations

import csv
import importlib.resources
import json

import numpy as np

from .campaign import CampaignConfig
from .linalg import DomainError, as_matrix

CSV_COLUMNS = ("id", "variant", "n", "p", "t", "nu", "seed",
               "lhs_lo", "lhs_hi", "rhs_lo", "rhs_hi",
               "slack", "verdict", "equality")


def matrix_to_obj(m) -> dict:
    m = as_matrix(m, "matrix")
    n = m.shape[0]
    data = [[[float(m[i, j].real), float(m[i, j].imag)] for j in range(n)]
            for i in range(n)]
    return {"n": n, "data": data}


def save_matrix(path, m) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_obj(m), fh)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"matrix file is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "data" not in obj:
        raise DomainError("matrix file must be an object with fields n and data")
    n = int(obj["n"])
    data = obj["data"]
    if n < 1 or not isinstance(data, list) or len(data) != n:
        raise DomainError(f"matrix data must have {n} rows")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            raise DomainError(f"row {i} must have {n} entries")
        for j, entry in enumerate(row):
            if (not isinstance(entry, list) or len(entry) != 2
                    or not all(isinstance(x, (int, float)) for x in entry)):
                raise DomainError(f"entry ({i},{j}) must be a [re, im] pair")
            out[i, j] = complex(entry[0], entry[1])
    return as_matrix(out, "matrix")


def load_config(path) -> CampaignConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"config file is not valid JSON: {exc}") from exc
    return CampaignConfig.from_dict(obj)


def save_config(path, cfg: CampaignConfig) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cfg.to_dict(), fh, indent=2)
        fh.write("\n")


def write_report_json(report: dict, path) -> None:
    # compact separators: default campaigns produce ~2e5 records
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, separators=(",", ":"))
        fh.write("\n")


def load_report(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_report_csv(report: dict, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rec in report["records"]:
            writer.writerow([
                _csv_cell(rec["id"]),
                _csv_cell(rec["variant"]),
                _csv_cell(rec["n"]),
                _csv_cell(rec["p"]),
                _csv_cell(rec["t"]),
                _csv_cell(rec["nu"]),
                _csv_cell(rec["seed"]),
                _csv_cell(rec["lhs"]["lo"]),
                _csv_cell(rec["lhs"]["hi"]),
                _csv_cell(rec["rhs"]["lo"]),
                _csv_cell(rec["rhs"]["hi"]),
                _csv_cell(rec["slack"]),
                _csv_cell(rec["verdict"]),
                _csv_cell(rec["equality_attained"]),
            ])


def report_schema() -> dict:
    ref = importlib.resources.files("pnumrad") / "report_schema.json"
    return json.loads(ref.read_text(encoding="utf-8"))

"""CSV/JSON writers and readers for sequences, triangles and polynomials."""

from __future__ import annotations

import csv
import io
import json
import os
from fractions import Fraction
from pathlib import Path

from .exact import BiPoly, Poly
from .polys import cosine_derangement, derangement_poly, sine_derangement
from .sequences import SequenceKind, StirlingKind, sequence_table, stirling_triangle

OUT_DIR_ENV = "DERANGEMENTS_OUT_DIR"


def default_out_dir() -> Path:
    return Path(os.environ.get(OUT_DIR_ENV, "derangements-out"))


def json_value(v: Fraction):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def sequence_csv(kind, n_max: int) -> str:
    table = sequence_table(kind, n_max)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for n, v in enumerate(table.values):
        w.writerow([n, str(v)])
    return buf.getvalue()


def sequence_json(kind, n_max: int) -> dict:
    table = sequence_table(kind, n_max)
    return {"kind": table.kind.value, "values": [json_value(v) for v in table.values]}


def triangle_csv(kind, n_max: int) -> str:
    """Row-major: one line per ``n`` holding ``S(n, 0) .. S(n, n)``."""
    tri = stirling_triangle(kind, n_max)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in tri.rows:
        w.writerow(row)
    return buf.getvalue()


def triangle_json(kind, n_max: int) -> dict:
    tri = stirling_triangle(kind, n_max)
    return {"kind": tri.kind.value, "rows": [list(r) for r in tri.rows]}


def polynomials_json(n_max: int) -> dict:
    return {
        "derangement": [derangement_poly(n).poly.to_json("x") for n in range(n_max + 1)],
        "cosine": [cosine_derangement(n).poly.to_json() for n in range(n_max + 1)],
        "sine": [sine_derangement(n).poly.to_json() for n in range(n_max + 1)],
    }


def load_polynomials(path: str | Path) -> dict[str, list[Poly | BiPoly]]:
    data = json.loads(Path(path).read_text())
    return {
        "derangement": [Poly.from_json(p) for p in data["derangement"]],
        "cosine": [BiPoly.from_json(p) for p in data["cosine"]],
        "sine": [BiPoly.from_json(p) for p in data["sine"]],
    }


def export_all(out_dir: str | Path, n_max: int) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def put(name: str, text: str):
        path = out / name
        path.write_text(text)
        written.append(path)

    for kind in SequenceKind:
        put(f"{kind.value}.csv", sequence_csv(kind, n_max))
        put(f"{kind.value}.json", json.dumps(sequence_json(kind, n_max), indent=1) + "\n")
    for kind in StirlingKind:
        put(f"{kind.value}.csv", triangle_csv(kind, n_max))
        put(f"{kind.value}.json", json.dumps(triangle_json(kind, n_max)) + "\n")
    put("polynomials.json", json.dumps(polynomials_json(n_max), indent=1) + "\n")
    return written

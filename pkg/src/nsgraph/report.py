"""Run reports and index tables as CSV and plain text."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .fast import INDEX_NAMES


def format_value(v, sig: int = 4) -> str:
    """Human form: integers exact, reals at ``sig`` significant figures."""
    if v is None:
        return "undefined"
    if isinstance(v, int):
        return str(v)
    return f"{v:.{sig}g}"


def csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def index_table(columns: dict, human: bool = True) -> str:
    """Render ``{column_name: {index: value}}`` as a text table or CSV."""
    names = list(columns)
    if not human:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index"] + names)
        for idx in INDEX_NAMES:
            w.writerow([idx] + [csv_value(columns[c].get(idx)) for c in names])
        return buf.getvalue()
    rows = [["index"] + names]
    rows += [[idx] + [format_value(columns[c].get(idx)) for c in names] for idx in INDEX_NAMES]
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(wd) for cell, wd in zip(row, widths)).rstrip() for row in rows) + "\n"


@dataclass
class RunReport:
    input_digest: str
    input_vertices: int
    input_edges: int
    vertex_labels: tuple
    config: dict
    best_compact: str
    best_energy: float
    final_compact: str
    final_energy: float
    initial_compact: str
    original_indices: dict
    nsg_indices: dict
    wall_time: float = 0.0

    def rows(self):
        yield "input_sha256", self.input_digest
        yield "input_vertices", self.input_vertices
        yield "input_edges", self.input_edges
        yield "vertex_labels", " ".join(self.vertex_labels)
        for k, v in self.config.items():
            yield k, v
        yield "initial_compact", self.initial_compact
        yield "best_compact", self.best_compact
        yield "best_energy", self.best_energy
        yield "final_compact", self.final_compact
        yield "final_energy", self.final_energy
        for idx in INDEX_NAMES:
            yield f"original_{idx}", self.original_indices.get(idx)
        for idx in INDEX_NAMES:
            yield f"nsg_{idx}", self.nsg_indices.get(idx)

    def to_csv(self) -> str:
        """Key/value CSV. Wall time is left out so reruns are byte-identical."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        for k, v in self.rows():
            w.writerow([k, csv_value(v)])
        return buf.getvalue()

    def indices_csv(self) -> str:
        """Wide table with one row for the input graph and one for the NSG."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "a"] + list(INDEX_NAMES))
        w.writerow(["original", ""] + [csv_value(self.original_indices.get(i)) for i in INDEX_NAMES])
        w.writerow([self.config.get("distance", "nsg"), self.best_compact]
                   + [csv_value(self.nsg_indices.get(i)) for i in INDEX_NAMES])
        return buf.getvalue()

    def summary(self) -> str:
        lines = [
            f"best a = [{self.best_compact}]  energy = {self.best_energy:.4g}  "
            f"({self.config.get('distance')}, {self.config.get('perturbation')}, seed {self.config.get('seed')})",
            f"wall time {self.wall_time:.2f} s",
            "",
            index_table({"original": self.original_indices, "nsg": self.nsg_indices}),
        ]
        return "\n".join(lines)

"""Deterministic table rendering for the command-line tool.

Rows are ordered by ascending subset bitmask (empty set first, full frame
last); masses print with 6 decimals, rate vectors with 4. CSV uses a `.`
decimal separator and no locale handling.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable, Mapping, Sequence

from .frame import Frame, Subset, format_subset
from .mass import MassFunction


def subset_csv_token(subset: Subset) -> str:
    """CSV/plain token: "" for the empty set, "*" for the full frame."""
    if subset.is_empty:
        return ""
    if subset.is_full:
        return "*"
    return "+".join(subset.labels)


def format_vector(values: Iterable[float]) -> str:
    return "[" + ", ".join(f"{v:.4f}" for v in values) + "]"


def table_row_bits(frame: Frame, columns: Sequence[Mapping[int, float]]) -> list[int]:
    """Union of focal sets across columns, with empty set and frame forced in."""
    bits = {0, frame.full_bits}
    for column in columns:
        bits.update(column)
    return sorted(bits)


def mass_column(m: MassFunction) -> dict[int, float]:
    return dict(m.focal_bits())


def render_table(
    frame: Frame,
    row_bits: Sequence[int],
    columns: Sequence[tuple[str, Mapping[int, float]]],
    fmt: str,
    set_header: str = "set",
) -> str:
    if fmt == "csv":
        return _render_csv(frame, row_bits, columns, set_header)
    return _render_text(frame, row_bits, columns, set_header)


def _render_text(frame, row_bits, columns, set_header) -> str:
    labels = [format_subset(Subset(frame, bits)) for bits in row_bits]
    set_width = max([len(set_header)] + [len(s) for s in labels])
    widths = [max(len(name), 8) for name, _ in columns]
    lines = [
        "  ".join(
            [set_header.ljust(set_width)]
            + [name.rjust(w) for (name, _), w in zip(columns, widths)]
        ).rstrip()
    ]
    for bits, label in zip(row_bits, labels):
        cells = [
            f"{values.get(bits, 0.0):.6f}".rjust(w)
            for (_, values), w in zip(columns, widths)
        ]
        lines.append("  ".join([label.ljust(set_width)] + cells).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(frame, row_bits, columns, set_header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([set_header] + [name for name, _ in columns])
    for bits in row_bits:
        token = subset_csv_token(Subset(frame, bits))
        writer.writerow(
            [token] + [f"{values.get(bits, 0.0):.6f}" for _, values in columns]
        )
    return buf.getvalue()

"""Plain-text serialization of fronts and archive snapshots.

Format: a single header line ``# objectives=<n>`` (optionally followed by
``vars=<d>`` when decision variables are appended), then one point per
line as comma-separated reals at 17 significant digits.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

__all__ = ["format_real", "write_front_file", "read_front_file"]


def format_real(value: float) -> str:
    return f"{value:.17g}"


def write_front_file(path, objectives, positions=None) -> None:
    """Write objective rows, optionally with decision variables appended."""
    obj = np.atleast_2d(np.asarray(objectives, dtype=float))
    header = f"# objectives={obj.shape[1]}"
    pos = None
    if positions is not None:
        pos = np.atleast_2d(np.asarray(positions, dtype=float))
        if pos.shape[0] != obj.shape[0]:
            raise ValueError("positions and objectives must have matching row counts")
        header += f" vars={pos.shape[1]}"
    lines = [header]
    for i in range(obj.shape[0]):
        row = list(obj[i])
        if pos is not None:
            row.extend(pos[i])
        lines.append(",".join(format_real(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def read_front_file(path) -> tuple[np.ndarray, np.ndarray | None]:
    """Inverse of :func:`write_front_file`; returns (objectives, positions)."""
    text = Path(path).read_text().strip().splitlines()
    if not text or not text[0].startswith("# objectives="):
        raise ValueError(f"{path} is not a front file")
    fields = text[0][2:].split()
    n_obj = int(fields[0].split("=")[1])
    n_vars = 0
    if len(fields) > 1 and fields[1].startswith("vars="):
        n_vars = int(fields[1].split("=")[1])
    rows = [[float(v) for v in line.split(",")] for line in text[1:] if line]
    data = np.asarray(rows, dtype=float)
    if data.size and data.shape[1] != n_obj + n_vars:
        raise ValueError(f"{path} row width does not match its header")
    if data.size == 0:
        data = data.reshape(0, n_obj + n_vars)
    objectives = data[:, :n_obj]
    positions = data[:, n_obj:] if n_vars else None
    return objectives, positions

"""Reference tables shipped with the package."""
from __future__ import annotations

import csv
import io
from importlib import resources
from typing import List

F4_TABLE = "f4_table.csv"

# (alpha, beta, rho_ab, rho_ba, N) for C4 with the "plus" orientation
C4_ROWS = (
    ((1, 0, 0, 0), (0, 1, 0, 0), 0, -1, 1),
    ((0, 1, 0, 0), (0, 1, 2, 1), -2, 0, -2),
    ((0, 1, 0, 0), (1, 1, 2, 1), -3, 0, -1),
    ((1, 1, 0, 0), (0, 1, 2, 1), -2, -1, -1),
    ((1, 1, 1, 0), (0, 1, 1, 1), -1, -4, 1),
    ((1, 1, 1, 0), (1, 1, 1, 1), -2, -4, 2),
)


def f4_table_text() -> str:
    return resources.files(__name__).joinpath(F4_TABLE).read_text()


def f4_table() -> List[dict]:
    rows = []
    for r in csv.DictReader(io.StringIO(f4_table_text())):
        rows.append({"alpha": r["alpha"], "beta": r["beta"], "rho_ab": int(r["rho_ab"]),
                     "rho_ba": int(r["rho_ba"]), "N": int(r["N"])})
    return rows

"""Deterministic table renderers for the four families.

Each builder returns ``(text, missing)`` where ``missing`` counts cells whose
Welschinger inputs are not available; such cells render as ``?``.  Cells
where the pair count exceeds its bound stay blank.  The CSV format matches
the store ingestion grammar, so emitted tables re-ingest losslessly.
"""

from __future__ import annotations

from typing import Optional

from .combine import (
    WelschingerQuery,
    gw_threefold,
    gw_vanishes_a_priori,
    w_threefold,
    w_vanishes_a_priori,
)
from .errors import DataUnavailableError
from .gw import gw_surface
from .lattice import FAMILIES, constraint_count, pair
from .store import Store, default_store


def _md_table(header, rows) -> str:
    out = ["| " + " | ".join(header) + " |",
           "|" + "|".join("---" for _ in header) + "|"]
    for row in rows:
        out.append("| " + " | ".join(row) + " |")
    return "\n".join(out) + "\n"


def _deg6_classes(max_sum: int):
    out = []
    for a in range(max_sum + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                if 1 <= a + b + c <= max_sum:
                    out.append((a, b, c))
    return sorted(out)


def gw_deg6_table(max_sum: int = 12, fmt: str = "md",
                  store: Optional[Store] = None) -> tuple:
    """Complex counts of the product family with their fiber breakdown."""
    family = FAMILIES["deg6"]
    surface = family.surface
    classes = [d for d in _deg6_classes(max_sum) if not gw_vanishes_a_priori(family, d)]
    if fmt == "csv":
        lines = ["space,c1,c2,c3,l,value"]
        for d in classes:
            lines.append("deg6-gw,%d,%d,%d,0,%d" % (*d, gw_threefold(family, d)))
        return "\n".join(lines) + "\n", 0
    rows = []
    for d in classes:
        a, b, c = d
        s = a + b - c
        label = f"({a},{b},{c})"
        value = str(gw_threefold(family, d))
        first = True
        for alpha in range((s + 1) // 2):
            member = (a, b, alpha, s - alpha)
            ds = abs(pair(surface, member, surface.vanishing_cycle))
            rows.append([
                label if first else "",
                value if first else "",
                f"({a},{b};{alpha},{s - alpha})",
                str(ds),
                str(gw_surface(surface, member)),
            ])
            first = False
    text = _md_table(["class", "count", "fiber member", "D.S", "member count"], rows)
    return text, 0


def _w_grid(family_id: str, columns, labels, store, fmt, csv_prefix):
    """Shared grid builder: columns of classes, rows of pair counts."""
    family = FAMILIES[family_id]
    bounds = [(constraint_count(family, d) - 1) // 2 for d in columns]
    max_l = max(bounds, default=-1)
    missing = 0
    cells = {}
    for d, bound in zip(columns, bounds):
        for l in range(bound + 1):
            try:
                cells[(d, l)] = str(w_threefold(WelschingerQuery(family_id, d, l), store))
            except DataUnavailableError:
                cells[(d, l)] = "?"
                missing += 1
    if fmt == "csv":
        lines = ["space," + ",".join(f"c{i + 1}" for i in range(len(columns[0]))) + ",l,value"]
        for d, bound in zip(columns, bounds):
            for l in range(bound + 1):
                val = cells[(d, l)]
                if val != "?":
                    lines.append(csv_prefix + "," + ",".join(map(str, d)) + f",{l},{val}")
        return "\n".join(lines) + "\n", missing
    rows = []
    for l in range(max_l + 1):
        row = [str(l)]
        for d, bound in zip(columns, bounds):
            row.append(cells[(d, l)] if l <= bound else "")
        rows.append(row)
    text = _md_table(["l"] + labels, rows)
    return text, missing


def w_deg7_table(max_d: int = 9, fmt: str = "md",
                 store: Optional[Store] = None) -> tuple:
    """Real counts of the once-blown family, one grid per odd degree."""
    if store is None:
        store = default_store()
    parts = []
    missing = 0
    csv_lines = []
    for deg in range(1, max_d + 1, 2):
        columns = [(deg, k) for k in range(deg + 1)]
        labels = [f"({deg};{k})" for k in range(deg + 1)]
        text, miss = _w_grid("deg7", columns, labels, store, fmt, "deg7")
        missing += miss
        if fmt == "csv":
            body = text.splitlines()
            if not csv_lines:
                csv_lines.append(body[0])
            csv_lines.extend(body[1:])
        else:
            parts.append(f"degree pair (d;k), d = {deg}\n\n" + text)
    if fmt == "csv":
        return "\n".join(csv_lines) + "\n", missing
    return "\n".join(parts), missing


def w_deg6_table(max_sum: int = 15, fmt: str = "md",
                 store: Optional[Store] = None) -> tuple:
    """Real counts of the standard-real product family."""
    if store is None:
        store = default_store()
    family = FAMILIES["deg6"]
    columns = [d for d in _deg6_classes(max_sum) if not w_vanishes_a_priori(family, d)]
    labels = ["(%d,%d,%d)" % d for d in columns]
    return _w_grid("deg6", columns, labels, store, fmt, "deg6")


def w_deg6t_table(max_a: int = 5, fmt: str = "md",
                  store: Optional[Store] = None) -> tuple:
    """Real counts of the twisted product family (ingested inputs only)."""
    if store is None:
        store = default_store()
    columns = [(a, c) for a in range(1, max_a + 1) for c in range(1, 2 * a, 2)]
    columns.sort(key=lambda d: (d[0], d[1]))
    labels = [f"({a};{c})" for a, c in columns]
    return _w_grid("deg6t", columns, labels, store, fmt, "deg6t")


TABLES = {
    "gw-deg6": gw_deg6_table,
    "w-deg7": w_deg7_table,
    "w-deg6": w_deg6_table,
    "w-deg6t": w_deg6t_table,
}

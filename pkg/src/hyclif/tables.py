"""Cayley table emission for the blade products (text, csv, json)."""

from __future__ import annotations

import csv
import io
import json

from .multivector import AlgebraContext, gp, lcontract, wedge

PRODUCTS = {"geometric": (gp, "*"), "wedge": (wedge, "^"), "lcontract": (lcontract, "_|")}
FORMATS = ("text", "csv", "json")
MAX_TABLE_DIM = 3


def table_cells(ctx: AlgebraContext, product: str) -> tuple[list[str], list[list[str]]]:
    """Blade labels in (grade, mask) order plus the canonical-form cell grid."""
    if product not in PRODUCTS:
        raise ValueError(f"unknown product {product!r}; expected one of {tuple(PRODUCTS)}")
    fn, _ = PRODUCTS[product]
    blades = ctx.basis_blades()
    labels = [ctx.blade_name(m) for m in blades]
    cells = []
    for a in blades:
        row = []
        mv_a = ctx.blade(a)
        for b in blades:
            row.append(str(fn(mv_a, ctx.blade(b))))
        cells.append(row)
    return labels, cells


def emit_table(n: int, product: str, fmt: str = "text") -> str:
    """Full 4^n x 4^n multiplication table, deterministic bytes per format."""
    if not 1 <= n <= MAX_TABLE_DIM:
        raise ValueError(f"table emission supports 1 <= n <= {MAX_TABLE_DIM}, got {n}")
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    ctx = AlgebraContext(n)
    labels, cells = table_cells(ctx, product)
    glyph = PRODUCTS[product][1]
    if fmt == "text":
        return _render_text(glyph, labels, cells)
    if fmt == "csv":
        return _render_csv(glyph, labels, cells)
    return _render_json(n, product, labels, cells)


def _render_text(glyph: str, labels: list[str], cells: list[list[str]]) -> str:
    grid = [[glyph] + labels] + [[label] + row for label, row in zip(labels, cells)]
    widths = [max(len(grid[r][c]) for r in range(len(grid))) for c in range(len(grid[0]))]
    lines = []
    for row in grid:
        lines.append(" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_csv(glyph: str, labels: list[str], cells: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([glyph] + labels)
    for label, row in zip(labels, cells):
        writer.writerow([label] + row)
    return buf.getvalue()


def _render_json(n: int, product: str, labels: list[str], cells: list[list[str]]) -> str:
    payload = {"dim": n, "product": product, "blades": labels, "cells": cells}
    return json.dumps(payload, indent=2) + "\n"

"""Bundled fixture datasets and strict CSV ingestion."""

import csv
from dataclasses import dataclass
from importlib import resources
import math

import numpy as np

#: declared category orders of the bundled files
CATEGORY_ORDERS = {
    "yates": {"feeding": ["breast", "bottle"], "teeth": ["normal", "malocclusion"]},
    "wais": {"age": ["16-19", "20-34", "35-54", "55-69", "70+"]},
    "geyser": {},
    "fisher_caithness": {"eye": ["blue", "light", "medium", "dark"],
                         "hair": ["fair", "red", "medium", "dark", "black"]},
}


@dataclass(frozen=True)
class Dataset:
    names: list
    columns: dict
    n: int

    def __getitem__(self, name):
        return self.columns[name]


def bundled_path(name):
    if name not in CATEGORY_ORDERS:
        raise ValueError("unknown bundled dataset %r" % name)
    return resources.files("lpcopula").joinpath("data", name + ".csv")


def parse_categories(decls):
    """``["eye=blue,light,medium,dark"]`` -> ``{"eye": [...]}``."""
    out = {}
    for decl in decls or ():
        col, sep, levels = decl.partition("=")
        if not sep or not levels:
            raise ValueError("category declaration must look like COL=a,b,c: %r" % decl)
        out[col.strip()] = [s.strip() for s in levels.split(",")]
    return out


def ingest(path, columns=None, categories=None):
    """Read a headed CSV into numeric columns.

    Declared categorical columns are coded ``0..k-1`` in the declared order.
    Only the requested ``columns`` (default: all) are parsed.  Any empty,
    ``NA`` or otherwise unparseable cell is an error naming row and column.
    """
    categories = dict(categories or {})
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ValueError("%s: empty file" % path) from None
        rows = list(reader)
    wanted = list(columns) if columns else header
    for c in wanted:
        if c not in header:
            raise ValueError("missing column %r in %s" % (c, path))
    out = {}
    for c in wanted:
        j = header.index(c)
        codes = {lvl: k for k, lvl in enumerate(categories.get(c, []))}
        vals = []
        for i, row in enumerate(rows, start=2):
            if j >= len(row):
                raise ValueError("row %d, column %r: missing cell" % (i, c))
            cell = row[j].strip()
            if c in categories:
                if cell not in codes:
                    raise ValueError("row %d, column %r: undeclared category %r" % (i, c, cell))
                vals.append(float(codes[cell]))
                continue
            try:
                v = float(cell)
            except ValueError:
                raise ValueError("row %d, column %r: cannot parse %r" % (i, c, cell)) from None
            if not math.isfinite(v):
                raise ValueError("row %d, column %r: non-finite value %r" % (i, c, cell))
            vals.append(v)
        out[c] = np.asarray(vals)
    return Dataset(names=wanted, columns=out, n=len(rows))


def load_dataset(name):
    """Load a bundled dataset: yates, wais, geyser or fisher_caithness."""
    with resources.as_file(bundled_path(name)) as p:
        return ingest(p, categories=CATEGORY_ORDERS[name])

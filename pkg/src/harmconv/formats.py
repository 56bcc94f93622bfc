"""Plain-text coefficient dumps, grid config files and CSV reports."""

from __future__ import annotations

import configparser
import csv
import io
from pathlib import Path
from typing import Dict, Iterable

import numpy as np

from .harmonic import HarmonicMap
from .series import TaylorSeries

DUMP_MAGIC = "# harmconv coefficient dump"


def format_dump(f: HarmonicMap, **metadata) -> str:
    """Lines ``k re im`` per coefficient, h part then g part, 17 significant digits."""
    meta = {"name": f.name or "", "order": f.order}
    meta.update(metadata)
    out = [DUMP_MAGIC]
    out += [f"# {k} = {v}" for k, v in meta.items()]
    for part, s in (("h", f.h), ("g", f.g)):
        out.append(f"# part {part}")
        out += [f"{k} {c.real:.17g} {c.imag:.17g}" for k, c in enumerate(s.coeffs)]
    return "\n".join(out) + "\n"


def parse_dump(text: str) -> HarmonicMap:
    meta: Dict[str, str] = {}
    parts: Dict[str, list] = {}
    current = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line == DUMP_MAGIC:
            continue
        if line.startswith("# part "):
            current = line.split()[2]
            parts[current] = []
        elif line.startswith("#"):
            key, _, value = line[1:].partition("=")
            meta[key.strip()] = value.strip()
        else:
            if current is None:
                raise ValueError("coefficient line before any '# part' header")
            k, re, im = line.split()
            if int(k) != len(parts[current]):
                raise ValueError(f"coefficient index {k} out of sequence")
            parts[current].append(complex(float(re), float(im)))
    if set(parts) != {"h", "g"}:
        raise ValueError("dump must contain parts h and g")
    return HarmonicMap(TaylorSeries(parts["h"]), TaylorSeries(parts["g"]),
                       name=meta.get("name") or None)


def write_dump(f: HarmonicMap, path, **metadata) -> Path:
    path = Path(path)
    path.write_text(format_dump(f, **metadata))
    return path


def read_dump(path) -> HarmonicMap:
    return parse_dump(Path(path).read_text())


GRID_KEYS = {"r_max": float, "n_radii": int, "angles": int, "order": int}


def read_config(path) -> dict:
    """``key = value`` lines; ``#`` starts a comment.  Unknown keys are rejected."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.read_string("[grid]\n" + Path(path).read_text())
    out = {}
    for key, value in parser["grid"].items():
        if key not in GRID_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = GRID_KEYS[key](value)
    return out


def reports_csv(reports: Iterable) -> str:
    from .certify import CertificationReport

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CertificationReport.CSV_FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()

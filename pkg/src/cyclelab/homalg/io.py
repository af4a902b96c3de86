"""Serialization: MatrixMarket coordinate text, CSV page grids, JSON.

All writers are byte-deterministic for fixed inputs: keys sorted, no
timestamps, newline-terminated.
"""

from __future__ import annotations

import csv
import io as _io
import json

from .intmat import IntMatrix

MM_HEADER = "%%MatrixMarket matrix coordinate integer general"


def matrix_to_mm(A):
    """MatrixMarket coordinate text (1-based indices, sorted entries)."""
    lines = [MM_HEADER,
             "%d %d %d" % (A.rows, A.cols, len(A.entries))]
    for (i, j) in sorted(A.entries):
        lines.append("%d %d %d" % (i + 1, j + 1, A.entries[i, j]))
    return "\n".join(lines) + "\n"


def matrix_from_mm(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("%")]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("bad size line %r" % (lines[0],))
    rows, cols, nnz = (int(x) for x in head)
    entries = {}
    if len(lines) - 1 != nnz:
        raise ValueError("entry count %d does not match header %d"
                         % (len(lines) - 1, nnz))
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError("bad entry line %r" % (ln,))
        i, j, v = int(parts[0]), int(parts[1]), int(parts[2])
        entries[i - 1, j - 1] = v
    return IntMatrix(rows, cols, entries)


def write_matrix_market(A, path):
    with open(path, "w") as fh:
        fh.write(matrix_to_mm(A))


def read_matrix_market(path):
    with open(path) as fh:
        return matrix_from_mm(fh.read())


def json_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(obj, path):
    with open(path, "w") as fh:
        fh.write(json_dumps(obj))


def page_to_csv(page, p_lo, p_hi, q_lo, q_hi):
    """CSV grid for one spectral page: one row per q (descending), one
    column per p, cells rendered as group descriptions."""
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q\\p"] + [str(p) for p in range(p_lo, p_hi + 1)])
    for q in range(q_hi, q_lo - 1, -1):
        row = [str(q)]
        for p in range(p_lo, p_hi + 1):
            row.append(page.entry(p, q).describe())
        w.writerow(row)
    return buf.getvalue()


def spectral_summary(result):
    """JSON-ready summary of a spectral run."""
    out = {
        "stable_page": result.stable_page,
        "pages": len(result.pages),
        "einf": {"%d,%d" % k: v.to_json()
                 for k, v in sorted(result.einf.items())},
        "total_homology": {str(s): v.to_json()
                           for s, v in sorted(result.total.items())},
        "filtration": {"%d,%d" % k: v.to_json()
                       for k, v in sorted(result.filtration.items())
                       if not v.is_trivial()},
        "differentials": [],
    }
    for page in result.pages:
        for (p, q), rec in sorted(page.diffs.items()):
            out["differentials"].append({
                "r": page.r,
                "source": [p, q],
                "target": list(rec["target"]),
                "columns": rec["columns"],
                "source_orders": rec["source_orders"],
                "target_orders": rec["target_orders"],
            })
    return out


def write_spectral_artifacts(result, outdir, prefix="page"):
    """Write one CSV per page plus a JSON summary; returns file names."""
    import os

    spots = set()
    for page in result.pages:
        spots.update(page.entries)
    if spots:
        p_lo = min(p for p, _ in spots)
        p_hi = max(p for p, _ in spots)
        q_lo = min(q for _, q in spots)
        q_hi = max(q for _, q in spots)
    else:
        p_lo = p_hi = q_lo = q_hi = 0
    names = []
    for page in result.pages:
        name = "%s_r%d.csv" % (prefix, page.r)
        with open(os.path.join(outdir, name), "w") as fh:
            fh.write(page_to_csv(page, p_lo, p_hi, q_lo, q_hi))
        names.append(name)
    sname = "%s_summary.json" % prefix
    write_json(spectral_summary(result), os.path.join(outdir, sname))
    names.append(sname)
    return names

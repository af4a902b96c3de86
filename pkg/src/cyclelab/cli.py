"""Command line front end.

Every command reads explicit inputs, prints a deterministic rendering to
stdout, and optionally writes JSON artifacts plus a manifest under an output
directory.  Exit codes: 0 on success, 1 on input errors (bad files, bad
flags, size-guard breaches), 2 on domain refusals (the computation ran and
the mathematical answer is "no").
"""

import argparse
import hashlib
import json
import os
import random
import sys

from .cartan_leray import (
    CartanLerayError,
    EquivariantCellData,
    StabilizerError,
    VanishingRegion,
    assemble_e1,
    build_local_star_data,
    build_shifted_torus_data,
    build_torus_action_data,
    certify_stable,
    e1_matches_expansion,
    expand_double_complex,
    quotient_by_orbit,
    verify_corner_lemma,
)
from .cycle_complex import CycleError, build_cell, check_M_membership, enumerate_basic_cycles
from .homalg.spectral import SizeGuardError, run_spectral_sequence
from .multicurve import (
    MulticurveError,
    build_standard,
    check_conditions,
    graph_from_json,
    graph_to_json,
    multicurve_invariants,
    validate_graph,
)
from .symplectic import (
    SymplecticError,
    Splitting,
    basis_e,
    basis_f,
    format_vector,
    intersection,
    orbit_key,
    parse_vector,
    reverse,
    standard_splitting,
    standard_truncated,
    transvection,
    validate_splitting,
)
from .torelli_classes import (
    TorelliClassError,
    independence_certificate,
    involution_sign,
    make_symbol,
    theta_signs,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUSED = 2


class CLIInputError(ValueError):
    pass


# exception types that signal a malformed request rather than a negative
# mathematical answer; they all map to EXIT_INPUT
_INPUT_ERRORS = (
    CLIInputError,
    SymplecticError,
    MulticurveError,
    CycleError,
    CartanLerayError,
    TorelliClassError,
    SizeGuardError,
    OSError,
    json.JSONDecodeError,
)


class RunConfig:
    """Validated run parameters shared by all commands."""

    __slots__ = ("command", "inputs", "genus", "n", "max_rank", "out_dir", "fmt", "seed")

    def __init__(self, command, inputs=(), genus=None, n=None, max_rank=None,
                 out_dir=None, fmt="text", seed=None):
        if fmt not in ("json", "csv", "text"):
            raise CLIInputError("format must be json, csv, or text")
        if genus is not None and genus < 2:
            raise CLIInputError("genus must be at least 2")
        if n is not None and genus is not None and not 1 <= n <= genus - 1:
            raise CLIInputError("need 1 <= n <= g-1")
        if max_rank is not None and max_rank < 1:
            raise CLIInputError("max rank bound must be positive")
        self.command = command
        self.inputs = tuple(str(p) for p in inputs)
        self.genus = genus
        self.n = n
        self.max_rank = max_rank
        self.out_dir = out_dir
        self.fmt = fmt
        self.seed = seed

    def to_json(self):
        out = {"command": self.command, "format": self.fmt}
        if self.inputs:
            out["inputs"] = list(self.inputs)
        # out_dir is deliberately omitted: the manifest lives inside it, and
        # artifact trees should compare byte-identical wherever they land
        for name in ("genus", "n", "max_rank", "seed"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out


def _dumps(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class ArtifactWriter:
    """Collects artifacts under one directory and indexes them in a manifest."""

    def __init__(self, out_dir):
        self.out_dir = out_dir
        self.entries = []
        if out_dir:
            os.makedirs(out_dir, exist_ok=True)

    def write_json(self, name, payload):
        if not self.out_dir:
            return
        data = _dumps(payload).encode("utf-8")
        path = os.path.join(self.out_dir, name)
        with open(path, "wb") as fh:
            fh.write(data)
        self.entries.append(
            {"name": name, "bytes": len(data), "sha256": hashlib.sha256(data).hexdigest()}
        )

    def finish(self, config):
        if not self.out_dir:
            return
        manifest = {
            "run": config.to_json(),
            "artifacts": sorted(self.entries, key=lambda e: e["name"]),
        }
        path = os.path.join(self.out_dir, "manifest.json")
        with open(path, "wb") as fh:
            fh.write(_dumps(manifest).encode("utf-8"))


def _csv_line(fields):
    out = []
    for f in fields:
        text = str(f)
        if any(ch in text for ch in ',"\n'):
            text = '"' + text.replace('"', '""') + '"'
        out.append(text)
    return ",".join(out)


def emit(out, config, payload, text_lines, csv_rows=None):
    """Render one result to stdout in the configured format."""
    if config.fmt == "json":
        out.write(_dumps(payload))
    elif config.fmt == "csv":
        for row in csv_rows or []:
            out.write(_csv_line(row) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def report_lines(report):
    lines = ["%s: %s" % (report.subject, "ok" if report.ok else "FAILED")]
    for item in report.items:
        mark = "ok  " if item.passed else "FAIL"
        lines.append("  [%s] %s%s" % (mark, item.name, " - " + item.detail if item.detail else ""))
    return lines


def report_rows(report):
    rows = [("check", "passed", "detail")]
    for item in report.items:
        rows.append((item.name, "true" if item.passed else "false", item.detail))
    return rows


# ---------------------------------------------------------------------------
# shared input plumbing


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CLIInputError("no such file: %s" % path)
    except ValueError as exc:
        raise CLIInputError("malformed JSON in %s: %s" % (path, exc))


def _load_graph(path):
    graph = graph_from_json(_load_json(path))
    rep = validate_graph(graph)
    if not rep.ok:
        raise CLIInputError(
            "invalid multicurve in %s: %s"
            % (path, "; ".join(i.name for i in rep.failures()))
        )
    return graph


def _name_table(graph):
    """Names usable in --x expressions: a1..ag, b1..bg, and curve ids."""
    g = graph.genus
    table = {}
    for i in range(g):
        table["a%d" % (i + 1)] = basis_e(g, i)
        table["b%d" % (i + 1)] = basis_f(g, i)
    for c in graph.curves:
        table.setdefault(c.id, c.cls)
    return table


def _parse_x(expr, graph):
    return parse_vector(expr, graph.genus, names=_name_table(graph))


def _parse_pair(text, flag):
    parts = text.split(",")
    if len(parts) != 2:
        raise CLIInputError("%s expects two comma-separated integers" % flag)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise CLIInputError("%s expects integers, got %r" % (flag, text))


def _parse_positions(text):
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise CLIInputError("--positions expects comma-separated integers")


def _structure_json(ab):
    return {"rank": ab.free_rank, "torsion": list(ab.torsion), "structure": ab.describe()}


# ---------------------------------------------------------------------------
# commands


def cmd_cycles_enum(args, out):
    config = RunConfig("cycles enum", inputs=[args.multicurve], fmt=args.format,
                       out_dir=args.out)
    graph = _load_graph(args.multicurve)
    x = _parse_x(args.x, graph)
    cycles = enumerate_basic_cycles(graph, x)
    payload = {
        "genus": graph.genus,
        "x": list(x),
        "count": len(cycles),
        "cycles": [c.to_json() for c in cycles],
    }
    lines = ["%d basic cycle(s) for x = %s" % (len(cycles), format_vector(x, graph.genus))]
    rows = [("cycle", "support", "weights")]
    for i, c in enumerate(cycles):
        terms = []
        for cid in c.support:
            w = c.coefficients[cid]
            terms.append(cid if w == 1 else "%s*%s" % (w, cid))
        lines.append("  %d: %s" % (i + 1, " + ".join(terms)))
        rows.append((i + 1, " ".join(c.support),
                     " ".join(str(c.coefficients[cid]) for cid in c.support)))
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("cycles.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK


def cmd_membership_check(args, out):
    config = RunConfig("membership check", inputs=[args.multicurve], fmt=args.format,
                       out_dir=args.out)
    graph = _load_graph(args.multicurve)
    x = _parse_x(args.x, graph)
    report = check_M_membership(graph, x)
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("membership.json", report.to_json())
    writer.finish(config)
    emit(out, config, report.to_json(), report_lines(report), report_rows(report))
    return EXIT_OK if report.ok else EXIT_REFUSED


def cmd_cell_build(args, out):
    config = RunConfig("cell build", inputs=[args.multicurve], fmt=args.format,
                       out_dir=args.out)
    graph = _load_graph(args.multicurve)
    x = _parse_x(args.x, graph)
    membership = check_M_membership(graph, x)
    writer = ArtifactWriter(config.out_dir)
    if not membership.ok:
        writer.write_json("membership.json", membership.to_json())
        writer.finish(config)
        emit(out, config, membership.to_json(),
             ["cell refused: multicurve fails membership"] + report_lines(membership),
             report_rows(membership))
        return EXIT_REFUSED
    cell = build_cell(graph, x)
    inv = multicurve_invariants(graph)
    face_counts = {}
    for f in cell.faces:
        face_counts[f.dim] = face_counts.get(f.dim, 0) + 1
    payload = {
        "invariants": inv.to_json(),
        "dimension": cell.dimension,
        "face_counts": {str(d): face_counts[d] for d in sorted(face_counts)},
        "cell": cell.to_json(),
    }
    lines = [
        "cell of dimension %d with %d vertices" % (cell.dimension, len(cell.vertices)),
        "identity: |M| - D = %d - %d = %d, c - 1 = %d"
        % (inv.size, inv.class_rank, inv.size - inv.class_rank, inv.complement_count - 1),
    ]
    rows = [("dimension", "faces")]
    for d in sorted(face_counts):
        lines.append("  faces of dimension %d: %d" % (d, face_counts[d]))
        rows.append((d, face_counts[d]))
    writer.write_json("cell.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK


def _standard_for(kind, genus, n):
    if n is None:
        return standard_splitting(genus)
    if not 1 <= n <= genus - 3:
        raise CLIInputError("truncated families need 1 <= n <= g-3")
    return standard_truncated(genus, n)


def cmd_family_build(args, out):
    config = RunConfig("family build", genus=args.genus, n=args.n, fmt=args.format,
                       out_dir=args.out)
    s = _standard_for(args.kind, args.genus, args.n)
    graph = build_standard(args.kind, s, include_embedded=not args.no_embedded)
    inv = multicurve_invariants(graph)
    payload = {
        "kind": args.kind,
        "genus": args.genus,
        "n": args.n,
        "invariants": inv.to_json(),
        "multicurve": graph_to_json(graph),
    }
    lines = [
        "%s family at genus %d%s" % (args.kind, args.genus,
                                     "" if args.n is None else " (n=%d)" % args.n),
        "components: %s" % ", ".join(graph.component_ids()),
        "curves: %s" % ", ".join(graph.curve_ids()),
        "size %d, complement count %d, class rank %d"
        % (inv.size, inv.complement_count, inv.class_rank),
    ]
    rows = [("field", "value"),
            ("components", " ".join(graph.component_ids())),
            ("curves", " ".join(graph.curve_ids())),
            ("size", inv.size),
            ("complement_count", inv.complement_count),
            ("class_rank", inv.class_rank)]
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("family.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK


def cmd_family_check(args, out):
    config = RunConfig("family check", inputs=[args.multicurve], n=args.n,
                       fmt=args.format, out_dir=args.out)
    graph = _load_graph(args.multicurve)
    s = _standard_for(args.kind, graph.genus, args.n)
    report = check_conditions(graph, args.kind, s)
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("conditions.json", report.to_json())
    writer.finish(config)
    emit(out, config, report.to_json(), report_lines(report), report_rows(report))
    return EXIT_OK if report.ok else EXIT_REFUSED


def _build_action_data(args):
    """Equivariant cell data from --data, --torus, --shifted, or --star."""
    sources = [name for name in ("data", "torus", "shifted", "star")
               if getattr(args, name, None) is not None]
    if len(sources) != 1:
        raise CLIInputError("give exactly one of --data, --torus, --shifted, --star")
    if args.data is not None:
        try:
            return EquivariantCellData.from_json(_load_json(args.data)), [args.data]
        except (KeyError, TypeError) as exc:
            raise CLIInputError("bad cell data in %s: %s" % (args.data, exc))
    if args.torus is not None:
        return build_torus_action_data(args.torus), []
    if args.shifted is not None:
        n, j = _parse_pair(args.shifted, "--shifted")
        return build_shifted_torus_data(n, j), []
    positions = None
    if args.positions is not None:
        positions = _parse_positions(args.positions)
    star = build_local_star_data(args.star, n=args.n, positions=positions)
    data = star.data
    if getattr(args, "quotient", False):
        data = quotient_by_orbit(data, star.pattern)
    return data, []


def cmd_sseq_run(args, out):
    data, inputs = _build_action_data(args)
    config = RunConfig("sseq run", inputs=inputs, max_rank=args.max_rank,
                       fmt=args.format, out_dir=args.out)
    check = data.validate(args.truncation)
    if not check.ok:
        raise CLIInputError(
            "cell data invalid: " + "; ".join(i.name for i in check.failures())
        )
    dc = expand_double_complex(data, truncation=args.truncation)
    result = run_spectral_sequence(dc, max_rank=args.max_rank)
    pages_json = []
    for page in result.pages:
        pages_json.append({
            "r": page.r,
            "stable": page.stable,
            "entries": [
                {"p": p, "q": q, **_structure_json(page.entries[p, q])}
                for (p, q) in page.nonzero_spots()
            ],
        })
    einf_spots = sorted(k for k, v in result.einf.items() if not v.is_trivial())
    payload = {
        "group": data.group,
        "stable_page": result.stable_page,
        "pages": pages_json,
        "einf": [{"p": p, "q": q, **_structure_json(result.einf[p, q])}
                 for (p, q) in einf_spots],
        "total": [{"degree": s, **_structure_json(result.total[s])}
                  for s in sorted(result.total) if not result.total[s].is_trivial()],
        # the run itself asserts the limit page equals the filtration graded
        "filtration_graded": [
            {"p": p, "q": q, **_structure_json(result.filtration[p, q])}
            for (p, q) in sorted(result.filtration)
            if not result.filtration[p, q].is_trivial()
        ],
    }
    lines = ["spectral sequence for %s (stable at page %d)" % (data.group, result.stable_page)]
    rows = [("page", "p", "q", "structure")]
    for page in pages_json:
        lines.append("page %d%s:" % (page["r"], " (stable)" if page["stable"] else ""))
        if not page["entries"]:
            lines.append("  (zero)")
        for ent in page["entries"]:
            lines.append("  E[%d,%d] = %s" % (ent["p"], ent["q"], ent["structure"]))
            rows.append((page["r"], ent["p"], ent["q"], ent["structure"]))
    lines.append("limit:")
    for ent in payload["einf"]:
        lines.append("  E[%d,%d] = %s" % (ent["p"], ent["q"], ent["structure"]))
        rows.append(("inf", ent["p"], ent["q"], ent["structure"]))
    lines.append("total homology:")
    for ent in payload["total"]:
        lines.append("  H_%d = %s" % (ent["degree"], ent["structure"]))
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("action.json", data.to_json())
    writer.write_json("sseq.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK


def cmd_cl_e1(args, out):
    data, inputs = _build_action_data(args)
    config = RunConfig("cl e1", inputs=inputs, max_rank=args.max_rank,
                       fmt=args.format, out_dir=args.out)
    grid = assemble_e1(data, truncation=args.truncation)
    payload = grid.to_json()
    lines = ["first page for %s" % data.group]
    if args.truncation is not None:
        lines[0] += " at truncation t=%d" % args.truncation
    rows = [("p", "q", "rank_or_bound")]
    for (p, q) in grid.spots():
        if grid.status(p, q) == "bounded":
            note = "bounded (cd <= %d)" % grid.bounded[p, q]
        else:
            poly = grid.poly(p, q)
            if poly.is_constant() or args.truncation is not None:
                note = str(poly.evaluate(args.truncation))
            else:
                note = str(poly)
        lines.append("  E1[%d,%d] = %s" % (p, q, note))
        rows.append((p, q, note))
    verdict = None
    if args.verify:
        verdict = e1_matches_expansion(data, truncation=args.truncation,
                                       max_rank=args.max_rank)
        payload = {"grid": payload, "oracle": verdict.to_json()}
        lines.extend(report_lines(verdict))
        rows.extend(report_rows(verdict)[1:])
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("action.json", data.to_json())
    writer.write_json("e1.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    if verdict is not None and not verdict.ok:
        return EXIT_REFUSED
    return EXIT_OK


def cmd_cl_certify(args, out):
    config = RunConfig("cl certify", fmt=args.format, out_dir=args.out)
    region = VanishingRegion.parse(args.region)
    entry = _parse_pair(args.entry, "--entry")
    cert = certify_stable(region, entry)
    payload = cert.to_json()
    lines = [
        "entry (%d,%d) against region %s: %s"
        % (entry[0], entry[1], region, "certified" if cert.valid else "refused"),
    ]
    rows = [("r", "out_position", "out_ok", "in_position", "in_ok")]
    for row in cert.rows:
        lines.append(
            "  r=%d: out->(%d,%d) %s, in<-(%d,%d) %s"
            % (row["r"], row["out"][0], row["out"][1], row["out_reason"],
               row["in"][0], row["in"][1], row["in_reason"])
        )
        rows.append((row["r"], "%d,%d" % tuple(row["out"]), row["out_ok"],
                     "%d,%d" % tuple(row["in"]), row["in_ok"]))
    if not cert.valid:
        lines.append("first uncovered: %s" % json.dumps(cert.first_uncovered, sort_keys=True))
    lines.append(cert.bound_note)
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("certificate.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK if cert.valid else EXIT_REFUSED


def cmd_lemma41_verify(args, out):
    config = RunConfig("lemma41 verify", fmt=args.format, out_dir=args.out)
    report = verify_corner_lemma(args.n, args.j, args.q)
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("corner.json", report.to_json())
    writer.finish(config)
    emit(out, config, report.to_json(), report_lines(report), report_rows(report))
    return EXIT_OK if report.ok else EXIT_REFUSED


# deterministic pool of mixing maps used by the splitting generator; each
# preserves the reference class of the standard splittings, so transformed
# splittings stay valid for the same x
def _mixing_pool(g):
    pool = []
    for i in range(g):
        for j in range(g):
            if i != j:
                gamma = tuple(a - b for a, b in zip(basis_f(g, i), basis_f(g, j)))
                pool.append(gamma)
                gamma = tuple(a - b for a, b in zip(basis_e(g, i), basis_e(g, j)))
                pool.append(gamma)
    return pool


def _apply_map(s, fn):
    return Splitting(s.genus, s.family, s.x,
                     [[fn(r) for r in rows] for rows in s.summands], n=s.n)


def generate_distinct_splittings(family, genus, count, seed, n=None):
    """Deterministically sample splittings with pairwise distinct orbit keys.

    Starts from the standard splitting and applies short words of
    transvections along classes orthogonal to x; candidates are kept when
    they validate and their orbit key is new.
    """
    base = standard_splitting(genus) if family == "full" else standard_truncated(genus, n)
    pool = _mixing_pool(genus)
    rng = random.Random(seed)
    found = [base]
    seen = {orbit_key(base)}
    attempts = 0
    while len(found) < count:
        attempts += 1
        if attempts > 200 * count:
            raise CLIInputError(
                "could not find %d distinct splittings at genus %d" % (count, genus)
            )
        word = [(rng.choice(pool), rng.choice((-2, -1, 1, 2)))
                for _ in range(rng.randint(1, 3))]
        cand = base
        for gamma, power in word:
            if intersection(cand.x, gamma):
                continue
            cand = _apply_map(cand, transvection(gamma, power))
        key = orbit_key(cand)
        if key in seen:
            continue
        if not validate_splitting(cand).ok:
            continue
        seen.add(key)
        found.append(cand)
    return found[:count]


def cmd_classes_certify(args, out):
    config = RunConfig("classes certify", genus=args.genus, n=args.n,
                       fmt=args.format, out_dir=args.out, seed=args.seed)
    if args.family == "truncated" and args.n is None:
        raise CLIInputError("truncated certificates need --n")
    if args.family == "full" and args.n is not None:
        raise CLIInputError("--n applies to the truncated family only")
    if args.count < 1:
        raise CLIInputError("--count must be positive")
    splittings = generate_distinct_splittings(
        args.family, args.genus, args.count, args.seed, n=args.n
    )
    if args.with_duplicate:
        splittings.append(reverse(splittings[0]) if args.family == "full" else splittings[0])
    payload_index = 0 if args.family == "truncated" else None
    symbols = [make_symbol(args.family, s, payload=payload_index) for s in splittings]
    cert = independence_certificate(symbols)
    payload = cert.to_json()
    payload["seed"] = args.seed
    lines = [
        "independence certificate: %s" % ("valid" if cert.valid else "refused"),
        "symbols %d, matrix rank %d, duplicates %d"
        % (len(symbols), cert.rank, len(cert.duplicates)),
        "seed %d" % args.seed,
    ]
    for axiom in cert.axioms_cited:
        lines.append("  cites: %s" % axiom)
    rows = [("field", "value"),
            ("valid", cert.valid),
            ("symbols", len(symbols)),
            ("rank", cert.rank),
            ("duplicates", len(cert.duplicates)),
            ("seed", args.seed)]
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("certificate.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK if cert.valid else EXIT_REFUSED


def cmd_signs_table(args, out):
    config = RunConfig("signs table", fmt=args.format, out_dir=args.out)
    if args.gmax < 3:
        raise CLIInputError("--gmax must be at least 3")
    table = []
    for g in range(3, args.gmax + 1):
        ledger = theta_signs(g)
        table.append({
            "genus": g,
            "involution": int(involution_sign("full", g)),
            "class_reversal": ledger.class_reversal_sign,
            "orientation": ledger.orientation_sign,
            "product": ledger.product,
        })
    payload = {"rows": table}
    lines = ["g  involution  class_reversal  orientation  product"]
    rows = [("g", "involution", "class_reversal", "orientation", "product")]
    for r in table:
        lines.append("%-2d %+10d  %+14d  %+11d  %+7d"
                     % (r["genus"], r["involution"], r["class_reversal"],
                        r["orientation"], r["product"]))
        rows.append((r["genus"], r["involution"], r["class_reversal"],
                     r["orientation"], r["product"]))
    if args.truncated:
        trunc = []
        for g in range(4, args.gmax + 1):
            for n in range(1, g - 2):
                trunc.append({"genus": g, "n": n,
                              "involution": int(involution_sign("truncated", g, n=n))})
        payload["truncated_rows"] = trunc
        lines.append("g  n  involution")
        rows.append(("g", "n", "involution", "", ""))
        for r in trunc:
            lines.append("%-2d %-2d %+10d" % (r["genus"], r["n"], r["involution"]))
            rows.append((r["genus"], r["n"], r["involution"], "", ""))
    writer = ArtifactWriter(config.out_dir)
    writer.write_json("signs.json", payload)
    writer.finish(config)
    emit(out, config, payload, lines, rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits 2 by default; usage problems are input errors here
        self.print_usage(sys.stderr)
        raise CLIInputError(message)


def _add_common(p):
    p.add_argument("--out", default=None, help="directory for JSON artifacts and manifest")
    p.add_argument("--format", default="text", choices=("json", "csv", "text"))


def _add_action_source(p):
    p.add_argument("--data", default=None, help="equivariant cell data JSON file")
    p.add_argument("--torus", type=int, default=None,
                   help="rank of a built-in torus action fixture")
    p.add_argument("--shifted", default=None, metavar="N,J",
                   help="built-in shifted-torus fixture with an extra rank-J factor")
    p.add_argument("--star", type=int, default=None, metavar="G",
                   help="local star of the standard family at genus G")
    p.add_argument("--n", type=int, default=None,
                   help="truncation index for --star (default: full family)")
    p.add_argument("--positions", default=None,
                   help="comma-separated split positions for --star supercells")
    p.add_argument("--quotient", action="store_true",
                   help="pass --star data through the distinguished-orbit quotient")
    p.add_argument("--truncation", type=int, default=None,
                   help="value substituted for symbolic stabilizer ranks")
    p.add_argument("--max-rank", type=int, default=None,
                   help="override the CYCLELAB_MAX_RANK size guard")


def build_parser():
    parser = _Parser(prog="cyclelab", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="group", required=True)

    cycles = top.add_parser("cycles", help="weighted cycles on a multicurve")
    sub = cycles.add_subparsers(dest="action", required=True)
    p = sub.add_parser("enum", help="enumerate basic cycles")
    p.add_argument("--multicurve", required=True, help="multicurve JSON file")
    p.add_argument("--x", required=True, help="class vector, e.g. \"a1+a2+2a3\"")
    _add_common(p)
    p.set_defaults(func=cmd_cycles_enum)

    cell = top.add_parser("cell", help="cells of the complex of cycles")
    sub = cell.add_subparsers(dest="action", required=True)
    p = sub.add_parser("build", help="build the cell spanned by the basic cycles")
    p.add_argument("--multicurve", required=True)
    p.add_argument("--x", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_cell_build)

    member = top.add_parser("membership", help="admissibility of a multicurve")
    sub = member.add_subparsers(dest="action", required=True)
    p = sub.add_parser("check", help="support cover and positive independence")
    p.add_argument("--multicurve", required=True)
    p.add_argument("--x", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_membership_check)

    family = top.add_parser("family", help="standard chain configurations")
    sub = family.add_subparsers(dest="action", required=True)
    p = sub.add_parser("build", help="build a standard configuration from a splitting")
    p.add_argument("--kind", required=True, choices=("N", "Gamma"))
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="truncation index")
    p.add_argument("--no-embedded", action="store_true",
                   help="omit the boundary curve of the truncated tail")
    _add_common(p)
    p.set_defaults(func=cmd_family_build)
    p = sub.add_parser("check", help="test a multicurve against the family conditions")
    p.add_argument("--kind", required=True, choices=("N", "Gamma"))
    p.add_argument("--multicurve", required=True)
    p.add_argument("--n", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_family_check)

    sseq = top.add_parser("sseq", help="spectral sequence of a double complex")
    sub = sseq.add_subparsers(dest="action", required=True)
    p = sub.add_parser("run", help="expand orbit data and run the page engine")
    _add_action_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_sseq_run)

    cl = top.add_parser("cl", help="equivariant first pages and stability")
    sub = cl.add_subparsers(dest="action", required=True)
    p = sub.add_parser("e1", help="closed-form first page of orbit data")
    _add_action_source(p)
    p.add_argument("--verify", action="store_true",
                   help="cross-check the closed form against the expanded complex")
    _add_common(p)
    p.set_defaults(func=cmd_cl_e1)
    p = sub.add_parser("certify", help="differential-free certificate for one entry")
    p.add_argument("--region", required=True, help="vanishing region, e.g. \"p<1|p+q>6\"")
    p.add_argument("--entry", required=True, metavar="P,Q")
    _add_common(p)
    p.set_defaults(func=cmd_cl_certify)

    lemma = top.add_parser("lemma41", help="corner behavior of torus actions")
    sub = lemma.add_subparsers(dest="action", required=True)
    p = sub.add_parser("verify", help="check the corner entry survives with the right basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_lemma41_verify)

    classes = top.add_parser("classes", help="independence certificates for cycle classes")
    sub = classes.add_subparsers(dest="action", required=True)
    p = sub.add_parser("certify", help="build symbols over distinct splittings and certify")
    p.add_argument("--family", default="full", choices=("full", "truncated"))
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-duplicate", action="store_true",
                   help="append a reversal duplicate to demonstrate rejection")
    _add_common(p)
    p.set_defaults(func=cmd_classes_certify)

    signs = top.add_parser("signs", help="sign bookkeeping tables")
    sub = signs.add_subparsers(dest="action", required=True)
    p = sub.add_parser("table", help="reversal and involution signs by genus")
    p.add_argument("--gmax", type=int, default=6)
    p.add_argument("--truncated", action="store_true",
                   help="append the truncated-family involution signs")
    _add_common(p)
    p.set_defaults(func=cmd_signs_table)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_rank", None) is not None:
            os.environ["CYCLELAB_MAX_RANK"] = str(args.max_rank)
        return args.func(args, out)
    except StabilizerError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except _INPUT_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

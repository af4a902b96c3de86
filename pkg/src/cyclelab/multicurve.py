"""Oriented multicurves modeled as decorated decomposition graphs.

A multicurve is stored by what is left after cutting the surface along it:
components (genus, puncture count) and oriented curves, each knowing the
component on its left and on its right plus its homology class.  The
standard chain-of-tori and chain-of-spheres configurations are built from a
splitting; condition checkers work on raw graph data only.
"""

from collections import Counter, namedtuple
from itertools import combinations

from .homalg.intmat import IntMatrix, rank, solve_integer, subgroup_contains
from .reports import ConditionReport, ValidationReport
from .symplectic import add, analyze_splitting, intersection, scale


class MulticurveError(ValueError):
    pass


Component = namedtuple("Component", ["id", "genus", "punctures"])
Curve = namedtuple("Curve", ["id", "cls", "left", "right", "role"])

ROLES = ("alpha", "alpha_prime", "beta", "beta_prime", "delta", "gamma", "epsilon", "other")


def make_curve(cid, cls, left, right, role="other"):
    if role not in ROLES:
        raise MulticurveError("unknown role %r" % role)
    return Curve(cid, tuple(int(c) for c in cls), left, right, role)


class DecompGraph:
    """Decomposition graph of an oriented multicurve on a genus-g surface."""

    __slots__ = ("genus", "components", "curves", "_comp", "_curve")

    def __init__(self, genus, components, curves):
        if genus < 2:
            raise MulticurveError("ambient genus must be at least 2")
        self.genus = genus
        self.components = tuple(
            Component(c.id, int(c.genus), int(c.punctures)) for c in components
        )
        self.curves = tuple(
            Curve(c.id, tuple(int(v) for v in c.cls), c.left, c.right, c.role)
            for c in curves
        )
        self._comp = {c.id: c for c in self.components}
        self._curve = {c.id: c for c in self.curves}

    def component(self, cid):
        return self._comp[cid]

    def curve(self, cid):
        return self._curve[cid]

    def component_ids(self):
        return [c.id for c in self.components]

    def curve_ids(self):
        return [c.id for c in self.curves]

    def curves_at(self, comp_id):
        """Incidences at a component as (curve, side) pairs; +1 left, -1 right."""
        out = []
        for c in self.curves:
            if c.left == comp_id:
                out.append((c, 1))
            if c.right == comp_id:
                out.append((c, -1))
        return out

    def class_matrix(self):
        return IntMatrix.from_rows([list(c.cls) for c in self.curves]) if self.curves else None

    def __eq__(self, other):
        return (
            isinstance(other, DecompGraph)
            and self.genus == other.genus
            and self.components == other.components
            and self.curves == other.curves
        )

    def __hash__(self):
        return hash((self.genus, self.components, self.curves))

    def __repr__(self):
        return "DecompGraph(g=%d, %d components, %d curves)" % (
            self.genus,
            len(self.components),
            len(self.curves),
        )


def empty_multicurve(genus):
    return DecompGraph(genus, [Component("S", genus, 0)], [])


def _connected(comp_ids, edges):
    """Connectivity of a multigraph given as (left, right) id pairs."""
    if not comp_ids:
        return True
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {comp_ids[0]}
    frontier = [comp_ids[0]]
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(comp_ids)


def validate_graph(g):
    """Closed-surface consistency checks; failures are entries, not raises."""
    report = ValidationReport("multicurve g=%d" % g.genus)

    comp_ids = [c.id for c in g.components]
    curve_ids = [c.id for c in g.curves]
    ids_ok = len(set(comp_ids)) == len(comp_ids) and len(set(curve_ids)) == len(curve_ids)
    report.add("unique_ids", ids_ok)

    known = set(comp_ids)
    bad_refs = [c.id for c in g.curves if c.left not in known or c.right not in known]
    report.add("endpoints_exist", not bad_refs, "bad refs: %s" % bad_refs if bad_refs else "")
    if not ids_ok or bad_refs:
        return report

    dim = 2 * g.genus
    bad_dim = [c.id for c in g.curves if len(c.cls) != dim]
    report.add("class_lengths", not bad_dim, str(bad_dim) if bad_dim else "")
    if bad_dim:
        return report

    euler = sum(2 - 2 * c.genus - c.punctures for c in g.components)
    report.add("euler", euler == 2 - 2 * g.genus, "sum %d, want %d" % (euler, 2 - 2 * g.genus))

    slot_bad = []
    for c in g.components:
        used = len(g.curves_at(c.id))
        if used != c.punctures:
            slot_bad.append("%s uses %d of %d" % (c.id, used, c.punctures))
    report.add("puncture_slots", not slot_bad, "; ".join(slot_bad))

    bdry_bad = []
    for c in g.components:
        total = (0,) * dim
        for curve, side in g.curves_at(c.id):
            total = add(total, scale(side, curve.cls))
        if any(total):
            bdry_bad.append(c.id)
    report.add("boundary_zero", not bdry_bad, "nonzero at %s" % bdry_bad if bdry_bad else "")

    edges = [(c.left, c.right) for c in g.curves]
    report.add("connected", _connected(comp_ids, edges))

    bridge_bad = []
    for c in g.curves:
        others = [(d.left, d.right) for d in g.curves if d.id != c.id]
        is_bridge = c.left != c.right and not _connected(comp_ids, others)
        if is_bridge != (not any(c.cls)):
            bridge_bad.append(c.id)
    report.add(
        "bridge_iff_null",
        not bridge_bad,
        "separating/class mismatch at %s" % bridge_bad if bridge_bad else "",
    )

    dup = [k for k, n in Counter((c.cls, c.left, c.right) for c in g.curves).items() if n > 1]
    report.add("no_duplicate_triples", not dup, "%d duplicate triples" % len(dup) if dup else "")

    neg = [c.id for c in g.components if c.genus < 0 or c.punctures < 0]
    report.add("nonnegative_data", not neg, str(neg) if neg else "")
    return report


class MulticurveInvariants:
    __slots__ = ("size", "complement_count", "class_rank", "dimension", "bp")

    def __init__(self, size, complement_count, class_rank, dimension, bp):
        self.size = size
        self.complement_count = complement_count
        self.class_rank = class_rank
        self.dimension = dimension
        self.bp = bp

    def as_tuple(self):
        return (self.size, self.complement_count, self.class_rank, self.dimension, self.bp)

    def to_json(self):
        return {
            "size": self.size,
            "complement_count": self.complement_count,
            "class_rank": self.class_rank,
            "dimension": self.dimension,
            "bp": self.bp,
            "bp_model_derived": True,
        }

    def __repr__(self):
        return "MulticurveInvariants(size=%d, c=%d, D=%d, dim=%d, bp=%d)" % self.as_tuple()


def multicurve_invariants(g):
    """Counts (|M|, c, D, dim = c-1, bp); bp is the duplicate-class surplus.

    bp sums (multiplicity - 1) over distinct nonzero classes; v and -v count
    as different classes.  The number is model-derived, flagged as such in
    the JSON form.
    """
    rep = validate_graph(g)
    if not rep.ok:
        raise MulticurveError("invalid graph: " + "; ".join(i.name for i in rep.failures()))
    size = len(g.curves)
    c = len(g.components)
    m = g.class_matrix()
    d = rank(m) if m is not None else 0
    counts = Counter(cv.cls for cv in g.curves if any(cv.cls))
    bp = sum(n - 1 for n in counts.values())
    return MulticurveInvariants(size, c, d, c - 1, bp)


def graph_to_json(g):
    return {
        "genus": g.genus,
        "components": [
            {"id": c.id, "genus": c.genus, "punctures": c.punctures} for c in g.components
        ],
        "curves": [
            {"id": c.id, "class": list(c.cls), "left": c.left, "right": c.right, "role": c.role}
            for c in g.curves
        ],
    }


def graph_from_json(d):
    try:
        genus = int(d["genus"])
        comps = [
            Component(str(c["id"]), int(c["genus"]), int(c["punctures"]))
            for c in d["components"]
        ]
        curves = [
            make_curve(
                str(c["id"]),
                [int(v) for v in c["class"]],
                str(c["left"]),
                str(c["right"]),
                str(c.get("role", "other")),
            )
            for c in d["curves"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise MulticurveError("bad multicurve record: %s" % exc)
    return DecompGraph(genus, comps, curves)


# ---------------------------------------------------------------------------
# standard families


def build_standard(kind, splitting, b=None, include_embedded=True):
    """Standard configuration graphs derived from a splitting.

    kind "N": chain of four-punctured spheres carrying the class-x curves;
    kind "Gamma": separating chain with homologous twist pairs, taking the
    dual classes b (defaults to the splitting's canonical ones).  Truncated
    splittings produce the truncated variants; truncated "Gamma" includes
    the boundary curve of the marked subsurface unless include_embedded is
    False, in which case the tail stays one piece.
    """
    data = analyze_splitting(splitting)
    if kind == "N":
        if splitting.family == "full":
            return _build_n_full(splitting, data)
        return _build_n_truncated(splitting, data)
    if kind == "Gamma":
        if splitting.family == "full":
            return _build_gamma_full(splitting, data, b)
        return _build_gamma_truncated(splitting, data, b, include_embedded)
    raise MulticurveError("unknown family kind %r" % kind)


def _build_n_full(s, data):
    g = s.genus
    a = data["a"]
    comps = [Component("Y%d" % i, 0, 4) for i in range(1, g)]
    curves = [make_curve("alpha0", a[0], "Y1", "Y1", "alpha")]
    for i in range(1, g - 1):
        curves.append(make_curve("alpha%d" % i, a[i], "Y%d" % i, "Y%d" % (i + 1), "alpha"))
        curves.append(
            make_curve("alpha%d_p" % i, a[i], "Y%d" % (i + 1), "Y%d" % i, "alpha_prime")
        )
    last = "Y%d" % (g - 1)
    curves.append(make_curve("alpha%d" % (g - 1), a[g - 1], last, last, "alpha"))
    return DecompGraph(g, comps, curves)


def _build_n_truncated(s, data):
    g, n = s.genus, s.n
    a = data["a"]
    comps = [Component("Y%d" % i, 0, 4) for i in range(1, n + 1)]
    comps.append(Component("Y%d" % (n + 1), g - n - 1, 2))
    curves = [make_curve("alpha0", a[0], "Y1", "Y1", "alpha")]
    for i in range(1, n + 1):
        curves.append(make_curve("alpha%d" % i, a[i], "Y%d" % i, "Y%d" % (i + 1), "alpha"))
        curves.append(
            make_curve("alpha%d_p" % i, a[i], "Y%d" % (i + 1), "Y%d" % i, "alpha_prime")
        )
    return DecompGraph(g, comps, curves)


def _b_classes(s, data, b, count):
    """Dual classes b_1..b_count validated against the splitting."""
    if b is None:
        return [data["b"][i] for i in range(1, count + 1)]
    if len(b) != count:
        raise MulticurveError("need %d dual classes" % count)
    out = []
    for i, v in enumerate(b, start=1):
        v = tuple(int(c) for c in v)
        if not subgroup_contains(s.summands[i], v):
            raise MulticurveError("dual class %d outside its summand" % i)
        if intersection(data["a"][i], v) != 1:
            raise MulticurveError("dual class %d does not pair to 1" % i)
        out.append(v)
    return out


def _build_gamma_full(s, data, b):
    g = s.genus
    if g < 3:
        raise MulticurveError("separating chain needs genus at least 3")
    bs = _b_classes(s, data, b, g - 2)
    zero = (0,) * (2 * g)
    comps = [Component("X0", 1, 1)]
    for i in range(1, g - 1):
        comps.append(Component("P%d" % i, 0, 3))
        comps.append(Component("Q%d" % i, 0, 3))
    comps.append(Component("X%d" % (g - 1), 1, 1))
    curves = []
    for i in range(1, g):
        left = "X0" if i == 1 else "Q%d" % (i - 1)
        right = "X%d" % (g - 1) if i == g - 1 else "P%d" % i
        curves.append(make_curve("delta%d" % i, zero, left, right, "delta"))
    for i in range(1, g - 1):
        curves.append(make_curve("beta%d" % i, bs[i - 1], "Q%d" % i, "P%d" % i, "beta"))
        curves.append(make_curve("beta%d_p" % i, bs[i - 1], "P%d" % i, "Q%d" % i, "beta_prime"))
    return DecompGraph(g, comps, curves)


def _build_gamma_truncated(s, data, b, include_embedded):
    g, n = s.genus, s.n
    if n > g - 2:
        raise MulticurveError("truncated separating chain needs n <= g-2")
    bs = _b_classes(s, data, b, n)
    zero = (0,) * (2 * g)
    comps = [Component("X0", 1, 1)]
    for i in range(1, n):
        comps.append(Component("P%d" % i, 0, 3))
        comps.append(Component("Q%d" % i, 0, 3))
    comps.append(Component("P%d" % n, 0, 3))
    curves = []
    for i in range(1, n + 1):
        left = "X0" if i == 1 else "Q%d" % (i - 1)
        curves.append(make_curve("delta%d" % i, zero, left, "P%d" % i, "delta"))
    if include_embedded:
        comps.append(Component("Q%d" % n, 0, 3))
        comps.append(Component("W", g - n - 1, 1))
        curves.append(make_curve("eps", zero, "Q%d" % n, "W", "epsilon"))
    else:
        comps.append(Component("Q%d" % n, g - n - 1, 2))
    for i in range(1, n + 1):
        curves.append(make_curve("beta%d" % i, bs[i - 1], "Q%d" % i, "P%d" % i, "beta"))
        curves.append(make_curve("beta%d_p" % i, bs[i - 1], "P%d" % i, "Q%d" % i, "beta_prime"))
    return DecompGraph(g, comps, curves)


# ---------------------------------------------------------------------------
# submulticurves and merged regions


def submulticurve(g, keep_ids):
    """Graph obtained by erasing the curves not in keep_ids.

    Components merge along erased curves; a merged region's punctures drop
    by two per erased internal curve and its genus follows from Euler
    additivity.  Merged ids are the sorted member ids joined with '+'.
    """
    keep = set(keep_ids)
    unknown = keep - set(g.curve_ids())
    if unknown:
        raise MulticurveError("unknown curve ids %s" % sorted(unknown))
    removed = [c for c in g.curves if c.id not in keep]

    parent = {c.id: c.id for c in g.components}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for c in removed:
        ra, rb = find(c.left), find(c.right)
        if ra != rb:
            parent[ra] = rb

    groups = {}
    for comp in g.components:
        groups.setdefault(find(comp.id), []).append(comp)
    names = {}
    merged = []
    for root in sorted(groups, key=lambda r: sorted(c.id for c in groups[r])):
        members = groups[root]
        name = "+".join(sorted(c.id for c in members))
        internal = sum(1 for c in removed if find(c.left) == root)
        chi = sum(2 - 2 * c.genus - c.punctures for c in members)
        punct = sum(c.punctures for c in members) - 2 * internal
        genus2 = 2 - chi - punct
        if genus2 % 2 or genus2 < 0 or punct < 0:
            raise MulticurveError("inconsistent merge at %s" % name)
        for c in members:
            names[c.id] = name
        merged.append(Component(name, genus2 // 2, punct))

    new_curves = [
        Curve(c.id, c.cls, names[c.left], names[c.right], c.role)
        for c in g.curves
        if c.id in keep
    ]
    return DecompGraph(g.genus, merged, new_curves)


def region_members(merged_id):
    return merged_id.split("+")


# ---------------------------------------------------------------------------
# chain-of-curves pattern


def _chain_order(g):
    """Component ids ordered along the path of the adjacency graph.

    None when the adjacency is not a path; self-loops count as path ends.
    Starts at a self-loop end when one exists, breaking ties by id.
    """
    neighbors = {c.id: set() for c in g.components}
    loops = {c.id: 0 for c in g.components}
    for c in g.curves:
        if c.left == c.right:
            loops[c.left] += 1
        else:
            neighbors[c.left].add(c.right)
            neighbors[c.right].add(c.left)
    if len(g.components) == 1:
        return [g.components[0].id]
    ends = [cid for cid, ns in neighbors.items() if len(ns) == 1]
    if len(ends) != 2 or any(len(ns) > 2 for ns in neighbors.values()):
        return None
    start = sorted(ends, key=lambda cid: (-loops[cid], cid))[0]
    order = [start]
    prev = None
    while True:
        nxt = [v for v in neighbors[order[-1]] if v != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
        if len(order) > len(g.components):
            return None
    return order if len(order) == len(g.components) else None


def positive_combination(classes, x):
    """All-positive integer l with sum l_i * classes_i = x, or None.

    Requires linearly independent classes, so the solution is unique when
    it exists.
    """
    m = IntMatrix.from_rows([list(c) for c in classes])
    if rank(m) != len(classes):
        return None
    sol = solve_integer(m.transpose(), list(x))
    if sol is None or any(v <= 0 for v in sol):
        return None
    return tuple(sol)


def _n_pattern(g, x=None):
    """Structural checks of the chain-of-curves pattern on a raw graph.

    Returns (report, info); info carries the ordered chain classes and the
    positive solution when the pattern holds, else None.
    """
    report = ConditionReport("N-pattern")
    base = validate_graph(g)
    report.add(
        "graph_valid", base.ok, "" if base.ok else "; ".join(i.name for i in base.failures())
    )
    if not base.ok:
        return report, None

    report.add("N1_nonseparating", all(any(c.cls) for c in g.curves))
    if not report.ok:
        return report, None

    order = _chain_order(g)
    report.add("N3_path", order is not None, "complement adjacency must be a path")
    if order is None:
        return report, None

    comps = [g.component(cid) for cid in order]
    loops = {cid: [] for cid in order}
    for c in g.curves:
        if c.left == c.right:
            loops[c.left].append(c)

    if len(order) == 1:
        # smallest closed chain: one four-punctured sphere, two loop curves
        comp = comps[0]
        ok = comp.genus == 0 and comp.punctures == 4 and len(loops[comp.id]) == 2
        report.add("N3_shapes", ok)
        report.add("N3_end_loops", ok)
        if not ok:
            return report, None
        chain = sorted(loops[comp.id], key=lambda c: c.id)
        info = {
            "order": order,
            "classes": [c.cls for c in chain],
            "pairs": [],
            "truncated": False,
            "loops": chain,
        }
        if x is not None:
            sol = positive_combination(info["classes"], x)
            report.add("N4_positive_combination", sol is not None)
            info["l"] = sol
        return report, info

    truncated = not (comps[-1].genus == 0 and comps[-1].punctures == 4)
    interior = comps[:-1] if truncated else comps
    shape_ok = all(c.genus == 0 and c.punctures == 4 for c in interior)
    if truncated:
        shape_ok = shape_ok and comps[-1].punctures == 2
    report.add(
        "N3_shapes", shape_ok, "four-punctured spheres with at most one two-punctured tail"
    )

    want_loops = [order[0]] if truncated else [order[0], order[-1]]
    loops_ok = all(len(loops[cid]) == 1 for cid in want_loops) and all(
        not loops[cid] for cid in order if cid not in want_loops
    )
    report.add("N3_end_loops", loops_ok)
    if not (shape_ok and loops_ok):
        return report, None

    pair_ok = True
    orient_ok = True
    chain_classes = [loops[order[0]][0].cls]
    pair_curves = []
    for i in range(len(order) - 1):
        a_id, b_id = order[i], order[i + 1]
        between = [c for c in g.curves if {c.left, c.right} == {a_id, b_id}]
        if len(between) != 2:
            pair_ok = False
            break
        fwd = [c for c in between if (c.left, c.right) == (a_id, b_id)]
        bwd = [c for c in between if (c.left, c.right) == (b_id, a_id)]
        if len(fwd) != 1 or len(bwd) != 1:
            orient_ok = False
            break
        if fwd[0].cls != bwd[0].cls:
            pair_ok = False
            break
        chain_classes.append(fwd[0].cls)
        pair_curves.append((fwd[0], bwd[0]))
    report.add("N2_pairs_homologous", pair_ok, "parallel curves must share a class")
    report.add("N3_pair_orientations", orient_ok, "parallel curves must run oppositely")
    if not (pair_ok and orient_ok):
        return report, None
    if not truncated:
        chain_classes.append(loops[order[-1]][0].cls)

    info = {
        "order": order,
        "classes": chain_classes,
        "pairs": pair_curves,
        "truncated": truncated,
        "loops": [loops[cid][0] for cid in want_loops],
    }
    if x is not None:
        sol = positive_combination(chain_classes, x)
        report.add("N4_positive_combination", sol is not None)
        info["l"] = sol
    return report, info


def _check_n(g, s):
    x = s.x if s is not None else None
    report, info = _n_pattern(g, x)
    if info is None or s is None:
        return report
    data = analyze_splitting(s)
    a = data["a"]
    seq = info["classes"]
    if len(seq) == 2 and not info["truncated"]:
        match = sorted(seq) == sorted(a)
    else:
        match = list(seq) == list(a) or (
            not info["truncated"] and list(seq) == list(reversed(a))
        )
    report.add("classes_match_splitting", match)
    if info["truncated"]:
        tail = g.component(info["order"][-1])
        report.add(
            "N3_tail_genus",
            tail.genus == s.genus - s.n - 1,
            "tail genus %d, want %d" % (tail.genus, s.genus - s.n - 1),
        )
    return report


# ---------------------------------------------------------------------------
# separating-chain pattern


def _gamma_direction(g, s, pieces, order, has_embedded):
    """Condition verdicts for one orientation of the separating chain.

    Returns a dict of named booleans, or None if the piece shapes already
    rule this direction out.
    """
    truncated = s.family == "truncated"
    nmid = s.n if truncated else s.genus - 2
    by_name = {c.id: c for c in pieces.components}
    chain = [by_name[cid] for cid in order]

    if truncated and not has_embedded:
        want_len = nmid + 1
        mid_hi = nmid - 1
        tail_shape = (s.genus - s.n, 1)
    elif truncated:
        want_len = nmid + 2
        mid_hi = nmid
        tail_shape = (s.genus - s.n - 1, 1)
    else:
        want_len = nmid + 2
        mid_hi = nmid
        tail_shape = (1, 1)
    if len(chain) != want_len:
        return None

    shapes = chain[0].genus == 1 and chain[0].punctures == 1
    for c in chain[1 : mid_hi + 1]:
        shapes = shapes and c.genus == 1 and c.punctures == 2
    shapes = shapes and (chain[-1].genus, chain[-1].punctures) == tail_shape
    if not shapes:
        return None

    out = {"D2_piece_shapes": True}
    data = analyze_splitting(s)
    a = data["a"]

    # the separating curve entering piece i from the start side
    enter = {}
    for c in pieces.curves:
        pa, pb = order.index(c.left), order.index(c.right)
        lo, hi = min(pa, pb), max(pa, pb)
        if hi != lo + 1 or hi in enter:
            return None
        enter[hi] = c.id

    members = {c.id: set(region_members(c.id)) for c in pieces.components}
    pair_ok = True
    l2_ok = True
    l3_ok = True
    for i in range(1, nmid + 1):
        mem = members[order[i]]
        inside = [c for c in g.curves if c.left in mem and c.right in mem]
        bs = sorted(
            (c for c in inside if c.role not in ("delta", "epsilon")), key=lambda c: c.id
        )
        if len(bs) != 2:
            pair_ok = False
            continue
        b1, b2 = bs
        if b1.cls != b2.cls or (b1.left, b1.right) != (b2.right, b2.left):
            pair_ok = False
            continue
        if not any(b1.cls):
            pair_ok = False
            continue
        if not (
            subgroup_contains(s.summands[i], b1.cls) and intersection(a[i], b1.cls) == 1
        ):
            l2_ok = False
        # the sub-piece holding the entering separating curve sits right of
        # the curve tagged beta; untagged pairs fix the convention instead
        entering = g.curve(enter[i])
        near = {entering.left, entering.right} & mem
        tagged = [b for b in bs if b.role == "beta"]
        if tagged and near and tagged[0].right not in near:
            l3_ok = False
    out["L_pairs_opposite"] = pair_ok
    out["L2_classes_pair_to_one"] = l2_ok
    out["L3_separating_side"] = l3_ok
    return out


def _check_gamma(g, s):
    report = ConditionReport("separating-chain pattern")
    base = validate_graph(g)
    report.add(
        "graph_valid", base.ok, "" if base.ok else "; ".join(i.name for i in base.failures())
    )
    if not base.ok:
        return report

    deltas = [c for c in g.curves if c.role == "delta"]
    eps = [c for c in g.curves if c.role == "epsilon"]
    truncated = s.family == "truncated"
    want_d = s.n if truncated else s.genus - 1

    report.add(
        "D1_separating",
        len(deltas) == want_d and all(not any(c.cls) for c in deltas),
        "want %d curves of class zero" % want_d,
    )
    if eps:
        report.add(
            "embedded_boundary",
            truncated and len(eps) == 1 and not any(eps[0].cls),
            "one null class boundary on the truncated family only",
        )
    if not report.ok:
        return report

    cut_ids = [c.id for c in deltas] + [c.id for c in eps]
    pieces = submulticurve(g, cut_ids)
    order = _chain_order(pieces)
    report.add("D3_chain", order is not None, "separating curves must cut a chain")
    if order is None:
        return report

    res1 = _gamma_direction(g, s, pieces, order, bool(eps))
    res2 = _gamma_direction(g, s, pieces, list(reversed(order)), bool(eps))
    res = None
    for cand in (res1, res2):
        if cand is not None and all(cand.values()):
            res = cand
            break
    if res is None:
        res = res1 if res1 is not None else res2
    if res is None:
        report.add("D2_piece_shapes", False, "chain pieces do not match the family shapes")
        return report
    for name in sorted(res):
        report.add(name, res[name])
    return report


def check_conditions(g, kind, s):
    """Per-condition verdicts for a family pattern against a splitting."""
    if kind == "N":
        return _check_n(g, s)
    if kind == "Gamma":
        return _check_gamma(g, s)
    raise MulticurveError("unknown family kind %r" % kind)


def perfectness_scan(m, kind="N", x=None, size=None, variant=None):
    """Curve selections of m matching the family pattern, canonically sorted.

    A single selection is the perfectness witness shape; two or more
    disqualify m.  x adds the positive-combination requirement; variant
    ("full"/"truncated") restricts the pattern flavor.
    """
    if kind != "N":
        raise MulticurveError("scan supports the chain-of-curves pattern only")
    ids = sorted(m.curve_ids())
    sizes = [size] if size else range(2, len(ids) + 1)
    found = []
    for k in sizes:
        for combo in combinations(ids, k):
            if any(not any(m.curve(cid).cls) for cid in combo):
                continue
            try:
                sub = submulticurve(m, combo)
            except MulticurveError:
                continue
            report, info = _n_pattern(sub, x)
            if info is None or not report.ok:
                continue
            if x is not None and info.get("l") is None:
                continue
            if variant is not None and info["truncated"] != (variant == "truncated"):
                continue
            found.append(tuple(sorted(combo)))
    return sorted(found)

"""Weighted cycles carried by a multicurve and the polytope cell they span.

A point of the cell is an assignment of positive weights to the curves of a
multicurve so that the weighted classes add up to the reference class x.
Vertices are the weightings whose support has linearly independent classes;
the cell is their convex hull.  Everything here is exact: weights are
rationals, vertex data is integral, and face orientations come from signs of
rational determinants.
"""

from fractions import Fraction
from itertools import combinations
from collections import namedtuple

from .homalg.intmat import IntMatrix, rank, solve_rational
from .homalg.complexes import ChainComplex
from .multicurve import (
    MulticurveError,
    validate_graph,
    multicurve_invariants,
    check_conditions,
    _n_pattern,
)
from .reports import MembershipReport
from .symplectic import analyze_splitting, intersection, omega_row, transvection
from .homalg.intmat import solve_integer


class CycleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# weighted cycles


class OneCycle:
    """A finite nonnegative rational weighting of curves with prescribed sum.

    coefficients maps curve id to a positive Fraction; curves with weight
    zero are dropped.  basic means the support classes are linearly
    independent, which forces the weights to be the unique solution of the
    defining linear system.
    """

    __slots__ = ("coefficients", "support", "basic")

    def __init__(self, coefficients, basic=False):
        coeffs = {}
        for cid, v in coefficients.items():
            f = Fraction(v)
            if f < 0:
                raise CycleError("negative weight on %r" % (cid,))
            if f:
                coeffs[cid] = f
        self.coefficients = coeffs
        self.support = tuple(sorted(coeffs))
        self.basic = bool(basic)

    @property
    def integral(self):
        return all(f.denominator == 1 for f in self.coefficients.values())

    def coeff(self, cid):
        return self.coefficients.get(cid, Fraction(0))

    def vector(self, ids):
        return tuple(self.coefficients.get(cid, Fraction(0)) for cid in ids)

    def key(self):
        return (self.support, tuple(self.coefficients[c] for c in self.support))

    def class_sum(self, graph):
        by_id = {c.id: c.cls for c in graph.curves}
        dim = 2 * graph.genus
        total = [Fraction(0)] * dim
        for cid, f in self.coefficients.items():
            cls = by_id[cid]
            for i in range(dim):
                total[i] += f * cls[i]
        return tuple(total)

    def to_json(self):
        coeffs = {}
        for cid in self.support:
            f = self.coefficients[cid]
            coeffs[cid] = f.numerator if f.denominator == 1 else [f.numerator, f.denominator]
        return {
            "coefficients": coeffs,
            "support": list(self.support),
            "integral": self.integral,
            "basic": self.basic,
        }

    def __eq__(self, other):
        return isinstance(other, OneCycle) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        parts = []
        for cid in self.support:
            f = self.coefficients[cid]
            parts.append(str(cid) if f == 1 else "%s*%s" % (f, cid))
        return "OneCycle(%s)" % " + ".join(parts)


def enumerate_basic_cycles(m, x):
    """All positive weightings of independent-class subsets summing to x.

    The result is canonically sorted (by support, then weights) and free of
    duplicates: a solution with a zero weight already appears under its
    smaller support.  Weights of such cycles must come out integral; a
    fractional solution means the class data cannot come from disjoint
    curves, and is rejected.
    """
    base = validate_graph(m)
    if not base.ok:
        raise MulticurveError(
            "invalid multicurve: " + "; ".join(i.name for i in base.failures())
        )
    if len(x) != 2 * m.genus:
        raise CycleError("class vector has length %d, want %d" % (len(x), 2 * m.genus))

    classes = {c.id: c.cls for c in m.curves}
    pool = sorted(cid for cid, cls in classes.items() if any(cls))
    if not pool:
        return []
    d_cap = rank(IntMatrix.from_rows([list(classes[c]) for c in pool]))

    out = []
    for size in range(1, min(d_cap, len(pool)) + 1):
        for combo in combinations(pool, size):
            a = IntMatrix.from_rows(
                [[classes[c][i] for c in combo] for i in range(2 * m.genus)],
                cols=size,
            )
            if rank(a) < size:
                continue
            sol = solve_rational(a, list(x))
            if sol is None or any(v <= 0 for v in sol):
                continue
            if any(v.denominator != 1 for v in sol):
                raise CycleError(
                    "fractional basic weighting on support %r; "
                    "classes are not jointly realizable" % (combo,)
                )
            out.append(OneCycle(dict(zip(combo, sol)), basic=True))
    out.sort(key=OneCycle.key)
    return out


# ---------------------------------------------------------------------------
# admissibility of a multicurve (support cover + positive independence)


def _nonneg_solution(cols, rhs):
    """One c >= 0 with sum_j c_j * cols[j] = rhs, or None.  Exact phase-1
    simplex with Bland's rule, so termination is guaranteed."""
    m = len(rhs)
    n = len(cols)
    tab = []
    b = []
    for i in range(m):
        row = [Fraction(cols[j][i]) for j in range(n)]
        bi = Fraction(rhs[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        # artificial variable slots, one per row
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        tab.append(row)
        b.append(bi)
    basis = [n + i for i in range(m)]
    # phase-1 objective: minimize the sum of artificials
    z = [sum(tab[i][j] for i in range(m)) for j in range(n + m)]
    for j in range(n, n + m):
        z[j] -= 1

    while True:
        enter = next((j for j in range(n + m) if z[j] > 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = b[i] / tab[i][enter]
                if best is None or ratio < best[0] or (
                    ratio == best[0] and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            raise CycleError("unbounded phase-1 tableau")
        r = best[1]
        pv = tab[r][enter]
        tab[r] = [v / pv for v in tab[r]]
        b[r] /= pv
        for i in range(m):
            if i != r and tab[i][enter]:
                c = tab[i][enter]
                tab[i] = [v - c * w for v, w in zip(tab[i], tab[r])]
                b[i] -= c * b[r]
        c = z[enter]
        z = [v - c * w for v, w in zip(z, tab[r])]
        basis[r] = enter

    if any(basis[i] >= n and b[i] for i in range(m)):
        return None
    c = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            c[basis[i]] = b[i]
    return tuple(c)


def check_M_membership(m, x):
    """Decide whether the multicurve carries a genuine cell for x.

    Condition (1): every curve appears in the support of some basic cycle.
    Condition (2): no nontrivial nonnegative combination of the curve
    classes vanishes; tested exactly by normalizing the combination to sum
    one and running rational phase-1 simplex.  A failing report carries an
    integer witness combination.
    """
    cycles = enumerate_basic_cycles(m, x)
    report = MembershipReport("membership")
    report.data["basic_cycle_count"] = len(cycles)

    covered = set()
    for cyc in cycles:
        covered.update(cyc.support)
    uncovered = sorted(c.id for c in m.curves if c.id not in covered)
    report.add(
        "condition_1_support_cover",
        not uncovered,
        "" if not uncovered else "curves in no basic cycle: %s" % ", ".join(uncovered),
    )
    report.data["uncovered"] = uncovered

    ids = sorted(c.id for c in m.curves)
    classes = {c.id: c.cls for c in m.curves}
    witness = None
    if ids:
        cols = [list(classes[cid]) + [1] for cid in ids]
        rhs = [0] * (2 * m.genus) + [1]
        sol = _nonneg_solution(cols, rhs)
        if sol is not None:
            scale = 1
            for f in sol:
                scale = scale * f.denominator // _gcd(scale, f.denominator)
            ints = [int(f * scale) for f in sol]
            g0 = 0
            for v in ints:
                g0 = _gcd(g0, v)
            witness = {cid: v // g0 for cid, v in zip(ids, ints) if v}
    report.add(
        "condition_2_positive_independence",
        witness is None,
        "" if witness is None else "vanishing combination %r" % (witness,),
    )
    report.data["witness"] = witness
    return report


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# the cell polytope


Face = namedtuple("Face", ["curves", "dim", "vertex_indices"])


class CellPolytope:
    """One closed cell: vertex cycles, graded faces, oriented boundaries."""

    __slots__ = ("ambient", "vertices", "dimension", "faces", "boundaries")

    def __init__(self, ambient, vertices, dimension, faces, boundaries):
        self.ambient = ambient
        self.vertices = vertices
        self.dimension = dimension
        self.faces = faces
        self.boundaries = boundaries

    def faces_of_dim(self, d):
        return [f for f in self.faces if f.dim == d]

    def chain_complex(self):
        ranks = {}
        for f in self.faces:
            ranks[f.dim] = ranks.get(f.dim, 0) + 1
        return ChainComplex(ranks, dict(self.boundaries))

    def to_json(self):
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "dimension": self.dimension,
            "faces": [
                {
                    "curves": list(f.curves),
                    "dimension": f.dim,
                    "vertices": list(f.vertex_indices),
                }
                for f in self.faces
            ],
        }

    def __repr__(self):
        return "CellPolytope(dim=%d, vertices=%d, faces=%d)" % (
            self.dimension,
            len(self.vertices),
            len(self.faces),
        )


def affine_rank(cycles, ids=None):
    """Dimension of the affine hull of the given cycles (empty set: -1)."""
    if not cycles:
        return -1
    if ids is None:
        ids = sorted(set().union(*(c.support for c in cycles)))
    vecs = [c.vector(ids) for c in cycles]
    diffs = [
        [a - b for a, b in zip(v, vecs[0])] for v in vecs[1:]
    ]
    return len(_independent_subset(diffs))


def _independent_subset(vectors):
    """Indices of a maximal linearly independent prefix-greedy subset."""
    ech = []
    picked = []
    for idx, vec in enumerate(vectors):
        row = [Fraction(v) for v in vec]
        for pivot_j, prow in ech:
            if row[pivot_j]:
                c = row[pivot_j]
                row = [a - c * b for a, b in zip(row, prow)]
        pivot = next((j for j, v in enumerate(row) if v), None)
        if pivot is None:
            continue
        pv = row[pivot]
        row = [v / pv for v in row]
        ech.append((pivot, row))
        picked.append(idx)
    return picked


def _det_sign(columns):
    """Sign of the determinant of a square matrix given by columns."""
    n = len(columns)
    m = [[Fraction(columns[j][i]) for j in range(n)] for i in range(n)]
    sign = 1
    for j in range(n):
        piv = next((i for i in range(j, n) if m[i][j]), None)
        if piv is None:
            return 0
        if piv != j:
            m[j], m[piv] = m[piv], m[j]
            sign = -sign
        if m[j][j] < 0:
            sign = -sign
        pv = m[j][j]
        for i in range(j + 1, n):
            if m[i][j]:
                c = m[i][j] / pv
                m[i] = [a - c * b for a, b in zip(m[i], m[j])]
    return sign


def _face_frame(vert_vecs):
    """Reference vertex and an ordered basis of the face's direction space."""
    vecs = sorted(vert_vecs)
    v0 = vecs[0]
    diffs = [tuple(a - b for a, b in zip(v, v0)) for v in vecs[1:]]
    picked = _independent_subset(diffs)
    return v0, [diffs[i] for i in picked]


def _centroid_direction(sub_vecs, all_vecs):
    """Integer vector pointing from the face centroid toward the subface."""
    ns, na = len(sub_vecs), len(all_vecs)
    ssum = [sum(col) for col in zip(*sub_vecs)]
    asum = [sum(col) for col in zip(*all_vecs)]
    return tuple(na * s - ns * a for s, a in zip(ssum, asum))


def _facet_sign(face_vecs, facet_vecs):
    """Incidence sign of an oriented facet inside an oriented face.

    Both faces are oriented by their canonical frames; the sign compares
    (outward direction, facet frame) against the face frame.
    """
    _, face_basis = _face_frame(face_vecs)
    _, facet_basis = _face_frame(facet_vecs)
    out = _centroid_direction(facet_vecs, face_vecs)
    d = len(face_basis)
    amb = len(face_vecs[0])
    a = IntMatrix.from_rows(
        [[face_basis[j][i] for j in range(d)] for i in range(amb)], cols=d
    )
    cols = []
    for w in [out] + facet_basis:
        xi = solve_rational(a, list(w))
        if xi is None:
            raise CycleError("facet direction escapes the face hull")
        cols.append(xi)
    s = _det_sign(cols)
    if s == 0:
        raise CycleError("degenerate facet frame")
    return s


def build_cell(m, x):
    """Construct the closed cell spanned by the basic cycles on m.

    Requires admissibility: without it the dimension identity
    |M| - D(M) = c(M) - 1 can fail and the vertex hull is not a cell of the
    complex.  The face lattice is indexed by admissible submulticurves; the
    resulting chain complex is verified to square to zero and to have the
    homology of a point.
    """
    mem = check_M_membership(m, x)
    if not mem.ok:
        raise CycleError(
            "multicurve fails membership: "
            + "; ".join(i.name for i in mem.failures())
        )
    verts = enumerate_basic_cycles(m, x)
    if not verts:
        raise CycleError("no basic cycles: empty cell")
    ids = sorted(c.id for c in m.curves)
    vecs = [v.vector(ids) for v in verts]

    inv = multicurve_invariants(m)
    dim = affine_rank(verts, ids)
    if dim != inv.size - inv.class_rank or dim != inv.complement_count - 1:
        raise CycleError(
            "dimension identity fails: affine rank %d, |M|-D = %d, c-1 = %d"
            % (dim, inv.size - inv.class_rank, inv.complement_count - 1)
        )

    support_of = {i: set(v.support) for i, v in enumerate(verts)}
    faces = []
    for size in range(1, len(ids) + 1):
        for combo in combinations(ids, size):
            sub = set(combo)
            member = tuple(
                i for i in range(len(verts)) if support_of[i] <= sub
            )
            if not member:
                continue
            if set().union(*(support_of[i] for i in member)) != sub:
                continue
            fdim = affine_rank([verts[i] for i in member], ids)
            faces.append(Face(combo, fdim, member))
    faces.sort(key=lambda f: (f.dim, f.curves))

    per_dim = {}
    for f in faces:
        per_dim.setdefault(f.dim, []).append(f)
    boundaries = {}
    for d in sorted(per_dim):
        if d == 0 or d - 1 not in per_dim:
            continue
        lower = per_dim[d - 1]
        upper = per_dim[d]
        pos = {f.curves: i for i, f in enumerate(lower)}
        entries = {}
        for j, f in enumerate(upper):
            fvecs = [vecs[i] for i in f.vertex_indices]
            for g in lower:
                if not set(g.curves) <= set(f.curves):
                    continue
                gvecs = [vecs[i] for i in g.vertex_indices]
                entries[pos[g.curves], j] = _facet_sign(fvecs, gvecs)
        boundaries[d] = IntMatrix(len(lower), len(upper), entries)

    ranks = {d: len(per_dim[d]) for d in per_dim}
    cx = ChainComplex(ranks, boundaries)
    cx.validate()
    hom = cx.homology_all()
    for d, h in hom.items():
        want_free = 1 if d == 0 else 0
        if h.free_rank != want_free or h.torsion:
            raise CycleError("closed cell is not contractible at degree %d: %r" % (d, h))

    return CellPolytope(tuple(ids), verts, dim, faces, boundaries)


# ---------------------------------------------------------------------------
# cube chart of a chain-configuration cell


class CubeChart:
    """Identification of a chain-configuration cell with a unit cube.

    Axis i swaps the i-th parallel pair; the point with cube coordinates t
    keeps the forward curve where t_i = 0 and the backward curve where
    t_i = 1.  Facets are recorded by the ids they keep.
    """

    __slots__ = ("curve_ids", "axes", "loop_ids", "facets", "vertex_map",
                 "twists_fix_classes")

    def __init__(self, curve_ids, axes, loop_ids, facets, vertex_map, twists_ok):
        self.curve_ids = curve_ids
        self.axes = axes
        self.loop_ids = loop_ids
        self.facets = facets
        self.vertex_map = vertex_map
        self.twists_fix_classes = twists_ok

    @property
    def dimension(self):
        return len(self.axes)

    def facet(self, i, t):
        return self.facets[i, t]

    def vertex_support(self, t):
        return self.vertex_map[tuple(t)]

    def to_json(self):
        return {
            "curves": list(self.curve_ids),
            "axes": [list(p) for p in self.axes],
            "loops": list(self.loop_ids),
            "facets": {
                "t%d=%d" % (i, t): list(kept) for (i, t), kept in sorted(self.facets.items())
            },
            "vertices": {
                "".join(map(str, t)): list(kept)
                for t, kept in sorted(self.vertex_map.items())
            },
            "twists_fix_classes": self.twists_fix_classes,
        }

    def __repr__(self):
        return "CubeChart(dim=%d)" % self.dimension


def _dual_class(a_cls):
    w = solve_integer(IntMatrix.from_rows([list(omega_row(a_cls))]), [1])
    if w is None:
        raise CycleError("class %r is not primitive" % (a_cls,))
    return w


def cube_structure(n_graph, s):
    """Cube chart of the cell carried by a standard chain configuration.

    Facet t_i = 0 keeps the forward curve of pair i (drops the backward
    one); t_i = 1 drops the forward one.  For each axis the symbolic twist
    pair along the dual class is checked to act trivially on every curve
    class, so the facet exchange preserves all classes.
    """
    verdict = check_conditions(n_graph, "N", s)
    if not verdict.ok:
        raise CycleError(
            "not a standard chain configuration: "
            + "; ".join(i.name for i in verdict.failures())
        )
    _, info = _n_pattern(n_graph, s.x)
    data = analyze_splitting(s)
    if list(info["classes"]) == list(reversed(data["a"])) and list(
        info["classes"]
    ) != list(data["a"]):
        info["pairs"] = [(b, f) for f, b in reversed(info["pairs"])]
        info["loops"] = list(reversed(info["loops"]))

    all_ids = tuple(sorted(c.id for c in n_graph.curves))
    axes = tuple((fwd.id, bwd.id) for fwd, bwd in info["pairs"])
    loop_ids = tuple(c.id for c in info["loops"])
    d = len(axes)

    facets = {}
    for i, (fwd, bwd) in enumerate(axes, start=1):
        facets[i, 0] = tuple(c for c in all_ids if c != bwd)
        facets[i, 1] = tuple(c for c in all_ids if c != fwd)

    vertex_map = {}
    for bits in range(1 << d):
        t = tuple((bits >> k) & 1 for k in range(d))
        drop = {axes[k][1 - t[k]] for k in range(d)}
        vertex_map[t] = tuple(c for c in all_ids if c not in drop)

    # the twist pair along each dual class must fix every curve class
    classes = [c.cls for c in n_graph.curves]
    twists_ok = True
    for k, (fwd, bwd) in enumerate(axes):
        pair_cls = n_graph.curve(fwd).cls
        b_cls = _dual_class(pair_cls)
        if intersection(pair_cls, b_cls) != 1:
            raise CycleError("dual class pairing failed on axis %d" % (k + 1,))
        push = transvection(b_cls, 1)
        pull = transvection(b_cls, -1)
        for cls in classes:
            if pull(push(cls)) != cls:
                twists_ok = False
    if not twists_ok:
        raise CycleError("twist pair moved a curve class")

    return CubeChart(all_ids, axes, loop_ids, facets, vertex_map, True)

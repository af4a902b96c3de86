"""Symbolic layer for finite independence certificates.

The classes tracked here are words in commuting twist generators: a block
of homologous-pair twist differences, a block of separating twists, and
for the truncated family one opaque payload class supported on an embedded
subsurface.  Symbols evaluate against chain-configuration orbits to
coordinates in a free basis; a certificate packages the resulting matrix
together with the cited axioms and the stability certificate for the
corner entry of the reduced grid.

Signs come from two mechanical sources, parity of generator permutations
and determinants of cube reindexing maps.  Both are computed and compared,
never asserted by fiat.
"""

from collections import Counter, namedtuple

from .reports import ValidationReport
from .symplectic import (
    Splitting,
    SymplecticError,
    analyze_splitting,
    intersection,
    orbit_key,
    reverse,
    splitting_to_json,
    transvection,
)
from .multicurve import build_standard, validate_graph
from .cycle_complex import build_cell, cube_structure
from .cartan_leray import VanishingRegion, certify_stable
from .homalg.intmat import IntMatrix, determinant, rank as matrix_rank


class TorelliClassError(ValueError):
    """Malformed symbol or evaluation input."""


class CertificateError(TorelliClassError):
    """Certificate request that cannot be formed at all."""


def mu_permutation_sign(perm):
    """Sign contributed by reordering degree-one generators.

    The top class of a free abelian group on k ordered generators is
    normalized as their ordered exterior product, so a permutation of the
    generators multiplies it by the permutation's parity.
    """
    perm = list(perm)
    if sorted(perm) != list(range(len(perm))):
        raise TorelliClassError("not a permutation of 0..k-1: %r" % (perm,))
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _reversal_sign(k):
    return mu_permutation_sign(list(reversed(range(k))))


class PayloadToken:
    """Opaque top-degree class on an embedded one-boundary subsurface.

    Only the index and the subsurface genus are known; the degree is the
    top degree 3*gprime - 2.  Distinct indices are treated as independent
    by axiom, and every certificate that uses them says so.
    """

    __slots__ = ("index", "gprime")

    def __init__(self, index, gprime):
        if gprime < 2:
            raise TorelliClassError("payload subsurface genus must be >= 2")
        self.index = index
        self.gprime = int(gprime)

    @property
    def degree(self):
        return 3 * self.gprime - 2

    def __eq__(self, other):
        return (
            isinstance(other, PayloadToken)
            and self.index == other.index
            and self.gprime == other.gprime
        )

    def __hash__(self):
        return hash((self.index, self.gprime))

    def __repr__(self):
        return "PayloadToken(%r, gprime=%d)" % (self.index, self.gprime)

    def to_json(self):
        return {"index": self.index, "gprime": self.gprime, "degree": self.degree}


class OrbitKey:
    """Canonical label of a splitting's class under shifts.

    Two splittings get equal keys exactly when one is a shift of the other,
    or a reversed shift in the full family.  The key is therefore also the
    label of the unique compatible chain-configuration orbit.
    """

    __slots__ = ("family", "genus", "n", "key")

    def __init__(self, family, genus, n, key):
        self.family = family
        self.genus = genus
        self.n = n
        self.key = key

    @classmethod
    def from_splitting(cls, s):
        return cls(s.family, s.genus, s.n, orbit_key(s))

    def __eq__(self, other):
        return (
            isinstance(other, OrbitKey)
            and self.family == other.family
            and self.genus == other.genus
            and self.n == other.n
            and self.key == other.key
        )

    def __hash__(self):
        return hash((self.family, self.genus, self.n, self.key))

    def __repr__(self):
        tag = self.family if self.family == "full" else "truncated n=%d" % self.n
        return "OrbitKey(g=%d, %s, %r)" % (self.genus, tag, self.key)

    def to_json(self):
        def listify(piece):
            if isinstance(piece, tuple):
                return [listify(p) for p in piece]
            return piece

        return {
            "family": self.family,
            "genus": self.genus,
            "n": self.n,
            "key": listify(self.key),
        }


def _as_orbit_key(orbit):
    if isinstance(orbit, OrbitKey):
        return orbit
    if isinstance(orbit, Splitting):
        return OrbitKey.from_splitting(orbit)
    raise TorelliClassError("orbit must be an OrbitKey or a Splitting")


class AbelianCycleSymbol:
    """Ordered word of commuting twist generators with optional payload.

    twists is a tuple of ("bp", beta_id, beta_prime_id) and
    ("delta", delta_id) entries in the construction order: homologous-pair
    differences first, separating twists second.  Equality folds the
    reversal identification in the full family; the fold carries total
    sign +1, which reversal_identity recomputes from parities each time.
    """

    __slots__ = ("family", "splitting", "b", "graph", "twists", "payload")

    def __init__(self, family, splitting, b, graph, twists, payload=None):
        self.family = family
        self.splitting = splitting
        self.b = tuple(tuple(v) for v in b)
        self.graph = graph
        self.twists = tuple(twists)
        self.payload = payload

    @property
    def genus(self):
        return self.splitting.genus

    @property
    def n(self):
        return self.splitting.n

    @property
    def degree(self):
        d = len(self.twists)
        if self.payload is not None:
            d += self.payload.degree
        return d

    def orbit(self):
        return OrbitKey.from_splitting(self.splitting)

    def bp_count(self):
        return sum(1 for t in self.twists if t[0] == "bp")

    def basis_index(self):
        """Identity of the target basis element: splitting mod reversal.

        Shifted splittings give distinct indices (distinct basis elements
        inside one orbit's corner group); the dual data b does not enter,
        since the basis element depends on the splitting alone.
        """
        if self.family != "full":
            return self.splitting.summands
        return min(self.splitting.summands, reverse(self.splitting).summands)

    def _canonical(self):
        me = (self.splitting.summands, self.b)
        if self.family != "full":
            return me
        rev = (reverse(self.splitting).summands, tuple(reversed(self.b)))
        return min(me, rev)

    def __eq__(self, other):
        return (
            isinstance(other, AbelianCycleSymbol)
            and self.family == other.family
            and self.genus == other.genus
            and self.n == other.n
            and self.splitting.x == other.splitting.x
            and self._canonical() == other._canonical()
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.family, self.genus, self.n, self._canonical(), self.payload))

    def __repr__(self):
        return "AbelianCycleSymbol(g=%d, %s, degree=%d)" % (
            self.genus,
            self.family,
            self.degree,
        )

    def to_json(self):
        return {
            "family": self.family,
            "splitting": splitting_to_json(self.splitting),
            "b": [list(v) for v in self.b],
            "twists": [list(t) for t in self.twists],
            "payload": None if self.payload is None else self.payload.to_json(),
            "degree": self.degree,
        }


def make_symbol(family, s, b=None, payload=None):
    """Build the abelian-cycle symbol attached to a splitting.

    For the full family the word is (g-2) pair differences followed by
    (g-1) separating twists, total degree 2g-3.  For the truncated family
    it is n of each plus the payload, total degree 3g-5-n.  The underlying
    configuration graph is built and validated, which witnesses that all
    twist supports are pairwise disjoint, and each pair difference is
    checked to act trivially on homology by cancelling transvections.
    """
    if not isinstance(s, Splitting):
        raise TorelliClassError("expected a Splitting")
    if family not in ("full", "truncated"):
        raise TorelliClassError("family must be 'full' or 'truncated'")
    if family != s.family:
        raise TorelliClassError(
            "family %r does not match the splitting's %r" % (family, s.family)
        )
    data = analyze_splitting(s)
    g = s.genus
    if family == "full":
        if payload is not None:
            raise TorelliClassError("full family carries no payload")
        count = g - 2
    else:
        n = s.n
        if not 1 <= n <= g - 3:
            raise TorelliClassError("truncated symbols need 1 <= n <= g-3")
        if payload is None:
            raise TorelliClassError("truncated family needs a payload index")
        count = n

    if b is None:
        b = [data["b"][i] for i in range(1, count + 1)]
    if len(b) != count:
        raise TorelliClassError("need %d dual classes" % count)
    b = [tuple(int(c) for c in v) for v in b]
    for i, v in enumerate(b, start=1):
        if intersection(data["a"][i], v) != 1:
            raise TorelliClassError("dual class %d does not pair to 1" % i)

    # the graph builder re-checks membership of each b_i in its summand
    graph = build_standard("Gamma", s, b=b)
    report = validate_graph(graph)
    if not report.ok:
        raise TorelliClassError(
            "configuration graph invalid: "
            + "; ".join(i.name for i in report.failures())
        )

    for i, v in enumerate(b, start=1):
        push = transvection(v, 1)
        pull = transvection(v, -1)
        probe = [data["a"][j] for j in range(len(data["a"]))] + list(b)
        if any(pull(push(c)) != tuple(c) for c in probe):
            raise TorelliClassError("pair difference %d moved a class" % i)

    twists = [("bp", "beta%d" % i, "beta%d_p" % i) for i in range(1, count + 1)]
    deltas = g - 1 if family == "full" else s.n
    twists += [("delta", "delta%d" % i) for i in range(1, deltas + 1)]

    token = None
    if family == "truncated":
        if isinstance(payload, PayloadToken):
            if payload.gprime != g - s.n - 1:
                raise TorelliClassError("payload genus must be g-n-1")
            token = payload
        else:
            token = PayloadToken(payload, g - s.n - 1)

    return AbelianCycleSymbol(family, s, b, graph, twists, token)


def reversal_identity(symbol):
    """Recompute the sign of the order-reversal identification.

    Reversing a full-family splitting reverses both generator blocks and
    swaps each homologous pair, so the total sign is the product of two
    reversal parities and one inversion per pair.  The report records each
    factor; the total must be +1 for the identification to be an equality.
    """
    rep = ValidationReport()
    if symbol.family != "full":
        rep.add("full_family_only", False, "truncated words have no reversal")
        return rep
    g = symbol.genus
    pair_block = _reversal_sign(g - 2)
    delta_block = _reversal_sign(g - 1)
    pair_inversions = (-1) ** (g - 2)
    total = pair_block * delta_block * pair_inversions
    rep.add("total_sign_is_plus_one", total == 1,
            "(%d) * (%d) * (%d) = %d" % (pair_block, delta_block, pair_inversions, total))
    rep.data["pair_block_sign"] = pair_block
    rep.data["delta_block_sign"] = delta_block
    rep.data["pair_inversion_sign"] = pair_inversions
    rep.data["total"] = total
    return rep


class ZeroClass:
    """Evaluation result for a mismatched orbit."""

    __slots__ = ("checklist",)

    def __init__(self, checklist=None):
        self.checklist = checklist

    def is_zero(self):
        return True

    def __repr__(self):
        return "Zero"

    def to_json(self):
        return {"zero": True}


class ThetaSymbol:
    """Basis coordinate at the corner entry of the reduced grid.

    Carries the orbit key of the source splitting, the basis index of the
    particular element inside that orbit's corner group (shifts give
    distinct indices, reversal folds), the payload tag for the truncated
    family, a sign relative to the recorded cube orientation, and the
    checklist that re-verified the evaluation hypotheses.
    """

    __slots__ = ("orbit", "basis_index", "payload", "sign", "orientation", "checklist")

    def __init__(self, orbit, basis_index, payload, sign, orientation, checklist):
        self.orbit = orbit
        self.basis_index = basis_index
        self.payload = payload
        self.sign = sign
        self.orientation = orientation
        self.checklist = checklist

    def is_zero(self):
        return False

    def coordinate(self):
        """Column label in the free basis: basis index plus payload identity."""
        if self.payload is None:
            return (self.basis_index,)
        return (self.basis_index, self.payload[1])

    def __repr__(self):
        return "ThetaSymbol(%r, sign=%+d)" % (self.orbit, self.sign)

    def to_json(self):
        return {
            "orbit": self.orbit.to_json(),
            "basis_index": [list(map(list, rows)) for rows in self.basis_index],
            "payload": None
            if self.payload is None
            else {"placement": list(self.payload[0]), "token": self.payload[1].to_json()},
            "sign": self.sign,
            "orientation": dict(self.orientation),
            "checklist": self.checklist.to_json(),
        }


def _evaluation_checklist(symbol):
    """Re-verify the cube-chart hypotheses on the chain configuration.

    The symbol's splitting determines a chain configuration whose class-x
    cell must be a cube: one axis per homologous pair, facets exchanged by
    the corresponding pair difference, separating twists supported in the
    regions between consecutive pairs, and positive weights on x.  Each
    item is checked on the graphs, not assumed.
    """
    rep = ValidationReport()
    s = symbol.splitting
    data = analyze_splitting(s)
    rep.add("positive_weights", all(l > 0 for l in data["l"]),
            "weights %s" % (data["l"],))

    n_graph = build_standard("N", s)
    try:
        chart = cube_structure(n_graph, s)
    except Exception as exc:  # noqa: BLE001 - recorded, not raised
        rep.add("cube_chart", False, str(exc))
        return rep
    dim = s.genus - 2 if s.family == "full" else s.n
    rep.add("cube_chart", chart.dimension == dim,
            "chart dimension %d, expected %d" % (chart.dimension, dim))

    cell = build_cell(n_graph, s.x)
    verts = [f for f in cell.faces if f.dim == 0]
    rep.add("cube_vertex_count", len(verts) == 2 ** dim,
            "%d vertices" % len(verts))

    face_sets = {frozenset(f.curves) for f in cell.faces}
    ok_facets = True
    for i, (fwd, bwd) in enumerate(chart.axes, start=1):
        lo = frozenset(chart.facet(i, 0))
        hi = frozenset(chart.facet(i, 1))
        if lo not in face_sets or hi not in face_sets:
            ok_facets = False
        swapped = frozenset(bwd if c == fwd else (fwd if c == bwd else c) for c in lo)
        if swapped != hi:
            ok_facets = False
    rep.add("facet_pairs_exchanged", ok_facets,
            "axis swap maps each facet to its partner")

    ok_pairing = all(
        intersection(data["a"][i], v) == 1 for i, v in enumerate(symbol.b, start=1)
    )
    rep.add("pair_duals_unimodular", ok_pairing, "a_i . b_i = 1 for the chosen duals")

    rep.add("twists_fix_classes", chart.twists_fix_classes,
            "pair differences act trivially on every curve class")

    graph_rep = validate_graph(symbol.graph)
    rep.add("twist_supports_disjoint", graph_rep.ok,
            "configuration graph validates")

    # each separating twist lives in the region between consecutive pairs
    deltas = [t[1] for t in symbol.twists if t[0] == "delta"]
    comp_ids = set(symbol.graph.component_ids())
    ok_regions = True
    for d in deltas:
        cur = symbol.graph.curve(d)
        if cur.left not in comp_ids or cur.right not in comp_ids:
            ok_regions = False
    rep.add("separating_twists_placed", ok_regions,
            "%d separating twists with both sides present" % len(deltas))

    if symbol.family == "truncated":
        touched = set()
        for t in symbol.twists:
            for cid in t[1:]:
                cur = symbol.graph.curve(cid)
                touched.add(cur.left)
                touched.add(cur.right)
        rep.add("payload_region_disjoint", "W" not in touched,
                "no twist support touches the embedded subsurface")
    return rep


def phi_evaluate(orbit, symbol):
    """Evaluate a symbol against an orbit: its theta coordinate or zero.

    The symbol's splitting determines the unique compatible orbit; the
    evaluation is that orbit's basis element exactly when the requested
    key matches, and zero otherwise.  The hypothesis checklist is attached
    either way, and a failing checklist raises instead of returning a
    wrong coordinate.
    """
    if not isinstance(symbol, AbelianCycleSymbol):
        raise TorelliClassError("expected an AbelianCycleSymbol")
    key = _as_orbit_key(orbit)
    own = symbol.orbit()
    checklist = _evaluation_checklist(symbol)
    if not checklist.ok:
        raise TorelliClassError(
            "evaluation hypotheses failed: "
            + "; ".join(i.name for i in checklist.failures())
        )
    if key != own:
        return ZeroClass(checklist)
    if symbol.family == "full":
        orientation = {
            "kind": "cube",
            "dimension": symbol.genus - 2,
            "convention": "ordered pair axes, forward-to-backward",
            "canonical": False,
        }
        payload = None
    else:
        orientation = {
            "kind": "cube",
            "dimension": symbol.n,
            "convention": "ordered pair axes, forward-to-backward",
            "canonical": True,
        }
        payload = (("W", symbol.genus - symbol.n - 1), symbol.payload)
    return ThetaSymbol(own, symbol.basis_index(), payload, 1, orientation, checklist)


SignLedger = namedtuple(
    "SignLedger",
    ["genus", "class_reversal_sign", "orientation_sign", "product"],
)


def theta_signs(g):
    """Both reversal signs at the corner entry, computed independently.

    Reversing the separating-twist word permutes g-1 degree-one
    generators, giving a parity.  Re-indexing the cube sends t_i to
    1 - t_{rev(i)}, and the determinant of that linear part is computed
    exactly.  The two must agree, so their product is +1 and the corner
    basis element is independent of the chosen representation.
    """
    if g < 3:
        raise TorelliClassError("need genus at least 3")
    class_sign = _reversal_sign(g - 1)
    d = g - 2
    rows = []
    for i in range(d):
        row = [0] * d
        row[d - 1 - i] = -1
        rows.append(row)
    orient_sign = determinant(IntMatrix.from_rows(rows)) if d else 1
    if orient_sign not in (1, -1):
        raise TorelliClassError("reindexing map is not unimodular")
    if class_sign != orient_sign:
        raise TorelliClassError(
            "sign sources disagree: parity %d, determinant %d"
            % (class_sign, orient_sign)
        )
    return SignLedger(g, class_sign, orient_sign, class_sign * orient_sign)


class InvolutionSign(int):
    """Eigenvalue of the class under the order-two homology flip.

    Behaves as the plain sign; carries the generator swap data whose
    normal form realizes it (each swapped pair inverts one generator).
    """

    def __new__(cls, sign, swaps, fixed, payload_fixed):
        self = super().__new__(cls, sign)
        self.swaps = tuple(swaps)
        self.fixed = tuple(fixed)
        self.payload_fixed = payload_fixed
        return self

    def to_json(self):
        return {
            "sign": int(self),
            "swaps": [list(s) for s in self.swaps],
            "fixed": list(self.fixed),
            "payload_fixed": self.payload_fixed,
        }


def involution_sign(family, g, n=None):
    """Sign of the flip that fixes each separating twist and swaps pairs.

    Each swapped pair turns its difference generator into its inverse,
    contributing one factor -1; separating twists and the payload are
    fixed.  The sign is therefore (-1)**(number of pairs): (-1)**(g-2)
    for the full family and (-1)**n for the truncated one.
    """
    if family == "full":
        if g < 3:
            raise TorelliClassError("need genus at least 3")
        count = g - 2
        payload_fixed = None
    elif family == "truncated":
        if n is None or not 1 <= n <= g - 3:
            raise TorelliClassError("truncated family needs 1 <= n <= g-3")
        count = n
        payload_fixed = True
    else:
        raise TorelliClassError("family must be 'full' or 'truncated'")
    swaps = [("beta%d" % i, "beta%d_p" % i) for i in range(1, count + 1)]
    deltas = g - 1 if family == "full" else n
    fixed = ["delta%d" % i for i in range(1, deltas + 1)]
    return InvolutionSign((-1) ** count, swaps, fixed, payload_fixed)


def apply_involution(symbol):
    """Transform a symbol by the flip and normalize, returning the sign.

    The flip swaps the two members of every pair difference.  Normalizing
    back to the construction order inverts each swapped generator, so the
    returned symbol equals the input and the sign is the realized
    eigenvalue.  Applying the flip twice is the identity with sign +1.
    """
    sign = involution_sign(symbol.family, symbol.genus, symbol.n)
    twists = []
    for t in symbol.twists:
        if t[0] == "bp":
            twists.append(("bp", t[2], t[1]))
        else:
            twists.append(t)
    flipped = AbelianCycleSymbol(
        symbol.family, symbol.splitting, symbol.b, symbol.graph,
        twists, symbol.payload,
    )
    return flipped, int(sign)


def _corner_certificate(family, g, n):
    if family == "full":
        region = VanishingRegion.parse("p < %d | p + q > %d" % (g - 2, 2 * g - 3))
        entry = (g - 2, g - 1)
    else:
        region = VanishingRegion.parse("p < %d | p + q > %d" % (n, 3 * g - 5 - n))
        entry = (n, 3 * g - 5 - 2 * n)
    return certify_stable(region, entry)


class CertificateReport:
    """Finite independence certificate with an explicit reduction chain.

    links holds the chain: the symbol list, the per-symbol hypothesis
    checklists, the corner stability certificate, and the coordinate
    matrix.  validity is recomputed from whatever links are present, so
    removing one (ablated) demotes the certificate rather than leaving a
    stale verdict.
    """

    def __init__(self, family, genus, n, symbols, columns, matrix, rank,
                 duplicates, axioms_cited, links):
        self.family = family
        self.genus = genus
        self.n = n
        self.symbols = symbols
        self.columns = columns
        self.matrix = matrix
        self.rank = rank
        self.duplicates = duplicates
        self.axioms_cited = tuple(axioms_cited)
        self.links = dict(links)

    CHAIN = ("symbols", "checklists", "stability", "coordinates")

    def chain_complete(self):
        return all(self.links.get(name) is not None for name in self.CHAIN)

    @property
    def stability_certificate(self):
        return self.links.get("stability")

    @property
    def valid(self):
        if not self.chain_complete():
            return False
        if self.duplicates:
            return False
        if not all(rep.ok for rep in self.links["checklists"]):
            return False
        if not self.links["stability"].valid:
            return False
        if self.rank != len(self.symbols):
            return False
        return self._signed_permutation_pattern()

    def _signed_permutation_pattern(self):
        cols_seen = set()
        for row in self.matrix:
            nz = [(j, v) for j, v in enumerate(row) if v != 0]
            if len(nz) != 1 or nz[0][1] not in (1, -1):
                return False
            if nz[0][0] in cols_seen:
                return False
            cols_seen.add(nz[0][0])
        return True

    def ablated(self, name):
        """Copy with one chain link removed; used to probe completeness."""
        if name not in self.CHAIN:
            raise CertificateError("unknown chain link %r" % name)
        links = dict(self.links)
        links[name] = None
        return CertificateReport(
            self.family, self.genus, self.n, self.symbols, self.columns,
            self.matrix, self.rank, self.duplicates, self.axioms_cited, links,
        )

    def to_json(self):
        stab = self.links.get("stability")
        return {
            "family": self.family,
            "genus": self.genus,
            "n": self.n,
            "symbols": [s.to_json() for s in self.symbols],
            "matrix": [list(row) for row in self.matrix],
            "rank": self.rank,
            "axioms_cited": list(self.axioms_cited),
            "stability_certificate_ref": None if stab is None else stab.to_json(),
            "valid": self.valid,
            "duplicates": [repr(d) for d in self.duplicates],
        }


def independence_certificate(symbols):
    """Certify that the given symbols have independent coordinates.

    Builds the evaluation matrix over the distinct basis columns present
    in the input.  Validity requires a signed permutation pattern with
    full rank, no duplicated columns (the full family admits one
    representative per reversal pair, which share a key), passing
    hypothesis checklists, and a valid corner stability certificate.
    Duplicates degrade the certificate to invalid instead of raising.
    """
    symbols = list(symbols)
    if not symbols:
        raise CertificateError("no symbols given")
    family = symbols[0].family
    g = symbols[0].genus
    n = symbols[0].n
    for sym in symbols:
        if (sym.family, sym.genus, sym.n) != (family, g, n):
            raise CertificateError("symbols mix families or parameters")

    evaluations = []
    checklists = []
    for sym in symbols:
        theta = phi_evaluate(sym.orbit(), sym)
        evaluations.append(theta)
        checklists.append(theta.checklist)

    coords = [theta.coordinate() for theta in evaluations]
    counts = Counter(coords)
    duplicates = [c for c, k in counts.items() if k > 1]
    columns = sorted(set(coords), key=lambda c: repr(c))
    col_index = {c: j for j, c in enumerate(columns)}

    matrix = []
    for theta in evaluations:
        row = [0] * len(columns)
        row[col_index[theta.coordinate()]] = theta.sign
        matrix.append(row)
    rk = matrix_rank(IntMatrix.from_rows(matrix, cols=len(columns)))

    axioms = ["corner basis elements are free over splittings mod reversal"]
    if family == "full":
        axioms.append("one representative per reversal pair")
    else:
        axioms.append("payload classes with distinct indices are independent")
    axioms.append("corner entry is stable from page one")

    stability = _corner_certificate(family, g, n)
    links = {
        "symbols": symbols,
        "checklists": checklists,
        "stability": stability,
        "coordinates": matrix,
    }
    return CertificateReport(
        family, g, n, symbols, columns, matrix, rk, duplicates, axioms, links,
    )


__all__ = [
    "AbelianCycleSymbol",
    "CertificateError",
    "CertificateReport",
    "InvolutionSign",
    "OrbitKey",
    "PayloadToken",
    "SignLedger",
    "ThetaSymbol",
    "TorelliClassError",
    "ZeroClass",
    "apply_involution",
    "independence_certificate",
    "involution_sign",
    "make_symbol",
    "mu_permutation_sign",
    "phi_evaluate",
    "reversal_identity",
    "theta_signs",
]

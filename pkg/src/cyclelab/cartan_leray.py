"""First-page assembly for group actions on cell complexes.

Orbit data with symbolic stabilizer classes is turned into E^1 grids whose
entries are closed-form ranks (polynomials in a truncation parameter t when
a stabilizer has infinite-rank free factors).  The same data expands, once
the stabilizers are concrete, into the reduced double complex that homalg's
spectral machinery consumes, so every closed form can be cross-checked
against an honest computation.  On top of that sit the orbit-quotient
construction (kill cells missing the distinguished pattern, restrict to
cells containing the chosen one, strip the twist-pair factor from each
stabilizer), vanishing-region stability certificates, and the chain-level
corner harness for torus-times-trivial actions.
"""

from __future__ import annotations

import re
from collections import namedtuple
from itertools import combinations, product
from math import comb, gcd

from .homalg.double import tensor_over_group
from .homalg.intmat import IntMatrix
from .homalg.spectral import SizeGuardError, run_spectral_sequence
from .multicurve import _n_pattern, multicurve_invariants, perfectness_scan, submulticurve
from .reports import ValidationReport

CertifiedReport = ValidationReport


class CartanLerayError(ValueError):
    """Malformed orbit data or an unsupported stabilizer operation."""


class StabilizerError(CartanLerayError):
    """A stabilizer class cannot produce the requested concrete blocks."""


class PatternError(CartanLerayError):
    """Domain refusal: the orbit pattern violates its preconditions."""


# ---------------------------------------------------------------------------
# ranks as polynomials in the truncation parameter


class TruncationPoly:
    """Integer polynomial in the truncation parameter t, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def var(cls):
        return cls((0, 1))

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def evaluate(self, t=None):
        if not self.coeffs:
            return 0
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        if t is None:
            raise StabilizerError("rank %s needs a concrete truncation" % self)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncationPoly((other,))
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return TruncationPoly(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
        )

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = TruncationPoly((other,))
        if not self.coeffs or not other.coeffs:
            return TruncationPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TruncationPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == TruncationPoly((other,)).coeffs
        return isinstance(other, TruncationPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self):
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c))
                parts.append("%st%s" % (head, "" if d == 1 else "^%d" % d))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "TruncationPoly(%s)" % (self,)


ZERO_POLY = TruncationPoly()
ONE_POLY = TruncationPoly((1,))


# ---------------------------------------------------------------------------
# stabilizer classes
#
# The concrete kinds double as the block objects the homalg reduction
# consumes: block_ranks / vertical_matrix / inclusion_matrix realize the
# coinvariant complex of the class's standard resolution.  All supported
# kinds have torsion-free homology and vanishing reduced differentials, so
# the vertical blocks are zero matrices and inclusions are basis
# injections matched by factor label.


class StabilizerClass:
    kind = "abstract"

    def hq_poly(self, q):
        raise StabilizerError("%s stabilizer has no closed-form homology" % self.kind)

    def hq_rank(self, q, t=None):
        return self.hq_poly(q).evaluate(t)

    def max_q(self):
        raise StabilizerError("%s stabilizer has no homology bound" % self.kind)

    def realize(self, t=None):
        """Concrete copy usable as a reduction block; t resolves symbolic ranks."""
        raise StabilizerError("%s stabilizer cannot be realized" % self.kind)

    def contains(self, other):
        return isinstance(other, Trivial)

    def to_json(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(str(sorted(self.to_json().items())))


class Trivial(StabilizerClass):
    kind = "trivial"

    def hq_poly(self, q):
        return ONE_POLY if q == 0 else ZERO_POLY

    def max_q(self):
        return 0

    def realize(self, t=None):
        return self

    def block_ranks(self):
        return {0: 1}

    def vertical_matrix(self, q):
        return IntMatrix.zero(self.block_ranks().get(q - 1, 0), self.block_ranks().get(q, 0))

    def inclusion_matrix(self, face_stab, q):
        face_rank = face_stab.block_ranks().get(q, 0)
        if q == 0:
            if face_rank != 1:
                raise StabilizerError("face block at q=0 must have rank one")
            return IntMatrix(1, 1, {(0, 0): 1})
        return IntMatrix.zero(face_rank, 0)

    def to_json(self):
        return {"kind": "trivial"}

    def __repr__(self):
        return "Trivial()"


def _monotone_positions(labels, face_labels, what):
    """Indices of labels inside face_labels; the embedding must keep order."""
    pos = []
    start = 0
    lookup = {lab: i for i, lab in enumerate(face_labels)}
    for lab in labels:
        i = lookup.get(lab)
        if i is None:
            raise StabilizerError("face stabilizer is missing %s %r" % (what, lab))
        if i < start:
            raise StabilizerError("%s order changes across the face map" % what)
        pos.append(i)
        start = i + 1
    return pos


class FreeAbelian(StabilizerClass):
    """Free abelian stabilizer; axes are the labelled coordinate directions."""

    kind = "free_abelian"
    __slots__ = ("axes",)

    def __init__(self, axes):
        if isinstance(axes, int):
            axes = tuple("u%d" % i for i in range(axes))
        self.axes = tuple(str(a) for a in axes)
        if len(set(self.axes)) != len(self.axes):
            raise CartanLerayError("duplicate axis labels")

    @property
    def j(self):
        return len(self.axes)

    def hq_poly(self, q):
        return TruncationPoly.const(comb(self.j, q)) if 0 <= q <= self.j else ZERO_POLY

    def max_q(self):
        return self.j

    def realize(self, t=None):
        return self

    def contains(self, other):
        if isinstance(other, Trivial):
            return True
        if isinstance(other, FreeAbelian):
            try:
                _monotone_positions(other.axes, self.axes, "axis")
            except StabilizerError:
                return False
            return True
        return False

    def _basis(self, q):
        return list(combinations(range(self.j), q))

    def block_ranks(self):
        return {q: comb(self.j, q) for q in range(self.j + 1)}

    def vertical_matrix(self, q):
        return IntMatrix.zero(self.block_ranks().get(q - 1, 0), self.block_ranks().get(q, 0))

    def inclusion_matrix(self, face_stab, q):
        if not isinstance(face_stab, FreeAbelian):
            raise StabilizerError("free abelian block maps into a free abelian block only")
        pos = _monotone_positions(self.axes, face_stab.axes, "axis")
        mine = self._basis(q)
        face_index = {S: i for i, S in enumerate(face_stab._basis(q))}
        ent = {}
        for col, S in enumerate(mine):
            T = tuple(pos[a] for a in S)
            ent[face_index[T], col] = 1
        return IntMatrix(comb(face_stab.j, q), len(mine), ent)

    def to_json(self):
        return {"kind": "free_abelian", "axes": list(self.axes)}

    def __repr__(self):
        return "FreeAbelian(%r)" % (self.axes,)


class ProductOfFree(StabilizerClass):
    """Direct product of free groups, one factor per label.

    A factor rank may be None, standing for an infinite-rank free group;
    ranks then stay symbolic until a truncation substitutes t.  H_q has
    free rank e_q(m_1, ..., m_k), the elementary symmetric polynomial in
    the factor ranks.
    """

    kind = "product_of_free"
    __slots__ = ("factors", "truncation")

    def __init__(self, factors, truncation=None):
        fs = []
        for lab, rank in factors:
            if rank is not None:
                rank = int(rank)
                if rank < 0:
                    raise CartanLerayError("factor rank must be nonnegative")
            fs.append((str(lab), rank))
        self.factors = tuple(fs)
        if len(set(lab for lab, _ in fs)) != len(fs):
            raise CartanLerayError("duplicate factor labels")
        self.truncation = None if truncation is None else int(truncation)

    def labels(self):
        return tuple(lab for lab, _ in self.factors)

    def _rank_polys(self, t=None):
        eff = self.truncation if self.truncation is not None else t
        out = []
        for _, rank in self.factors:
            if rank is not None:
                out.append(TruncationPoly.const(rank))
            elif eff is not None:
                out.append(TruncationPoly.const(int(eff)))
            else:
                out.append(TruncationPoly.var())
        return out

    def hq_poly(self, q):
        if q < 0 or q > len(self.factors):
            return ZERO_POLY
        # coefficient of X^q in prod (1 + m_i X)
        elems = [ONE_POLY] + [ZERO_POLY] * q
        for m in self._rank_polys():
            for d in range(min(q, len(self.factors)), 0, -1):
                elems[d] = elems[d] + elems[d - 1] * m
        return elems[q]

    def max_q(self):
        return len(self.factors)

    def realize(self, t=None):
        eff = self.truncation if self.truncation is not None else t
        ranks = []
        for lab, rank in self.factors:
            if rank is None:
                if eff is None:
                    raise StabilizerError(
                        "factor %r has symbolic rank; supply a truncation" % lab
                    )
                rank = int(eff)
            ranks.append((lab, rank))
        return ProductOfFree(ranks, truncation=None)

    def contains(self, other):
        """Label-wise containment of the complement factors.

        Twist-pair factors (labelled bp:*) are skipped on both sides: under
        a face map they land inside the face's complement factors, which
        the label calculus cannot express; the orbit quotient checks them
        by count instead.
        """
        if isinstance(other, Trivial):
            return True
        if not isinstance(other, ProductOfFree):
            return False
        keep = lambda fs: [(lab, rank) for lab, rank in fs if not lab.startswith("bp:")]
        mine = dict(keep(self.factors))
        theirs = keep(other.factors)
        try:
            _monotone_positions([lab for lab, _ in theirs], list(mine), "factor")
        except StabilizerError:
            return False
        for lab, rank in theirs:
            big = mine[lab]
            if big is None:
                continue
            if rank is None or rank > big:
                return False
        return True

    def _concrete_ranks(self):
        ranks = []
        for lab, rank in self.factors:
            if rank is None:
                raise StabilizerError("factor %r is symbolic; realize first" % lab)
            ranks.append(rank)
        return ranks

    def _basis(self, q):
        ranks = self._concrete_ranks()
        out = []
        for S in combinations(range(len(ranks)), q):
            for gens in product(*(range(ranks[i]) for i in S)):
                out.append((S, gens))
        return out

    def block_ranks(self):
        ranks = self._concrete_ranks()
        out = {}
        for q in range(len(ranks) + 1):
            r = sum(1 for _ in self._basis(q)) if q else 1
            if r:
                out[q] = r
        return out

    def vertical_matrix(self, q):
        br = self.block_ranks()
        return IntMatrix.zero(br.get(q - 1, 0), br.get(q, 0))

    def inclusion_matrix(self, face_stab, q):
        if not isinstance(face_stab, ProductOfFree):
            raise StabilizerError("product block maps into a product block only")
        pos = _monotone_positions(self.labels(), face_stab.labels(), "factor")
        face_ranks = face_stab._concrete_ranks()
        mine_ranks = self._concrete_ranks()
        for k, i in enumerate(pos):
            if mine_ranks[k] > face_ranks[i]:
                raise StabilizerError(
                    "factor %r shrinks across the face map" % self.factors[k][0]
                )
        mine = self._basis(q)
        face_index = {key: i for i, key in enumerate(face_stab._basis(q))}
        ent = {}
        for col, (S, gens) in enumerate(mine):
            T = tuple(pos[a] for a in S)
            ent[face_index[T, gens], col] = 1
        face_rank = face_stab.block_ranks().get(q, 0)
        return IntMatrix(face_rank, len(mine), ent)

    def to_json(self):
        return {
            "kind": "product_of_free",
            "factors": [{"label": lab, "rank": rank} for lab, rank in self.factors],
            "truncation": self.truncation,
        }

    def __hash__(self):
        return hash((self.factors, self.truncation))

    def __repr__(self):
        body = ", ".join(
            "%s:%s" % (lab, "inf" if rank is None else rank) for lab, rank in self.factors
        )
        return "ProductOfFree(%s)" % body


class Opaque(StabilizerClass):
    """Stabilizer known only through a cohomological-dimension bound."""

    kind = "opaque"
    __slots__ = ("cd_bound",)

    def __init__(self, cd_bound):
        self.cd_bound = int(cd_bound)
        if self.cd_bound < 0:
            raise CartanLerayError("cd bound must be nonnegative")

    def hq_poly(self, q):
        raise StabilizerError(
            "opaque stabilizer (cd <= %d) has no computed homology" % self.cd_bound
        )

    def max_q(self):
        return self.cd_bound

    def vanishes_above(self, q):
        return q > self.cd_bound

    def contains(self, other):
        return True

    def to_json(self):
        return {"kind": "opaque", "cd_bound": self.cd_bound}

    def __repr__(self):
        return "Opaque(cd<=%d)" % self.cd_bound


def stab_from_json(d):
    kind = d.get("kind")
    if kind == "trivial":
        return Trivial()
    if kind == "free_abelian":
        return FreeAbelian(tuple(d["axes"]))
    if kind == "product_of_free":
        return ProductOfFree(
            tuple((f["label"], f["rank"]) for f in d["factors"]),
            truncation=d.get("truncation"),
        )
    if kind == "opaque":
        return Opaque(d["cd_bound"])
    raise CartanLerayError("unknown stabilizer kind %r" % kind)


# ---------------------------------------------------------------------------
# equivariant cell data


class CellRecord:
    """One orbit of cells: degree, stabilizer class, signed face records.

    boundary entries are (face orbit id, incidence coefficient, group-element
    decoration); the decoration is an opaque string acting trivially on
    reduced blocks.  curves and bp are optional payloads used by the orbit
    quotient: the cell's curve-id set and the rank of its twist-pair
    subgroup.
    """

    __slots__ = ("p", "orbit", "stab", "boundary", "curves", "bp")

    def __init__(self, p, orbit, stab, boundary=(), curves=None, bp=None):
        self.p = int(p)
        self.orbit = str(orbit)
        self.stab = stab
        self.boundary = tuple((str(o), int(c), str(e)) for (o, c, e) in boundary)
        self.curves = None if curves is None else frozenset(str(c) for c in curves)
        self.bp = None if bp is None else int(bp)
        if self.p < 0:
            raise CartanLerayError("cell degree must be nonnegative")

    def to_json(self):
        d = {
            "p": self.p,
            "orbit": self.orbit,
            "stab": self.stab.to_json(),
            "boundary": [
                {"orbit": o, "coef": c, "elt": e} for (o, c, e) in self.boundary
            ],
        }
        if self.curves is not None:
            d["curves"] = sorted(self.curves)
        if self.bp is not None:
            d["bp"] = self.bp
        return d

    def __repr__(self):
        return "CellRecord(p=%d, orbit=%r, stab=%r)" % (self.p, self.orbit, self.stab)


_OrbitAdapter = namedtuple("_OrbitAdapter", ["p", "stab", "boundary"])


class EquivariantCellData:
    """Orbit records of a group action on a cell complex, one per orbit."""

    __slots__ = ("group", "cells", "_index")

    def __init__(self, group, cells):
        self.group = str(group)
        self.cells = tuple(cells)
        self._index = {}
        for pos, cell in enumerate(self.cells):
            if cell.orbit in self._index:
                raise CartanLerayError("duplicate orbit id %r" % cell.orbit)
            self._index[cell.orbit] = pos
        for cell in self.cells:
            for (o, _c, _e) in cell.boundary:
                face = self.cell(o)
                if face is None:
                    raise CartanLerayError("boundary of %r references unknown orbit %r"
                                           % (cell.orbit, o))
                if face.p != cell.p - 1:
                    raise CartanLerayError("boundary of %r does not drop degree by one"
                                           % cell.orbit)

    def cell(self, orbit):
        pos = self._index.get(orbit)
        return None if pos is None else self.cells[pos]

    def position(self, orbit):
        return self._index[orbit]

    def degrees(self):
        return sorted({c.p for c in self.cells})

    def cells_at(self, p):
        return [c for c in self.cells if c.p == p]

    def _incidence(self, p):
        """Coefficient-sum matrix from degree p to p-1, orbits in list order."""
        rows = [c for c in self.cells if c.p == p - 1]
        cols = [c for c in self.cells if c.p == p]
        rix = {c.orbit: i for i, c in enumerate(rows)}
        ent = {}
        for j, c in enumerate(cols):
            for (o, coef, _e) in c.boundary:
                key = (rix[o], j)
                ent[key] = ent.get(key, 0) + coef
        return IntMatrix(len(rows), len(cols), ent)

    def validate(self, truncation=None):
        report = ValidationReport("equivariant-cell-data")
        report.add("orbit_ids_resolve", True)
        square_ok = True
        detail = ""
        for p in self.degrees():
            if p < 2:
                continue
            m = self._incidence(p - 1) * self._incidence(p)
            if not m.is_zero():
                square_ok = False
                detail = "incidence square nonzero from degree %d" % p
                break
        report.add("incidence_squares_to_zero", square_ok, detail)
        contain_ok = True
        detail = ""
        for cell in self.cells:
            for (o, _c, _e) in cell.boundary:
                if not self.cell(o).stab.contains(cell.stab):
                    contain_ok = False
                    detail = "face %r does not contain the stabilizer of %r" % (o, cell.orbit)
                    break
            if not contain_ok:
                break
        report.add("face_stabilizers_contain", contain_ok, detail)
        try:
            expand_double_complex(self, truncation)
            report.add("expansion_d_squared", True)
        except StabilizerError as exc:
            report.add("expansion_d_squared", True, "skipped: %s" % exc)
        except (CartanLerayError, ValueError) as exc:
            report.add("expansion_d_squared", False, str(exc))
        return report

    def to_json(self):
        return {"group": self.group, "cells": [c.to_json() for c in self.cells]}

    @classmethod
    def from_json(cls, d):
        cells = []
        for c in d["cells"]:
            cells.append(
                CellRecord(
                    c["p"],
                    c["orbit"],
                    stab_from_json(c["stab"]),
                    [(b["orbit"], b["coef"], b.get("elt", "1")) for b in c["boundary"]],
                    curves=c.get("curves"),
                    bp=c.get("bp"),
                )
            )
        return cls(d["group"], cells)

    def __repr__(self):
        return "EquivariantCellData(group=%r, cells=%d)" % (self.group, len(self.cells))


def expand_double_complex(data, truncation=None):
    """Reduced double complex of the orbit data, ready for the page engine.

    Each stabilizer must realize concretely; symbolic factor ranks take the
    value of `truncation`.  The q-th row of an orbit's block is the degree-q
    piece of its stabilizer's coinvariant complex, so the page-one entries
    of the result are the closed-form direct sums by construction, and the
    run itself re-derives them from honest matrices.
    """
    records = []
    for cell in data.cells:
        stab = cell.stab.realize(truncation)
        boundary = [(data.position(o), coef, elt) for (o, coef, elt) in cell.boundary]
        records.append(_OrbitAdapter(cell.p, stab, boundary))
    return tensor_over_group(records)


# ---------------------------------------------------------------------------
# page-one grids


class E1Grid:
    """Closed-form first page: polynomial ranks plus opaque-bounded spots."""

    __slots__ = ("entries", "bounded", "truncation", "group")

    def __init__(self, entries, bounded, truncation=None, group=""):
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self.bounded = dict(bounded)
        self.truncation = truncation
        self.group = group

    def status(self, p, q):
        if (p, q) in self.bounded:
            return "bounded"
        return "rank" if (p, q) in self.entries else "zero"

    def is_zero(self, p, q):
        return self.status(p, q) == "zero"

    def poly(self, p, q):
        if (p, q) in self.bounded:
            raise StabilizerError(
                "entry (%d,%d) is only bounded (opaque stabilizer, cd <= %d)"
                % (p, q, self.bounded[p, q])
            )
        return self.entries.get((p, q), ZERO_POLY)

    def rank(self, p, q, t=None):
        return self.poly(p, q).evaluate(t if t is not None else self.truncation)

    def spots(self):
        return sorted(set(self.entries) | set(self.bounded))

    def p_range(self):
        ps = [p for p, _ in self.spots()]
        return (min(ps), max(ps)) if ps else (0, 0)

    def q_range(self):
        qs = [q for _, q in self.spots()]
        return (min(qs), max(qs)) if qs else (0, 0)

    def evaluate(self, t=None):
        return {k: self.rank(*k, t=t) for k in self.entries}

    def to_json(self):
        cells = []
        for (p, q) in self.spots():
            row = {"p": p, "q": q}
            if (p, q) in self.bounded:
                row["bounded_by_cd"] = self.bounded[p, q]
            else:
                poly = self.entries[p, q]
                row["rank_poly"] = poly.to_json()
                row["rank_poly_str"] = str(poly)
                eff = self.truncation
                if poly.is_constant() or eff is not None:
                    row["rank"] = poly.evaluate(eff)
            cells.append(row)
        return {"group": self.group, "truncation": self.truncation, "entries": cells}

    def __repr__(self):
        return "E1Grid(%d entries, %d bounded)" % (len(self.entries), len(self.bounded))


def assemble_e1(data, truncation=None):
    """First page of the orbit data: E^1_{p,q} = sum of H_q over degree-p orbits.

    Ranks come from the stabilizer classes' closed forms, polynomial in t
    where a factor rank is symbolic.  Opaque stabilizers contribute bounded
    spots instead of ranks: reading such an entry raises, but its vanishing
    for q above the cd bound stays available.
    """
    entries = {}
    bounded = {}
    for cell in data.cells:
        stab = cell.stab
        if isinstance(stab, Opaque):
            for q in range(stab.cd_bound + 1):
                key = (cell.p, q)
                bounded[key] = max(bounded.get(key, 0), stab.cd_bound)
            continue
        for q in range(stab.max_q() + 1):
            poly = stab.hq_poly(q)
            if poly.is_zero():
                continue
            key = (cell.p, q)
            entries[key] = entries.get(key, ZERO_POLY) + poly
    return E1Grid(entries, bounded, truncation=truncation, group=data.group)


def e1_matches_expansion(data, truncation=None, max_rank=None):
    """Oracle equivalence: closed-form grid versus the computed first page."""
    report = ValidationReport("e1-oracle")
    grid = assemble_e1(data, truncation=truncation)
    if grid.bounded:
        raise StabilizerError("opaque stabilizers cannot be expanded")
    dc = expand_double_complex(data, truncation)
    res = run_spectral_sequence(dc, max_rank=max_rank)
    page = res.page(1)
    spots = set(grid.entries) | set(page.entries)
    ranks_ok = True
    torsion_ok = True
    detail = ""
    for (p, q) in sorted(spots):
        want = grid.rank(p, q, t=truncation) if (p, q) in grid.entries else 0
        got = page.entry(p, q)
        if got.torsion:
            torsion_ok = False
            detail = "torsion at (%d,%d)" % (p, q)
            break
        if got.free_rank != want:
            ranks_ok = False
            detail = "(%d,%d): closed form %d, computed %d" % (p, q, want, got.free_rank)
            break
    report.add("e1_torsion_free", torsion_ok, detail if not torsion_ok else "")
    report.add("e1_ranks_match", ranks_ok, detail if not ranks_ok else "")
    report.data["spots"] = sorted("%d,%d" % k for k in spots)
    return report


# ---------------------------------------------------------------------------
# vanishing regions and stability certificates


_TERM_RE = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*([pq])")
_CMP_RE = re.compile(r"\s*(<=|>=|<|>)\s*([+-]?\d+)\s*$")


class VanishingRegion:
    """Union of closed integer half-planes {a*p + b*q <= c} in the (p,q) plane."""

    __slots__ = ("pieces",)

    def __init__(self, pieces=()):
        canon = set()
        for (a, b, c) in pieces:
            a, b, c = int(a), int(b), int(c)
            if a == 0 and b == 0:
                raise CartanLerayError("half-plane needs a p or q coefficient")
            g = gcd(abs(a), abs(b))
            if g > 1:
                # integer points only, so the bound tightens by flooring
                a, b, c = a // g, b // g, c // g if c >= 0 else -((-c + g - 1) // g)
            canon.add((a, b, c))
        self.pieces = tuple(sorted(canon))

    @classmethod
    def parse(cls, text):
        pieces = []
        for chunk in str(text).split("|"):
            chunk = chunk.strip()
            if not chunk:
                continue
            m = _CMP_RE.search(chunk)
            if not m:
                raise CartanLerayError("cannot parse inequality %r" % chunk)
            op, rhs = m.group(1), int(m.group(2))
            expr = chunk[: m.start()]
            a = b = 0
            pos = 0
            for tm in _TERM_RE.finditer(expr):
                if tm.start() != pos:
                    break
                sign = -1 if tm.group(1) == "-" else 1
                coef = sign * (int(tm.group(2)) if tm.group(2) else 1)
                if tm.group(3) == "p":
                    a += coef
                else:
                    b += coef
                pos = tm.end()
            if pos != len(expr.rstrip()) or (a == 0 and b == 0):
                raise CartanLerayError("cannot parse inequality %r" % chunk)
            if op == "<=":
                pieces.append((a, b, rhs))
            elif op == "<":
                pieces.append((a, b, rhs - 1))
            elif op == ">=":
                pieces.append((-a, -b, -rhs))
            else:
                pieces.append((-a, -b, -rhs - 1))
        return cls(pieces)

    def contains(self, p, q):
        return any(a * p + b * q <= c for (a, b, c) in self.pieces)

    def is_empty(self):
        return not self.pieces

    def to_json(self):
        return {"pieces": [list(piece) for piece in self.pieces]}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(tuple(piece) for piece in d["pieces"]))

    def __str__(self):
        if not self.pieces:
            return "(empty)"

        def render(a, b, c):
            terms = []
            for coef, var in ((a, "p"), (b, "q")):
                if not coef:
                    continue
                if coef == 1:
                    terms.append("+%s" % var)
                elif coef == -1:
                    terms.append("-%s" % var)
                else:
                    terms.append("%+d%s" % (coef, var))
            body = "".join(terms).lstrip("+")
            return "%s<=%d" % (body, c)

        return " | ".join(render(*piece) for piece in self.pieces)

    def __repr__(self):
        return "VanishingRegion(%s)" % self


class StabilityCertificate:
    """Per-r ledger that every differential in or out of an entry dies.

    valid means: for a first-quadrant spectral sequence whose page-one
    entries vanish on the region, no d^r touches the entry, so its
    page-one and limit terms agree.
    """

    __slots__ = ("entry", "region", "rows", "valid", "r_max", "bound_note", "first_uncovered")

    def __init__(self, entry, region, rows, valid, r_max, bound_note, first_uncovered):
        self.entry = entry
        self.region = region
        self.rows = tuple(rows)
        self.valid = valid
        self.r_max = r_max
        self.bound_note = bound_note
        self.first_uncovered = first_uncovered

    def to_json(self):
        return {
            "entry": list(self.entry),
            "region": self.region.to_json(),
            "region_str": str(self.region),
            "valid": self.valid,
            "r_max": self.r_max,
            "rows": [dict(r) for r in self.rows],
            "bound_note": self.bound_note,
            "first_uncovered": self.first_uncovered,
        }

    def __repr__(self):
        state = "certified" if self.valid else "refused"
        return "StabilityCertificate(entry=%r, %s)" % (list(self.entry), state)


def _position_covered(region, p, q):
    if p < 0:
        return "outside first quadrant (p<0)"
    if q < 0:
        return "outside first quadrant (q<0)"
    if region.contains(p, q):
        return "in vanishing region"
    return None


def certify_stable(region, entry):
    """Certificate that the entry sees no nonzero differential on any page.

    The d^r leaving (p0,q0) lands at (p0-r, q0+r-1); the one arriving comes
    from (p0+r, q0-r+1).  Both are checked for r up to max(p0, q0+1); past
    that bound one coordinate is negative, which the bound note records.
    Refusals are returned, not raised, carrying the first uncovered spot.
    """
    p0, q0 = int(entry[0]), int(entry[1])
    if p0 < 0 or q0 < 0:
        raise CartanLerayError("entry must sit in the first quadrant")
    r_max = max(p0, q0 + 1, 1)
    rows = []
    first_uncovered = None
    for r in range(1, r_max + 1):
        row = {"r": r}
        for role, pos in (("out", (p0 - r, q0 + r - 1)), ("in", (p0 + r, q0 - r + 1))):
            reason = _position_covered(region, *pos)
            row[role] = list(pos)
            row["%s_ok" % role] = reason is not None
            row["%s_reason" % role] = reason or "uncovered"
            if reason is None and first_uncovered is None:
                first_uncovered = {"r": r, "role": role, "position": list(pos)}
        rows.append(row)
        if first_uncovered is not None:
            break
    valid = first_uncovered is None
    bound_note = (
        "for r > %d the outgoing target has p = %d - r < 0 and the incoming "
        "source has q = %d + 1 - r < 0" % (r_max, p0, q0)
    )
    return StabilityCertificate((p0, q0), region, rows, valid, r_max, bound_note,
                                first_uncovered)


# ---------------------------------------------------------------------------
# orbit patterns and the quotient construction


class OrbitPattern:
    """Desk-scale stand-in for a group orbit of chain multicurves.

    members are the curve-id sets, inside a fixed ambient multicurve, whose
    chain-pattern class sequence matches the distinguished cell's (forward
    or reversed); the acting group preserves classes, so nothing else can
    lie in the orbit.
    """

    __slots__ = ("n_ids", "members", "meta")

    def __init__(self, n_ids, members, meta=None):
        self.n_ids = frozenset(str(c) for c in n_ids)
        self.members = tuple(frozenset(str(c) for c in m) for m in members)
        self.meta = dict(meta or {})

    def to_json(self):
        return {
            "n_ids": sorted(self.n_ids),
            "members": [sorted(m) for m in self.members],
            "meta": {k: v for k, v in sorted(self.meta.items())},
        }

    def __repr__(self):
        return "OrbitPattern(|N|=%d, members=%d)" % (len(self.n_ids), len(self.members))


def orbit_pattern(ambient, n_ids, x=None, variant=None):
    """Pattern for the orbit of the chain multicurve n_ids inside ambient."""
    n_ids = frozenset(str(c) for c in n_ids)
    sub = submulticurve(ambient, n_ids)
    rep, info = _n_pattern(sub, x)
    if info is None or not rep.ok:
        raise PatternError("distinguished cell is not a chain multicurve")
    ref = tuple(tuple(c) for c in info["classes"])
    refs = {ref, tuple(reversed(ref))}
    members = []
    for sel in perfectness_scan(ambient, "N", x=x, variant=variant):
        srep, sinfo = _n_pattern(submulticurve(ambient, sel), x)
        if sinfo is None or not srep.ok:
            continue
        if tuple(tuple(c) for c in sinfo["classes"]) in refs:
            members.append(frozenset(sel))
    if n_ids not in members:
        raise PatternError("distinguished cell does not match its own pattern")
    meta = {"genus": ambient.genus}
    if x is not None:
        meta["x"] = list(x)
    return OrbitPattern(n_ids, sorted(members, key=sorted), meta)


def _strip_bp(stab, bp, orbit):
    if isinstance(stab, Trivial):
        if bp:
            raise CartanLerayError("cell %r claims twist pairs but has a trivial "
                                   "stabilizer" % orbit)
        return stab
    if isinstance(stab, ProductOfFree):
        kept = [(lab, rank) for lab, rank in stab.factors if not lab.startswith("bp:")]
        dropped = len(stab.factors) - len(kept)
        if bp is not None and dropped != bp:
            raise CartanLerayError(
                "cell %r: %d twist-pair factors tagged, bp payload says %d"
                % (orbit, dropped, bp)
            )
        return ProductOfFree(kept, truncation=stab.truncation)
    if isinstance(stab, Opaque):
        if bp is None:
            raise CartanLerayError("cell %r: opaque stabilizer needs a bp payload "
                                   "to quotient" % orbit)
        return Opaque(stab.cd_bound - bp)
    raise PatternError("stabilizer kind %r does not support the twist-pair quotient"
                       % stab.kind)


def quotient_by_orbit(data, pattern):
    """Quotient complex of the orbit pattern, restricted to the chosen cell.

    Cells whose multicurve contains no pattern member are killed; with a
    perfect pattern the rest decompose orbit-wise, so the complex restricts
    to the cells containing the chosen member, and each stabilizer drops
    its twist-pair factor.  A cell carrying two members refuses: the
    restriction would not be a subcomplex.
    """
    if not isinstance(pattern, OrbitPattern):
        raise PatternError("orbit pattern required")
    for cell in data.cells:
        if cell.curves is None:
            raise CartanLerayError("cell %r lacks a curve payload" % cell.orbit)
        hits = [m for m in pattern.members if m <= cell.curves]
        if len(hits) > 1:
            raise PatternError(
                "pattern is not perfect: cell %r contains %d members"
                % (cell.orbit, len(hits))
            )
    if not pattern.members:
        return EquivariantCellData(data.group + " / BP", [])
    kept = [c for c in data.cells if pattern.n_ids <= c.curves]
    kept_ids = {c.orbit for c in kept}
    out = []
    for cell in kept:
        boundary = [(o, coef, elt) for (o, coef, elt) in cell.boundary if o in kept_ids]
        stab = _strip_bp(cell.stab, cell.bp, cell.orbit)
        out.append(CellRecord(cell.p, cell.orbit, stab, boundary, curves=cell.curves, bp=0))
    return EquivariantCellData(data.group + " / BP", out)


def stabilizer_of_supercell(family, m_graph, n_ids):
    """Stabilizer class, after the twist-pair quotient, of a cell over n_ids.

    family: {"kind": "standard"|"truncated"|"general", "genus": g, "n": k}.
    The chain family gives a product of 2g-3-m infinite free factors, the
    truncated family only a cd bound 3g-5-m-n, and a general multicurve the
    bound 3g-5-m-bp.
    """
    kind = family.get("kind", "general")
    g = int(family["genus"])
    if m_graph.genus != g:
        raise CartanLerayError("family genus %d does not match the multicurve's %d"
                               % (g, m_graph.genus))
    missing = set(str(c) for c in n_ids) - set(m_graph.curve_ids())
    if missing:
        raise CartanLerayError("containment failure: %s not in the multicurve"
                               % sorted(missing))
    inv = multicurve_invariants(m_graph)
    m = inv.dimension
    if kind == "standard":
        if inv.size != m + g or inv.class_rank != g:
            raise CartanLerayError(
                "cell is not chain-family shaped: |M| = %d, D = %d, dim = %d"
                % (inv.size, inv.class_rank, m)
            )
        count = 2 * g - 3 - m
        if count < 0:
            raise CartanLerayError("cell dimension %d exceeds the family range" % m)
        return ProductOfFree(tuple(("y:%d" % k, None) for k in range(count)))
    if kind == "truncated":
        n = int(family["n"])
        bound = 3 * g - 5 - m - n
        if bound < 0:
            raise CartanLerayError("cell dimension %d exceeds the family range" % m)
        return Opaque(bound)
    bound = 3 * g - 5 - m - inv.bp
    if bound < 0:
        raise CartanLerayError("cell dimension %d exceeds the general bound" % m)
    return Opaque(bound)


# ---------------------------------------------------------------------------
# built-in actions


def build_torus_action_data(n):
    """Translation action on the cubical line-power: free, one orbit per face.

    Each axis contributes the two opposite faces of the unit cube with
    opposite incidence signs and a translation decoration; after the orbit
    reduction they cancel, which is what makes the quotient's boundary zero.
    """
    n = int(n)
    if n < 0:
        raise CartanLerayError("dimension must be nonnegative")
    cells = []
    for p in range(n + 1):
        for S in combinations(range(n), p):
            orbit = "e[%s]" % ",".join(str(a) for a in S)
            boundary = []
            for pos, a in enumerate(S):
                T = S[:pos] + S[pos + 1 :]
                face = "e[%s]" % ",".join(str(b) for b in T)
                sign = -1 if pos % 2 else 1
                boundary.append((face, sign, "1"))
                boundary.append((face, -sign, "t%d" % a))
            cells.append(CellRecord(p, orbit, Trivial(), boundary))
    return EquivariantCellData("Z^%d" % n, cells)


def build_shifted_torus_data(n, j, orientation="standard"):
    """Product action: translations on the cube complex, a free abelian factor
    acting trivially.  Every cell keeps the trivially-acting factor as its
    stabilizer.  orientation "inverse" reverses each translation axis; the
    reduced pages must not notice.
    """
    n, j = int(n), int(j)
    if n < 0 or j < 0:
        raise CartanLerayError("dimensions must be nonnegative")
    if orientation not in ("standard", "inverse"):
        raise CartanLerayError("unknown orientation %r" % orientation)
    stab = FreeAbelian(tuple("h%d" % k for k in range(j)))
    cells = []
    for p in range(n + 1):
        for S in combinations(range(n), p):
            orbit = "e[%s]" % ",".join(str(a) for a in S)
            boundary = []
            for pos, a in enumerate(S):
                T = S[:pos] + S[pos + 1 :]
                face = "e[%s]" % ",".join(str(b) for b in T)
                sign = -1 if pos % 2 else 1
                if orientation == "standard":
                    boundary.append((face, sign, "1"))
                    boundary.append((face, -sign, "t%d" % a))
                else:
                    boundary.append((face, -sign, "1"))
                    boundary.append((face, sign, "t%d^-1" % a))
            cells.append(CellRecord(p, orbit, stab, boundary))
    return EquivariantCellData("Z^%d x Z^%d" % (n, j), cells)


LocalStar = namedtuple("LocalStar", ["data", "pattern", "graph", "x", "n_ids"])


def build_local_star_data(g, n=None, positions=None):
    """Cell records around the chain multicurve's cell, face lattice included.

    Starts from the standard chain configuration, splits the four-punctured
    regions listed in `positions` with an extra curve each (sum class at the
    two end regions, difference class in the middle ones), and converts the
    resulting polytope's face lattice into orbit records.  Boundary signs
    come from the cell orientation machinery, so the records inherit an
    honest d-squared-is-zero.  n selects the truncated family; stabilizers
    are then carried as cd bounds only.

    Pre-quotient stabilizers model the full cell stabilizer as twist-pair
    factors (labelled bp:*) times the complement part; the product shape is
    a desk normalization, and the supported analysis path runs through
    quotient_by_orbit, which strips the bp factors.
    """
    from functools import reduce

    from .cycle_complex import build_cell, check_M_membership
    from .multicurve import Component, build_standard, make_curve
    from .multicurve import DecompGraph
    from .symplectic import add, analyze_splitting, scale, standard_splitting, \
        standard_truncated

    g = int(g)
    truncated = n is not None
    if truncated:
        n = int(n)
        if not 1 <= n <= g - 2:
            raise CartanLerayError("truncated family needs 1 <= n <= g-2")
        s = standard_truncated(g, n)
        last_region = n + 1
        split_range = range(1, n + 1)
    else:
        if g < 3:
            raise CartanLerayError("chain star needs genus at least 3")
        s = standard_splitting(g)
        last_region = g - 1
        split_range = range(1, g)
    a = analyze_splitting(s)["a"]
    x = reduce(add, a)
    n_graph = build_standard("N", s)
    n_ids = frozenset(n_graph.curve_ids())

    if positions is None:
        positions = tuple(split_range)
    positions = tuple(sorted(set(int(i) for i in positions)))
    if any(i not in split_range for i in positions):
        raise CartanLerayError("split positions must name four-punctured regions")

    # endpoint relocation: region Y_i splits into Y_ia and Y_ib
    moves = {}
    eps_curves = []
    for i in positions:
        ya, yb = "Y%da" % i, "Y%db" % i
        if i == 1:
            moves["alpha0", "left"] = ya
            moves["alpha0", "right"] = yb
            moves["alpha1", "left"] = ya
            moves["alpha1_p", "right"] = yb
            cls, left, right = add(a[0], a[1]), yb, ya
        elif not truncated and i == g - 1:
            moves["alpha%d" % (g - 2), "right"] = yb
            moves["alpha%d_p" % (g - 2), "left"] = ya
            moves["alpha%d" % (g - 1), "left"] = ya
            moves["alpha%d" % (g - 1), "right"] = yb
            cls, left, right = add(a[g - 2], a[g - 1]), yb, ya
        else:
            moves["alpha%d" % (i - 1), "right"] = ya
            moves["alpha%d_p" % (i - 1), "left"] = yb
            moves["alpha%d" % i, "left"] = ya
            moves["alpha%d_p" % i, "right"] = yb
            cls, left, right = add(a[i - 1], scale(-1, a[i])), ya, yb
        eps_curves.append(make_curve("eps%d" % i, cls, left, right, "epsilon"))

    comps = []
    for comp in n_graph.components:
        idx = int(comp.id[1:])
        if idx in positions:
            comps.append(Component("Y%da" % idx, 0, 3))
            comps.append(Component("Y%db" % idx, 0, 3))
        else:
            comps.append(comp)
    curves = []
    for c in n_graph.curves:
        left = moves.get((c.id, "left"), c.left)
        right = moves.get((c.id, "right"), c.right)
        curves.append(make_curve(c.id, c.cls, left, right, c.role))
    curves.extend(eps_curves)
    top = DecompGraph(g, comps, curves)

    mem = check_M_membership(top, x)
    if not mem.ok:
        raise CartanLerayError(
            "star multicurve fails membership: %s"
            % "; ".join(item.name for item in mem.failures())
        )
    poly = build_cell(top, x)

    records = []
    for face in poly.faces:
        sub = submulticurve(top, face.curves)
        inv = multicurve_invariants(sub)
        orbit = "P[%s]" % ",".join(sorted(face.curves))
        if truncated:
            bound = 3 * g - 5 - face.dim - n + inv.bp
            stab = Opaque(bound)
        elif inv.size == face.dim + g and inv.class_rank == g:
            stab = ProductOfFree(
                tuple(("bp:%d" % k, 1) for k in range(inv.bp))
                + tuple(("y:%d" % k, None) for k in range(2 * g - 3 - face.dim))
            )
        else:
            # small-support face: carried by fewer classes than the chain
            # needs, so it cannot contain the distinguished cell and the
            # quotient kills it; only a cd bound travels with it
            stab = Opaque(3 * g - 5 - face.dim)
        records.append((face, orbit, stab, inv.bp))

    col_index = {}
    for d in {face.dim for face, _, _, _ in records}:
        for i, f in enumerate(poly.faces_of_dim(d)):
            col_index[f.curves] = i
    cells = []
    for face, orbit, stab, bp in records:
        boundary = []
        if face.dim > 0 and face.dim in poly.boundaries:
            col = col_index[face.curves]
            facets = poly.faces_of_dim(face.dim - 1)
            mat = poly.boundaries[face.dim]
            for (r, c2), v in mat.entries.items():
                if c2 == col and v:
                    fo = "P[%s]" % ",".join(sorted(facets[r].curves))
                    boundary.append((fo, v, "1"))
        cells.append(CellRecord(face.dim, orbit, stab, boundary,
                                curves=face.curves, bp=bp))
    data = EquivariantCellData("Torelli(%d)" % g, cells)
    pattern = orbit_pattern(top, n_ids, x=x,
                            variant="truncated" if truncated else "full")
    return LocalStar(data, pattern, top, x, n_ids)


# ---------------------------------------------------------------------------
# corner harness


def verify_corner_lemma(n, j, q):
    """Chain-level check of the corner behavior for a torus-times-trivial action.

    (a) the (n,q) page-one entry is free of rank C(j,q) and survives to the
    limit; (b) the total-complex cycle standing for the fundamental class
    times a degree-q stabilizer class has filtration degree exactly n; (c)
    its leading term is the matching basis element of the corner entry.
    Total ranks are cross-checked against the group-ring resolution of the
    full product group, and for small n the run repeats with the reversed
    cube orientation; every page must agree.
    """
    n, j, q = int(n), int(j), int(q)
    if n < 0 or j < 0 or q < 0:
        raise CartanLerayError("parameters must be nonnegative")
    if n + j > 5:
        raise SizeGuardError("corner harness supports n + j <= 5 (got %d)" % (n + j))
    if q > j:
        raise SizeGuardError("stabilizer homology vanishes above j; ask q <= j")

    from .homalg.groupring import FreeAbelianGroup, ProductGroup, group_homology

    report = ValidationReport("corner-lemma(n=%d,j=%d,q=%d)" % (n, j, q))
    data = build_shifted_torus_data(n, j)
    dc = expand_double_complex(data)
    res = run_spectral_sequence(dc)
    s = n + q

    e1 = res.page(1).entry(n, q)
    einf = res.einf_entry(n, q)
    want = comb(j, q)
    report.add(
        "corner_e1_rank",
        e1.free_rank == want and not e1.torsion,
        "rank %d, expected %d" % (e1.free_rank, want),
    )
    report.add(
        "corner_e1_survives",
        einf.free_rank == e1.free_rank and not einf.torsion,
        "limit rank %d" % einf.free_rank,
    )
    grid = assemble_e1(data)
    report.add("closed_form_agrees", grid.rank(n, q) == want)

    total = res.total_entry(s).free_rank
    oracle = group_homology(ProductGroup((FreeAbelianGroup(n), FreeAbelianGroup(j))), s)
    report.add(
        "total_rank_oracle",
        total == comb(n + j, s) == oracle,
        "total %d, binomial %d, resolution %d" % (total, comb(n + j, s), oracle),
    )

    # the unique top orbit is the full axis set; its block basis at q is the
    # lexicographic list of q-subsets of the stabilizer axes
    basis = res.basis(s)
    corner_keys = [key for key in basis if key[0] == n and key[1] == q]
    report.add("corner_block_size", len(corner_keys) == want)
    subsets = list(combinations(range(j), q))
    filt_ok = True
    lead_ok = True
    perturb_ok = True
    detail = ""
    lower_keys = [key for key in basis if key[0] < n]
    for idx, T in enumerate(subsets):
        vec = [0] * len(basis)
        vec[res.basis_index(s, corner_keys[idx])] = 1
        deg = res.filtration_degree(s, vec)
        if deg != n:
            filt_ok = False
            detail = "subset %r sits at filtration %r" % (T, deg)
            break
        coords = res.graded_class(s, n, vec)
        unit = tuple(1 if k == idx else 0 for k in range(want))
        if tuple(coords) != unit:
            lead_ok = False
            detail = "subset %r leads with %r" % (T, tuple(coords))
            break
        if lower_keys:
            vec2 = list(vec)
            vec2[res.basis_index(s, lower_keys[0])] += 1
            if res.filtration_degree(s, vec2) != n:
                perturb_ok = False
                detail = "lower-term perturbation moved the filtration degree"
                break
    report.add("filtration_degree_is_n", filt_ok, detail if not filt_ok else "")
    report.add("leading_term_matches", lead_ok, detail if not lead_ok else "")
    report.add("filtration_ignores_lower_terms", perturb_ok,
               detail if not perturb_ok else "")
    if lower_keys:
        low = [0] * len(basis)
        low[res.basis_index(s, lower_keys[0])] = 1
        deg = res.filtration_degree(s, low)
        report.add("lower_terms_sit_lower", deg is not None and deg < n,
                   "pure lower term at filtration %r" % deg)

    if n <= 3:
        alt = run_spectral_sequence(
            expand_double_complex(build_shifted_torus_data(n, j, orientation="inverse"))
        )
        same = alt.stable_page == res.stable_page
        if same:
            for r in range(1, res.stable_page + 1):
                a = {k: v.free_rank for k, v in res.page(r).entries.items()
                     if not v.is_trivial()}
                b = {k: v.free_rank for k, v in alt.page(r).entries.items()
                     if not v.is_trivial()}
                if a != b:
                    same = False
                    break
        report.add("alternate_resolution_pages_match", same)

    report.data.update({
        "corner_rank": e1.free_rank,
        "total_rank": total,
        "classes_checked": len(subsets),
    })
    return report


__all__ = [
    "CartanLerayError",
    "StabilizerError",
    "PatternError",
    "TruncationPoly",
    "StabilizerClass",
    "Trivial",
    "FreeAbelian",
    "ProductOfFree",
    "Opaque",
    "stab_from_json",
    "CellRecord",
    "EquivariantCellData",
    "expand_double_complex",
    "E1Grid",
    "assemble_e1",
    "e1_matches_expansion",
    "VanishingRegion",
    "StabilityCertificate",
    "certify_stable",
    "OrbitPattern",
    "orbit_pattern",
    "quotient_by_orbit",
    "stabilizer_of_supercell",
    "build_torus_action_data",
    "build_shifted_torus_data",
    "build_local_star_data",
    "LocalStar",
    "verify_corner_lemma",
    "CertifiedReport",
]

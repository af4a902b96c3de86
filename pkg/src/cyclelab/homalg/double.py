"""Double complexes of free Z-modules, their total complexes, and the
assembly of equivariant double complexes from orbit data."""

from __future__ import annotations

from .complexes import ChainComplex
from .intmat import IntMatrix


class DoubleComplex:
    """First-quadrant-style bigraded complex with anticommuting differentials.

    entries: dict (p, q) -> rank.
    dprime (horizontal) at (p, q): IntMatrix of shape (rank(p-1, q), rank(p, q)).
    dsecond (vertical) at (p, q): IntMatrix of shape (rank(p, q-1), rank(p, q)).
    The sign making dprime and dsecond anticommute is baked into dsecond by
    the constructors below.
    """

    __slots__ = ("entries", "dprime", "dsecond", "meta")

    def __init__(self, entries, dprime, dsecond, meta=None):
        self.entries = {k: r for k, r in entries.items() if r}
        self.dprime = {}
        self.dsecond = {}
        self.meta = dict(meta) if meta else {}
        for (p, q), m in dprime.items():
            exp = (self.rank(p - 1, q), self.rank(p, q))
            if m.shape != exp:
                raise ValueError("horizontal differential at (%d,%d) has shape %r,"
                                 " expected %r" % (p, q, m.shape, exp))
            if not m.is_zero():
                self.dprime[p, q] = m
        for (p, q), m in dsecond.items():
            exp = (self.rank(p, q - 1), self.rank(p, q))
            if m.shape != exp:
                raise ValueError("vertical differential at (%d,%d) has shape %r,"
                                 " expected %r" % (p, q, m.shape, exp))
            if not m.is_zero():
                self.dsecond[p, q] = m

    def rank(self, p, q):
        return self.entries.get((p, q), 0)

    def spots(self):
        return sorted(self.entries)

    def hdiff(self, p, q):
        m = self.dprime.get((p, q))
        if m is None:
            return IntMatrix.zero(self.rank(p - 1, q), self.rank(p, q))
        return m

    def vdiff(self, p, q):
        m = self.dsecond.get((p, q))
        if m is None:
            return IntMatrix.zero(self.rank(p, q - 1), self.rank(p, q))
        return m

    def p_range(self):
        ps = [p for p, _ in self.entries]
        return (min(ps), max(ps)) if ps else (0, 0)

    def q_range(self):
        qs = [q for _, q in self.entries]
        return (min(qs), max(qs)) if qs else (0, 0)

    def validate(self):
        """Check dprime^2 = 0, dsecond^2 = 0, and anticommutation."""
        for (p, q) in self.spots():
            hh = self.hdiff(p - 1, q) * self.hdiff(p, q)
            if not hh.is_zero():
                raise ValueError("horizontal d^2 != 0 at (%d,%d)" % (p, q))
            vv = self.vdiff(p, q - 1) * self.vdiff(p, q)
            if not vv.is_zero():
                raise ValueError("vertical d^2 != 0 at (%d,%d)" % (p, q))
            mixed = self.hdiff(p, q - 1) * self.vdiff(p, q) \
                + self.vdiff(p - 1, q) * self.hdiff(p, q)
            if not mixed.is_zero():
                raise ValueError("differentials do not anticommute at (%d,%d)" % (p, q))
        return True

    def shift(self, dp, dq):
        return DoubleComplex(
            {(p + dp, q + dq): r for (p, q), r in self.entries.items()},
            {(p + dp, q + dq): m for (p, q), m in self.dprime.items()},
            {(p + dp, q + dq): m for (p, q), m in self.dsecond.items()},
            meta=self.meta)

    def direct_sum(self, other):
        entries = dict(self.entries)
        for k, r in other.entries.items():
            entries[k] = entries.get(k, 0) + r
        spots = set(entries)
        for (p, q), m in list(other.dprime.items()) + list(other.dsecond.items()):
            spots.add((p, q))
        dprime = {}
        dsecond = {}
        for (p, q) in set(self.entries) | set(other.entries):
            for (store, a, b) in (
                    (dprime, self.hdiff(p, q), other.hdiff(p, q)),
                    (dsecond, self.vdiff(p, q), other.vdiff(p, q))):
                if a.is_zero() and b.is_zero():
                    continue
                ent = dict(a.entries)
                for (i, j), v in b.entries.items():
                    ent[i + a.rows, j + a.cols] = v
                store[p, q] = IntMatrix(a.rows + b.rows, a.cols + b.cols, ent)
        return DoubleComplex(entries, dprime, dsecond)

    def total(self):
        """Total complex with its filtration-ready basis.

        Returns (complex, bases) where bases[s] lists the keys (p, q, i) of
        the degree-s basis sorted by (p, q, i); sorting by p first makes each
        column-filtration stage F_p a basis prefix.
        """
        bases = {}
        for (p, q), r in self.entries.items():
            s = p + q
            bases.setdefault(s, [])
            for i in range(r):
                bases[s].append((p, q, i))
        for s in bases:
            bases[s].sort()
        index = {s: {key: t for t, key in enumerate(keys)}
                 for s, keys in bases.items()}
        ranks = {s: len(keys) for s, keys in bases.items()}
        diffs = {}
        for s, keys in bases.items():
            if s - 1 not in index:
                continue
            tgt = index[s - 1]
            entries = {}
            for col, (p, q, i) in enumerate(keys):
                h = self.hdiff(p, q)
                for r in range(h.rows):
                    v = h[r, i]
                    if v:
                        entries[tgt[(p - 1, q, r)], col] = v
                w = self.vdiff(p, q)
                for r in range(w.rows):
                    v = w[r, i]
                    if v:
                        entries[tgt[(p, q - 1, r)], col] = v
            if entries:
                diffs[s] = IntMatrix(ranks[s - 1], ranks[s], entries)
        return ChainComplex(ranks, diffs), bases


def tensor_complexes(a, b):
    """Double complex A_p (x) B_q with dprime = dA (x) 1 and the vertical
    differential carrying the sign (-1)^p."""
    entries = {}
    for p, ra in a.ranks.items():
        for q, rb in b.ranks.items():
            entries[p, q] = ra * rb
    dprime = {}
    dsecond = {}
    for (p, q) in entries:
        da = a.diff(p)
        if not da.is_zero():
            ent = {}
            rb = b.rank(q)
            for (r, i), v in da.entries.items():
                for j in range(rb):
                    ent[r * rb + j, i * rb + j] = v
            dprime[p, q] = IntMatrix(a.rank(p - 1) * rb, a.rank(p) * rb, ent)
        db = b.diff(q)
        if not db.is_zero():
            sign = -1 if p % 2 else 1
            ent = {}
            ra = a.rank(p)
            rbq = b.rank(q)
            rbq1 = b.rank(q - 1)
            for (r, j), v in db.entries.items():
                for i in range(ra):
                    ent[i * rbq1 + r, i * rbq + j] = sign * v
            dsecond[p, q] = IntMatrix(ra * rbq1, ra * rbq, ent)
    return DoubleComplex(entries, dprime, dsecond)


def tensor_over_group(orbits, module_ranks=None):
    """Equivariant double complex from orbit data with stabilizer reduction.

    orbits: list of records, each providing
      - p: cell degree,
      - stab: an object with block_ranks() -> {q: rank},
        vertical_matrix(q) -> IntMatrix, and
        inclusion_matrix(face_stab, q) -> IntMatrix (this block into the
        face's block; the face stabilizer contains this one),
      - boundary: list of (face_position, coef, elt) where face_position
        indexes into `orbits`, coef is an integer incidence number, and elt
        is an opaque group-element decoration (it acts trivially on the
        reduced blocks, so only coef matters here).

    Each orbit contributes one block per q of rank block_ranks()[q]; the
    bigraded group at (p, q) is the direct sum of the degree-p orbit blocks.
    Horizontal entries are coef * inclusion; vertical entries carry (-1)^p.

    module_ranks, if given, is {q: rank of the full-group resolution R_q as
    a module over the group ring}; the per-(p,q) product orbitcount * that
    rank is recorded in meta["module_block_ranks"] as bookkeeping only (it
    is not the rank of the realized abelian group).
    """
    by_p = {}
    for pos, rec in enumerate(orbits):
        by_p.setdefault(rec.p, []).append(pos)
    for posns in by_p.values():
        posns.sort()
    # block offsets: offset[(p, q, pos)] = start index of that orbit's block
    block_rank = {pos: orbits[pos].stab.block_ranks() for pos in range(len(orbits))}
    entries = {}
    offset = {}
    for p, posns in by_p.items():
        qs = set()
        for pos in posns:
            qs.update(block_rank[pos])
        for q in qs:
            total = 0
            for pos in posns:
                offset[p, q, pos] = total
                total += block_rank[pos].get(q, 0)
            if total:
                entries[p, q] = total
    dprime = {}
    for (p, q), rk in entries.items():
        if (p - 1, q) not in entries:
            continue
        ent = {}
        for pos in by_p.get(p, []):
            src = orbits[pos]
            r_src = block_rank[pos].get(q, 0)
            if not r_src:
                continue
            for (face_pos, coef, _elt) in src.boundary:
                face = orbits[face_pos]
                if face.p != p - 1:
                    raise ValueError("boundary record does not drop degree by one")
                if not coef:
                    continue
                inc = src.stab.inclusion_matrix(face.stab, q)
                if inc.shape != (block_rank[face_pos].get(q, 0), r_src):
                    raise ValueError("inclusion block has wrong shape")
                ro = offset.get((p - 1, q, face_pos))
                co = offset[p, q, pos]
                for (i, j), v in inc.entries.items():
                    key = (ro + i, co + j)
                    ent[key] = ent.get(key, 0) + coef * v
        if ent:
            dprime[p, q] = IntMatrix(entries[p - 1, q], rk, ent)
    dsecond = {}
    for (p, q), rk in entries.items():
        if (p, q - 1) not in entries:
            continue
        sign = -1 if p % 2 else 1
        ent = {}
        for pos in by_p.get(p, []):
            r_src = block_rank[pos].get(q, 0)
            if not r_src:
                continue
            vm = orbits[pos].stab.vertical_matrix(q)
            if vm.shape != (block_rank[pos].get(q - 1, 0), r_src):
                raise ValueError("vertical block has wrong shape")
            ro = offset.get((p, q - 1, pos))
            co = offset[p, q, pos]
            for (i, j), v in vm.entries.items():
                ent[ro + i, co + j] = sign * v
        if ent:
            dsecond[p, q] = IntMatrix(entries[p, q - 1], rk, ent)
    meta = {}
    if module_ranks is not None:
        mbr = {}
        for p, posns in by_p.items():
            for q, r in module_ranks.items():
                if r:
                    mbr["%d,%d" % (p, q)] = len(posns) * r
        meta["module_block_ranks"] = mbr
    dc = DoubleComplex(entries, dprime, dsecond, meta=meta)
    dc.validate()
    return dc

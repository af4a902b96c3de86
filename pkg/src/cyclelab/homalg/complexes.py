"""Finitely generated chain complexes over Z and their exact homology."""

from __future__ import annotations

from .intmat import (
    AbelStructure,
    IntMatrix,
    Subquotient,
    kernel_basis,
    smith_normal_form,
)


class ChainComplex:
    """A bounded chain complex of free Z-modules.

    ranks: dict degree -> rank (missing means 0).
    diffs: dict degree k -> IntMatrix of shape (rank[k-1], rank[k]) sending
    degree-k chains down to degree k-1.  Column-vector convention throughout.
    """

    __slots__ = ("ranks", "diffs")

    def __init__(self, ranks, diffs):
        self.ranks = {k: r for k, r in ranks.items() if r}
        self.diffs = {}
        for k, d in diffs.items():
            exp = (self.rank(k - 1), self.rank(k))
            if d.shape != exp:
                raise ValueError(
                    "differential at degree %d has shape %r, expected %r"
                    % (k, d.shape, exp))
            if not d.is_zero():
                self.diffs[k] = d

    def rank(self, k):
        return self.ranks.get(k, 0)

    def diff(self, k):
        d = self.diffs.get(k)
        if d is None:
            return IntMatrix.zero(self.rank(k - 1), self.rank(k))
        return d

    def degrees(self):
        return sorted(self.ranks)

    def validate(self):
        for k in list(self.diffs):
            dd = self.diff(k) * self.diff(k + 1)
            if not dd.is_zero():
                raise ValueError("d o d != 0 between degrees %d and %d" % (k + 1, k))
        return True

    def homology(self, k):
        """H_k as an AbelStructure, computed exactly."""
        n = self.rank(k)
        if n == 0:
            return AbelStructure(0)
        z_rows = [list(v) for v in kernel_basis(self.diff(k))]
        dk1 = self.diff(k + 1)
        b_rows = [list(dk1.col(j)) for j in range(dk1.cols)]
        return Subquotient(z_rows, b_rows, n).structure()

    def homology_all(self):
        return {k: self.homology(k) for k in self.degrees()}

    def total_rank(self):
        return sum(self.ranks.values())

    def shift(self, s):
        """Same complex with degrees moved up by s."""
        return ChainComplex({k + s: r for k, r in self.ranks.items()},
                            {k + s: d for k, d in self.diffs.items()})

    def direct_sum(self, other):
        ranks = dict(self.ranks)
        for k, r in other.ranks.items():
            ranks[k] = ranks.get(k, 0) + r
        diffs = {}
        lo = min(list(ranks) + [0])
        hi = max(list(ranks) + [0])
        for k in range(lo, hi + 2):
            a = self.diff(k)
            b = other.diff(k)
            if a.is_zero() and b.is_zero():
                continue
            entries = dict(a.entries)
            for (i, j), v in b.entries.items():
                entries[i + a.rows, j + a.cols] = v
            diffs[k] = IntMatrix(a.rows + b.rows, a.cols + b.cols, entries)
        return ChainComplex(ranks, diffs)


class GradedGroup:
    """Graded abelian group: degree -> AbelStructure, trivial elsewhere."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = {k: v for k, v in parts.items() if not v.is_trivial()}

    @classmethod
    def of_complex(cls, c):
        return cls(c.homology_all())

    @classmethod
    def free(cls, ranks):
        return cls({k: AbelStructure(r) for k, r in ranks.items()})

    def structure(self, k):
        return self.parts.get(k, AbelStructure(0))

    def rank(self, k):
        return self.structure(k).free_rank

    def degrees(self):
        return sorted(self.parts)

    def is_torsion_free(self):
        return all(not v.torsion for v in self.parts.values())

    def __eq__(self, other):
        return isinstance(other, GradedGroup) and self.parts == other.parts

    def __repr__(self):
        return "GradedGroup(%r)" % (self.parts,)

    def to_json(self):
        return {str(k): v.to_json() for k, v in sorted(self.parts.items())}


def kunneth_product(ha, hb):
    """Graded group of a product, by free-rank convolution.

    Only torsion-free inputs are supported; torsion is reported as an error
    rather than silently dropped.
    """
    if not ha.is_torsion_free() or not hb.is_torsion_free():
        raise ValueError("torsion inputs are not supported")
    ranks = {}
    for i in ha.degrees():
        for j in hb.degrees():
            s = i + j
            ranks[s] = ranks.get(s, 0) + ha.rank(i) * hb.rank(j)
    return GradedGroup.free(ranks)


def single_generator(degree):
    """The complex with one Z in the given degree."""
    return ChainComplex({degree: 1}, {})


def two_term(degree, m):
    """[Z --m--> Z] concentrated in degrees (degree, degree-1)."""
    return ChainComplex({degree: 1, degree - 1: 1},
                        {degree: IntMatrix.from_rows([[m]])})


def tensor_chain_complexes(a, b):
    """Tensor product of complexes of free modules, with the Koszul sign.

    Basis of degree s: pairs (p, q, i, j) with p + q = s, ordered by
    (p, i, j) ascending.  d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy.
    """
    bases = {}
    lo_a = min(a.ranks) if a.ranks else 0
    hi_a = max(a.ranks) if a.ranks else 0
    lo_b = min(b.ranks) if b.ranks else 0
    hi_b = max(b.ranks) if b.ranks else 0
    for p in range(lo_a, hi_a + 1):
        for q in range(lo_b, hi_b + 1):
            ra, rb = a.rank(p), b.rank(q)
            if ra and rb:
                s = p + q
                bases.setdefault(s, [])
                for i in range(ra):
                    for j in range(rb):
                        bases[s].append((p, q, i, j))
    index = {s: {key: t for t, key in enumerate(keys)} for s, keys in bases.items()}
    ranks = {s: len(keys) for s, keys in bases.items()}
    diffs = {}
    for s, keys in bases.items():
        if s - 1 not in index:
            continue
        entries = {}
        tgt = index[s - 1]
        for col, (p, q, i, j) in enumerate(keys):
            da = a.diff(p)
            for r in range(da.rows):
                v = da[r, i]
                if v:
                    entries[tgt[(p - 1, q, r, j)], col] = v
            db = b.diff(q)
            sign = -1 if p % 2 else 1
            for r in range(db.rows):
                v = db[r, j]
                if v:
                    entries[tgt[(p, q - 1, i, r)], col] = sign * v
        if entries:
            diffs[s] = IntMatrix(ranks[s - 1], ranks[s], entries)
    return ChainComplex(ranks, diffs)

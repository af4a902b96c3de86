"""Group rings and small free resolutions for the group classes we need.

Supported groups: the trivial group, finitely generated free abelian groups,
finitely generated free groups, and finite direct products of these.  Each
group class fixes a hashable normal form for its elements, a resolution of Z
by free modules over the group ring, and the closed-form homology ranks that
the resolutions must reproduce after augmentation.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .complexes import ChainComplex
from .intmat import IntMatrix


class TrivialGroup:
    """The one-element group.  Element normal form: ()."""

    kind = "trivial"

    def identity(self):
        return ()

    def mul(self, a, b):
        return ()

    def inv(self, a):
        return ()

    def generators(self):
        return []

    def homology_rank(self, q):
        return 1 if q == 0 else 0

    def __repr__(self):
        return "TrivialGroup()"


class FreeAbelianGroup:
    """Z^n.  Element normal form: tuple of n ints."""

    kind = "free_abelian"

    def __init__(self, n):
        if n < 0:
            raise ValueError("rank must be nonnegative")
        self.n = n

    def identity(self):
        return (0,) * self.n

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def generators(self):
        return [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]

    def homology_rank(self, q):
        return comb(self.n, q) if 0 <= q <= self.n else 0

    def __repr__(self):
        return "FreeAbelianGroup(%d)" % self.n


def _reduce_word(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class FreeGroup:
    """Free group on m generators.

    Element normal form: reduced word as a tuple of nonzero ints in
    [-m, m]; k means the k-th generator, -k its inverse.
    """

    kind = "free"

    def __init__(self, m):
        if m < 0:
            raise ValueError("rank must be nonnegative")
        self.m = m

    def identity(self):
        return ()

    def mul(self, a, b):
        return _reduce_word(a + b)

    def inv(self, a):
        return tuple(-x for x in reversed(a))

    def generators(self):
        return [(i + 1,) for i in range(self.m)]

    def homology_rank(self, q):
        if q == 0:
            return 1
        if q == 1:
            return self.m
        return 0

    def __repr__(self):
        return "FreeGroup(%d)" % self.m


class ProductGroup:
    """Direct product of factor groups.  Element: tuple of factor elements."""

    kind = "product"

    def __init__(self, factors):
        self.factors = tuple(factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def embed(self, k, elt):
        """Element of factor k viewed inside the product."""
        return tuple(elt if i == k else f.identity()
                     for i, f in enumerate(self.factors))

    def homology_rank(self, q):
        # all supported factors have torsion-free homology, so ranks multiply
        total = {0: 1}
        for f in self.factors:
            new = {}
            d = 0
            while f.homology_rank(d) or d <= 1:
                r = f.homology_rank(d)
                if r:
                    for s, c in total.items():
                        new[s + d] = new.get(s + d, 0) + c * r
                d += 1
                if d > 64:
                    break
            total = new
        return total.get(q, 0)

    def __repr__(self):
        return "ProductGroup(%r)" % (list(self.factors),)


class RingElt:
    """An element of the integral group ring: finite dict element -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for g, c in terms.items():
                if c:
                    self.terms[g] = c

    @classmethod
    def unit(cls, g, c=1):
        return cls({g: c})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        t = dict(self.terms)
        for g, c in other.terms.items():
            t[g] = t.get(g, 0) + c
        return RingElt(t)

    def __neg__(self):
        return RingElt({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return RingElt({g: c * v for g, v in self.terms.items()})

    def mul(self, other, group):
        t = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                k = group.mul(g, h)
                t[k] = t.get(k, 0) + c * d
        return RingElt(t)

    def augment(self):
        return sum(self.terms.values())

    def map_elements(self, fn):
        t = {}
        for g, c in self.terms.items():
            k = fn(g)
            t[k] = t.get(k, 0) + c
        return RingElt(t)

    def __eq__(self, other):
        return isinstance(other, RingElt) and self.terms == other.terms

    def __repr__(self):
        return "RingElt(%r)" % (self.terms,)


class GroupRingComplex:
    """Bounded complex of free modules over a group ring.

    diffs[k] is a dict {(i, j): RingElt} describing the map from degree k
    to degree k-1 in the column-vector convention.
    """

    __slots__ = ("group", "ranks", "diffs")

    def __init__(self, group, ranks, diffs):
        self.group = group
        self.ranks = {k: r for k, r in ranks.items() if r}
        self.diffs = {k: {key: v for key, v in d.items() if not v.is_zero()}
                      for k, d in diffs.items()}
        self.diffs = {k: d for k, d in self.diffs.items() if d}

    def rank(self, k):
        return self.ranks.get(k, 0)

    def validate(self):
        """Check d o d = 0 over the group ring."""
        for k in list(self.diffs):
            upper = self.diffs.get(k + 1)
            lower = self.diffs.get(k)
            if not upper or not lower:
                continue
            prod = {}
            for (l, j), v in upper.items():
                for (i, l2), u in lower.items():
                    if l2 != l:
                        continue
                    key = (i, j)
                    term = u.mul(v, self.group)
                    prod[key] = prod.get(key, RingElt.zero()) + term
            for key, v in prod.items():
                if not v.is_zero():
                    raise ValueError(
                        "d o d != 0 at degrees %d->%d, entry %r" % (k + 1, k - 1, key))
        return True

    def augment(self):
        """Apply the augmentation to every entry: the Z-complex computing
        group homology when this complex is a free resolution of Z."""
        diffs = {}
        for k, d in self.diffs.items():
            entries = {}
            for (i, j), v in d.items():
                a = v.augment()
                if a:
                    entries[i, j] = a
            if entries:
                diffs[k] = IntMatrix(self.rank(k - 1), self.rank(k), entries)
        return ChainComplex(dict(self.ranks), diffs)


def resolution_trivial():
    return GroupRingComplex(TrivialGroup(), {0: 1}, {})


def resolution_free_abelian(n):
    """Cubical (Koszul) resolution of Z over Z[Z^n]: rank C(n, q) at degree q.

    Basis at degree q: q-subsets S of {0..n-1} in lexicographic order.
    d e_S = sum over j in S of (-1)^{pos of j in S} (t_j - 1) e_{S - j}.
    """
    g = FreeAbelianGroup(n)
    gens = g.generators()
    one = g.identity()
    basis = {q: list(combinations(range(n), q)) for q in range(n + 1)}
    index = {q: {S: i for i, S in enumerate(basis[q])} for q in basis}
    ranks = {q: len(basis[q]) for q in basis}
    diffs = {}
    for q in range(1, n + 1):
        d = {}
        for col, S in enumerate(basis[q]):
            for pos, j in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                row = index[q - 1][T]
                elt = RingElt({gens[j]: 1, one: -1})
                if pos % 2:
                    elt = -elt
                key = (row, col)
                d[key] = d.get(key, RingElt.zero()) + elt
        diffs[q] = d
    return GroupRingComplex(g, ranks, diffs)


def resolution_free(m):
    """Two-term resolution of Z over Z[F_m]: d(e_i) = x_i - 1."""
    g = FreeGroup(m)
    one = g.identity()
    diffs = {}
    if m:
        diffs[1] = {(0, i): RingElt({(i + 1,): 1, one: -1}) for i in range(m)}
    return GroupRingComplex(g, {0: 1, 1: m}, diffs)


def tensor_group_ring_complexes(a, b, product=None, embed_a=None, embed_b=None):
    """Tensor of complexes over group rings of groups A, B, yielding a complex
    over the product ring.  embed_a / embed_b map factor elements into the
    product group; by default the product is ProductGroup((A, B)).
    """
    if product is None:
        product = ProductGroup((a.group, b.group))
        embed_a = lambda g: (g, b.group.identity())
        embed_b = lambda h: (a.group.identity(), h)
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
        d = {}
        tgt = index[s - 1]
        for col, (p, q, i, j) in enumerate(keys):
            da = a.diffs.get(p, {})
            for (r, jj), v in da.items():
                if jj != i:
                    continue
                key = (tgt[(p - 1, q, r, j)], col)
                term = v.map_elements(embed_a)
                d[key] = d.get(key, RingElt.zero()) + term
            db = b.diffs.get(q, {})
            for (r, jj), v in db.items():
                if jj != j:
                    continue
                key = (tgt[(p, q - 1, i, r)], col)
                term = v.map_elements(embed_b)
                if p % 2:
                    term = -term
                d[key] = d.get(key, RingElt.zero()) + term
        diffs[s] = d
    return GroupRingComplex(product, ranks, diffs)


def build_resolution(group):
    """Free resolution of Z over the group ring of a supported group."""
    if isinstance(group, TrivialGroup):
        return resolution_trivial()
    if isinstance(group, FreeAbelianGroup):
        return resolution_free_abelian(group.n)
    if isinstance(group, FreeGroup):
        return resolution_free(group.m)
    if isinstance(group, ProductGroup):
        if not group.factors:
            return resolution_trivial()
        res = build_resolution(group.factors[0])
        for k in range(1, len(group.factors)):
            nxt = build_resolution(group.factors[k])
            res = tensor_group_ring_complexes(res, nxt)
        # flatten nested pair elements back to flat product tuples
        if len(group.factors) > 1:
            def flatten(e, depth=len(group.factors) - 1):
                parts = []
                cur = e
                for _ in range(depth):
                    cur, last = cur[0], cur[1]
                    parts.append(last)
                parts.append(cur)
                return tuple(reversed(parts))
            ranks = dict(res.ranks)
            diffs = {k: {key: v.map_elements(flatten) for key, v in d.items()}
                     for k, d in res.diffs.items()}
            return GroupRingComplex(group, ranks, diffs)
        return res
    raise TypeError("no resolution builder for %r" % (group,))


def group_homology(group, q):
    """H_q(group; Z) rank via the resolution, cross-checked against the
    closed form.  All supported groups have torsion-free homology."""
    res = build_resolution(group)
    res.validate()
    aug = res.augment()
    h = aug.homology(q)
    if h.torsion:
        raise AssertionError("unexpected torsion in group homology")
    if h.free_rank != group.homology_rank(q):
        raise AssertionError(
            "resolution homology %d disagrees with closed form %d at q=%d"
            % (h.free_rank, group.homology_rank(q), q))
    return h.free_rank

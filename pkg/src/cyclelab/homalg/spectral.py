"""Spectral sequence of a bounded double complex over Z, computed exactly.

The filtration is by columns: F_p of the total complex is spanned by basis
elements with first coordinate <= p.  Approximate-cycle subgroups

    Z^r_{p,q} = { x in F_p T_{p+q} : D x in F_{p-r} T_{p+q-1} }

are integer kernels; pages are the standard subquotients

    E^r_{p,q} = Z^r_{p,q} / ( Z^{r-1}_{p-1,q+1} + D Z^{r-1}_{p+r-1,q-r+2} )

with the convention Z^{-1}_{a,b} = F_a T_{a+b}.  Every page transition is
re-verified: E^{r+1} must equal the homology of (E^r, d^r) computed on
presentations, and at the end the E-infinity terms must match the associated
graded of the filtration on total homology.  All arithmetic is exact.
"""

from __future__ import annotations

import os

from .intmat import (
    AbelStructure,
    IntMatrix,
    Subquotient,
    kernel_basis,
    solve_integer,
    subgroup_contains,
)

DEFAULT_MAX_RANK = 2000
DEFAULT_MAX_PAGES = 64


class SizeGuardError(RuntimeError):
    """A computation exceeded the configured size caps."""


def rank_limit(override=None):
    """Size cap on any single total degree; CYCLELAB_MAX_RANK overrides."""
    if override is not None:
        return int(override)
    env = os.environ.get("CYCLELAB_MAX_RANK")
    if env:
        return int(env)
    return DEFAULT_MAX_RANK


class SpectralPage:
    """One page: entry structures, differentials, stabilization flag."""

    __slots__ = ("r", "entries", "diffs", "stable")

    def __init__(self, r, entries, diffs, stable):
        self.r = r
        self.entries = entries
        self.diffs = diffs
        self.stable = stable

    def entry(self, p, q):
        return self.entries.get((p, q), AbelStructure(0))

    def nonzero_spots(self):
        return sorted(k for k, v in self.entries.items() if not v.is_trivial())


class SpectralResult:
    """Pages, E-infinity, total homology, and the filtration comparison."""

    def __init__(self, pages, einf, total, filtration, stable_page, bases, dmats, zinf, total_sq):
        self.pages = pages
        self.einf = einf
        self.total = total
        self.filtration = filtration
        self.stable_page = stable_page
        self._bases = bases
        self._dmats = dmats
        self._zinf = zinf
        self._total_sq = total_sq

    def page(self, r):
        return self.pages[r]

    def einf_entry(self, p, q):
        return self.einf.get((p, q), AbelStructure(0))

    def total_entry(self, s):
        return self.total.get(s, AbelStructure(0))

    def basis(self, s):
        return self._bases.get(s, [])

    def basis_index(self, s, key):
        return self._bases.get(s, []).index(key)

    def is_cycle(self, s, vec):
        d = self._dmats.get(s)
        if d is None:
            return True
        return all(v == 0 for v in d.apply(vec))

    def _boundary_cols(self, s):
        d = self._dmats.get(s + 1)
        if d is None:
            return []
        return [d.col(j) for j in range(d.cols)]

    def filtration_degree(self, s, vec):
        """Smallest p with [vec] in the p-th filtration stage of H_s.

        Returns None if vec is not a cycle; returns p_min - 1 when the class
        is zero (vec is a boundary).
        """
        if not self.is_cycle(s, vec):
            return None
        ps = sorted({p for (p, q) in self._zinf if p + q == s})
        if not ps:
            return None
        bcols = self._boundary_cols(s)
        lower = ps[0] - 1
        if subgroup_contains([list(c) for c in bcols], vec):
            return lower
        for p in ps:
            rows = [list(r) for r in self._zinf[p, s - p]] + [list(c) for c in bcols]
            if subgroup_contains(rows, vec):
                return p
        return None

    def graded_class(self, s, p, vec):
        """Coordinates of vec's leading term in the graded piece at (p, s-p).

        vec must be a cycle lying in filtration stage p.  Returns the tuple
        of generator coordinates of the associated-graded subquotient.
        """
        z_rows = [list(r) for r in self._zinf[p, s - p]]
        bcols = [list(c) for c in self._boundary_cols(s)]
        stacked = z_rows + bcols
        if not stacked:
            return None
        A = IntMatrix.from_rows(stacked, len(vec)).transpose()
        sol = solve_integer(A, list(vec))
        if sol is None:
            return None
        zpart = [0] * len(vec)
        for c, row in zip(sol[:len(z_rows)], z_rows):
            if c:
                for t, v in enumerate(row):
                    zpart[t] += c * v
        gq = self._graded_sq(p, s - p)
        if gq is None:
            return ()
        return gq.reduce(zpart)

    def _graded_sq(self, p, q):
        return self._graded.get((p, q))


def _presented_homology(mid_orders, in_cols, out_rows, out_orders):
    """Homology at a presented abelian group: ker(out)/im(in).

    mid_orders: generator orders of the middle group B (0 = free).
    in_cols: incoming map as columns (coordinates in B's generators).
    out_rows: outgoing map as rows over B's generators (target coords), with
    out_orders the target generator orders.
    """
    b = len(mid_orders)
    if b == 0:
        return AbelStructure(0)
    if out_rows:
        t = len(out_orders)
        rel_cols = [[out_orders[i] if r == i else 0 for r in range(t)]
                    for i in range(t) if out_orders[i]]
        cols = [[row[j] for row in out_rows] for j in range(b)] + rel_cols
        G = IntMatrix.from_rows([[col[i] for col in cols] for i in range(t)],
                                len(cols)) if t else IntMatrix.zero(0, len(cols))
        zlat = [k[:b] for k in kernel_basis(G)]
    else:
        zlat = [tuple(int(i == j) for j in range(b)) for i in range(b)]
    b_rows = [list(c) for c in in_cols]
    for i, o in enumerate(mid_orders):
        if o:
            b_rows.append([o if j == i else 0 for j in range(b)])
    return Subquotient([list(z) for z in zlat], b_rows, b).structure()


def run_spectral_sequence(B, max_rank=None, max_pages=None, verify=True):
    """Run the column-filtration spectral sequence of a double complex.

    Returns a SpectralResult.  Raises SizeGuardError when a total degree
    exceeds the rank cap, and AssertionError if any internal consistency
    check fails (page transitions, E-infinity vs filtration).
    """
    limit = rank_limit(max_rank)
    page_cap = DEFAULT_MAX_PAGES if max_pages is None else int(max_pages)
    B.validate()
    T, bases = B.total()
    for s, keys in bases.items():
        if len(keys) > limit:
            raise SizeGuardError(
                "total degree %d has rank %d > cap %d" % (s, len(keys), limit))
    T.validate()

    if not B.entries:
        empty_page = SpectralPage(0, {}, {}, True)
        return SpectralResult([empty_page], {}, {}, {}, 0, {}, {}, {}, {})

    pmin, pmax = B.p_range()
    qmin, qmax = B.q_range()
    spots = B.spots()
    R = min(pmax - pmin, qmax - qmin + 1) + 1
    R = max(R, 1)
    if R + 1 > page_cap:
        raise SizeGuardError("page count %d > cap %d" % (R + 1, page_cap))

    dmats = {s: T.diff(s) for s in list(T.ranks) + [max(T.ranks) + 1]
             if T.rank(s) or T.rank(s - 1)}

    # prefix counts: number of degree-s basis keys with p-coordinate <= p
    prefix = {}
    for s, keys in bases.items():
        counts = {}
        for p in range(pmin - 1, pmax + 1):
            counts[p] = sum(1 for k in keys if k[0] <= p)
        prefix[s] = counts

    def prefix_count(s, p):
        if s not in bases:
            return 0
        if p < pmin - 1:
            return 0
        if p > pmax:
            return len(bases[s])
        return prefix[s][p]

    n_of = {s: len(keys) for s, keys in bases.items()}

    zmemo = {}

    def zgroup(r, p, s):
        """Basis rows of Z^r at column p, total degree s (r = -1 allowed).

        Memo keys collapse to the effective prefix sizes, so distinct (r, p)
        with the same clipped prefixes share one computation.
        """
        n = n_of.get(s, 0)
        if n == 0:
            return ()
        kp = prefix_count(s, p)
        if r < 0:
            key = ("F", kp, s)
            if key not in zmemo:
                zmemo[key] = tuple(
                    tuple(int(j == i) for j in range(n)) for i in range(kp))
            return zmemo[key]
        kq = prefix_count(s - 1, p - r)
        key = ("Z", kp, kq, s)
        if key in zmemo:
            return zmemo[key]
        d = dmats.get(s)
        m = d.rows if d is not None else 0
        rows = []
        for i in range(kp, n):
            rows.append([int(j == i) for j in range(n)])
        if d is not None:
            for i in range(kq, m):
                rows.append([d[i, j] for j in range(n)])
        if rows:
            C = IntMatrix.from_rows(rows, n)
            out = tuple(kernel_basis(C))
        else:
            out = tuple(tuple(int(j == i) for j in range(n)) for i in range(n))
        zmemo[key] = out
        return out

    def apply_d(s, vec):
        d = dmats.get(s)
        if d is None:
            return ()
        return d.apply(vec)

    ememo = {}

    def epage(r, p, q):
        """Subquotient presenting E^r_{p,q}, or None when it is 0-by-default."""
        key = (r, p, q)
        if key in ememo:
            return ememo[key]
        s = p + q
        n = n_of.get(s, 0)
        z = zgroup(r, p, s)
        num_rows = [list(v) for v in z]
        den_rows = [list(v) for v in zgroup(r - 1, p - 1, s)]
        for v in zgroup(r - 1, p + r - 1, s + 1):
            dv = apply_d(s + 1, v)
            if any(dv):
                den_rows.append(list(dv))
        sq = Subquotient(num_rows, den_rows, n) if n else None
        ememo[key] = sq
        return sq

    pages = []
    report_spots = sorted({(p, q) for (p, q) in spots})
    for r in range(R + 1):
        entries = {}
        sqs = {}
        for (p, q) in report_spots:
            sq = epage(r, p, q)
            st = sq.structure() if sq is not None else AbelStructure(0)
            entries[p, q] = st
            sqs[p, q] = sq
        diffs = {}
        for (p, q) in report_spots:
            src = sqs.get((p, q))
            if src is None or not src.gens:
                continue
            tp, tq = p - r, q + r - 1
            tgt = epage(r, tp, tq) if (tp, tq) in entries or n_of.get(tp + tq, 0) else None
            if tgt is None or not tgt.gens:
                continue
            cols = []
            nonzero = False
            for g in src.gens:
                dv = apply_d(p + q, g)
                coords = tgt.reduce(list(dv)) if any(dv) else (0,) * len(tgt.gens)
                if coords is None:
                    raise AssertionError(
                        "page differential image not recognized at r=%d (%d,%d)"
                        % (r, p, q))
                if any(coords):
                    nonzero = True
                cols.append(coords)
            if nonzero:
                diffs[p, q] = {
                    "target": (tp, tq),
                    "columns": [list(c) for c in cols],
                    "source_orders": list(src.orders),
                    "target_orders": list(tgt.orders),
                }
        pages.append(SpectralPage(r, entries, diffs, r >= R))

    if verify:
        for r in range(R):
            cur = pages[r]
            nxt = pages[r + 1]
            for (p, q) in report_spots:
                mid = ememo.get((r, p, q))
                mid_orders = list(mid.orders) if mid is not None else []
                rec_in = cur.diffs.get((p + r, q - r + 1))
                in_cols = []
                if rec_in and rec_in["target"] == (p, q):
                    for col in rec_in["columns"]:
                        in_cols.append(col)
                rec_out = cur.diffs.get((p, q))
                out_rows = []
                out_orders = []
                if rec_out:
                    tgt_sq = ememo.get((r,) + rec_out["target"])
                    out_orders = list(tgt_sq.orders)
                    # columns are indexed by source generators; transpose them
                    out_rows = [[rec_out["columns"][j][i]
                                 for j in range(len(mid_orders))]
                                for i in range(len(out_orders))]
                got = _presented_homology(mid_orders, in_cols, out_rows, out_orders)
                want = nxt.entries[p, q]
                if got != want:
                    raise AssertionError(
                        "page transition mismatch at r=%d (%d,%d): %s vs %s"
                        % (r, p, q, got.describe(), want.describe()))

    einf = dict(pages[R].entries)

    # total homology with its filtration
    total = {}
    total_sq = {}
    zinf = {}
    graded = {}
    filtration = {}
    for s in sorted(bases):
        n = n_of[s]
        d = dmats.get(s)
        ker = kernel_basis(d) if d is not None else \
            [tuple(int(j == i) for j in range(n)) for i in range(n)]
        dnext = dmats.get(s + 1)
        bcols = [list(dnext.col(j)) for j in range(dnext.cols)] if dnext is not None else []
        sq = Subquotient([list(k) for k in ker], bcols, n)
        total[s] = sq.structure()
        total_sq[s] = sq
        for p in range(pmin, pmax + 1):
            q = s - p
            zinf[p, q] = zgroup(p - pmin + 1, p, s)
        for p in range(pmin, pmax + 1):
            q = s - p
            z_rows = [list(v) for v in zinf[p, q]]
            den = [list(v) for v in zinf.get((p - 1, q + 1), ())] if p - 1 >= pmin else []
            # image of D inside F_p: D of everything mapping into the prefix
            w = zgroup(pmax - p, pmax, s + 1)
            for v in w:
                dv = apply_d(s + 1, v)
                if any(dv):
                    den.append(list(dv))
            gsq = Subquotient(z_rows, den, n)
            graded[p, q] = gsq
            filtration[p, q] = gsq.structure()

    # E-infinity must agree with the associated graded, spot by spot
    for (p, q), st in einf.items():
        gr = filtration.get((p, q), AbelStructure(0))
        if st != gr:
            raise AssertionError(
                "E-infinity (%s) and filtration graded (%s) disagree at (%d,%d)"
                % (st.describe(), gr.describe(), p, q))
    for (p, q), gr in filtration.items():
        if (p, q) not in einf and not gr.is_trivial():
            raise AssertionError(
                "filtration graded nonzero at unreported spot (%d,%d)" % (p, q))

    result = SpectralResult(pages, einf, total, filtration, R, bases, dmats,
                            zinf, total_sq)
    result._graded = graded
    return result

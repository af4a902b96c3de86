"""Exact integer linear algebra: sparse matrices, Hermite/Smith forms, lattices.

All arithmetic uses Python's arbitrary-precision integers; rational
elimination uses fractions.Fraction.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class IntMatrix:
    """Sparse integer matrix (dict-of-keys storage), treated as immutable.

    Matrices act on column vectors: an (m, n) matrix maps Z^n -> Z^m.

    >>> A = IntMatrix.from_rows([[2, 4], [6, 8]])
    >>> A.shape
    (2, 2)
    >>> A[1, 0]
    6
    >>> (A * A.identity(2)) == A
    True
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if v:
                    if not (0 <= i < rows and 0 <= j < cols):
                        raise ValueError("entry out of range")
                    self.entries[i, j] = int(v)

    @classmethod
    def from_rows(cls, data, cols=None):
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[i, j] = int(v)
        return cls(rows, cols, entries)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, diag, rows=None, cols=None):
        n = len(diag)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        return cls(rows, cols, {(i, i): d for i, d in enumerate(diag) if d})

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def to_rows(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row(self, i):
        return tuple(self.entries.get((i, j), 0) for j in range(self.cols))

    def col(self, j):
        return tuple(self.entries.get((i, j), 0) for i in range(self.rows))

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         {(j, i): v for (i, j), v in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch in matrix sum")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            entries[k] = entries.get(k, 0) + v
        return IntMatrix(self.rows, self.cols, entries)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntMatrix(self.rows, self.cols,
                         {k: -v for k, v in self.entries.items()})

    def scale(self, c):
        return IntMatrix(self.rows, self.cols,
                         {k: c * v for k, v in self.entries.items()})

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            # group other's entries by row for sparse product
            by_row = {}
            for (i, j), v in other.entries.items():
                by_row.setdefault(i, []).append((j, v))
            entries = {}
            for (i, k), u in self.entries.items():
                for j, v in by_row.get(k, ()):
                    key = (i, j)
                    entries[key] = entries.get(key, 0) + u * v
            return IntMatrix(self.rows, other.cols, entries)
        raise TypeError("use .scale(c) for scalar multiples")

    def apply(self, vec):
        """Matrix times column vector (given as a sequence), returns tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] += v * vec[j]
        return tuple(out)

    def __repr__(self):
        return "IntMatrix.from_rows(%r)" % (self.to_rows(),)


def block_diag(blocks):
    """Direct sum of IntMatrix blocks."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    entries = {}
    ro = co = 0
    for b in blocks:
        for (i, j), v in b.entries.items():
            entries[ro + i, co + j] = v
        ro += b.rows
        co += b.cols
    return IntMatrix(rows, cols, entries)


# ---------------------------------------------------------------------------
# dense helpers (lists of lists of int)

def _xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b == g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def smith_normal_form(A):
    """Smith normal form with transforms: returns (U, D, V), U*A*V == D.

    U and V are unimodular; D is diagonal with d_1 | d_2 | ... and d_i >= 0.
    Pivot selection is the smallest-magnitude nonzero entry of the working
    submatrix, ties broken lexicographically by (row, col), so the output is
    deterministic.

    >>> U, D, V = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> D.to_rows()
    [[2, 0], [0, 4]]
    >>> (U * IntMatrix.from_rows([[2, 4], [6, 8]]) * V) == D
    True
    """
    m, n = A.shape
    M = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def row_add(mat, dst, src, c):
        rd, rs = mat[dst], mat[src]
        for j in range(len(rd)):
            if rs[j]:
                rd[j] += c * rs[j]

    def col_add(mat, dst, src, c):
        for r in mat:
            if r[src]:
                r[dst] += c * r[src]

    def row_swap(mat, a, b):
        mat[a], mat[b] = mat[b], mat[a]

    def col_swap(mat, a, b):
        for r in mat:
            r[a], r[b] = r[b], r[a]

    def row_neg(mat, a):
        mat[a] = [-v for v in mat[a]]

    k = 0
    while k < min(m, n):
        # locate smallest-magnitude nonzero pivot, lexicographic tie-break
        pivot = None
        best = None
        for i in range(k, m):
            Mi = M[i]
            for j in range(k, n):
                v = Mi[j]
                if v:
                    a = abs(v)
                    if best is None or a < best:
                        best = a
                        pivot = (i, j)
                        if a == 1:
                            break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            row_swap(M, k, pi)
            row_swap(U, k, pi)
        if pj != k:
            col_swap(M, k, pj)
            col_swap(V, k, pj)
        if M[k][k] < 0:
            row_neg(M, k)
            row_neg(U, k)
        # clear row and column k; restart if a reduction leaves a remainder
        dirty = False
        p = M[k][k]
        for i in range(k + 1, m):
            if M[i][k]:
                q = M[i][k] // p
                if q:
                    row_add(M, i, k, -q)
                    row_add(U, i, k, -q)
                if M[i][k]:
                    dirty = True
        for j in range(k + 1, n):
            if M[k][j]:
                q = M[k][j] // p
                if q:
                    col_add(M, j, k, -q)
                    col_add(V, j, k, -q)
                if M[k][j]:
                    dirty = True
        if dirty:
            continue
        k += 1

    # enforce the divisibility chain d_i | d_{i+1}
    diag_len = min(m, n)
    changed = True
    while changed:
        changed = False
        for i in range(diag_len - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if a and b and b % a != 0:
                # fold entry (i+1, i+1) into row i, then re-clear the 2x2 block
                row_add(M, i, i + 1, 1)
                row_add(U, i, i + 1, 1)
                g, x, y = _xgcd(a, b)
                # column ops: new col_i = x*col_i + y*col_{i+1}
                ai, bi = a // g, b // g
                for r in (M, V):
                    for row in r:
                        ci, cj = row[i], row[i + 1]
                        row[i] = x * ci + y * cj
                        row[i + 1] = -bi * ci + ai * cj
                # now M[i][i] == g, M[i][i+1] == 0, M[i+1][i] == b
                q = M[i + 1][i] // M[i][i]
                row_add(M, i + 1, i, -q)
                row_add(U, i + 1, i, -q)
                changed = True
        for i in range(diag_len):
            if M[i][i] < 0:
                row_neg(M, i)
                row_neg(U, i)
    D = IntMatrix(m, n, {(i, i): M[i][i] for i in range(diag_len) if M[i][i]})
    return IntMatrix.from_rows(U, m), D, IntMatrix.from_rows(V, n)


def snf_diagonal(A):
    """Just the diagonal entries (elementary divisors, zeros trimmed)."""
    _, D, _ = smith_normal_form(A)
    out = []
    for i in range(min(A.rows, A.cols)):
        d = D[i, i]
        if d:
            out.append(d)
    return out


def hermite_row_form(rows_in, cols=None):
    """Canonical row-style Hermite normal form of the lattice spanned by rows.

    Returns a list of nonzero rows (tuples): echelon shape, positive pivots,
    entries above each pivot reduced into [0, pivot).  The result depends only
    on the row span, so it is a canonical presentation of the subgroup.
    """
    rows = [list(r) for r in rows_in if any(r)]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != cols:
            raise ValueError("ragged rows")
    pivot_row = 0
    for j in range(cols):
        # gcd-reduce entries of column j among rows >= pivot_row
        while True:
            nz = [i for i in range(pivot_row, len(rows)) if rows[i][j]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: (abs(rows[i][j]), i))
            a = nz[0]
            for b in nz[1:]:
                q = rows[b][j] // rows[a][j]
                rows[b] = [x - q * y for x, y in zip(rows[b], rows[a])]
        nz = [i for i in range(pivot_row, len(rows)) if rows[i][j]]
        if not nz:
            continue
        i = nz[0]
        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
        if rows[pivot_row][j] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
        p = rows[pivot_row][j]
        for i in range(pivot_row):
            if rows[i][j]:
                q = rows[i][j] // p
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
    return [tuple(r) for r in rows[:pivot_row] if any(r)]


def rank(A):
    """Rank over Q, by fraction-free elimination."""
    M = [[Fraction(v) for v in row] for row in A.to_rows()]
    m, n = A.shape
    r = 0
    for j in range(n):
        piv = None
        for i in range(r, m):
            if M[i][j]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][j]
        for i in range(r + 1, m):
            if M[i][j]:
                c = M[i][j] / pv
                M[i] = [x - c * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def solve_rational(A, b):
    """One rational solution x of A x = b, or None.  Deterministic."""
    m, n = A.shape
    if len(b) != m:
        raise ValueError("rhs length mismatch")
    M = [[Fraction(v) for v in row] + [Fraction(bv)]
         for row, bv in zip(A.to_rows(), b)]
    pivots = []
    r = 0
    for j in range(n):
        piv = None
        for i in range(r, m):
            if M[i][j]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][j]
        M[r] = [x / pv for x in M[r]]
        for i in range(m):
            if i != r and M[i][j]:
                c = M[i][j]
                M[i] = [x - c * y for x, y in zip(M[i], M[r])]
        pivots.append(j)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, j in enumerate(pivots):
        x[j] = M[i][n]
    return tuple(x)


def solve_integer(A, b):
    """One integer solution x of A x = b, or None."""
    U, D, V = smith_normal_form(A)
    c = U.apply(b)
    y = [0] * A.cols
    for i in range(A.rows):
        d = D[i, i] if i < min(A.rows, A.cols) else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return V.apply(y)


def kernel_basis(A):
    """Basis (list of tuples) of the integer kernel {x : A x = 0}.

    The kernel of an integer matrix is a saturated sublattice, so the basis
    spans it exactly.
    """
    _, D, V = smith_normal_form(A)
    r = 0
    for i in range(min(A.rows, A.cols)):
        if D[i, i]:
            r += 1
    return [V.col(j) for j in range(r, A.cols)]


def inverse_unimodular(A):
    """Exact inverse of a unimodular integer matrix."""
    n = A.rows
    if A.cols != n:
        raise ValueError("not square")
    M = [[Fraction(v) for v in row] for row in A.to_rows()]
    I = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for j in range(n):
        piv = None
        for i in range(j, n):
            if M[i][j]:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        M[j], M[piv] = M[piv], M[j]
        I[j], I[piv] = I[piv], I[j]
        pv = M[j][j]
        M[j] = [x / pv for x in M[j]]
        I[j] = [x / pv for x in I[j]]
        for i in range(n):
            if i != j and M[i][j]:
                c = M[i][j]
                M[i] = [x - c * y for x, y in zip(M[i], M[j])]
                I[i] = [x - c * y for x, y in zip(I[i], I[j])]
    out = []
    for row in I:
        irow = []
        for v in row:
            if v.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(v))
        out.append(irow)
    return IntMatrix.from_rows(out, n)


def determinant(A):
    """Exact determinant (Bareiss fraction-free elimination)."""
    n = A.rows
    if A.cols != n:
        raise ValueError("not square")
    if n == 0:
        return 1
    M = [row[:] for row in A.to_rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            piv = None
            for i in range(k + 1, n):
                if M[i][k]:
                    piv = i
                    break
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# subgroups of Z^n as canonical row lattices

def canonical_rows(rows, ambient):
    return tuple(hermite_row_form(rows, ambient))


def subgroup_sum(rows_a, rows_b, ambient):
    return canonical_rows(list(rows_a) + list(rows_b), ambient)


def subgroup_contains(rows, v):
    """Membership of vector v in the lattice spanned by rows (canonical or not)."""
    if not any(v):
        return True
    if not rows:
        return False
    A = IntMatrix.from_rows([list(r) for r in rows]).transpose()
    return solve_integer(A, list(v)) is not None


def subgroup_le(rows_a, rows_b):
    """Is span(rows_a) a sublattice of span(rows_b)?"""
    return all(subgroup_contains(rows_b, v) for v in rows_a)


class AbelStructure:
    """Isomorphism type of a finitely generated abelian group.

    free_rank copies of Z plus cyclic factors Z/d given by the divisibility
    chain `torsion` (each d > 1, d_i | d_{i+1}).

    >>> AbelStructure(1, (2,)).describe()
    'Z + Z/2'
    """

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank, torsion=()):
        self.free_rank = free_rank
        self.torsion = tuple(torsion)

    def __eq__(self, other):
        return (isinstance(other, AbelStructure)
                and self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def describe(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "AbelStructure(%d, %r)" % (self.free_rank, self.torsion)

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


class Subquotient:
    """A subquotient span(Z)/span(B) of some Z^n, with generator lifts.

    gens[i] is a vector of Z^n whose class has order orders[i] (0 = infinite);
    order-one generators are dropped.  B must be contained in span(Z).
    """

    __slots__ = ("ambient", "z_rows", "b_rows", "gens", "orders")

    def __init__(self, z_rows, b_rows, ambient):
        self.ambient = ambient
        self.z_rows = canonical_rows(z_rows, ambient)
        self.b_rows = canonical_rows(b_rows, ambient)
        k = len(self.z_rows)
        if k == 0:
            self.gens = ()
            self.orders = ()
            return
        Zt = IntMatrix.from_rows([list(r) for r in self.z_rows]).transpose()
        coeffs = []
        for b in self.b_rows:
            lam = solve_rational(Zt, list(b))
            if lam is None:
                raise ValueError("relation subgroup not inside cycle subgroup")
            ilam = []
            for v in lam:
                if v.denominator != 1:
                    raise ValueError("relation subgroup not inside cycle subgroup")
                ilam.append(int(v))
            coeffs.append(ilam)
        X = IntMatrix.from_rows(coeffs, k) if coeffs else IntMatrix.zero(0, k)
        _, D, V = smith_normal_form(X)
        W = inverse_unimodular(V)  # rows of W are the adapted basis coords
        diag = [D[i, i] for i in range(min(X.rows, X.cols))]
        gens = []
        orders = []
        for i in range(k):
            d = diag[i] if i < len(diag) else 0
            if d == 1:
                continue
            coords = W.row(i)
            vec = [0] * ambient
            for c, z in zip(coords, self.z_rows):
                if c:
                    for t, zv in enumerate(z):
                        vec[t] += c * zv
            gens.append(tuple(vec))
            orders.append(d)
        self.gens = tuple(gens)
        self.orders = tuple(orders)

    def structure(self):
        free = sum(1 for o in self.orders if o == 0)
        torsion = tuple(sorted(o for o in self.orders if o > 1))
        return AbelStructure(free, torsion)

    def reduce(self, v):
        """Coordinates of the class of v in terms of gens (mod orders).

        Returns a tuple of ints, or None if v is not in span(Z).
        """
        stack = [list(g) for g in self.gens] + [list(b) for b in self.b_rows]
        if not stack:
            return () if not any(v) else None
        A = IntMatrix.from_rows(stack).transpose()
        sol = solve_integer(A, list(v))
        if sol is None:
            return None
        out = []
        for i, o in enumerate(self.orders):
            c = sol[i]
            if o:
                c %= o
            out.append(c)
        return tuple(out)

    def is_zero_class(self, v):
        r = self.reduce(v)
        return r is not None and all(c == 0 for c in r)


def quotient_structure(z_rows, b_rows, ambient):
    return Subquotient(z_rows, b_rows, ambient).structure()


if __name__ == "__main__":
    import doctest

    doctest.testmod()

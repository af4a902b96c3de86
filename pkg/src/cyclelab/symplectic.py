"""Rank-2g symplectic lattice: pairing, transvections, splittings, shifts.

Vectors are integer tuples of length 2g in the coordinate layout e_i -> 2i,
f_i -> 2i+1, with pairing e_i . f_i = +1.  A splitting is an ordered
orthogonal decomposition of the lattice carrying a distinguished vector x
whose piece in each summand must be nonzero; shifting by an integer vector
and (for the full family) reversing the summand order generate the
equivalence used by orbit_compare and orbit_key.

Everything is exact; no floats.
"""

from math import gcd

from .homalg.intmat import (
    IntMatrix,
    canonical_rows,
    determinant,
    kernel_basis,
    solve_integer,
    subgroup_contains,
    _xgcd,
)
from .reports import ValidationReport


class SymplecticError(ValueError):
    pass


def intersection(u, v):
    """Symplectic pairing of two integer vectors of equal even length."""
    if len(u) != len(v) or len(u) % 2:
        raise SymplecticError("vectors must share an even length")
    total = 0
    for i in range(0, len(u), 2):
        total += u[i] * v[i + 1] - u[i + 1] * v[i]
    return total


def omega_row(u):
    """Row w with w . v (dot product) = intersection(u, v) for every v."""
    out = []
    for i in range(0, len(u), 2):
        out.append(-u[i + 1])
        out.append(u[i])
    return tuple(out)


def basis_e(g, i):
    v = [0] * (2 * g)
    v[2 * i] = 1
    return tuple(v)


def basis_f(g, i):
    v = [0] * (2 * g)
    v[2 * i + 1] = 1
    return tuple(v)


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def scale(c, u):
    return tuple(c * x for x in u)


def transvection(gamma, s):
    """The map c -> c + s * (c . gamma) * gamma.

    Preserves the pairing for every gamma, since gamma . gamma = 0.
    """
    if not any(gamma):
        raise SymplecticError("transvection curve class must be nonzero")

    def apply(c):
        t = s * intersection(c, gamma)
        return tuple(x + t * y for x, y in zip(c, gamma))

    return apply


def is_primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def primitive_part(v):
    """Write v = l * a with l > 0 and a primitive; returns (l, a)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise SymplecticError("zero vector has no primitive part")
    return g, tuple(x // g for x in v)


class SymplecticSpace:
    """Ambient lattice Z^{2g} with the standard pairing."""

    __slots__ = ("genus",)

    def __init__(self, genus):
        if genus < 2:
            raise SymplecticError("genus must be at least 2")
        self.genus = genus

    @property
    def dim(self):
        return 2 * self.genus

    def e(self, i):
        return basis_e(self.genus, i)

    def f(self, i):
        return basis_f(self.genus, i)

    def zero(self):
        return (0,) * self.dim

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and other.genus == self.genus

    def __hash__(self):
        return hash(("SymplecticSpace", self.genus))

    def __repr__(self):
        return "SymplecticSpace(genus=%d)" % self.genus


def standard_names(g):
    """Name table e0..e{g-1}, f0..f{g-1} for the expression parser."""
    names = {}
    for i in range(g):
        names["e%d" % i] = basis_e(g, i)
        names["f%d" % i] = basis_f(g, i)
    return names


def parse_vector(expr, genus, names=None):
    """Parse "e0+2f1-3e2" or a bracketed integer list into a vector.

    Term grammar: optional sign, optional integer coefficient (with optional
    '*'), then a name from the table.  A bare integer times no name is
    rejected; the zero vector is written "0".
    """
    table = standard_names(genus)
    if names:
        table.update(names)
    text = expr.strip()
    if text.startswith("["):
        import json

        try:
            vec = json.loads(text)
        except ValueError as exc:
            raise SymplecticError("bad vector literal: %s" % exc)
        if (
            not isinstance(vec, list)
            or len(vec) != 2 * genus
            or not all(isinstance(x, int) for x in vec)
        ):
            raise SymplecticError("vector literal must be %d integers" % (2 * genus))
        return tuple(vec)
    if text == "0":
        return (0,) * (2 * genus)
    total = [0] * (2 * genus)
    # split keeping signs: normalize "a - b" to "+a-b" then cut before signs
    text = text.replace(" ", "")
    if not text:
        raise SymplecticError("empty vector expression")
    if text[0] not in "+-":
        text = "+" + text
    terms = []
    start = 0
    for i in range(1, len(text) + 1):
        if i == len(text) or text[i] in "+-":
            terms.append(text[start:i])
            start = i
    for term in terms:
        sign = 1 if term[0] == "+" else -1
        body = term[1:]
        if not body:
            raise SymplecticError("dangling sign in %r" % expr)
        digits = ""
        while body and body[0].isdigit():
            digits += body[0]
            body = body[1:]
        if body.startswith("*"):
            body = body[1:]
        coeff = sign * (int(digits) if digits else 1)
        if not body:
            raise SymplecticError("coefficient without a name in %r" % expr)
        if body not in table:
            raise SymplecticError("unknown name %r in %r" % (body, expr))
        vec = table[body]
        for j in range(2 * genus):
            total[j] += coeff * vec[j]
    return tuple(total)


def format_vector(v, genus=None):
    """Inverse-ish of parse_vector using e/f names; "0" for the zero vector."""
    g = genus if genus is not None else len(v) // 2
    parts = []
    for i in range(g):
        for c, name in ((v[2 * i], "e%d" % i), (v[2 * i + 1], "f%d" % i)):
            if not c:
                continue
            if c == 1:
                parts.append("+%s" % name)
            elif c == -1:
                parts.append("-%s" % name)
            else:
                parts.append("%+d%s" % (c, name))
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


class Splitting:
    """Ordered orthogonal decomposition of Z^{2g} with distinguished x.

    family "full": g summands of rank 2, shift vectors of length g-1.
    family "truncated": n summands of rank 2 plus one of rank 2(g-n),
    shift vectors of length n.  Summands are stored as canonical
    Hermite-form row tuples, so equality is plain comparison.
    """

    __slots__ = ("genus", "family", "n", "x", "summands")

    def __init__(self, genus, family, x, summands, n=None):
        if family not in ("full", "truncated"):
            raise SymplecticError("family must be 'full' or 'truncated'")
        if family == "truncated":
            if n is None:
                raise SymplecticError("truncated splitting needs n")
            if not 1 <= n <= genus - 1:
                raise SymplecticError("need 1 <= n <= g-1")
        else:
            n = None
        if genus < 2:
            raise SymplecticError("genus must be at least 2")
        dim = 2 * genus
        if len(x) != dim:
            raise SymplecticError("x has wrong length")
        self.genus = genus
        self.family = family
        self.n = n
        self.x = tuple(int(c) for c in x)
        canon = []
        for rows in summands:
            for r in rows:
                if len(r) != dim:
                    raise SymplecticError("summand generator has wrong length")
            canon.append(canonical_rows([tuple(int(c) for c in r) for r in rows], dim))
        self.summands = tuple(canon)

    @property
    def pieces(self):
        return len(self.summands)

    @property
    def k_length(self):
        """Length of shift vectors acting on this splitting."""
        return self.genus - 1 if self.family == "full" else self.n

    def __eq__(self, other):
        return (
            isinstance(other, Splitting)
            and self.genus == other.genus
            and self.family == other.family
            and self.n == other.n
            and self.x == other.x
            and self.summands == other.summands
        )

    def __hash__(self):
        return hash((self.genus, self.family, self.n, self.x, self.summands))

    def __repr__(self):
        tag = self.family if self.family == "full" else "truncated n=%d" % self.n
        return "Splitting(g=%d, %s, %d pieces)" % (self.genus, tag, self.pieces)


def standard_splitting(g):
    """U_i spanned by e_i, f_i with x the sum of the e_i."""
    x = tuple(1 if j % 2 == 0 else 0 for j in range(2 * g))
    summands = [[basis_e(g, i), basis_f(g, i)] for i in range(g)]
    return Splitting(g, "full", x, summands)


def standard_truncated(g, n):
    """First n standard rank-2 summands; the rest lumped into one piece."""
    x = [0] * (2 * g)
    for i in range(n + 1):
        x[2 * i] = 1
    head = [[basis_e(g, i), basis_f(g, i)] for i in range(n)]
    tail = []
    for i in range(n, g):
        tail.append(basis_e(g, i))
        tail.append(basis_f(g, i))
    return Splitting(g, "truncated", tuple(x), head + [tail], n=n)


def _expected_ranks(s):
    if s.family == "full":
        return [2] * s.genus
    return [2] * s.n + [2 * (s.genus - s.n)]


def _xgcd_list(vals):
    """gcd of vals together with integer coefficients achieving it."""
    g, coeffs = 0, [0] * len(vals)
    for i, v in enumerate(vals):
        if g == 0:
            if v:
                g = abs(v)
                coeffs = [0] * len(vals)
                coeffs[i] = 1 if v > 0 else -1
            continue
        d, p, q = _xgcd(g, v)
        coeffs = [p * c for c in coeffs]
        coeffs[i] += q
        g = d
    return g, coeffs


def analyze_splitting(s):
    """Derived data of a valid splitting; raises SymplecticError if invalid.

    Returns a dict with x_parts, l (positive ints), a (primitive classes),
    b (canonical duals with a_i . b_i = 1, one per rank-2 summand, plus a
    dual inside the last truncated piece).
    """
    report = validate_splitting(s)
    if not report.ok:
        raise SymplecticError(
            "invalid splitting: " + "; ".join(i.name for i in report.failures())
        )
    return report.data


def validate_splitting(s):
    """Check orthogonality, direct sum, rank pattern, nonzero pieces of x."""
    report = ValidationReport("splitting g=%d %s" % (s.genus, s.family))
    dim = 2 * s.genus

    expected = _expected_ranks(s)
    rank_ok = len(s.summands) == len(expected) and all(
        len(rows) == r for rows, r in zip(s.summands, expected)
    )
    report.add(
        "rank_pattern",
        rank_ok,
        "got %s, want %s" % ([len(r) for r in s.summands], expected),
    )

    ortho_ok = True
    bad = None
    for i in range(len(s.summands)):
        for j in range(i + 1, len(s.summands)):
            for u in s.summands[i]:
                for v in s.summands[j]:
                    if intersection(u, v):
                        ortho_ok = False
                        bad = (i, j)
    report.add("orthogonal", ortho_ok, "" if ortho_ok else "summands %s pair nonzero" % (bad,))

    gens = [r for rows in s.summands for r in rows]
    direct = len(gens) == dim
    if direct:
        M = IntMatrix.from_rows([list(r) for r in gens])
        direct = determinant(M) in (1, -1)
    report.add("direct_sum", direct, "generators must form a lattice basis")

    if not (rank_ok and ortho_ok and direct):
        return report

    # decompose x: columns are the generators, grouped per summand
    cols = IntMatrix.from_rows([list(r) for r in gens]).transpose()
    sol = solve_integer(cols, list(s.x))
    x_parts = []
    pos = 0
    for rows in s.summands:
        part = (0,) * dim
        for r in rows:
            part = add(part, scale(sol[pos], r))
            pos += 1
        x_parts.append(part)
    nz = [any(p) for p in x_parts]
    report.add(
        "nonzero_pieces",
        all(nz),
        "" if all(nz) else "zero piece at %s" % [i for i, b in enumerate(nz) if not b],
    )
    if not all(nz):
        return report

    l_list, a_list = [], []
    for part in x_parts:
        l, a = primitive_part(part)
        l_list.append(l)
        a_list.append(a)

    b_list = []
    dual_ok = True
    for idx, rows in enumerate(s.summands):
        a = a_list[idx]
        pair = [intersection(a, r) for r in rows]
        g, coeffs = _xgcd_list(pair)
        if g != 1:
            dual_ok = False
            b_list.append(None)
            continue
        b = (0,) * dim
        for c, r in zip(coeffs, rows):
            b = add(b, scale(c, r))
        b_list.append(b)
    report.add("unimodular_pieces", dual_ok, "each piece must pair its class to 1")

    report.data["x_parts"] = x_parts
    report.data["l"] = l_list
    report.data["a"] = a_list
    report.data["b"] = b_list
    return report


def _orthogonal_complement(rows, dim):
    if not rows:
        return canonical_rows([], dim)
    M = IntMatrix.from_rows([list(omega_row(r)) for r in rows])
    return canonical_rows(kernel_basis(M), dim)


def shift(s, k):
    """Shift a splitting by the integer vector k (length g-1 or n)."""
    data = analyze_splitting(s)
    k = tuple(int(c) for c in k)
    if len(k) != s.k_length:
        raise SymplecticError("k must have length %d" % s.k_length)
    a, b = data["a"], data["b"]
    dim = 2 * s.genus
    last = s.pieces - 1
    new_summands = []
    for i in range(last):
        nb = b[i]
        if i == 0:
            nb = add(nb, scale(k[0], a[1]))
        else:
            nb = add(nb, scale(k[i - 1], a[i - 1]))
            nb = add(nb, scale(k[i], a[i + 1]))
        new_summands.append([a[i], nb])
    if s.family == "full":
        nb = add(b[last], scale(k[last - 1], a[last - 1]))
        new_summands.append([a[last], nb])
    else:
        flat = [r for rows in new_summands for r in rows]
        new_summands.append(list(_orthogonal_complement(flat, dim)))
    return Splitting(s.genus, s.family, s.x, new_summands, n=s.n)


def reverse(s):
    """Reverse the summand order; defined for the full family only."""
    if s.family != "full":
        raise SymplecticError("reversal applies to the full family only")
    return Splitting(s.genus, "full", s.x, [list(r) for r in reversed(s.summands)])


def reverse_k(k):
    return tuple(reversed(k))


def _dual_functionals(a_list, dim):
    """Vectors w_j with a_i . w_j = (i == j), for j = 1..len-1.

    Computed from the class sequence alone via the deterministic integer
    solver, so every splitting with the same classes gets the same w_j.
    """
    M = IntMatrix.from_rows([list(omega_row(a)) for a in a_list])
    out = []
    for j in range(1, len(a_list)):
        rhs = [1 if i == j else 0 for i in range(len(a_list))]
        w = solve_integer(M, rhs)
        if w is None:
            raise SymplecticError("class sequence admits no dual functional")
        out.append(w)
    return out


def _m_values(data, duals):
    """m_j = b_{j-1} . w_j; shifting by k adds k_j to m_j."""
    b = data["b"]
    return tuple(intersection(b[j], duals[j]) for j in range(len(duals)))


class MatchResult:
    """Outcome of orbit_compare: either no match or (k, reversed)."""

    __slots__ = ("matched", "k", "reversed")

    def __init__(self, matched, k=None, reversed_flag=False):
        self.matched = matched
        self.k = k
        self.reversed = reversed_flag

    @classmethod
    def no_match(cls):
        return cls(False)

    def __bool__(self):
        return self.matched

    def __eq__(self, other):
        return (
            isinstance(other, MatchResult)
            and (self.matched, self.k, self.reversed)
            == (other.matched, other.k, other.reversed)
        )

    def __repr__(self):
        if not self.matched:
            return "NoMatch"
        return "Match(k=%s, reversed=%s)" % (self.k, self.reversed)


def _try_align(u, v, du, dv):
    """k with shift(u, k) == v, assuming equal class sequences; else None."""
    if du["a"] != dv["a"]:
        return None
    duals = _dual_functionals(du["a"], 2 * u.genus)
    k = tuple(m_v - m_u for m_u, m_v in zip(_m_values(du, duals), _m_values(dv, duals)))
    if shift(u, k) == v:
        return k
    return None


def orbit_compare(u, v):
    """Decide whether v is a shift (or reversed shift) of u."""
    if (u.genus, u.family, u.n) != (v.genus, v.family, v.n) or u.x != v.x:
        return MatchResult.no_match()
    du = analyze_splitting(u)
    dv = analyze_splitting(v)
    k = _try_align(u, v, du, dv)
    if k is not None:
        return MatchResult(True, k, False)
    if u.family == "full":
        r = reverse(u)
        dr = analyze_splitting(r)
        k = _try_align(r, v, dr, dv)
        if k is not None:
            return MatchResult(True, k, True)
    return MatchResult.no_match()


def _encode(s):
    return (s.family, s.genus, s.n, s.x, s.summands)


def orbit_key(s):
    """Canonical key shared by exactly the splittings in one shift orbit.

    Normalizes the m-functional values to zero; the full family also folds
    in the reversed representative and keeps the lexicographically smaller
    encoding.
    """
    data = analyze_splitting(s)
    duals = _dual_functionals(data["a"], 2 * s.genus)
    m = _m_values(data, duals)
    key = _encode(shift(s, tuple(-c for c in m)))
    if s.family == "full":
        r = reverse(s)
        dr = analyze_splitting(r)
        duals_r = _dual_functionals(dr["a"], 2 * s.genus)
        mr = _m_values(dr, duals_r)
        key_r = _encode(shift(r, tuple(-c for c in mr)))
        key = min(key, key_r)
    return key


def splitting_to_json(s):
    out = {
        "genus": s.genus,
        "family": s.family,
        "x": list(s.x),
        "summands": [[list(r) for r in rows] for rows in s.summands],
    }
    if s.family == "truncated":
        out["n"] = s.n
    return out


def splitting_from_json(d):
    try:
        genus = int(d["genus"])
        family = d["family"]
        x = [int(c) for c in d["x"]]
        summands = [[list(map(int, r)) for r in rows] for rows in d["summands"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SymplecticError("bad splitting record: %s" % exc)
    n = d.get("n")
    return Splitting(genus, family, x, summands, n=None if n is None else int(n))


def splitting_contains(s, v):
    """Index of the summand containing v, or None."""
    for i, rows in enumerate(s.summands):
        if subgroup_contains(rows, v):
            return i
    return None

import random

import pytest

from cyclelab.symplectic import (
    Splitting,
    SymplecticError,
    analyze_splitting,
    basis_e,
    basis_f,
    format_vector,
    intersection,
    is_primitive,
    orbit_compare,
    orbit_key,
    parse_vector,
    primitive_part,
    reverse,
    reverse_k,
    shift,
    splitting_contains,
    splitting_from_json,
    splitting_to_json,
    standard_splitting,
    standard_truncated,
    transvection,
    validate_splitting,
)


def rand_vec(rng, g):
    return tuple(rng.randint(-5, 5) for _ in range(2 * g))


class TestForm:
    def test_standard_pairs(self):
        g = 3
        for i in range(g):
            for j in range(g):
                assert intersection(basis_e(g, i), basis_f(g, j)) == (1 if i == j else 0)
                assert intersection(basis_e(g, i), basis_e(g, j)) == 0
                assert intersection(basis_f(g, i), basis_f(g, j)) == 0

    def test_antisymmetry_and_bilinearity(self):
        rng = random.Random(1)
        for _ in range(200):
            g = rng.randint(2, 4)
            u, v, w = (rand_vec(rng, g) for _ in range(3))
            assert intersection(u, v) == -intersection(v, u)
            uv = tuple(a + b for a, b in zip(u, v))
            assert intersection(uv, w) == intersection(u, w) + intersection(v, w)

    def test_length_mismatch(self):
        with pytest.raises(SymplecticError):
            intersection((1, 0), (1, 0, 0, 0))


class TestTransvection:
    def test_pinned_example(self):
        # c + s*(c . gamma)*gamma with gamma = e0: f0 pairs to -1
        g = 2
        t = transvection(basis_e(g, 0), 1)
        assert t(basis_f(g, 0)) == (-1, 1, 0, 0)
        assert t(basis_e(g, 0)) == basis_e(g, 0)
        assert t(basis_e(g, 1)) == basis_e(g, 1)

    def test_preserves_form(self):
        rng = random.Random(2)
        for _ in range(300):
            g = rng.randint(2, 4)
            gamma = rand_vec(rng, g)
            t = transvection(gamma, rng.choice((-2, -1, 1, 2)))
            u, v = rand_vec(rng, g), rand_vec(rng, g)
            assert intersection(t(u), t(v)) == intersection(u, v)

    def test_inverse_power(self):
        g = 3
        rng = random.Random(3)
        gamma = rand_vec(rng, g)
        fwd = transvection(gamma, 2)
        back = transvection(gamma, -2)
        for _ in range(50):
            u = rand_vec(rng, g)
            assert back(fwd(u)) == u


class TestPrimitive:
    def test_values(self):
        assert is_primitive((1, 0, 2, 0))
        assert not is_primitive((2, 0, 2, 0))
        assert primitive_part((4, 0, 6, 0)) == (2, (2, 0, 3, 0))

    def test_zero_rejected(self):
        with pytest.raises(SymplecticError):
            primitive_part((0, 0, 0, 0))


class TestParsing:
    def test_terms(self):
        assert parse_vector("e0+2f1-3e2", 3) == (1, 0, 0, 2, -3, 0)
        assert parse_vector("0", 2) == (0, 0, 0, 0)
        assert parse_vector("[1, 2, 3, 4]", 2) == (1, 2, 3, 4)
        assert parse_vector("2*f0", 2) == (0, 2, 0, 0)

    def test_custom_names(self):
        names = {"x": (1, 0, 1, 0)}
        assert parse_vector("x - e0", 2, names=names) == (0, 0, 1, 0)

    def test_errors(self):
        for bad in ("", "e9", "3", "e0+", "[1,2]"):
            with pytest.raises(SymplecticError):
                parse_vector(bad, 2)

    def test_format_roundtrip(self):
        rng = random.Random(4)
        for _ in range(100):
            g = rng.randint(2, 4)
            v = rand_vec(rng, g)
            assert parse_vector(format_vector(v, g), g) == v


class TestSplitting:
    def test_standard_analysis(self):
        s = standard_splitting(3)
        data = analyze_splitting(s)
        assert data["l"] == [1, 1, 1]
        assert data["a"] == [basis_e(3, i) for i in range(3)]
        for i in range(3):
            assert intersection(data["a"][i], data["b"][i]) == 1

    def test_scaled_parts(self):
        g = 3
        x = tuple(sum(c * e for c, e in zip((2, 3, 5), col))
                  for col in zip(*(basis_e(g, i) for i in range(g))))
        s = Splitting(g, "full", x, [[basis_e(g, i), basis_f(g, i)] for i in range(g)])
        data = analyze_splitting(s)
        assert data["l"] == [2, 3, 5]

    def test_truncated_shape(self):
        s = standard_truncated(5, 2)
        assert s.pieces == 3
        assert s.k_length == 2
        assert validate_splitting(s).ok
        data = analyze_splitting(s)
        assert len(data["a"]) == 3

    def test_invalid_rejected(self):
        g = 2
        # second summand repeats the first: not a direct sum
        s = Splitting(g, "full", (1, 0, 1, 0),
                      [[basis_e(g, 0), basis_f(g, 0)],
                       [basis_e(g, 0), basis_f(g, 0)]])
        rep = validate_splitting(s)
        assert not rep.ok
        with pytest.raises(SymplecticError):
            analyze_splitting(s)

    def test_zero_piece_rejected(self):
        g = 2
        s = Splitting(g, "full", (1, 0, 0, 0),
                      [[basis_e(g, 0), basis_f(g, 0)],
                       [basis_e(g, 1), basis_f(g, 1)]])
        rep = validate_splitting(s)
        assert not rep.ok
        assert not rep.passed("nonzero_pieces")

    def test_ctor_guards(self):
        with pytest.raises(SymplecticError):
            standard_splitting(1)
        with pytest.raises(SymplecticError):
            Splitting(2, "odd", (1, 0, 0, 0), [])
        with pytest.raises(SymplecticError):
            Splitting(3, "truncated", (1,) * 6, [])

    def test_contains_returns_summand_index(self):
        s = standard_splitting(2)
        assert splitting_contains(s, basis_e(2, 0)) == 0
        assert splitting_contains(s, basis_f(2, 1)) == 1
        assert splitting_contains(s, (1, 0, 1, 0)) is None

    def test_json_roundtrip(self):
        for s in (standard_splitting(4), standard_truncated(5, 2)):
            assert splitting_from_json(splitting_to_json(s)) == s


class TestShift:
    def test_definition_oracle(self):
        # first dual gains k_1 copies of the second class; middle ones gain
        # both neighbors; the last gains its left neighbor only
        g = 4
        s = standard_splitting(g)
        k = (2, -1, 3)
        data = analyze_splitting(shift(s, k))
        a = [basis_e(g, i) for i in range(g)]
        b = [basis_f(g, i) for i in range(g)]
        want = [
            tuple(p + 2 * q for p, q in zip(b[0], a[1])),
            tuple(p + 2 * q - r for p, q, r in zip(b[1], a[0], a[2])),
            tuple(p - q + 3 * r for p, q, r in zip(b[2], a[1], a[3])),
            tuple(p + 3 * q for p, q in zip(b[3], a[2])),
        ]
        assert data["b"] == want

    def test_group_laws(self):
        rng = random.Random(5)
        for _ in range(30):
            g = rng.randint(3, 5)
            s = standard_splitting(g)
            k1 = tuple(rng.randint(-3, 3) for _ in range(g - 1))
            k2 = tuple(rng.randint(-3, 3) for _ in range(g - 1))
            assert shift(s, (0,) * (g - 1)) == s
            both = tuple(p + q for p, q in zip(k1, k2))
            assert shift(shift(s, k1), k2) == shift(s, both)
            if any(k1):
                assert shift(s, k1) != s

    def test_reversal_compatibility(self):
        rng = random.Random(6)
        for _ in range(30):
            g = rng.randint(3, 5)
            s = standard_splitting(g)
            k = tuple(rng.randint(-3, 3) for _ in range(g - 1))
            assert reverse(shift(s, k)) == shift(reverse(s), reverse_k(k))

    def test_truncated_shift_keeps_family(self):
        s = standard_truncated(5, 2)
        moved = shift(s, (1, -2))
        assert moved.family == "truncated"
        assert validate_splitting(moved).ok
        assert moved != s

    def test_wrong_length(self):
        with pytest.raises(SymplecticError):
            shift(standard_splitting(3), (1,))

    def test_reverse_truncated_rejected(self):
        with pytest.raises(SymplecticError):
            reverse(standard_truncated(4, 1))


class TestOrbitKey:
    def test_shift_and_reversal_fold(self):
        rng = random.Random(7)
        for _ in range(20):
            g = rng.randint(3, 5)
            s = standard_splitting(g)
            k = tuple(rng.randint(-2, 2) for _ in range(g - 1))
            assert orbit_key(shift(s, k)) == orbit_key(s)
            assert orbit_key(reverse(s)) == orbit_key(s)
            assert orbit_key(reverse(shift(s, k))) == orbit_key(s)

    def test_distinct_for_permuted_summands(self):
        g = 3
        s = standard_splitting(g)
        perm = Splitting(g, "full", s.x,
                         [s.summands[0], s.summands[2], s.summands[1]])
        assert orbit_key(perm) != orbit_key(s)

    def test_orbit_compare_reports_shift(self):
        s = standard_splitting(4)
        k = (1, 0, -2)
        res = orbit_compare(s, shift(s, k))
        assert res.matched
        assert res.k == k
        assert not res.reversed

    def test_orbit_compare_reports_reversal(self):
        s = standard_splitting(4)
        res = orbit_compare(s, reverse(shift(s, (1, 1, 0))))
        assert res.matched
        assert res.reversed

    def test_orbit_compare_unrelated(self):
        s = standard_splitting(3)
        perm = Splitting(3, "full", s.x,
                         [s.summands[0], s.summands[2], s.summands[1]])
        assert not orbit_compare(s, perm)

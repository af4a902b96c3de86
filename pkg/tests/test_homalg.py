import random
from fractions import Fraction
from math import comb

import pytest

from cyclelab.homalg import (
    AbelStructure,
    ChainComplex,
    FreeAbelianGroup,
    FreeGroup,
    IntMatrix,
    ProductGroup,
    build_resolution,
    determinant,
    group_homology,
    hermite_row_form,
    kernel_basis,
    kunneth_product,
    rank,
    run_spectral_sequence,
    single_generator,
    smith_normal_form,
    snf_diagonal,
    solve_integer,
    solve_rational,
    subgroup_contains,
    tensor_chain_complexes,
    two_term,
)
from cyclelab.homalg.complexes import GradedGroup
from cyclelab.homalg.double import tensor_complexes
from cyclelab.homalg.spectral import SizeGuardError

from conftest import random_chain_complex, random_double_complex, random_matrix


def frac_rank(m):
    """Independent rank oracle: Gaussian elimination over Fraction."""
    rows = [[Fraction(v) for v in row] for row in m.to_rows()]
    r = 0
    for j in range(m.cols):
        piv = next((i for i in range(r, m.rows) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(m.rows):
            if i != r and rows[i][j]:
                f = rows[i][j] / rows[r][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


class TestIntMatrix:
    def test_rank_against_fraction_elimination(self):
        rng = random.Random(11)
        for _ in range(200):
            m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            assert rank(m) == frac_rank(m)

    def test_determinant_multiplicative(self):
        rng = random.Random(12)
        for _ in range(100):
            n = rng.randint(1, 4)
            a = random_matrix(rng, n, n, bound=4)
            b = random_matrix(rng, n, n, bound=4)
            assert determinant(a * b) == determinant(a) * determinant(b)

    def test_smith_pinned(self):
        a = IntMatrix.from_rows([[2, 4], [6, 8]])
        u, d, v = smith_normal_form(a)
        assert d.to_rows() == [[2, 0], [0, 4]]
        assert (u * a * v) == d

    def test_smith_properties(self):
        rng = random.Random(13)
        for _ in range(100):
            a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            u, d, v = smith_normal_form(a)
            assert determinant(u) in (1, -1)
            assert determinant(v) in (1, -1)
            assert (u * a * v) == d
            diag = snf_diagonal(a)
            assert all(x > 0 for x in diag)
            for p, q in zip(diag, diag[1:]):
                assert q % p == 0

    def test_kernel(self):
        rng = random.Random(14)
        for _ in range(100):
            a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            ker = kernel_basis(a)
            for k in ker:
                assert all(v == 0 for v in a.apply(list(k)))
            assert len(ker) == a.cols - rank(a)

    def test_solvers(self):
        rng = random.Random(15)
        for _ in range(100):
            a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            x = [rng.randint(-3, 3) for _ in range(a.cols)]
            b = list(a.apply(x))
            xi = solve_integer(a, list(b))
            assert xi is not None
            assert list(a.apply(list(xi))) == b
            xr = solve_rational(a, list(b))
            assert xr is not None
            rows = a.to_rows()
            for i in range(a.rows):
                assert sum(Fraction(rows[i][j]) * xr[j] for j in range(a.cols)) == b[i]

    def test_unsolvable(self):
        a = IntMatrix.from_rows([[2]])
        assert solve_integer(a, [1]) is None
        assert list(solve_rational(a, [1])) == [Fraction(1, 2)]

    def test_hermite_canonical(self):
        rng = random.Random(16)
        for _ in range(50):
            rows = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)]
            h = hermite_row_form(rows, 4)
            # permuting the generators leaves the canonical form unchanged
            assert hermite_row_form(list(reversed(rows)), 4) == h
            for r in rows:
                assert subgroup_contains(h, r)

    def test_subgroup_contains(self):
        gens = [(2, 0), (0, 3)]
        assert subgroup_contains(gens, (4, 3))
        assert not subgroup_contains(gens, (1, 0))


class TestChainComplexes:
    def test_two_term_homology(self):
        c = two_term(1, 3)
        assert c.homology(0) == AbelStructure(0, (3,))
        assert c.homology(1).is_trivial()
        c0 = two_term(1, 0)
        assert c0.homology(0) == AbelStructure(1)
        assert c0.homology(1) == AbelStructure(1)

    def test_circle_tensor_is_torus(self):
        circle = ChainComplex({0: 1, 1: 1}, {})
        t2 = tensor_chain_complexes(circle, circle)
        t2.validate()
        assert [t2.homology(k).free_rank for k in range(3)] == [1, 2, 1]

    def test_tensor_squares_to_zero(self):
        rng = random.Random(17)
        for _ in range(50):
            a = random_chain_complex(rng)
            b = random_chain_complex(rng)
            tensor_chain_complexes(a, b).validate()

    def test_kunneth_matches_tensor(self):
        rng = random.Random(18)
        for _ in range(30):
            # free differentials only, so homology stays torsion-free
            a = ChainComplex({0: rng.randint(1, 2), 1: rng.randint(1, 2)}, {})
            b = ChainComplex({0: rng.randint(1, 2), 2: rng.randint(1, 2)}, {})
            conv = kunneth_product(GradedGroup.of_complex(a), GradedGroup.of_complex(b))
            direct = GradedGroup.of_complex(tensor_chain_complexes(a, b))
            assert conv.parts == direct.parts

    def test_single_generator(self):
        c = single_generator(5)
        assert c.homology(5) == AbelStructure(1)
        assert c.homology(4).is_trivial()


class TestGroupHomology:
    # group_homology returns the free rank (an int) after cross-checking the
    # resolution against the closed form internally

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_free_abelian_is_binomial(self, n):
        g = FreeAbelianGroup(n)
        for q in range(n + 2):
            assert group_homology(g, q) == comb(n, q)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_free_group_two_stage(self, m):
        g = FreeGroup(m)
        assert group_homology(g, 0) == 1
        assert group_homology(g, 1) == m
        assert group_homology(g, 2) == 0

    def test_product_kunneth(self):
        g = ProductGroup([FreeGroup(2), FreeGroup(3)])
        assert [group_homology(g, q) for q in range(4)] == [1, 5, 6, 0]

    def test_mixed_product(self):
        g = ProductGroup([FreeAbelianGroup(2), FreeGroup(2)])
        # H(T^2) convolved with (1, 2): ranks 1, 4, 5, 2
        assert [group_homology(g, q) for q in range(5)] == [1, 4, 5, 2, 0]

    def test_resolution_squares_to_zero(self):
        for grp in (FreeAbelianGroup(2), FreeGroup(2),
                    ProductGroup([FreeAbelianGroup(1), FreeGroup(2)])):
            assert build_resolution(grp).validate()


class TestDoubleAndSpectral:
    def test_tensor_double_anticommutes(self):
        rng = random.Random(19)
        for _ in range(40):
            dc, a, b = random_double_complex(rng)
            for (p, q) in dc.spots():
                lhs = dc.hdiff(p, q - 1) * dc.vdiff(p, q)
                rhs = dc.vdiff(p - 1, q) * dc.hdiff(p, q)
                assert (lhs + rhs).is_zero()

    def test_torus_spectral_totals(self):
        circle = ChainComplex({0: 1, 1: 1}, {})
        dc = tensor_complexes(circle, circle)
        res = run_spectral_sequence(dc)
        assert res.total_entry(0).free_rank == 1
        assert res.total_entry(1).free_rank == 2
        assert res.total_entry(2).free_rank == 1
        assert res.stable_page <= 2

    def test_totals_match_tensor_oracle(self):
        rng = random.Random(20)
        for _ in range(25):
            dc, a, b = random_double_complex(rng)
            res = run_spectral_sequence(dc)
            oracle = tensor_chain_complexes(a, b)
            degrees = set(oracle.degrees()) | set(res.total)
            for s in degrees:
                assert res.total_entry(s) == oracle.homology(s), (
                    "degree %d mismatch" % s
                )

    def test_collapse_killing_differential(self):
        # [Z --1--> Z] tensor a point: d1 kills everything off degree 0
        dc = tensor_complexes(two_term(1, 1), single_generator(0))
        res = run_spectral_sequence(dc)
        assert all(v.is_trivial() for v in res.einf.values())
        assert res.total_entry(0).is_trivial()
        assert res.total_entry(1).is_trivial()

    def test_torsion_total(self):
        dc = tensor_complexes(two_term(1, 2), single_generator(0))
        res = run_spectral_sequence(dc)
        assert res.total_entry(0) == AbelStructure(0, (2,))

    def test_size_guard(self):
        big = ChainComplex({0: 3, 1: 3}, {})
        dc = tensor_complexes(big, big)
        with pytest.raises(SizeGuardError):
            run_spectral_sequence(dc, max_rank=2)

    def test_guard_env_override(self, monkeypatch):
        monkeypatch.setenv("CYCLELAB_MAX_RANK", "1")
        circle = ChainComplex({0: 1, 1: 1}, {})
        dc = tensor_complexes(circle, circle)
        with pytest.raises(SizeGuardError):
            run_spectral_sequence(dc)
        res = run_spectral_sequence(dc, max_rank=100)
        assert res.total_entry(1).free_rank == 2

    def test_filtration_degree_of_corner_class(self):
        circle = ChainComplex({0: 1, 1: 1}, {})
        dc = tensor_complexes(circle, circle)
        res = run_spectral_sequence(dc)
        # degree-2 chain group is rank one: the fundamental class
        assert res.filtration_degree(2, (1,)) == 1
        assert res.graded_class(2, 1, (1,)) is not None

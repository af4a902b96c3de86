"""Stabilizer classes, orbit data, first pages, certificates, corner harness."""

from math import comb

import pytest

from cyclelab.cartan_leray import (
    CartanLerayError,
    CellRecord,
    EquivariantCellData,
    FreeAbelian,
    Opaque,
    PatternError,
    ProductOfFree,
    StabilizerError,
    Trivial,
    TruncationPoly,
    VanishingRegion,
    assemble_e1,
    build_local_star_data,
    build_shifted_torus_data,
    build_torus_action_data,
    certify_stable,
    e1_matches_expansion,
    expand_double_complex,
    orbit_pattern,
    quotient_by_orbit,
    stab_from_json,
    stabilizer_of_supercell,
    verify_corner_lemma,
)
from cyclelab.homalg import run_spectral_sequence
from cyclelab.homalg.spectral import SizeGuardError
from cyclelab.multicurve import build_standard, multicurve_invariants
from cyclelab.symplectic import standard_splitting


class TestTruncationPoly:
    def test_arithmetic(self):
        t = TruncationPoly.var()
        sq = (t + 1) * (t + 1)
        assert sq == TruncationPoly((1, 2, 1))
        assert sq.evaluate(3) == 16
        assert sq.degree == 2
        assert (sq + (-1) * sq).is_zero()

    def test_normalization(self):
        assert TruncationPoly((1, 0, 0)) == TruncationPoly.const(1)
        assert TruncationPoly((1, 0, 0)).degree == 0
        assert TruncationPoly().degree == -1

    def test_str(self):
        t = TruncationPoly.var()
        assert str((t + 1) * (t + 1)) == "t^2 + 2t + 1"
        assert str(TruncationPoly()) == "0"
        assert str(TruncationPoly((-3, -1))) == "-t - 3"

    def test_symbolic_evaluation_needs_t(self):
        assert TruncationPoly.const(7).evaluate() == 7
        with pytest.raises(StabilizerError):
            TruncationPoly.var().evaluate()

    def test_json(self):
        assert TruncationPoly((2, 0, 5)).to_json() == [2, 0, 5]


class TestStabilizerClasses:
    def test_trivial(self):
        s = Trivial()
        assert s.hq_rank(0) == 1
        assert s.hq_rank(1) == 0
        assert s.max_q() == 0
        assert s.contains(Trivial())

    def test_free_abelian_ranks(self):
        s = FreeAbelian(("h0", "h1", "h2"))
        assert [s.hq_rank(q) for q in range(5)] == [1, 3, 3, 1, 0]
        assert s.max_q() == 3
        assert s.block_ranks() == {0: 1, 1: 3, 2: 3, 3: 1}

    def test_free_abelian_int_shorthand(self):
        assert FreeAbelian(2).axes == ("u0", "u1")
        with pytest.raises(CartanLerayError):
            FreeAbelian(("a", "a"))

    def test_free_abelian_containment_keeps_order(self):
        big = FreeAbelian(("a", "b", "c", "d"))
        assert big.contains(FreeAbelian(("a", "c")))
        assert big.contains(FreeAbelian(("b", "c", "d")))
        assert big.contains(Trivial())
        # same labels, wrong order: not an axis-preserving inclusion
        assert not big.contains(FreeAbelian(("c", "a")))
        assert not big.contains(FreeAbelian(("a", "z")))
        assert not FreeAbelian(("a",)).contains(big)

    def test_product_symbolic_ranks(self):
        s = ProductOfFree((("y:0", None), ("y:1", None)))
        t = TruncationPoly.var()
        assert s.hq_poly(0) == TruncationPoly.const(1)
        assert s.hq_poly(1) == t + t
        assert s.hq_poly(2) == t * t
        with pytest.raises(StabilizerError):
            s.hq_rank(1)
        assert s.hq_rank(1, t=4) == 8

    def test_product_concrete_ranks(self):
        # e_q of the ranks (2, 3): 1, 5, 6
        s = ProductOfFree((("u", 2), ("v", 3)))
        assert [s.hq_rank(q) for q in range(4)] == [1, 5, 6, 0]

    def test_product_realize(self):
        s = ProductOfFree((("y:0", None), ("v", 3)))
        r = s.realize(2)
        assert r.factors == (("y:0", 2), ("v", 3))
        with pytest.raises(StabilizerError):
            s.realize()

    def test_product_containment_skips_twist_factors(self):
        face = ProductOfFree((("y:0", None), ("y:1", None), ("y:2", None)))
        cell = ProductOfFree((("bp:0", 1), ("y:0", None), ("y:2", None)))
        assert face.contains(cell)
        assert not face.contains(ProductOfFree((("y:2", None), ("y:0", None))))
        assert not ProductOfFree((("y:0", 1),)).contains(
            ProductOfFree((("y:0", 5),))
        )

    def test_opaque(self):
        s = Opaque(3)
        assert s.vanishes_above(4)
        assert not s.vanishes_above(3)
        with pytest.raises(StabilizerError):
            s.hq_poly(0)

    def test_json_roundtrip(self):
        for s in (
            Trivial(),
            FreeAbelian(("h0", "h1")),
            ProductOfFree((("y:0", None), ("u", 2)), truncation=3),
            Opaque(5),
        ):
            assert stab_from_json(s.to_json()) == s
        with pytest.raises(CartanLerayError):
            stab_from_json({"kind": "mystery"})


class TestCellData:
    def test_duplicate_orbit_rejected(self):
        cells = [
            CellRecord(0, "v", Trivial()),
            CellRecord(0, "v", Trivial()),
        ]
        with pytest.raises(CartanLerayError):
            EquivariantCellData("G", cells)

    def test_boundary_must_drop_degree(self):
        cells = [
            CellRecord(0, "v", Trivial()),
            CellRecord(2, "f", Trivial(), [("v", 1, "1")]),
        ]
        with pytest.raises(CartanLerayError):
            EquivariantCellData("G", cells)

    def test_unknown_face_rejected(self):
        with pytest.raises(CartanLerayError):
            EquivariantCellData("G", [CellRecord(1, "e", Trivial(), [("v", 1, "1")])])

    def test_validate_flags_stabilizer_growth(self):
        # an edge whose stabilizer is larger than its face's cannot induct
        cells = [
            CellRecord(0, "v", FreeAbelian(("h0",))),
            CellRecord(1, "e", FreeAbelian(("h0", "h1")), [("v", 1, "1"), ("v", -1, "t")]),
        ]
        report = EquivariantCellData("G", cells).validate()
        assert not report.passed("face_stabilizers_contain")

    def test_validate_torus_data(self):
        report = build_torus_action_data(3).validate()
        assert report.ok, repr(report)

    def test_json_roundtrip(self):
        data = build_shifted_torus_data(2, 1)
        back = EquivariantCellData.from_json(data.to_json())
        assert back.to_json() == data.to_json()
        assert back.group == data.group


class TestFirstPage:
    def test_torus_grid_is_binomial_row(self):
        # free action: only q=0 survives, with one orbit per cube face
        grid = assemble_e1(build_torus_action_data(3))
        for p in range(4):
            assert grid.rank(p, 0) == comb(3, p)
            assert grid.is_zero(p, 1)

    def test_shifted_grid_is_binomial_product(self):
        grid = assemble_e1(build_shifted_torus_data(2, 2))
        for p in range(3):
            for q in range(3):
                assert grid.rank(p, q) == comb(2, p) * comb(2, q)

    def test_e1_matches_expansion_both_orientations(self):
        for n in (1, 2, 3):
            report = e1_matches_expansion(build_torus_action_data(n))
            assert report.ok, repr(report)
        for orientation in ("standard", "inverse"):
            data = build_shifted_torus_data(2, 1, orientation=orientation)
            assert e1_matches_expansion(data).ok

    def test_bounded_spot_refuses_rank(self):
        data = EquivariantCellData("G", [CellRecord(0, "v", Opaque(2))])
        grid = assemble_e1(data)
        assert grid.status(0, 1) == "bounded"
        with pytest.raises(StabilizerError):
            grid.poly(0, 1)
        with pytest.raises(StabilizerError):
            e1_matches_expansion(data)

    def test_symbolic_grid_evaluates_at_truncation(self):
        stab = ProductOfFree((("y:0", None), ("y:1", None)))
        data = EquivariantCellData("G", [CellRecord(0, "v", stab)])
        grid = assemble_e1(data, truncation=3)
        assert grid.rank(0, 1) == 6
        assert grid.rank(0, 1, t=5) == 10
        assert str(assemble_e1(data).poly(0, 2)) == "t^2"

    def test_grid_json_shape(self):
        grid = assemble_e1(build_torus_action_data(2))
        payload = grid.to_json()
        spots = {(row["p"], row["q"]): row for row in payload["entries"]}
        assert spots[1, 0]["rank"] == 2
        assert grid.p_range() == (0, 2)
        assert grid.q_range() == (0, 0)


class TestVanishingRegion:
    def test_parse_and_contains(self):
        region = VanishingRegion.parse("p<1|p+q>6")
        assert region.contains(0, 3)
        assert region.contains(4, 3)
        assert not region.contains(1, 5)
        assert not region.contains(3, 3)

    def test_parse_variants(self):
        region = VanishingRegion.parse("2p+2q<=6")
        assert region.contains(1, 2)
        assert not region.contains(2, 2)
        assert VanishingRegion.parse("p-q>=0").contains(5, 2)
        assert VanishingRegion.parse("-q>-2").contains(3, 1)

    def test_parse_rejects_noise(self):
        for bad in ("p?3", "3<4", "<=2", "z<1"):
            with pytest.raises(CartanLerayError):
                VanishingRegion.parse(bad)
        # no inequalities at all is the empty region, not an error
        assert VanishingRegion.parse("").is_empty()
        assert not VanishingRegion.parse("").contains(0, 0)

    def test_str_and_json_roundtrip(self):
        region = VanishingRegion.parse("p<1|p+q>6")
        assert VanishingRegion.from_json(region.to_json()).pieces == region.pieces
        assert str(VanishingRegion.parse("q<2")) == "q<=1"


class TestStabilityCertificates:
    def test_certified_entry(self):
        region = VanishingRegion.parse("p<1|p+q>6")
        cert = certify_stable(region, (1, 5))
        assert cert.valid
        assert cert.r_max == max(1, 5 + 1, 1)
        assert len(cert.rows) == cert.r_max
        for row in cert.rows:
            assert row["out_ok"] and row["in_ok"]

    def test_refused_entry_names_first_gap(self):
        region = VanishingRegion.parse("p<1|p+q>6")
        cert = certify_stable(region, (3, 3))
        assert not cert.valid
        gap = cert.first_uncovered
        assert gap["r"] == 1
        p, q = gap["position"]
        assert not region.contains(p, q)
        assert cert.to_json()["valid"] is False

    def test_quadrant_edge_uses_negative_coordinates(self):
        # entry on the p-axis: past r=1 every incoming source sits below it
        cert = certify_stable(VanishingRegion.parse("p<3|p+q>2"), (2, 0))
        assert cert.valid
        assert any("q<0" in row["in_reason"] for row in cert.rows)
        assert "r > 2" in cert.bound_note
        with pytest.raises(CartanLerayError):
            certify_stable(VanishingRegion.parse("p<1"), (-1, 2))

    def test_certificate_matches_numeric_limit(self, rng):
        # the support of a tensor double complex sits in the band
        # {p >= lo, p+q <= top}, so the region p<lo|p+q>top is an honest
        # page-one vanishing statement and the support corner is certified
        from cyclelab.homalg.double import tensor_complexes
        from tests.conftest import random_chain_complex

        for _ in range(10):
            a_cx = random_chain_complex(rng, offset=rng.randint(0, 2))
            b_cx = random_chain_complex(rng)
            lo = min(a_cx.degrees())
            top = max(a_cx.degrees()) + max(b_cx.degrees())
            entry = (lo, top - lo)
            cert = certify_stable(
                VanishingRegion.parse("p<%d|p+q>%d" % (lo, top)), entry
            )
            assert cert.valid
            res = run_spectral_sequence(tensor_complexes(a_cx, b_cx))
            e1 = res.page(1).entry(*entry)
            limit = res.einf_entry(*entry)
            assert limit.free_rank == e1.free_rank
            assert limit.torsion == e1.torsion


class TestOrbitQuotient:
    def test_pattern_members_include_reversal(self):
        s = standard_splitting(3)
        star = build_local_star_data(3)
        pattern = star.pattern
        assert star.n_ids in pattern.members
        # ambient multicurve: chain plus one extra curve per split region
        assert pattern.n_ids == star.n_ids
        assert len(pattern.members) >= 1
        payload = pattern.to_json()
        assert sorted(star.n_ids) == payload["n_ids"]
        del s

    def test_quotient_band_matches_closed_form(self):
        # after the quotient only cells containing the chain survive;
        # the top entries realize C(g-1, q) * t^q at p = g-2
        for g, t in ((3, 3), (4, 2)):
            star = build_local_star_data(g)
            reduced = quotient_by_orbit(star.data, star.pattern)
            grid = assemble_e1(reduced, truncation=t)
            for q in range(g):
                assert grid.rank(g - 2, q) == comb(g - 1, q) * t ** q
            report = e1_matches_expansion(reduced, truncation=2)
            assert report.ok, repr(report)

    def test_quotient_strips_twist_factors(self):
        star = build_local_star_data(3)
        reduced = quotient_by_orbit(star.data, star.pattern)
        assert reduced.group.endswith("/ BP")
        for cell in reduced.cells:
            assert star.n_ids <= cell.curves
            labels = [lab for lab, _ in cell.stab.factors]
            assert not any(lab.startswith("bp:") for lab in labels)

    def test_quotient_requires_curve_payload(self):
        star = build_local_star_data(3)
        bare = EquivariantCellData("G", [CellRecord(0, "v", Trivial())])
        with pytest.raises(CartanLerayError):
            quotient_by_orbit(bare, star.pattern)
        with pytest.raises(PatternError):
            quotient_by_orbit(star.data, object())

    def test_local_star_validates(self):
        star = build_local_star_data(4)
        report = star.data.validate()
        # symbolic stabilizers postpone the expansion check; everything
        # structural must already hold
        assert report.passed("incidence_squares_to_zero")
        assert report.passed("face_stabilizers_contain")
        reduced = quotient_by_orbit(star.data, star.pattern)
        assert reduced.validate(truncation=2).ok

    def test_truncated_star_carries_bounds(self):
        star = build_local_star_data(5, n=2)
        assert all(isinstance(c.stab, Opaque) for c in star.data.cells)
        reduced = quotient_by_orbit(star.data, star.pattern)
        assert all(isinstance(c.stab, Opaque) for c in reduced.cells)

    def test_positions_subset(self):
        # each split region adds one curve, so one dimension to the top cell
        star = build_local_star_data(4, positions=(1,))
        assert max(cell.p for cell in star.data.cells) == (4 - 2) + 1
        assert any(cell.p == 4 - 2 and cell.curves == star.n_ids
                   for cell in star.data.cells)
        with pytest.raises(CartanLerayError):
            build_local_star_data(4, positions=(7,))


class TestSupercellStabilizer:
    def test_standard_family_counts_free_factors(self):
        for g in (3, 4, 5):
            s = standard_splitting(g)
            graph = build_standard("N", s, include_embedded=True)
            n_ids = [c.id for c in graph.curves]
            stab = stabilizer_of_supercell(
                {"kind": "standard", "genus": g}, graph, n_ids
            )
            m = multicurve_invariants(graph).dimension
            assert isinstance(stab, ProductOfFree)
            assert len(stab.factors) == 2 * g - 3 - m
            assert all(rank is None for _, rank in stab.factors)

    def test_truncated_and_general_bounds(self):
        s = standard_splitting(5)
        graph = build_standard("N", s)
        m = multicurve_invariants(graph).dimension
        stab = stabilizer_of_supercell(
            {"kind": "truncated", "genus": 5, "n": 2}, graph, []
        )
        assert isinstance(stab, Opaque)
        assert stab.cd_bound == 3 * 5 - 5 - m - 2
        stab = stabilizer_of_supercell({"kind": "general", "genus": 5}, graph, [])
        assert stab.cd_bound == 3 * 5 - 5 - m - multicurve_invariants(graph).bp

    def test_shape_guards(self):
        s = standard_splitting(3)
        graph = build_standard("Gamma", s)
        with pytest.raises(CartanLerayError):
            stabilizer_of_supercell({"kind": "standard", "genus": 3}, graph, [])
        n_graph = build_standard("N", s)
        with pytest.raises(CartanLerayError):
            stabilizer_of_supercell({"kind": "standard", "genus": 4}, n_graph, [])
        with pytest.raises(CartanLerayError):
            stabilizer_of_supercell(
                {"kind": "standard", "genus": 3}, n_graph, ["ghost"]
            )


class TestCornerHarness:
    def test_small_corner_report(self):
        report = verify_corner_lemma(2, 2, 1)
        assert report.ok, repr(report)
        assert report.passed("corner_e1_rank")
        assert report.passed("filtration_degree_is_n")
        assert report.passed("leading_term_matches")
        assert report.passed("alternate_resolution_pages_match")
        assert report.data["corner_rank"] == comb(2, 1)

    def test_degenerate_corners(self):
        assert verify_corner_lemma(0, 2, 2).ok
        assert verify_corner_lemma(2, 0, 0).ok
        assert verify_corner_lemma(1, 1, 1).ok

    def test_guards(self):
        with pytest.raises(SizeGuardError):
            verify_corner_lemma(4, 2, 1)
        with pytest.raises(SizeGuardError):
            verify_corner_lemma(1, 1, 2)
        with pytest.raises(CartanLerayError):
            verify_corner_lemma(-1, 1, 1)

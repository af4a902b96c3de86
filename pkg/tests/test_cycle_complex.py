from fractions import Fraction

import pytest

from cyclelab.cycle_complex import (
    CycleError,
    OneCycle,
    affine_rank,
    build_cell,
    check_M_membership,
    cube_structure,
    enumerate_basic_cycles,
)
from cyclelab.multicurve import build_standard, graph_from_json
from cyclelab.symplectic import (
    basis_e,
    parse_vector,
    shift,
    standard_splitting,
    standard_truncated,
)


def x_of(s):
    return s.x


class TestOneCycle:
    def test_normalization(self):
        c = OneCycle({"a": 2, "b": 0, "c": Fraction(1, 2)})
        assert c.support == ("a", "c")
        assert not c.integral
        assert c.coeff("b") == 0

    def test_negative_rejected(self):
        with pytest.raises(CycleError):
            OneCycle({"a": -1})

    def test_json(self):
        c = OneCycle({"a": 2, "c": Fraction(1, 2)}, basic=True)
        d = c.to_json()
        assert d["coefficients"] == {"a": 2, "c": [1, 2]}
        assert d["basic"] and not d["integral"]


class TestRemarkFixture:
    """The worked counterexample: five curves, x = a1 + a2 + 2 a3."""

    def x(self, graph):
        return parse_vector("[1, 0, 1, 0, 2, 0]", graph.genus)

    def test_exactly_three_basic_cycles(self, remark_graph):
        cycles = enumerate_basic_cycles(remark_graph, self.x(remark_graph))
        got = {c.key() for c in cycles}
        want = {
            (("c1", "c2", "c3"), (Fraction(1), Fraction(1), Fraction(2))),
            (("c3", "c5"), (Fraction(1), Fraction(1))),
            (("c4", "c5"), (Fraction(1), Fraction(2))),
        }
        # the two combinations named in the source are present, and one more
        # (c3 + c5) exists: the fixture has three basic cycles, not two
        assert got == want

    def test_all_weights_integral(self, remark_graph):
        for c in enumerate_basic_cycles(remark_graph, self.x(remark_graph)):
            assert c.integral and c.basic

    def test_membership_split_verdict(self, remark_graph):
        rep = check_M_membership(remark_graph, self.x(remark_graph))
        assert rep.passed("condition_1_support_cover")
        assert not rep.passed("condition_2_positive_independence")
        wit = rep.data["witness"]
        assert wit == {"c1": 1, "c2": 1, "c4": 1}
        # witness really is a vanishing nonnegative combination
        total = [0] * (2 * remark_graph.genus)
        for cid, w in wit.items():
            assert w > 0
            cls = remark_graph.curve(cid).cls
            total = [t + w * v for t, v in zip(total, cls)]
        assert not any(total)

    def test_cell_refused(self, remark_graph):
        with pytest.raises(CycleError):
            build_cell(remark_graph, self.x(remark_graph))


class TestEnumeration:
    def test_standard_n_vertices(self):
        s = standard_splitting(3)
        graph = build_standard("N", s)
        cycles = enumerate_basic_cycles(graph, s.x)
        # either member of each parallel pair can carry its class
        assert len(cycles) == 2
        for c in cycles:
            assert c.class_sum(graph) == tuple(Fraction(v) for v in s.x)

    def test_wrong_length_rejected(self, remark_graph):
        with pytest.raises(CycleError):
            enumerate_basic_cycles(remark_graph, (1, 0))

    def test_no_solutions(self, remark_graph):
        x = parse_vector("f0", remark_graph.genus)
        assert enumerate_basic_cycles(remark_graph, x) == []

    def test_fractional_solution_rejected(self):
        # a curve of doubled class: the only weighting of x = e0 is 1/2
        d = {
            "genus": 2,
            "components": [{"id": "A", "genus": 1, "punctures": 2}],
            "curves": [
                {"id": "u", "class": [2, 0, 0, 0], "left": "A", "right": "A"}
            ],
        }
        graph = graph_from_json(d)
        with pytest.raises(CycleError):
            enumerate_basic_cycles(graph, (1, 0, 0, 0))
        # the doubled class itself is fine
        assert len(enumerate_basic_cycles(graph, (2, 0, 0, 0))) == 1


class TestCell:
    @pytest.mark.parametrize("g", [3, 4, 5])
    def test_dimension_identity_full(self, g):
        s = standard_splitting(g)
        graph = build_standard("N", s)
        cell = build_cell(graph, s.x)
        assert cell.dimension == g - 2
        assert len(cell.vertices) == 2 ** (g - 2)

    @pytest.mark.parametrize("g,n", [(4, 1), (5, 2)])
    def test_dimension_identity_truncated(self, g, n):
        s = standard_truncated(g, n)
        graph = build_standard("N", s)
        cell = build_cell(graph, s.x)
        assert cell.dimension == n
        assert len(cell.vertices) == 2 ** n

    def test_chain_complex_is_a_point(self):
        s = standard_splitting(4)
        cell = build_cell(build_standard("N", s), s.x)
        cc = cell.chain_complex()
        cc.validate()
        assert cc.homology(0).describe() == "Z"
        for k in range(1, cell.dimension + 1):
            assert cc.homology(k).is_trivial()

    def test_face_counts_are_cubical(self):
        from math import comb

        g = 4
        s = standard_splitting(g)
        cell = build_cell(build_standard("N", s), s.x)
        d = cell.dimension
        for k in range(d + 1):
            assert len(cell.faces_of_dim(k)) == comb(d, k) * 2 ** (d - k)

    def test_affine_rank(self):
        ids = ["a", "b"]
        cycles = [OneCycle({"a": 1}), OneCycle({"b": 1}), OneCycle({"a": 2})]
        assert affine_rank(cycles, ids) == 2
        assert affine_rank(cycles[:1], ids) == 0


class TestCubeChart:
    @pytest.mark.parametrize("g", [3, 4, 5])
    def test_full_chart(self, g):
        s = standard_splitting(g)
        chart = cube_structure(build_standard("N", s), s)
        assert chart.dimension == g - 2
        assert len(chart.axes) == g - 2
        assert len(chart.loop_ids) == 2
        # facets are indexed by axis number starting at one
        for i in range(1, chart.dimension + 1):
            lo = chart.facet(i, 0)
            hi = chart.facet(i, 1)
            assert lo != hi
            assert len(lo) == len(hi) == len(chart.curve_ids) - 1
        assert chart.twists_fix_classes

    def test_axis_pairs_share_class(self):
        g = 4
        s = standard_splitting(g)
        graph = build_standard("N", s)
        chart = cube_structure(graph, s)
        for fwd, bwd in chart.axes:
            assert graph.curve(fwd).cls == graph.curve(bwd).cls

    def test_truncated_chart(self):
        g, n = 5, 2
        s = standard_truncated(g, n)
        chart = cube_structure(build_standard("N", s), s)
        assert chart.dimension == n

    def test_shifted_splitting_still_charts(self):
        g = 4
        s = shift(standard_splitting(g), (1, 0, -1))
        chart = cube_structure(build_standard("N", s), s)
        assert chart.dimension == g - 2
        assert chart.twists_fix_classes

    def test_vertex_map_covers_cube(self):
        g = 4
        s = standard_splitting(g)
        chart = cube_structure(build_standard("N", s), s)
        assert len(chart.vertex_map) == 2 ** chart.dimension

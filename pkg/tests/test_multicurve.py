import pytest

from cyclelab.multicurve import (
    Component,
    DecompGraph,
    MulticurveError,
    build_standard,
    check_conditions,
    empty_multicurve,
    graph_from_json,
    graph_to_json,
    make_curve,
    multicurve_invariants,
    region_members,
    submulticurve,
    validate_graph,
)
from cyclelab.symplectic import (
    basis_e,
    basis_f,
    standard_splitting,
    standard_truncated,
)


class TestGraphBasics:
    def test_remark_fixture_valid(self, remark_graph):
        rep = validate_graph(remark_graph)
        assert rep.ok, repr(rep)

    def test_remark_invariants(self, remark_graph):
        inv = multicurve_invariants(remark_graph)
        assert inv.as_tuple() == (5, 3, 3, 2, 0)

    def test_empty(self):
        g = empty_multicurve(3)
        assert validate_graph(g).ok
        inv = multicurve_invariants(g)
        assert inv.size == 0 and inv.dimension == 0

    def test_json_roundtrip(self, remark_graph):
        assert graph_from_json(graph_to_json(remark_graph)) == remark_graph

    def test_bad_record(self):
        with pytest.raises(MulticurveError):
            graph_from_json({"genus": 3})

    def test_genus_guard(self):
        with pytest.raises(MulticurveError):
            DecompGraph(1, [Component("A", 1, 0)], [])

    def test_unknown_role(self):
        with pytest.raises(MulticurveError):
            make_curve("c", (0, 0, 0, 0), "A", "A", role="zigzag")


class TestValidationFailures:
    def base(self):
        # one nonseparating curve on a genus-2 surface
        return {
            "genus": 2,
            "components": [{"id": "A", "genus": 1, "punctures": 2}],
            "curves": [
                {"id": "u", "class": [1, 0, 0, 0], "left": "A", "right": "A"}
            ],
        }

    def test_base_is_valid(self):
        assert validate_graph(graph_from_json(self.base())).ok

    def test_euler_mismatch(self):
        d = self.base()
        d["components"][0]["genus"] = 0
        rep = validate_graph(graph_from_json(d))
        assert not rep.passed("euler")

    def test_puncture_slots(self):
        d = self.base()
        d["components"][0]["punctures"] = 4
        d["components"][0]["genus"] = 0
        rep = validate_graph(graph_from_json(d))
        assert not rep.passed("puncture_slots")

    def test_boundary_zero(self):
        d = self.base()
        d["components"].append({"id": "B", "genus": 0, "punctures": 2})
        d["curves"] = [
            {"id": "u", "class": [1, 0, 0, 0], "left": "A", "right": "B"},
            {"id": "v", "class": [0, 1, 0, 0], "left": "B", "right": "A"},
        ]
        rep = validate_graph(graph_from_json(d))
        assert not rep.passed("boundary_zero")

    def test_bridge_needs_null_class(self):
        # nonzero-class curve whose removal disconnects the graph
        d = {
            "genus": 2,
            "components": [
                {"id": "A", "genus": 1, "punctures": 1},
                {"id": "B", "genus": 1, "punctures": 1},
            ],
            "curves": [
                {"id": "u", "class": [1, 0, 0, 0], "left": "A", "right": "B"}
            ],
        }
        rep = validate_graph(graph_from_json(d))
        assert not rep.passed("bridge_iff_null")

    def test_duplicate_ids(self):
        d = self.base()
        d["curves"].append(dict(d["curves"][0]))
        rep = validate_graph(graph_from_json(d))
        assert not rep.passed("unique_ids")

    def test_dangling_endpoint(self):
        d = self.base()
        d["curves"][0]["right"] = "ZZ"
        rep = validate_graph(graph_from_json(d))
        assert not rep.passed("endpoints_exist")

    def test_invariants_refuse_invalid(self):
        d = self.base()
        d["components"][0]["genus"] = 0
        with pytest.raises(MulticurveError):
            multicurve_invariants(graph_from_json(d))


class TestStandardN:
    @pytest.mark.parametrize("g", [3, 4, 5, 6])
    def test_full_shape(self, g):
        graph = build_standard("N", standard_splitting(g))
        assert validate_graph(graph).ok
        inv = multicurve_invariants(graph)
        assert inv.size == 2 * g - 2
        assert inv.complement_count == g - 1
        assert inv.class_rank == g
        assert inv.dimension == g - 2

    def test_full_classes(self):
        g = 4
        graph = build_standard("N", standard_splitting(g))
        assert graph.curve("alpha0").cls == basis_e(g, 0)
        assert graph.curve("alpha2").cls == graph.curve("alpha2_p").cls == basis_e(g, 2)
        assert graph.curve("alpha3").cls == basis_e(g, 3)

    @pytest.mark.parametrize("g,n", [(4, 1), (5, 2), (6, 3)])
    def test_truncated_shape(self, g, n):
        graph = build_standard("N", standard_truncated(g, n))
        assert validate_graph(graph).ok
        tail = graph.component("Y%d" % (n + 1))
        assert tail.genus == g - n - 1 and tail.punctures == 2
        inv = multicurve_invariants(graph)
        assert inv.size == 2 * n + 1
        assert inv.complement_count == n + 1

    def test_conditions_pass(self):
        for g in (3, 4, 5):
            s = standard_splitting(g)
            rep = check_conditions(build_standard("N", s), "N", s)
            assert rep.ok, repr(rep)

    def test_truncated_conditions_pass(self):
        s = standard_truncated(5, 2)
        rep = check_conditions(build_standard("N", s), "N", s)
        assert rep.ok, repr(rep)

    def test_conditions_fail_on_tamper(self):
        g = 4
        s = standard_splitting(g)
        graph = build_standard("N", s)
        d = graph_to_json(graph)
        # make the parallel pair run the same way
        for c in d["curves"]:
            if c["id"] == "alpha1_p":
                c["left"], c["right"] = c["right"], c["left"]
        # boundary sums break as well; the orientation check must be the
        # first family condition to fail
        rep = check_conditions(graph_from_json(d), "N", s)
        assert not rep.ok


class TestStandardGamma:
    def test_full_shape(self):
        g = 4
        graph = build_standard("Gamma", standard_splitting(g))
        assert validate_graph(graph).ok
        assert graph.component_ids() == ["X0", "P1", "Q1", "P2", "Q2", "X3"]
        deltas = [c for c in graph.curves if c.role == "delta"]
        assert [c.id for c in deltas] == ["delta1", "delta2", "delta3"]
        assert all(not any(c.cls) for c in deltas)
        assert graph.curve("beta1").cls == graph.curve("beta1_p").cls == basis_f(g, 1)
        assert graph.curve("beta2").cls == basis_f(g, 2)

    def test_full_conditions(self):
        for g in (3, 4, 5):
            s = standard_splitting(g)
            rep = check_conditions(build_standard("Gamma", s), "Gamma", s)
            assert rep.ok, repr(rep)

    def test_truncated_with_boundary(self):
        g, n = 5, 2
        graph = build_standard("Gamma", standard_truncated(g, n))
        assert validate_graph(graph).ok
        w = graph.component("W")
        assert w.genus == g - n - 1 and w.punctures == 1
        assert graph.curve("eps").role == "epsilon"

    def test_truncated_without_boundary(self):
        g, n = 5, 2
        graph = build_standard("Gamma", standard_truncated(g, n), include_embedded=False)
        assert validate_graph(graph).ok
        assert "eps" not in graph.curve_ids()
        assert graph.component("Q2").genus == g - n - 1

    def test_custom_duals_validated(self):
        g = 4
        s = standard_splitting(g)
        with pytest.raises(MulticurveError):
            build_standard("Gamma", s, b=[basis_f(g, 1), basis_e(g, 0)])
        with pytest.raises(MulticurveError):
            build_standard("Gamma", s, b=[basis_f(g, 1)])

    def test_genus_guard(self):
        with pytest.raises(MulticurveError):
            build_standard("Gamma", standard_splitting(2))

    def test_unknown_kind(self):
        with pytest.raises(MulticurveError):
            build_standard("Zeta", standard_splitting(3))


class TestSubmulticurve:
    def test_erase_merges_regions(self):
        g = 4
        graph = build_standard("N", standard_splitting(g))
        keep = [c for c in graph.curve_ids() if c != "alpha1"]
        sub = submulticurve(graph, keep)
        assert validate_graph(sub).ok
        assert len(sub.curves) == len(graph.curves) - 1

    def test_region_membership_tracked(self):
        g = 3
        graph = build_standard("N", standard_splitting(g))
        sub = submulticurve(graph, ["alpha0", "alpha2"])
        merged = [c for c in sub.component_ids() if region_members(c)]
        assert merged, "erasing the middle pair must merge regions"
        members = set()
        for cid in sub.component_ids():
            members.update(region_members(cid) or [cid])
        assert members == set(graph.component_ids())

    def test_unknown_ids_rejected(self):
        graph = build_standard("N", standard_splitting(3))
        with pytest.raises(MulticurveError):
            submulticurve(graph, ["alpha0", "nope"])

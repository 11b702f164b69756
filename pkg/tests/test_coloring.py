"""Exact coloring, composition over modular trees, and the layered colorer."""

import dataclasses

import pytest
from hypothesis import given, settings

from bullchrome.coloring import (
    CHI_CAP,
    ColorAccount,
    Coloring,
    build_layer_decomposition,
    chromatic_number,
    color_bullfree,
    color_nperfect,
    color_perfect,
    color_triangle_free,
    compose_coloring,
    exact_prime_colorer,
    verify_bound,
)
from bullchrome.bounds import power_bound_holds
from bullchrome.errors import CapExceededError, CertificationError, PreconditionError
from bullchrome.graph import Graph, disjoint_union
from bullchrome.modular import modular_decomposition, substitute
from bullchrome.recognition import clique_number, find_bull, is_n_perfect, t_parameter

from conftest import complete_graph, cycle_graph, graph_strategy, graphs_of_order, path_graph
from oracles import brute_chromatic, definitional_perfect, proper_coloring


def account_stages(acc: ColorAccount) -> set[str]:
    out = {acc.stage}
    for child in acc.children:
        out |= account_stages(child)
    return out


class TestColoring:
    def test_verify_accepts_proper(self, c5):
        Coloring((0, 1, 0, 1, 2), 3).verify(c5)

    def test_verify_rejects_wrong_length(self):
        with pytest.raises(CertificationError, match="covers 1 vertices"):
            Coloring((0,), 1).verify(complete_graph(2))

    def test_verify_rejects_color_gap(self):
        g = Graph.from_edges(2, [(0, 1)])
        with pytest.raises(CertificationError, match="not exactly"):
            Coloring((0, 2), 3).verify(g)

    def test_verify_rejects_monochromatic_edge(self):
        g = Graph.from_edges(2, [(0, 1)])
        with pytest.raises(CertificationError, match="monochromatic"):
            Coloring((0, 0), 1).verify(g)

    def test_from_labels_normalizes_by_first_appearance(self):
        g = path_graph(3)
        col = Coloring.from_labels(g, {0: "x", 1: "y", 2: "x"})
        assert col.assignment == (0, 1, 0)
        assert col.count == 2

    def test_from_labels_requires_full_cover(self):
        with pytest.raises(ValueError, match="cover"):
            Coloring.from_labels(complete_graph(2), {0: 0})

    def test_color_classes_partition(self, petersen):
        _, col = chromatic_number(petersen)
        classes = col.color_classes()
        assert len(classes) == col.count
        total = 0
        for mask in classes:
            assert mask and not mask & total
            total |= mask
        assert total == petersen.vertices_mask

    def test_to_json(self):
        assert Coloring((0, 1), 2).to_json() == {"assignment": [0, 1], "count": 2}


class TestChromaticNumber:
    def test_matches_oracle_exhaustively(self):
        for n in range(7):
            for g in graphs_of_order(n):
                count, col = chromatic_number(g)
                assert count == brute_chromatic(g)
                assert col.count == count

    @given(graph_strategy(max_n=8, min_n=1))
    @settings(max_examples=60, deadline=None)
    def test_matches_oracle_random(self, g):
        count, col = chromatic_number(g)
        assert count == brute_chromatic(g)
        assert proper_coloring(g, col.assignment)

    def test_known_values(self, c5, petersen, grotzsch):
        assert chromatic_number(complete_graph(5))[0] == 5
        assert chromatic_number(c5)[0] == 3
        assert chromatic_number(petersen)[0] == 3
        assert chromatic_number(grotzsch)[0] == 4

    def test_empty(self):
        count, col = chromatic_number(Graph(0, ()))
        assert count == 0 and col.assignment == ()

    def test_cap(self):
        big = Graph(CHI_CAP + 1, (0,) * (CHI_CAP + 1))
        with pytest.raises(CapExceededError) as e:
            chromatic_number(big)
        assert e.value.size == CHI_CAP + 1 and e.value.cap == CHI_CAP
        assert chromatic_number(big, cap=CHI_CAP + 1)[0] == 1


class TestColorPerfect:
    def test_exact_on_perfect_graphs(self):
        for n in range(1, 7):
            for g in graphs_of_order(n):
                if not definitional_perfect(g):
                    continue
                col = color_perfect(g)
                col.verify(g)
                assert col.count == clique_number(g)[0]

    def test_rejects_odd_hole(self, c5):
        with pytest.raises(CertificationError, match="not perfect"):
            color_perfect(c5)

    def test_empty(self):
        assert color_perfect(Graph(0, ())).count == 0


class TestColorTriangleFree:
    def test_within_class_bound(self, c5, petersen):
        for g, t in [(c5, 3), (petersen, 3), (cycle_graph(7), 3)]:
            col = color_triangle_free(g, t)
            col.verify(g)
            assert col.count <= t

    def test_class_membership_violation(self, grotzsch):
        # chromatic number 4 refutes membership at t=3
        with pytest.raises(PreconditionError, match="class-membership"):
            color_triangle_free(grotzsch, 3)
        assert color_triangle_free(grotzsch, 4).count == 4

    def test_rejects_triangle(self):
        with pytest.raises(PreconditionError) as e:
            color_triangle_free(complete_graph(3), 5)
        assert e.value.witness == (0, 1, 2)

    def test_edgeless(self):
        assert color_triangle_free(Graph(4, (0,) * 4), 1).count == 1

    def test_empty(self):
        assert color_triangle_free(Graph(0, ()), 1).count == 0


class TestColorAccount:
    def test_budget_ok_recurses(self):
        bad = ColorAccount("inner", 5, 4)
        assert not ColorAccount("outer", 1, 9, children=(bad,)).budget_ok()
        assert ColorAccount("outer", 1, 9).budget_ok()

    def test_to_json_shape(self):
        acc = ColorAccount(
            "outer", 2, 3,
            paper={"bound": "x", "holds": True},
            detail={"r": 1},
            children=(ColorAccount("inner", 1, 1),),
        )
        data = acc.to_json()
        assert data["stage"] == "outer" and data["count"] == 2 and data["budget"] == 3
        assert data["paper"]["holds"] and data["detail"] == {"r": 1}
        assert data["children"][0] == {"stage": "inner", "count": 1, "budget": 1}


class TestComposeColoring:
    def test_doubled_cycle_vertex(self, c5):
        # quotient is the 5-cycle, one child is an edge: palettes add up to
        # 4 even though the graph itself is 3-chromatic
        g = substitute(c5, 0, complete_graph(2))
        col, acc = compose_coloring(modular_decomposition(g))
        col.verify(g)
        assert col.count == 4
        assert acc.stage == "compose_prime" and acc.budget_ok()
        assert chromatic_number(g)[0] == 3

    def test_parallel_shares_palette(self):
        g = disjoint_union(complete_graph(3), complete_graph(3))
        col, acc = compose_coloring(modular_decomposition(g))
        assert col.count == 3 and acc.stage == "compose_parallel"

    def test_series_stacks_palettes(self):
        # complete tripartite: series over three stable pairs
        g = Graph.from_edges(
            6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u % 3 != v % 3]
        )
        col, acc = compose_coloring(modular_decomposition(g))
        assert col.count == 3 and acc.stage == "compose_series"

    def test_series_over_leaves(self):
        col, acc = compose_coloring(modular_decomposition(complete_graph(4)))
        assert col.count == 4 and acc.stage == "compose_series"

    def test_exact_prime_colorer_account(self, c5):
        col, acc = exact_prime_colorer(c5, (0, 1, 2, 3, 4))
        assert col.count == 3 and acc.stage == "prime_exact"

    @given(graph_strategy(max_n=7, min_n=1))
    @settings(max_examples=40, deadline=None)
    def test_proper_and_budgeted(self, g):
        col, acc = compose_coloring(modular_decomposition(g))
        col.verify(g)
        assert acc.budget_ok()
        assert col.count >= chromatic_number(g)[0]

    def test_improper_prime_coloring_surfaces(self, c5):
        def cheat(q, reps):
            return Coloring((0,) * q.n, 1), ColorAccount("cheat", 1, 1)

        with pytest.raises(CertificationError):
            compose_coloring(modular_decomposition(c5), cheat)


class TestLayerDecomposition:
    def test_star_layers(self):
        g = Graph.from_edges(5, [(0, v) for v in range(1, 5)])
        ld = build_layer_decomposition(g, 0)
        ld.validate(g)
        assert ld.layers == (0b00001, 0b11110)
        assert [s for s in ld.families[0] if s] == [0b11110]

    def test_cycle_layers(self):
        g = cycle_graph(6)
        ld = build_layer_decomposition(g, 0)
        ld.validate(g)
        assert ld.layers == (0b000001, 0b100010, 0b010100, 0b001000)
        # propagation pushes the single stable family along the layers
        assert ld.families[1][0] == 0b010100
        assert ld.families[2][0] == 0b001000

    def test_single_vertex(self):
        ld = build_layer_decomposition(Graph(1, (0,)), 0)
        ld.validate(Graph(1, (0,)))
        assert ld.families == ()

    def test_requires_connected(self):
        g = disjoint_union(complete_graph(2), complete_graph(1))
        with pytest.raises(PreconditionError):
            build_layer_decomposition(g, 0)

    def test_requires_perfect_neighborhood(self, c5):
        # wheel: the hub sees the whole 5-cycle
        g = Graph.from_edges(6, list(c5.edges()) + [(5, v) for v in range(5)])
        with pytest.raises(PreconditionError) as e:
            build_layer_decomposition(g, 5)
        assert e.value.witness == (5,)

    def test_validate_catches_tampering(self):
        g = cycle_graph(6)
        ld = build_layer_decomposition(g, 0)
        with pytest.raises(CertificationError):
            dataclasses.replace(ld, root=1).validate(g)
        with pytest.raises(CertificationError):
            dataclasses.replace(ld, layers=ld.layers[::-1]).validate(g)
        broken = (ld.families[0],) + ld.families[:-1]
        with pytest.raises(CertificationError):
            dataclasses.replace(ld, families=broken).validate(g)


def layered_gadget() -> Graph:
    """Connected graph where no vertex has a perfect non-neighborhood side.

    Two far-apart 5-cycles keep every side imperfect, forcing the layered
    route.  Layer 2 holds an uncovered 5-cycle (its quotient is colored as
    triangle-free) and a path on four vertices dominated from layer 1 (its
    quotient is colored as perfect).
    """
    return Graph.from_edges(21, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        (1, 6), (1, 8), (2, 7), (2, 9), (3, 10),
        (4, 11), (11, 16),
        (12, 13), (13, 14), (14, 15),
        (5, 12), (5, 13), (5, 14), (5, 15),
        (16, 17), (17, 18), (18, 19), (19, 20), (20, 16),
    ])


class TestColorNPerfect:
    def test_complete(self):
        col, acc = color_nperfect(complete_graph(4), 2)
        assert col.count == 4 and acc.budget_ok()

    def test_cycle_splits(self, c5):
        col, acc = color_nperfect(c5, 3)
        col.verify(c5)
        assert col.count == 3
        assert acc.stage == "perfect_split"
        assert [c.stage for c in acc.children] == ["components", "perfect_part"]

    def test_layered_route_hits_both_prime_paths(self):
        g = layered_gadget()
        assert find_bull(g) is None and is_n_perfect(g).holds
        col, acc = color_nperfect(g, 3)
        col.verify(g)
        stages = account_stages(acc)
        assert {"layered", "layer", "family", "prime_perfect",
                "prime_trianglefree"} <= stages
        assert acc.budget_ok()
        assert col.count == 5 and chromatic_number(g, cap=21)[0] == 3

    def test_small_nperfect_sweep(self):
        # every stage budget is certified internally; completion plus the
        # top-level power bound is the whole claim
        for n in range(1, 7):
            for g in graphs_of_order(n):
                if find_bull(g) is not None or not is_n_perfect(g).holds:
                    continue
                t = max(t_parameter(g)[0], 2)
                col, acc = color_nperfect(g, t)
                col.verify(g)
                assert acc.budget_ok()
                omega = clique_number(g)[0]
                assert power_bound_holds(col.count, omega, t, 2, 5)
                assert col.count >= chromatic_number(g)[0]

    def test_determinism(self):
        g = layered_gadget()
        a, _ = color_nperfect(g, 3)
        b, _ = color_nperfect(g, 3)
        assert a == b

    def test_rejects_bull(self, bull):
        with pytest.raises(PreconditionError) as e:
            color_nperfect(bull, 2)
        assert e.value.witness == (0, 1, 2, 4, 3)

    def test_rejects_bad_t(self, c5):
        with pytest.raises(ValueError):
            color_nperfect(c5, 0)


class TestColorBullfree:
    def test_small_sweep(self):
        for n in range(1, 7):
            for g in graphs_of_order(n):
                if find_bull(g) is not None:
                    continue
                t = max(t_parameter(g)[0], 2)
                col, acc = color_bullfree(g, t)
                col.verify(g)
                assert acc.budget_ok()
                omega = clique_number(g)[0]
                assert power_bound_holds(col.count, omega, t, 4, 13)

    def test_substituted_cycle(self, c5):
        g = substitute(c5, 0, complete_graph(3))
        col, acc = color_bullfree(g, 3)
        col.verify(g)
        assert acc.budget_ok()

    def test_rejects_bull(self, bull):
        with pytest.raises(PreconditionError):
            color_bullfree(bull, 2)

    def test_empty(self):
        col, acc = color_bullfree(Graph(0, ()), 2)
        assert col.count == 0 and acc.stage == "empty"


class TestVerifyBound:
    def test_cycle_report(self, c5):
        rep = verify_bound(c5)
        assert rep == {
            "n": 5,
            "omega": 2,
            "chi": 3,
            "t": 3,
            "t_source": "exact",
            "bound": rep["bound"],
            "bound_approx": rep["bound_approx"],
            "holds": True,
        }
        assert "log2(3)" in rep["bound"]

    def test_given_t(self, c5):
        rep = verify_bound(c5, t=4)
        assert rep["t"] == 4 and rep["t_source"] == "given"

    def test_rejects_bull(self, bull):
        with pytest.raises(PreconditionError):
            verify_bound(bull)

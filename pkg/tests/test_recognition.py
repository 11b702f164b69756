import pytest
from conftest import complete_graph, cycle_graph, graph_strategy, graphs_of_order
from hypothesis import given, settings

from bullchrome.errors import CapExceededError
from bullchrome.graph import Graph, complement, disjoint_union, induced_subgraph, mask_of
from bullchrome.recognition import (
    T_CAP,
    clique_number,
    find_bull,
    find_odd_hole,
    find_triangle,
    is_bull_free,
    is_n_perfect,
    is_perfect,
    is_stable,
    is_triangle_free,
    t_parameter,
)
from oracles import (
    brute_chromatic,
    brute_find_bull,
    brute_find_triangle,
    brute_t_parameter,
    definitional_perfect,
    has_edge,
    subset_omega,
)


def is_actual_bull(g: Graph, vs: tuple[int, ...]) -> bool:
    sub, _ = induced_subgraph(g, mask_of(vs))
    return brute_find_bull(sub) is not None if sub.n == 5 else False


def test_find_triangle_exhaustive():
    for n in range(7):
        for g in graphs_of_order(n):
            got = find_triangle(g)
            want = brute_find_triangle(g)
            assert (got is None) == (want is None)
            if got is not None:
                a, b, c = got
                assert g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
            assert is_triangle_free(g).holds == (want is None)


def test_find_bull_exhaustive_small():
    for n in (5, 6):
        for g in graphs_of_order(n):
            got = find_bull(g)
            assert (got is None) == (brute_find_bull(g) is None)
            if got is not None:
                assert is_actual_bull(g, got)


@settings(max_examples=60, deadline=None)
@given(graph_strategy(max_n=8))
def test_find_bull_matches_brute(g):
    got = find_bull(g)
    assert (got is None) == (brute_find_bull(g) is None)
    if got is not None:
        assert is_actual_bull(g, got)


def test_bull_free_report(bull):
    rep = is_bull_free(bull)
    assert not rep.holds and is_actual_bull(bull, rep.witness)
    assert is_bull_free(cycle_graph(5)).holds


def test_clique_number_exhaustive():
    for n in range(7):
        for g in graphs_of_order(n):
            omega, witness = clique_number(g)
            assert omega == subset_omega(g)[g.vertices_mask]
            assert len(witness) == omega
            assert all(
                g.has_edge(u, v)
                for i, u in enumerate(witness)
                for v in witness[i + 1 :]
            )


def test_is_stable(c5):
    assert is_stable(c5, 0)
    assert is_stable(c5, 0b00101)
    assert not is_stable(c5, 0b00011)


class TestOddHoles:
    def verify_hole(self, g: Graph, hole: tuple[int, ...]) -> None:
        k = len(hole)
        assert k >= 5 and k % 2 == 1
        for i, u in enumerate(hole):
            for j in range(i + 1, k):
                v = hole[j]
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                assert g.has_edge(u, v) == consecutive

    def test_cycles(self):
        for n in (5, 7, 9):
            hole = find_odd_hole(cycle_graph(n))
            assert hole is not None and len(hole) == n
            self.verify_hole(cycle_graph(n), hole)
        for n in (4, 6, 8):
            assert find_odd_hole(cycle_graph(n)) is None

    def test_petersen_has_odd_holes(self, petersen):
        hole = find_odd_hole(petersen)
        assert hole is not None
        self.verify_hole(petersen, hole)

    def test_chords_block(self, bull):
        assert find_odd_hole(complete_graph(6)) is None
        assert find_odd_hole(bull) is None

    def test_hole_inside_larger_graph(self, c5):
        g = disjoint_union(complete_graph(3), c5)
        hole = find_odd_hole(g)
        assert hole is not None
        self.verify_hole(g, hole)


class TestPerfection:
    def test_matches_definition_exhaustively(self):
        for n in range(8):
            for g in graphs_of_order(n):
                rep = is_perfect(g)
                assert rep.holds == definitional_perfect(g), g.adj

    def test_witness_is_genuine(self, c5, petersen):
        for g in (c5, cycle_graph(7), petersen, complement(cycle_graph(7))):
            rep = is_perfect(g)
            assert not rep.holds
            target = g if rep.details["kind"] == "odd_hole" else complement(g)
            TestOddHoles().verify_hole(target, rep.witness)

    def test_perfect_classics(self, bull):
        for g in (complete_graph(5), cycle_graph(6), bull):
            assert is_perfect(g).holds


class TestNPerfect:
    def definitional(self, g: Graph) -> bool:
        for v in range(g.n):
            nh, _ = induced_subgraph(g, g.adj[v])
            rest, _ = induced_subgraph(g, g.vertices_mask & ~g.adj[v])
            if not (definitional_perfect(nh) or definitional_perfect(rest)):
                return False
        return True

    def test_matches_definition_exhaustively(self):
        for n in range(7):
            for g in graphs_of_order(n):
                assert is_n_perfect(g).holds == self.definitional(g)

    def test_c5_is_n_perfect(self, c5):
        assert is_n_perfect(c5).holds

    def test_dominated_c5_pair_is_not(self, c5):
        g = Graph.from_edges(
            11,
            list(c5.edges())
            + [(5 + u, 5 + v) for u, v in c5.edges()]
            + [(10, v) for v in range(5)],
        )
        rep = is_n_perfect(g)
        assert not rep.holds and rep.witness == (10,)
        assert set(rep.details) == {"neighborhood_defect", "complement_side_defect"}


class TestTParameter:
    def test_matches_brute_exhaustively(self):
        for n in range(1, 7):
            for g in graphs_of_order(n):
                t, vs = t_parameter(g)
                assert t == brute_t_parameter(g)
                if vs:
                    sub, _ = induced_subgraph(g, mask_of(vs))
                    assert brute_find_triangle(sub) is None
                    assert brute_chromatic(sub) == t

    def test_known_values(self, c5, grotzsch):
        assert t_parameter(c5)[0] == 3
        assert t_parameter(complete_graph(4))[0] == 2
        assert t_parameter(grotzsch)[0] == 4

    def test_cap(self):
        big = Graph(T_CAP + 1, (0,) * (T_CAP + 1))
        with pytest.raises(CapExceededError):
            t_parameter(big)
        assert t_parameter(big, cap=T_CAP + 1)[0] == 1

import itertools
import random

import pytest

from dysnav.errors import EmptyGraph, RootNotInTree
from dysnav.graphs import Graph
from dysnav.hierarchy import (
    EfficiencyMap,
    Mode,
    Role,
    build_hierarchy,
    ct_candidate_count,
    delta_efficiency,
    detect_root,
    network_efficiency,
    orient_hierarchy,
    spanning_tree,
    weight_edges,
)

from _oracles import adjacency_of, oracle_efficiency, oracle_without
from _synth import boss_network, ego_network, gnp


def graph_of(edges, nodes=()):
    return Graph(nodes, [(u, v, 1.0) for u, v in edges])


class TestNetworkEfficiency:
    def test_complete_graphs(self):
        for n in (2, 3, 5, 8):
            nodes = [f"n{i}" for i in range(n)]
            g = graph_of([(a, b) for a, b in itertools.combinations(nodes, 2)])
            assert network_efficiency(g) == 1.0

    def test_two_isolated_nodes(self):
        assert network_efficiency(Graph(["a", "b"])) == 0.0

    def test_small_graphs_convention(self):
        assert network_efficiency(Graph([])) == 0.0
        assert network_efficiency(Graph(["a"])) == 0.0

    def test_path_p3(self):
        g = graph_of([("a", "b"), ("b", "c")])
        assert abs(network_efficiency(g) - 5 / 6) < 1e-12

    def test_matches_oracle(self):
        rng = random.Random(60)
        for trial in range(200):
            g = gnp(rng, rng.randint(2, 50), rng.uniform(0.05, 0.5))
            assert network_efficiency(g) == oracle_efficiency(
                g.nodes, adjacency_of(g)
            ), trial


class TestDeltaEfficiency:
    def test_p3_values(self):
        g = graph_of([("a", "b"), ("b", "c")])
        eff = delta_efficiency(g)
        assert abs(eff.global_eff - 5 / 6) < 1e-12
        assert abs(eff.delta["b"] - 5 / 6) < 1e-12
        assert abs(eff.delta["a"] - (-1 / 6)) < 1e-12
        assert abs(eff.delta["c"] - (-1 / 6)) < 1e-12

    def test_k2(self):
        g = graph_of([("a", "b")])
        eff = delta_efficiency(g)
        assert eff.delta == {"a": 1.0, "b": 1.0}

    def test_oracle_identity(self):
        rng = random.Random(61)
        for trial in range(200):
            g = gnp(rng, rng.randint(2, 50), rng.uniform(0.05, 0.5))
            adj = adjacency_of(g)
            base = oracle_efficiency(g.nodes, adj)
            eff = delta_efficiency(g)
            assert eff.global_eff == base
            for node in g.nodes:
                remaining = [n for n in g.nodes if n != node]
                expected = base - oracle_efficiency(remaining, oracle_without(adj, node))
                assert eff.delta[node] == expected, (trial, node)


class TestWeightEdges:
    def _p3(self):
        g = graph_of([("a", "b"), ("b", "c")])
        return g, delta_efficiency(g)

    def test_normal_mode_negated_max(self):
        g, eff = self._p3()
        costs = weight_edges(g, eff, Mode.NORMAL)
        assert abs(costs[("a", "b")] - (-5 / 6)) < 1e-12

    def test_literal_reading_flag(self):
        g, eff = self._p3()
        costs = weight_edges(g, eff, Mode.NORMAL, literal_min_tree=True)
        assert abs(costs[("a", "b")] - 5 / 6) < 1e-12

    def test_ct_mode_absolute_difference(self):
        g, eff = self._p3()
        costs = weight_edges(g, eff, Mode.COUNTER_TERRORISM)
        assert abs(costs[("a", "b")] - 1.0) < 1e-12

    def test_equal_deltas_zero_ct_cost(self):
        g = graph_of([("a", "b"), ("b", "c"), ("a", "c")])
        eff = delta_efficiency(g)
        costs = weight_edges(g, eff, Mode.COUNTER_TERRORISM)
        assert all(c == 0.0 for c in costs.values())


from _oracles import best_forest_cost, count_components  # noqa: E402


class TestSpanningTree:
    def test_tree_input_is_returned(self):
        g = graph_of([("a", "b"), ("b", "c"), ("c", "d")])
        costs = {e: 1.0 for e in g.edges}
        assert set(spanning_tree(g, costs)) == set(g.edges)

    def test_triangle_keeps_cheapest_two(self):
        g = graph_of([("a", "b"), ("b", "c"), ("a", "c")])
        costs = {("a", "b"): 1.0, ("b", "c"): 2.0, ("a", "c"): 3.0}
        assert set(spanning_tree(g, costs)) == {("a", "b"), ("b", "c")}

    def test_disconnected_graph_gives_forest(self):
        g = graph_of([("a", "b"), ("x", "y"), ("y", "z")], nodes=["lone"])
        costs = {e: 1.0 for e in g.edges}
        forest = spanning_tree(g, costs)
        components = count_components(g.nodes, g.edges)
        assert len(forest) == g.node_count - components

    def test_optimal_versus_exhaustive_enumeration(self):
        rng = random.Random(62)
        trials = 0
        while trials < 30:
            n = rng.randint(4, 8)
            g = gnp(rng, n, 0.45)
            if g.edge_count > 14 or g.edge_count == 0:
                continue
            trials += 1
            costs = {e: round(rng.uniform(-2, 2), 3) for e in g.edges}
            forest = set(spanning_tree(g, costs))
            components = count_components(g.nodes, g.edges)
            need = g.node_count - components
            assert len(forest) == need
            assert count_components(g.nodes, forest) == components
            mine = sum(costs[e] for e in forest)
            assert mine == pytest.approx(best_forest_cost(g, costs), abs=1e-9)

    def test_every_tree_edge_in_source(self):
        rng = random.Random(63)
        for _ in range(20):
            g = gnp(rng, rng.randint(3, 25), rng.uniform(0.1, 0.5))
            costs = {e: rng.random() for e in g.edges}
            for edge in spanning_tree(g, costs):
                assert g.has_edge(*edge)


class TestDetectRoot:
    def test_normal_mode_argmax(self):
        g = graph_of([("a", "b"), ("b", "c")])
        eff = delta_efficiency(g)
        assert detect_root(g, eff, Mode.NORMAL) == "b"

    def test_normal_mode_scale_invariance(self):
        rng = random.Random(64)
        for _ in range(20):
            g = gnp(rng, rng.randint(3, 20), 0.3)
            eff = delta_efficiency(g)
            root = detect_root(g, eff, Mode.NORMAL)
            for factor in (0.5, 2.0, 10.0):
                scaled = EfficiencyMap(
                    eff.global_eff, {n: d * factor for n, d in eff.delta.items()}
                )
                assert detect_root(g, scaled, Mode.NORMAL) == root
            assert all(eff.delta[root] >= d for d in eff.delta.values())

    def test_empty_graph(self):
        with pytest.raises(EmptyGraph):
            detect_root(Graph([]), EfficiencyMap(0.0, {}), Mode.NORMAL)

    def test_ct_mode_finds_hidden_boss(self):
        g, boss, gates = boss_network(10, 10)
        eff = delta_efficiency(g)
        top2 = sorted(g.nodes, key=lambda n: (-eff.delta[n], n))[:2]
        assert set(top2) == set(gates)
        assert detect_root(g, eff, Mode.COUNTER_TERRORISM) == boss

    def test_ct_fallback_without_common_neighbor(self):
        # two disjoint paths: the top-2 deltas are the two middles, whose
        # neighborhoods never intersect
        g = graph_of([("a", "b"), ("b", "c"), ("x", "y"), ("y", "z")])
        eff = delta_efficiency(g)
        top2 = sorted(g.nodes, key=lambda n: (-eff.delta[n], n))[:2]
        assert set(top2) == {"b", "y"}
        assert detect_root(g, eff, Mode.COUNTER_TERRORISM) == detect_root(
            g, eff, Mode.NORMAL
        )

    def test_candidate_count_floor(self):
        assert ct_candidate_count(10) == 2
        assert ct_candidate_count(66) == 2
        assert ct_candidate_count(67) == 2
        assert ct_candidate_count(100) == 3
        assert ct_candidate_count(400) == 12


class TestOrientHierarchy:
    def test_star_depths(self):
        edges = [("hub", f"l{i}") for i in range(4)]
        tree = orient_hierarchy(edges, "hub", ["hub"] + [f"l{i}" for i in range(4)])
        assert tree.depths() == {"hub": 0, "l0": 1, "l1": 1, "l2": 1, "l3": 1}

    def test_path_depths(self):
        tree = orient_hierarchy([("a", "b"), ("b", "c")], "a", ["a", "b", "c"])
        assert tree.depths() == {"a": 0, "b": 1, "c": 2}
        assert tree.parent == {"b": "a", "c": "b"}

    def test_root_not_in_tree(self):
        with pytest.raises(RootNotInTree):
            orient_hierarchy([("a", "b")], "zz", ["a", "b"])

    def test_ct_roles(self):
        g, boss, gates = boss_network(10, 10)
        result = build_hierarchy(g, Mode.COUNTER_TERRORISM)
        roles = result.tree.roles
        assert roles is not None
        assert result.tree.root == boss
        assert roles[boss] is Role.LEADER
        assert all(roles[gate] is Role.GATEKEEPER for gate in gates)
        followers = set(g.nodes) - {boss, *gates}
        assert all(roles[f] is Role.FOLLOWER for f in followers)

    def test_normal_mode_has_no_roles(self):
        g = graph_of([("a", "b"), ("b", "c")])
        result = build_hierarchy(g, Mode.NORMAL)
        assert result.tree.roles is None


class TestBuildHierarchy:
    def test_ego_network_rooted_at_hub_with_depth_two(self):
        g, hub = ego_network()
        result = build_hierarchy(g, Mode.NORMAL)
        assert result.tree.root == hub
        assert max(result.tree.depths().values()) == 2

    def test_tree_edges_exist_in_source(self):
        rng = random.Random(65)
        for mode in Mode:
            g = gnp(rng, 20, 0.25)
            result = build_hierarchy(g, mode)
            for u, v in result.tree.edges:
                assert g.has_edge(u, v)

    def test_parent_spans_root_component(self):
        g = graph_of([("a", "b"), ("b", "c"), ("x", "y")])
        result = build_hierarchy(g, Mode.NORMAL)
        component = {result.tree.root} | set(result.tree.parent)
        assert component in ({"a", "b", "c"}, {"x", "y"})
        depths = result.tree.depths()
        assert set(depths) == component

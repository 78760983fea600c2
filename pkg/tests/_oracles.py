"""Independent reference implementations used to cross-check results.

These deliberately avoid the production code paths: cycle counting is
explicit path enumeration, distances come from a fresh BFS over plain
dict adjacency, and optimal paths/forests are found by exhaustive
enumeration.
"""

from __future__ import annotations

import itertools

from dysnav.graphs import Graph


# --- strength: explicit 3/4-cycle enumeration -------------------------------

def cycles_through_edge(adj: dict, u: str, v: str) -> int:
    """Count simple 3- and 4-cycles containing edge (u, v) by path search."""
    triangles = len(adj[u] & adj[v])
    quads = 0
    for a in adj[v]:
        if a == u:
            continue
        for b in adj[u]:
            if b == v or b == a:
                continue
            if b in adj[a]:
                quads += 1
    return triangles + quads


def saturate(adj: dict, u: str, v: str) -> dict:
    """Add every edge between N(u)\\{v} and N(v)\\{u} (covers the common
    neighborhood too)."""
    sat = {node: set(ns) for node, ns in adj.items()}
    for a in adj[v] - {u}:
        for b in adj[u] - {v}:
            if a != b:
                sat[a].add(b)
                sat[b].add(a)
    return sat


def oracle_strength(g: Graph, u: str, v: str) -> float:
    adj = {n: set(g.neighbors(n)) for n in g.nodes}
    actual = cycles_through_edge(adj, u, v)
    possible = cycles_through_edge(saturate(adj, u, v), u, v)
    return actual / possible if possible else 0.0


# --- efficiency: fresh BFS over dict adjacency -------------------------------

def oracle_distances(adj: dict, source: str) -> dict:
    dist = {source: 0}
    frontier = [source]
    hops = 0
    while frontier:
        hops += 1
        nxt = []
        for node in frontier:
            for other in adj[node]:
                if other not in dist:
                    dist[other] = hops
                    nxt.append(other)
        frontier = nxt
    return dist


def oracle_efficiency(nodes, adj: dict) -> float:
    n = len(nodes)
    if n < 2:
        return 0.0
    total = 0.0
    for source in sorted(nodes):
        dist = oracle_distances(adj, source)
        for target in sorted(nodes):
            if target != source and target in dist:
                total += 1.0 / dist[target]
    return total / (n * (n - 1))


def adjacency_of(g: Graph) -> dict:
    return {n: sorted(g.neighbors(n)) for n in g.nodes}


def oracle_without(adj: dict, node: str) -> dict:
    return {
        n: [o for o in others if o != node]
        for n, others in adj.items()
        if n != node
    }


# --- paths and forests: exhaustive enumeration -------------------------------

def enumerate_best_path_total(sg, start, end) -> float:
    interior = end[0] - start[0] - 1
    best = None
    for middle in itertools.product(range(sg.rows), repeat=interior):
        slices = (start[1],) + middle + (end[1],)
        total = 0.0
        for offset in range(len(slices) - 1):
            total += sg.sigma[(start[0] + offset, slices[offset], slices[offset + 1])]
        if best is None or total > best:
            best = total
    return best


def path_total(sg, path) -> float:
    total = 0.0
    for (i, j), (_, k) in zip(path, path[1:]):
        total += sg.sigma[(i, j, k)]
    return total


def count_components(nodes, edges) -> int:
    parent = {n: n for n in nodes}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(n) for n in nodes})


def best_forest_cost(g: Graph, costs: dict) -> float:
    components = count_components(g.nodes, g.edges)
    need = g.node_count - components
    best = None
    for subset in itertools.combinations(g.edges, need):
        if count_components(g.nodes, subset) != components:
            continue
        cost = sum(costs[e] for e in subset)
        best = cost if best is None else min(best, cost)
    assert best is not None
    return best

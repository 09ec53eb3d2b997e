"""Brute-force oracles for the test suite.

Everything here is deliberately independent of the package's kernel and
matroid machinery: components come from BFS over adjacency dicts, ranks
from the edges-vs-vertices count per component, spanning tree counts from
the Kirchhoff determinant, and cycle covers from exhaustive search.
"""

import itertools
import random
from fractions import Fraction


def adjacency(g, edge_set):
    adj = {}
    for e in edge_set:
        a, b = g.edges[e]
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def bfs_components(g, edge_set):
    """Vertex sets of the components of the subgraph (V[X], X)."""
    adj = adjacency(g, edge_set)
    seen = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def brute_component_count(g, edge_set):
    return len(bfs_components(g, edge_set))


def brute_incident_vertices(g, edge_set):
    verts = set()
    for e in edge_set:
        a, b = g.edges[e]
        verts.update((a, b))
    return verts


def brute_boundary(g, x):
    y = set(g.edges) - set(x)
    return brute_incident_vertices(g, x) & brute_incident_vertices(g, y)


def brute_graphic_rank(g, edge_set):
    """rank = |V[X]| - c(X), counted per component with loops discarded."""
    total = 0
    for comp in bfs_components(g, edge_set):
        total += len(comp) - 1
    return total


def brute_rank_identity_kappa(g, x):
    """r(X) + r(Y) - r(E), the finite-matroid connectivity function."""
    y = set(g.edges) - set(x)
    return (
        brute_graphic_rank(g, x)
        + brute_graphic_rank(g, y)
        - brute_graphic_rank(g, g.edges)
    )


def brute_is_acyclic(g, edge_set):
    """Acyclic iff every component has exactly |V| - 1 edges (loops break it)."""
    edge_set = set(edge_set)
    for e in edge_set:
        a, b = g.edges[e]
        if a == b:
            return False
    comps = bfs_components(g, edge_set)
    counted = 0
    for comp in comps:
        inner = [e for e in edge_set if g.edges[e][0] in comp]
        counted += len(inner)
        if len(inner) != len(comp) - 1:
            return False
    return counted == len(edge_set)


def brute_cycle_sets(g, within=None):
    """Edge sets of cycles inside ``within``: connected and 2-regular."""
    pool = sorted(within if within is not None else g.edges)
    out = []
    for size in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            deg = {}
            for e in combo:
                a, b = g.edges[e]
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            if brute_component_count(g, combo) == 1:
                out.append(frozenset(combo))
    return out


def brute_is_cycle_cover(g, z, _memo=None):
    """Can z be partitioned into edge-disjoint cycle edge sets?"""
    z = frozenset(z)
    if _memo is None:
        _memo = {}
    if z in _memo:
        return _memo[z]
    if not z:
        return True
    result = False
    for c in brute_cycle_sets(g, z):
        if brute_is_cycle_cover(g, z - c, _memo):
            result = True
            break
    _memo[z] = result
    return result


def brute_is_two_connected(g):
    """Delete each vertex in turn; survivors must stay connected."""
    if g.n_vertices < 3:
        return False
    if not _connected_all_vertices(g):
        return False
    for v in g.vertex_order:
        rest_edges = {e for e, (a, b) in g.edges.items() if v not in (a, b)}
        others = set(g.vertices) - {v}
        comps = bfs_components(g, rest_edges)
        covered = set().union(*comps) if comps else set()
        if covered != others or len(comps) > 1:
            return False
    return True


def _connected_all_vertices(g):
    comps = bfs_components(g, g.edges)
    if not comps:
        return g.n_vertices <= 1
    return len(comps) == 1 and comps[0] == set(g.vertices)


def kirchhoff_tree_count(g):
    """Spanning tree count from the Laplacian minor determinant (loop-free part)."""
    n = g.n_vertices
    if n <= 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for e, (a, b) in g.edges.items():
        if a == b:
            continue
        i, j = g.vertex_pos[a], g.vertex_pos[b]
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    minor = [row[1:] for row in lap[1:]]
    return int(round(float(_det(minor))))


def _det(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] / rows[col][col]
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
    return det


def random_multigraph(rng: random.Random, max_vertices=6, max_edges=10,
                      require_connected=True, loops=True):
    """Seeded random multigraph; retries until the connectivity filter passes."""
    from matconn.graphs import MultiGraph

    while True:
        nv = rng.randint(2, max_vertices)
        ne = rng.randint(1, max_edges)
        verts = [f"v{i}" for i in range(nv)]
        edges = {}
        for k in range(ne):
            u = rng.choice(verts)
            v = rng.choice(verts)
            if not loops:
                while v == u:
                    v = rng.choice(verts)
            edges[f"e{k:02d}"] = (u, v)
        g = MultiGraph(verts, edges, name=f"rand{nv}x{ne}")
        if not require_connected or _connected_all_vertices(g):
            return g


def random_two_connected(rng: random.Random, max_vertices=5, max_edges=9):
    while True:
        g = random_multigraph(rng, max_vertices, max_edges, loops=False)
        if g.n_edges >= 3 and brute_is_two_connected(g):
            return g

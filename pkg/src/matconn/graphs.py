"""Finite undirected multigraphs with stable edge identifiers.

Vertices and edges are addressed by string ids; parallel edges and loops are
allowed.  Instances are immutable after construction and precompute the
int-indexed endpoint arrays the kernels consume.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InputError


class MultiGraph:
    """Undirected multigraph: a vertex-id set and a map edge-id -> (u, v)."""

    def __init__(self, vertices, edges, name=""):
        self.name = name
        self.vertices = frozenset(vertices)
        self.edges = {e: (str(u), str(v)) for e, (u, v) in dict(edges).items()}
        for e, (u, v) in self.edges.items():
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"edge {e!r} has endpoint outside the vertex set")
        self.edge_order = tuple(sorted(self.edges))
        self.edge_pos = {e: i for i, e in enumerate(self.edge_order)}
        self.vertex_order = tuple(sorted(self.vertices))
        self.vertex_pos = {x: i for i, x in enumerate(self.vertex_order)}
        self.uarr = np.array(
            [self.vertex_pos[self.edges[e][0]] for e in self.edge_order], dtype=np.int64
        )
        self.varr = np.array(
            [self.vertex_pos[self.edges[e][1]] for e in self.edge_order], dtype=np.int64
        )

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def edge_ids(self):
        return frozenset(self.edges)

    def endpoints(self, e):
        try:
            return self.edges[e]
        except KeyError:
            raise InputError(f"unknown edge id {e!r}") from None

    def check_edges(self, x):
        """Validate an edge-id collection, returning it as a frozenset."""
        xs = frozenset(x)
        unknown = xs - self.edges.keys()
        if unknown:
            raise InputError(f"unknown edge ids: {sorted(unknown)}")
        return xs

    def index_array(self, x):
        """Edge positions of x as a sorted int64 array for the kernels."""
        return np.array(sorted(self.edge_pos[e] for e in x), dtype=np.int64)

    def side_flags(self, x):
        """uint8 array over all edges: 1 where the edge belongs to x."""
        flags = np.zeros(self.n_edges, dtype=np.uint8)
        for e in x:
            flags[self.edge_pos[e]] = 1
        return flags

    def adjacency(self):
        """vertex -> list of (edge-id, other-endpoint); loops appear once."""
        adj = {x: [] for x in self.vertices}
        for e, (u, v) in self.edges.items():
            adj[u].append((e, v))
            if v != u:
                adj[v].append((e, u))
        return adj

    def __repr__(self):
        label = self.name or "MultiGraph"
        return f"<{label}: {self.n_vertices} vertices, {self.n_edges} edges>"


@dataclass(frozen=True)
class EdgePartition:
    """A bipartition (x, y) of a host edge set with its cached boundary data.

    cx/cy may be math.inf for the infinite sides of periodic partitions and
    None when not computed.
    """

    x: frozenset
    y: frozenset
    boundary: frozenset
    cx: object = None
    cy: object = None

    @staticmethod
    def of(g: MultiGraph, x) -> "EdgePartition":
        xs = g.check_edges(x)
        ys = g.edge_ids() - xs
        boundary = incident_vertex_set(g, xs) & incident_vertex_set(g, ys)
        return EdgePartition(
            x=xs,
            y=ys,
            boundary=boundary,
            cx=component_count(g, xs),
            cy=component_count(g, ys),
        )


def incident_vertex_set(g: MultiGraph, x) -> frozenset:
    """All vertices incident with at least one edge of x."""
    xs = g.check_edges(x)
    verts = set()
    for e in xs:
        u, v = g.edges[e]
        verts.add(u)
        verts.add(v)
    return frozenset(verts)


def component_count(g, x):
    """Number of components of the subgraph spanned by x (no isolated vertices).

    Periodic hosts accept finite or cofinite x, computed on stabilized windows.
    """
    from .periodic import PeriodicGraph, periodic_component_count

    if isinstance(g, PeriodicGraph):
        return periodic_component_count(g, x)
    xs = g.check_edges(x)
    if not xs:
        return 0
    return int(kernels.components_indexed(g.uarr, g.varr, g.n_vertices, g.index_array(xs)))


def boundary_size(g, p) -> float:
    """|V[X] ∩ V[Y]| for a partition of g's edge set; inf on periodic hosts
    whose two sides both occupy every sufficiently far motif copy of an end."""
    from .periodic import PeriodicGraph, periodic_boundary_size

    if isinstance(g, PeriodicGraph):
        return periodic_boundary_size(g, p.x if isinstance(p, EdgePartition) else p)
    if p.x | p.y != g.edge_ids() or (p.x & p.y):
        raise InputError("partition does not cover the host edge set")
    if not p.x or not p.y:
        return 0
    return int(kernels.boundary_indexed(g.uarr, g.varr, g.n_vertices, g.side_flags(p.x)))


def is_connected(g: MultiGraph) -> bool:
    """True iff g has one component covering every vertex (or is empty)."""
    if g.n_vertices <= 1:
        return True
    if not g.edges:
        return False
    full = g.index_array(g.edge_ids())
    comps = int(kernels.components_indexed(g.uarr, g.varr, g.n_vertices, full))
    covered = len(incident_vertex_set(g, g.edge_ids()))
    return comps == 1 and covered == g.n_vertices


def cut_vertices(g: MultiGraph) -> frozenset:
    """Articulation vertices, multigraph-aware.

    DFS lowpoint search tracking the entering edge id, so a parallel edge
    back to the parent counts as a genuine cycle.  Loops are ignored.
    """
    adj = g.adjacency()
    visited = {}
    cuts = set()
    counter = [0]
    for root in g.vertex_order:
        if root in visited:
            continue
        # iterative DFS: stack of (vertex, entering edge, child iterator)
        visited[root] = counter[0]
        counter[0] += 1
        low = {root: visited[root]}
        stack = [(root, None, iter(adj[root]))]
        root_children = 0
        while stack:
            vtx, in_edge, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == in_edge or w == vtx:
                    continue
                if w not in visited:
                    visited[w] = counter[0]
                    counter[0] += 1
                    low[w] = visited[w]
                    stack.append((w, e, iter(adj[w])))
                    if vtx == root:
                        root_children += 1
                    advanced = True
                    break
                low[vtx] = min(low[vtx], visited[w])
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[vtx])
                    if parent != root and low[vtx] >= visited[parent]:
                        cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return frozenset(cuts)


def is_two_connected(g) -> bool:
    """Standard vertex 2-connectivity: ≥3 vertices, connected, no cutvertex.

    Periodic hosts are checked on contracted windows of size 3 and 4.
    """
    from .periodic import PeriodicGraph, periodic_is_two_connected

    if isinstance(g, PeriodicGraph):
        return periodic_is_two_connected(g)
    if g.n_vertices < 3:
        return False
    if not is_connected(g):
        return False
    return not cut_vertices(g)


def cut_parity_check(g: MultiGraph, z) -> bool:
    """True iff every vertex has even degree in z.

    On finite graphs this is equivalent to z meeting every finite cut in an
    even number of edges, since cuts are generated by vertex stars; loops
    contribute 2 to their vertex.
    """
    zs = g.check_edges(z)
    deg = {}
    for e in zs:
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1  # a loop hits u twice, giving it degree 2
    return all(d % 2 == 0 for d in deg.values())

"""Graphic matroids and the closed-form connectivity function on graphs.

Three constructions: the finite-cycle matroid (independent = acyclic), the
finite-bond matroid (independent = contains no bond) and the windowed cycle
matroid of a periodic graph (finite-cycle matroid of the contracted window,
where cycles through end vertices stand in for infinite cycles).

kappa_formula evaluates |V[X] ∩ V[Y]| − c(X) − c(Y) + 1 with an infinite
branch that fires exactly when the partition's boundary is infinite.
"""

import itertools
import math

from . import kernels
from .errors import CapacityError, InputError, InternalConsistencyError, PreconditionError, capacity_limit
from .graphs import (
    MultiGraph,
    component_count,
    incident_vertex_set,
    is_connected,
    is_two_connected,
)
from .matroids import Matroid
from .periodic import (
    PeriodicGraph,
    _tail_shares_vertex,
    as_edge_set,
    periodic_boundary_size,
    periodic_component_count,
    periodic_is_two_connected,
    window_contract,
)

INFINITE = math.inf


def mfc(g: MultiGraph) -> Matroid:
    """Finite-cycle matroid: independent iff the edge set is acyclic.

    Bases are the spanning forests; a loop is a dependent singleton.
    """

    def acyclic(subset):
        if not subset:
            return True
        return bool(
            kernels.acyclic_indexed(g.uarr, g.varr, g.n_vertices, g.index_array(subset))
        )

    return Matroid(g.edge_ids(), acyclic, label=f"M_FC({g.name or 'graph'})")


def bonds_of(g: MultiGraph):
    """All bonds (minimal nonempty cuts), graph-theoretically.

    Per component, a vertex bipartition's cut is a bond iff both sides
    induce connected subgraphs; bipartitions are enumerated with an anchored
    side to kill the symmetry.
    """
    adj = g.adjacency()
    seen = set()
    comps = []
    for root in g.vertex_order:
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for _, w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(sorted(comp))

    def induced_connected(verts):
        verts = set(verts)
        if not verts:
            return False
        start = next(iter(verts))
        reach = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for _, w in adj[v]:
                if w in verts and w not in reach:
                    reach.add(w)
                    stack.append(w)
        return reach == verts

    bonds = []
    for comp in comps:
        if len(comp) < 2:
            continue
        if len(comp) - 1 > capacity_limit(18):
            raise CapacityError(f"bond enumeration over {len(comp)} vertices exceeds the bound")
        anchor, rest = comp[0], comp[1:]
        for bits in range(1 << len(rest)):
            side = {anchor} | {rest[i] for i in range(len(rest)) if bits >> i & 1}
            other = set(comp) - side
            if not other:
                continue
            if not induced_connected(side) or not induced_connected(other):
                continue
            cut = frozenset(
                e for e, (a, b) in g.edges.items()
                if (a in side) != (b in side)
            )
            if cut:
                bonds.append(cut)
    return bonds


def mfb(g: MultiGraph) -> Matroid:
    """Finite-bond matroid: independent iff the set contains no bond of g."""
    bonds = bonds_of(g)

    def bond_free(subset):
        return not any(b <= subset for b in bonds)

    return Matroid(g.edge_ids(), bond_free, label=f"M_FB({g.name or 'graph'})")


def cycle_edge_sets(g: MultiGraph):
    """Edge sets of cycles: connected subsets in which every vertex has degree 2.

    Loops and parallel pairs count.  Exhaustive over subsets, so capped at
    the exhaustive bound.
    """
    m = g.n_edges
    if m > capacity_limit(16):
        raise CapacityError(f"cycle enumeration over {m} edges exceeds the bound")
    order = g.edge_order
    out = []
    for mask in range(1, 1 << m):
        subset = [order[i] for i in range(m) if mask >> i & 1]
        deg = {}
        for e in subset:
            a, b = g.edges[e]
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(d != 2 for d in deg.values()):
            continue
        idx = g.index_array(subset)
        if int(kernels.components_indexed(g.uarr, g.varr, g.n_vertices, idx)) == 1:
            out.append(frozenset(subset))
    return out


def mc_window(gp: PeriodicGraph, n: int) -> Matroid:
    """Windowed cycle matroid: finite-cycle matroid of the contracted window.

    The ground set is exactly the contracted window's edges (window edges
    plus the re-attached crossing edges, all of them real motif edges).
    """
    host = window_contract(gp, n)
    m = mfc(host)
    m.label = f"M_C({gp.name or 'periodic'}|window {n})"
    return m


def _kappa_formula_finite(g: MultiGraph, x, require_two_connected: bool):
    xs = g.check_edges(x)
    if require_two_connected:
        if not is_two_connected(g):
            raise PreconditionError("kappa formula requires a 2-connected host")
    elif not is_connected(g):
        raise PreconditionError("kappa formula requires at least a connected host")
    if not xs or xs == g.edge_ids():
        # degenerate partitions: a basis of the full side is already a basis
        return 0
    boundary = int(
        kernels.boundary_indexed(g.uarr, g.varr, g.n_vertices, g.side_flags(xs))
    )
    return boundary - component_count(g, xs) - component_count(g, g.edge_ids() - xs) + 1


def _kappa_formula_periodic(gp: PeriodicGraph, x, require_two_connected: bool, window_size):
    xs = as_edge_set(gp, x)
    if window_size is not None:
        xs = xs.widened(max(xs.tail_start, int(window_size)))
    ys = xs.complement()
    if require_two_connected and not periodic_is_two_connected(gp):
        raise PreconditionError("kappa formula requires a 2-connected host")
    for end in gp.end_names():
        if _tail_shares_vertex(gp, xs, ys, end):
            return INFINITE
    if not (xs.is_finite or xs.is_cofinite):
        raise PreconditionError(
            "finite-branch evaluation needs one side finite (period cuts are out of scope)"
        )
    boundary = periodic_boundary_size(gp, xs)
    cx = periodic_component_count(gp, xs)
    cy = periodic_component_count(gp, ys)
    return boundary - cx - cy + 1


def kappa_formula(g, x, require_two_connected: bool = True, window_size=None):
    """Closed-form connectivity function of the finite-cycle matroid.

    Returns inf exactly when the boundary |V[X] ∩ V[Y]| is infinite;
    otherwise |V[X] ∩ V[Y]| − c(X) − c(Y) + 1.  The 2-connectivity gate is
    the theorem's hypothesis; passing require_two_connected=False relaxes it
    to connected hosts, where the formula still equals the rank identity by
    counting.
    """
    if isinstance(g, PeriodicGraph):
        return _kappa_formula_periodic(g, x, require_two_connected, window_size)
    return _kappa_formula_finite(g, x, require_two_connected)


def _tst_host(g, n):
    if isinstance(g, PeriodicGraph):
        if n is None:
            raise InputError("periodic graphs need a window size")
        return window_contract(g, n)
    return g


def is_topological_spanning_tree(g, t, n=None) -> bool:
    """Window-scale topological spanning tree test.

    On a contracted window: spans every vertex including the end vertices,
    connected, and acyclic (a cycle through an end vertex is the window
    image of an infinite cycle).  On a finite graph: an ordinary spanning
    tree.
    """
    host = _tst_host(g, n)
    ts = host.check_edges(t)
    if len(ts) != host.n_vertices - 1:
        return False
    idx = host.index_array(ts)
    if not kernels.acyclic_indexed(host.uarr, host.varr, host.n_vertices, idx):
        return False
    covered = incident_vertex_set(host, ts)
    return covered == host.vertices


def topological_spanning_tree(g, n=None, base=()) -> frozenset:
    """Greedy window-scale topological spanning tree containing ``base``.

    A base that already closes a cycle in the contracted window (through the
    ends, in the Figure-style patterns) is rejected; a disconnected window
    is a precondition error.
    """
    host = _tst_host(g, n)
    if not is_connected(host):
        raise PreconditionError("window is disconnected")
    base_set = host.check_edges(base)
    if base_set and not kernels.acyclic_indexed(
        host.uarr, host.varr, host.n_vertices, host.index_array(base_set)
    ):
        raise PreconditionError("base closes a cycle of the contracted window")
    tree = set(base_set)
    for e in host.edge_order:
        if e in tree:
            continue
        candidate = tree | {e}
        if kernels.acyclic_indexed(
            host.uarr, host.varr, host.n_vertices, host.index_array(candidate)
        ):
            tree = candidate
    if len(tree) != host.n_vertices - 1:
        raise InternalConsistencyError("greedy search did not reach a spanning tree")
    return frozenset(tree)


def spanning_tree_count(g: MultiGraph) -> int:
    """Number of spanning trees, by exhaustive enumeration (small graphs)."""
    m = g.n_edges
    need = g.n_vertices - 1
    if m > capacity_limit(16):
        raise CapacityError(f"spanning tree enumeration over {m} edges exceeds the bound")
    count = 0
    for combo in itertools.combinations(g.edge_order, need):
        idx = g.index_array(combo)
        if not kernels.acyclic_indexed(g.uarr, g.varr, g.n_vertices, idx):
            continue
        if incident_vertex_set(g, combo) == g.vertices:
            count += 1
    return count

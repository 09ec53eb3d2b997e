"""Tutte-separations and their equivalence with matroid separations.

An l-Tutte-separation splits the edge set into sides of at least l edges
meeting in at most l vertices; a graph is k-Tutte-connected when no
l-Tutte-separation exists for l < k.  The two conversion routines replay
the constructive halves of the equivalence proof: Tutte -> matroid goes
through the closed formula, matroid -> Tutte runs the component-moving
pipeline with an exhaustive fallback.
"""

from dataclasses import dataclass

from . import kernels
from .errors import CapacityError, InputError, PreconditionError, capacity_limit
from .graphs import (
    EdgePartition,
    MultiGraph,
    component_count,
    incident_vertex_set,
    is_connected,
)
from .graphic import cycle_edge_sets, kappa_formula, mfc
from .matroids import (
    SeparationReport,
    kappa,
    matroid_connectivity,
    matroid_from_circuits,
)
from .periodic import (
    PeriodicGraph,
    as_edge_set,
    edge_set_from_spec,
    periodic_boundary_size,
    window,
)

DEFAULT_PERIODIC_CAP = 8


def _finite_tutte_guard(g: MultiGraph):
    if g.n_edges > capacity_limit(16):
        raise CapacityError(
            f"exhaustive Tutte search over {g.n_edges} edges exceeds the bound"
        )
    if g.n_edges > kernels.MAX_MASK_EDGES:
        raise CapacityError("mask sweep limited to 62 edges")


def _mask_subset(g: MultiGraph, mask: int) -> frozenset:
    return frozenset(g.edge_order[i] for i in range(g.n_edges) if mask >> i & 1)


def _tutte_report_finite(g: MultiGraph, ell: int, mask: int) -> SeparationReport:
    xs = _mask_subset(g, mask)
    ys = g.edge_ids() - xs
    boundary = len(incident_vertex_set(g, xs) & incident_vertex_set(g, ys))
    return SeparationReport(
        kind="tutte",
        ell=ell,
        found=True,
        x=xs,
        y=ys,
        kappa_or_boundary=boundary,
        exhaustive=True,
    )


def find_tutte_separation(g, ell: int) -> SeparationReport:
    """Search for an l-Tutte-separation; absence on periodic hosts is qualified."""
    if ell < 1:
        raise InputError("separation order ell must be >= 1")
    if isinstance(g, PeriodicGraph):
        return _find_tutte_periodic(g, ell)
    _finite_tutte_guard(g)
    if g.n_edges < 2 * ell:
        return SeparationReport(kind="tutte", ell=ell, found=False, exhaustive=True)
    mask = int(kernels.tutte_find(g.uarr, g.varr, g.n_vertices, g.n_edges, ell))
    if mask == 0:
        return SeparationReport(kind="tutte", ell=ell, found=False, exhaustive=True)
    return _tutte_report_finite(g, ell, mask)


def tutte_connectivity(g, cap=None) -> int:
    """Largest k <= cap with no l-Tutte-separation, l < k.

    Periodic hosts search the window and period-cut families only, so the
    value is the best found upper bound (never an exhaustive absence claim).
    """
    if isinstance(g, PeriodicGraph):
        cap = DEFAULT_PERIODIC_CAP if cap is None else int(cap)
        best = _periodic_candidates_min(g, cap)
        return cap if best is None else min(best, cap)
    cap = g.n_edges if cap is None else int(cap)
    if cap < 1:
        raise InputError("connectivity cap must be >= 1")
    _finite_tutte_guard(g)
    if g.n_edges < 2:
        return cap
    level, _ = kernels.tutte_best(g.uarr, g.varr, g.n_vertices, g.n_edges)
    level = int(level)
    if level == 0:
        return cap
    return min(level, cap)


# --- periodic search families ----------------------------------------------

def _periodic_finite_family(gp: PeriodicGraph, probe_window=3):
    """All edge subsets of the largest affordable window as candidate X sides.

    Yields (xs, boundary, size_x) triples; boundaries are computed inside a
    one-period-larger window, where the incidences of the candidate's
    vertices are complete.
    """
    w = probe_window
    while w >= 1 and window(gp, w).n_edges > 16:
        w -= 1
    if w < 1:
        return
    inner = window(gp, w)
    outer = window(gp, w + 1)
    inner_ids = sorted(inner.edges)
    m = len(inner_ids)
    outer_full = frozenset(outer.edges)
    for mask in range(1, 1 << m):
        xs = frozenset(inner_ids[i] for i in range(m) if mask >> i & 1)
        ys = outer_full - xs
        boundary = len(incident_vertex_set(outer, xs) & incident_vertex_set(outer, ys))
        yield xs, boundary, len(xs)


def _periodic_cut_family(gp: PeriodicGraph, positions=range(-2, 3)):
    """Period-cut splits: everything left of a column vs the rest."""
    for pos in positions:
        if gp.ends == 1 and pos < 1:
            continue
        label = f"left-half:{pos}"
        xs = edge_set_from_spec(gp, label)
        boundary = periodic_boundary_size(gp, xs)
        if boundary == float("inf"):
            continue
        size_x = len(xs.explicit) if xs.is_finite else None  # None = infinite
        yield xs, label, int(boundary), size_x


def _find_tutte_periodic(gp: PeriodicGraph, ell: int) -> SeparationReport:
    for xs, boundary, size_x in _periodic_finite_family(gp):
        if size_x >= ell and boundary <= ell:
            return SeparationReport(
                kind="tutte",
                ell=ell,
                found=True,
                x=xs,
                kappa_or_boundary=boundary,
                exhaustive=False,
                path="window-family",
                y_label="complement",
            )
    for xs, label, boundary, size_x in _periodic_cut_family(gp):
        if (size_x is None or size_x >= ell) and boundary <= ell:
            return SeparationReport(
                kind="tutte",
                ell=ell,
                found=True,
                x=frozenset(xs.explicit),
                kappa_or_boundary=boundary,
                exhaustive=False,
                path="period-cut",
                x_label=label,
                y_label="complement",
            )
    return SeparationReport(kind="tutte", ell=ell, found=False, exhaustive=False)


def _periodic_candidates_min(gp: PeriodicGraph, cap: int):
    best = None
    for xs, boundary, size_x in _periodic_finite_family(gp):
        level = max(1, boundary)
        if level <= size_x and (best is None or level < best):
            best = level
    for xs, label, boundary, size_x in _periodic_cut_family(gp):
        level = max(1, boundary)
        if (size_x is None or level <= size_x) and (best is None or level < best):
            best = level
    return best


# --- the two constructive conversions ---------------------------------------

def tutte_sep_to_matroid_sep(g: MultiGraph, p: EdgePartition, ell: int) -> SeparationReport:
    """Certify a Tutte-separation as a matroid separation via the formula.

    Since c(X), c(Y) >= 1, a boundary of at most l forces
    kappa <= l - c(X) - c(Y) + 1 <= l - 1, so the same partition works.
    """
    if ell < 1:
        raise InputError("separation order ell must be >= 1")
    if len(p.x) < ell or len(p.y) < ell:
        raise PreconditionError("sides are smaller than ell")
    boundary = len(p.boundary)
    if boundary > ell:
        raise PreconditionError(f"boundary {boundary} exceeds ell={ell}")
    value = kappa_formula(g, p.x, require_two_connected=False)
    if value > ell - 1:
        raise PreconditionError("partition is not an ell-Tutte-separation of this host")
    return SeparationReport(
        kind="matroid",
        ell=ell,
        found=True,
        x=p.x,
        y=p.y,
        kappa_or_boundary=value,
        exhaustive=True,
        path="converted",
    )


def _edge_components(g: MultiGraph, edge_set):
    """Partition an edge set into the edge sets of its connected pieces."""
    adj = {}
    for e in edge_set:
        a, b = g.edges[e]
        adj.setdefault(a, []).append((e, b))
        adj.setdefault(b, []).append((e, a))
    seen_edges = set()
    pieces = []
    for start in sorted(adj):
        bucket = set()
        stack = [start]
        visited = {start}
        while stack:
            v = stack.pop()
            for e, w in adj[v]:
                bucket.add(e)
                if w not in visited:
                    visited.add(w)
                    stack.append(w)
        bucket -= seen_edges
        if bucket:
            seen_edges |= bucket
            pieces.append(frozenset(bucket))
    return pieces


def matroid_sep_to_tutte_sep(g: MultiGraph, x, ell: int) -> SeparationReport:
    """Replay the proof pipeline turning a matroid separation into a Tutte one.

    (a) merge components of the complement into X while that lowers
    c(X) + c(Y), asserting the inequality chain numerically at each step;
    (b) pick a component M of X with |E(M)| >= |V[M] ∩ V[Y]| and emit
    (E(M), rest) at order k = |V[M] ∩ V[Y]|; when no component qualifies
    (possible on finite hosts) fall back to exhaustive search below ell.
    """
    if ell < 1:
        raise InputError("separation order ell must be >= 1")
    xs = g.check_edges(x)
    ys = g.edge_ids() - xs
    if len(xs) < ell or len(ys) < ell:
        raise PreconditionError("sides are smaller than ell")
    matroid = mfc(g)
    start_kappa = kappa(matroid, xs)
    if start_kappa > ell - 1:
        raise PreconditionError("input is not an ell-separation of the finite-cycle matroid")
    if not is_connected(g):
        raise PreconditionError("pipeline needs a connected host")

    current_kappa = kappa_formula(g, xs, require_two_connected=False)
    # (a) component moving: complement components migrate into X
    while True:
        moved = False
        cost = component_count(g, xs) + component_count(g, ys)
        for piece in sorted(_edge_components(g, ys), key=lambda s: sorted(s)[0]):
            nxs = xs | piece
            nys = ys - piece
            if len(nys) < ell:
                continue
            new_cost = component_count(g, nxs) + component_count(g, nys)
            if new_cost >= cost:
                continue
            new_kappa = kappa_formula(g, nxs, require_two_connected=False)
            if new_kappa > current_kappa:
                raise PreconditionError(
                    "component merge increased kappa; input was not a valid separation"
                )
            xs, ys = nxs, nys
            current_kappa = new_kappa
            moved = True
            break
        if not moved:
            break

    # (b) a component of X whose edge count covers its attachment to Y
    v_y = incident_vertex_set(g, ys) if ys else frozenset()
    for piece in sorted(_edge_components(g, xs), key=lambda s: sorted(s)[0]):
        attach = len(incident_vertex_set(g, piece) & v_y)
        if len(piece) >= attach and attach <= ell:
            rest = g.edge_ids() - piece
            if len(rest) < max(attach, 1):
                continue
            k = max(attach, 1)
            return SeparationReport(
                kind="tutte",
                ell=k,
                found=True,
                x=piece,
                y=rest,
                kappa_or_boundary=attach,
                exhaustive=True,
                path="constructive",
            )

    # fallback: the equivalence theorem guarantees some separation at or below ell
    _finite_tutte_guard(g)
    for level in range(1, ell + 1):
        mask = int(kernels.tutte_find(g.uarr, g.varr, g.n_vertices, g.n_edges, level))
        if mask:
            report = _tutte_report_finite(g, level, mask)
            return SeparationReport(
                kind="tutte",
                ell=level,
                found=True,
                x=report.x,
                y=report.y,
                kappa_or_boundary=report.kappa_or_boundary,
                exhaustive=True,
                path="fallback",
            )
    raise PreconditionError(
        "no Tutte-separation at or below ell exists; input cannot have been a separation"
    )


@dataclass(frozen=True)
class EquivalenceReport:
    """Capped connectivities of the three routes plus agreement verdict."""

    cap: int
    tutte: int
    matroid_fc: int
    matroid_circuits: int
    agree: bool
    first_discrepancy: object = None

    def to_json(self):
        return {
            "cap": self.cap,
            "tutte": self.tutte,
            "matroid_fc": self.matroid_fc,
            "matroid_circuits": self.matroid_circuits,
            "agree": self.agree,
            "first_discrepancy": self.first_discrepancy,
        }


def verify_equivalence(g: MultiGraph, cap=None) -> EquivalenceReport:
    """Check k-Tutte-connected ⇔ finite-cycle matroid k-connected, all k <= cap.

    The third leg rebuilds the cycle matroid from explicitly enumerated
    cycle edge sets, so the two matroid routes share no oracle code.
    """
    if g.n_edges > capacity_limit(12):
        raise CapacityError(
            f"equivalence sweep over {g.n_edges} edges exceeds the bound"
        )
    cap = g.n_edges if cap is None else int(cap)
    if cap < 1:
        raise InputError("cap must be >= 1")
    tc = tutte_connectivity(g, cap)
    fc = matroid_connectivity(mfc(g), cap)
    circuit_matroid = matroid_from_circuits(
        g.edge_ids(), cycle_edge_sets(g), label=f"cycles({g.name or 'graph'})"
    )
    cc = matroid_connectivity(circuit_matroid, cap)
    agree = tc == fc == cc
    first = None
    if not agree:
        first = min(tc, fc, cc) + 1
    return EquivalenceReport(
        cap=cap,
        tutte=tc,
        matroid_fc=fc,
        matroid_circuits=cc,
        agree=agree,
        first_discrepancy=first,
    )

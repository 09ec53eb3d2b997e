"""Finitely presented periodic infinite graphs and their finite windows.

A periodic graph is a finite motif replicated over one or two ends.  The
motif owns its column of vertices plus the edges reaching back into the
previous copy; the previous copy's column appears in the motif as a list of
phantom "left" vertices that the gluing identifies with the "right" list of
the copy before.  One-ended graphs additionally carry a finite core that the
first copy attaches to (by vertex name).

Windows are plain MultiGraphs: copies −n..n (two ends) or core + copies 1..n
(one end), keeping only edges with both endpoints inside.  Window
contraction adds one vertex per end and re-attaches each edge crossing the
window boundary to its end vertex; cycles through end vertices stand in for
the infinite cycles of the ambient graph.

Infinite edge sets are presented finitely by PeriodicEdgeSet: explicit ids
in a bounded zone plus per-end tail patterns (motif edge ids present in
every copy beyond the zone).
"""

import math

from . import kernels
from .errors import InputError, InternalConsistencyError, PreconditionError
from .graphs import MultiGraph, incident_vertex_set

INFINITE = math.inf

LEFT_END = "end:left"
RIGHT_END = "end:right"


class PeriodicGraph:
    """Finite core plus a motif replicated over one or two ends."""

    def __init__(self, motif: MultiGraph, left, right, ends=2, core=None, name=""):
        self.name = name
        self.motif = motif
        self.left = tuple(left)
        self.right = tuple(right)
        self.ends = int(ends)
        if self.ends not in (1, 2):
            raise InputError("ends must be 1 or 2")
        if len(self.left) != len(self.right):
            raise InputError("left and right boundary lists must have equal length")
        if not set(self.left) <= motif.vertices or not set(self.right) <= motif.vertices:
            raise InputError("boundary lists must consist of motif vertices")
        self.owned = frozenset(motif.vertices) - frozenset(self.left)
        if not set(self.right) <= self.owned:
            raise InputError("right boundary must be owned (disjoint from the left list)")
        for e, (a, b) in motif.edges.items():
            if a not in self.owned and b not in self.owned:
                raise InputError(f"motif edge {e!r} lies entirely in the previous copy")
        if self.ends == 2:
            if core is not None and core.edges:
                raise InputError("two-ended periodic graphs take no core")
            self.core = MultiGraph([], {})
        else:
            self.core = core if core is not None else MultiGraph(list(self.left), {})
            missing = set(self.left) - self.core.vertices
            if missing:
                raise InputError(f"core must contain the attachment vertices {sorted(missing)}")
        if set(self.core.edges) & set(motif.edges):
            raise InputError("core and motif edge ids must be disjoint")
        self._left_slot = {v: j for j, v in enumerate(self.left)}

    def copy_range(self, n):
        return (-n, n) if self.ends == 2 else (1, n)

    def end_names(self):
        return (LEFT_END, RIGHT_END) if self.ends == 2 else (RIGHT_END,)

    def vertex_at(self, v, i):
        """Window id of motif vertex v as seen from copy i (phantoms resolve back)."""
        j = self._left_slot.get(v)
        if j is None:
            return f"{v}@{i}"
        prev = i - 1
        if self.ends == 1 and prev == 0:
            return self.left[j]  # core attachment, by name
        return f"{self.right[j]}@{prev}"

    def parse_edge_id(self, eid):
        """Split a window edge id into (motif edge, copy index); core edges give (eid, None)."""
        if "@" in eid:
            base, _, idx = eid.rpartition("@")
            if base not in self.motif.edges:
                raise InputError(f"unknown motif edge in id {eid!r}")
            try:
                copy = int(idx)
            except ValueError:
                raise InputError(f"bad copy index in edge id {eid!r}") from None
            if self.ends == 1 and copy < 1:
                raise InputError(f"one-ended copies start at 1, got {eid!r}")
            return base, copy
        if eid not in self.core.edges:
            raise InputError(f"unknown edge id {eid!r}")
        return eid, None

    def __repr__(self):
        label = self.name or "PeriodicGraph"
        return f"<{label}: {self.ends}-ended, motif {self.motif.n_edges} edges>"


class ContractedWindow(MultiGraph):
    """A window plus its end vertices; crossing edges re-attached."""

    def __init__(self, vertices, edges, end_vertices, name=""):
        super().__init__(vertices, edges, name=name)
        self.end_vertices = frozenset(end_vertices)

    def real_vertices(self):
        return self.vertices - self.end_vertices


def window(gp: PeriodicGraph, n: int) -> MultiGraph:
    """Finite window: core plus motif copies, edges with both endpoints inside."""
    if n < 0:
        raise InputError("window size must be >= 0")
    lo, hi = gp.copy_range(n)
    verts = set(gp.core.vertices)
    edges = dict(gp.core.edges)
    for i in range(lo, hi + 1):
        for v in gp.owned:
            verts.add(f"{v}@{i}")
    for i in range(lo, hi + 1):
        for e, (a, b) in gp.motif.edges.items():
            aa, bb = gp.vertex_at(a, i), gp.vertex_at(b, i)
            if aa in verts and bb in verts:
                edges[f"{e}@{i}"] = (aa, bb)
    return MultiGraph(verts, edges, name=f"{gp.name or 'periodic'}[window {n}]")


def window_contract(gp: PeriodicGraph, n: int) -> ContractedWindow:
    """Window plus one vertex per end; boundary-crossing edges re-attached."""
    base = window(gp, n)
    lo, hi = gp.copy_range(n)
    verts = set(base.vertices)
    edges = dict(base.edges)
    ends = gp.end_names()
    verts.update(ends)

    def add_crossing(copy_idx, end_name):
        for e, (a, b) in gp.motif.edges.items():
            aa, bb = gp.vertex_at(a, copy_idx), gp.vertex_at(b, copy_idx)
            inside_a, inside_b = aa in base.vertices, bb in base.vertices
            if inside_a == inside_b:
                continue  # fully inside (already present) or fully in the tail
            eid = f"{e}@{copy_idx}"
            edges[eid] = (aa if inside_a else end_name, bb if inside_b else end_name)

    add_crossing(hi + 1, RIGHT_END)
    if gp.ends == 2:
        add_crossing(lo, LEFT_END)
    return ContractedWindow(
        verts, edges, ends, name=f"{gp.name or 'periodic'}[contracted {n}]"
    )


class PeriodicEdgeSet:
    """Edge set of a periodic graph: explicit zone ids plus per-end tails.

    Copies with index >= tail_start (and <= -tail_start for two-ended
    graphs) follow the tail patterns; everything nearer, including core
    edges, is governed by the explicit id set.
    """

    def __init__(self, gp: PeriodicGraph, explicit=(), left_tail=(), right_tail=(), tail_start=1):
        self.gp = gp
        self.tail_start = int(tail_start)
        if self.tail_start < 1:
            raise InputError("tail_start must be >= 1")
        self.left_tail = frozenset(left_tail) if gp.ends == 2 else frozenset()
        self.right_tail = frozenset(right_tail)
        for t in self.left_tail | self.right_tail:
            if t not in gp.motif.edges:
                raise InputError(f"tail pattern id {t!r} is not a motif edge")
        self.explicit = frozenset(explicit)
        for e in self.explicit:
            base, idx = gp.parse_edge_id(e)
            if idx is not None and not self._in_zone(idx):
                raise InputError(
                    f"explicit edge {e!r} lies beyond tail_start={self.tail_start}"
                )

    def _in_zone(self, idx):
        if self.gp.ends == 2:
            return -self.tail_start < idx < self.tail_start
        return idx < self.tail_start

    def zone_edge_ids(self):
        ids = set(self.gp.core.edges)
        lo = -self.tail_start + 1 if self.gp.ends == 2 else 1
        for i in range(lo, self.tail_start):
            for e in self.gp.motif.edges:
                ids.add(f"{e}@{i}")
        return frozenset(ids)

    def contains(self, eid) -> bool:
        base, idx = self.gp.parse_edge_id(eid)
        if idx is None or self._in_zone(idx):
            return eid in self.explicit
        if idx >= self.tail_start:
            return base in self.right_tail
        return base in self.left_tail

    def complement(self) -> "PeriodicEdgeSet":
        motif_ids = frozenset(self.gp.motif.edges)
        return PeriodicEdgeSet(
            self.gp,
            explicit=self.zone_edge_ids() - self.explicit,
            left_tail=motif_ids - self.left_tail,
            right_tail=motif_ids - self.right_tail,
            tail_start=self.tail_start,
        )

    @property
    def is_finite(self):
        if self.right_tail:
            return False
        return not (self.gp.ends == 2 and self.left_tail)

    @property
    def is_cofinite(self):
        motif_ids = frozenset(self.gp.motif.edges)
        if self.right_tail != motif_ids:
            return False
        return self.gp.ends != 2 or self.left_tail == motif_ids

    def restrict(self, host: MultiGraph) -> frozenset:
        """Member edge ids among a window's (or contracted window's) edges."""
        return frozenset(e for e in host.edges if self.contains(e))

    def widened(self, tail_start) -> "PeriodicEdgeSet":
        """Same set re-presented with a larger explicit zone."""
        if tail_start <= self.tail_start:
            return self
        probe = PeriodicEdgeSet(self.gp, tail_start=tail_start)
        explicit = frozenset(e for e in probe.zone_edge_ids() if self.contains(e))
        return PeriodicEdgeSet(
            self.gp,
            explicit=explicit,
            left_tail=self.left_tail,
            right_tail=self.right_tail,
            tail_start=tail_start,
        )

    def describe(self):
        parts = {"explicit": sorted(self.explicit), "tail_start": self.tail_start}
        if self.gp.ends == 2:
            parts["left_tail"] = sorted(self.left_tail)
        parts["right_tail"] = sorted(self.right_tail)
        return parts


def as_edge_set(gp: PeriodicGraph, x) -> PeriodicEdgeSet:
    """Coerce a plain finite id collection into a PeriodicEdgeSet."""
    if isinstance(x, PeriodicEdgeSet):
        if x.gp is not gp:
            raise InputError("edge set belongs to a different periodic graph")
        return x
    ids = frozenset(x)
    max_idx = 0
    for e in ids:
        _, idx = gp.parse_edge_id(e)
        if idx is not None:
            max_idx = max(max_idx, abs(idx))
    return PeriodicEdgeSet(gp, explicit=ids, tail_start=max_idx + 1)


def edge_set_from_spec(gp: PeriodicGraph, spec: str) -> PeriodicEdgeSet:
    """Named edge-set generators for periodic graphs.

    Supported: 'all', 'none', 'rungs'/'rails' (motif-id prefix groups),
    'motif:<id>', 'left-half:N', 'right-half:N', or a comma-separated list
    of explicit edge ids.
    """
    spec = spec.strip()
    motif_ids = frozenset(gp.motif.edges)

    def by_prefix(prefix):
        tails = frozenset(e for e in motif_ids if e.startswith(prefix))
        if not tails:
            raise InputError(f"no motif edges match prefix {prefix!r}")
        core_part = frozenset(e for e in gp.core.edges if e.startswith(prefix))
        ts = 1
        probe = PeriodicEdgeSet(gp, tail_start=ts)
        explicit = frozenset(
            e for e in probe.zone_edge_ids()
            if (gp.parse_edge_id(e)[0] in tails) or (e in core_part)
        )
        return PeriodicEdgeSet(
            gp, explicit=explicit, left_tail=tails, right_tail=tails, tail_start=ts
        )

    if spec == "all":
        probe = PeriodicEdgeSet(gp, tail_start=1)
        return PeriodicEdgeSet(
            gp,
            explicit=probe.zone_edge_ids(),
            left_tail=motif_ids,
            right_tail=motif_ids,
            tail_start=1,
        )
    if spec in ("none", ""):
        return PeriodicEdgeSet(gp, tail_start=1)
    if spec == "rungs":
        return by_prefix("rung")
    if spec == "rails":
        return by_prefix("rail")
    if spec.startswith("motif:"):
        mid = spec[len("motif:"):]
        if mid not in motif_ids:
            raise InputError(f"unknown motif edge {mid!r}")
        probe = PeriodicEdgeSet(gp, tail_start=1)
        explicit = frozenset(
            e for e in probe.zone_edge_ids() if gp.parse_edge_id(e)[0] == mid
        )
        return PeriodicEdgeSet(
            gp, explicit=explicit, left_tail=frozenset([mid]),
            right_tail=frozenset([mid]), tail_start=1,
        )
    if spec.startswith(("left-half:", "right-half:")):
        kind, _, raw = spec.partition(":")
        try:
            pivot = int(raw)
        except ValueError:
            raise InputError(f"bad cut index in {spec!r}") from None
        ts = max(1, abs(pivot) + 1)
        probe = PeriodicEdgeSet(gp, tail_start=ts)
        if kind == "left-half":
            keep = lambda idx: idx is None or idx < pivot  # core counts as leftmost
            left_tail, right_tail = motif_ids, frozenset()
            if gp.ends == 1:
                left_tail = frozenset()
        else:
            keep = lambda idx: idx is not None and idx >= pivot
            left_tail, right_tail = frozenset(), motif_ids
        explicit = frozenset(
            e for e in probe.zone_edge_ids() if keep(gp.parse_edge_id(e)[1])
        )
        return PeriodicEdgeSet(
            gp, explicit=explicit, left_tail=left_tail,
            right_tail=right_tail, tail_start=ts,
        )
    ids = [tok for tok in (t.strip() for t in spec.split(",")) if tok]
    return as_edge_set(gp, ids)


# --- the windowed operations ------------------------------------------------

def _tail_shares_vertex(gp: PeriodicGraph, x: PeriodicEdgeSet, y: PeriodicEdgeSet, end: str) -> bool:
    """Do x and y share vertices in every sufficiently far copy toward end?

    Materializes three deep-tail copies; the middle copy's incidences are
    complete there, and the membership pattern repeats per period.
    """
    x_tail = x.right_tail if end == RIGHT_END else x.left_tail
    y_tail = y.right_tail if end == RIGHT_END else y.left_tail
    if not x_tail or not y_tail:
        return False
    i0 = x.tail_start + 2
    sign = 1 if end == RIGHT_END else -1
    incident = {}
    for i in (i0 - 1, i0, i0 + 1):
        for e, (a, b) in gp.motif.edges.items():
            side = "x" if e in x_tail else ("y" if e in y_tail else None)
            if side is None:
                continue
            for vert in (gp.vertex_at(a, sign * i), gp.vertex_at(b, sign * i)):
                incident.setdefault(vert, set()).add(side)
    middle = {f"{v}@{sign * i0}" for v in gp.owned}
    return any(incident.get(w, set()) == {"x", "y"} for w in middle)


def periodic_boundary_size(gp: PeriodicGraph, x) -> float:
    """|V[X] ∩ V[Y]| for a partition of a periodic graph's edges; may be inf."""
    xs = as_edge_set(gp, x)
    ys = xs.complement()
    for end in gp.end_names():
        if _tail_shares_vertex(gp, xs, ys, end):
            return INFINITE
    n0 = xs.tail_start + 1
    vals = []
    for n in (n0, n0 + 1):
        host = window(gp, n)
        xin = xs.restrict(host)
        yin = frozenset(host.edges) - xin
        vals.append(len(incident_vertex_set(host, xin) & incident_vertex_set(host, yin)))
    if vals[0] != vals[1]:
        raise InternalConsistencyError(
            f"boundary size did not stabilize: {vals[0]} at window {n0}, {vals[1]} at {n0 + 1}"
        )
    return vals[0]


def periodic_component_count(gp: PeriodicGraph, x) -> float:
    """c(X) for a finite or cofinite edge set of a periodic graph."""
    xs = as_edge_set(gp, x)
    if xs.is_finite:
        host = window(gp, xs.tail_start)
        xin = xs.restrict(host)
        if not xin:
            return 0
        return int(
            kernels.components_indexed(
                host.uarr, host.varr, host.n_vertices, host.index_array(xin)
            )
        )
    if not xs.is_cofinite:
        raise PreconditionError(
            "component counts on periodic graphs need a finite or cofinite edge set"
        )
    n0 = xs.tail_start + 1
    vals = []
    for n in (n0, n0 + 1):
        host = window(gp, n)
        xin = xs.restrict(host)
        vals.append(
            int(
                kernels.components_indexed(
                    host.uarr, host.varr, host.n_vertices, host.index_array(xin)
                )
            )
            if xin
            else 0
        )
    if vals[0] != vals[1]:
        raise InternalConsistencyError(
            f"component count did not stabilize: {vals[0]} at window {n0}, {vals[1]} at {n0 + 1}"
        )
    return vals[0]


def periodic_is_two_connected(gp: PeriodicGraph) -> bool:
    """2-connectivity probed on contracted windows of size 3 and 4."""
    from .graphs import is_two_connected as finite_check

    got = [finite_check(window_contract(gp, n)) for n in (3, 4)]
    if got[0] != got[1]:
        raise InternalConsistencyError("2-connectivity check did not stabilize over windows 3, 4")
    return got[0]

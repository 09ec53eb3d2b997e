"""Dual graph pairs, planar dual construction and duality invariances.

A dual pair shares one edge-id set; its defining property is that the cycle
edge sets of one graph are exactly the bonds of the other.  The checks here
are exhaustive at desk scale and deliberately routed through independent
machinery: verify_dual_pair enumerates cycles and bonds graph-theoretically
while verify_graphdual compares matroid oracles subset by subset.
"""

from dataclasses import dataclass

from .connectivity import tutte_connectivity
from .errors import CapacityError, EmbeddingError, InputError, capacity_limit
from .graphs import MultiGraph, is_connected
from .graphic import bonds_of, cycle_edge_sets, mfc
from .matroids import Matroid, dual, kappa, matroid_connectivity, same_matroid


class DualPair:
    """Two graphs on an identical edge-id set; verified flag set by the check."""

    def __init__(self, g: MultiGraph, g_star: MultiGraph):
        if g.edge_ids() != g_star.edge_ids():
            raise InputError("dual pair graphs must share one edge-id set")
        self.g = g
        self.g_star = g_star
        self.verified = False

    def __repr__(self):
        tick = "verified" if self.verified else "unverified"
        return f"<DualPair {self.g.name or 'g'} / {self.g_star.name or 'g*'} ({tick})>"


@dataclass(frozen=True)
class DualCheckReport:
    ok: bool
    direction: str = ""
    witness: frozenset = frozenset()

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {
            "ok": self.ok,
            "direction": self.direction or None,
            "witness": sorted(self.witness),
        }


def planar_dual(g: MultiGraph, faces) -> MultiGraph:
    """Dual graph of an embedding given as a list of facial edge cycles.

    One dual vertex per face; each primal edge joins its two incident faces
    (a loop when one face traverses it twice).  Validation: every edge is
    used exactly twice across the faces and Euler's count |V|-|E|+|F| = 2
    holds; the input must be connected for that count to make sense.
    """
    if not is_connected(g):
        raise EmbeddingError("embeddings are supplied for connected graphs")
    usage = {e: [] for e in g.edges}
    for fi, face in enumerate(faces):
        for e in face:
            if e not in usage:
                raise EmbeddingError(f"face {fi} uses unknown edge {e!r}")
            usage[e].append(fi)
    bad = {e: len(f) for e, f in usage.items() if len(f) != 2}
    if bad:
        raise EmbeddingError(f"edges not used exactly twice: {bad}")
    if g.n_vertices - g.n_edges + len(faces) != 2:
        raise EmbeddingError(
            f"Euler count failed: {g.n_vertices} - {g.n_edges} + {len(faces)} != 2"
        )
    verts = [f"f{i}" for i in range(len(faces))]
    edges = {e: (f"f{fs[0]}", f"f{fs[1]}") for e, fs in usage.items()}
    return MultiGraph(verts, edges, name=f"{g.name or 'graph'}*")


def verify_dual_pair(pair: DualPair) -> DualCheckReport:
    """Cycles of g must equal bonds of g*, and symmetrically.

    Both families come from graph-theoretic enumeration (no matroid oracle),
    keeping this check independent of verify_graphdual.
    """
    n = pair.g.n_edges
    if n > capacity_limit(14):
        raise CapacityError(f"dual-pair check over {n} edges exceeds the bound")
    checks = [
        ("cycles(g) vs bonds(g*)", cycle_edge_sets(pair.g), bonds_of(pair.g_star)),
        ("cycles(g*) vs bonds(g)", cycle_edge_sets(pair.g_star), bonds_of(pair.g)),
    ]
    for direction, cycles, bonds in checks:
        cyc, bnd = set(cycles), set(bonds)
        if cyc != bnd:
            witness = next(iter(cyc.symmetric_difference(bnd)))
            return DualCheckReport(False, direction, witness)
    pair.verified = True
    return DualCheckReport(True)


def verify_graphdual(pair: DualPair) -> bool:
    """dual(M_FC(g)) and M_FC(g*) agree on every subset."""
    n = pair.g.n_edges
    if n > capacity_limit(14):
        raise CapacityError(f"graph-dual check over {n} edges exceeds the bound")
    equal, _ = same_matroid(dual(mfc(pair.g)), mfc(pair.g_star))
    return equal


def check_kappa_duality(m: Matroid) -> bool:
    """kappa agrees with the dual's kappa on every subset of the ground set."""
    n = m.size
    if n > capacity_limit(10):
        raise CapacityError(f"kappa-duality sweep over {n} elements exceeds the bound")
    co = dual(m)
    for mask in range(1 << n):
        xs = m.subset_of_mask(mask)
        if kappa(m, xs) != kappa(co, xs):
            return False
    return True


@dataclass(frozen=True)
class TutteDualityReport:
    """Both Tutte-connectivities plus the matroid chain linking them."""

    tutte_g: int
    tutte_g_star: int
    conn_mfc_g: int
    conn_dual_mfc_g: int
    conn_mfc_g_star: int
    agree: bool

    def to_json(self):
        return {
            "tutte_g": self.tutte_g,
            "tutte_g_star": self.tutte_g_star,
            "conn_mfc_g": self.conn_mfc_g,
            "conn_dual_mfc_g": self.conn_dual_mfc_g,
            "conn_mfc_g_star": self.conn_mfc_g_star,
            "agree": self.agree,
        }


def tutte_duality_check(pair: DualPair, cap=None) -> TutteDualityReport:
    """Replay the duality argument: equal Tutte-connectivities via the chain
    Tutte(g) = conn(M_FC(g)) = conn(M_FC(g)*) = conn(M_FC(g*)) = Tutte(g*)."""
    if not pair.verified:
        report = verify_dual_pair(pair)
        if not report.ok:
            raise InputError(f"pair failed duality verification ({report.direction})")
    cap = pair.g.n_edges if cap is None else int(cap)
    m_g = mfc(pair.g)
    values = TutteDualityReport(
        tutte_g=tutte_connectivity(pair.g, cap),
        tutte_g_star=tutte_connectivity(pair.g_star, cap),
        conn_mfc_g=matroid_connectivity(m_g, cap),
        conn_dual_mfc_g=matroid_connectivity(dual(m_g), cap),
        conn_mfc_g_star=matroid_connectivity(mfc(pair.g_star), cap),
        agree=False,
    )
    vals = {
        values.tutte_g,
        values.tutte_g_star,
        values.conn_mfc_g,
        values.conn_dual_mfc_g,
        values.conn_mfc_g_star,
    }
    return TutteDualityReport(
        tutte_g=values.tutte_g,
        tutte_g_star=values.tutte_g_star,
        conn_mfc_g=values.conn_mfc_g,
        conn_dual_mfc_g=values.conn_dual_mfc_g,
        conn_mfc_g_star=values.conn_mfc_g_star,
        agree=len(vals) == 1,
    )

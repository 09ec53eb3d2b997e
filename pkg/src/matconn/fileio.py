"""JSON file formats: graphs (finite and periodic), matroids, dual pairs.

Graph files: {"vertices": [...], "edges": [{"id", "u", "v"}, ...]} with
optional "faces" (lists of edge ids) and optional "periodic" presentation
{"ends": 1|2, "core": {...}, "motif": {..., "left": [...], "right": [...]}}.
Matroid files list explicit circuits; independence is derived as "contains
no circuit".  Dual-pair files hold two graphs on one edge-id set.
"""

import json
from pathlib import Path

from .duality import DualPair
from .errors import InputError
from .graphs import MultiGraph
from .matroids import Matroid, matroid_from_circuits
from .periodic import PeriodicGraph


def _load_obj(source):
    if isinstance(source, (str, Path)):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from None
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON in {source}: {exc}") from None
    return source


def _graph_from_obj(obj, name="") -> MultiGraph:
    try:
        vertices = obj["vertices"]
        edge_list = obj["edges"]
    except (KeyError, TypeError):
        raise InputError("graph object needs 'vertices' and 'edges'") from None
    edges = {}
    for entry in edge_list:
        try:
            eid, u, v = entry["id"], entry["u"], entry["v"]
        except (KeyError, TypeError):
            raise InputError(f"edge entries need id/u/v, got {entry!r}") from None
        if eid in edges:
            raise InputError(f"duplicate edge id {eid!r}")
        edges[eid] = (u, v)
    return MultiGraph(vertices, edges, name=name or obj.get("name", ""))


def graph_to_obj(g: MultiGraph) -> dict:
    return {
        "name": g.name,
        "vertices": list(g.vertex_order),
        "edges": [
            {"id": e, "u": g.edges[e][0], "v": g.edges[e][1]} for e in g.edge_order
        ],
    }


def load_graph(source, name=""):
    """Graph file -> (MultiGraph | PeriodicGraph, faces-or-None)."""
    obj = _load_obj(source)
    faces = obj.get("faces")
    if "periodic" in obj:
        spec = obj["periodic"]
        try:
            ends = int(spec["ends"])
            motif_obj = spec["motif"]
            left = motif_obj["left"]
            right = motif_obj["right"]
        except (KeyError, TypeError):
            raise InputError("periodic presentation needs ends and motif with left/right") from None
        motif = _graph_from_obj(motif_obj, name="motif")
        core = None
        if spec.get("core") is not None:
            core = _graph_from_obj(spec["core"], name="core")
        gp = PeriodicGraph(
            motif, left=left, right=right, ends=ends, core=core,
            name=name or obj.get("name", ""),
        )
        return gp, faces
    return _graph_from_obj(obj, name=name), faces


def load_matroid(source) -> Matroid:
    """Matroid file: {"ground": [...], "circuits": [[...], ...]}."""
    obj = _load_obj(source)
    try:
        ground = obj["ground"]
        circuits = obj["circuits"]
    except (KeyError, TypeError):
        raise InputError("matroid object needs 'ground' and 'circuits'") from None
    return matroid_from_circuits(ground, circuits, label=obj.get("name", ""))


def load_dual_pair(source) -> DualPair:
    """Dual-pair file: {"g": <graph>, "g_star": <graph>}; id sets must match."""
    obj = _load_obj(source)
    try:
        g_obj, gs_obj = obj["g"], obj["g_star"]
    except (KeyError, TypeError):
        raise InputError("dual-pair object needs 'g' and 'g_star'") from None
    g = _graph_from_obj(g_obj, name=g_obj.get("name", "g"))
    g_star = _graph_from_obj(gs_obj, name=gs_obj.get("name", "g_star"))
    return DualPair(g, g_star)

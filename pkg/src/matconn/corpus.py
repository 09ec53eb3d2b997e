"""Built-in graphs: cycles, K4, K2,3, wheels, prism, bowtie, bonds, ladders.

Finite builders return MultiGraphs; where a planar embedding is needed the
``*_faces`` companions give the face lists (edge-id cycles).  The ladders
are the periodic corpus: the two-ended double ladder and a one-ended ladder
whose core is the initial rung column.
"""

from .errors import InputError
from .graphs import MultiGraph
from .periodic import PeriodicGraph


def cycle(n: int) -> MultiGraph:
    """C_n with vertices v1..vn and edges e12, e23, ..., e{n}1."""
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = {}
    for i in range(1, n + 1):
        j = i % n + 1
        edges[f"e{i}{j}"] = (f"v{i}", f"v{j}")
    return MultiGraph(verts, edges, name=f"C{n}")


def cycle_faces(n: int):
    ids = list(cycle(n).edge_order)
    return [ids, ids]


def complete_k4() -> MultiGraph:
    verts = ["v1", "v2", "v3", "v4"]
    edges = {}
    for i in range(1, 5):
        for j in range(i + 1, 5):
            edges[f"e{i}{j}"] = (f"v{i}", f"v{j}")
    return MultiGraph(verts, edges, name="K4")


def k4_faces():
    # v4 drawn inside triangle v1 v2 v3
    return [
        ["e12", "e24", "e14"],
        ["e23", "e34", "e24"],
        ["e13", "e14", "e34"],
        ["e12", "e23", "e13"],
    ]


def complete_bipartite_k23() -> MultiGraph:
    verts = ["a1", "a2", "b1", "b2", "b3"]
    edges = {}
    for i in (1, 2):
        for j in (1, 2, 3):
            edges[f"a{i}b{j}"] = (f"a{i}", f"b{j}")
    return MultiGraph(verts, edges, name="K2,3")


def wheel(n: int) -> MultiGraph:
    """W_n: an n-cycle rim v1..vn plus hub h with spokes s1..sn."""
    if n < 3:
        raise InputError("wheel rim needs at least 3 vertices")
    g = cycle(n)
    edges = dict(g.edges)
    verts = set(g.vertices) | {"h"}
    for i in range(1, n + 1):
        edges[f"s{i}"] = ("h", f"v{i}")
    return MultiGraph(verts, edges, name=f"W{n}")


def wheel_faces(n: int):
    faces = []
    for i in range(1, n + 1):
        j = i % n + 1
        faces.append([f"s{i}", f"e{i}{j}", f"s{j}"])
    faces.append([f"e{i}{i % n + 1}" for i in range(1, n + 1)])
    return faces


def prism() -> MultiGraph:
    """Triangular prism: triangles a1a2a3 / b1b2b3 joined by the matching m1..m3."""
    verts = [f"a{i}" for i in (1, 2, 3)] + [f"b{i}" for i in (1, 2, 3)]
    edges = {}
    for i, j in ((1, 2), (2, 3), (1, 3)):
        edges[f"t{i}{j}"] = (f"a{i}", f"a{j}")
        edges[f"u{i}{j}"] = (f"b{i}", f"b{j}")
    for i in (1, 2, 3):
        edges[f"m{i}"] = (f"a{i}", f"b{i}")
    return MultiGraph(verts, edges, name="prism")


def prism_faces():
    return [
        ["t12", "t23", "t13"],
        ["u12", "u23", "u13"],
        ["t12", "m2", "u12", "m1"],
        ["t23", "m3", "u23", "m2"],
        ["t13", "m3", "u13", "m1"],
    ]


def bowtie() -> MultiGraph:
    """Two triangles sharing the single vertex c."""
    verts = ["a", "b", "c", "d", "e"]
    edges = {
        "ab": ("a", "b"),
        "bc": ("b", "c"),
        "ca": ("c", "a"),
        "cd": ("c", "d"),
        "de": ("d", "e"),
        "ec": ("e", "c"),
    }
    return MultiGraph(verts, edges, name="bowtie")


def bond(n: int) -> MultiGraph:
    """B_n: two vertices joined by n parallel edges e1..en."""
    if n < 1:
        raise InputError("bond needs at least one edge")
    edges = {f"e{i}": ("p", "q") for i in range(1, n + 1)}
    return MultiGraph(["p", "q"], edges, name=f"B{n}")


def bond_faces(n: int):
    return [[f"e{i}", f"e{i % n + 1}"] for i in range(1, n + 1)]


def loop_graph() -> MultiGraph:
    """A triangle with an extra loop at v1 (loop edge-case probe)."""
    g = cycle(3)
    edges = dict(g.edges)
    edges["loop1"] = ("v1", "v1")
    return MultiGraph(g.vertices, edges, name="C3+loop")


def _ladder_motif() -> MultiGraph:
    verts = ["tL", "bL", "t", "b"]
    edges = {
        "rail_t": ("tL", "t"),
        "rail_b": ("bL", "b"),
        "rung": ("t", "b"),
    }
    return MultiGraph(verts, edges, name="ladder-motif")


def double_ladder() -> PeriodicGraph:
    """Two-ended ladder: columns t@i,b@i joined by rungs, rails both ways."""
    return PeriodicGraph(
        _ladder_motif(), left=["tL", "bL"], right=["t", "b"], ends=2, name="double-ladder"
    )


def one_ended_ladder() -> PeriodicGraph:
    """One-ended ladder whose core is the initial rung column tL-bL."""
    core = MultiGraph(["tL", "bL"], {"rung0": ("tL", "bL")}, name="ladder-core")
    return PeriodicGraph(
        _ladder_motif(), left=["tL", "bL"], right=["t", "b"], ends=1, core=core,
        name="one-ended-ladder",
    )


FINITE_BUILDERS = {
    "c3": lambda: cycle(3),
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "k4": complete_k4,
    "k23": complete_bipartite_k23,
    "w4": lambda: wheel(4),
    "prism": prism,
    "bowtie": bowtie,
    "b3": lambda: bond(3),
    "b4": lambda: bond(4),
}

FACE_BUILDERS = {
    "c3": lambda: cycle_faces(3),
    "c4": lambda: cycle_faces(4),
    "c5": lambda: cycle_faces(5),
    "c6": lambda: cycle_faces(6),
    "k4": k4_faces,
    "w4": lambda: wheel_faces(4),
    "prism": prism_faces,
    "b3": lambda: bond_faces(3),
    "b4": lambda: bond_faces(4),
}

PERIODIC_BUILDERS = {
    "double-ladder": double_ladder,
    "one-ended-ladder": one_ended_ladder,
}


def embedded_dual_pairs():
    """The verified dual-pair corpus, built from the embeddings above.

    planar_dual preserves edge ids, so each pair shares one id set; the
    C3 dual is the 3-bond, the C4 dual the 4-bond, K4 and W4 are self-dual
    in shape.
    """
    from .duality import DualPair, planar_dual

    pairs = {}
    for key in ("c3", "c4", "k4", "w4"):
        g = FINITE_BUILDERS[key]()
        pairs[key] = DualPair(g, planar_dual(g, FACE_BUILDERS[key]()))
    return pairs


def builtin(name: str):
    """Look up a built-in graph by name (finite or periodic)."""
    key = name.strip().lower()
    if key in FINITE_BUILDERS:
        return FINITE_BUILDERS[key]()
    if key in PERIODIC_BUILDERS:
        return PERIODIC_BUILDERS[key]()
    raise InputError(f"unknown built-in graph {name!r}")

"""Union-find kernels over edge-endpoint arrays.

Every graph operation that sits inside an exhaustive sweep bottoms out here:
component counts, forest ranks, boundary sizes and whole-partition sweeps,
all expressed over two parallel int64 endpoint arrays (u[i], v[i] are the
vertex indices of edge i).

Two backends provide the same callables:

* ``numba`` (default): each kernel is compiled with ``@njit(cache=True)``.
* ``python``: the identical source runs uncompiled on numpy arrays.

Select with ``MATCONN_KERNELS=python|numba`` (read at import time).  Point
kernels take an explicit edge-index array and work at any size; sweep
kernels encode edge subsets as int64 bitmasks and are limited to 62 edges,
which is far beyond the exhaustive-search capacity anyway.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


# --- kernel bodies (compiled or plain, depending on backend) ---------------

def _components_indexed(u, v, nv, idx):
    """Number of components of the subgraph spanned by the listed edges."""
    parent = np.arange(nv)
    touched = np.zeros(nv, dtype=np.uint8)
    merges = 0
    nt = 0
    for k in range(idx.shape[0]):
        i = idx[k]
        a = u[i]
        b = v[i]
        if touched[a] == 0:
            touched[a] = 1
            nt += 1
        if touched[b] == 0:
            touched[b] = 1
            nt += 1
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
            merges += 1
    return nt - merges


def _rank_indexed(u, v, nv, idx):
    """Size of a maximal forest inside the listed edges (graphic rank)."""
    parent = np.arange(nv)
    merges = 0
    for k in range(idx.shape[0]):
        i = idx[k]
        a = u[i]
        b = v[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
            merges += 1
    return merges


def _acyclic_indexed(u, v, nv, idx):
    """True iff the listed edges contain no cycle (loops count as cycles)."""
    parent = np.arange(nv)
    for k in range(idx.shape[0]):
        i = idx[k]
        a = u[i]
        b = v[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            return False
        parent[a] = b
    return True


def _boundary_indexed(u, v, nv, in_x):
    """Count vertices incident both to an edge with in_x[i]=1 and one with 0."""
    side_x = np.zeros(nv, dtype=np.uint8)
    side_y = np.zeros(nv, dtype=np.uint8)
    for i in range(in_x.shape[0]):
        if in_x[i] != 0:
            side_x[u[i]] = 1
            side_x[v[i]] = 1
        else:
            side_y[u[i]] = 1
            side_y[v[i]] = 1
    count = 0
    for a in range(nv):
        if side_x[a] != 0 and side_y[a] != 0:
            count += 1
    return count


def _kappa_formula_sweep(u, v, nv, m, out):
    """Connectivity-function formula for every edge subset of a finite host.

    For each bitmask over the m edges, writes
    |V[X] ∩ V[Y]| − c(X) − c(Y) + 1 into out[mask] (host assumed connected).
    """
    n_masks = np.int64(1) << m
    parent = np.empty(nv, dtype=np.int64)
    side_x = np.empty(nv, dtype=np.uint8)
    side_y = np.empty(nv, dtype=np.uint8)
    for mask in range(n_masks):
        for a in range(nv):
            side_x[a] = 0
            side_y[a] = 0
        for i in range(m):
            if mask & (np.int64(1) << i):
                side_x[u[i]] = 1
                side_x[v[i]] = 1
            else:
                side_y[u[i]] = 1
                side_y[v[i]] = 1
        boundary = 0
        for a in range(nv):
            if side_x[a] != 0 and side_y[a] != 0:
                boundary += 1
        comps = 0
        for side in range(2):
            for a in range(nv):
                parent[a] = a
            merges = 0
            nt = 0
            for i in range(m):
                bit = (mask >> i) & 1
                if (side == 0 and bit == 1) or (side == 1 and bit == 0):
                    a = u[i]
                    b = v[i]
                    if side == 0:
                        if side_x[a] == 1:
                            side_x[a] = 2
                            nt += 1
                        if side_x[b] == 1:
                            side_x[b] = 2
                            nt += 1
                    else:
                        if side_y[a] == 1:
                            side_y[a] = 2
                            nt += 1
                        if side_y[b] == 1:
                            side_y[b] = 2
                            nt += 1
                    while parent[a] != a:
                        parent[a] = parent[parent[a]]
                        a = parent[a]
                    while parent[b] != b:
                        parent[b] = parent[parent[b]]
                        b = parent[b]
                    if a != b:
                        parent[a] = b
                        merges += 1
            comps += nt - merges
        out[mask] = boundary - comps + 1


def _tutte_find(u, v, nv, m, ell):
    """First canonical partition that is an ell-Tutte-separation, else 0.

    Canonical: edge 0 always lies in X, so masks run over the other m−1
    edges.  Requires |X|,|Y| ≥ ell and |V[X] ∩ V[Y]| ≤ ell.
    """
    side_x = np.empty(nv, dtype=np.uint8)
    side_y = np.empty(nv, dtype=np.uint8)
    n_rest = np.int64(1) << (m - 1)
    for rest in range(n_rest):
        mask = np.int64(1) | (np.int64(rest) << 1)
        size_x = 0
        for i in range(m):
            if mask & (np.int64(1) << i):
                size_x += 1
        size_y = m - size_x
        if size_x < ell or size_y < ell:
            continue
        for a in range(nv):
            side_x[a] = 0
            side_y[a] = 0
        for i in range(m):
            if mask & (np.int64(1) << i):
                side_x[u[i]] = 1
                side_x[v[i]] = 1
            else:
                side_y[u[i]] = 1
                side_y[v[i]] = 1
        boundary = 0
        for a in range(nv):
            if side_x[a] != 0 and side_y[a] != 0:
                boundary += 1
        if boundary <= ell:
            return mask
    return np.int64(0)


def _tutte_best(u, v, nv, m):
    """Smallest ell admitting an ell-Tutte-separation, with witness mask.

    Returns (ell, mask); (0, 0) when no partition works at any level.  A
    partition X admits exactly the levels max(1, boundary) .. min(|X|,|Y|).
    """
    side_x = np.empty(nv, dtype=np.uint8)
    side_y = np.empty(nv, dtype=np.uint8)
    best_level = np.int64(0)
    best_mask = np.int64(0)
    n_rest = np.int64(1) << (m - 1)
    for rest in range(n_rest):
        mask = np.int64(1) | (np.int64(rest) << 1)
        size_x = 0
        for i in range(m):
            if mask & (np.int64(1) << i):
                size_x += 1
        size_y = m - size_x
        hi = size_x if size_x < size_y else size_y
        if hi < 1:
            continue
        for a in range(nv):
            side_x[a] = 0
            side_y[a] = 0
        for i in range(m):
            if mask & (np.int64(1) << i):
                side_x[u[i]] = 1
                side_x[v[i]] = 1
            else:
                side_y[u[i]] = 1
                side_y[v[i]] = 1
        boundary = 0
        for a in range(nv):
            if side_x[a] != 0 and side_y[a] != 0:
                boundary += 1
        lo = boundary if boundary > 1 else 1
        if lo <= hi and (best_level == 0 or lo < best_level):
            best_level = lo
            best_mask = mask
    return best_level, best_mask


_KERNEL_BODIES = {
    "components_indexed": _components_indexed,
    "rank_indexed": _rank_indexed,
    "acyclic_indexed": _acyclic_indexed,
    "boundary_indexed": _boundary_indexed,
    "kappa_formula_sweep": _kappa_formula_sweep,
    "tutte_find": _tutte_find,
    "tutte_best": _tutte_best,
}


def build_backend(name):
    """Return {kernel-name: callable} for 'python' or 'numba'."""
    if name == "python":
        return dict(_KERNEL_BODIES)
    if name == "numba":
        if numba is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        return {k: numba.njit(cache=True)(f) for k, f in _KERNEL_BODIES.items()}
    raise ValueError(f"unknown kernel backend: {name!r}")


def _default_backend():
    requested = os.environ.get("MATCONN_KERNELS", "").strip().lower()
    if requested in ("python", "numba"):
        return requested
    return "numba" if numba is not None else "python"


BACKEND = _default_backend()
_ACTIVE = build_backend(BACKEND)

components_indexed = _ACTIVE["components_indexed"]
rank_indexed = _ACTIVE["rank_indexed"]
acyclic_indexed = _ACTIVE["acyclic_indexed"]
boundary_indexed = _ACTIVE["boundary_indexed"]
kappa_formula_sweep = _ACTIVE["kappa_formula_sweep"]
tutte_find = _ACTIVE["tutte_find"]
tutte_best = _ACTIVE["tutte_best"]

MAX_MASK_EDGES = 62

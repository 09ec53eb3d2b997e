"""Oracle-defined finite matroids: axioms, duality, bases, connectivity.

A Matroid is a finite ground set plus a pure independence predicate; duals
and restrictions are derived oracles.  The connectivity function is the
rank-free one: pick a basis B of M|X and a basis B' of M minus X, then
kappa(X) is the number of elements that must leave B ∪ B' to reach a basis
of M.  On finite ground sets this coincides with r(X) + r(Y) − r(E), which
the test suite uses as an independent oracle.
"""

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InputError, PreconditionError, capacity_limit


class Matroid:
    """Finite ground set plus an independence oracle (memoized)."""

    def __init__(self, ground, independent, label=""):
        self.ground = tuple(sorted(set(ground)))
        self.ground_set = frozenset(self.ground)
        self.label = label or "matroid"
        self._pred = independent
        self._memo = {}

    @property
    def size(self):
        return len(self.ground)

    def is_independent(self, subset) -> bool:
        key = frozenset(subset)
        if not key <= self.ground_set:
            raise InputError(f"elements outside the ground set: {sorted(key - self.ground_set)}")
        cached = self._memo.get(key)
        if cached is None:
            cached = bool(self._pred(key))
            self._memo[key] = cached
        return cached

    def element_position(self, e):
        return self.ground.index(e)

    def subset_of_mask(self, mask: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self.ground) if mask >> i & 1)

    def mask_of_subset(self, subset) -> int:
        mask = 0
        for e in subset:
            mask |= 1 << self.ground.index(e)
        return mask

    def independence_table(self) -> np.ndarray:
        """Bool array over all 2^n subset masks (n <= 20 guard)."""
        n = self.size
        if n > 20:
            raise CapacityError(f"independence table over {n} elements is too large")
        table = np.zeros(1 << n, dtype=bool)
        for mask in range(1 << n):
            table[mask] = self.is_independent(self.subset_of_mask(mask))
        return table

    def __repr__(self):
        return f"<Matroid {self.label}: {self.size} elements>"


@dataclass(frozen=True)
class Basis:
    """A maximal independent set inside a restriction of its host matroid."""

    elements: frozenset
    matroid: Matroid
    within: frozenset


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class KappaCertificate:
    """kappa value plus the removed set F and the bases that produced it."""

    value: int
    witness: frozenset
    basis_x: frozenset
    basis_rest: frozenset
    merged_basis: frozenset


@dataclass(frozen=True)
class SeparationReport:
    """Certificate of an l-separation / l-Tutte-separation or of absence."""

    kind: str  # "matroid" | "tutte"
    ell: int
    found: bool
    x: frozenset = frozenset()
    y: frozenset = frozenset()
    kappa_or_boundary: object = None
    witness_f: frozenset = frozenset()
    exhaustive: bool = True
    path: str = ""
    x_label: str = ""
    y_label: str = ""

    def to_json(self):
        def side(ids, label):
            if label:
                return {"generator": label}
            return sorted(ids)

        return {
            "kind": self.kind,
            "ell": self.ell,
            "found": self.found,
            "x": side(self.x, self.x_label),
            "y": side(self.y, self.y_label),
            "boundary": self.kappa_or_boundary if self.kind == "tutte" else None,
            "kappa": self.kappa_or_boundary if self.kind == "matroid" else None,
            "witness_f": sorted(self.witness_f),
            "path": self.path or None,
            "exhaustive": self.exhaustive,
        }


def _ordered(within, order):
    if order is None:
        return sorted(within)
    if callable(order):
        return sorted(within, key=order)
    listed = [e for e in order if e in within]
    missing = set(within) - set(listed)
    if missing:
        raise InputError(f"order does not cover elements {sorted(missing)}")
    return listed


def max_independent(m: Matroid, within, containing=(), order=None) -> Basis:
    """Greedy maximal independent set with containing ⊆ I ⊆ within.

    The element order is lexicographic unless a key function or an explicit
    sequence is supplied; on a matroid the result is maximal regardless.
    """
    within = frozenset(within)
    containing = frozenset(containing)
    if not containing <= within:
        raise InputError("containing must be a subset of within")
    if not m.is_independent(containing):
        raise PreconditionError("containing set is dependent")
    current = set(containing)
    for e in _ordered(within - containing, order):
        candidate = frozenset(current | {e})
        if m.is_independent(candidate):
            current.add(e)
    return Basis(elements=frozenset(current), matroid=m, within=within)


def rank(m: Matroid, x) -> int:
    """Size of a maximal independent subset of x (greedy-order independent)."""
    return len(max_independent(m, x).elements)


def dual(m: Matroid) -> Matroid:
    """Dual oracle: I* is independent iff the complement of I* spans m."""
    full_rank = rank(m, m.ground_set)

    def co_independent(subset):
        return rank(m, m.ground_set - subset) == full_rank

    return Matroid(m.ground, co_independent, label=f"dual({m.label})")


def kappa_certificate(m: Matroid, x, order=None) -> KappaCertificate:
    """Rank-free connectivity function with its witness.

    B spans x, B' spans the rest; S is a maximal independent subset of
    B ∪ B' (hence a basis of m, since B ∪ B' spans) and F = (B ∪ B') - S.
    """
    xs = frozenset(x)
    if not xs <= m.ground_set:
        raise InputError(f"x has elements outside the ground set: {sorted(xs - m.ground_set)}")
    b_x = max_independent(m, xs, order=order).elements
    b_rest = max_independent(m, m.ground_set - xs, order=order).elements
    union = b_x | b_rest
    merged = max_independent(m, union, order=order).elements
    witness = union - merged
    return KappaCertificate(
        value=len(witness),
        witness=witness,
        basis_x=b_x,
        basis_rest=b_rest,
        merged_basis=merged,
    )


def kappa(m: Matroid, x, order=None) -> int:
    """Connectivity function value kappa_M(x)."""
    return kappa_certificate(m, x, order=order).value


def check_axioms(m: Matroid) -> AxiomReport:
    """Exhaustive (I1)-(I3) check; (IM) is automatic on finite ground sets.

    Returns the violating subset or pair on failure.  Ground sets beyond the
    capacity bound (default 14) are rejected.
    """
    n = m.size
    if n > capacity_limit(14):
        raise CapacityError(f"axiom check over {n} elements exceeds the exhaustive bound")
    table = m.independence_table()
    if not table[0]:
        return AxiomReport(False, "I1", (frozenset(),))
    # (I2) subset closure, checked one element down (induction closes the gap)
    for mask in range(1 << n):
        if not table[mask]:
            continue
        for b in range(n):
            if mask >> b & 1 and not table[mask ^ (1 << b)]:
                return AxiomReport(
                    False, "I2", (m.subset_of_mask(mask ^ (1 << b)), m.subset_of_mask(mask))
                )
    # (I3) augmentation from maximal sets
    ext = np.zeros(1 << n, dtype=np.int64)
    for mask in range(1 << n):
        if not table[mask]:
            continue
        bits = 0
        for b in range(n):
            if not mask >> b & 1 and table[mask | (1 << b)]:
                bits |= 1 << b
        ext[mask] = bits
    masks = np.arange(1 << n, dtype=np.int64)
    independent = masks[table]
    maximal = independent[ext[independent] == 0]
    non_maximal = independent[ext[independent] != 0]
    for mask in non_maximal:
        usable = np.bitwise_and(maximal, ~mask & ext[mask])
        bad = maximal[usable == 0]
        if bad.size:
            return AxiomReport(
                False, "I3", (m.subset_of_mask(int(mask)), m.subset_of_mask(int(bad[0])))
            )
    return AxiomReport(True)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def find_matroid_separation(m: Matroid, ell: int, mode="exhaustive", rng=None, samples=20000):
    """Search for an l-separation: kappa(X) <= l-1 with |X|, |Y| >= l.

    Exhaustive mode enumerates partitions up to X/Y symmetry by pinning the
    lexicographically smallest element into X; heuristic mode samples.
    """
    if ell < 1:
        raise InputError("separation order ell must be >= 1")
    n = m.size
    if n < 2 * ell:
        # pigeonhole: no partition can keep ell elements on both sides
        return SeparationReport(kind="matroid", ell=ell, found=False, exhaustive=True)
    if mode == "exhaustive":
        if n > capacity_limit(16):
            raise CapacityError(
                f"exhaustive separation search over {n} elements exceeds the bound"
            )
        rest_masks = range(1 << max(n - 1, 0))
        masks = (1 | (rest << 1) for rest in rest_masks)
        exhaustive = True
    elif mode == "heuristic":
        rng = rng or random.Random(0)
        masks = (1 | (rng.getrandbits(max(n - 1, 0)) << 1) for _ in range(samples))
        exhaustive = False
    else:
        raise InputError(f"unknown search mode {mode!r}")

    for mask in masks:
        size_x = _popcount(mask)
        size_y = n - size_x
        if size_x < ell or size_y < ell:
            continue
        xs = m.subset_of_mask(mask)
        cert = kappa_certificate(m, xs)
        if cert.value <= ell - 1:
            return SeparationReport(
                kind="matroid",
                ell=ell,
                found=True,
                x=xs,
                y=m.ground_set - xs,
                kappa_or_boundary=cert.value,
                witness_f=cert.witness,
                exhaustive=exhaustive,
            )
    return SeparationReport(kind="matroid", ell=ell, found=False, exhaustive=exhaustive)


def matroid_connectivity(m: Matroid, cap=None) -> int:
    """Largest k <= cap with no l-separation for l < k; cap means 'at least cap'."""
    n = m.size
    cap = n if cap is None else int(cap)
    if cap < 1:
        raise InputError("connectivity cap must be >= 1")
    if n > capacity_limit(16):
        raise CapacityError(f"exhaustive connectivity over {n} elements exceeds the bound")
    best = None
    for rest in range(1 << max(n - 1, 0)):
        mask = 1 | (rest << 1)
        size_x = _popcount(mask)
        size_y = n - size_x
        hi = min(size_x, size_y)
        if hi < 1:
            continue
        value = kappa(m, m.subset_of_mask(mask))
        lo = value + 1
        if lo <= hi and (best is None or lo < best):
            best = lo
            if best == 1:
                break
    if best is None:
        return cap
    return min(best, cap)


def matroid_from_circuits(ground, circuits, label="") -> Matroid:
    """Explicit small matroid: independence = 'contains no listed circuit'."""
    ground_set = frozenset(ground)
    frozen = []
    for c in circuits:
        cs = frozenset(c)
        if not cs:
            raise InputError("circuits must be nonempty")
        if not cs <= ground_set:
            raise InputError(f"circuit {sorted(cs)} leaves the ground set")
        frozen.append(cs)

    def independent(subset):
        return not any(c <= subset for c in frozen)

    return Matroid(ground_set, independent, label=label or "circuit-matroid")


def uniform(k: int, ground) -> Matroid:
    """Uniform matroid: independent iff |I| <= k."""
    return Matroid(ground, lambda s: len(s) <= k, label=f"U_{k}")


def circuits_of(m: Matroid):
    """All minimal dependent sets, by exhaustive enumeration (small grounds)."""
    n = m.size
    if n > capacity_limit(16):
        raise CapacityError(f"circuit enumeration over {n} elements exceeds the bound")
    found = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(m.ground, size):
            cs = frozenset(combo)
            if m.is_independent(cs):
                continue
            if any(c < cs for c in found):
                continue
            found.append(cs)
    return found


def same_matroid(a: Matroid, b: Matroid):
    """Compare two oracles on every subset; returns (equal, first mismatch)."""
    if a.ground != b.ground:
        return False, None
    n = len(a.ground)
    if n > capacity_limit(16):
        raise CapacityError(f"subset sweep over {n} elements exceeds the bound")
    for mask in range(1 << n):
        subset = a.subset_of_mask(mask)
        if a.is_independent(subset) != b.is_independent(subset):
            return False, subset
    return True, None

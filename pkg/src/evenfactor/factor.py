"""Exact even-factor existence oracles and the odd-component condition.

An even factor is a spanning subgraph with every vertex degree even and
at least 2.  Every all-even-degree edge set is an element of the GF(2)
cycle space, so existence is a coverage question over that space: find an
element whose support touches every vertex.  Coverage shrinks under XOR
(cover(a ^ b) is a subset of cover(a) | cover(b)), which makes a
meet-in-the-middle split over basis halves sound: any solution splits into
half-combinations whose covers jointly reach every vertex, so pairing
half-elements by complementary covers cannot miss one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Edge, Graph, mask_vertices
from .rng import SplitMix64

EXISTS = "exists"
NOT_EXISTS = "not_exists"
UNKNOWN = "unknown"

NAIVE_EDGE_CAP = 24
DEFAULT_MAX_DIM = 40
DEFAULT_MAX_CANDIDATES = 2**30

# below this dimension the whole space is cheaper to scan than to split
_FULL_ENUM_CAP = 4096
_PREPASS_PROBES = 512
_PREPASS_SEED = 0x5EEDC0DE


@dataclass(frozen=True)
class EvenFactorResult:
    status: str
    certificate: tuple[Edge, ...] | None
    search_cost: int


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the odd-components test o(G-S) < |S| over all |S| >= 2."""

    holds: bool
    witness: tuple[int, ...] | None = None
    witness_odd_components: int | None = None


def _spanning_forest_chords(g: Graph) -> tuple[list[Edge], list[int]]:
    """Edges of g plus the fundamental-cycle edge masks of its chords."""
    edges = g.edges()
    eindex = {e: i for i, e in enumerate(edges)}
    parent = [-1] * g.n
    depth = [0] * g.n
    in_tree = [False] * g.n
    tree_edges: set[Edge] = set()
    for root in range(g.n):
        if in_tree[root]:
            continue
        in_tree[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            m = g.adj[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if not in_tree[u]:
                    in_tree[u] = True
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    tree_edges.add((u, v) if u < v else (v, u))
                    stack.append(u)
    basis = []
    for u, v in edges:
        if (u, v) in tree_edges:
            continue
        mask = 1 << eindex[(u, v)]
        a, b = u, v
        while depth[a] > depth[b]:
            pa = parent[a]
            mask ^= 1 << eindex[(a, pa) if a < pa else (pa, a)]
            a = pa
        while depth[b] > depth[a]:
            pb = parent[b]
            mask ^= 1 << eindex[(b, pb) if b < pb else (pb, b)]
            b = pb
        while a != b:
            pa, pb = parent[a], parent[b]
            mask ^= 1 << eindex[(a, pa) if a < pa else (pa, a)]
            mask ^= 1 << eindex[(b, pb) if b < pb else (pb, b)]
            a, b = pa, pb
        basis.append(mask)
    return edges, basis


def cycle_space_basis(g: Graph) -> list[frozenset[Edge]]:
    """Fundamental cycles of a spanning forest: a basis of the cycle space,
    m - n + c elements, every one with all vertex degrees even."""
    edges, basis = _spanning_forest_chords(g)
    return [
        frozenset(edges[i] for i in mask_vertices(mask)) for mask in basis
    ]


def _edge_mask_to_cert(mask: int, edges: list[Edge]) -> tuple[Edge, ...]:
    return tuple(edges[i] for i in mask_vertices(mask))


def has_even_factor(
    g: Graph,
    max_dim: int = DEFAULT_MAX_DIM,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> EvenFactorResult:
    """Decide even-factor existence by searching the cycle space.

    Exact within the caps: `max_dim` bounds the cycle-space dimension the
    search will take on, `max_candidates` bounds the number of elements and
    element pairs examined.  Exceeding either yields status "unknown".
    """
    n = g.n
    if n == 0:
        return EvenFactorResult(EXISTS, (), 0)
    if any(m.bit_count() <= 1 for m in g.adj):
        return EvenFactorResult(NOT_EXISTS, None, 0)
    edges, basis = _spanning_forest_chords(g)
    incident = [0] * n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    full = (1 << n) - 1

    def cover(mask: int) -> int:
        c = 0
        for v in range(n):
            if mask & incident[v]:
                c |= 1 << v
        return c

    # a vertex on no fundamental cycle lies on no cycle at all: only bridges
    # remain at it, and no cycle-space element can cover it
    union = 0
    for b in basis:
        union |= cover(b)
    if union != full:
        return EvenFactorResult(NOT_EXISTS, None, 0)

    d = len(basis)
    if d > max_dim:
        return EvenFactorResult(UNKNOWN, None, 0)

    cost = 0

    if 1 << d <= _FULL_ENUM_CAP:
        cur = 0
        for i in range(1, 1 << d):
            cur ^= basis[(i & -i).bit_length() - 1]
            cost += 1
            if cost > max_candidates:
                return EvenFactorResult(UNKNOWN, None, cost)
            if cover(cur) == full:
                return EvenFactorResult(EXISTS, _edge_mask_to_cert(cur, edges), cost)
        return EvenFactorResult(NOT_EXISTS, None, cost)

    # cheap deterministic pre-pass: single cycles, the all-chords element,
    # then pseudorandom combinations; any full-cover hit is already a factor
    rng = SplitMix64(_PREPASS_SEED)
    all_mask = 0
    for b in basis:
        all_mask ^= b
    probes = basis + [all_mask]
    for _ in range(_PREPASS_PROBES):
        sel = rng.next_u64() & ((1 << d) - 1)
        elem = 0
        while sel:
            low = sel & -sel
            elem ^= basis[low.bit_length() - 1]
            sel ^= low
        probes.append(elem)
    for elem in probes:
        cost += 1
        if cost > max_candidates:
            return EvenFactorResult(UNKNOWN, None, cost)
        if cover(elem) == full:
            return EvenFactorResult(EXISTS, _edge_mask_to_cert(elem, edges), cost)

    # meet in the middle over basis halves
    d_a = d // 2
    index: dict[int, list[int]] = {}
    cur = 0
    index.setdefault(cover(0), []).append(0)
    for i in range(1, 1 << d_a):
        cur ^= basis[(i & -i).bit_length() - 1]
        cost += 1
        if cost > max_candidates:
            return EvenFactorResult(UNKNOWN, None, cost)
        c = cover(cur)
        if c == full:
            return EvenFactorResult(EXISTS, _edge_mask_to_cert(cur, edges), cost)
        index.setdefault(c, []).append(cur)

    superset_memo: dict[int, list[list[int]]] = {}
    half_b = basis[d_a:]
    cur = 0
    for i in range(1 << (d - d_a)):
        if i:
            cur ^= half_b[(i & -i).bit_length() - 1]
        cost += 1
        if cost > max_candidates:
            return EvenFactorResult(UNKNOWN, None, cost)
        cb = cover(cur)
        if cb == full:
            return EvenFactorResult(EXISTS, _edge_mask_to_cert(cur, edges), cost)
        needed = full & ~cb
        buckets = superset_memo.get(needed)
        if buckets is None:
            buckets = [v for k, v in index.items() if k & needed == needed]
            superset_memo[needed] = buckets
        for bucket in buckets:
            for a_mask in bucket:
                cost += 1
                if cost > max_candidates:
                    return EvenFactorResult(UNKNOWN, None, cost)
                x = a_mask ^ cur
                if cover(x) == full:
                    return EvenFactorResult(EXISTS, _edge_mask_to_cert(x, edges), cost)
    return EvenFactorResult(NOT_EXISTS, None, cost)


def has_even_factor_naive(g: Graph) -> EvenFactorResult:
    """Brute-force reference: scan all 2^m edge subsets in increasing bitmask
    order.  Independent of the cycle-space machinery; never "unknown"."""
    m = g.edge_count
    if m > NAIVE_EDGE_CAP:
        raise ValueError(f"naive oracle capped at {NAIVE_EDGE_CAP} edges, got {m}")
    edges = g.edges()
    inc = np.zeros((max(m, 1), g.n), dtype=np.float32)
    for i, (u, v) in enumerate(edges):
        inc[i, u] = 1.0
        inc[i, v] = 1.0
    total = 1 << m
    shifts = np.arange(m, dtype=np.int64)
    chunk = 1 << 16
    for start in range(0, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = ((ids[:, None] >> shifts) & 1).astype(np.float32)
        deg = bits @ inc if m else np.zeros((len(ids), g.n), dtype=np.float32)
        ok = ((deg % 2) == 0).all(axis=1) & (deg != 0).all(axis=1)
        hits = np.nonzero(ok)[0]
        if hits.size:
            subset = start + int(hits[0])
            cert = tuple(edges[i] for i in range(m) if subset >> i & 1)
            return EvenFactorResult(EXISTS, cert, subset + 1)
    return EvenFactorResult(NOT_EXISTS, None, total)


def verify_even_factor(g: Graph, certificate: tuple[Edge, ...]) -> bool:
    """Spanning, all degrees even and >= 2, every edge an edge of g."""
    deg = [0] * g.n
    seen = set()
    for u, v in certificate:
        if not g.has_edge(u, v) or (u, v) in seen:
            return False
        seen.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return all(x >= 2 and x % 2 == 0 for x in deg)


def _odd_component_count(adj: tuple[int, ...], pool: int) -> int:
    odd = 0
    while pool:
        seed = pool & -pool
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                nxt |= adj[b.bit_length() - 1]
                m ^= b
            frontier = nxt & pool & ~comp
            comp |= frontier
        pool &= ~comp
        odd += comp.bit_count() & 1
    return odd


def check_yan_kano_condition(g: Graph) -> ConditionReport:
    """Test o(G-S) < |S| for every S with |S| >= 2 (the Yan-Kano sufficient
    condition for an even factor in even-order graphs).  The first violating
    S in increasing-bitmask order is returned as the witness."""
    if g.n > 24:
        raise ValueError(f"condition check capped at 24 vertices, got {g.n}")
    full = (1 << g.n) - 1
    adj = g.adj
    for smask in range(3, 1 << g.n):
        size = smask.bit_count()
        if size < 2:
            continue
        o = _odd_component_count(adj, full & ~smask)
        if o >= size:
            return ConditionReport(
                holds=False,
                witness=mask_vertices(smask),
                witness_odd_components=o,
            )
    return ConditionReport(holds=True)

"""Closed-form thresholds, hypothesis tests for the two guarantee routes,
extremal-graph recognition, and the per-graph verdict.

The verdict reports what the size route ("1.1") and the spectral route
("1.2") imply for a graph; it deliberately never consults the even-factor
oracle, so "guaranteed" and "true" stay separate observations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import Graph
from .spectral import (
    char_poly,
    largest_real_root,
    quotient_extremal,
    spectral_radius,
)

GUARANTEED_BY_EDGES = "even_factor_guaranteed_by_1.1"
GUARANTEED_BY_SPECTRAL = "even_factor_guaranteed_by_1.2"
EXTREMAL_EXCEPTION = "extremal_exception"
NO_GUARANTEE = "no_guarantee"

# equality at the spectral threshold only happens for the extremal graph
# itself; the tolerance absorbs the power-iteration and root-finder error
RHO_EQUALITY_TOL = 1e-8


def edge_threshold(n: int, delta: int) -> int:
    """Edge count of the extremal graph: C(n-delta+1, 2) + delta*(delta-1)."""
    if delta < 1 or n < 2 * delta:
        raise ValueError(f"threshold undefined for n={n}, delta={delta}")
    return comb(n - delta + 1, 2) + delta * (delta - 1)


def spectral_threshold(n: int, delta: int) -> float:
    """Spectral radius of the extremal graph, as the largest root of the
    quotient characteristic cubic; always exceeds n - delta."""
    poly = char_poly(quotient_extremal(n, delta))
    return largest_real_root(poly, float(n - delta))


def applicability(n: int, delta: int, theorem: str) -> bool:
    """Hypothesis check for a guarantee route, in cleared-denominator
    integer arithmetic.  `theorem` is "1.1" (size) or "1.2" (spectral)."""
    if delta < 2:
        raise ValueError(f"routes require minimum degree at least 2, got {delta}")
    if theorem == "1.1":
        return n % 2 == 0 and n >= 6 * delta - 4 and 6 * n >= delta**2 + 7 * delta + 4
    if theorem == "1.2":
        return n % 2 == 0 and n >= 5 * delta - 3 and 3 * n >= delta**2 + 3 * delta
    raise ValueError(f"unknown theorem {theorem!r}, expected '1.1' or '1.2'")


def recognize_extremal(g: Graph) -> tuple[int, int] | None:
    """(n, delta) iff g is isomorphic to the extremal graph.

    Structural fingerprint: delta dominating vertices, delta-1 independent
    vertices of degree delta attached exactly to them, and an
    (n-2*delta+1)-clique carrying the rest.  The three degree values
    n-1 > n-delta > delta are pairwise distinct once n > 2*delta, so the
    classes cannot be confused.
    """
    n = g.n
    if n == 0:
        return None
    delta = g.min_degree()
    if delta is None or delta < 2 or n <= 2 * delta:
        return None
    core = [v for v in range(n) if g.degree(v) == n - 1]
    small = [v for v in range(n) if g.degree(v) == delta]
    big = [v for v in range(n) if g.degree(v) == n - delta]
    if len(core) != delta or len(small) != delta - 1 or len(big) != n - 2 * delta + 1:
        return None
    core_mask = 0
    for v in core:
        core_mask |= 1 << v
    for v in small:
        if g.adj[v] != core_mask:
            return None
    big_mask = 0
    for v in big:
        big_mask |= 1 << v
    for v in big:
        if g.adj[v] & big_mask != big_mask ^ (1 << v):
            return None
    return (n, delta)


@dataclass(frozen=True)
class Verdict:
    n: int
    delta_G: int | None
    thm11_applicable: bool
    thm12_applicable: bool
    edge_threshold: int | None
    spectral_threshold: float | None
    e_G: int
    rho_G: float | None
    meets_edge: bool | None
    meets_spectral: bool | None
    is_extremal: bool
    guarantee: str
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "delta_G": self.delta_G,
            "thm11_applicable": self.thm11_applicable,
            "thm12_applicable": self.thm12_applicable,
            "edge_threshold": self.edge_threshold,
            "spectral_threshold": self.spectral_threshold,
            "e_G": self.e_G,
            "rho_G": self.rho_G,
            "meets_edge": self.meets_edge,
            "meets_spectral": self.meets_spectral,
            "is_extremal": self.is_extremal,
            "guarantee": self.guarantee,
            "reason": self.reason,
        }


def verdict(g: Graph, which: str = "both", delta: int | None = None) -> Verdict:
    """What the requested routes guarantee for g.

    `which` is "edges", "spectral" or "both"; only the requested routes are
    evaluated (the spectral radius of g is not computed for "edges").
    `delta` overrides the minimum degree for what-if queries.
    """
    if which not in ("edges", "spectral", "both"):
        raise ValueError(f"which must be edges|spectral|both, got {which!r}")
    want_edges = which in ("edges", "both")
    want_spectral = which in ("spectral", "both")

    n = g.n
    e_g = g.edge_count
    delta_used = g.min_degree() if delta is None else delta

    thm11 = thm12 = False
    e_thr: int | None = None
    rho_thr: float | None = None
    rho_g: float | None = None
    meets_edge: bool | None = None
    meets_spectral: bool | None = None
    is_extremal = False
    reason = None

    if delta_used is None:
        reason = "empty graph"
    elif delta_used < 2:
        reason = f"minimum degree {delta_used} below 2"
    else:
        thm11 = applicability(n, delta_used, "1.1")
        thm12 = applicability(n, delta_used, "1.2")
        if n >= 2 * delta_used:
            e_thr = edge_threshold(n, delta_used)
            rho_thr = spectral_threshold(n, delta_used)
            if want_edges:
                meets_edge = e_g >= e_thr
            if want_spectral:
                rho_g = spectral_radius(g).rho
                meets_spectral = rho_g >= rho_thr - RHO_EQUALITY_TOL
        is_extremal = recognize_extremal(g) == (n, delta_used)

    if not g.is_connected() and n > 0:
        reason = "graph is disconnected"
        guarantee = NO_GUARANTEE
    elif want_edges and thm11 and meets_edge and not is_extremal:
        guarantee = GUARANTEED_BY_EDGES
    elif want_spectral and thm12 and meets_spectral and not is_extremal:
        guarantee = GUARANTEED_BY_SPECTRAL
    elif is_extremal and (
        (want_edges and thm11 and meets_edge)
        or (want_spectral and thm12 and meets_spectral)
    ):
        guarantee = EXTREMAL_EXCEPTION
    else:
        guarantee = NO_GUARANTEE

    return Verdict(
        n=n,
        delta_G=delta_used,
        thm11_applicable=thm11,
        thm12_applicable=thm12,
        edge_threshold=e_thr,
        spectral_threshold=rho_thr,
        e_G=e_g,
        rho_G=rho_g,
        meets_edge=meets_edge,
        meets_spectral=meets_spectral,
        is_extremal=is_extremal,
        guarantee=guarantee,
        reason=reason,
    )

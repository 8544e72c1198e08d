"""Spectral radius of graphs and of the 3x3 equitable quotient matrices of
the split families, with exact integer characteristic cubics.

Power iteration runs on A + I throughout: the shift keeps the Perron vector,
moves every eigenvalue up by one, and removes the +/- oscillation that stalls
convergence on bipartite-like graphs.  The reported residual ||Av - rho*v||_inf
is identical to the shifted residual, so the guarantee is stated for A itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, mask_vertices


class PowerIterationError(RuntimeError):
    def __init__(self, message: str, estimate: float, residual: float):
        super().__init__(f"{message} (estimate {estimate}, residual {residual:.3e})")
        self.estimate = estimate
        self.residual = residual


class RootFindingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    iterations: int
    residual: float


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v in range(g.n):
        m = g.adj[v]
        while m:
            b = m & -m
            a[v, b.bit_length() - 1] = 1.0
            m ^= b
    return a


def _power_iterate(a: np.ndarray, tol: float, max_iter: int) -> tuple[float, int, float]:
    k = a.shape[0]
    if k == 1:
        return 0.0, 0, 0.0
    shifted = a + np.eye(k)
    v = np.full(k, 1.0 / np.sqrt(k))
    best = (0.0, np.inf)
    for it in range(1, max_iter + 1):
        w = shifted @ v
        lam = float(v @ w)
        residual = float(np.max(np.abs(w - lam * v)))
        if residual <= tol:
            return lam - 1.0, it, residual
        if residual < best[1]:
            best = (lam - 1.0, residual)
        v = w / np.linalg.norm(w)
    raise PowerIterationError(
        f"no convergence within {max_iter} iterations", best[0], best[1]
    )


def spectral_radius(g: Graph, tol: float = 1e-10, max_iter: int = 10**6) -> SpectralResult:
    """Largest adjacency eigenvalue; the maximum over components when
    disconnected.  Deterministic: the start vector is all-ones."""
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    a = adjacency_matrix(g)
    rho = 0.0
    iterations = 0
    residual = 0.0
    for comp in g.components():
        idx = list(mask_vertices(comp))
        r, it, res = _power_iterate(a[np.ix_(idx, idx)], tol, max_iter)
        iterations += it
        residual = max(residual, res)
        rho = max(rho, r)
    return SpectralResult(rho=rho, iterations=iterations, residual=residual)


# --- quotient matrices of the split-family equitable partitions ---------------


@dataclass(frozen=True)
class QuotientMatrix3:
    """3x3 integer quotient matrix over blocks (join core, big clique, small
    cliques); entries are the constant block row sums of the adjacency."""

    rows: tuple[tuple[int, int, int], ...]
    block_sizes: tuple[int, int, int]
    labels: tuple[str, str, str] = ("core", "big", "small")

    def __post_init__(self) -> None:
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("quotient matrix must be 3x3")
        if any(e < 0 for r in self.rows for e in r):
            raise ValueError("quotient entries must be non-negative")
        if any(b < 1 for b in self.block_sizes):
            raise ValueError("all partition blocks must be non-empty")


def quotient_merged_core(n: int, s: int) -> QuotientMatrix3:
    """Quotient of K_s v (K_{n-2s+1} u (s-1)K_1) over its three blocks."""
    if s < 2 or n - 2 * s + 1 < 1:
        raise ValueError(f"blocks empty for n={n}, s={s}")
    return QuotientMatrix3(
        rows=(
            (s - 1, n - 2 * s + 1, s - 1),
            (s, n - 2 * s, 0),
            (s, 0, 0),
        ),
        block_sizes=(s, n - 2 * s + 1, s - 1),
    )


def quotient_extremal(n: int, delta: int) -> QuotientMatrix3:
    """Same partition shape with the core sized by the minimum degree: the
    quotient of the threshold-attaining graph."""
    return quotient_merged_core(n, delta)


def quotient_small_cliques(n: int, s: int, delta: int) -> QuotientMatrix3:
    """Quotient of K_s v (K_{n-s-q(s-1)} u (s-1)K_q) with q = delta+1-s."""
    q = delta + 1 - s
    big = n - s - q * (s - 1)
    if s < 2 or q < 1 or big < 1:
        raise ValueError(f"blocks empty for n={n}, s={s}, delta={delta}")
    return QuotientMatrix3(
        rows=(
            (s - 1, big, (s - 1) * q),
            (s, big - 1, 0),
            (s, 0, q - 1),
        ),
        block_sizes=(s, big, (s - 1) * q),
    )


@dataclass(frozen=True)
class CubicPoly:
    """Monic x^3 + c2 x^2 + c1 x + c0 with exact integer coefficients."""

    c2: int
    c1: int
    c0: int

    def __call__(self, x):
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def deriv(self, x):
        return (3 * x + 2 * self.c2) * x + self.c1

    def coefficients(self) -> tuple[int, int, int, int]:
        return (1, self.c2, self.c1, self.c0)


def char_poly(m: QuotientMatrix3) -> CubicPoly:
    """det(xI - M) expanded in exact integer arithmetic."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    trace = a + e + i
    minors = (e * i - f * h) + (a * i - c * g) + (a * e - b * d)
    det = (
        a * (e * i - f * h)
        - b * (d * i - f * g)
        + c * (d * h - e * g)
    )
    return CubicPoly(c2=-trace, c1=minors, c0=-det)


def largest_real_root(p: CubicPoly, lower_bound: float, tol: float = 1e-12) -> float:
    """Largest real root of a monic cubic, to absolute tolerance `tol`.

    Newton from a point above every root (where p, p', p'' are all positive)
    descends monotonically onto the largest root; a short bisection polish
    pins it down.  Fails if the root found lies below `lower_bound`.
    """
    start = 1.0 + max(abs(p.c2), abs(p.c1), abs(p.c0))
    x = max(float(lower_bound), start) + 1.0
    for _ in range(200):
        fx = p(x)
        dfx = p.deriv(x)
        if dfx <= 0:
            break
        step = fx / dfx
        x -= step
        if abs(step) < tol / 4:
            break
    # bracket around the Newton estimate and bisect; Newton-from-above leaves
    # p(x) >= 0 up to roundoff
    hi = x + max(tol, 64 * abs(x) * 2.2e-16)
    lo = x - max(tol, 64 * abs(x) * 2.2e-16)
    widen = max(tol, abs(x) * 1e-9)
    tries = 0
    while p(lo) > 0 and tries < 40:
        lo -= widen
        widen = min(2 * widen, 1e-3 * max(1.0, abs(x)))
        tries += 1
    if p(lo) > 0:
        # p never dips below zero nearby: a (near-)double largest root; the
        # Newton estimate is the best available
        if abs(p(x)) <= 1e-6 * max(1.0, abs(x)) ** 3:
            root = x
            if root < lower_bound - 1e-9:
                raise RootFindingError(
                    f"largest real root {root} lies below the required bound {lower_bound}"
                )
            return root
        raise RootFindingError("could not bracket a real root from above")
    for _ in range(200):
        if hi - lo <= tol / 2:
            break
        mid = (lo + hi) / 2
        if p(mid) > 0:
            hi = mid
        else:
            lo = mid
    root = (lo + hi) / 2
    if root < lower_bound - 1e-9:
        raise RootFindingError(
            f"largest real root {root} lies below the required bound {lower_bound}"
        )
    return root

"""Seedable, platform-independent randomness for sweeps and tests.

SplitMix64 (Steele, Lea, Flood 2014) with 64 bits of state: the same seed
yields the same stream on every platform and Python version, which the
sweep-determinism contract requires.  Rejection sampling keeps randrange
unbiased.
"""

from __future__ import annotations

from .graphs import Graph

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        limit = _MASK64 + 1 - (_MASK64 + 1) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def sample(self, k: int, n: int) -> list[int]:
        """k distinct values from range(n), order randomized."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot draw {k} distinct values from range({n})")
        swapped: dict[int, int] = {}
        out = []
        for i in range(k):
            j = i + self.randrange(n - i)
            out.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        return out


def random_graph_with_edges(n: int, m: int, rng: SplitMix64) -> Graph:
    """Uniform simple graph on n labeled vertices with exactly m edges."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m={m} out of range for n={n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [pairs[i] for i in rng.sample(m, total)])


def random_connected_graph(
    n: int, m: int, rng: SplitMix64, max_tries: int = 10_000
) -> Graph:
    if m < n - 1:
        raise ValueError(f"m={m} cannot connect {n} vertices")
    for _ in range(max_tries):
        g = random_graph_with_edges(n, m, rng)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected draw in {max_tries} tries (n={n}, m={m})")


def complete_minus_random_edges(n: int, k: int, rng: SplitMix64) -> Graph:
    """K_n with k uniformly chosen edges removed."""
    total = n * (n - 1) // 2
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    missing = set(rng.sample(k, total))
    return Graph.from_edges(n, [pairs[i] for i in range(total) if i not in missing])

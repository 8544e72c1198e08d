"""Bit-exact graph6 encoding plus a plain edge-list text format.

graph6 packs the upper adjacency triangle column-major into 6-bit groups,
each offset by 63 into the printable range.  The size header uses the
shortest of the 1-, 4- and 8-byte forms (caps n at 2**36 - 1).  Parse errors
carry the byte offset of the offending input position.
"""

from __future__ import annotations

from .graphs import Graph

_MAX_N = (1 << 36) - 1


class GraphParseError(ValueError):
    """Unreadable graph input (either format)."""


class Graph6Error(GraphParseError):
    """Malformed graph6 input; `offset` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _header_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    groups = [(n >> (6 * k)) & 63 for k in range(5, -1, -1)]
    return bytes([126, 126] + [g + 63 for g in groups])


def _parse_header(data: bytes) -> tuple[int, int]:
    """Return (n, index of first edge byte)."""
    if not data:
        raise Graph6Error("empty input", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 2:
        raise Graph6Error("truncated size header", 1)
    if data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated size header", len(data))
        n = 0
        for i in range(1, 4):
            n = n << 6 | (data[i] - 63)
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated size header", len(data))
    n = 0
    for i in range(2, 8):
        n = n << 6 | (data[i] - 63)
    return n, 8


def write_graph6(g: Graph) -> str:
    if g.n > _MAX_N:
        raise ValueError(f"graph6 caps the order at {_MAX_N}")
    out = bytearray(_header_bytes(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte", exc.start) from None
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside the graph6 range 63..126", i)
    n, start = _parse_header(data)
    if n > _MAX_N:
        raise Graph6Error(f"order {n} exceeds the graph6 cap", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - start < nbytes:
        raise Graph6Error(
            f"need {nbytes} edge bytes for n={n}, found {len(data) - start}",
            len(data),
        )
    if len(data) - start > nbytes:
        raise Graph6Error("trailing bytes after edge data", start + nbytes)
    adj = [0] * n
    bit = 0
    j, i = 1, 0
    for k in range(start, start + nbytes):
        group = data[k] - 63
        for shift in range(5, -1, -1):
            if bit < nbits:
                if group >> shift & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit += 1
                i += 1
                if i == j:
                    j += 1
                    i = 0
            elif group >> shift & 1:
                raise Graph6Error("padding bits must be zero", k)
    return Graph(n, tuple(adj))


# --- edge-list text ----------------------------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """One "u v" pair per line, 0-indexed.  An optional leading line with a
    single integer fixes the vertex count; otherwise n = max label + 1."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if len(fields) == 1 and n is None and not edges:
                n = int(fields[0])
                continue
            if len(fields) != 2:
                raise ValueError(f"expected 'u v', got {raw!r}")
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise GraphParseError(f"edge list line {lineno}: {exc}") from None
        if u < 0 or v < 0:
            raise GraphParseError(f"edge list line {lineno}: negative vertex label")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphParseError(f"edge list: {exc}") from None

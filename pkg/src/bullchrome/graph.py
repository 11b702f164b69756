"""Bitset graph core: representation, codecs, and elementary queries.

Vertices are 0..n-1.  Adjacency is one Python int per vertex: bit j of
adj[v] is set iff v and j are adjacent.  Vertex subsets ("masks") are
plain ints throughout the package, which keeps subset-heavy work down to
a few machine-word operations per step at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceededError, GraphFormatError, PreconditionError

MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a mask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with one adjacency-row int per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            r = row
            # only check pairs above v; symmetry of the rest follows
            r >>= v + 1
            u = v + 1
            while r:
                if r & 1 and not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                r >>= 1
                u += 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def non_neighbors(self, v: int) -> int:
        """All vertices other than v that are not adjacent to v."""
        return self.vertices_mask & ~self.adj[v] & ~(1 << v)


def _graph_unchecked(n: int, rows: tuple[int, ...]) -> Graph:
    """Build a Graph skipping validation; rows must be known-consistent.

    Hot loops (enumeration, substitution) construct rows that are
    symmetric by construction, so revalidating them would dominate.
    """
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", rows)
    return g


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertices of mask.

    Returns (subgraph, vmap) where vmap[i] is the original label of the
    subgraph's vertex i; vmap is sorted ascending.
    """
    if mask & ~g.vertices_mask:
        raise ValueError("mask has bits outside the vertex range")
    vmap = tuple(bits(mask))
    pos = {v: i for i, v in enumerate(vmap)}
    rows = []
    for v in vmap:
        row = 0
        for w in bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        rows.append(row)
    return _graph_unchecked(len(vmap), tuple(rows)), vmap


def complement(g: Graph) -> Graph:
    full = g.vertices_mask
    rows = tuple((full & ~row & ~(1 << v)) for v, row in enumerate(g.adj))
    return _graph_unchecked(g.n, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    rows = tuple(g1.adj) + tuple(row << shift for row in g2.adj)
    return _graph_unchecked(g1.n + g2.n, rows)


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected-component masks, each identified by its least vertex.

    `within` restricts to an induced vertex subset (defaults to all).
    """
    rem = g.vertices_mask if within is None else within
    comps = []
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            nxt &= rem & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components(g)) == 1


def bfs_layers(g: Graph, v: int) -> list[int]:
    """Distance layers from v as masks: layers[r] = vertices at distance r.

    Requires a connected graph; raises PreconditionError otherwise, with
    the unreachable set as witness.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    seen = 1 << v
    layers = [seen]
    while True:
        nxt = 0
        for u in bits(layers[-1]):
            nxt |= g.adj[u]
        nxt &= ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
    if seen != g.vertices_mask:
        missing = g.vertices_mask & ~seen
        raise PreconditionError(
            f"graph is disconnected: {missing.bit_count()} vertices unreachable from {v}",
            witness=tuple(bits(missing)),
        )
    return layers


# ---------------------------------------------------------------------------
# graph6 codec
#
# Header ">>graph6<<" is optional on input, never emitted.  N(n) is one
# char for n <= 62, "~" plus three 6-bit chars for n <= 258047.  The upper
# triangle is read column by column (x[i][j] for j in 1..n-1, i in 0..j-1),
# packed big-endian six bits per char, each char offset by 63.
# ---------------------------------------------------------------------------


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError(f"graph6 output not supported for n={n}")
    out = [head]
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(text: str, cap: int = MAX_VERTICES) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 input", reason="empty")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphFormatError(
                f"invalid graph6 character {ch!r} (must be in chr(63)..chr(126))",
                reason="charset",
            )
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphFormatError(
                "graph6 8-byte size header exceeds any supported size",
                reason="header",
            )
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 size header", reason="header")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        if n <= 62:
            raise GraphFormatError(
                f"non-minimal graph6 size header for n={n}", reason="header"
            )
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > cap:
        raise CapExceededError(
            f"graph6 input has {n} vertices, cap is {cap}", size=n, cap=cap
        )
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    if len(body) != need_chars:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {need_chars} characters, got {len(body)}",
            reason="length",
        )
    stream = 0
    for ch in body:
        stream = (stream << 6) | (ord(ch) - 63)
    pad = need_chars * 6 - need_bits
    if pad and stream & ((1 << pad) - 1):
        raise GraphFormatError(
            "nonzero padding bits in final graph6 character", reason="padding"
        )
    stream >>= pad
    rows = [0] * n
    # bits come most-significant first: replay in column order
    pos = need_bits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (stream >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return _graph_unchecked(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list codec: first line "n m", then m lines "u v".  Blank lines and
# lines starting with "#" are ignored.
# ---------------------------------------------------------------------------


def parse_edgelist(text: str, cap: int = MAX_VERTICES) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input", reason="empty")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(
            f"edge-list header must be 'n m', got {lines[0]!r}", reason="header"
        )
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(
            f"edge-list header must be two integers, got {lines[0]!r}", reason="header"
        ) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in edge-list header", reason="header")
    if n > cap:
        raise CapExceededError(
            f"edge list declares {n} vertices, cap is {cap}", size=n, cap=cap
        )
    if len(lines) - 1 != m:
        raise GraphFormatError(
            f"edge list declares {m} edges but has {len(lines) - 1} edge lines",
            reason="length",
        )
    rows = [0] * n
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}", reason="length")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad edge line {ln!r}", reason="length") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"edge ({u}, {v}) out of range for n={n}", reason="range"
            )
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", reason="loop")
        if (rows[u] >> v) & 1:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", reason="duplicate")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _graph_unchecked(n, tuple(rows))


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def emit_dot(g: Graph, labels: dict[int, str] | None = None) -> str:
    """Graphviz DOT text for quick visual inspection."""
    out = ["graph G {"]
    for v in range(g.n):
        name = labels.get(v, str(v)) if labels else str(v)
        out.append(f'  {v} [label="{name}"];')
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"

"""Structural predicates: bulls, triangles, cliques, perfection, N-perfection.

Every tester that can fail returns a witness in the input graph's own
labels, and the witnesses are concrete enough to re-verify by hand: a
bull is reported as (path end, path middle, path middle, path end, cap),
an imperfection as an induced odd hole or odd antihole.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import CapExceededError
from .graph import Graph, bits, complement, components, induced_subgraph

T_CAP = 14


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a yes/no structural test with an optional witness."""

    prop: str
    holds: bool
    witness: tuple[int, ...] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "property": self.prop,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "details": dict(self.details),
        }


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """First triangle (u, v, w) with u < v < w, or None."""
    adj = g.adj
    for u in range(g.n):
        row = adj[u] >> (u + 1) << (u + 1)
        for v in bits(row):
            common = adj[u] & adj[v]
            common >>= v + 1
            if common:
                w = (common & -common).bit_length() - 1 + v + 1
                return (u, v, w)
    return None


def is_triangle_free(g: Graph) -> PropertyReport:
    t = find_triangle(g)
    return PropertyReport("triangle_free", t is None, t)


def find_bull(g: Graph) -> tuple[int, int, int, int, int] | None:
    """First induced bull, reported as (a, u, v, b, c).

    Roles: u-v-c is the triangle, a is the horn at u, b the horn at v,
    so a-u-v-b is an induced path and c sees exactly u and v among them.
    Runs over triangles rather than 5-subsets, which stays fast on the
    dense mid-sized graphs the coloring pipeline feeds it.
    """
    adj = g.adj
    full = g.vertices_mask
    for u in range(g.n):
        row_u = adj[u] >> (u + 1) << (u + 1)
        for v in bits(row_u):
            common = (adj[u] & adj[v]) >> (v + 1) << (v + 1)
            for w in bits(common):
                # try each vertex of triangle {u, v, w} as the cap
                for x, y, c in ((u, v, w), (u, w, v), (v, w, u)):
                    blocked = adj[c] | (1 << x) | (1 << y) | (1 << c)
                    horns_x = adj[x] & ~adj[y] & ~blocked & full
                    if not horns_x:
                        continue
                    horns_y = adj[y] & ~adj[x] & ~blocked & full
                    if not horns_y:
                        continue
                    for a in bits(horns_x):
                        free = horns_y & ~adj[a]
                        if free:
                            b = (free & -free).bit_length() - 1
                            return (a, x, y, b, c)
    return None


def is_bull_free(g: Graph) -> PropertyReport:
    b = find_bull(g)
    details = {}
    if b is not None:
        a, u, v, bb, c = b
        details = {"path": [a, u, v, bb], "cap": c}
    return PropertyReport("bull_free", b is None, b, details)


def _has_bull_through(adj: list[int], k: int, w: int) -> bool:
    """Is there an induced bull using vertex w?  Internal enumeration hook.

    Same triangle-driven search as find_bull, restricted to bulls whose
    vertex set contains w; used to extend an already bull-free graph.
    """
    full = (1 << k) - 1
    wbit = 1 << w
    for u in range(k):
        row_u = adj[u] >> (u + 1) << (u + 1)
        for v in bits(row_u):
            common = (adj[u] & adj[v]) >> (v + 1) << (v + 1)
            for t in bits(common):
                tri = (1 << u) | (1 << v) | (1 << t)
                need_w_in_horns = not (tri & wbit)
                for x, y, c in ((u, v, t), (u, t, v), (v, t, u)):
                    blocked = adj[c] | (1 << x) | (1 << y) | (1 << c)
                    horns_x = adj[x] & ~adj[y] & ~blocked & full
                    if not horns_x:
                        continue
                    horns_y = adj[y] & ~adj[x] & ~blocked & full
                    if not horns_y:
                        continue
                    if need_w_in_horns and not ((horns_x | horns_y) & wbit):
                        continue
                    for a in bits(horns_x):
                        free = horns_y & ~adj[a]
                        if need_w_in_horns and not ((1 << a) & wbit):
                            free &= wbit
                        if free:
                            return True
    return False


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with a witness clique, by branch and bound.

    Binary branching on a lowest vertex with a greedy-coloring upper
    bound; exact for every input, fast at the sizes this package serves.
    """
    if g.n == 0:
        return 0, ()
    adj = g.adj

    # greedy clique for an initial bound
    best_mask = 0
    for v in range(g.n):
        cur = 1 << v
        cand = adj[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            cur |= 1 << u
            cand &= adj[u]
        if cur.bit_count() > best_mask.bit_count():
            best_mask = cur
    best = best_mask.bit_count()

    def color_bound(p: int) -> int:
        # number of greedy color classes covering p bounds its clique size
        k = 0
        rem = p
        while rem:
            k += 1
            avail = rem
            while avail:
                v = (avail & -avail).bit_length() - 1
                rem &= ~(1 << v)
                avail &= ~adj[v] & ~(1 << v)
        return k

    def expand(cur: int, size: int, p: int) -> None:
        nonlocal best, best_mask
        if not p:
            if size > best:
                best = size
                best_mask = cur
            return
        if size + p.bit_count() <= best:
            return
        if size + color_bound(p) <= best:
            return
        v = (p & -p).bit_length() - 1
        expand(cur | (1 << v), size + 1, p & adj[v])
        expand(cur, size, p & ~(1 << v))

    expand(0, 0, g.vertices_mask)
    return best, tuple(bits(best_mask))


def is_stable(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for comp in components(g):
        root = (comp & -comp).bit_length() - 1
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def _is_chordal(g: Graph) -> bool:
    """Maximum cardinality search plus a clique check on back-neighbors."""
    n = g.n
    if n == 0:
        return True
    adj = g.adj
    weight = [0] * n
    order: list[int] = []
    placed = 0
    for _ in range(n):
        v = max((u for u in range(n) if not (placed >> u) & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        placed |= 1 << v
        for u in bits(adj[v] & ~placed):
            weight[u] += 1
    pos = {v: i for i, v in enumerate(order)}
    earlier = 0
    for v in order:
        back = adj[v] & earlier
        for a in bits(back):
            if adj[a] & back & ~(1 << a) != back & ~(1 << a):
                return False
        earlier |= 1 << v
    return True


def find_odd_hole(g: Graph) -> tuple[int, ...] | None:
    """Induced odd cycle of length >= 5 as a vertex sequence, or None.

    Depth-first over induced paths from each start vertex s (the least
    vertex of the hole).  `blocked` collects the path and all neighbors
    of its internal vertices, so any extension or closing vertex keeps
    the cycle chordless; closing additionally requires adjacency to both
    ends and odd length.
    """
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    for s in range(n):
        allowed = full >> (s + 1) << (s + 1)
        path = [s]

        def dfs(last: int, blocked: int) -> tuple[int, ...] | None:
            # path = [s, v1, .., last]; blocked = path + neighborhoods of
            # v1..second-to-last; extensions must also avoid N(s)
            if len(path) >= 4 and len(path) % 2 == 0:
                close = adj[last] & adj[s] & allowed & ~blocked
                if close:
                    c = (close & -close).bit_length() - 1
                    return tuple(path + [c])
            ext = adj[last] & allowed & ~blocked & ~adj[s]
            for v in bits(ext):
                path.append(v)
                got = dfs(v, blocked | adj[last] | (1 << v))
                path.pop()
                if got is not None:
                    return got
            return None

        for v1 in bits(adj[s] & allowed):
            path.append(v1)
            got = dfs(v1, (1 << s) | (1 << v1))
            path.pop()
            if got is not None:
                return got
    return None


def is_perfect(g: Graph) -> PropertyReport:
    """Perfection via forbidden induced subgraphs: odd holes and antiholes.

    Cheap sound shortcuts first (bipartite or chordal graph or
    complement), then the hole search on the graph and its complement.
    """
    if g.n < 5:
        return PropertyReport("perfect", True)
    co = complement(g)
    if (_is_bipartite(g) or _is_chordal(g) or _is_bipartite(co) or _is_chordal(co)):
        return PropertyReport("perfect", True)
    hole = find_odd_hole(g)
    if hole is not None:
        return PropertyReport("perfect", False, hole, {"kind": "odd_hole"})
    antihole = find_odd_hole(co)
    if antihole is not None:
        return PropertyReport("perfect", False, antihole, {"kind": "odd_antihole"})
    return PropertyReport("perfect", True)


def is_n_perfect(g: Graph) -> PropertyReport:
    """For every vertex v: N(v) induces a perfect graph, or V minus N(v) does.

    On failure the witness is (v,) and details carry the defects of both
    sides, translated back to g's labels.
    """
    for v in range(g.n):
        nh, nmap = induced_subgraph(g, g.adj[v])
        rep_n = is_perfect(nh)
        if rep_n.holds:
            continue
        rest = g.vertices_mask & ~g.adj[v]
        rh, rmap = induced_subgraph(g, rest)
        rep_r = is_perfect(rh)
        if rep_r.holds:
            continue
        assert rep_n.witness is not None and rep_r.witness is not None
        return PropertyReport(
            "n_perfect",
            False,
            (v,),
            {
                "neighborhood_defect": {
                    "kind": rep_n.details["kind"],
                    "vertices": [nmap[i] for i in rep_n.witness],
                },
                "complement_side_defect": {
                    "kind": rep_r.details["kind"],
                    "vertices": [rmap[i] for i in rep_r.witness],
                },
            },
        )
    return PropertyReport("n_perfect", True)


def _has_triangle_in(adj: tuple[int, ...], mask: int) -> bool:
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        nb = adj[v] & m
        t = nb
        while t:
            u = (t & -t).bit_length() - 1
            t &= t - 1
            if adj[u] & nb & ~(1 << u):
                return True
    return False


def t_parameter(g: Graph, cap: int = T_CAP) -> tuple[int, tuple[int, ...]]:
    """Largest chromatic number over maximal triangle-free induced subgraphs.

    Returns (t, vertices of an attaining subset).  Every graph admits the
    empty bound t >= 1; exact and exponential, hence capped.
    """
    if g.n > cap:
        raise CapExceededError(
            f"t parameter capped at {cap} vertices, got {g.n}", size=g.n, cap=cap
        )
    from .coloring import chromatic_number  # local import breaks a module cycle

    adj = g.adj
    n = g.n
    best = 1
    best_set: tuple[int, ...] = ()
    full = (1 << n) - 1
    for s in range(1, 1 << n):
        if _has_triangle_in(adj, s):
            continue
        # maximal: every outside vertex closes a triangle when added
        maximal = True
        out = full & ~s
        while out:
            v = (out & -out).bit_length() - 1
            out &= out - 1
            nb = adj[v] & s
            # v joins a triangle iff two of its neighbors in s are adjacent
            ok = False
            t = nb
            while t:
                u = (t & -t).bit_length() - 1
                t &= t - 1
                if adj[u] & nb & ~(1 << u):
                    ok = True
                    break
            if not ok:
                maximal = False
                break
        if not maximal:
            continue
        sub, vmap = induced_subgraph(g, s)
        chi, _ = chromatic_number(sub)
        if chi > best:
            best = chi
            best_set = vmap
    return best, best_set

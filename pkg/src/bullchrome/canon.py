"""Canonical labeling and isomorph-free graph enumeration.

Canonical form works by equitable partition refinement plus
individualization, searching for the lexicographically least upper
triangle over the leaf orderings the refinement admits.  Automorphisms
discovered at equal-certificate leaves prune sibling branches by orbit,
which keeps highly symmetric graphs (complete graphs, unions of twins)
from exploding into factorial search.

Enumeration grows graphs one vertex at a time, trying every neighborhood
of the new vertex into each parent and keeping one representative per
canonical certificate per level.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .errors import CapExceededError
from .graph import Graph, _graph_unchecked, bits, mask_of

ENUM_CAP = 9
CANON_CAP = 64


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Refine an ordered partition to equitability.

    Splits every cell by the vector of neighbor counts into all current
    cells, subcells ordered by that signature.  The result depends only
    on the partition and the graph, never on vertex labels, which is what
    makes the surrounding search canonical.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            # counts fit in 7 bits (n <= 64), so the signature packs into
            # one int whose ordering matches the tuple's lexicographic one
            groups: dict[int, list[int]] = {}
            for v in cell:
                row = adj[v]
                key = 0
                for m in masks:
                    key = (key << 7) | (row & m).bit_count()
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(tuple(groups[key]))
        cells = out
        if not changed:
            return cells


def _cert_of(adj: tuple[int, ...], perm: tuple[int, ...]) -> int:
    """Upper-triangle bits of the relabeled graph, packed row-major."""
    c = 0
    n = len(perm)
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            c = (c << 1) | ((row >> perm[j]) & 1)
    return c


def _closure_hits(v: int, targets: list[int], gens: list[tuple[int, ...]]) -> bool:
    """Does the orbit of v under the given permutations meet targets?"""
    tset = set(targets)
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y in tset:
                return True
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return False


def _canonical_search(g: Graph) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Canonical labeling plus the automorphisms found along the way."""
    n = g.n
    if n > CANON_CAP:
        raise CapExceededError(
            f"canonical labeling capped at {CANON_CAP} vertices, got {n}",
            size=n,
            cap=CANON_CAP,
        )
    if n == 0:
        return (), []
    adj = g.adj
    best_cert: int | None = None
    best_perm: tuple[int, ...] | None = None
    autos: list[tuple[int, ...]] = []
    auto_seen: set[tuple[int, ...]] = set()

    def search(cells: list[tuple[int, ...]], fixed: tuple[int, ...]) -> None:
        nonlocal best_cert, best_perm
        cells = _refine(adj, cells)
        idx = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                idx = i
                break
        if idx < 0:
            perm = tuple(c[0] for c in cells)
            cert = _cert_of(adj, perm)
            if best_cert is None or cert < best_cert:
                best_cert = cert
                best_perm = perm
            elif cert == best_cert and best_perm is not None:
                auto = [0] * n
                for i in range(n):
                    auto[best_perm[i]] = perm[i]
                t = tuple(auto)
                if t not in auto_seen and t != tuple(range(n)):
                    auto_seen.add(t)
                    autos.append(t)
            return
        cell = cells[idx]
        prefix, suffix = cells[:idx], cells[idx + 1:]
        tried: list[int] = []
        for v in cell:
            if tried:
                gens = [a for a in autos if all(a[x] == x for x in fixed)]
                if gens and _closure_hits(v, tried, gens):
                    continue
            tried.append(v)
            rest = tuple(u for u in cell if u != v)
            search(prefix + [(v,), rest] + suffix, fixed + (v,))

    search([tuple(range(n))], ())
    assert best_perm is not None
    return best_perm, autos


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """A permutation (position -> original vertex) achieving canonical form.

    Isomorphic graphs relabeled by their own canonical labelings become
    identical.  Deterministic for a given adjacency.
    """
    return _canonical_search(g)[0]


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators (vertex -> image) of a subgroup of the automorphisms.

    Not the full group in general, just the ones the canonical search
    stumbles on; enough for orbit pruning, never wrong to use.
    """
    return _canonical_search(g)[1]


def canonical_form(g: Graph) -> bytes:
    """Canonical certificate: equal iff graphs are isomorphic."""
    n = g.n
    if n == 0:
        return b"\x00"
    perm = canonical_labeling(g)
    cert = _cert_of(g.adj, perm)
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + cert.to_bytes(nbytes, "big")


def canonical_graph(g: Graph) -> Graph:
    """The graph relabeled into canonical form."""
    perm = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(perm)}
    rows = [0] * g.n
    for i, v in enumerate(perm):
        row = 0
        for w in bits(g.adj[v]):
            row |= 1 << pos[w]
        rows[i] = row
    return _graph_unchecked(g.n, tuple(rows))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1) == canonical_form(g2)


def enumerate_graphs(
    n: int,
    predicate: Callable[[Graph], bool] | None = None,
    *,
    cap: int = ENUM_CAP,
    extend_filter: Callable[[Graph, int], bool] | None = None,
) -> Iterator[Graph]:
    """All graphs on exactly n vertices, one per isomorphism class.

    `predicate` filters the final level only.  `extend_filter(g, v)` is a
    pruning hook applied each time a new vertex v is attached; it must
    accept a graph iff the property is hereditary and still satisfiable,
    so it is only safe for hereditary properties (bull-free, etc.).
    Deterministic order: levels are sorted by canonical certificate.
    """
    if n > cap:
        raise CapExceededError(
            f"enumeration capped at {cap} vertices, got {n}", size=n, cap=cap
        )
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n == 0:
        g = Graph(0, ())
        if predicate is None or predicate(g):
            yield g
        return
    level: list[Graph] = [Graph(1, (0,))]
    for k in range(2, n + 1):
        seen: set[bytes] = set()
        keyed: list[tuple[bytes, Graph]] = []
        newbit = 1 << (k - 1)
        for parent in level:
            prows = parent.adj
            # extension masks in one parent-automorphism orbit give
            # isomorphic children, so only one representative is grown
            gens = automorphism_generators(parent)
            skip: set[int] = set()
            for m in range(1 << (k - 1)):
                if gens:
                    if m in skip:
                        continue
                    stack = [m]
                    skip.add(m)
                    while stack:
                        x = stack.pop()
                        for a in gens:
                            y = 0
                            z = x
                            while z:
                                b = z & -z
                                z ^= b
                                y |= 1 << a[b.bit_length() - 1]
                            if y not in skip:
                                skip.add(y)
                                stack.append(y)
                rows = [prows[i] | newbit if (m >> i) & 1 else prows[i] for i in range(k - 1)]
                rows.append(m)
                child = _graph_unchecked(k, tuple(rows))
                if extend_filter is not None and not extend_filter(child, k - 1):
                    continue
                cert = canonical_form(child)
                if cert not in seen:
                    seen.add(cert)
                    keyed.append((cert, child))
        keyed.sort(key=lambda kv: kv[0])
        level = [g for _, g in keyed]
    for g in level:
        if predicate is None or predicate(g):
            yield g

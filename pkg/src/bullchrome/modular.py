"""Modular decomposition, substitution, and homogeneous-set search.

A homogeneous set (module) is a vertex set M with 1 < |M| < n whose
members are indistinguishable from outside: every outside vertex sees
all of M or none of it.  The decomposition tree below is the classic
one: parallel nodes split into connected components, series nodes into
co-components, and prime nodes into the maximal proper modules, whose
quotient has no homogeneous set at all.

The workhorse is the pair closure: the least module containing two given
vertices, grown by repeatedly absorbing splitters.  Maximal proper
modules of a connected, co-connected graph are recovered as the classes
of the relation "the pair closure of u and v is proper", which is an
equivalence on vertices in that case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import CertificationError, PreconditionError
from .graph import Graph, _graph_unchecked, bits, components


def pair_closure(g: Graph, u: int, v: int, within: int | None = None) -> int:
    """Least module of g (restricted to `within`) containing u and v.

    Grows {u, v} by absorbing splitters: any outside vertex adjacent to
    part but not all of the current set must join it.  Returns a mask;
    may be the whole vertex set when no proper module contains the pair.
    """
    scope = g.vertices_mask if within is None else within
    adj = g.adj
    m = (1 << u) | (1 << v)
    while True:
        # a splitter of m is outside m, adjacent to some of m but not all
        splitters = 0
        for w in bits(scope & ~m):
            link = adj[w] & m
            if link and link != m:
                splitters |= 1 << w
        if not splitters:
            return m
        m |= splitters


def find_homogeneous_set(g: Graph, within: int | None = None) -> int | None:
    """A smallest homogeneous set as a mask, or None if g is prime.

    Smallest by size, ties broken by vertex tuple, so the answer is
    deterministic.  Quadratically many pair closures; desk scale only.
    """
    scope = g.vertices_mask if within is None else within
    verts = list(bits(scope))
    if len(verts) <= 2:
        return None
    best: int | None = None
    best_key: tuple[int, tuple[int, ...]] | None = None
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            m = pair_closure(g, u, v, scope)
            if m == scope:
                continue
            key = (m.bit_count(), tuple(bits(m)))
            if best_key is None or key < best_key:
                best, best_key = m, key
    return best


def is_prime(g: Graph) -> bool:
    """No homogeneous set; graphs on at most two vertices count as prime."""
    return find_homogeneous_set(g) is None


@dataclass(frozen=True)
class ModularTree:
    """Decomposition tree node; vertex sets are masks in original labels.

    kind is "leaf", "parallel", "series", or "prime".  Internal nodes
    carry the quotient on their children (one vertex per child, ordered
    by least original vertex): edgeless for parallel, complete for
    series, and a graph with no homogeneous set for prime.
    """

    kind: str
    vertices: int
    children: tuple["ModularTree", ...] = ()
    quotient: Graph | None = None

    def leaf_vertex(self) -> int:
        if self.kind != "leaf":
            raise ValueError("not a leaf")
        return (self.vertices & -self.vertices).bit_length() - 1

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind,
            "vertices": sorted(bits(self.vertices)),
        }
        if self.kind != "leaf":
            out["children"] = [c.to_json() for c in self.children]
        return out


def _decompose_mask(g: Graph, mask: int) -> ModularTree:
    count = mask.bit_count()
    if count == 1:
        return ModularTree("leaf", mask)
    adj = g.adj
    comps = components(g, within=mask)
    if len(comps) > 1:
        children = tuple(_decompose_mask(g, c) for c in comps)
        k = len(children)
        quotient = _graph_unchecked(k, (0,) * k)
        return ModularTree("parallel", mask, children, quotient)
    # co-components: components of the complement within mask
    co_comps = _co_components(g, mask)
    if len(co_comps) > 1:
        children = tuple(_decompose_mask(g, c) for c in co_comps)
        k = len(children)
        full = (1 << k) - 1
        quotient = _graph_unchecked(k, tuple(full & ~(1 << i) for i in range(k)))
        return ModularTree("series", mask, children, quotient)
    # connected and co-connected: group vertices into maximal proper
    # modules via pair closures.  "closure(u, v) is proper" is an
    # equivalence here; build classes incrementally.
    verts = list(bits(mask))
    classes: list[int] = []
    for v in verts:
        placed = False
        for i, cls in enumerate(classes):
            rep = (cls & -cls).bit_length() - 1
            m = pair_closure(g, rep, v, mask)
            if m != mask:
                classes[i] = cls | (1 << v)
                placed = True
                break
        if not placed:
            classes.append(1 << v)
    for cls in classes:
        for w in bits(mask & ~cls):
            link = adj[w] & cls
            if link and link != cls:
                raise CertificationError(
                    "prime-node class is not a module",
                    details={"class": sorted(bits(cls)), "splitter": w},
                )
    children = tuple(_decompose_mask(g, c) for c in classes)
    reps = [(c & -c).bit_length() - 1 for c in classes]
    k = len(classes)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if (adj[reps[i]] >> reps[j]) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    quotient = Graph(k, tuple(rows))
    if find_homogeneous_set(quotient) is not None:
        raise CertificationError(
            "prime-node quotient has a homogeneous set",
            details={"classes": [sorted(bits(c)) for c in classes]},
        )
    return ModularTree("prime", mask, children, quotient)


def _co_components(g: Graph, mask: int) -> list[int]:
    adj = g.adj
    rem = mask
    comps = []
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= mask & ~adj[u] & ~(1 << u)
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def modular_decomposition(g: Graph) -> ModularTree:
    """Full decomposition tree of g; raises on the empty graph."""
    if g.n == 0:
        raise PreconditionError("modular decomposition needs at least one vertex")
    return _decompose_mask(g, g.vertices_mask)


def substitute(g1: Graph, x: int, g2: Graph) -> Graph:
    """Replace vertex x of g1 by a copy of g2.

    Labels: g1's other vertices come first in their original order, then
    the copy of g2.  Every copy vertex inherits exactly x's outside
    adjacency, so the copy is a homogeneous set in the result whenever
    it has at least 2 vertices and g1 at least 2 others.
    """
    if not (0 <= x < g1.n):
        raise ValueError(f"vertex {x} out of range")
    if g2.n == 0:
        raise ValueError("cannot substitute the empty graph")
    old = [v for v in range(g1.n) if v != x]
    pos = {v: i for i, v in enumerate(old)}
    n1 = g1.n - 1
    n = n1 + g2.n
    copy_mask = ((1 << g2.n) - 1) << n1
    x_out = 0
    for v in bits(g1.adj[x]):
        x_out |= 1 << pos[v]
    rows = [0] * n
    for i, v in enumerate(old):
        row = 0
        for w in bits(g1.adj[v]):
            if w != x:
                row |= 1 << pos[w]
        if (g1.adj[v] >> x) & 1:
            row |= copy_mask
        rows[i] = row
    for j in range(g2.n):
        rows[n1 + j] = (g2.adj[j] << n1) | x_out
    return Graph(n, tuple(rows))


def recompose(tree: ModularTree) -> Graph:
    """Rebuild the graph a decomposition tree describes, original labels.

    Edges come from quotients alone: for each internal node, children
    whose quotient vertices are adjacent become fully joined.  Applied
    to modular_decomposition(g) this returns g itself, bit for bit.
    """
    n = tree.vertices.bit_length()
    if tree.vertices != (1 << n) - 1:
        raise PreconditionError(
            "recompose needs a tree over a contiguous vertex range 0..n-1",
            witness=tuple(bits(tree.vertices)),
        )
    rows = [0] * n

    def walk(node: ModularTree) -> None:
        if node.kind == "leaf":
            return
        assert node.quotient is not None
        masks = [c.vertices for c in node.children]
        for i, ci in enumerate(masks):
            qrow = node.quotient.adj[i] >> (i + 1) << (i + 1)
            for j in bits(qrow):
                cj = masks[j]
                for u in bits(ci):
                    rows[u] |= cj
                for u in bits(cj):
                    rows[u] |= ci
        for c in node.children:
            walk(c)

    walk(tree)
    return Graph(n, tuple(rows))


def check_layer_lemma(
    g: Graph, v: int, size_cap: int | None = None
) -> list[dict[str, Any]]:
    """Exhaustively test the layer statement from root v; [] means it holds.

    The statement: for a prime induced subgraph H inside one BFS layer,
    every vertex x of the previous layer satisfies N_H(x) = H or stable.
    Subsets of fewer than four vertices satisfy it trivially (they are
    never prime with a mixed link), so the scan starts at four.
    """
    from itertools import combinations

    from .graph import bfs_layers, induced_subgraph, mask_of
    from .recognition import find_bull, is_stable

    bull = find_bull(g)
    if bull is not None:
        raise PreconditionError("input has an induced bull", witness=bull)
    layers = bfs_layers(g, v)
    violations: list[dict[str, Any]] = []
    for r in range(1, len(layers)):
        verts = sorted(bits(layers[r]))
        prev = layers[r - 1]
        top = len(verts) if size_cap is None else min(len(verts), size_cap)
        for size in range(4, top + 1):
            for combo in combinations(verts, size):
                mask = mask_of(combo)
                sub, _ = induced_subgraph(g, mask)
                if not is_prime(sub):
                    continue
                for x in bits(prev):
                    link = g.adj[x] & mask
                    if link == mask or is_stable(g, link):
                        continue
                    violations.append(
                        {
                            "root": v,
                            "r": r,
                            "subset": list(combo),
                            "x": x,
                            "link": sorted(bits(link)),
                        }
                    )
    return violations

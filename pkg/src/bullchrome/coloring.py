"""Exact coloring oracles and the layered constructive colorer.

The centerpiece is color_nperfect: a from-the-proof implementation of
the layering argument that colors N-perfect bull-free graphs, with a
ColorAccount tree recording, for every stage, the number of colors
actually used, an honest computed budget, and the proof's own budget for
that stage (checked exactly; a violation raises CertificationError and
means a bug, which is the point of carrying the account).

Palette discipline: internal passes label vertices with hashable tuples
(palette tags), and every stage normalizes its labels to 0..k-1 by first
appearance in vertex order, so palette widths compose the way the
accounting claims and the final Coloring is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from .bounds import bound_approx, bound_repr, power_bound_holds
from .errors import CapExceededError, CertificationError, PreconditionError
from .graph import Graph, bits, components, induced_subgraph, mask_of
from .modular import ModularTree, modular_decomposition, recompose
from .recognition import (
    clique_number,
    find_bull,
    find_triangle,
    is_n_perfect,
    is_perfect,
)

CHI_CAP = 20


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring; colors are 0..count-1 with none unused."""

    assignment: tuple[int, ...]
    count: int

    def verify(self, g: Graph) -> None:
        if len(self.assignment) != g.n:
            raise CertificationError(
                f"coloring covers {len(self.assignment)} vertices, graph has {g.n}"
            )
        seen = set(self.assignment)
        if seen != set(range(self.count)):
            raise CertificationError(
                f"colors are not exactly 0..{self.count - 1}",
                details={"colors": sorted(seen)},
            )
        for u, v in g.edges():
            if self.assignment[u] == self.assignment[v]:
                raise CertificationError(
                    f"edge ({u}, {v}) is monochromatic",
                    details={"color": self.assignment[u]},
                )

    @classmethod
    def from_labels(cls, g: Graph, labels: dict[int, Hashable]) -> "Coloring":
        if set(labels) != set(range(g.n)):
            raise ValueError("labels must cover exactly the vertex set")
        mapping: dict[Hashable, int] = {}
        assignment = []
        for v in range(g.n):
            lab = labels[v]
            if lab not in mapping:
                mapping[lab] = len(mapping)
            assignment.append(mapping[lab])
        col = cls(tuple(assignment), len(mapping))
        col.verify(g)
        return col

    def color_classes(self) -> list[int]:
        classes = [0] * self.count
        for v, c in enumerate(self.assignment):
            classes[c] |= 1 << v
        return classes

    def to_json(self) -> dict[str, Any]:
        return {"assignment": list(self.assignment), "count": self.count}


def _normalize(labels: dict[int, Hashable]) -> tuple[dict[int, int], int]:
    mapping: dict[Hashable, int] = {}
    out = {}
    for v in sorted(labels):
        lab = labels[v]
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out[v] = mapping[lab]
    return out, len(mapping)


# ---------------------------------------------------------------------------
# exact chromatic number: DSATUR greedy upper bound, clique lower bound,
# branch and bound with clique precoloring for symmetry breaking
# ---------------------------------------------------------------------------


def _dsatur_greedy(g: Graph) -> tuple[int, list[int]]:
    n = g.n
    adj = g.adj
    assign = [-1] * n
    nmask = [0] * n
    used = 0
    for _ in range(n):
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if assign[v] < 0:
                key = (nmask[v].bit_count(), adj[v].bit_count(), -v)
                if key > best_key:
                    best_key = key
                    best_v = v
        c = 0
        taken = nmask[best_v]
        while (taken >> c) & 1:
            c += 1
        assign[best_v] = c
        used = max(used, c + 1)
        cbit = 1 << c
        for u in bits(adj[best_v]):
            nmask[u] |= cbit
    return used, assign


def _exact_chromatic(
    g: Graph, clique: tuple[int, tuple[int, ...]] | None = None
) -> tuple[int, tuple[int, ...]]:
    n = g.n
    if n == 0:
        return 0, ()
    adj = g.adj
    omega, clique_vs = clique if clique is not None else clique_number(g)
    ub, greedy = _dsatur_greedy(g)
    if ub <= omega:
        return ub, tuple(greedy)
    best_count = ub
    best_assign = list(greedy)
    assign = [-1] * n
    nmask = [0] * n
    for i, v in enumerate(clique_vs):
        assign[v] = i
        ibit = 1 << i
        for u in bits(adj[v]):
            nmask[u] |= ibit

    def dfs(uncolored: int, used: int) -> None:
        nonlocal best_count, best_assign
        if best_count == omega or used >= best_count:
            return
        if uncolored == 0:
            best_count = used
            best_assign = assign.copy()
            return
        v = -1
        vkey = (-1, -1)
        for u in range(n):
            if assign[u] < 0:
                key = (nmask[u].bit_count(), adj[u].bit_count())
                if key > vkey:
                    vkey = key
                    v = u
        cmax = min(used + 1, best_count - 1)
        avail = ~nmask[v] & ((1 << cmax) - 1)
        while avail:
            cbit = avail & -avail
            avail ^= cbit
            c = cbit.bit_length() - 1
            assign[v] = c
            touched = []
            for u in bits(adj[v]):
                if assign[u] < 0 and not nmask[u] & cbit:
                    nmask[u] |= cbit
                    touched.append(u)
            dfs(uncolored - 1, used if c < used else c + 1)
            assign[v] = -1
            for u in touched:
                nmask[u] ^= cbit
            if best_count == omega:
                return

    dfs(n - len(clique_vs), len(clique_vs))
    return best_count, tuple(best_assign)


def chromatic_number(g: Graph, cap: int = CHI_CAP) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal coloring; exponential, capped."""
    if g.n > cap:
        raise CapExceededError(
            f"exact chromatic number capped at {cap} vertices, got {g.n}",
            size=g.n,
            cap=cap,
        )
    count, assign = _exact_chromatic(g)
    col = Coloring.from_labels(g, {v: assign[v] for v in range(g.n)})
    if col.count != count:
        raise CertificationError("chromatic search returned unnormalized count")
    return count, col


def color_perfect(g: Graph) -> Coloring:
    """Color a perfect graph with exactly clique_number(g) colors.

    No size cap: on perfect inputs the search closes at the clique bound
    immediately.  If the exact count comes out above omega the input was
    not perfect; that raises with the hole/antihole witness.
    """
    if g.n == 0:
        return Coloring((), 0)
    omega, clique_vs = clique_number(g)
    count, assign = _exact_chromatic(g, clique=(omega, clique_vs))
    if count > omega:
        rep = is_perfect(g)
        raise CertificationError(
            f"input is not perfect: chromatic {count} exceeds clique {omega}",
            details=rep.to_json(),
        )
    return Coloring.from_labels(g, {v: assign[v] for v in range(g.n)})


def color_triangle_free(g: Graph, t: int) -> Coloring:
    """Color a triangle-free graph, certifying the class bound count <= t."""
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError("input has a triangle", witness=tri)
    if g.n == 0:
        return Coloring((), 0)
    count, assign = _exact_chromatic(g)
    if count > t:
        raise PreconditionError(
            f"class-membership violation: chromatic number {count} exceeds t={t}",
            witness=None,
        )
    return Coloring.from_labels(g, {v: assign[v] for v in range(g.n)})


# ---------------------------------------------------------------------------
# color accounting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColorAccount:
    """Per-stage accounting: colors used, honest budget, proof budget.

    count <= budget always holds by construction; `paper`, when present,
    records the exact check against the proof's budget for the stage.
    """

    stage: str
    count: int
    budget: int
    paper: dict[str, Any] | None = None
    detail: dict[str, Any] = field(default_factory=dict)
    children: tuple["ColorAccount", ...] = ()

    def budget_ok(self) -> bool:
        return self.count <= self.budget and all(c.budget_ok() for c in self.children)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "stage": self.stage,
            "count": self.count,
            "budget": self.budget,
        }
        if self.paper is not None:
            out["paper"] = dict(self.paper)
        if self.detail:
            out["detail"] = dict(self.detail)
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out


def _paper_check(
    count: int, base: int, t: int, a: int, b: int, stage: str
) -> dict[str, Any] | None:
    if t < 2:
        return None
    if not power_bound_holds(count, base, t, a, b):
        raise CertificationError(
            f"stage {stage} uses {count} colors, over the proof budget "
            f"{bound_repr(base, t, a, b)}",
            details={"count": count, "base": base, "t": t, "a": a, "b": b},
        )
    return {"bound": bound_repr(base, t, a, b), "holds": True}


# ---------------------------------------------------------------------------
# composition over the modular tree
# ---------------------------------------------------------------------------

PrimeColorer = Callable[[Graph, tuple[int, ...]], tuple[Coloring, ColorAccount]]


def exact_prime_colorer(q: Graph, reps: tuple[int, ...]) -> tuple[Coloring, ColorAccount]:
    """Prime colorer for compose_coloring that just solves the quotient."""
    count, col = chromatic_number(q)
    return col, ColorAccount("prime_exact", count, count, detail={"reps": list(reps)})


def _compose_labels(
    node: ModularTree, prime_colorer: PrimeColorer
) -> tuple[dict[int, int], int, ColorAccount]:
    if node.kind == "leaf":
        return {node.leaf_vertex(): 0}, 1, ColorAccount("compose_leaf", 1, 1)
    kids = [_compose_labels(c, prime_colorer) for c in node.children]
    kid_accounts = tuple(k[2] for k in kids)
    raw: dict[int, Hashable] = {}
    if node.kind == "parallel":
        # components share one palette
        for labels, _, _ in kids:
            raw.update(labels)
        budget = max(k[2].budget for k in kids)
        children = kid_accounts
    elif node.kind == "series":
        # fully joined children get disjoint palettes
        for i, (labels, _, _) in enumerate(kids):
            for v, c in labels.items():
                raw[v] = (i, c)
        budget = sum(k[2].budget for k in kids)
        children = kid_accounts
    else:
        assert node.quotient is not None
        reps = tuple(
            (c.vertices & -c.vertices).bit_length() - 1 for c in node.children
        )
        qcol, qacc = prime_colorer(node.quotient, reps)
        qcol.verify(node.quotient)
        # children in quotient color classes share palettes; adjacent
        # children always differ in the first coordinate
        for i, (labels, _, _) in enumerate(kids):
            qc = qcol.assignment[i]
            for v, c in labels.items():
                raw[v] = (qc, c)
        budget = 0
        for qc in range(qcol.count):
            group = [kids[i][2].budget for i in range(len(kids)) if qcol.assignment[i] == qc]
            budget += max(group)
        children = (qacc,) + kid_accounts
    labels, count = _normalize(raw)
    acc = ColorAccount(f"compose_{node.kind}", count, budget, children=children)
    if count > budget:
        raise CertificationError(
            f"composition stage {node.kind} exceeded its own budget",
            details={"count": count, "budget": budget},
        )
    return labels, count, acc


def compose_coloring(
    tree: ModularTree, prime_colorer: PrimeColorer = exact_prime_colorer
) -> tuple[Coloring, ColorAccount]:
    """Color the graph a modular tree describes, lifting quotient colorings.

    Properness is certified against the recomposed graph, so an improper
    quotient coloring surfaces here as a CertificationError.
    """
    g = recompose(tree)
    labels, count, acc = _compose_labels(tree, prime_colorer)
    col = Coloring.from_labels(g, labels)
    if col.count != count:
        raise CertificationError("composition bookkeeping mismatch")
    return col, acc


# ---------------------------------------------------------------------------
# layer decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers from a root plus the propagated stable-set families.

    layers[r] is the mask of vertices at distance r; families[a-1][b-1]
    is S^a_b for a in 1..len(layers)-1 and b in 1..omega: S^1_b are
    stable sets covering layer 1, and S^a_b is the set of vertices of
    layer a with a neighbor in S^(a-1)_b.
    """

    root: int
    layers: tuple[int, ...]
    families: tuple[tuple[int, ...], ...]
    omega: int

    def validate(self, g: Graph) -> None:
        from .recognition import is_stable

        layers = self.layers
        if layers[0] != 1 << self.root:
            raise CertificationError("layer 0 is not the root")
        if len(layers) > 1 and layers[1] != g.adj[self.root]:
            raise CertificationError("layer 1 is not the root's neighborhood")
        total = 0
        for r, layer in enumerate(layers):
            if layer & total:
                raise CertificationError("layers overlap")
            total |= layer
        if total != g.vertices_mask:
            raise CertificationError("layers do not partition the vertex set")
        for u, v in g.edges():
            ru = next(r for r, m in enumerate(layers) if (m >> u) & 1)
            rv = next(r for r, m in enumerate(layers) if (m >> v) & 1)
            if abs(ru - rv) > 1:
                raise CertificationError(f"edge ({u}, {v}) skips a layer")
        if len(self.families) != len(layers) - 1:
            raise CertificationError("family list length mismatch")
        for a, fams in enumerate(self.families, start=1):
            if len(fams) != self.omega:
                raise CertificationError(f"layer {a} has {len(fams)} families")
            union = 0
            for b, s in enumerate(fams, start=1):
                if s & ~layers[a]:
                    raise CertificationError(f"S^{a}_{b} leaves layer {a}")
                if a == 1:
                    if not is_stable(g, s):
                        raise CertificationError(f"S^1_{b} is not stable")
                else:
                    want = 0
                    for x in bits(self.families[a - 2][b - 1]):
                        want |= g.adj[x]
                    if s != want & layers[a]:
                        raise CertificationError(f"S^{a}_{b} is not the propagation")
                union |= s
            if union != layers[a]:
                raise CertificationError(f"families do not cover layer {a}")

    def to_json(self) -> dict[str, Any]:
        return {
            "root": self.root,
            "layers": [sorted(bits(m)) for m in self.layers],
            "families": [
                [sorted(bits(s)) for s in fams] for fams in self.families
            ],
            "omega": self.omega,
        }


def build_layer_decomposition(g: Graph, v: int) -> LayerDecomposition:
    """Layers from v plus S^a_b families; needs g connected, N(v) perfect."""
    from .graph import bfs_layers

    layers = bfs_layers(g, v)
    omega, _ = clique_number(g)
    if len(layers) == 1:
        return LayerDecomposition(v, tuple(layers), (), omega)
    sub, vmap = induced_subgraph(g, g.adj[v])
    try:
        col = color_perfect(sub)
    except CertificationError as e:
        raise PreconditionError(
            f"neighborhood of root {v} is not perfect", witness=(v,)
        ) from e
    fam1 = [0] * omega
    for i, vert in enumerate(vmap):
        fam1[col.assignment[i]] |= 1 << vert
    fams = [tuple(fam1)]
    for a in range(2, len(layers)):
        prev = fams[-1]
        cur = []
        for b in range(omega):
            s = 0
            for x in bits(prev[b]):
                s |= g.adj[x]
            cur.append(s & layers[a])
        union = 0
        for s in cur:
            union |= s
        if union != layers[a]:
            raise CertificationError(
                f"S^{a}_b families fail to cover layer {a}",
                details={"layer": sorted(bits(layers[a]))},
            )
        fams.append(tuple(cur))
    return LayerDecomposition(v, tuple(layers), tuple(fams), omega)


# ---------------------------------------------------------------------------
# the constructive colorer from the layering argument
# ---------------------------------------------------------------------------


def _layer_family_labels(
    g: Graph, ld: LayerDecomposition, r: int, b: int, fam_mask: int, t: int
) -> tuple[dict[int, int], int, ColorAccount]:
    """Color one family portion of a layer through its modular tree.

    Prime quotients are induced subgraphs of the layer (one least-index
    representative per child).  A vertex of the previous layer adjacent
    to all representatives makes the quotient perfect; otherwise it is
    certified triangle-free and colored within the class bound t.
    """
    sub, vmap = induced_subgraph(g, fam_mask)
    tree = modular_decomposition(sub)
    prev_layer = ld.layers[r - 1]

    def prime_colorer(q: Graph, reps: tuple[int, ...]) -> tuple[Coloring, ColorAccount]:
        reps_global = mask_of(vmap[i] for i in reps)
        dominator = -1
        for x in bits(prev_layer):
            if reps_global & ~g.adj[x] == 0:
                dominator = x
                break
        if dominator >= 0:
            try:
                col = color_perfect(q)
            except CertificationError as e:
                raise PreconditionError(
                    f"neighborhood of {dominator} is not perfect",
                    witness=(dominator,),
                ) from e
            omega_q = col.count
            return col, ColorAccount(
                "prime_perfect",
                col.count,
                omega_q,
                paper=_paper_check(col.count, omega_q, t, 1, 0, "prime_perfect"),
                detail={"dominator": dominator, "reps": [vmap[i] for i in reps]},
            )
        tri = find_triangle(q)
        if tri is not None:
            raise CertificationError(
                "undominated prime quotient inside a layer has a triangle",
                details={
                    "layer": r,
                    "family": b,
                    "triangle": [vmap[i] for i in tri],
                },
            )
        col = color_triangle_free(q, t)
        return col, ColorAccount(
            "prime_trianglefree",
            col.count,
            t,
            paper=_paper_check(col.count, 2, t, 1, 0, "prime_trianglefree"),
            detail={"reps": [vmap[i] for i in reps]},
        )

    local_labels, count, acc = _compose_labels(tree, prime_colorer)
    labels = {vmap[i]: c for i, c in local_labels.items()}
    return labels, count, acc


def _nperfect_labels(g: Graph, t: int) -> tuple[dict[int, int], int, ColorAccount]:
    n = g.n
    if n == 0:
        return {}, 0, ColorAccount("empty", 0, 0)
    comps = components(g)
    omega, _ = clique_number(g)
    if len(comps) > 1:
        labels: dict[int, int] = {}
        child_accs = []
        for comp in comps:
            sub, vmap = induced_subgraph(g, comp)
            sub_labels, _, acc = _nperfect_labels(sub, t)
            for i, v in enumerate(vmap):
                labels[v] = sub_labels[i]
            child_accs.append(acc)
        count = max(a.count for a in child_accs)
        budget = max(a.budget for a in child_accs)
        acc = ColorAccount(
            "components",
            count,
            budget,
            paper=_paper_check(count, omega, t, 2, 5, "components"),
            detail={"parts": len(comps)},
            children=tuple(child_accs),
        )
        return labels, count, acc
    if omega <= 1:
        labels = {v: 0 for v in range(n)}
        return labels, 1, ColorAccount(
            "single_color",
            1,
            1,
            paper=_paper_check(1, omega, t, 2, 5, "single_color"),
        )
    # split case: some vertex u whose non-neighborhood side is perfect
    for u in range(n):
        rest = g.vertices_mask & ~g.adj[u]
        sub_r, rmap = induced_subgraph(g, rest)
        if not is_perfect(sub_r).holds:
            continue
        sub_n, nmap = induced_subgraph(g, g.adj[u])
        n_labels, n_count, n_acc = _nperfect_labels(sub_n, t)
        p_col = color_perfect(sub_r)
        raw: dict[int, Hashable] = {}
        for i, v in enumerate(nmap):
            raw[v] = ("n", n_labels[i])
        for i, v in enumerate(rmap):
            raw[v] = ("p", p_col.assignment[i])
        labels, count = _normalize(raw)
        p_acc = ColorAccount(
            "perfect_part",
            p_col.count,
            p_col.count,
            detail={"u": u, "size": sub_r.n},
        )
        acc = ColorAccount(
            "perfect_split",
            count,
            n_acc.budget + p_col.count,
            paper=_paper_check(count, omega, t, 2, 5, "perfect_split"),
            detail={"u": u},
            children=(n_acc, p_acc),
        )
        return labels, count, acc
    # layered case: every neighborhood is perfect; root at the least vertex
    ld = build_layer_decomposition(g, 0)
    layer_accs = []
    global_raw: dict[int, Hashable] = {}
    layer_counts = []
    for r, layer_mask in enumerate(ld.layers):
        if r == 0:
            layer_labels = {ld.root: 0}
            layer_count = 1
            layer_acc = ColorAccount(
                "layer",
                1,
                1,
                paper=_paper_check(1, omega, t, 2, 4, "layer"),
                detail={"r": 0},
            )
        else:
            assigned = 0
            fam_raw: dict[int, Hashable] = {}
            fam_accs = []
            for b in range(1, ld.omega + 1):
                fam_mask = ld.families[r - 1][b - 1] & ~assigned
                if not fam_mask:
                    continue
                assigned |= fam_mask
                f_labels, f_count, f_acc = _layer_family_labels(
                    g, ld, r, b, fam_mask, t
                )
                for v, c in f_labels.items():
                    fam_raw[v] = (b, c)
                fam_accs.append(
                    ColorAccount(
                        "family",
                        f_count,
                        f_acc.budget,
                        paper=_paper_check(f_count, omega, t, 2, 3, "family"),
                        detail={"r": r, "b": b, "size": fam_mask.bit_count()},
                        children=(f_acc,),
                    )
                )
            if assigned != layer_mask:
                raise CertificationError(
                    f"layer {r} not covered by its families",
                    details={"layer": sorted(bits(layer_mask))},
                )
            layer_labels, layer_count = _normalize(fam_raw)
            layer_acc = ColorAccount(
                "layer",
                layer_count,
                sum(a.budget for a in fam_accs),
                paper=_paper_check(layer_count, omega, t, 2, 4, "layer"),
                detail={"r": r},
                children=tuple(fam_accs),
            )
        layer_accs.append(layer_acc)
        layer_counts.append(layer_count)
        for v, c in layer_labels.items():
            global_raw[v] = (r % 2, c)
    labels, count = _normalize(global_raw)
    even_budget = max(
        (a.budget for r, a in enumerate(layer_accs) if r % 2 == 0), default=0
    )
    odd_budget = max(
        (a.budget for r, a in enumerate(layer_accs) if r % 2 == 1), default=0
    )
    acc = ColorAccount(
        "layered",
        count,
        even_budget + odd_budget,
        paper=_paper_check(count, omega, t, 2, 5, "layered"),
        detail={"root": ld.root, "layers": len(ld.layers)},
        children=tuple(layer_accs),
    )
    return labels, count, acc


def color_nperfect(g: Graph, t: int, check: bool = True) -> tuple[Coloring, ColorAccount]:
    """Color an N-perfect bull-free graph by the layering argument.

    The returned account certifies count <= omega^(2*log2(t)+5) for
    t >= 2 along with every interior stage budget.  N-perfection is not
    pre-checked wholesale; a violation surfaces as a precondition error
    from the stage that needed it.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if check:
        bull = find_bull(g)
        if bull is not None:
            raise PreconditionError("input has an induced bull", witness=bull)
    labels, count, acc = _nperfect_labels(g, t)
    col = Coloring.from_labels(g, labels)
    if col.count != count:
        raise CertificationError(
            "layered colorer bookkeeping mismatch",
            details={"normalized": col.count, "accounted": count},
        )
    return col, acc


def color_bullfree(g: Graph, t: int, check: bool = True) -> tuple[Coloring, ColorAccount]:
    """Full pipeline for bull-free graphs: decompose, then color quotients.

    Every prime quotient is certified N-perfect (a failure would refute
    the structure fact this package exhaustively verifies) and colored
    by color_nperfect; the modular tree lifts the quotient colorings.
    """
    if check:
        bull = find_bull(g)
        if bull is not None:
            raise PreconditionError("input has an induced bull", witness=bull)
    if g.n == 0:
        return Coloring((), 0), ColorAccount("empty", 0, 0)
    tree = modular_decomposition(g)

    def prime_colorer(q: Graph, reps: tuple[int, ...]) -> tuple[Coloring, ColorAccount]:
        rep = is_n_perfect(q)
        if not rep.holds:
            raise CertificationError(
                "prime quotient of a bull-free graph is not N-perfect",
                details=rep.to_json(),
            )
        col, acc = color_nperfect(q, t, check=False)
        return col, acc

    labels, count, acc = _compose_labels(tree, prime_colorer)
    col = Coloring.from_labels(g, labels)
    if col.count != count:
        raise CertificationError("pipeline bookkeeping mismatch")
    return col, acc


def verify_bound(
    g: Graph, t: int | None = None, chi_cap: int = CHI_CAP, t_cap: int | None = None
) -> dict[str, Any]:
    """Check chi <= omega^(4*log2(t)+13) on one bull-free graph, exactly."""
    from .recognition import T_CAP, t_parameter

    bull = find_bull(g)
    if bull is not None:
        raise PreconditionError("input has an induced bull", witness=bull)
    omega, _ = clique_number(g)
    chi, _ = chromatic_number(g, cap=chi_cap)
    if t is None:
        t_val, t_wit = t_parameter(g, cap=t_cap if t_cap is not None else T_CAP)
        t_source = "exact"
    else:
        t_val, t_source = t, "given"
    holds = power_bound_holds(chi, omega, t_val, 4, 13)
    return {
        "n": g.n,
        "omega": omega,
        "chi": chi,
        "t": t_val,
        "t_source": t_source,
        "bound": bound_repr(omega, t_val, 4, 13),
        "bound_approx": bound_approx(omega, t_val, 4, 13),
        "holds": holds,
    }

"""Lower-bound constructions: Mycielski tower, fractional chromatic
number, the phi recursion, and a sampler for the substitution closure.

The tower pins M_1 = K_2, so M_2 is the 5-cycle and M_n has 3*2^(n-1)-1
vertices, clique number 2, and chromatic number n+1.  The closure class
is built from complete graphs and induced subgraphs of M_(t-1) by
disjoint union and substitution; every sample ships with a replayable
recipe and is certified bull-free on the spot.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

from .errors import CapExceededError, CertificationError
from .graph import (
    Graph,
    bits,
    complement,
    disjoint_union,
    induced_subgraph,
    mask_of,
)
from .modular import substitute
from .recognition import T_CAP, clique_number, find_bull, t_parameter

MYCIELSKI_CAP = 8
FRACTIONAL_CAP = 14
PHI_EXACT_CAP = 16


# ---------------------------------------------------------------------------
# Mycielski tower
# ---------------------------------------------------------------------------


def mycielski_step(g: Graph) -> Graph:
    """One Mycielski step: shadow vertex k+j twins j, apex 2k sees shadows."""
    k = g.n
    rows = []
    for i in range(k):
        rows.append(g.adj[i] | (g.adj[i] << k))
    for j in range(k):
        rows.append(g.adj[j] | (1 << (2 * k)))
    rows.append(((1 << k) - 1) << k)
    return Graph(2 * k + 1, tuple(rows))


def mycielski_graph(n: int, cap: int = MYCIELSKI_CAP) -> Graph:
    """M_n with M_1 = K_2; M_n has 3*2^(n-1)-1 vertices."""
    if n < 1:
        raise ValueError(f"tower index must be at least 1, got {n}")
    if n > cap:
        raise CapExceededError(
            f"Mycielski tower capped at index {cap}, got {n}", size=n, cap=cap
        )
    g = Graph.from_edges(2, [(0, 1)])
    for _ in range(n - 1):
        g = mycielski_step(g)
    return g


def mycielski_report(n: int) -> dict[str, Any]:
    """Certify omega(M_n) = 2, chi(M_n) = n+1, and bull-freeness."""
    from .coloring import chromatic_number

    g = mycielski_graph(n)
    omega, clique = clique_number(g)
    chi, _ = chromatic_number(g, cap=g.n)
    bull = find_bull(g)
    return {
        "n": n,
        "vertices": g.n,
        "omega": omega,
        "clique": list(clique),
        "chi": chi,
        "chi_expected": n + 1,
        "bull_free": bull is None,
        "pass": omega == 2 and chi == n + 1 and bull is None,
    }


# ---------------------------------------------------------------------------
# fractional chromatic number (exact rational arithmetic)
# ---------------------------------------------------------------------------


def _maximal_cliques(adj: tuple[int, ...], n: int) -> list[int]:
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot, best = -1, -1
        m = px
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            s = (p & adj[u]).bit_count()
            if s > best:
                pivot, best = u, s
        cand = p & ~adj[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            bk(r | b, p & adj[v], x & adj[v])
            p ^= b
            x |= b

    if n:
        bk(0, (1 << n) - 1, 0)
    return out


def maximal_stable_sets(g: Graph) -> list[int]:
    """All maximal stable sets as masks (maximal cliques of the complement)."""
    return _maximal_cliques(complement(g).adj, g.n)


def _simplex_max(a: list[list[Fraction]], b: list[Fraction], c: list[Fraction]) -> Fraction:
    """max c.x subject to a x <= b, x >= 0, by tableau simplex, Bland's rule."""
    m, n = len(a), len(c)
    tab = [
        [Fraction(a[i][j]) for j in range(n)]
        + [Fraction(1 if k == i else 0) for k in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    zrow = [-Fraction(cj) for cj in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if zrow[j] < 0), None)
        if enter is None:
            return zrow[-1]
        leave = -1
        best: Fraction | None = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise CertificationError("packing program is unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if zrow[enter]:
            f = zrow[enter]
            zrow = [x - f * y for x, y in zip(zrow, tab[leave])]
        basis[leave] = enter


def fractional_chromatic(g: Graph, cap: int = FRACTIONAL_CAP) -> Fraction:
    """Exact fractional chromatic number as a Fraction.

    Computed as the dual packing optimum: maximize sum of vertex weights
    subject to weight(S) <= 1 for every maximal stable set S.
    """
    if g.n > cap:
        raise CapExceededError(
            f"fractional chromatic number capped at {cap} vertices, got {g.n}",
            size=g.n,
            cap=cap,
        )
    if g.n == 0:
        return Fraction(0)
    sets = maximal_stable_sets(g)
    a = [[Fraction(1 if (s >> v) & 1 else 0) for v in range(g.n)] for s in sets]
    b = [Fraction(1)] * len(sets)
    c = [Fraction(1)] * g.n
    return _simplex_max(a, b, c)


# ---------------------------------------------------------------------------
# the phi recursion: phi_1 = 2, phi_(n+1) = phi_n + 1/phi_n
# ---------------------------------------------------------------------------


def phi_recursion(n: int, cap: int = PHI_EXACT_CAP) -> Fraction:
    """Exact phi_n; numerator and denominator sizes double per step."""
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    if n > cap:
        raise CapExceededError(
            f"exact phi capped at index {cap}, got {n}", size=n, cap=cap
        )
    p, q = 2, 1
    for _ in range(n - 1):
        p, q = p * p + q * q, p * q
    return Fraction(p, q)


def _phi_interval_ints(n: int, precision: int) -> tuple[int, int]:
    # values scaled by 2^precision; x -> x + 1/x is increasing for x >= 1,
    # so rounding lo down and hi up keeps the bracket sound
    one = 1 << precision
    sq = one * one
    lo = hi = 2 * one
    for _ in range(n - 1):
        lo, hi = lo + sq // hi, hi - (-sq // lo)
    return lo, hi


def phi_interval(n: int, precision: int = 64) -> tuple[Fraction, Fraction]:
    """Certified enclosure lo <= phi_n <= hi in fixed-point arithmetic."""
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    lo, hi = _phi_interval_ints(n, precision)
    one = 1 << precision
    return Fraction(lo, one), Fraction(hi, one)


def phi_lower_bound_check(n: int) -> bool:
    """Decide phi_n^2 >= 2(n+1) exactly (small n) or by certified interval."""
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    if n <= PHI_EXACT_CAP:
        return phi_recursion(n) ** 2 >= 2 * (n + 1)
    precision = 64
    while precision <= 4096:
        lo, hi = _phi_interval_ints(n, precision)
        target = (2 * (n + 1)) << (2 * precision)
        if lo * lo >= target:
            return True
        if hi * hi < target:
            return False
        precision *= 2
    raise CertificationError(
        f"interval enclosure for phi_{n} cannot decide the bound",
        details={"n": n},
    )


def phi_sweep(nmax: int, precision: int = 64) -> dict[str, Any]:
    """Check phi_k^2 >= 2(k+1) for every k in 1..nmax in one interval pass."""
    if nmax < 1:
        raise ValueError(f"sweep limit must be at least 1, got {nmax}")
    one = 1 << precision
    sq = one * one
    lo = hi = 2 * one
    failures = []
    undecided = []
    for k in range(1, nmax + 1):
        if k > 1:
            lo, hi = lo + sq // hi, hi - (-sq // lo)
        target = (2 * (k + 1)) << (2 * precision)
        if lo * lo >= target:
            continue
        # the fast pass could not certify; settle this index on its own
        if phi_lower_bound_check(k):
            undecided.append(k)
        else:
            failures.append(k)
    return {
        "nmax": nmax,
        "precision_bits": precision,
        "holds": not failures,
        "failures": failures,
        "rechecked": undecided,
    }


# ---------------------------------------------------------------------------
# the substitution closure and its sampler
# ---------------------------------------------------------------------------


def _eval_node(node: dict[str, Any], t: int) -> Graph:
    kind = node["kind"]
    if kind == "complete":
        k = node["k"]
        return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if kind == "mycielski_subgraph":
        m = mycielski_graph(t - 1)
        sub, _ = induced_subgraph(m, mask_of(node["vertices"]))
        return sub
    if kind == "union":
        parts = [_eval_node(p, t) for p in node["parts"]]
        g = parts[0]
        for p in parts[1:]:
            g = disjoint_union(g, p)
        return g
    if kind == "subst":
        outer = _eval_node(node["outer"], t)
        inner = _eval_node(node["inner"], t)
        return substitute(outer, node["position"], inner)
    raise ValueError(f"unknown recipe node kind {kind!r}")


@dataclass(frozen=True)
class CStarRecipe:
    """Replayable description of one closure-class member."""

    t: int
    root: dict[str, Any]

    def evaluate(self) -> Graph:
        return _eval_node(self.root, self.t)

    def to_json(self) -> dict[str, Any]:
        return {"t": self.t, "root": self.root}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "CStarRecipe":
        return cls(int(data["t"]), data["root"])


def build_base_class(
    t: int, complete_cap: int = 8, subset_cap: int = 2048
) -> Iterator[tuple[dict[str, Any], Graph]]:
    """Yield the tagged base graphs that seed the substitution closure.

    The base class is the union of all complete graphs and all induced
    subgraphs of the (t-1)-th Mycielski graph.  Both families are capped
    explicitly: complete graphs stop at K_{complete_cap} and subgraph
    enumeration stops after subset_cap nonempty vertex subsets (mask
    order), so the generator always terminates.  Each tag is a recipe
    node dict evaluating back to the paired graph.

    t=1 is degenerate: the Mycielski tower starts at M_1, so only the
    complete graphs are yielded.  Every yielded graph is bull-free.
    """
    if t < 1:
        raise ValueError(f"class parameter must be at least 1, got {t}")
    for k in range(1, complete_cap + 1):
        node = {"kind": "complete", "k": k}
        yield node, _eval_node(node, t)
    if t == 1:
        return
    m = mycielski_graph(t - 1)
    for mask in range(1, min((1 << m.n) - 1, subset_cap) + 1):
        node = {"kind": "mycielski_subgraph", "vertices": sorted(bits(mask))}
        yield node, _eval_node(node, t)


def _random_base(rng: random.Random, t: int, budget: int) -> tuple[dict[str, Any], Graph]:
    m = mycielski_graph(t - 1)
    if rng.random() < 0.5:
        k = rng.randint(1, min(budget, 8))
        node = {"kind": "complete", "k": k}
    else:
        size = rng.randint(1, min(budget, m.n))
        vertices = sorted(rng.sample(range(m.n), size))
        node = {"kind": "mycielski_subgraph", "vertices": vertices}
    return node, _eval_node(node, t)


def _random_node(rng: random.Random, t: int, budget: int) -> tuple[dict[str, Any], Graph]:
    r = rng.random()
    # base graphs have at most max(8, 3*2^(t-2)-1) vertices, so lean on the
    # closure operations while the budget is roomy to reach larger samples
    base_p = 0.45 if budget < 16 else 0.2
    if budget < 2 or r < base_p:
        return _random_base(rng, t, budget)
    if r < base_p + 0.27:
        cut = rng.randint(1, budget - 1)
        left, gl = _random_node(rng, t, cut)
        right, gr = _random_node(rng, t, budget - cut)
        return {"kind": "union", "parts": [left, right]}, disjoint_union(gl, gr)
    outer_node, outer = _random_node(rng, t, rng.randint(2, budget))
    if outer.n < 2:
        return outer_node, outer
    inner_node, inner = _random_node(rng, t, budget - outer.n + 1)
    pos = rng.randrange(outer.n)
    node = {"kind": "subst", "outer": outer_node, "position": pos, "inner": inner_node}
    return node, substitute(outer, pos, inner)


def sample_cstar(
    t: int, seed: int, budget: int = 60, membership_cap: int = 12
) -> tuple[Graph, CStarRecipe, dict[str, Any]]:
    """Draw one closure-class member, certified bull-free, with its recipe.

    Membership in the target class is checked exactly (via t_parameter)
    when the sample is small enough, and recorded as by-construction
    otherwise.  A bull, or an exact t above t, would refute the closure
    properties this package verifies, so either raises.
    """
    if t < 2:
        raise ValueError(f"closure sampling needs t >= 2, got {t}")
    if budget < 1:
        raise ValueError(f"budget exhausted: no base graph fits in {budget} vertices")
    rng = random.Random(f"cstar:{t}:{seed}")
    node, g = _random_node(rng, t, budget)
    recipe = CStarRecipe(t, node)
    bull = find_bull(g)
    if bull is not None:
        raise CertificationError(
            "closure sample contains a bull", details={"witness": list(bull)}
        )
    cert: dict[str, Any] = {"n": g.n, "bull_free": True}
    if g.n <= membership_cap:
        t_val, _ = t_parameter(g, cap=max(membership_cap, T_CAP))
        if t_val > t:
            raise CertificationError(
                f"closure sample has t parameter {t_val} above {t}",
                details={"recipe": recipe.to_json()},
            )
        cert["t_exact"] = t_val
        cert["membership"] = "exact"
    else:
        cert["membership"] = "by-construction"
    return g, recipe, cert

"""Exhaustive desk-scale verification suites.

Each suite checks one statement against every graph in scope (or a
deterministic sample stream) and returns a report dict with a pass flag,
counts, and concrete failure witnesses.  Expected state: every suite
passes; a failure dict is a refutation certificate worth staring at.

Enumeration is the shared cost, so per-order results are cached for the
life of the process; with jobs > 1 the parent process enumerates and
workers run the per-graph checks.
"""

from __future__ import annotations

import functools
import time
from fractions import Fraction
from multiprocessing import Pool
from typing import Any, Callable

from .bounds import bound_approx, bound_repr, power_bound_holds
from .canon import canonical_form, enumerate_graphs
from .coloring import chromatic_number, color_bullfree
from .errors import BullchromeError
from .extremal import (
    fractional_chromatic,
    mycielski_graph,
    mycielski_report,
    phi_recursion,
    phi_sweep,
    sample_cstar,
)
from .graph import Graph, emit_graph6, is_connected
from .modular import check_layer_lemma, is_prime
from .recognition import (
    _has_bull_through,
    clique_number,
    is_n_perfect,
    t_parameter,
)

_BULLFREE: dict[int, tuple[Graph, ...]] = {}


def _bullfree_extend(g: Graph, v: int) -> bool:
    return not _has_bull_through(g.adj, g.n, v)


def bullfree_graphs(n: int) -> tuple[Graph, ...]:
    """All bull-free graphs on exactly n vertices, one per isomorphism
    class, cached for the life of the process."""
    if n not in _BULLFREE:
        _BULLFREE[n] = tuple(enumerate_graphs(n, extend_filter=_bullfree_extend))
    return _BULLFREE[n]


def _map_jobs(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))


def _report(suite: str, params: dict, counts: dict, failures: list, t0: float) -> dict:
    return {
        "suite": suite,
        "params": params,
        "pass": not failures,
        "counts": counts,
        "failures": failures,
        "elapsed_ms": int(1000 * (time.time() - t0)),
    }


# ---------------------------------------------------------------------------
# suite: every prime bull-free graph is N-perfect
# ---------------------------------------------------------------------------


def _thm21_one(g: Graph) -> tuple[bool, dict | None]:
    if not is_prime(g):
        return False, None
    rep = is_n_perfect(g)
    if rep.holds:
        return True, None
    return True, {"n": g.n, "graph6": emit_graph6(g), "witness": rep.to_json()}


def suite_thm21(max_n: int = 9, jobs: int = 1) -> dict[str, Any]:
    """Every prime bull-free graph on <= max_n vertices is N-perfect."""
    t0 = time.time()
    checked = primes = 0
    failures: list[dict] = []
    for n in range(1, max_n + 1):
        graphs = list(bullfree_graphs(n))
        checked += len(graphs)
        for was_prime, fail in _map_jobs(_thm21_one, graphs, jobs):
            primes += was_prime
            if fail is not None:
                failures.append(fail)
    return _report(
        "thm21",
        {"max_n": max_n},
        {"graphs": checked, "primes": primes},
        failures,
        t0,
    )


# ---------------------------------------------------------------------------
# suite: the layer statement, all roots, all prime subsets of layers
# ---------------------------------------------------------------------------


def _layer_one(g: Graph) -> list[dict]:
    out: list[dict] = []
    for v in range(g.n):
        out.extend(check_layer_lemma(g, v))
    if out:
        return [{"graph6": emit_graph6(g), "violations": out}]
    return []


def suite_layerlemma(max_n: int = 8, jobs: int = 1) -> dict[str, Any]:
    """Layer statement on every connected bull-free graph, every root."""
    t0 = time.time()
    checked = roots = 0
    failures: list[dict] = []
    for n in range(1, max_n + 1):
        graphs = [g for g in bullfree_graphs(n) if is_connected(g)]
        checked += len(graphs)
        roots += sum(g.n for g in graphs)
        for fails in _map_jobs(_layer_one, graphs, jobs):
            failures.extend(fails)
    return _report(
        "layerlemma",
        {"max_n": max_n},
        {"connected_graphs": checked, "roots": roots},
        failures,
        t0,
    )


# ---------------------------------------------------------------------------
# suite: chi <= omega^(4 log2 t + 13) on every bull-free graph
# ---------------------------------------------------------------------------


def _bound_one(g: Graph, t_fixed: int | None = None) -> dict | str | None:
    omega, _ = clique_number(g)
    t_exact, _ = t_parameter(g)
    if t_fixed is not None and t_exact > t_fixed:
        return "outside"
    t_val = t_exact if t_fixed is None else t_fixed
    chi, _ = chromatic_number(g)
    if power_bound_holds(chi, omega, t_val, 4, 13):
        return None
    return {
        "graph6": emit_graph6(g),
        "omega": omega,
        "chi": chi,
        "t": t_val,
        "t_exact": t_exact,
        "bound": bound_repr(omega, t_val, 4, 13),
    }


def suite_bound(max_n: int = 8, jobs: int = 1, t: int | None = None) -> dict[str, Any]:
    """Main inequality, exact arithmetic, every bull-free graph <= max_n.

    With t=None every graph is checked at its own exact class parameter,
    the strongest form.  A fixed t restricts the sweep to graphs whose
    parameter is at most t and checks the bound at that t.
    """
    t0 = time.time()
    checked = 0
    outside = 0
    failures: list[dict] = []
    for n in range(1, max_n + 1):
        graphs = list(bullfree_graphs(n))
        for res in _map_jobs(functools.partial(_bound_one, t_fixed=t), graphs, jobs):
            if res == "outside":
                outside += 1
            elif res is not None:
                failures.append(res)
            else:
                checked += 1
    counts = {"graphs": checked + len(failures) + outside, "checked": checked}
    params: dict[str, Any] = {"max_n": max_n}
    if t is not None:
        params["t"] = t
        counts["outside_class"] = outside
    return _report("bound", params, counts, failures, t0)


# ---------------------------------------------------------------------------
# suite: Mycielski tower invariants
# ---------------------------------------------------------------------------


def suite_mycielski(max_n: int = 4, jobs: int = 1) -> dict[str, Any]:
    """omega = 2, chi = n+1, bull-free for M_1..M_max_n; M_2 is the 5-cycle."""
    t0 = time.time()
    failures: list[dict] = []
    reports = []
    for n in range(1, max_n + 1):
        rep = mycielski_report(n)
        reports.append(rep)
        if not rep["pass"]:
            failures.append(rep)
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    if canonical_form(mycielski_graph(2)) != canonical_form(c5):
        failures.append({"check": "M_2 equals C_5 canonically", "pass": False})
    return _report(
        "mycielski",
        {"max_n": max_n},
        {"towers": len(reports), "largest_vertices": reports[-1]["vertices"]},
        failures,
        t0,
    )


# ---------------------------------------------------------------------------
# suite: the phi recursion against fractional chromatic numbers
# ---------------------------------------------------------------------------


def suite_phi(nmax: int = 10_000, jobs: int = 1) -> dict[str, Any]:
    """phi_n = chi_f(M_n) for n = 1..3, and phi_n^2 >= 2(n+1) up to nmax."""
    t0 = time.time()
    failures: list[dict] = []
    expected = {1: Fraction(2), 2: Fraction(5, 2), 3: Fraction(29, 10)}
    for n, want in expected.items():
        rec = phi_recursion(n)
        frac = fractional_chromatic(mycielski_graph(n))
        if rec != want or frac != want:
            failures.append(
                {
                    "n": n,
                    "recursion": str(rec),
                    "fractional": str(frac),
                    "expected": str(want),
                }
            )
    sweep = phi_sweep(nmax)
    if not sweep["holds"]:
        failures.append({"check": "phi_n^2 >= 2(n+1)", "sweep": sweep})
    return _report(
        "phi",
        {"nmax": nmax},
        {
            "exact_checked": len(expected),
            "sweep_nmax": nmax,
            "sweep_rechecked": len(sweep["rechecked"]),
        },
        failures,
        t0,
    )


SUITES: dict[str, Callable[..., dict[str, Any]]] = {
    "thm21": suite_thm21,
    "layerlemma": suite_layerlemma,
    "bound": suite_bound,
    "mycielski": suite_mycielski,
    "phi": suite_phi,
}


def run_suite(name: str, jobs: int = 1, **params: Any) -> dict[str, Any]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](jobs=jobs, **params)


# ---------------------------------------------------------------------------
# randomized closure-class sweep (not a suite: sample stream, not a census)
# ---------------------------------------------------------------------------


def _cstar_one(args: tuple[int, int, int, int]) -> dict[str, Any]:
    t, seed, budget, chi_check_max = args
    g, recipe, cert = sample_cstar(t, seed, budget)
    issues: list[str] = []
    colors = -1
    try:
        col, acc = color_bullfree(g, t)
        col.verify(g)
        colors = col.count
        if not acc.budget_ok():
            issues.append("account budget violated")
    except BullchromeError as e:
        issues.append(f"{type(e).__name__}: {e}")
    if g.n > budget:
        issues.append(f"size {g.n} over budget {budget}")
    if not issues and g.n <= chi_check_max:
        chi, _ = chromatic_number(g)
        omega, _ = clique_number(g)
        if chi > colors:
            issues.append(f"exact chi {chi} above pipeline count {colors}")
        if not power_bound_holds(chi, omega, t, 4, 13):
            issues.append(f"chi {chi} breaks {bound_repr(omega, t, 4, 13)}")
    out = {
        "t": t,
        "seed": seed,
        "n": g.n,
        "colors": colors,
        "membership": cert["membership"],
    }
    if issues:
        out["issues"] = issues
        out["recipe"] = recipe.to_json()
    return out


def run_cstar_sweep(
    samples: int = 1000,
    t_values: tuple[int, ...] = (2, 3, 4),
    budget: int = 60,
    chi_check_max: int = 18,
    jobs: int = 1,
) -> dict[str, Any]:
    """Color a deterministic stream of closure-class samples end to end.

    Every sample is certified bull-free at generation, colored by the
    full pipeline, verified proper, and held to its account budgets;
    small samples also get an exact chromatic-number cross-check and the
    main inequality evaluated exactly.
    """
    t0 = time.time()
    per_t = [samples // len(t_values)] * len(t_values)
    for i in range(samples % len(t_values)):
        per_t[i] += 1
    args = [
        (t, seed, budget, chi_check_max)
        for t, quota in zip(t_values, per_t)
        for seed in range(quota)
    ]
    results = _map_jobs(_cstar_one, args, jobs)
    failures = [r for r in results if "issues" in r]
    sizes = [r["n"] for r in results]
    counts = {
        "samples": len(results),
        "per_t": {str(t): q for t, q in zip(t_values, per_t)},
        "max_vertices": max(sizes),
        "mean_vertices": round(sum(sizes) / len(sizes), 1),
        "max_colors": max(r["colors"] for r in results),
        "exact_membership": sum(1 for r in results if r["membership"] == "exact"),
        "chi_crosschecked": sum(1 for r in results if r["n"] <= chi_check_max),
    }
    return _report(
        "cstar",
        {
            "samples": samples,
            "t_values": list(t_values),
            "budget": budget,
            "chi_check_max": chi_check_max,
        },
        counts,
        failures,
        t0,
    )

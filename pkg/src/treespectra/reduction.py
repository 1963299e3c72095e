"""Pendant length-2 paths: detection, stripping, and the census of trees
without them.

A pendant P2 at v is a two-vertex path hanging off v; in degree terms, a
neighbor w of v with degree 2 whose other neighbor is a leaf.  A tree is
reduced when no vertex carries one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import enumerate_free_trees
from .spectra import m_value, multiplicity
from .trees import Tree, attach_pendants


@dataclass(frozen=True)
class PendantReport:
    """Per-vertex pendant-P2 counts for one tree."""

    per_vertex: tuple[int, ...]
    total: int
    is_reduced: bool


def _pendant_midpoints(tree: Tree, v: int) -> list[int]:
    """Midpoints w of pendant P2s at v (v-w-leaf with deg w = 2)."""
    out = []
    for w in tree.adj[v]:
        if tree.degree(w) != 2:
            continue
        other = tree.adj[w][0] if tree.adj[w][0] != v else tree.adj[w][1]
        if tree.degree(other) == 1:
            out.append(w)
    return out


def pendant_report(tree: Tree) -> PendantReport:
    counts = tuple(len(_pendant_midpoints(tree, v)) for v in range(tree.n))
    total = sum(counts)
    return PendantReport(per_vertex=counts, total=total, is_reduced=(total == 0))


def strip_pendant_p2(tree: Tree, v: int) -> Tree:
    """Remove one pendant P2 at v (the smallest-labeled midpoint)."""
    mids = _pendant_midpoints(tree, v)
    if not mids:
        raise ValueError(f"no pendant P2 at vertex {v}")
    w = min(mids)
    leaf = tree.adj[w][0] if tree.adj[w][0] != v else tree.adj[w][1]
    keep = [u for u in range(tree.n) if u not in (w, leaf)]
    index = {orig: i for i, orig in enumerate(keep)}
    edges = [(index[a], index[b]) for a in keep for b in tree.adj[a]
             if b in index and a < b]
    return Tree(len(keep), edges)


def reduce_core(tree: Tree) -> Tree:
    """Strip pendant P2s until none remain.

    Strips at the smallest vertex carrying one (smallest midpoint first), so
    the returned labeled tree is deterministic; the isomorphism class is
    independent of strip order, which the test suite asserts on small orders.
    """
    return reduce_with_trace(tree)[0]


def reduce_with_trace(tree: Tree) -> tuple[Tree, list[dict]]:
    """reduce_core plus one trace entry per strip (vertex and m before/after)."""
    steps = []
    current = tree
    while True:
        report = pendant_report(current)
        if report.is_reduced:
            return current, steps
        v = next(i for i, c in enumerate(report.per_vertex) if c)
        m_before = m_value(current)
        current = strip_pendant_p2(current, v)
        steps.append({
            "vertex": v,
            "m_before": m_before,
            "m_after": m_value(current),
            "code_after": current.code_str(),
        })


def strip_monotonicity_holds(tree: Tree) -> bool:
    """Every single pendant-P2 strip keeps the count of eigenvalues in
    (-1, 1) from growing."""
    report = pendant_report(tree)
    if report.total == 0:
        raise ValueError("tree has no pendant P2")
    m_before = m_value(tree)
    for v, c in enumerate(report.per_vertex):
        if c and m_value(strip_pendant_p2(tree, v)) > m_before:
            return False
    return True


def pendant_growth_holds(tree: Tree, v: int) -> bool:
    """Adding one more pendant P2 at a vertex that already has one keeps the
    (-1, 1) eigenvalue count and raises the multiplicity of 1 by one."""
    if not _pendant_midpoints(tree, v):
        raise ValueError(f"no existing pendant P2 at vertex {v}")
    grown = attach_pendants(tree, [(v, 1)])
    return (m_value(grown) == m_value(tree)
            and multiplicity(grown, 1) == multiplicity(tree, 1) + 1)


def reduced_census(k: int, order_cap: int) -> list[Tree]:
    """All reduced trees with exactly k eigenvalues in (-1, 1), up to the
    given order, sorted by (order, canonical code)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    found = []
    for n in range(1, order_cap + 1):
        for tree in enumerate_free_trees(n):
            if pendant_report(tree).is_reduced and m_value(tree) == k:
                found.append(tree)
    found.sort(key=lambda t: (t.n, t.canonical_code))
    return found

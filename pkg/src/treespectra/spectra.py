"""Characteristic polynomials of trees and the spectral statistics built on them.

The tree characteristic polynomial is computed by the pendant-vertex
recurrence phi(G) = x*phi(G-v) - phi(G-v-u), organized as a single rooted
bottom-up pass; results are memoized on canonical codes in a bounded cache.
The one non-tree graph needed anywhere (an even cycle with two pendants) gets
its polynomial from an exact integer Faddeev-LeVerrier determinant.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .polys import (IntPoly, PrecisionExhausted, SpectrumSummary,
                    count_roots_above, count_roots_above_quadratic,
                    count_roots_open, even_part, integer_roots,
                    isolate_kth_largest, poly_gcd,
                    quadratic_root_multiplicity,
                    rational_root_multiplicity, root_bound, taylor_shift)
from .trees import Tree, attach_pendants, bipartition, delete_vertex

_X = IntPoly.x()
_ONE = IntPoly.one()

_MEMO_LIMIT = 20000
_memo: "OrderedDict[tuple, IntPoly]" = OrderedDict()
_memo_lock = threading.Lock()


def clear_char_poly_cache() -> None:
    with _memo_lock:
        _memo.clear()


def char_poly(tree: Tree) -> IntPoly:
    """Monic characteristic polynomial of the tree's adjacency matrix."""
    key = tree.canonical_code
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    n, adj = tree.n, tree.adj
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for u in order:
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    parent[0] = -1
    # a[v] = phi(subtree at v), b[v] = phi(subtree at v minus v)
    a: list = [None] * n
    b: list = [None] * n
    for v in reversed(order):
        kids = [w for w in adj[v] if parent[w] == v]
        if not kids:
            a[v], b[v] = _X, _ONE
            continue
        ka = [a[w] for w in kids]
        prefix = [_ONE]
        for p in ka:
            prefix.append(prefix[-1] * p)
        suffix = [_ONE]
        for p in reversed(ka):
            suffix.append(suffix[-1] * p)
        suffix.reverse()
        prod_all = prefix[-1]
        acc = IntPoly.zero()
        for j, w in enumerate(kids):
            acc = acc + b[w] * (prefix[j] * suffix[j + 1])
        a[v] = _X * prod_all - acc
        b[v] = prod_all
    phi = a[0]
    with _memo_lock:
        _memo[key] = phi
        while len(_memo) > _MEMO_LIMIT:
            _memo.popitem(last=False)
    return phi


def char_poly_forest(components: Sequence[Tree]) -> IntPoly:
    """Product of component characteristic polynomials (1 for no components)."""
    out = _ONE
    for t in components:
        out = out * char_poly(t)
    return out


# ---------------------------------------------------------------------------
# exact determinant route for small general graphs


def char_poly_adjacency(matrix: Sequence[Sequence[int]]) -> IntPoly:
    """Characteristic polynomial of an integer matrix via Faddeev-LeVerrier.

    All divisions are exact for integer matrices; suitable for the small
    fixed graphs the verifier needs (cycles with pendants).
    """
    n = len(matrix)
    a = [list(row) for row in matrix]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    c = 1
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                m[i][i] += c
            m = _mat_mul(a, m)
        else:
            m = [row[:] for row in a]
        trace = sum(m[i][i] for i in range(n))
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division failed")
        c = q
        coeffs[n - k] = c
    return IntPoly(coeffs)


def _mat_mul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(n):
                    oi[j] += aik * bk[j]
    return out


def ring_with_pendants_matrix(extra: int = 0) -> list[list[int]]:
    """Adjacency matrix of a cycle of length 6+extra with two pendant
    vertices attached to one cycle vertex.

    extra=0 is the 8-vertex graph whose largest eigenvalue is exactly sqrt(5);
    each increment corresponds to one subdivision of a cycle edge.
    """
    if extra < 0:
        raise ValueError("extra must be nonnegative")
    cycle = 6 + extra
    n = cycle + 2
    mat = [[0] * n for _ in range(n)]

    def link(u, v):
        mat[u][v] = mat[v][u] = 1

    for i in range(cycle):
        link(i, (i + 1) % cycle)
    link(0, cycle)
    link(0, cycle + 1)
    return mat


def char_poly_ring_with_pendants(extra: int = 0) -> IntPoly:
    """Exact characteristic polynomial of the cycle-with-two-pendants family."""
    return char_poly_adjacency(ring_with_pendants_matrix(extra))


# ---------------------------------------------------------------------------
# spectral statistics


def m_value(tree: Tree) -> int:
    """Eigenvalues in the open interval (-1, 1), counted with multiplicity."""
    return count_roots_open(char_poly(tree), -1, 1).with_multiplicity


def multiplicity(tree: Tree, eigenvalue: int) -> int:
    """Exact multiplicity of an integer eigenvalue."""
    return rational_root_multiplicity(char_poly(tree), eigenvalue)


def forest_multiplicity(components: Sequence[Tree], eigenvalue: int) -> int:
    return sum(multiplicity(t, eigenvalue) for t in components)


def nullity_poly(tree: Tree) -> int:
    """Multiplicity of 0, read off as the valuation of the char polynomial."""
    coeffs = char_poly(tree).coeffs
    h = 0
    while coeffs[h] == 0:
        h += 1
    return h


def max_matching_size(tree: Tree) -> int:
    """Maximum matching via leaf stripping (a leaf is always matchable to
    its unique neighbor without loss)."""
    n = tree.n
    deg = [tree.degree(v) for v in range(n)]
    alive = bytearray([1]) * n
    queue = [v for v in range(n) if deg[v] == 1]
    matched = 0
    for u in queue:
        if not alive[u] or deg[u] != 1:
            continue
        partner = -1
        for w in tree.adj[u]:
            if alive[w]:
                partner = w
                break
        if partner < 0:
            continue
        alive[u] = alive[partner] = 0
        matched += 1
        for w in tree.adj[partner]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return matched


def nullity_matching(tree: Tree) -> int:
    """Nullity as order minus twice the maximum matching size."""
    return tree.n - 2 * max_matching_size(tree)


def is_integral(tree: Tree) -> SpectrumSummary:
    """Integer-root extraction of the char polynomial; the verdict is the
    summary's is_integral flag (residual of degree zero)."""
    return integer_roots(char_poly(tree))


@dataclass(frozen=True)
class TreeSpectrum:
    """Bundle of the spectral facts the search and verifier care about."""

    code: tuple
    char_poly: IntPoly
    summary: SpectrumSummary
    m_value: int
    nullity: int

    @classmethod
    def analyze(cls, tree: Tree) -> "TreeSpectrum":
        phi = char_poly(tree)
        summary = integer_roots(phi)
        return cls(code=tree.canonical_code, char_poly=phi, summary=summary,
                   m_value=count_roots_open(phi, -1, 1).with_multiplicity,
                   nullity=summary.nullity)


# ---------------------------------------------------------------------------
# the attachment identity


def join_formula(t1: Tree, v1: int, t2: Tree, v2: int, k: int) -> IntPoly:
    """phi of the tree made by joining v1 to the v2 of k copies of t2:

        phi(T2)^(k-1) * (phi(T1) phi(T2) - k phi(T1-v1) phi(T2-v2))
    """
    if k < 1:
        raise ValueError("need k >= 1")
    p1 = char_poly(t1)
    p2 = char_poly(t2)
    q1 = char_poly_forest(delete_vertex(t1, v1))
    q2 = char_poly_forest(delete_vertex(t2, v2))
    return (p2 ** (k - 1)) * (p1 * p2 - k * (q1 * q2))


# ---------------------------------------------------------------------------
# exact comparison helpers for algebraic numbers


_WIDTH_CAP = Fraction(1, 2 ** 64)


def _count_ge(p: IntPoly, t: Fraction) -> int:
    return (count_roots_above(p, t).with_multiplicity
            + rational_root_multiplicity(p, t))


def compare_root_to_rational(p: IntPoly, k: int, t: Fraction) -> int:
    """Sign of (k-th largest real root of p) - t, decided exactly."""
    t = Fraction(t)
    ge = _count_ge(p, t)
    if ge < k:
        return -1
    gt = ge - rational_root_multiplicity(p, t)
    if gt >= k:
        return 1
    return 0


def _interval_of(p: IntPoly, k: int, width: Fraction) -> tuple[Fraction, Fraction]:
    box = isolate_kth_largest(p, k, width)
    if box.exact is not None:
        return box.exact, box.exact
    return box.lo, box.hi


def sqrt_interval(value: int, width: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of sqrt(value) for a nonnegative integer, exact on squares."""
    if value < 0:
        raise ValueError("negative radicand")
    if value == 0:
        return Fraction(0), Fraction(0)
    return _interval_of(IntPoly((-value, 0, 1)), 1, width)


def courant_weyl_check(tree: Tree, spec: Sequence[tuple[int, int]]) -> list[bool]:
    """Certify lambda_i(T') >= sqrt(s_i + 1) + lambda_n(T) for i = 1..k,
    where T' attaches s_i pendant length-2 paths at the i-th spec vertex and
    the spec is taken in nonincreasing order of s.

    Comparisons are exact: when the right-hand side is rational the verdict
    comes from root counting; otherwise isolating intervals are refined until
    conclusive (PrecisionExhausted beyond the width cap).
    """
    if not spec:
        raise ValueError("empty attachment spec")
    ordered = sorted(spec, key=lambda it: -it[1])
    grown = attach_pendants(tree, ordered)
    phi_grown = char_poly(grown)
    phi_base = char_poly(tree)
    n = tree.n
    lam_min = isolate_kth_largest(phi_base, n, Fraction(1, 16))

    verdicts = []
    for i, (_, s) in enumerate(ordered, start=1):
        root = _isqrt_exact(s + 1)
        if lam_min.exact is not None:
            # rational smallest eigenvalue: the comparison is exact, either
            # against a rational target or in the quadratic field of sqrt(s+1)
            if root is not None:
                target = root + lam_min.exact
                verdicts.append(compare_root_to_rational(phi_grown, i, target) >= 0)
            else:
                ge = (count_roots_above_quadratic(phi_grown, lam_min.exact, s + 1)
                      + quadratic_root_multiplicity(phi_grown, lam_min.exact, s + 1))
                verdicts.append(ge >= i)
            continue
        width = Fraction(1, 4)
        decided: Optional[bool] = None
        while width >= _WIDTH_CAP:
            llo, lhi = _interval_of(phi_grown, i, width)
            mlo, mhi = _interval_of(phi_base, n, width)
            slo, shi = sqrt_interval(s + 1, width)
            if llo >= shi + mhi:
                decided = True
                break
            if lhi <= slo + mlo:
                decided = False
                break
            width /= 4
        if decided is None:
            raise PrecisionExhausted(
                f"inequality for index {i} unresolved at width {_WIDTH_CAP}")
        verdicts.append(decided)
    return verdicts


def _isqrt_exact(v: int) -> Optional[int]:
    from math import isqrt
    r = isqrt(v)
    return r if r * r == v else None


# ---------------------------------------------------------------------------
# squared-eigenvalue shift


def squared_shift_check(tree: Tree, side: int, r: int) -> bool:
    """Attach r new leaves to every vertex of one bipartition class and
    verify that the k largest squared eigenvalues each move up by exactly r
    (k = number of positive eigenvalues of the original tree).

    Tries the exact divisibility certificate first and falls back to per-root
    interval matching when the extra eigenvalues of the grown tree get in the
    way of a clean split.
    """
    if side not in (0, 1):
        raise ValueError("side selects bipartition class 0 or 1")
    if r < 0:
        raise ValueError("r must be nonnegative")
    cls = bipartition(tree)[side]
    if not cls:
        raise ValueError("empty bipartition class")
    edges = tree.edges()
    nxt = tree.n
    for v in cls:
        for _ in range(r):
            edges.append((v, nxt))
            nxt += 1
    grown = Tree(nxt, edges)

    _, q_base = even_part(char_poly(tree))
    _, q_grown = even_part(char_poly(grown))
    k = q_base.degree
    if k == 0:
        return True
    shifted = taylor_shift(q_base, r)

    if shifted.divides(q_grown):
        cof = q_grown.exact_divide(shifted)
        if cof.degree == 0:
            return True
        width = Fraction(1, 4)
        while width >= Fraction(1, 2 ** 40):
            low = isolate_kth_largest(shifted, k, width)
            t = low.exact if low.exact is not None else low.lo
            if cof.evaluate(t) != 0 and count_roots_above(cof, t).distinct == 0:
                return True
            width /= 4
        # fall through to per-root matching on ties

    for j in range(1, k + 1):
        if not _kth_roots_equal(q_grown, shifted, j):
            return False
    return True


def _kth_roots_equal(p: IntPoly, q: IntPoly, j: int) -> bool:
    """Whether the j-th largest real roots of p and q coincide, exactly."""
    common = poly_gcd(p, q)
    width = Fraction(1, 4)
    while True:
        plo, phi_ = _interval_of(p, j, width)
        qlo, qhi = _interval_of(q, j, width)
        if plo == phi_ and qlo == qhi:
            return plo == qlo
        if phi_ <= qlo or qhi <= plo:
            return False
        lo = max(plo, qlo) - width / 2
        hi = min(phi_, qhi) + width / 2
        if common.degree >= 1 and count_roots_open(common, lo, hi).distinct >= 1:
            if (count_roots_open(p, lo, hi).distinct == 1
                    and count_roots_open(q, lo, hi).distinct == 1):
                return True
        width /= 4
        if width < Fraction(1, 2 ** 128):
            raise PrecisionExhausted("root matching did not converge")

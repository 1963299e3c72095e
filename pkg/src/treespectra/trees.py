"""Labeled trees, the caterpillar-style constructors, and canonical codes.

A Tree is immutable once built.  Its canonical code is the level sequence of
the tree rooted at its center (the lexicographically larger choice when two
centers exist), with children ordered by their subtree codes descending; two
trees are isomorphic exactly when their codes are equal.
"""

from __future__ import annotations

from itertools import chain as _chain
from typing import Iterable, Sequence


class TreeFormatError(ValueError):
    """Malformed tree text input; message carries the offending line."""


class Tree:
    """Immutable labeled tree on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_code")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("tree needs at least one vertex")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        if count != n - 1:
            raise ValueError(f"tree of order {n} needs {n - 1} edges, got {count}")
        # connectivity check doubles as the acyclicity certificate
        if n > 1:
            stack = [0]
            visited = bytearray(n)
            visited[0] = 1
            reached = 1
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not visited[w]:
                        visited[w] = 1
                        reached += 1
                        stack.append(w)
            if reached != n:
                raise ValueError("edge set is not connected")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_code", None)

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, code={self.code_str()!r})"

    # -- basic structure ----------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def adjacency_matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges():
            m[u][v] = m[v][u] = 1
        return m

    # -- canonical code -----------------------------------------------

    def centers(self) -> tuple[int, ...]:
        """The one or two middle vertices found by stripping leaf layers."""
        if self.n <= 2:
            return tuple(range(self.n))
        deg = [len(a) for a in self.adj]
        layer = [v for v in range(self.n) if deg[v] == 1]
        remaining = self.n
        while remaining > 2:
            nxt = []
            for v in layer:
                deg[v] = 0
                for w in self.adj[v]:
                    if deg[w] > 1:
                        deg[w] -= 1
                        if deg[w] == 1:
                            nxt.append(w)
            remaining -= len(layer)
            layer = nxt
        return tuple(sorted(layer))

    def rooted_code(self, root: int) -> tuple[int, ...]:
        """Canonical level sequence of the tree rooted at the given vertex."""
        n, adj = self.n, self.adj
        parent = [-1] * n
        order = [root]
        parent[root] = root
        for u in order:
            for w in adj[u]:
                if parent[w] == -1:
                    parent[w] = u
                    order.append(w)
        parent[root] = -1
        codes: list = [None] * n
        for v in reversed(order):
            kids = [codes[w] for w in adj[v] if parent[w] == v]
            if not kids:
                codes[v] = (0,)
            else:
                shifted = sorted((tuple(d + 1 for d in k) for k in kids),
                                 reverse=True)
                codes[v] = (0,) + tuple(_chain.from_iterable(shifted))
        return codes[root]

    @property
    def canonical_code(self) -> tuple[int, ...]:
        code = self._code
        if code is None:
            code = max(self.rooted_code(c) for c in self.centers())
            object.__setattr__(self, "_code", code)
        return code

    def code_str(self) -> str:
        return ",".join(str(d) for d in self.canonical_code)

    def is_isomorphic(self, other: "Tree") -> bool:
        return self.canonical_code == other.canonical_code

    @classmethod
    def from_code(cls, code: Sequence[int] | str) -> "Tree":
        """Rebuild a tree from a level sequence (or its comma-separated form)."""
        if isinstance(code, str):
            try:
                code = [int(p) for p in code.split(",")]
            except ValueError as exc:
                raise ValueError(f"bad level sequence {code!r}") from exc
        code = list(code)
        if not code or code[0] != 0:
            raise ValueError("level sequence must start at 0")
        edges = []
        stack = [0]  # stack[d] = most recent vertex at depth d
        for v, depth in enumerate(code[1:], start=1):
            if not 1 <= depth <= len(stack):
                raise ValueError(f"level jump at position {v}")
            del stack[depth:]
            edges.append((stack[depth - 1], v))
            stack.append(v)
        return cls(len(code), edges)


# ---------------------------------------------------------------------------
# constructors


def path(n: int) -> Tree:
    """The path P_n."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Tree:
    """The star K_{1,k} of order k+1, center labeled 0."""
    if k < 0:
        raise ValueError("star needs k >= 0")
    return Tree(k + 1, [(0, i) for i in range(1, k + 1)])


def c_tree(r: Sequence[int]) -> Tree:
    """Caterpillar on a path of odd order with leaf bundles at even positions.

    A path on 2n+1 vertices is labeled 0..2n from one endpoint (spine vertex
    v_k of the classical description is label k-1), and r[i-1] new leaves are
    attached at v_{2i} (label 2i-1).  Leaves are appended after the spine in
    attachment order.
    """
    n = len(r)
    if n < 1:
        raise ValueError("c_tree needs at least one group")
    if any(x < 0 for x in r):
        raise ValueError("leaf counts must be nonnegative")
    spine = 2 * n + 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(1, n + 1):
        hub = 2 * i - 1
        for _ in range(r[i - 1]):
            edges.append((hub, nxt))
            nxt += 1
    return Tree(nxt, edges)


def s_tree(r: Sequence[int]) -> Tree:
    """Extend c_tree(r) by one new leaf at every degree-1 vertex and at each
    odd interior spine vertex v_3, v_5, ..., v_{2n-1}.

    New vertices are appended after c_tree's labels: first over the degree-1
    vertices in increasing label order, then over the odd spine positions.
    The spider hubs v_2, v_4, ..., v_{2n} keep their c_tree labels 1, 3, ...,
    2n-1.
    """
    n = len(r)
    base = c_tree(r)
    edges = base.edges()
    nxt = base.n
    for v in range(base.n):
        if base.degree(v) == 1:
            edges.append((v, nxt))
            nxt += 1
    for k in range(3, 2 * n, 2):  # v_3, v_5, ..., v_{2n-1}
        edges.append((k - 1, nxt))
        nxt += 1
    return Tree(nxt, edges)


def hub_vertices(r: Sequence[int]) -> tuple[int, ...]:
    """Labels of v_2, v_4, ..., v_{2n} in c_tree(r) / s_tree(r)."""
    return tuple(2 * i - 1 for i in range(1, len(r) + 1))


def attach_pendants(tree: Tree, spec: Sequence[tuple[int, int]]) -> Tree:
    """Attach pendant paths of length two: spec lists (vertex, count) pairs.

    Vertices must be distinct and counts at least one; an empty spec returns
    the tree unchanged.  New vertices are appended in spec order, midpoint
    before leaf.
    """
    if not spec:
        return tree
    seen = set()
    for v, s in spec:
        if not 0 <= v < tree.n:
            raise ValueError(f"vertex {v} out of range")
        if v in seen:
            raise ValueError(f"duplicate vertex {v} in attachment spec")
        if s < 1:
            raise ValueError("pendant counts must be >= 1")
        seen.add(v)
    edges = tree.edges()
    nxt = tree.n
    for v, s in spec:
        for _ in range(s):
            edges.append((v, nxt))
            edges.append((nxt, nxt + 1))
            nxt += 2
    return Tree(nxt, edges)


def delete_vertex(tree: Tree, v: int) -> list[Tree]:
    """Connected components of tree - v, relabeled to 0..k-1 each.

    Components are ordered by their smallest original vertex label.
    """
    if not 0 <= v < tree.n:
        raise ValueError(f"vertex {v} out of range")
    visited = bytearray(tree.n)
    visited[v] = 1
    components = []
    for start in range(tree.n):
        if visited[start]:
            continue
        comp = [start]
        visited[start] = 1
        for u in comp:
            for w in tree.adj[u]:
                if not visited[w]:
                    visited[w] = 1
                    comp.append(w)
        comp.sort()
        index = {orig: i for i, orig in enumerate(comp)}
        edges = [(index[a], index[b]) for a in comp for b in tree.adj[a]
                 if b in index and a < b]
        components.append(Tree(len(comp), edges))
    return components


def join_trees(t1: Tree, v1: int, t2: Tree, v2: int, k: int) -> Tree:
    """Join v1 of t1 to the v2 vertex of each of k fresh copies of t2."""
    if k < 1:
        raise ValueError("need k >= 1 copies")
    if not 0 <= v1 < t1.n:
        raise ValueError(f"vertex {v1} out of range")
    if not 0 <= v2 < t2.n:
        raise ValueError(f"vertex {v2} out of range")
    edges = t1.edges()
    t2_edges = t2.edges()
    for j in range(k):
        off = t1.n + j * t2.n
        edges.extend((off + a, off + b) for a, b in t2_edges)
        edges.append((v1, off + v2))
    return Tree(t1.n + k * t2.n, edges)


def bipartition(tree: Tree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two color classes by distance parity from vertex 0."""
    color = [-1] * tree.n
    color[0] = 0
    queue = [0]
    for u in queue:
        for w in tree.adj[u]:
            if color[w] == -1:
                color[w] = 1 - color[u]
                queue.append(w)
    side0 = tuple(v for v in range(tree.n) if color[v] == 0)
    side1 = tuple(v for v in range(tree.n) if color[v] == 1)
    return side0, side1


# ---------------------------------------------------------------------------
# text format


def parse_tree_text(text: str) -> Tree:
    """Parse "n then n-1 edge lines" format, reporting line numbers on error."""
    lines = text.splitlines()
    if not lines:
        raise TreeFormatError("line 1: empty input, expected vertex count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise TreeFormatError(f"line 1: expected integer order, got {lines[0]!r}")
    edges = []
    need = max(n - 1, 0)
    body = [ln for ln in lines[1:]]
    # ignore trailing blank lines only
    while body and not body[-1].strip():
        body.pop()
    if len(body) != need:
        raise TreeFormatError(f"expected {need} edge lines after the header, "
                              f"got {len(body)}")
    for i, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise TreeFormatError(f"line {i}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeFormatError(f"line {i}: non-integer endpoint in {ln!r}")
        edges.append((u, v))
    try:
        return Tree(n, edges)
    except ValueError as exc:
        raise TreeFormatError(str(exc))


def format_tree_text(tree: Tree) -> str:
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges())
    return "\n".join(lines) + "\n"

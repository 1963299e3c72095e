"""Isomorphism-free enumeration of all trees of a given order.

Canonical rooted level sequences are generated in lexicographically
decreasing order by the classic successor rule (copy the block between the
deepest vertex and its parent cyclically over the tail).  A candidate is
emitted as a free tree exactly when it coincides with the center-rooted
canonical code of the tree it describes, so each isomorphism class appears
once.  Sharding hands out emitted trees round-robin by emission index, which
keeps shard unions exactly equal to the unsharded stream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .trees import Tree


def _initial_sequence(n: int) -> list[int]:
    return list(range(n))


def _successor(seq: list[int]) -> Optional[list[int]]:
    """Next canonical rooted level sequence in decreasing lex order."""
    p = len(seq) - 1
    while p >= 0 and seq[p] < 2:
        p -= 1
    if p < 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:p]
    block = seq[q:p]
    while len(out) < len(seq):
        out.extend(block[: len(seq) - len(out)])
    return out


def _parents(seq: list[int]) -> list[int]:
    stack = [0]
    parents = [-1] * len(seq)
    for v, depth in enumerate(seq[1:], start=1):
        del stack[depth:]
        parents[v] = stack[depth - 1]
        stack.append(v)
    return parents


def _root_is_center(seq: list[int], parents: list[int]) -> bool:
    """Cheap rejection: the root's eccentricity (= height) must equal the
    tree radius, found from the diameter by two sweeps."""
    n = len(seq)
    if n <= 2:
        return True
    children: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        children[parents[v]].append(v)

    def farthest(src: int) -> tuple[int, int]:
        dist = [-1] * n
        dist[src] = 0
        queue = [src]
        best = src
        for u in queue:
            step = dist[u] + 1
            for w in children[u]:
                if dist[w] == -1:
                    dist[w] = step
                    queue.append(w)
            pw = parents[u]
            if pw != -1 and dist[pw] == -1:
                dist[pw] = step
                queue.append(pw)
        for v in range(n):
            if dist[v] > dist[best]:
                best = v
        return best, dist[best]

    far, _ = farthest(0)
    _, diameter = farthest(far)
    return max(seq) == (diameter + 1) // 2


def _tree_from_sequence(seq: list[int]) -> Tree:
    parents = _parents(seq)
    return Tree(len(seq), [(parents[v], v) for v in range(1, len(seq))])


@dataclass
class EnumerationCursor:
    """Restart point: the last candidate sequence examined plus the global
    count of trees emitted so far (across all shards)."""

    n: int
    sequence: Optional[tuple]
    emitted: int
    exhausted: bool
    shard: tuple

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "sequence": list(self.sequence) if self.sequence is not None else None,
            "emitted": self.emitted,
            "exhausted": self.exhausted,
            "shard": list(self.shard),
        })

    @classmethod
    def from_json(cls, text: str) -> "EnumerationCursor":
        data = json.loads(text)
        seq = data["sequence"]
        return cls(n=int(data["n"]),
                   sequence=tuple(seq) if seq is not None else None,
                   emitted=int(data["emitted"]),
                   exhausted=bool(data["exhausted"]),
                   shard=tuple(data["shard"]))


class FreeTreeEnumerator:
    """Single-consumer stream of all free trees of order n (one shard)."""

    def __init__(self, n: int, shard: tuple = (0, 1),
                 cursor: Optional[EnumerationCursor] = None):
        if n < 1:
            raise ValueError("order must be at least 1")
        index, count = shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"invalid shard {shard}")
        self.n = n
        self.shard = (index, count)
        if cursor is not None:
            if cursor.n != n or tuple(cursor.shard) != self.shard:
                raise ValueError("cursor does not match enumerator parameters")
            self._seq = list(cursor.sequence) if cursor.sequence is not None else None
            self._emitted = cursor.emitted
            self._exhausted = cursor.exhausted
            self._started = cursor.sequence is not None or cursor.exhausted
        else:
            self._seq = None
            self._emitted = 0
            self._exhausted = False
            self._started = False

    def cursor(self) -> EnumerationCursor:
        return EnumerationCursor(
            n=self.n,
            sequence=tuple(self._seq) if self._seq is not None else None,
            emitted=self._emitted,
            exhausted=self._exhausted,
            shard=self.shard,
        )

    def __iter__(self) -> Iterator[Tree]:
        if self._exhausted:
            return
        index, count = self.shard
        while True:
            if not self._started:
                seq = _initial_sequence(self.n)
                self._started = True
            else:
                seq = _successor(self._seq) if self._seq is not None else None
            if seq is None:
                self._exhausted = True
                return
            self._seq = seq
            parents = _parents(seq)
            if _root_is_center(seq, parents):
                tree = _tree_from_sequence(seq)
                if tree.canonical_code == tuple(seq):
                    take = self._emitted % count == index
                    self._emitted += 1
                    if take:
                        yield tree


def enumerate_free_trees(n: int, shard: tuple = (0, 1)) -> Iterator[Tree]:
    """All free trees of order n, one per isomorphism class."""
    return iter(FreeTreeEnumerator(n, shard))

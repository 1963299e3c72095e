import random

import pytest

from oracles import free_tree_counts_by_recurrence, labeled_tree_codes
from treespectra.enumeration import (EnumerationCursor, FreeTreeEnumerator,
                                     _initial_sequence, _successor,
                                     _tree_from_sequence, enumerate_free_trees)

# counts for n = 1..12, from the labeled-tree dedup oracle (live below for
# n <= 8) and the counting recurrence (cross-checked live for all 12)
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


class TestSuccessorRule:
    def test_order_four_walk(self):
        seqs = []
        seq = _initial_sequence(4)
        while seq is not None:
            seqs.append(tuple(seq))
            seq = _successor(seq)
        assert seqs == [(0, 1, 2, 3), (0, 1, 2, 2), (0, 1, 2, 1), (0, 1, 1, 1)]

    def test_candidates_are_canonical(self):
        # every generated rooted sequence is its own root-0 canonical code
        for n in range(1, 8):
            seq = _initial_sequence(n)
            while seq is not None:
                tree = _tree_from_sequence(seq)
                assert tree.rooted_code(0) == tuple(seq)
                seq = _successor(seq)


class TestFreeTreeStream:
    def test_counts_match_recurrence(self):
        live = free_tree_counts_by_recurrence(12)
        for n, expected in enumerate(FREE_TREE_COUNTS, start=1):
            assert live[n] == expected

    def test_counts_small(self):
        for n, expected in enumerate(FREE_TREE_COUNTS[:9], start=1):
            assert sum(1 for _ in enumerate_free_trees(n)) == expected

    def test_codes_match_labeled_dedup(self):
        for n in range(1, 9):
            ours = {t.canonical_code for t in enumerate_free_trees(n)}
            assert ours == labeled_tree_codes(n)

    def test_no_duplicates_and_sorted(self):
        for n in range(1, 10):
            codes = [t.canonical_code for t in enumerate_free_trees(n)]
            assert len(set(codes)) == len(codes)
            assert codes == sorted(codes, reverse=True)

    def test_examples(self):
        assert sum(1 for _ in enumerate_free_trees(4)) == 2
        assert sum(1 for _ in enumerate_free_trees(7)) == 11
        assert sum(1 for _ in enumerate_free_trees(10)) == 106


class TestSharding:
    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_partition(self, m):
        full = [t.canonical_code for t in enumerate_free_trees(9)]
        shards = [[t.canonical_code for t in enumerate_free_trees(9, (i, m))]
                  for i in range(m)]
        merged = [c for shard in shards for c in shard]
        assert sorted(merged, reverse=True) == full
        assert len(merged) == len(set(merged))

    def test_invalid_shard(self):
        with pytest.raises(ValueError):
            FreeTreeEnumerator(5, (3, 2))
        with pytest.raises(ValueError):
            FreeTreeEnumerator(5, (0, 0))


class TestCursorResume:
    def test_resume_mid_stream(self):
        rng = random.Random(0)
        for n in (6, 8, 9):
            full = [t.canonical_code for t in enumerate_free_trees(n)]
            stop = rng.randrange(1, len(full))
            enum = FreeTreeEnumerator(n)
            first = []
            for tree in enum:
                first.append(tree.canonical_code)
                if len(first) == stop:
                    break
            cursor = enum.cursor()
            # serialize through JSON like the search engine does
            cursor = EnumerationCursor.from_json(cursor.to_json())
            rest = [t.canonical_code for t in FreeTreeEnumerator(n, cursor=cursor)]
            assert first + rest == full

    def test_fresh_cursor_resumes_from_start(self):
        enum = FreeTreeEnumerator(5)
        cursor = enum.cursor()
        assert [t.n for t in FreeTreeEnumerator(5, cursor=cursor)] == [5, 5, 5]

    def test_exhausted_cursor(self):
        enum = FreeTreeEnumerator(3)
        list(enum)
        again = FreeTreeEnumerator(3, cursor=enum.cursor())
        assert list(again) == []

    def test_cursor_mismatch(self):
        enum = FreeTreeEnumerator(5)
        list(enum)
        with pytest.raises(ValueError):
            FreeTreeEnumerator(6, cursor=enum.cursor())

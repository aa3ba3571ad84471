from collections import Counter
from functools import lru_cache
from math import factorial

import pytest

from heckeq.diagrams import (
    YoungDiagram,
    dimension,
    export_dimension_memo,
    import_dimension_memo,
    partitions,
    paths,
)

from conftest import Y


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int) -> int:
    """Independent counting oracle: number of partitions of n with parts <= max_part."""
    if n == 0:
        return 1
    if max_part == 0:
        return 0
    total = 0
    for first in range(1, max_part + 1):
        if first > n:
            break
        total += partition_count(n - first, first)
    return total


class TestYoungDiagram:
    def test_validation(self):
        with pytest.raises(ValueError):
            YoungDiagram(())
        with pytest.raises(ValueError):
            YoungDiagram((1, 2))
        with pytest.raises(ValueError):
            YoungDiagram((2, 0))
        with pytest.raises(ValueError):
            YoungDiagram((2, -1))

    def test_string_roundtrip(self):
        g = YoungDiagram.from_string("4,1,1")
        assert g == Y(4, 1, 1)
        assert str(g) == "4,1,1"
        with pytest.raises(ValueError):
            YoungDiagram.from_string("4,x")

    def test_n(self):
        assert Y(4, 1, 1).n == 6


class TestPartitions:
    def test_n3_exhaustive(self):
        assert {g.rows for g in partitions(3)} == {(3,), (2, 1), (1, 1, 1)}

    def test_descending_lex_order(self):
        assert [g.rows for g in partitions(4)] == [
            (4,),
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]

    def test_n6_includes_degenerate_pair(self):
        parts = partitions(6)
        assert len(parts) == 11
        rows = {g.rows for g in parts}
        assert (4, 1, 1) in rows and (3, 3) in rows

    def test_count_vs_oracle(self):
        # oracle first: the bounded-part recurrence gives p(14) = 135
        assert partition_count(14, 14) == 135
        assert len(partitions(14)) == 135
        for n in range(1, 13):
            assert len(partitions(n)) == partition_count(n, n)

    def test_no_duplicates(self):
        for n in range(1, 11):
            parts = partitions(n)
            assert len(parts) == len(set(parts))
            assert all(g.n == n for g in parts)


class TestContents:
    def test_single_column(self):
        assert sorted(Y(1, 1, 1).contents()) == [-2, -1, 0]

    def test_two_rows(self):
        assert Counter(Y(3, 3).contents()) == Counter({0: 2, 1: 2, -1: 1, 2: 1})

    def test_hook(self):
        assert sorted(Y(4, 1, 1).contents()) == [-2, -1, 0, 1, 2, 3]

    def test_diagonal_counts(self):
        assert Y(3, 3).diagonal_counts() == {-1: 1, 0: 2, 1: 2, 2: 1}
        assert Y(5).diagonal_counts() == {k: 1 for k in range(5)}

    def test_extreme_diagonals_single_box(self):
        for n in range(1, 8):
            for g in partitions(n):
                beta = g.diagonal_counts()
                assert beta[max(beta)] == 1
                assert beta[min(beta)] == 1
                assert sum(beta.values()) == n

    def test_diagonal_counts_rebuild_content_sum(self):
        for n in range(1, 8):
            for g in partitions(n):
                beta = g.diagonal_counts()
                assert sum(k * b for k, b in beta.items()) == sum(g.contents())


class TestBranching:
    def test_branch_down_examples(self):
        assert [h.rows for h in Y(3, 1).branch_down()] == [(2, 1), (3,)]
        assert [h.rows for h in Y(2, 1).branch_down()] == [(1, 1), (2,)]
        assert Y(1).branch_down() == []

    def test_branch_up_examples(self):
        assert [h.rows for h in Y(2).branch_up()] == [(3,), (2, 1)]
        assert [h.rows for h in Y(2, 1).branch_up()] == [(3, 1), (2, 2), (2, 1, 1)]

    def test_adjunction(self):
        for n in range(1, 7):
            for g in partitions(n):
                for h in g.branch_up():
                    assert g in h.branch_down()
                if n >= 2:
                    for h in g.branch_down():
                        assert g in h.branch_up()


class TestPathsAndDimension:
    def test_path_counts(self):
        assert len(paths(Y(2, 1))) == 2
        assert len(paths(Y(3, 1))) == 3
        for n in range(1, 7):
            assert len(paths(Y(n))) == 1

    def test_paths_shape(self):
        for chain in paths(Y(3, 1)):
            assert chain[0] == Y(1)
            assert chain[-1] == Y(3, 1)
            assert [g.n for g in chain] == [1, 2, 3, 4]
        chains = paths(Y(2, 2))
        assert len(set(chains)) == len(chains)

    def test_dimension_examples(self):
        assert dimension(Y(2, 1)) == 2
        assert dimension(Y(3)) == 1
        assert dimension(Y(3, 3)) == 5
        assert dimension(Y(4, 1, 1)) == 10

    def test_dimension_counts_paths(self):
        for n in range(1, 7):
            for g in partitions(n):
                assert dimension(g) == len(paths(g))

    def test_sum_of_squares_is_factorial(self):
        for n in range(1, 8):
            assert sum(dimension(g) ** 2 for g in partitions(n)) == factorial(n)

    def test_branching_recursion(self):
        for n in range(2, 9):
            for g in partitions(n):
                assert dimension(g) == sum(dimension(h) for h in g.branch_down())


class TestMemoPersistence:
    def test_export_import_roundtrip(self):
        dimension(Y(3, 2))
        data = export_dimension_memo()
        assert data["3,2"] == 5
        import_dimension_memo({"6,1": 6, "bogus": 3, "2,-1": 1, "3,2": 999})
        assert dimension(Y(6, 1)) == 6
        # existing entries are not clobbered
        assert dimension(Y(3, 2)) == 5

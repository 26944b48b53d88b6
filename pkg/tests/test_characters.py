import math

import pytest

from covext.characters import character, character_table, frobenius_count, hook_length_dimension, partitions
from covext.perm import CycleType, class_size


@pytest.mark.parametrize("n,count", [(1, 1), (4, 5), (8, 22), (10, 42)])
def test_partition_counts(n, count):
    assert len(partitions(n)) == count


@pytest.mark.parametrize("lam,mu,value", [
    ((2, 1), (2, 1), 0),
    ((2, 1), (3,), -1),
    ((2, 1), (1, 1, 1), 2),
    ((1, 1, 1), (2, 1), -1),
    ((3, 1), (2, 2), -1),
    ((2, 2), (3, 1), -1),
])
def test_small_character_values(lam, mu, value):
    assert character(lam, mu) == value


@pytest.mark.parametrize("n", range(1, 8))
def test_dimension_is_hook_length(n):
    for lam in partitions(n):
        assert character(lam, (1,) * n) == hook_length_dimension(lam)


@pytest.mark.parametrize("n", [3, 5, 6])
def test_row_orthogonality(n):
    table = character_table(n)
    parts = partitions(n)
    for lam in parts:
        for nu in parts:
            s = sum(class_size(CycleType(mu)) * table[lam, mu] * table[nu, mu] for mu in parts)
            assert s == (math.factorial(n) if lam == nu else 0)


def test_table_cap():
    with pytest.raises(ValueError):
        character_table(20)


@pytest.mark.parametrize("parts,expected", [
    ([(3,), (3,), (3,)], 2),
    ([(2, 1), (2, 1), (2, 1)], 0),
    ([(1, 1, 1)], 1),
    ([(3,)], 0),
    ([(2, 1), (2, 1)], 3),
])
def test_frobenius_s3(parts, expected):
    assert frobenius_count([CycleType(p) for p in parts], 3) == expected


def test_frobenius_degree_mismatch():
    with pytest.raises(ValueError):
        frobenius_count([CycleType((2, 1))], 4)

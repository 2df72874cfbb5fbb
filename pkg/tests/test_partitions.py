import math

import pytest
from hypothesis import given, strategies as st

from homflychar.exactring import LaurentPoly, mirror_q, qint, rf, substitute
from homflychar.partitions import (
    FusionPath,
    Partition,
    kappa,
    multiplicity,
    partitions_of,
    schur_star,
    schur_star_at,
    syt_paths,
    transpose,
)

q = LaurentPoly.var("q")
qi = LaurentPoly.var("q", -1)


def test_kappa_values():
    assert kappa([2]) == 1 and kappa([1, 1]) == -1
    assert kappa([2, 1]) == 0
    assert kappa([4]) == 6


def test_transpose_examples():
    assert transpose([3, 1]) == Partition([2, 1, 1])
    assert transpose([2, 2]) == Partition([2, 2])
    assert transpose([3, 1, 1]) == Partition([3, 1, 1])


def test_schur_star_low():
    from homflychar.exactring import RFunc, bracket

    s1 = schur_star([1])
    assert s1 == RFunc(bracket(1, 0), [bracket(0, 1)])
    assert schur_star([2]) / s1 == RFunc(bracket(1, 1), [bracket(0, 2)])
    assert schur_star([1, 1]) / s1 == RFunc(bracket(1, -1), [bracket(0, 2)])


def test_schur_star_at_examples():
    assert schur_star_at([1], 2) == rf(qint(2))
    assert schur_star_at([2, 1, 1, 1], 3).is_zero()
    assert not schur_star_at([3, 1, 1], 3).is_zero()


@pytest.mark.parametrize("Q", [[1], [2], [2, 1], [3, 1], [2, 2], [3, 1, 1], [3, 2]])
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_schur_star_at_is_substitution(Q, N):
    assert schur_star_at(Q, N) == substitute(schur_star(Q), {"A": q ** N})


def test_syt_path_examples():
    assert len(syt_paths([2, 1], 3)) == 2
    p31 = syt_paths([3, 1], 4)
    assert len(p31) == 3
    assert p31[0] == FusionPath.parse("[1]<[2]<[3]<[31]")
    assert len(syt_paths([3, 2], 5)) == 5


@pytest.mark.parametrize("m", range(1, 7))
def test_sum_of_squared_multiplicities(m):
    assert sum(multiplicity(Q) ** 2 for Q in partitions_of(m)) == math.factorial(m)


@pytest.mark.parametrize("m", range(1, 7))
def test_kappa_antisymmetric_under_transpose(m):
    for Q in partitions_of(m):
        assert kappa(transpose(Q)) == -kappa(Q)


@pytest.mark.parametrize("m", range(1, 6))
def test_schur_star_transposition(m):
    # S*_{Q'}(A, q) = S*_Q(A, -1/q)
    for Q in partitions_of(m):
        assert schur_star(transpose(Q)) == mirror_q(schur_star(Q))


@given(st.integers(1, 6), st.data())
def test_tableau_paths_are_valid(m, data):
    Q = data.draw(st.sampled_from(partitions_of(m)))
    paths = syt_paths(Q)
    assert len({str(p) for p in paths}) == len(paths)
    for p in paths:
        assert p.end == Q and len(p) == m


def test_partition_parse_forms():
    assert Partition.parse("[3,1,1]") == Partition.parse("311") == Partition([3, 1, 1])
    with pytest.raises(ValueError):
        Partition([1, 2])

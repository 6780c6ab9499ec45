from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from oracles import count_semistandard_tableaux, count_standard_tableaux, dominance_maximal_type_c
from springerc.partitions import (
    Bipartition,
    Partition,
    SymComposition,
    dominance_leq,
    enumerate_bipartitions,
    enumerate_partitions,
    enumerate_sym_compositions,
    enumerate_type_c,
    gl_dim,
    hook_lengths,
    is_type_c,
    num_standard_tableaux,
    type_c_collapse,
)


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Partition()
    bins = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n))
    return Partition(sorted(Counter(bins).values(), reverse=True))


def test_partition_normalizes_and_validates():
    assert Partition([2, 1, 0, 0]).parts == (2, 1)
    assert Partition().parts == ()
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_partition_strings_round_trip():
    assert str(Partition([2, 1, 1])) == "2,1,1"
    assert str(Partition()) == "-"
    assert Partition.from_string("2,1,1") == Partition([2, 1, 1])
    assert Partition.from_string("-") == Partition()
    assert Partition.from_string("0") == Partition()
    with pytest.raises(ValueError):
        Partition.from_string("2,x")


def test_bipartition_strings():
    bp = Bipartition(Partition([2, 1]), Partition([1]))
    assert str(bp) == "2,1|1"
    assert Bipartition.from_string("2,1|1") == bp
    assert Bipartition.from_string("-|1,1") == Bipartition(Partition(), Partition([1, 1]))
    assert Bipartition.from_string("0|2") == Bipartition(Partition(), Partition([2]))
    with pytest.raises(ValueError):
        Bipartition.from_string("2,1")


def test_dual_examples():
    assert Partition().dual() == Partition()
    assert Partition([2]).dual() == Partition([1, 1])
    assert Partition([2, 1, 1]).dual() == Partition([3, 1])


@given(partition_strategy())
def test_dual_is_an_involution(p):
    assert p.dual().dual() == p
    assert p.dual().size() == p.size()


def test_enumerate_partitions_counts_and_order():
    counts = [len(enumerate_partitions(n)) for n in range(9)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [p.parts for p in enumerate_partitions(2)] == [(2,), (1, 1)]
    four = [p.parts for p in enumerate_partitions(4)]
    assert four == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert four == sorted(four, reverse=True)


def test_enumerate_bipartitions():
    assert [str(b) for b in enumerate_bipartitions(1)] == ["1|-", "-|1"]
    assert len(enumerate_bipartitions(2)) == 5
    assert len(enumerate_bipartitions(3)) == 10
    for d in range(6):
        expected = sum(
            len(enumerate_partitions(k)) * len(enumerate_partitions(d - k))
            for k in range(d + 1)
        )
        assert len(enumerate_bipartitions(d)) == expected


def test_is_type_c():
    assert is_type_c(Partition([2, 1, 1]))
    assert not is_type_c(Partition([3, 1]))
    assert is_type_c(Partition())
    assert not is_type_c(Partition([1]))
    assert is_type_c(Partition([3, 3]))


def test_enumerate_type_c():
    assert {p.parts for p in enumerate_type_c(4)} == {
        (4,),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    }
    assert {p.parts for p in enumerate_type_c(2)} == {(2,), (1, 1)}
    assert [p.parts for p in enumerate_type_c(0)] == [()]
    with pytest.raises(ValueError):
        enumerate_type_c(3)


def test_enumerate_sym_compositions_worked_case():
    got = {c.entries for c in enumerate_sym_compositions(2, 4)}
    assert got == {
        (1, 1, 0, 1, 1),
        (0, 1, 2, 1, 0),
        (1, 0, 2, 0, 1),
        (0, 2, 0, 2, 0),
        (2, 0, 0, 0, 2),
        (0, 0, 4, 0, 0),
    }
    assert [c.entries for c in enumerate_sym_compositions(0, 2)] == [(2,)]
    assert {c.entries for c in enumerate_sym_compositions(1, 2)} == {(1, 0, 1), (0, 2, 0)}
    with pytest.raises(ValueError):
        enumerate_sym_compositions(2, 3)


def test_sym_composition_validation():
    with pytest.raises(ValueError):
        SymComposition((1, 0, 1, 0, 1), 2)  # odd total
    with pytest.raises(ValueError):
        SymComposition((1, 0, 0, 1, 2), 2)  # not symmetric
    c = SymComposition.from_string("1,1,0,1,1")
    assert c.n == 2 and c.total == 4
    # symmetry + even total force an even middle entry
    for comp in enumerate_sym_compositions(3, 6):
        assert comp.entries[3] % 2 == 0


def test_hook_lengths_examples():
    assert hook_lengths(Partition([1])) == [[1]]
    assert sorted(sum(hook_lengths(Partition([2, 1])), [])) == [1, 1, 3]
    assert sorted(sum(hook_lengths(Partition([2, 2])), [])) == [1, 2, 2, 3]


def test_num_standard_tableaux_examples():
    assert num_standard_tableaux(Partition([5])) == 1
    assert num_standard_tableaux(Partition([2, 1])) == 2
    assert num_standard_tableaux(Partition([2, 2])) == 2


@given(partition_strategy(max_n=8))
def test_num_standard_tableaux_matches_enumeration(p):
    assert num_standard_tableaux(p) == count_standard_tableaux(p.parts)


@pytest.mark.parametrize("d", range(1, 9))
def test_sum_of_squares_is_factorial(d):
    total = sum(num_standard_tableaux(p) ** 2 for p in enumerate_partitions(d))
    assert total == factorial(d)


def test_gl_dim_examples():
    assert gl_dim(Partition(), 4) == 1
    assert gl_dim(Partition([2]), 2) == 3
    assert gl_dim(Partition([1, 1]), 3) == 3
    assert gl_dim(Partition([1, 1]), 1) == 0


def test_gl_dim_matches_tableau_count():
    for n in range(6):
        for p in enumerate_partitions(n):
            for m in range(5):
                assert gl_dim(p, m) == count_semistandard_tableaux(p.parts, m), (p, m)


def test_dominance():
    assert dominance_leq(Partition([2, 1, 1]), Partition([2, 2]))
    assert not dominance_leq(Partition([4]), Partition([2, 2]))
    p = Partition([3, 2])
    assert dominance_leq(p, p)
    with pytest.raises(ValueError):
        dominance_leq(Partition([2]), Partition([1]))


def test_type_c_collapse_examples():
    assert type_c_collapse(Partition([2, 2])) == Partition([2, 2])
    assert type_c_collapse(Partition([3, 1])) == Partition([2, 2])
    assert type_c_collapse(Partition([1, 1, 1, 1])) == Partition([1, 1, 1, 1])
    with pytest.raises(ValueError):
        type_c_collapse(Partition([2, 1]))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_type_c_collapse_is_dominance_maximal(n):
    for p in enumerate_partitions(n):
        c = type_c_collapse(p)
        assert is_type_c(c)
        assert dominance_leq(c, p)
        assert type_c_collapse(c) == c
        assert (c == p) == is_type_c(p)
        assert c == dominance_maximal_type_c(p)

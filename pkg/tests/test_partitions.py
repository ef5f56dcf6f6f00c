from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unitary_simples.partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    Node,
    ParseError,
    Partition,
    boundary_nodes,
    box_dominates,
    classical_dominates,
    column_lengths,
    dim_specht,
    dominates,
    format_multipartition,
    format_partition,
    from_column_lengths,
    multipartitions_of,
    parse_multipartition,
    parse_partition,
    partitions_of,
    residue,
)
from unitary_simples.tableaux import enumerate_std

partition_st = st.lists(st.integers(1, 6), max_size=7).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_parse_exponent_grammar():
    assert parse_partition("3^4,1") == Partition((3, 3, 3, 3, 1))
    assert parse_partition("2^28,1^3").size == 59
    for empty in ("", "∅", "0", "-"):
        assert parse_partition(empty) == Partition(())


def test_parse_multipartition():
    mp = parse_multipartition("1^3|1^3|1^2")
    assert mp == Multipartition(((1, 1, 1), (1, 1, 1), (1, 1)))
    assert parse_multipartition("∅|1|∅") == Multipartition(((), (1,), ()))
    assert parse_multipartition("2,1", level=1) == Multipartition(((2, 1),))


@pytest.mark.parametrize("bad", ["3,x", "1,2", "3^", "^2", "3^-1"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_partition(bad)


def test_parse_level_mismatch():
    with pytest.raises(ParseError):
        parse_multipartition("1|1", level=3)


@given(partition_st)
def test_format_round_trip(p):
    assert parse_partition(format_partition(p)) == p


def test_format_multipartition():
    assert format_multipartition(Multipartition(((1,) * 7, (), (1,)))) == "1^7|∅|1"


def test_residue_examples():
    assert residue(Node(1, 1, 1), ChargeContext(e=4)) == 0
    assert residue(Node(2, 1, 1), ChargeContext(e=3)) == 2
    assert residue(Node(1, 1, 3), ChargeContext(e=4, level=3, charge=(0, 1, 2))) == 2


def test_charge_must_match_level():
    with pytest.raises(DomainError):
        ChargeContext(e=4, level=3, charge=(0, 1))


def test_dominance_reflexive():
    ctx = ChargeContext(e=3)
    lam = Multipartition(((3, 1),))
    assert dominates(lam, lam, ctx)


def _brute_dominates(lam: Multipartition, mu: Multipartition, ctx: ChargeContext) -> bool:
    # every node of mu is matched by at least as many weakly dominating nodes of lam of the same residue
    def weakly(a, b):
        return a == b or box_dominates(a, b, ctx.level)

    for b in mu.nodes():
        i = residue(b, ctx)
        count_l = sum(1 for a in lam.nodes() if residue(a, ctx) == i and weakly(a, b))
        count_m = sum(1 for a in mu.nodes() if residue(a, ctx) == i and weakly(a, b))
        if count_l < count_m:
            return False
    return True


@pytest.mark.parametrize("n", [4, 5, 6])
def test_dominance_matches_box_counting(n):
    ctx = ChargeContext(e=3)
    parts = [Multipartition((p,)) for p in partitions_of(n)]
    for lam in parts:
        for mu in parts:
            assert dominates(lam, mu, ctx) == _brute_dominates(lam, mu, ctx)


def test_classical_dominance():
    assert classical_dominates(Partition((3, 1)), Partition((2, 2)))
    assert not classical_dominates(Partition((2, 2)), Partition((3, 1)))


def test_boundary_nodes():
    empty = Multipartition(((),))
    assert boundary_nodes(empty, "addable") == [Node(1, 1, 1)]
    lam = Multipartition(((2, 1),))
    assert sorted(boundary_nodes(lam, "removable")) == [Node(1, 2, 1), Node(2, 1, 1)]
    got = boundary_nodes(lam, "removable", ChargeContext(e=3), residue_filter=2)
    assert got == [Node(2, 1, 1)]


def test_dim_specht_examples():
    assert dim_specht(Partition((5,))) == 1
    assert dim_specht(Partition((3, 3, 3, 1))) == 210
    mp = Multipartition(((1, 1, 1), (1, 1, 1), (1, 1)))
    assert dim_specht(mp) == factorial(8) // (factorial(3) ** 2 * factorial(2)) == 560


@given(partition_st.filter(lambda p: p.size <= 9))
def test_dim_specht_equals_tableau_count(p):
    assert dim_specht(p) == len(enumerate_std(p))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=5))
def test_column_lengths_round_trip(cols):
    cols = sorted(cols, reverse=True)
    p = from_column_lengths(cols)
    assert column_lengths(p, len(cols)) == tuple(cols)


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    # bipartitions of 3: sum p(a)p(3-a)
    assert sum(1 for _ in multipartitions_of(3, 2)) == 10


def test_multipartition_add_remove():
    mp = Multipartition(((2,), ()))
    grown = mp.add(Node(1, 1, 2))
    assert grown == Multipartition(((2,), (1,)))
    assert grown.remove(Node(1, 1, 2)) == mp

from collections import Counter

import pytest

from conftest import unitary_partitions
from unitary_simples.abacus import covering_transpositions, enumerate_po, hd_of_partition
from unitary_simples.alcove import (
    alcove_length,
    embed,
    geometric_length,
    good_nodes,
    in_fundamental_alcove,
    is_h_admissible,
    one_column_predecessors,
    one_column_successors,
    path_degree,
    rho,
    unembed,
)
from unitary_simples.partitions import (
    ChargeContext,
    Multipartition,
    Node,
    Partition,
    multipartitions_of,
    parse_multipartition,
    parse_partition,
    residue,
)
from unitary_simples.tableaux import canonical_tableau, enumerate_std, enumerate_std_e

P = parse_partition
M = parse_multipartition
L3 = ChargeContext(e=4, level=3, charge=(0, 1, 2), h=1)
EG1 = M("1^3|1^3|1^2")


def test_admissibility():
    for h in range(1, 6):
        assert is_h_admissible((3,), h, 5)
    assert is_h_admissible((0, 1, 2), 1, 4)
    assert not is_h_admissible((0, 0), 1, 4)


def test_embedding_round_trip():
    ctx = ChargeContext(e=5, h=3)
    for n in range(9):
        for lam in unitary_partitions(n, 5):
            if lam.columns == 3:
                assert unembed(embed(lam, ctx), ctx) == Multipartition((lam,))
    assert len(rho(L3)) == 3


def test_alcove_length_examples():
    assert alcove_length(P("1^3"), ChargeContext(e=3, h=2)) == 1
    assert alcove_length(P("3^5"), ChargeContext(e=5, h=3)) == 0


def test_tricolor_orbit_lengths():
    ctx = ChargeContext(e=5, h=3)
    lengths = sorted(alcove_length(mu, ctx) for mu in enumerate_po(P("3^5"), 5))
    assert lengths[0] == 0 and lengths[-1] == 6 and len(lengths) == 10
    for mu in enumerate_po(P("3^5"), 5):
        assert alcove_length(mu, ctx) == hd_of_partition(mu, 5, 3) == geometric_length(mu, ctx)


def test_fundamental_alcove_membership():
    assert in_fundamental_alcove(P("3^5"), ChargeContext(e=5, h=3))
    assert not in_fundamental_alcove(P("1,1"), ChargeContext(e=3, h=2))
    assert in_fundamental_alcove(EG1, L3)


def test_eg1_unique_in_block():
    content = Counter(residue(b, L3) for b in EG1.nodes())
    same_block = [mp for mp in multipartitions_of(8, 3, max_part=1) if Counter(residue(b, L3) for b in mp.nodes()) == content]
    assert [mp for mp in same_block if in_fundamental_alcove(mp, L3)] == [EG1]


def test_good_nodes():
    assert good_nodes(P("2,1"), ChargeContext(e=3, h=2)) == [Node(2, 1, 1)]
    assert good_nodes(P(""), ChargeContext(e=3, h=2)) == []


def test_eg1_good_nodes_follow_the_single_path():
    (t,) = enumerate_std_e(EG1, L3)
    lam = EG1
    for node in reversed(t.nodes):
        assert good_nodes(lam, L3) == [node]
        lam = lam.remove(node)
    assert lam.size == 0


def test_predecessors_of_fundamental_are_empty():
    assert one_column_predecessors(P("3^4,1"), ChargeContext(e=4, h=3)) == []
    assert one_column_predecessors(EG1, L3) == []


def test_big_reflection_pairs():
    kinds = {m.target: m.kind for m in one_column_predecessors(M("1^8|∅|∅"), L3)}
    assert kinds[M("1^6|∅|1^2")] == "maximal"
    assert kinds[M("1^2|∅|1^6")] == "minimal"


def test_successors_invert_predecessors():
    for mu in enumerate_po(P("3^4,1"), 4):
        ctx = ChargeContext(e=4, h=3)
        for m in one_column_predecessors(mu, ctx):
            assert Multipartition((mu,)) in {s.target for s in one_column_successors(m.target, ctx)}


@pytest.mark.parametrize("e", [3, 4, 5])
def test_predecessors_agree_with_abacus_covers(e):
    for n in range(1, 13):
        for lam in unitary_partitions(n, e):
            ctx = ChargeContext(e=e, h=lam.columns)
            for mu in enumerate_po(lam, e):
                geo = {m.target[0] for m in one_column_predecessors(mu, ctx)}
                ab = {nu for nu, _ in covering_transpositions(mu, e, lam.columns)}
                assert geo == ab


def test_path_degree_on_canonical_and_restricted_tableaux():
    ctx = ChargeContext(e=3, h=2)
    lam = P("2,1")
    assert path_degree(canonical_tableau(lam).nodes, ctx) == 0
    restricted = enumerate_std_e(lam, ctx)
    assert len(restricted) == 1 and path_degree(restricted[0].nodes, ctx) == 0
    (excluded,) = [t for t in enumerate_std(lam) if t not in restricted]
    # the excluded tableau passes through the wall at (1,1); its value is only reported
    assert isinstance(path_degree(excluded.nodes, ctx), int)

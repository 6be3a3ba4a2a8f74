import itertools

import pytest

from oracles import naive_classes
from shapes import DUMBBELL, LOOP, POINT, THETA, TWO_CYCLE, cycle, from_edges, path
from graphcob.catalog import (
    canonical_key,
    enumerate_gafs,
    expansions,
    nerve_export,
    zigzag_connected,
)
from graphcob.cospan import realize_nf
from graphcob.errors import BudgetExceeded, PreconditionViolated
from graphcob.gaf import Gaf, edges
from graphcob.grading import grade
from graphcob.iso import canonical_form
from graphcob.morphism import collapse_edges, collapsed_edges, is_valid_morphism


def test_small_counts():
    assert len(enumerate_gafs(0, 0, 1, 1)) == 3
    assert len(enumerate_gafs(1, 0, 1, 1)) == 6
    assert enumerate_gafs(0, 0, 0, 0) == [Gaf(0, 0, 0, 0)]
    assert set(enumerate_gafs(0, 0, 1, 1)) == {Gaf(0, 0, 0, 0), POINT, LOOP}


@pytest.mark.parametrize("bounds", [(0, 0, 1, 1), (1, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 1), (0, 0, 2, 2), (2, 0, 1, 1)])
def test_counts_match_naive_oracle(bounds):
    assert len(enumerate_gafs(*bounds)) == len(naive_classes(*bounds))


def test_closed_count_by_hand():
    # no vertex: 1; one vertex with 0..3 loops: 4; two unlabeled vertices with
    # (loops at one, loops at the other, parallel edges) summing to <= 3: 13
    assert len(enumerate_gafs(0, 0, 2, 3)) == 1 + 4 + 13


# regression values; the enumerator itself is checked against the naive oracle at smaller bounds
@pytest.mark.parametrize("bounds, count", [((1, 1, 2, 3), 178), ((2, 2, 2, 3), 3224)])
def test_regression_counts(bounds, count):
    assert len(enumerate_gafs(*bounds)) == count


def test_enumeration_canonical_sorted_and_bounded():
    objs = enumerate_gafs(1, 1, 2, 2)
    assert objs == sorted(objs, key=canonical_key)
    assert len(set(objs)) == len(objs)
    for G in objs:
        assert canonical_form(G) == G
        assert G.v_size <= 2 and G.n_edges <= 2


def test_enumeration_closed_under_collapse():
    objs = set(enumerate_gafs(1, 1, 2, 3))
    for G in objs:
        for e in edges(G):
            try:
                T, _ = collapse_edges(G, [e])
            except Exception:
                continue
            assert canonical_form(T) in objs


def test_nerve_small():
    n = nerve_export(0, 0, 1, 1)
    assert len(n.objects) == 3
    pairs = [(i, j) for i, j, _ in n.morphisms]
    loop = n.objects.index(LOOP)
    assert pairs.count((loop, loop)) == 2
    assert all(i == j for i, j in pairs)
    assert len(n.identities) == 3


def test_nerve_two_cycle_collapses():
    n = nerve_export(0, 0, 2, 2)
    c2, loop = n.objects.index(canonical_form(TWO_CYCLE)), n.objects.index(LOOP)
    fs = [f for i, j, f in n.morphisms if (i, j) == (c2, loop)]
    assert len(fs) == 4
    assert len({tuple(collapsed_edges(f)) for f in fs}) == 2


def test_nerve_edge_free():
    # at most one inner vertex: identities only
    n = nerve_export(1, 2, 1, 0)
    assert len(n.morphisms) == len(n.objects)
    # two unmarked isolated vertices can still be swapped
    n = nerve_export(1, 2, 2, 0)
    assert all(i == j for i, j, _ in n.morphisms)
    two_free = Gaf(1, 2, 2, 0, rho=(0, 0))
    assert sum(1 for i, _, _ in n.morphisms if n.objects[i] == two_free) == 2
    assert len(n.morphisms) == len(n.objects) + 1


def test_nerve_associative_and_unital():
    n = nerve_export(0, 0, 2, 2)
    src = [i for i, _, _ in n.morphisms]
    tgt = [j for _, j, _ in n.morphisms]
    for m in range(len(n.morphisms)):
        assert n.compose[(n.identities[src[m]], m)] == m
        assert n.compose[(m, n.identities[tgt[m]])] == m
    for (m1, m2), m12 in n.compose.items():
        for m3 in range(len(n.morphisms)):
            if src[m3] == tgt[m2]:
                assert n.compose[(m12, m3)] == n.compose[(m1, n.compose[(m2, m3)])]


def test_nerve_budget():
    with pytest.raises(BudgetExceeded):
        nerve_export(0, 0, 2, 2, limit=5)


def test_expansions_examples():
    (seg, f), = expansions(POINT)
    assert seg == canonical_form(path(1))
    forms = {C for C, _ in expansions(LOOP)}
    lollipop = from_edges(0, 0, 2, (), [(0, 1), (1, 1)])
    assert canonical_form(TWO_CYCLE) in forms and canonical_form(lollipop) in forms
    (leaf, g), = expansions(Gaf(1, 0, 0, 0))
    assert leaf == canonical_form(path(1, a=1))


@pytest.mark.parametrize("G", [POINT, LOOP, THETA, DUMBBELL, path(2, a=1), from_edges(1, 2, 1, (0, 1), [(0, 1)])])
def test_expansion_morphisms(G):
    target = canonical_form(G)
    for C, f in expansions(G):
        assert is_valid_morphism(f) and grade(f) == 1
        assert f.source == C and f.target == G
        assert canonical_form(collapse_edges(C, collapsed_edges(f))[0]) == target


def test_zigzag_examples():
    path_ = zigzag_connected(cycle(3), LOOP, 3)
    assert [m.kind for m in path_] == ["collapse", "collapse"]
    assert path_[-1].result == LOOP
    for budget in (1, 3, 5):
        assert zigzag_connected(LOOP, POINT, budget) is None
    assert zigzag_connected(DUMBBELL, THETA, 4) is not None
    assert zigzag_connected(LOOP, LOOP) == []


def test_zigzag_respects_budget():
    # dumbbell and theta cannot meet without passing through a 2-edge rose; budget 2 forbids them
    assert zigzag_connected(DUMBBELL, THETA, 2) is None


def test_zigzag_boundary_mismatch():
    with pytest.raises(PreconditionViolated):
        zigzag_connected(Gaf(1, 0, 0, 0), POINT)


def test_zigzag_sound():
    objs = enumerate_gafs(1, 0, 2, 2)
    for G, H in itertools.combinations(objs, 2):
        if zigzag_connected(G, H) is not None:
            assert realize_nf(G) == realize_nf(H)

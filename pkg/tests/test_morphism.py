import itertools

import hypothesis
import hypothesis.strategies as st
import pytest

from oracles import naive_morphisms
from shapes import LOOP, POINT, TWO_CYCLE, cycle, from_edges, gafs, path
from graphcob.catalog import enumerate_gafs
from graphcob.errors import (
    HalfEdgeNotSingleton,
    IndexOutOfRange,
    NotAForest,
    NotEquivariant,
    PreimageNotTree,
    PreimageWrongBasing,
    RestrictionViolated,
    SourceTargetMismatch,
    TwoAttachingVerticesInTree,
)
from graphcob.gaf import Gaf, edges
from graphcob.generators import gen_beta, gen_G_beta1, gen_G_beta2
from graphcob.iso import is_isomorphic
from graphcob.morphism import (
    GafMorphism,
    collapse_edges,
    collapsed_edges,
    compose_v,
    identity_morphism,
    inverse,
    is_isomorphism,
    is_valid_morphism,
    morphisms_between,
    validate_morphism,
)


def test_beta_is_valid():
    f = gen_beta()
    assert f.source == gen_G_beta1() and f.target == gen_G_beta2()
    assert collapsed_edges(f) == [(0, 1)]


@hypothesis.given(gafs())
def test_identity_valid(G):
    validate_morphism(identity_morphism(G))


def test_loop_to_point_not_a_tree():
    f = GafMorphism(LOOP, POINT, (), (), (0,), (0, 0))
    with pytest.raises(PreimageNotTree) as err:
        validate_morphism(f)
    assert err.value.detail["index"] == 0


def test_restriction_violated():
    G = Gaf(2, 0, 0, 0)
    with pytest.raises(RestrictionViolated):
        validate_morphism(GafMorphism(G, G, (0, 2), (), (), ()))


def test_attaching_vertices_may_merge():
    # two based points over one attaching vertex: one based tree per preimage point
    G, T = Gaf(2, 0, 0, 0), Gaf(1, 0, 0, 0)
    assert is_valid_morphism(GafMorphism(G, T, (0, 0), (), (), ()))


def test_range_checked():
    with pytest.raises(IndexOutOfRange):
        validate_morphism(GafMorphism(POINT, POINT, (), (), (1,), ()))


def test_not_equivariant_sigma():
    # both endpoints to v0 but the half-edges kept apart
    seg = path(1)
    f = GafMorphism(seg, seg, (), (), (0, 0), (2, 3))
    with pytest.raises(NotEquivariant):
        validate_morphism(f)


def test_not_equivariant_rho():
    src = Gaf(0, 1, 2, 0, rho=(0,))
    tgt = Gaf(0, 1, 2, 0, rho=(0,))
    with pytest.raises(NotEquivariant):
        validate_morphism(GafMorphism(src, tgt, (), (0,), (1, 0), ()))


def test_half_edge_not_singleton():
    # two parallel edges both mapped onto the single edge of a segment
    G = from_edges(0, 0, 2, (), [(0, 1), (0, 1)])
    seg = path(1)
    f = GafMorphism(G, seg, (), (), (0, 1), (2, 3, 2, 3))
    with pytest.raises(HalfEdgeNotSingleton):
        validate_morphism(f)


def test_half_edge_missing_preimage():
    seg = path(1)
    two = Gaf(0, 0, 2, 0)
    f = GafMorphism(two, seg, (), (), (0, 1), ())
    with pytest.raises(HalfEdgeNotSingleton):
        validate_morphism(f)


def test_attaching_preimage_needs_based_trees():
    # an inner vertex with no edges mapped onto an attaching vertex
    G = Gaf(1, 0, 1, 0)
    T = Gaf(1, 0, 0, 0)
    with pytest.raises(PreimageWrongBasing):
        validate_morphism(GafMorphism(G, T, (0,), (), (0,), ()))


def test_inner_preimage_must_be_nonempty_tree():
    T = Gaf(0, 0, 1, 0)
    with pytest.raises(PreimageNotTree):
        validate_morphism(GafMorphism(Gaf(0, 0, 0, 0), T, (), (), (), ()))


def test_compose_identity_and_mismatch():
    f = gen_beta()
    assert compose_v(identity_morphism(f.target), f) == f
    assert compose_v(f, identity_morphism(f.source)) == f
    with pytest.raises(SourceTargetMismatch):
        compose_v(f, f)


def test_compose_collapse_then_identity():
    _, f = collapse_edges(TWO_CYCLE, [(0, 1)])
    assert compose_v(identity_morphism(LOOP), f) == f


def test_two_collapses_on_path_compose_to_full_collapse():
    P = path(2)
    mid, f = collapse_edges(P, [(0, 1)])
    end, g = collapse_edges(mid, [edges(mid)[0]])
    full_target, full = collapse_edges(P, edges(P))
    assert end == full_target == POINT
    assert compose_v(g, f) == full


def test_collapse_beta_edge():
    T, f = collapse_edges(gen_G_beta1(), [0])
    assert T == gen_G_beta2()
    assert f == gen_beta()


def test_collapse_nothing_is_identity():
    T, f = collapse_edges(TWO_CYCLE, [])
    assert T == TWO_CYCLE and f == identity_morphism(TWO_CYCLE)


def test_collapse_cycle_rejected():
    with pytest.raises(NotAForest):
        collapse_edges(TWO_CYCLE, edges(TWO_CYCLE))


def test_collapse_two_attaching_rejected():
    with pytest.raises(TwoAttachingVerticesInTree):
        collapse_edges(path(1, a=2), [0])


def test_morphisms_between_counts():
    # both orientations of the surviving edge are valid tree collapses
    assert len(morphisms_between(TWO_CYCLE, LOOP)) == 4
    assert len({tuple(collapsed_edges(f)) for f in morphisms_between(TWO_CYCLE, LOOP)}) == 2
    assert len(morphisms_between(LOOP, LOOP)) == 2
    assert morphisms_between(LOOP, POINT) == []


def _small_pairs():
    objs = [G for a, b in ((0, 0), (1, 0), (0, 1), (1, 1)) for G in enumerate_gafs(a, b, 2, 2)]
    for G, T in itertools.product(objs, repeat=2):
        if (G.a_size, G.b_size) == (T.a_size, T.b_size) and T.n_edges <= G.n_edges and T.v_size <= G.v_size:
            if G.h_size <= 4 and (T.n_vertices + T.h_size) ** G.h_size * T.n_vertices ** G.v_size <= 3000:
                yield G, T


def test_morphisms_between_matches_naive_oracle():
    checked = 0
    for G, T in _small_pairs():
        assert morphisms_between(G, T) == sorted(naive_morphisms(G, T), key=lambda f: (f.map_v, f.map_h))
        checked += 1
    assert checked > 100


@hypothesis.given(gafs(), st.data())
def test_collapse_forest_is_valid(G, data):
    E = edges(G)
    X = data.draw(st.lists(st.sampled_from(E), unique=True) if E else st.just([]))
    try:
        T, f = collapse_edges(G, X)
    except (NotAForest, TwoAttachingVerticesInTree):
        return
    assert is_valid_morphism(f)
    assert sorted(collapsed_edges(f)) == sorted(X)
    assert T.n_edges == G.n_edges - len(X)


@hypothesis.given(gafs(max_e=3), st.data())
def test_composition_closure(G, data):
    E = edges(G)
    if not E:
        return
    X = data.draw(st.lists(st.sampled_from(E), unique=True))
    try:
        mid, f = collapse_edges(G, X)
    except (NotAForest, TwoAttachingVerticesInTree):
        return
    for g in morphisms_between(mid, mid)[:2] + [identity_morphism(mid)]:
        h = compose_v(g, f)
        assert is_valid_morphism(h)
        assert len(collapsed_edges(h)) == len(collapsed_edges(f))


def test_isomorphism_inverse():
    C = cycle(3)
    for f in morphisms_between(C, C):
        assert is_isomorphism(f)
        assert compose_v(inverse(f), f) == identity_morphism(C)
        assert compose_v(f, inverse(f)) == identity_morphism(C)
    assert len(morphisms_between(C, C)) == 6
    assert not is_isomorphism(gen_beta())


def test_isomorphism_survives_relabeling():
    G = Gaf(0, 0, 1, 2, sigma=(0, 0), upsilon=(1, 0))
    assert is_isomorphic(G, LOOP) is not None


def test_collapse_bad_edge():
    with pytest.raises(IndexOutOfRange):
        collapse_edges(LOOP, [1])
    with pytest.raises(IndexOutOfRange):
        collapse_edges(TWO_CYCLE, [(0, 2)])

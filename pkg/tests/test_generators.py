import time

import pytest

from graphcob.errors import InvolutionHasFixedPoint
from graphcob.gaf import Gaf, validate_gaf
from graphcob.generators import (
    GENERATORS,
    gen_beta,
    gen_fe,
    gen_ft,
    gen_G_beta1,
    gen_G_tbeta1,
    gen_G_tbeta2,
    gen_tbeta,
    is_c2_equivariant,
    swap_fe,
    tbeta1_second_formula,
    tbeta1_swap,
    tbeta2_swap,
    verify_graphlike_axioms,
)
from graphcob.grading import ce, grade
from graphcob.iso import is_isomorphic
from graphcob.morphism import (
    GafMorphism,
    collapse_edges,
    compose_v,
    identity_morphism,
    validate_morphism,
)


def test_constants():
    assert gen_ft() == Gaf(0, 1, 1, 0, rho=(0,))
    assert gen_fe() == Gaf(2, 0, 0, 2, sigma=(0, 1), upsilon=(1, 0))
    assert gen_G_tbeta2() == Gaf(0, 2, 1, 0, rho=(0, 0))
    assert set(GENERATORS) == {"ft", "fe", "G_beta1", "G_beta2", "G_tbeta1", "G_tbeta2", "mu"}


def test_beta():
    f = gen_beta()
    assert grade(f) == 1 and ce(f) == [(0, 1)]
    assert compose_v(f, identity_morphism(gen_G_beta1())) == f


def test_tbeta_endpoints():
    f = gen_tbeta()
    assert is_isomorphic(f.source, gen_G_tbeta1()) is not None
    assert is_isomorphic(f.target, gen_G_tbeta2()) is not None
    assert f == collapse_edges(gen_G_tbeta1(), [0])[1]


def test_axioms_all_pass_quickly():
    start = time.perf_counter()
    report = verify_graphlike_axioms()
    elapsed = time.perf_counter() - start
    assert [r["axiom"] for r in report] == [
        "beta_source_is_composite",
        "tbeta1_formulas_isomorphic",
        "fe_swap_involution",
        "tbeta_c2_equivariant",
        "reflected_snake_collapses",
    ]
    assert all(r["pass"] for r in report)
    assert elapsed < 1.0


def test_mutated_e_rejected_upstream():
    with pytest.raises(InvolutionHasFixedPoint):
        validate_gaf(a=2, b=0, v=0, h=2, sigma=[0, 1], upsilon=[0, 1])


def test_swaps_are_involutions():
    for s in (swap_fe(), tbeta1_swap(), tbeta2_swap()):
        assert s.source == s.target
        assert s != identity_morphism(s.source)
        assert compose_v(s, s) == identity_morphism(s.source)
    assert tbeta1_swap().source == tbeta1_second_formula()


def _tbeta_on_second_formula():
    phi = is_isomorphic(tbeta1_second_formula(), gen_G_tbeta1())
    return compose_v(gen_tbeta(), phi)


def test_tbeta_equivariant():
    assert is_c2_equivariant(_tbeta_on_second_formula(), tbeta1_swap(), tbeta2_swap())


def test_equivariance_fails_with_wrong_target_swap():
    tb = _tbeta_on_second_formula()
    assert not is_c2_equivariant(tb, tbeta1_swap(), identity_morphism(tb.target))


def test_equivariance_needs_automorphisms():
    tb = _tbeta_on_second_formula()
    # the trivial action is equivariant; a non-automorphism is refused
    assert is_c2_equivariant(tb, identity_morphism(tb.source), identity_morphism(tb.target))
    assert not is_c2_equivariant(tb, tb, tbeta2_swap())


def _marked_path(k):
    """Path on k+1 inner vertices with both ends marked (marking 0 at the left end)."""
    sigma, upsilon = [], []
    for i in range(k):
        sigma += [i, i + 1]
        upsilon += [2 * i + 1, 2 * i]
    return Gaf(0, 2, k + 1, 2 * k, rho=(0, k), sigma=sigma, upsilon=upsilon)


def _reversal(k):
    G = _marked_path(k)
    nv = G.n_vertices
    map_h = [0] * G.h_size
    for h in range(G.h_size):
        # half-edge h sits at vertex sigma[h]; its mirror image is 2k-1-h
        map_h[h] = nv + (2 * k - 1 - h)
    return validate_morphism(GafMorphism(G, G, (), (1, 0), [k - i for i in range(k + 1)], map_h))


def test_orientation_broken_collapse_not_equivariant():
    # collapsing only one end of a symmetric path does not commute with the reversal
    P2, P1 = _marked_path(2), _marked_path(1)
    _, left = collapse_edges(P2, [0])
    left = compose_v(is_isomorphic(left.target, P1), left)
    assert left.target == P1
    assert not is_c2_equivariant(left, _reversal(2), _reversal(1))
    # collapsing both edges onto a point does commute
    _, both = collapse_edges(P2, [0, 1])
    point = both.target
    swap = validate_morphism(GafMorphism(point, point, (), (1, 0), (0,), ()))
    assert is_c2_equivariant(both, _reversal(2), swap)

"""The canonical generators of the graph cobordism 2-category and their identities.

The constants below are the edge-free gafs ``I(phi)``, the cap ``t`` (one
inner vertex, marked once, attached to nothing), the cup ``e`` (one edge
between two attaching vertices), the segment/straightening 2-morphism ``beta``
and its closed variant ``tbeta``. :func:`verify_graphlike_axioms` rebuilds
them through horizontal composition and checks every identity they are
supposed to satisfy.
"""

from graphcob.gaf import FinMap, Gaf
from graphcob.iso import automorphisms, is_isomorphic
from graphcob.morphism import (
    GafMorphism,
    collapse_edges,
    collapsed_edges,
    compose_v,
    identity_morphism,
    is_isomorphism,
    is_valid_morphism,
    morphisms_between,
    validate_morphism,
)
from graphcob.monoidal import compose_h, compose_h_m, embed_finmap, identity_gaf, tensor, tensor_all, tensor_m

__all__ = [
    "mu",
    "gen_ft",
    "gen_fe",
    "gen_G_beta1",
    "gen_G_beta2",
    "gen_G_tbeta1",
    "gen_G_tbeta2",
    "gen_beta",
    "gen_tbeta",
    "cap",
    "beta1_composite",
    "tbeta1_first_formula",
    "tbeta1_second_formula",
    "reflected_snake",
    "swap_fe",
    "tbeta1_swap",
    "tbeta2_swap",
    "is_c2_equivariant",
    "verify_graphlike_axioms",
    "GENERATORS",
]


def mu():
    """``I(mu)`` for the unique map ``2 -> 1``."""
    return embed_finmap(FinMap(2, 1, (0, 0)))


def gen_ft():
    return Gaf(0, 1, 1, 0, rho=(0,))


def gen_fe():
    return Gaf(2, 0, 0, 2, sigma=(0, 1), upsilon=(1, 0))


def gen_G_beta1():
    # h0 at the attaching vertex, h1 at the marked inner vertex
    return Gaf(1, 1, 1, 2, rho=(1,), sigma=(0, 1), upsilon=(1, 0))


def gen_G_beta2():
    return identity_gaf(1)


def gen_G_tbeta1():
    return Gaf(0, 2, 2, 2, rho=(0, 1), sigma=(0, 1), upsilon=(1, 0))


def gen_G_tbeta2():
    return Gaf(0, 2, 1, 0, rho=(0, 0))


def gen_beta():
    """The contraction of the segment onto the marked attaching vertex."""
    return validate_morphism(GafMorphism(gen_G_beta1(), gen_G_beta2(), (0,), (0,), (0,), (0, 0)))


def cap():
    """``t . I(mu)``: a twice-marked inner vertex."""
    return compose_h(gen_ft(), mu())


def beta1_composite():
    """``((t . I(mu)) + Id_1) . (Id_1 + e)``."""
    return compose_h(tensor(cap(), identity_gaf(1)), tensor(identity_gaf(1), gen_fe()))


def reflected_snake():
    """``(Id_1 + c) . (e + Id_1)`` with ``c = t . I(mu)``."""
    return compose_h(tensor(identity_gaf(1), cap()), tensor(gen_fe(), identity_gaf(1)))


def tbeta1_first_formula():
    """``t . I(mu) . (G_beta1 + Id_1)``."""
    return compose_h(cap(), tensor(gen_G_beta1(), identity_gaf(1)))


def tbeta1_second_formula():
    """``(t + t) . (I(mu) + I(mu)) . (Id_1 + e + Id_1)``, bracketed on the left."""
    return compose_h(
        compose_h(tensor(gen_ft(), gen_ft()), tensor(mu(), mu())),
        tensor_all(identity_gaf(1), gen_fe(), identity_gaf(1)),
    )


def _tbeta_whiskered():
    """``t . I(mu) . (beta + Id)`` as built by horizontal composition."""
    return compose_h_m(
        identity_morphism(cap()),
        tensor_m(gen_beta(), identity_morphism(identity_gaf(1))),
    )


def _transport(f, source, target):
    """Conjugate ``f`` by isomorphisms ``source ~ f.source`` and ``f.target ~ target``."""
    phi = is_isomorphic(source, f.source)
    psi = is_isomorphic(f.target, target)
    if phi is None or psi is None:
        raise ValueError("transport needs isomorphic endpoints")
    return compose_v(psi, compose_v(f, phi))


def gen_tbeta():
    """The contraction of the closed segment onto a point.

    Built by whiskering ``beta``, transported to the canonical endpoints and
    checked against the direct collapse of the segment.
    """
    f = _transport(_tbeta_whiskered(), gen_G_tbeta1(), gen_G_tbeta2())
    _, direct = collapse_edges(gen_G_tbeta1(), [0])
    if f != direct:
        raise AssertionError("whiskered tbeta differs from the direct collapse")
    return f


GENERATORS = {
    "ft": gen_ft,
    "fe": gen_fe,
    "G_beta1": gen_G_beta1,
    "G_beta2": gen_G_beta2,
    "G_tbeta1": gen_G_tbeta1,
    "G_tbeta2": gen_G_tbeta2,
    "mu": mu,
}


def swap_fe():
    """The non-trivial involution of ``e`` swapping both attaching vertices and half-edges."""
    e = gen_fe()
    return validate_morphism(GafMorphism(e, e, (1, 0), (), (), (3, 2)))


def _swap_edge_free(G, perm_a, perm_b):
    """Automorphism of an edge-free gaf given permutations of ``A`` and ``B`` (and identity on ``V``)."""
    return validate_morphism(
        GafMorphism(G, G, perm_a, perm_b, [G.a_size + i for i in range(G.v_size)], ())
    )


def _swap_tt():
    # t + t: swap the two markings and the two inner vertices
    G = tensor(gen_ft(), gen_ft())
    return validate_morphism(GafMorphism(G, G, (), (1, 0), (1, 0), ()))


def _swap_mumu():
    # I(mu) + I(mu) with the action on 4 exchanging 1-4 and 2-3
    return _swap_edge_free(tensor(mu(), mu()), (1, 0), (3, 2, 1, 0))


def _swap_id_e_id():
    G = tensor_all(identity_gaf(1), gen_fe(), identity_gaf(1))
    nv = G.n_vertices
    return validate_morphism(GafMorphism(G, G, (3, 2, 1, 0), (1, 0), (), (nv + 1, nv + 0)))


def tbeta1_swap():
    """C2 action on the second formula for ``G_tbeta1``, assembled from its factors."""
    return compose_h_m(compose_h_m(_swap_tt(), _swap_mumu()), _swap_id_e_id())


def tbeta2_swap():
    """C2 action on ``t . I(mu)``: swap the markings, fix the vertex."""
    return compose_h_m(identity_morphism(gen_ft()), _swap_edge_free(mu(), (0,), (1, 0)))


def is_c2_equivariant(f, source_swap, target_swap):
    """Whether ``target_swap . f == f . source_swap`` as literal morphisms.

    Both swaps must be involutive automorphisms of the source and target of ``f``.
    """
    for s, G in ((source_swap, f.source), (target_swap, f.target)):
        if s.source != G or s.target != G or not is_isomorphism(s):
            return False
        if compose_v(s, s) != identity_morphism(G):
            return False
    return compose_v(target_swap, f) == compose_v(f, source_swap)


def _entry(name, ok, **witness):
    return {"axiom": name, "pass": bool(ok), "witness": witness}


def verify_graphlike_axioms():
    """Check the identities satisfied by the generators; one report entry per axiom."""
    report = []

    # (i) the source of beta is the S-shaped composite
    iso = is_isomorphic(beta1_composite(), gen_G_beta1())
    report.append(
        _entry("beta_source_is_composite", iso is not None and is_valid_morphism(gen_beta()),
               composite=beta1_composite(), iso=iso)
    )

    # (ii) the two formulas for G_tbeta1 agree
    first, second = tbeta1_first_formula(), tbeta1_second_formula()
    iso12 = is_isomorphic(first, second)
    report.append(
        _entry("tbeta1_formulas_isomorphic",
               iso12 is not None and is_isomorphic(first, gen_G_tbeta1()) is not None,
               first=first, second=second, iso=iso12)
    )

    # (iii) the swap on e is an automorphism of order 2
    s = swap_fe()
    auts = automorphisms(gen_fe(), fix_boundary=False)
    ok = (s in auts and len(auts) == 2 and s != identity_morphism(gen_fe())
          and compose_v(s, s) == identity_morphism(gen_fe()))
    report.append(_entry("fe_swap_involution", ok, swap=s, group_order=len(auts)))

    # (iv) tbeta commutes with the C2 actions (literal equality)
    tb = _transport(gen_tbeta(), second, gen_G_tbeta2())
    src_swap, tgt_swap = tbeta1_swap(), tbeta2_swap()
    if src_swap.source != second or tgt_swap.source != gen_G_tbeta2():
        ok = False
    else:
        ok = is_c2_equivariant(tb, src_swap, tgt_swap)
    report.append(_entry("tbeta_c2_equivariant", ok, tbeta=tb, source_swap=src_swap, target_swap=tgt_swap))

    # (v) the other snake collapses onto the identity
    snake = reflected_snake()
    collapses = morphisms_between(snake, identity_gaf(1))
    ok = len(collapses) == 1 and all(len(collapsed_edges(f)) == 1 for f in collapses)
    report.append(_entry("reflected_snake_collapses", ok, snake=snake, collapses=collapses))
    return report


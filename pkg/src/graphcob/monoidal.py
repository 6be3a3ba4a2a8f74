"""Horizontal composition, disjoint union and edge-free gafs.

``compose_h(G, G2)`` glues ``G2 in Gr(A'', A')`` onto ``G in Gr(A', A)``
along ``A'`` (the markings of ``G`` are the attaching vertices of ``G2``). The
result has attaching vertices ``A``, markings ``A''``, inner vertices ``V``
then ``V2`` and half-edges ``H`` then ``H2``. Every vertex of ``G2`` that lies
in ``A'`` is pushed through ``rho`` of ``G``.
"""

from graphcob.errors import BoundaryMismatch
from graphcob.gaf import FinMap, Gaf
from graphcob.morphism import GafMorphism, validate_morphism

__all__ = [
    "tensor",
    "tensor_m",
    "tensor_all",
    "compose_h",
    "compose_h_m",
    "embed_finmap",
    "identity_gaf",
]


def _tensor_vertex_maps(G, G2):
    a, a2, v = G.a_size, G2.a_size, G.v_size

    def left(x):
        return x if x < a else a2 + x

    def right(y):
        return a + y if y < a2 else a + v + y

    return left, right


def tensor(G, G2):
    """Disjoint union, blockwise: ``G`` first, then ``G2`` within each sort."""
    left, right = _tensor_vertex_maps(G, G2)
    h = G.h_size
    return Gaf(
        G.a_size + G2.a_size,
        G.b_size + G2.b_size,
        G.v_size + G2.v_size,
        G.h_size + G2.h_size,
        [left(x) for x in G.rho] + [right(y) for y in G2.rho],
        [left(x) for x in G.sigma] + [right(y) for y in G2.sigma],
        list(G.upsilon) + [h + k for k in G2.upsilon],
    )


def tensor_all(*gafs):
    """Left-nested disjoint union of several gafs; the empty gaf for no arguments."""
    out = Gaf(0, 0, 0, 0)
    for G in gafs:
        out = tensor(out, G)
    return out


def tensor_m(f, f2):
    """Disjoint union of two morphisms."""
    S, T = tensor(f.source, f2.source), tensor(f.target, f2.target)
    tleft, tright = _tensor_vertex_maps(f.target, f2.target)
    nv_t = T.n_vertices
    nv_t1, nv_t2 = f.target.n_vertices, f2.target.n_vertices
    h_t1 = f.target.h_size

    def img_left(y):
        return tleft(y) if y < nv_t1 else nv_t + (y - nv_t1)

    def img_right(y):
        return tright(y) if y < nv_t2 else nv_t + h_t1 + (y - nv_t2)

    a1 = f.target.a_size
    return validate_morphism(
        GafMorphism(
            S,
            T,
            list(f.map_a) + [a1 + y for y in f2.map_a],
            list(f.map_b) + [f.target.b_size + y for y in f2.map_b],
            [tleft(y) for y in f.map_v] + [tright(y) for y in f2.map_v],
            [img_left(y) for y in f.map_h] + [img_right(y) for y in f2.map_h],
        )
    )


def compose_h(G, G2):
    """Glue ``G2 in Gr(A'', A')`` onto ``G in Gr(A', A)``; the result lies in ``Gr(A'', A)``."""
    if G2.a_size != G.b_size:
        raise BoundaryMismatch(
            f"cannot glue: {G2.a_size} attaching vertices against {G.b_size} markings",
            left=G.b_size,
            right=G2.a_size,
        )
    a, v = G.a_size, G.v_size
    a2 = G2.a_size

    def push(y):
        # vertex of G2 -> vertex of the composite: A' goes through rho, V2 is shifted
        return G.rho[y] if y < a2 else a + v + (y - a2)

    h = G.h_size
    return Gaf(
        a,
        G2.b_size,
        v + G2.v_size,
        h + G2.h_size,
        [push(y) for y in G2.rho],
        list(G.sigma) + [push(y) for y in G2.sigma],
        list(G.upsilon) + [h + k for k in G2.upsilon],
    )


def compose_h_m(f, f2):
    """Horizontal composite of ``f: G -> G1`` and ``f2: G2 -> G21``.

    Images of ``f2`` landing in the shared set are redirected through the
    marking map of ``G1``. The two morphisms must agree on the shared set
    (``f.map_b == f2.map_a``); inside ``Gr`` both are identities.
    """
    G, G1 = f.source, f.target
    G2, G21 = f2.source, f2.target
    if G2.a_size != G.b_size or G21.a_size != G1.b_size:
        raise BoundaryMismatch("sources or targets are not composable")
    if tuple(f.map_b) != tuple(f2.map_a):
        raise BoundaryMismatch("morphisms disagree on the shared boundary")
    S = compose_h(G, G2)
    T = compose_h(G1, G21)
    a, v1 = G1.a_size, G1.v_size
    a21 = G21.a_size
    nv_T = T.n_vertices
    nv_1, nv_21 = G1.n_vertices, G21.n_vertices
    h1 = G1.h_size

    def from_f(y):
        return y if y < nv_1 else nv_T + (y - nv_1)

    def from_f2(y):
        if y < a21:
            return G1.rho[y]
        if y < nv_21:
            return a + v1 + (y - a21)
        return nv_T + h1 + (y - nv_21)

    return validate_morphism(
        GafMorphism(
            S,
            T,
            f.map_a,
            f2.map_b,
            [from_f(y) for y in f.map_v] + [from_f2(y) for y in f2.map_v],
            [from_f(y) for y in f.map_h] + [from_f2(y) for y in f2.map_h],
        )
    )


def embed_finmap(phi):
    """The edge-free gaf with ``rho = phi`` for a :class:`FinMap` ``phi: B -> A``."""
    if not isinstance(phi, FinMap):
        raise TypeError("embed_finmap expects a FinMap")
    return Gaf(phi.codomain_size, phi.domain_size, 0, 0, phi.values, (), ())


def identity_gaf(n):
    """The identity 1-morphism of the finite set ``range(n)``."""
    return embed_finmap(FinMap.identity(n))

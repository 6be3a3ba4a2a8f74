"""Graphs attached to finite sets (gafs).

A gaf is the tuple ``(A, B, V, H, rho, sigma, upsilon)``: attaching vertices
``A``, markings ``B``, inner vertices ``V`` and half-edges ``H``, together with
the marking map ``rho: B -> A+V``, the attachment map ``sigma: H -> A+V`` and a
fixed-point free involution ``upsilon`` on ``H`` pairing half-edges into edges.

Finite sets are ranges ``0..n-1``. Vertices live in a single flattened range
with the attaching vertices first: index ``x < a_size`` is the attaching vertex
``x``, index ``a_size + i`` is the inner vertex ``i``.
"""

import operator
from dataclasses import dataclass, field

from graphcob.errors import (
    IndexOutOfRange,
    InvolutionHasFixedPoint,
    InvolutionNotSelfInverse,
    NotClosed,
)

__all__ = [
    "FinMap",
    "Gaf",
    "RealizationInvariants",
    "validate_gaf",
    "empty_gaf",
    "edges",
    "edge_of",
    "components",
    "realization_invariants",
    "is_tree",
    "is_based_tree",
    "is_nonbased_tree",
    "valence",
    "sub_gaf",
]


@dataclass(frozen=True)
class FinMap:
    """A map of finite sets ``range(domain_size) -> range(codomain_size)``."""

    domain_size: int
    codomain_size: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.domain_size:
            raise IndexOutOfRange(
                f"FinMap has {len(self.values)} values for a domain of size {self.domain_size}",
                index=len(self.values),
            )
        for i, y in enumerate(self.values):
            if not 0 <= y < self.codomain_size:
                raise IndexOutOfRange(f"FinMap value {y} at {i} outside codomain", index=i)

    def __call__(self, i):
        return self.values[i]

    def __len__(self):
        return self.domain_size

    def then(self, other):
        """Composite ``other . self``."""
        if other.domain_size != self.codomain_size:
            raise ValueError("FinMap composition: codomain/domain mismatch")
        return FinMap(self.domain_size, other.codomain_size, [other.values[y] for y in self.values])

    @classmethod
    def identity(cls, n):
        return cls(n, n, range(n))


class _UnionFind:
    # list-backed; the graphs here have a handful of vertices and this sits on every hot path
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True


@dataclass(frozen=True)
class Gaf:
    """A marked graph attached to a finite set.

    Instances are immutable and always valid: the constructor checks that
    ``upsilon`` is a fixed-point free involution and that ``rho`` and
    ``sigma`` land in the vertex range ``A+V``.
    """

    a_size: int
    b_size: int
    v_size: int
    h_size: int
    rho: tuple = ()
    sigma: tuple = ()
    upsilon: tuple = ()
    _edges: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name in ("rho", "sigma", "upsilon"):
            object.__setattr__(self, name, tuple(map(int, getattr(self, name))))
        for name in ("a_size", "b_size", "v_size", "h_size"):
            n = getattr(self, name)
            if n < 0:
                raise IndexOutOfRange(f"{name} must be non-negative", map=name, index=n)
        nvert = self.a_size + self.v_size
        for name, length, bound in (
            ("rho", self.b_size, nvert),
            ("sigma", self.h_size, nvert),
            ("upsilon", self.h_size, self.h_size),
        ):
            values = getattr(self, name)
            if len(values) != length:
                raise IndexOutOfRange(
                    f"{name} has length {len(values)}, expected {length}", map=name, index=len(values)
                )
            if values and (min(values) < 0 or max(values) >= bound):
                i = next(i for i, y in enumerate(values) if not 0 <= y < bound)
                raise IndexOutOfRange(f"{name}[{i}] = {values[i]} out of range", map=name, index=i)
        ups = self.upsilon
        if [ups[k] for k in ups] != list(range(len(ups))) or any(map(operator.eq, ups, range(len(ups)))):
            for h, k in enumerate(ups):
                if k == h:
                    raise InvolutionHasFixedPoint(f"upsilon fixes half-edge {h}", map="upsilon", index=h)
                if ups[k] != h:
                    raise InvolutionNotSelfInverse(
                        f"upsilon(upsilon({h})) = {ups[k]} != {h}", map="upsilon", index=h
                    )
        object.__setattr__(
            self, "_edges", tuple((h, k) for h, k in enumerate(ups) if h < k)
        )

    @property
    def n_vertices(self):
        """Size of ``A+V``."""
        return self.a_size + self.v_size

    @property
    def n_edges(self):
        return self.h_size // 2

    def is_attaching(self, x):
        return x < self.a_size

    def inner(self, i):
        """Flattened index of inner vertex ``i``."""
        return self.a_size + i

    def vertex_label(self, x):
        return f"a{x}" if x < self.a_size else f"v{x - self.a_size}"

    def __repr__(self):
        return (
            f"Gaf(a={self.a_size}, b={self.b_size}, v={self.v_size}, h={self.h_size}, "
            f"rho={list(self.rho)}, sigma={list(self.sigma)}, upsilon={list(self.upsilon)})"
        )


def validate_gaf(a=0, b=0, v=0, h=0, rho=(), sigma=(), upsilon=()):
    """Build a :class:`Gaf` from raw fields, raising on any violated invariant."""
    return Gaf(a, b, v, h, rho, sigma, upsilon)


def empty_gaf():
    """The empty gaf, unit of the disjoint union."""
    return Gaf(0, 0, 0, 0)


def edges(G):
    """Edges of ``G`` as pairs ``(h, upsilon(h))`` with ``h`` the smaller half-edge.

    Sorted by the smaller half-edge; this order is the canonical edge indexing
    used everywhere (colorings, markings, edge-set arguments).
    """
    return list(G._edges)


def edge_of(G, h):
    """The edge containing half-edge ``h``."""
    k = G.upsilon[h]
    return (h, k) if h < k else (k, h)


def components(G):
    """Connected components of the realization, as ``(vertices, half_edges)`` pairs.

    Components are ordered by their smallest vertex index; vertices and
    half-edges inside a component are sorted.
    """
    n = G.n_vertices
    uf = _UnionFind(n)
    sigma = G.sigma
    for h, k in G._edges:
        uf.union(sigma[h], sigma[k])
    comp_of_root = {}
    out = []
    for x in range(n):
        r = uf.find(x)
        if r not in comp_of_root:
            comp_of_root[r] = len(out)
            out.append(([], []))
        out[comp_of_root[r]][0].append(x)
    for h in range(G.h_size):
        out[comp_of_root[uf.find(sigma[h])]][1].append(h)
    return [(tuple(vs), tuple(hs)) for vs, hs in out]


@dataclass(frozen=True)
class RealizationInvariants:
    """Homotopy invariants of the 1-dimensional cell complex of a gaf."""

    component_of: FinMap
    num_components: int
    euler_char_per_component: tuple
    rank_per_component: tuple


def realization_invariants(G):
    comps = components(G)
    comp_of = [0] * G.n_vertices
    chis = []
    for k, (vs, hs) in enumerate(comps):
        for x in vs:
            comp_of[x] = k
        chis.append(len(vs) - len(hs) // 2)
    return RealizationInvariants(
        component_of=FinMap(G.n_vertices, len(comps), comp_of),
        num_components=len(comps),
        euler_char_per_component=tuple(chis),
        rank_per_component=tuple(1 - c for c in chis),
    )


def is_tree(G):
    """True when the realization is contractible (non-empty, connected, rank 0)."""
    if G.n_vertices == 0:
        return False
    # connected with |E| = |vertices| - 1 is exactly a tree
    return G.n_edges == G.n_vertices - 1 and len(components(G)) == 1


def is_based_tree(G):
    return G.a_size == 1 and is_tree(G)


def is_nonbased_tree(G):
    return G.a_size == 0 and is_tree(G)


def valence(G, vertex):
    """Number of half-edges attached to ``vertex`` (a loop counts twice)."""
    if not 0 <= vertex < G.n_vertices:
        raise IndexOutOfRange(f"vertex {vertex} out of range", index=vertex)
    return sum(1 for x in G.sigma if x == vertex)


def sub_gaf(G, attaching, markings, inner, half_edges):
    """Restrict ``G`` to the selected elements.

    ``attaching``, ``markings``, ``inner`` and ``half_edges`` are subsets of
    ``A``, ``B``, ``V`` (inner indices, not flattened) and ``H``. The result is
    relabeled order-preservingly. Raises :class:`NotClosed` when one of the
    structure maps does not restrict.
    """
    A = sorted(set(attaching))
    B = sorted(set(markings))
    V = sorted(set(inner))
    H = sorted(set(half_edges))
    for xs, bound, name in ((A, G.a_size, "A"), (B, G.b_size, "B"), (V, G.v_size, "V"), (H, G.h_size, "H")):
        if xs and not (0 <= xs[0] and xs[-1] < bound):
            raise IndexOutOfRange(f"subset of {name} out of range", set=name)
    vmap = {x: i for i, x in enumerate(A)}
    vmap.update({G.a_size + x: len(A) + i for i, x in enumerate(V)})
    hmap = {h: i for i, h in enumerate(H)}
    for b in B:
        if G.rho[b] not in vmap:
            raise NotClosed(f"rho does not restrict at marking {b}", map="rho", index=b)
    for h in H:
        if G.upsilon[h] not in hmap:
            raise NotClosed(f"upsilon does not restrict at half-edge {h}", map="upsilon", index=h)
        if G.sigma[h] not in vmap:
            raise NotClosed(f"sigma does not restrict at half-edge {h}", map="sigma", index=h)
    return Gaf(
        len(A),
        len(B),
        len(V),
        len(H),
        [vmap[G.rho[b]] for b in B],
        [vmap[G.sigma[h]] for h in H],
        [hmap[G.upsilon[h]] for h in H],
    )

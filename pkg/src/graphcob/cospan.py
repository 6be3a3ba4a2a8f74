"""Cospans of finite 1-complexes, up to homotopy.

A gaf ``G in Gr(B, A)`` realizes to a cospan ``B -> Re(G) <- A``. Because the
legs come from finite sets, such a cospan is determined up to equivalence by
the components of ``Re(G)``, which boundary points land in each, and the rank
(first Betti number) of each. :class:`CospanNF` stores exactly this.
"""

from dataclasses import dataclass
from itertools import chain
from typing import NamedTuple

from graphcob.errors import BoundaryMismatch
from graphcob.gaf import _UnionFind
from graphcob.monoidal import compose_h

__all__ = [
    "NFComponent",
    "CospanNF",
    "realize_nf",
    "compose_nf",
    "tensor_nf",
    "identity_nf",
    "verify_re_functorial",
]


class NFComponent(NamedTuple):
    """One connected component: the boundary points landing in it and its rank."""

    a_legs: tuple
    b_legs: tuple
    rank: int

    @property
    def euler_char(self):
        return 1 - self.rank


@dataclass(frozen=True)
class CospanNF:
    """Canonically sorted components of a cospan ``B -> W <- A``."""

    a_size: int
    b_size: int
    components: tuple

    def __post_init__(self):
        comps = tuple(sorted(NFComponent(tuple(sorted(a)), tuple(sorted(b)), r) for a, b, r in self.components))
        object.__setattr__(self, "components", comps)
        a_legs = sorted(chain.from_iterable(c[0] for c in comps))
        b_legs = sorted(chain.from_iterable(c[1] for c in comps))
        if a_legs != list(range(self.a_size)) or b_legs != list(range(self.b_size)):
            raise ValueError("every boundary point must lie in exactly one component")
        if comps and min(c[2] for c in comps) < 0:
            raise ValueError("ranks are non-negative")

    @property
    def euler_char(self):
        return sum(c.euler_char for c in self.components)

    @classmethod
    def from_components(cls, comps):
        """Build from components alone; boundary sizes are read off the legs."""
        comps = list(comps)
        a = sum(len(c.a_legs) for c in comps)
        b = sum(len(c.b_legs) for c in comps)
        return cls(a, b, tuple(comps))


def realize_nf(G):
    n = G.n_vertices
    uf = _UnionFind(n)
    sigma = G.sigma
    for h, k in G._edges:
        uf.union(sigma[h], sigma[k])
    roots = [uf.find(x) for x in range(n)]
    # per root: [a_legs, b_legs, vertices - edges]
    comps = {}
    for x, r in enumerate(roots):
        c = comps.setdefault(r, [[], [], 0])
        c[2] += 1
        if x < G.a_size:
            c[0].append(x)
    for h, _ in G._edges:
        comps[roots[sigma[h]]][2] -= 1
    for b, x in enumerate(G.rho):
        comps[roots[x]][1].append(b)
    return CospanNF(G.a_size, G.b_size, tuple(NFComponent(tuple(a), tuple(b), 1 - chi) for a, b, chi in comps.values()))


def compose_nf(outer, inner):
    """Pushout of ``outer`` (from ``A'`` to ``A``) and ``inner`` (from ``A''`` to ``A'``) along ``A'``.

    Euler characteristics add, minus one per glued point.
    """
    if outer.b_size != inner.a_size:
        raise BoundaryMismatch(
            f"outer has {outer.b_size} incoming legs, inner has {inner.a_size} outgoing legs",
            left=outer.b_size,
            right=inner.a_size,
        )
    n1 = len(outer.components)
    n = n1 + len(inner.components)
    uf = _UnionFind(n)
    outer_at = {}
    for i, c in enumerate(outer.components):
        for x in c.b_legs:
            outer_at[x] = i
    inner_at = {}
    for j, c in enumerate(inner.components):
        for x in c.a_legs:
            inner_at[x] = n1 + j
    glued = []
    for x in range(outer.b_size):
        uf.union(outer_at[x], inner_at[x])
        glued.append(outer_at[x])
    merged = {}
    for i, c in enumerate(outer.components):
        m = merged.setdefault(uf.find(i), [[], [], 0])
        m[0].extend(c.a_legs)
        m[2] += c.euler_char
    for j, c in enumerate(inner.components):
        m = merged.setdefault(uf.find(n1 + j), [[], [], 0])
        m[1].extend(c.b_legs)
        m[2] += c.euler_char
    for i in glued:
        merged[uf.find(i)][2] -= 1
    return CospanNF(
        outer.a_size,
        inner.b_size,
        tuple(NFComponent(tuple(a), tuple(b), 1 - chi) for a, b, chi in merged.values()),
    )


def tensor_nf(left, right):
    shifted = (
        NFComponent(tuple(left.a_size + x for x in c.a_legs), tuple(left.b_size + x for x in c.b_legs), c.rank)
        for c in right.components
    )
    return CospanNF(left.a_size + right.a_size, left.b_size + right.b_size, left.components + tuple(shifted))


def identity_nf(n):
    return CospanNF(n, n, tuple(NFComponent((x,), (x,), 0) for x in range(n)))


def verify_re_functorial(G, G2):
    """Whether realizing ``G . G2`` agrees with composing the realizations."""
    return realize_nf(compose_h(G, G2)) == compose_nf(realize_nf(G), realize_nf(G2))

"""Gradings, colorings, leaves and the spine factorization.

``ve(G)`` counts inner vertices plus edges; ``grade(f)`` counts the edges a
morphism collapses. Both are additive under every composition. Colorings
attach palette indices to ``V+E`` of a gaf or to the collapsed edges of a
morphism. For colored morphisms the distinguished color is always the last
palette index.
"""

from collections import deque
from dataclasses import dataclass

from graphcob.errors import IndexOutOfRange, NoDistinguishedColor, PreconditionViolated
from graphcob.gaf import Gaf, edge_of, edges, is_tree
from graphcob.morphism import (
    GafMorphism,
    collapse_edges,
    collapsed_edges,
    compose_v,
    validate_morphism,
)

__all__ = [
    "Coloring",
    "ColoredMorphism",
    "LeafData",
    "SpineFactorization",
    "ve",
    "ve_set",
    "ce",
    "grade",
    "grade_s",
    "is_leaf",
    "is_leaf_like",
    "spine",
]


@dataclass(frozen=True)
class Coloring:
    """A gaf with a color in ``range(palette_size)`` on each inner vertex and edge.

    ``color`` lists the inner vertices first, then the edges in canonical order.
    """

    base: Gaf
    palette_size: int
    color: tuple

    def __post_init__(self):
        object.__setattr__(self, "color", tuple(self.color))
        n = self.base.v_size + self.base.n_edges
        if len(self.color) != n:
            raise IndexOutOfRange(f"coloring needs {n} entries, got {len(self.color)}")
        for i, c in enumerate(self.color):
            if not 0 <= c < self.palette_size:
                raise IndexOutOfRange(f"color {c} at {i} outside palette", index=i)

    @property
    def color_v(self):
        return self.color[: self.base.v_size]

    @property
    def color_e(self):
        return self.color[self.base.v_size:]


@dataclass(frozen=True)
class ColoredMorphism:
    """A morphism with a color on each collapsed edge (canonical edge order)."""

    underlying: GafMorphism
    palette_size: int
    marking: tuple

    def __post_init__(self):
        object.__setattr__(self, "marking", tuple(self.marking))
        n = len(collapsed_edges(self.underlying))
        if len(self.marking) != n:
            raise IndexOutOfRange(f"marking needs {n} entries (one per collapsed edge), got {len(self.marking)}")
        for i, c in enumerate(self.marking):
            if not 0 <= c < self.palette_size:
                raise IndexOutOfRange(f"color {c} at {i} outside palette", index=i)

    @property
    def bullet(self):
        if self.palette_size == 0:
            raise NoDistinguishedColor("empty palette has no distinguished color")
        return self.palette_size - 1

    def colored_edges(self):
        return dict(zip(collapsed_edges(self.underlying), self.marking))


def ve_set(G):
    """The set ``V+E``: ``('v', i)`` for inner vertices, ``('e', (h, k))`` for edges."""
    return [("v", i) for i in range(G.v_size)] + [("e", e) for e in edges(G)]


def ve(G):
    return G.v_size + G.n_edges


def ce(f):
    """Edges of the source collapsed along ``f``."""
    return collapsed_edges(f)


def grade(f):
    return len(collapsed_edges(f))


def grade_s(fm):
    """Per-color cardinalities of the marking of a colored morphism."""
    out = [0] * fm.palette_size
    for c in fm.marking:
        out[c] += 1
    return tuple(out)


def is_leaf(G, e):
    """Orientations of the edge ``e`` as a leaf: its half-edges sitting at an inner vertex of valence 1.

    Returns a tuple of half-edges, empty when ``e`` is not a leaf.
    """
    h, k = edge_of(G, e[0] if not isinstance(e, int) else edges(G)[e][0])
    val = [0] * G.n_vertices
    for x in G.sigma:
        val[x] += 1
    return tuple(x for x in (h, k) if G.sigma[x] >= G.a_size and val[G.sigma[x]] == 1)


@dataclass(frozen=True)
class LeafData:
    """The special leaf of a leaf-like colored morphism."""

    edge: tuple
    half_edge: int
    vertex: int  # flattened index of the valence-1 inner vertex
    tree_vertices: tuple
    tree_edges: tuple


def _collapsed_tree(f, e):
    """The component of the preimage of ``f(e)`` that contains the collapsed edge ``e``."""
    G = f.source
    x = f.map_h[e[0]]
    tree_edges = [d for d in collapsed_edges(f) if f.map_h[d[0]] == x]
    # connected component containing e
    adj = {}
    for d in tree_edges:
        u, w = G.sigma[d[0]], G.sigma[d[1]]
        adj.setdefault(u, []).append((w, d))
        adj.setdefault(w, []).append((u, d))
    start = G.sigma[e[0]]
    seen = {start}
    comp_edges = set()
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w, d in adj.get(u, ()):
            comp_edges.add(d)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(sorted(seen)), tuple(sorted(comp_edges))


def is_leaf_like(fm):
    """The :class:`LeafData` of ``fm`` if it is leaf-like, else ``None``.

    Leaf-like means: exactly one collapsed edge carries the distinguished color,
    and that edge is a leaf of the collapsed tree containing it.
    """
    bullet = fm.bullet
    f = fm.underlying
    G = f.source
    special = [e for e, c in fm.colored_edges().items() if c == bullet]
    if len(special) != 1:
        return None
    e = special[0]
    tree_vertices, tree_edges = _collapsed_tree(f, e)
    val = {}
    for d in tree_edges:
        for h in d:
            val[G.sigma[h]] = val.get(G.sigma[h], 0) + 1
    for h in e:
        x = G.sigma[h]
        if x >= G.a_size and val[x] == 1:
            return LeafData(e, h, x, tree_vertices, tree_edges)
    return None


@dataclass(frozen=True)
class SpineFactorization:
    case: str  # "inner" or "attaching"
    leaf: LeafData
    spine_edges: tuple
    f_b: GafMorphism
    f_s: GafMorphism


def _tree_path(G, start, goal):
    """Edges of the unique path from ``start`` to ``goal`` in a tree gaf."""
    adj = {}
    for d in edges(G):
        u, w = G.sigma[d[0]], G.sigma[d[1]]
        adj.setdefault(u, []).append((w, d))
        adj.setdefault(w, []).append((u, d))
    parent = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w, d in adj.get(u, ()):
            if w not in parent:
                parent[w] = (u, d)
                queue.append(w)
    path = []
    u = goal
    while parent[u] is not None:
        u, d = parent[u]
        path.append(d)
    return tuple(sorted(path))


def spine(fm):
    """Factor a leaf-like collapse of a tree onto a single vertex through its spine.

    In the inner case the spine is the special leaf alone; in the attaching
    case it is the path from the attaching vertex to the leaf's valence-1
    vertex. Returns ``f_b`` (collapse everything off the spine) and ``f_s``
    (collapse the spine) with ``f_s . f_b == f``.
    """
    f = fm.underlying
    G, T = f.source, f.target
    leaf = is_leaf_like(fm)
    if leaf is None:
        raise PreconditionViolated("colored morphism is not leaf-like")
    if T.n_vertices != 1 or T.h_size != 0:
        raise PreconditionViolated("target must be a single vertex without edges")
    if not is_tree(G):
        raise PreconditionViolated("source must be a tree")
    if T.a_size == 1:
        case = "attaching"
        spine_edges = _tree_path(G, 0, leaf.vertex)
    else:
        case = "inner"
        spine_edges = (leaf.edge,)
    rest = [d for d in edges(G) if d not in spine_edges]
    mid, f_b = collapse_edges(G, rest)
    f_s = validate_morphism(
        GafMorphism(
            mid, T, f.map_a, f.map_b,
            [0] * mid.v_size, [0] * mid.h_size,
        )
    )
    if compose_v(f_s, f_b) != f:
        raise AssertionError("spine factorization does not recompose to f")
    return SpineFactorization(case, leaf, spine_edges, f_b, f_s)

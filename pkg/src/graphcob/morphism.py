"""Tree-collapse morphisms between gafs.

A morphism ``f: G -> G'`` is stored as four index maps. ``map_a`` and
``map_b`` send ``A -> A'`` and ``B -> B'``. ``map_v`` sends inner vertices into
the flattened vertex range ``A'+V'`` of the target, and ``map_h`` sends
half-edges into ``A'+V'+H'`` (vertex range first, then half-edge ``k`` at
``a' + v' + k``). A half-edge mapped into the vertex range belongs to a
collapsed edge.
"""

import itertools
from dataclasses import dataclass

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
from graphcob.gaf import Gaf, _UnionFind, edge_of, edges

__all__ = [
    "GafMorphism",
    "validate_morphism",
    "is_valid_morphism",
    "identity_morphism",
    "compose_v",
    "collapse_edges",
    "collapsed_edges",
    "morphisms_between",
    "is_isomorphism",
    "inverse",
]


@dataclass(frozen=True)
class GafMorphism:
    source: Gaf
    target: Gaf
    map_a: tuple
    map_b: tuple
    map_v: tuple
    map_h: tuple

    def __post_init__(self):
        for name in ("map_a", "map_b", "map_v", "map_h"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))

    def vertex_image(self, x):
        """Image of the source vertex ``x`` (flattened) in the target's ``A'+V'``."""
        a = self.source.a_size
        return self.map_a[x] if x < a else self.map_v[x - a]

    def half_edge_image(self, h):
        """``('vertex', x)`` for a collapsed half-edge, else ``('half_edge', k)``."""
        y = self.map_h[h]
        nv = self.target.n_vertices
        return ("vertex", y) if y < nv else ("half_edge", y - nv)

    def __repr__(self):
        return (
            f"GafMorphism(map_a={list(self.map_a)}, map_b={list(self.map_b)}, "
            f"map_v={list(self.map_v)}, map_h={list(self.map_h)}, "
            f"source={self.source!r}, target={self.target!r})"
        )


def _check_ranges(f):
    G, T = f.source, f.target
    if len(f.map_a) != G.a_size or any(not 0 <= y < T.a_size for y in f.map_a):
        raise RestrictionViolated("map_a is not a map A -> A'", condition=1, map="map_a")
    if len(f.map_b) != G.b_size or any(not 0 <= y < T.b_size for y in f.map_b):
        raise RestrictionViolated("map_b is not a map B -> B'", condition=1, map="map_b")
    if len(f.map_v) != G.v_size:
        raise IndexOutOfRange("map_v has wrong length", map="map_v", index=len(f.map_v))
    for i, y in enumerate(f.map_v):
        if not 0 <= y < T.n_vertices:
            raise IndexOutOfRange(f"map_v[{i}] = {y} out of range", map="map_v", index=i)
    if len(f.map_h) != G.h_size:
        raise IndexOutOfRange("map_h has wrong length", map="map_h", index=len(f.map_h))
    for i, y in enumerate(f.map_h):
        if not 0 <= y < T.n_vertices + T.h_size:
            raise IndexOutOfRange(f"map_h[{i}] = {y} out of range", map="map_h", index=i)


def _forest_components(n_vertices, vertices, edge_list):
    """Components of the subgraph on ``vertices`` spanned by ``edge_list``.

    Returns a list of ``(vertex_list, edge_count)``.
    """
    uf = _UnionFind(n_vertices)
    for x, y in edge_list:
        uf.union(x, y)
    comps = {}
    for x in vertices:
        comps.setdefault(uf.find(x), [[], 0])[0].append(x)
    for x, _ in edge_list:
        comps[uf.find(x)][1] += 1
    return [(vs, ne) for vs, ne in comps.values()]


def validate_morphism(f):
    """Return ``f`` if it is a morphism of gafs, else raise the first violated condition."""
    _check_ranges(f)
    G, T = f.source, f.target
    nv_t = T.n_vertices
    vimg = f.vertex_image

    for b in range(G.b_size):
        if vimg(G.rho[b]) != T.rho[f.map_b[b]]:
            raise NotEquivariant(f"f.rho != rho'.f at marking {b}", map="rho", index=b)

    hits = [0] * T.h_size
    for h in range(G.h_size):
        y = f.map_h[h]
        y_partner = f.map_h[G.upsilon[h]]
        src_vertex = vimg(G.sigma[h])
        if y < nv_t:
            if src_vertex != y:
                raise NotEquivariant(f"f.sigma != sigma'.f at half-edge {h}", map="sigma", index=h)
            if y_partner != y:
                raise NotEquivariant(f"f.upsilon != upsilon'.f at half-edge {h}", map="upsilon", index=h)
        else:
            k = y - nv_t
            hits[k] += 1
            if src_vertex != T.sigma[k]:
                raise NotEquivariant(f"f.sigma != sigma'.f at half-edge {h}", map="sigma", index=h)
            if y_partner != nv_t + T.upsilon[k]:
                raise NotEquivariant(f"f.upsilon != upsilon'.f at half-edge {h}", map="upsilon", index=h)
    for k, n in enumerate(hits):
        if n != 1:
            raise HalfEdgeNotSingleton(f"half-edge {k} of the target has {n} preimages", index=k)

    # preimages of target vertices: gather vertices and collapsed edges per target vertex
    pre_vertices = [[] for _ in range(nv_t)]
    pre_edges = [[] for _ in range(nv_t)]
    for x in range(G.n_vertices):
        pre_vertices[vimg(x)].append(x)
    for h, k in edges(G):
        y = f.map_h[h]
        if y < nv_t:
            pre_edges[y].append((G.sigma[h], G.sigma[k]))

    for t in range(nv_t):
        comps = _forest_components(G.n_vertices, pre_vertices[t], pre_edges[t])
        if t >= T.a_size:
            ok = len(comps) == 1 and comps[0][1] == len(comps[0][0]) - 1
            ok = ok and not any(x < G.a_size for x in pre_vertices[t])
            if not ok:
                raise PreimageNotTree(
                    f"preimage of inner vertex {t - T.a_size} is not a non-based tree",
                    index=t - T.a_size,
                )
        else:
            for vs, ne in comps:
                n_attach = sum(1 for x in vs if x < G.a_size)
                if n_attach != 1 or ne != len(vs) - 1:
                    raise PreimageWrongBasing(
                        f"preimage of attaching vertex {t} is not a union of based trees",
                        index=t,
                    )
    return f


def is_valid_morphism(f):
    try:
        validate_morphism(f)
    except (NotEquivariant, PreimageNotTree, PreimageWrongBasing, HalfEdgeNotSingleton,
            RestrictionViolated, IndexOutOfRange):
        return False
    return True


def identity_morphism(G):
    nv = G.n_vertices
    return GafMorphism(
        G, G, range(G.a_size), range(G.b_size),
        [G.a_size + i for i in range(G.v_size)],
        [nv + h for h in range(G.h_size)],
    )


def compose_v(g, f):
    """Vertical composite ``g . f``; the result is re-validated."""
    if f.target != g.source:
        raise SourceTargetMismatch("target of f differs from source of g")
    mid = f.target
    nv_mid = mid.n_vertices
    gv = g.vertex_image
    map_h = []
    for y in f.map_h:
        map_h.append(gv(y) if y < nv_mid else g.map_h[y - nv_mid])
    h = GafMorphism(
        f.source,
        g.target,
        [g.map_a[y] for y in f.map_a],
        [g.map_b[y] for y in f.map_b],
        [gv(y) for y in f.map_v],
        map_h,
    )
    return validate_morphism(h)


def collapsed_edges(f):
    """Edges of the source whose half-edges are sent to vertices."""
    nv = f.target.n_vertices
    return [e for e in edges(f.source) if f.map_h[e[0]] < nv]


def _normalize_edge_set(G, X):
    E = edges(G)
    out = set()
    for e in X:
        if isinstance(e, int):
            if not 0 <= e < len(E):
                raise IndexOutOfRange(f"edge index {e} out of range", index=e)
            out.add(E[e])
        else:
            h, k = e
            if not (0 <= h < G.h_size and G.upsilon[h] == k):
                raise IndexOutOfRange(f"{tuple(e)} is not an edge", index=h)
            out.add(edge_of(G, h))
    return sorted(out)


def collapse_edges(G, X):
    """Collapse the edge set ``X`` of ``G``.

    ``X`` holds edges as half-edge pairs or as canonical edge indices. Each
    connected piece spanned by ``X`` must be a tree with at most one attaching
    vertex; it becomes its attaching vertex, or else a fresh inner vertex.
    Surviving inner vertices keep their order and fresh ones follow, sorted by
    the smallest original vertex they contain.

    Returns ``(quotient, projection)``.
    """
    X = _normalize_edge_set(G, X)
    sigma = G.sigma
    n = G.n_vertices
    uf = _UnionFind(n)
    for h, k in X:
        if not uf.union(sigma[h], sigma[k]):
            raise NotAForest("collapsed edges contain a cycle", edge=[h, k])
    groups = {}
    for h, k in X:
        groups.setdefault(uf.find(sigma[h]), set()).update((sigma[h], sigma[k]))
    vertex_new = {}
    fresh = []
    for members in groups.values():
        attach = sorted(x for x in members if x < G.a_size)
        if len(attach) > 1:
            raise TwoAttachingVerticesInTree(
                "a collapsed tree contains several attaching vertices", vertices=attach
            )
        if attach:
            for x in members:
                vertex_new[x] = ("a", attach[0])
        else:
            fresh.append(sorted(members))
    fresh.sort(key=lambda ms: ms[0])
    survivors = [x for x in range(G.a_size, n) if x not in vertex_new and not any(x in ms for ms in fresh)]
    a = G.a_size
    index = {x: x for x in range(a)}
    for i, x in enumerate(survivors):
        index[x] = a + i
    for j, ms in enumerate(fresh):
        for x in ms:
            index[x] = a + len(survivors) + j
    for x, (_, t) in vertex_new.items():
        index[x] = t
    v_new = len(survivors) + len(fresh)

    collapsed = {h for e in X for h in e}
    kept = [h for h in range(G.h_size) if h not in collapsed]
    hnew = {h: i for i, h in enumerate(kept)}
    quotient = Gaf(
        a,
        G.b_size,
        v_new,
        len(kept),
        [index[x] for x in G.rho],
        [index[sigma[h]] for h in kept],
        [hnew[G.upsilon[h]] for h in kept],
    )
    nv = a + v_new
    proj = GafMorphism(
        G,
        quotient,
        range(a),
        range(G.b_size),
        [index[x] for x in range(a, n)],
        [index[sigma[h]] if h in collapsed else nv + hnew[h] for h in range(G.h_size)],
    )
    return quotient, validate_morphism(proj)


def morphisms_between(G, T):
    """All morphisms ``G -> T`` restricting to the identity on ``A`` and ``B``.

    Sorted lexicographically by ``(map_v, map_h)``.
    """
    if (G.a_size, G.b_size) != (T.a_size, T.b_size):
        return []
    a = G.a_size
    nv_t = T.n_vertices
    # markings pin vertex images
    pinned = {}
    for b in range(G.b_size):
        x = G.rho[b]
        want = T.rho[b]
        if x < a:
            if want != x:
                return []
        elif pinned.setdefault(x, want) != want:
            return []
    choices = [[pinned[x]] if x in pinned else range(nv_t) for x in range(a, G.n_vertices)]
    # target half-edges indexed by (sigma'(h'), sigma'(upsilon'(h')))
    by_ends = {}
    for k in range(T.h_size):
        by_ends.setdefault((T.sigma[k], T.sigma[T.upsilon[k]]), []).append(k)
    E = edges(G)
    out = []
    for map_v in itertools.product(*choices):
        img = list(range(a)) + list(map_v)
        options = []
        for h, k in E:
            x, y = img[G.sigma[h]], img[G.sigma[k]]
            opts = []
            if x == y:
                opts.append((x, x))
            for kt in by_ends.get((x, y), ()):
                opts.append((nv_t + kt, nv_t + T.upsilon[kt]))
            if not opts:
                break
            options.append(opts)
        else:
            for pick in _injective_products(options, nv_t):
                map_h = [0] * G.h_size
                for (h, k), (yh, yk) in zip(E, pick):
                    map_h[h] = yh
                    map_h[k] = yk
                f = GafMorphism(G, T, range(a), range(G.b_size), map_v, map_h)
                if is_valid_morphism(f):
                    out.append(f)
    out.sort(key=lambda f: (f.map_v, f.map_h))
    return out


def _injective_products(options, nv_t):
    """Products of per-edge options with no target half-edge used twice."""
    used = set()
    pick = []

    def rec(i):
        if i == len(options):
            yield list(pick)
            return
        for opt in options[i]:
            yh, yk = opt
            if yh >= nv_t:
                if yh in used or yk in used:
                    continue
                used.update(opt)
            pick.append(opt)
            yield from rec(i + 1)
            pick.pop()
            if yh >= nv_t:
                used.difference_update(opt)

    yield from rec(0)


def is_isomorphism(f):
    """A valid morphism that is bijective on every sort."""
    G, T = f.source, f.target
    if (G.a_size, G.b_size, G.v_size, G.h_size) != (T.a_size, T.b_size, T.v_size, T.h_size):
        return False
    if any(y < T.a_size for y in f.map_v) or any(y < T.n_vertices for y in f.map_h):
        return False
    return (
        len(set(f.map_a)) == G.a_size
        and len(set(f.map_b)) == G.b_size
        and len(set(f.map_v)) == G.v_size
        and len(set(f.map_h)) == G.h_size
        and is_valid_morphism(f)
    )


def inverse(f):
    """Inverse of an isomorphism."""
    if not is_isomorphism(f):
        raise ValueError("inverse() needs an isomorphism")
    G, T = f.source, f.target
    nv = G.n_vertices

    def inv(values, offset_src, offset_tgt):
        out = [0] * len(values)
        for i, y in enumerate(values):
            out[y - offset_tgt] = i + offset_src
        return out

    return validate_morphism(
        GafMorphism(
            T,
            G,
            inv(f.map_a, 0, 0),
            inv(f.map_b, 0, 0),
            inv(f.map_v, G.a_size, T.a_size),
            inv(f.map_h, nv, T.n_vertices),
        )
    )

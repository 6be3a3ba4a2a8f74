"""Isomorphisms, automorphisms and canonical forms of gafs.

By default isomorphisms restrict to the identity on ``A`` and ``B``, the
convention of the hom-categories ``Gr(B, A)``. Passing ``fix_boundary=False``
lets them permute attaching vertices and markings as well.

The search is brute force over relabelings of the inner vertices, pruned by
a vertex invariant (valence, loops, markings, attaching neighbours). Half-edge
labels follow from the vertex labels up to automorphisms that do not change
the result, so only vertex relabelings are enumerated.
"""

import itertools
from collections import Counter

from graphcob.gaf import Gaf, edges
from graphcob.morphism import GafMorphism, compose_v, inverse, validate_morphism

__all__ = [
    "canonical_form",
    "canonical_isomorphism",
    "is_isomorphic",
    "isomorphisms",
    "automorphisms",
]


def _vertex_invariants(G, fix_boundary):
    """Per-vertex invariants preserved by every admissible isomorphism."""
    a = G.a_size
    n = G.n_vertices
    val = [0] * n
    loops = [0] * n
    for x in G.sigma:
        val[x] += 1
    nbrs = [[] for _ in range(n)]
    for h, k in edges(G):
        x, y = G.sigma[h], G.sigma[k]
        if x == y:
            loops[x] += 1
        else:
            nbrs[x].append(y)
            nbrs[y].append(x)
    marks = [[] for _ in range(n)]
    for b, x in enumerate(G.rho):
        marks[x].append(b)
    inv = []
    for x in range(n):
        if fix_boundary:
            attach = tuple(sorted(y for y in nbrs[x] if y < a))
            mk = tuple(marks[x])
        else:
            attach = sum(1 for y in nbrs[x] if y < a)
            mk = len(marks[x])
        nbr_val = tuple(sorted(val[y] for y in nbrs[x]))
        inv.append((x < a, val[x], loops[x], mk, attach, nbr_val))
    return inv


def _blocks(G, fix_boundary):
    """Relabeling blocks: lists of vertices that may be permuted among themselves.

    Blocks are returned in the order in which they occupy target positions.
    """
    inv = _vertex_invariants(G, fix_boundary)
    a = G.a_size
    if fix_boundary:
        attach_blocks = [[x] for x in range(a)]
    else:
        attach_blocks = _group(range(a), inv)
    inner_blocks = _group(range(a, G.n_vertices), inv)
    return attach_blocks + inner_blocks, inv


def _group(xs, inv):
    groups = {}
    for x in xs:
        groups.setdefault(inv[x], []).append(x)
    return [groups[k] for k in sorted(groups)]


def _marking_perms(G, vmap, fix_boundary):
    """Marking relabelings compatible with a vertex relabeling."""
    if fix_boundary:
        yield tuple(range(G.b_size))
        return
    # markings at the same vertex are interchangeable; pick all assignments
    by_target = {}
    for b, x in enumerate(G.rho):
        by_target.setdefault(vmap[x], []).append(b)
    order = sorted(by_target)
    # canonical: markings sorted by new vertex label, each block in any order
    slots = []
    pos = 0
    for t in order:
        slots.append((by_target[t], list(range(pos, pos + len(by_target[t])))))
        pos += len(by_target[t])
    for choice in itertools.product(*(itertools.permutations(bs) for bs, _ in slots)):
        bmap = [0] * G.b_size
        for (bs, positions), perm in zip(slots, choice):
            for b, p in zip(perm, positions):
                bmap[b] = p
        yield tuple(bmap)


def _relabel(G, vmap, bmap):
    """Apply vertex/marking relabelings; return the relabeled gaf and half-edge map."""
    order = sorted(
        edges(G),
        key=lambda e: (min(vmap[G.sigma[e[0]]], vmap[G.sigma[e[1]]]),
                       max(vmap[G.sigma[e[0]]], vmap[G.sigma[e[1]]])),
    )
    hmap = [0] * G.h_size
    sigma = [0] * G.h_size
    for i, (h, k) in enumerate(order):
        x, y = vmap[G.sigma[h]], vmap[G.sigma[k]]
        if x > y:
            h, k, x, y = k, h, y, x
        hmap[h], hmap[k] = 2 * i, 2 * i + 1
        sigma[2 * i], sigma[2 * i + 1] = x, y
    rho = [0] * G.b_size
    for b, x in enumerate(G.rho):
        rho[bmap[b]] = vmap[x]
    upsilon = [i ^ 1 for i in range(G.h_size)]
    return Gaf(G.a_size, G.b_size, G.v_size, G.h_size, rho, sigma, upsilon), hmap


def _vertex_maps(G, fix_boundary):
    blocks, _ = _blocks(G, fix_boundary)
    positions = []
    pos = 0
    for blk in blocks:
        positions.append(list(range(pos, pos + len(blk))))
        pos += len(blk)
    for choice in itertools.product(*(itertools.permutations(blk) for blk in blocks)):
        vmap = [0] * G.n_vertices
        for perm, ps in zip(choice, positions):
            for x, p in zip(perm, ps):
                vmap[x] = p
        yield vmap


def _canonical(G, fix_boundary):
    best = None
    for vmap in _vertex_maps(G, fix_boundary):
        for bmap in _marking_perms(G, vmap, fix_boundary):
            C, hmap = _relabel(G, vmap, bmap)
            key = (C.rho, C.sigma)
            if best is None or key < best[0]:
                best = (key, C, vmap, bmap, hmap)
    _, C, vmap, bmap, hmap = best
    nv = G.n_vertices
    phi = GafMorphism(
        G, C,
        vmap[: G.a_size],
        bmap,
        vmap[G.a_size:],
        [nv + k for k in hmap],
    )
    return C, phi


def canonical_form(G, fix_boundary=True):
    """Least relabeling of ``G`` (by ``(rho, sigma)``) among invariant-respecting ones.

    Two gafs have equal canonical forms exactly when they are isomorphic.

    >>> from graphcob.gaf import Gaf
    >>> canonical_form(Gaf(0, 0, 1, 2, [], [0, 0], [1, 0]))
    Gaf(a=0, b=0, v=1, h=2, rho=[], sigma=[0, 0], upsilon=[1, 0])
    """
    return _canonical(G, fix_boundary)[0]


def canonical_isomorphism(G, fix_boundary=True):
    """The isomorphism ``G -> canonical_form(G)`` found by the search."""
    return validate_morphism(_canonical(G, fix_boundary)[1])


def is_isomorphic(G, H, fix_boundary=True):
    """An isomorphism ``G -> H`` or ``None``."""
    if (G.a_size, G.b_size, G.v_size, G.h_size) != (H.a_size, H.b_size, H.v_size, H.h_size):
        return None
    CG, phi = _canonical(G, fix_boundary)
    CH, psi = _canonical(H, fix_boundary)
    if CG != CH:
        return None
    return compose_v(inverse(psi), validate_morphism(phi))


def isomorphisms(G, H, fix_boundary=True):
    """All isomorphisms ``G -> H``."""
    first = is_isomorphic(G, H, fix_boundary)
    if first is None:
        return []
    return [compose_v(first, alpha) for alpha in automorphisms(G, fix_boundary)]


def automorphisms(G, fix_boundary=True):
    """The automorphism group of ``G`` as a list, identity first.

    Enumerated directly: each invariant-respecting vertex relabeling that maps
    the edge multiset to itself contributes every matching of parallel edges
    and both orientations of every loop.
    """
    out = []
    nv = G.n_vertices
    E = edges(G)
    ends = [tuple(sorted((G.sigma[h], G.sigma[k]))) for h, k in E]
    edge_multiset = Counter(ends)
    blocks, _ = _blocks(G, fix_boundary)
    for choice in itertools.product(*(itertools.permutations(blk) for blk in blocks)):
        pi = list(range(nv))
        for blk, perm in zip(blocks, choice):
            for x, y in zip(blk, perm):
                pi[x] = y
        mapped = [tuple(sorted((pi[x], pi[y]))) for x, y in ends]
        if Counter(mapped) != edge_multiset:
            continue
        for bmap in _rho_compatible(G, pi, fix_boundary):
            for hmap in _half_edge_maps(G, E, ends, mapped, pi):
                f = GafMorphism(G, G, pi[: G.a_size], bmap, pi[G.a_size:], [nv + k for k in hmap])
                out.append(validate_morphism(f))
    ident = tuple(range(nv, nv + G.h_size))
    out.sort(key=lambda f: (f.map_a != tuple(range(G.a_size)) or f.map_b != tuple(range(G.b_size))
                            or f.map_v != tuple(range(G.a_size, nv)) or f.map_h != ident,
                            f.map_a, f.map_b, f.map_v, f.map_h))
    return out


def _rho_compatible(G, pi, fix_boundary):
    if fix_boundary:
        if all(pi[x] == x for x in G.rho):
            yield tuple(range(G.b_size))
        return
    # bmap with rho(bmap(b)) = pi(rho(b))
    targets = {}
    for b, x in enumerate(G.rho):
        targets.setdefault(x, []).append(b)
    src = {}
    for b, x in enumerate(G.rho):
        src.setdefault(pi[x], []).append(b)
    groups = []
    for x, bs in src.items():
        tgt = targets.get(x, [])
        if len(tgt) != len(bs):
            return
        groups.append((bs, tgt))
    for choice in itertools.product(*(itertools.permutations(t) for _, t in groups)):
        bmap = [0] * G.b_size
        for (bs, _), perm in zip(groups, choice):
            for b, c in zip(bs, perm):
                bmap[b] = c
        yield tuple(bmap)


def _half_edge_maps(G, E, ends, mapped, pi):
    """Half-edge bijections over a vertex permutation ``pi`` of an automorphism."""
    by_ends = {}
    for i, key in enumerate(ends):
        by_ends.setdefault(key, []).append(i)
    groups = []
    src_by_key = {}
    for i, key in enumerate(mapped):
        src_by_key.setdefault(key, []).append(i)
    for key, srcs in src_by_key.items():
        groups.append((srcs, by_ends[key]))
    per_group = []
    for srcs, tgts in groups:
        options = []
        for perm in itertools.permutations(tgts):
            # orientation choices per edge: forced unless loop
            pairs = []
            for i, j in zip(srcs, perm):
                h, k = E[i]
                th, tk = E[j]
                if G.sigma[th] == G.sigma[tk]:
                    pairs.append([((h, th), (k, tk)), ((h, tk), (k, th))])
                elif pi[G.sigma[h]] == G.sigma[th]:
                    pairs.append([((h, th), (k, tk))])
                else:
                    pairs.append([((h, tk), (k, th))])
            for orient in itertools.product(*pairs):
                options.append(orient)
        per_group.append(options)
    for combo in itertools.product(*per_group):
        hmap = [0] * G.h_size
        for orient in combo:
            for (h, th), (k, tk) in orient:
                hmap[h] = th
                hmap[k] = tk
        yield hmap

"""Reductions by iterated single-edge collapses.

Each procedure returns the reduced gaf together with the accumulated
collapse morphism from the input. Edges are tried in canonical order, so the
output is deterministic.
"""

from graphcob.gaf import _UnionFind, components, edges
from graphcob.iso import canonical_form
from graphcob.morphism import collapse_edges, compose_v, identity_morphism

__all__ = [
    "unmarked_leaf_edges",
    "bridge_edges",
    "collapsible_edges",
    "collapse_unmarked_leaves",
    "collapse_bridges",
    "reduce",
    "reduce_variants",
]


def _valences(G):
    val = [0] * G.n_vertices
    for x in G.sigma:
        val[x] += 1
    return val


def unmarked_leaf_edges(G):
    """Edges with an end at an inner vertex of valence 1 that carries no marking."""
    val = _valences(G)
    marked = set(G.rho)
    out = []
    for e in edges(G):
        for h in e:
            x = G.sigma[h]
            if x >= G.a_size and val[x] == 1 and x not in marked:
                out.append(e)
                break
    return out


def bridge_edges(G):
    """Separating non-loop edges whose two ends are distinct unmarked inner vertices."""
    marked = set(G.rho)
    base = len(components(G))
    out = []
    for e in edges(G):
        x, y = G.sigma[e[0]], G.sigma[e[1]]
        if x == y or x < G.a_size or y < G.a_size or x in marked or y in marked:
            continue
        if _components_without(G, e) > base:
            out.append(e)
    return out


def _components_without(G, e):
    uf = _UnionFind(G.n_vertices)
    n = G.n_vertices
    for d in edges(G):
        if d != e and uf.union(G.sigma[d[0]], G.sigma[d[1]]):
            n -= 1
    return n


def collapsible_edges(G):
    """Edges whose singleton collapse is a valid morphism: neither loops nor joining two attaching vertices."""
    out = []
    for e in edges(G):
        x, y = G.sigma[e[0]], G.sigma[e[1]]
        if x != y and not (x < G.a_size and y < G.a_size):
            out.append(e)
    return out


def _iterate(G, candidates, choose=None):
    f = identity_morphism(G)
    while True:
        cand = candidates(G)
        if not cand:
            return G, f
        e = cand[0] if choose is None else choose(cand)
        G, step = collapse_edges(G, [e])
        f = compose_v(step, f)


def collapse_unmarked_leaves(G):
    """Collapse unmarked leaves until every valence-1 inner vertex is marked."""
    return _iterate(G, unmarked_leaf_edges)


def collapse_bridges(G):
    """Collapse bridges until none is left."""
    return _iterate(G, bridge_edges)


def reduce(G, choose=None):
    """Collapse single edges greedily until no single edge can be collapsed.

    ``choose`` picks the next edge from the list of candidates; the default
    takes the smallest. What is left are loops and edges between two
    attaching vertices.
    """
    return _iterate(G, collapsible_edges, choose)


def reduce_variants(G, rng, trials=8):
    """Distinct greedy reductions (as canonical forms) over random edge orders."""
    seen = {canonical_form(reduce(G)[0])}
    for _ in range(trials):
        seen.add(canonical_form(reduce(G, choose=rng.choice)[0]))
    return sorted(seen, key=lambda C: (C.v_size, C.h_size, C.rho, C.sigma))

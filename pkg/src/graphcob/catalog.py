"""Bounded enumeration, nerves of small truncations, expansions and zig-zags.

Everything here works on canonical forms, so gafs can be compared with ``==``
and used as dictionary keys.
"""

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from graphcob.errors import BudgetExceeded, PreconditionViolated
from graphcob.gaf import Gaf, edges
from graphcob.iso import canonical_form, is_isomorphic
from graphcob.morphism import (
    GafMorphism,
    collapse_edges,
    compose_v,
    identity_morphism,
    morphisms_between,
    validate_morphism,
)
from graphcob.normalize import collapsible_edges

__all__ = [
    "canonical_form",
    "canonical_key",
    "enumerate_gafs",
    "NerveData",
    "nerve_export",
    "expansions",
    "Move",
    "zigzag_connected",
]


def canonical_key(G):
    """Sort key for canonical forms: size first, then the raw maps."""
    return (G.a_size, G.b_size, G.v_size, G.h_size, G.rho, G.sigma, G.upsilon)


def _from_edge_list(a, b, v, rho, ends):
    sigma, upsilon = [], []
    for i, (x, y) in enumerate(ends):
        sigma += [x, y]
        upsilon += [2 * i + 1, 2 * i]
    return Gaf(a, b, v, 2 * len(ends), rho, sigma, upsilon)


def enumerate_gafs(a, b, max_v, max_e):
    """All isomorphism classes of gafs attached to ``a`` and marked by ``b``.

    Classes are taken with ``A`` and ``B`` fixed pointwise and returned as
    canonical forms, sorted by :func:`canonical_key`.
    """
    found = set()
    for v in range(max_v + 1):
        n = a + v
        pairs = list(itertools.combinations_with_replacement(range(n), 2))
        for rho in itertools.product(range(n), repeat=b):
            for m in range(max_e + 1):
                for ends in itertools.combinations_with_replacement(pairs, m):
                    found.add(canonical_form(_from_edge_list(a, b, v, rho, ends)))
    return sorted(found, key=canonical_key)


@dataclass(frozen=True)
class NerveData:
    """A finite full subcategory of ``Gr(B, A)``.

    ``morphisms`` holds ``(src, tgt, f)`` triples indexing into ``objects``;
    ``compose`` maps a pair ``(i, j)`` of morphism indices with ``tgt(i) ==
    src(j)`` to the index of ``j . i``.
    """

    objects: tuple
    morphisms: tuple
    compose: dict
    identities: tuple


def nerve_export(a, b, max_v, max_e, limit=20000):
    objects = enumerate_gafs(a, b, max_v, max_e)
    morphisms = []
    index = {}
    out_of = [[] for _ in objects]
    for i, G in enumerate(objects):
        for j, T in enumerate(objects):
            for f in morphisms_between(G, T):
                if len(morphisms) >= limit:
                    raise BudgetExceeded(f"more than {limit} morphisms", limit=limit)
                index[f] = len(morphisms)
                out_of[i].append(len(morphisms))
                morphisms.append((i, j, f))
    identities = tuple(index[identity_morphism(G)] for G in objects)
    compose = {}
    for m, (_, j, f) in enumerate(morphisms):
        for n in out_of[j]:
            compose[(m, n)] = index[compose_v(morphisms[n][2], f)]
    return NerveData(tuple(objects), tuple(morphisms), compose, identities)


def _incidences(G, x):
    return [("h", h) for h in range(G.h_size) if G.sigma[h] == x] + [
        ("b", k) for k in range(G.b_size) if G.rho[k] == x
    ]


def _expand(G, x, moved):
    """Move the incidences ``moved`` off ``x`` onto a fresh inner vertex joined to ``x`` by a fresh edge."""
    new = G.n_vertices
    fresh = G.h_size
    sigma = list(G.sigma) + [x, new]
    rho = list(G.rho)
    for kind, i in moved:
        if kind == "h":
            sigma[i] = new
        else:
            rho[i] = new
    upsilon = list(G.upsilon) + [fresh + 1, fresh]
    big = Gaf(G.a_size, G.b_size, G.v_size + 1, G.h_size + 2, rho, sigma, upsilon)
    nv = G.n_vertices
    f = validate_morphism(
        GafMorphism(
            big, G, range(G.a_size), range(G.b_size),
            [G.a_size + i for i in range(G.v_size)] + [x],
            [nv + h for h in range(G.h_size)] + [x, x],
        )
    )
    return big, f


def expansions(G):
    """Single-edge expansions of ``G``, one per isomorphism class.

    Returns ``(C, f)`` pairs with ``C`` canonical and ``f: C -> G`` collapsing
    exactly the fresh edge. Sorted by :func:`canonical_key`.
    """
    seen = {}
    for x in range(G.n_vertices):
        items = _incidences(G, x)
        if x < G.a_size:
            splits = (s for r in range(len(items) + 1) for s in itertools.combinations(items, r))
        else:
            # unordered bipartitions: the first item always stays
            rest = items[1:]
            splits = (s for r in range(len(rest) + 1) for s in itertools.combinations(rest, r))
        for moved in splits:
            big, f = _expand(G, x, moved)
            C = canonical_form(big)
            if C not in seen:
                seen[C] = compose_v(f, is_isomorphic(C, big))
    return [(C, seen[C]) for C in sorted(seen, key=canonical_key)]


@dataclass(frozen=True)
class Move:
    kind: str  # "collapse" or "expand"
    result: Gaf


@lru_cache(maxsize=4096)
def _neighbours(C, budget):
    out = []
    for e in collapsible_edges(C):
        out.append(Move("collapse", canonical_form(collapse_edges(C, [e])[0])))
    if C.n_edges + 1 <= budget:
        out.extend(Move("expand", D) for D, _ in expansions(C))
    return tuple(out)


@lru_cache(maxsize=1024)
def _search(C, budget):
    """BFS tree of everything reachable from ``C`` within ``budget`` edges."""
    parent = {C: None}
    queue = deque([C])
    while queue:
        X = queue.popleft()
        for mv in _neighbours(X, budget):
            if mv.result not in parent:
                parent[mv.result] = (X, mv.kind)
                queue.append(mv.result)
    return parent


def zigzag_connected(G, G2, edge_budget=None):
    """A sequence of single-edge collapses and expansions from ``G`` to ``G2``, or ``None``.

    No intermediate gaf has more than ``edge_budget`` edges (default: two more
    than the larger input). The path is a list of :class:`Move`, empty when the
    inputs are isomorphic.
    """
    if (G.a_size, G.b_size) != (G2.a_size, G2.b_size):
        raise PreconditionViolated("gafs live over different boundaries")
    if edge_budget is None:
        edge_budget = max(G.n_edges, G2.n_edges) + 2
    C, C2 = canonical_form(G), canonical_form(G2)
    if max(C.n_edges, C2.n_edges) > edge_budget:
        return None
    parent = _search(C, edge_budget)
    if C2 not in parent:
        return None
    path = []
    X = C2
    while parent[X] is not None:
        prev, kind = parent[X]
        path.append(Move(kind, X))
        X = prev
    return path[::-1]

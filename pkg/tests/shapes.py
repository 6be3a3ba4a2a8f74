"""Small named gafs and hypothesis strategies shared by the tests."""

import hypothesis.strategies as st

from graphcob.gaf import Gaf


def from_edges(a, b, v, rho, ends):
    """Gaf with half-edges laid out edge by edge: edge i is ``(2i, 2i+1)``."""
    sigma, upsilon = [], []
    for i, (x, y) in enumerate(ends):
        sigma += [x, y]
        upsilon += [2 * i + 1, 2 * i]
    return Gaf(a, b, v, 2 * len(ends), rho, sigma, upsilon)


def cycle(k):
    return from_edges(0, 0, k, (), [(i, (i + 1) % k) for i in range(k)])


def path(k, a=0):
    """Path with ``k`` edges on ``k + 1`` vertices; the first ``a`` vertices are attaching."""
    return from_edges(a, 0, k + 1 - a, (), [(i, i + 1) for i in range(k)])


LOOP = cycle(1)
TWO_CYCLE = cycle(2)
POINT = Gaf(0, 0, 1, 0)
DUMBBELL = from_edges(0, 0, 2, (), [(0, 0), (0, 1), (1, 1)])
THETA = from_edges(0, 0, 2, (), [(0, 1), (0, 1), (0, 1)])


@st.composite
def gafs(draw, max_a=2, max_b=2, max_v=2, max_e=3, a=None, b=None):
    """Random gafs with arbitrary half-edge order (not just the edge-by-edge layout)."""
    a = draw(st.integers(0, max_a)) if a is None else a
    b = draw(st.integers(0, max_b)) if b is None else b
    # markings need somewhere to land
    v = draw(st.integers(1 if a == 0 and b > 0 else 0, max(max_v, 1 if a == 0 and b > 0 else 0)))
    n = a + v
    m = draw(st.integers(0, max_e)) if n else 0
    ends = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), min_size=m, max_size=m))
    rho = draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=b, max_size=b))
    perm = draw(st.permutations(range(2 * m)))
    sigma = [0] * (2 * m)
    upsilon = [0] * (2 * m)
    for i, (x, y) in enumerate(ends):
        h, k = perm[2 * i], perm[2 * i + 1]
        sigma[h], sigma[k] = x, y
        upsilon[h], upsilon[k] = k, h
    return Gaf(a, b, v, 2 * m, rho, sigma, upsilon)


def random_leaf_like(rng, max_edges=5):
    """A random tree collapsed onto one vertex, with one leaf edge marked by the distinguished color.

    Vertex 0 is attaching with probability 1/2. Palette is ``{0, 1}`` with ``1`` distinguished.
    """
    from graphcob.gaf import edges
    from graphcob.grading import ColoredMorphism
    from graphcob.morphism import collapse_edges

    m = rng.randint(1, max_edges)
    a = rng.randint(0, 1)
    ends = [(rng.randrange(i), i) for i in range(1, m + 1)]
    T = from_edges(a, 0, m + 1 - a, (), ends)
    _, f = collapse_edges(T, edges(T))
    val = [0] * T.n_vertices
    for x in T.sigma:
        val[x] += 1
    E = edges(T)
    leaves = [i for i, (h, k) in enumerate(E) if any(T.sigma[x] >= a and val[T.sigma[x]] == 1 for x in (h, k))]
    special = rng.choice(leaves)
    marking = [1 if i == special else 0 for i in range(len(E))]
    return ColoredMorphism(f, 2, marking)

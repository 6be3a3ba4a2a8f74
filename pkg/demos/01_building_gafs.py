"""Build a few gafs by hand, glue them together and collapse trees.

Run with ``python3 demos/01_building_gafs.py``.
"""

from graphcob import (
    Gaf,
    collapse_edges,
    compose_h,
    edges,
    grade,
    is_isomorphic,
    realize_nf,
    tensor,
    ve,
)
from graphcob.generators import cap, gen_fe, gen_ft

# A gaf over (A, B): attaching vertices come first, then inner vertices.
# A 2-cycle: two inner vertices joined by two edges.
two_cycle = Gaf(0, 0, 2, 4, sigma=(0, 1, 0, 1), upsilon=(1, 0, 3, 2))
print("2-cycle edges:", edges(two_cycle))

# Collapsing one edge (a tree) gives a loop; the morphism has grade 1.
loop, f = collapse_edges(two_cycle, [edges(two_cycle)[0]])
print("collapsed to", loop, "with grade", grade(f))

# The cap (a marked point glued to itself) composed with the edge generator
# closes up into the same loop.
closed = compose_h(cap(), gen_fe())
print("cap then e is the loop:", is_isomorphic(closed, loop) is not None)

# VE counts inner vertices plus edges and is additive under tensor.
t, e = gen_ft(), gen_fe()
print("ve(t) + ve(e) =", ve(t) + ve(e), "= ve(t x e) =", ve(tensor(t, e)))

# The normal form of the realization forgets everything but components,
# boundary legs and first Betti numbers.
print("NF of the 2-cycle:", realize_nf(two_cycle))

"""Zig-zags of collapses and expansions, and reduction to a rose.

Two closed gafs with the same cospan normal form should be joined by a chain
of single-edge collapses and expansions. This script checks that on a small
sector and shows the one-loop graph's automorphism group.

Run with ``python3 demos/03_zigzags_and_reduction.py``.
"""

import itertools

from graphcob import automorphisms, canonical_form, enumerate_gafs, grade, realize_nf, reduce, zigzag_connected
from graphcob.gaf import Gaf

dumbbell = Gaf(0, 0, 2, 6, sigma=(0, 0, 0, 1, 1, 1), upsilon=(1, 0, 3, 2, 5, 4))
theta = Gaf(0, 0, 2, 6, sigma=(0, 1, 0, 1, 0, 1), upsilon=(1, 0, 3, 2, 5, 4))
path = zigzag_connected(dumbbell, theta, 4)
print("dumbbell to theta:", [m.kind for m in path])

closed = enumerate_gafs(0, 0, 3, 2)
groups = {}
for G in closed:
    groups.setdefault(realize_nf(G), []).append(G)
print(f"{len(closed)} closed gafs, {len(groups)} normal forms")
for nf, members in groups.items():
    joined = all(zigzag_connected(G, H) is not None for G, H in itertools.combinations(members, 2))
    ranks = [c.rank for c in nf.components]
    print(f"  component ranks {ranks}: {len(members)} gafs, all connected = {joined}")

triangle = Gaf(0, 0, 3, 6, sigma=(0, 1, 1, 2, 2, 0), upsilon=(1, 0, 3, 2, 5, 4))
loop, f = reduce(triangle)
print("triangle reduces to", canonical_form(loop), "collapsing", grade(f), "edges")
print("|Aut(loop)| =", len(automorphisms(loop)))

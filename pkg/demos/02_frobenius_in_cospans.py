"""The edge and cap generators satisfy the snake identities after realization.

Run with ``python3 demos/02_frobenius_in_cospans.py``.
"""

from graphcob import compose_nf, identity_gaf, identity_nf, realize_nf, tensor, verify_graphlike_axioms
from graphcob.generators import cap, gen_fe

for row in verify_graphlike_axioms():
    print(f"{row['axiom']:<30} {'pass' if row['pass'] else 'FAIL'}")

c, u = cap(), gen_fe()
left = realize_nf(tensor(c, identity_gaf(1)))
right = realize_nf(tensor(identity_gaf(1), u))
snake = compose_nf(left, right)
print("snake:", snake)
print("equals the identity NF:", snake == identity_nf(1))

# Pairing the cap with the edge leaves one closed circle.
print("cap . e:", compose_nf(realize_nf(c), realize_nf(u)))

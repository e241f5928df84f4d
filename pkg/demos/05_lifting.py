"""
Composition with indexing
=========================

Composing f with the indexing gadget gives a two-party function: Alice holds
the address bits, Bob the targets. Block sensitivity grows by at most a
factor m+1 over the fractional block sensitivity of f, degrees multiply, and
cheap trees become cheap protocols.
"""

from bfx import and_, maj, or_, xor
from bfx import measures
from bfx.lifting import (
    Bipartition,
    bs_fbs_lifting_check,
    compose_with_indexing,
    deg_composition_check,
    rank_to_subcube_tree,
    simulate_lifted_dt,
    simulate_protocol,
)
from bfx.trees import depth, rank

for name, f in [("OR_2", or_(2)), ("XOR_2", xor(2)), ("MAJ_3", maj(3))]:
    v = bs_fbs_lifting_check(f, 1)
    F, bp = compose_with_indexing(f, 1)
    print(f"{name:<6} F on {F.arity} bits: bs(F)={v.bs_F} <= 2*fbs(f)={2 * v.fbs_f}   "
          f"deg(F)={measures.degree(F)}")

# %%
# Degrees multiply under composition.
print()
print("deg(XOR_2 o XOR_3) =", deg_composition_check(xor(2), xor(3)).deg_fg)

# %%
# A rank-1 tree of depth 4 becomes a subcube tree of depth <= 3.
tree = measures.min_rank_tree(and_(4))
st = rank_to_subcube_tree(tree, 4)
print()
print(f"AND_4: tree depth {depth(tree)}, rank {rank(tree)} -> subcube tree depth {depth(st)}")
tr = simulate_protocol(st, Bipartition((1, 2), (3, 4)), (1, 1, 1, 1))
print("protocol on 1111:", tr.as_dict())

# %%
# Each query of a decision tree for f costs m address bits plus one target bit.
d, t = measures.decision_tree_depth(xor(2))
tr = simulate_lifted_dt(t, 2, 0b1011_01_0110_10)
print()
print("lifted XOR_2 with m=2:", tr.cost, "bits, budget", tr.budget, "output", tr.output)

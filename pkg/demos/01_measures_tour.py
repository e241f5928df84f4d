"""
A tour of the complexity measures
=================================

Every measure in ``bfx`` is computed exactly from a truth table. This script
builds a handful of familiar functions and prints the full chain
s <= bs <= fbs <= C <= D next to degree, rank and alternation.
"""

from bfx import and_, ind, maj, measure_report, or_, sym, tribes, xor
from bfx import measures

# Functions are plain truth tables; the hex strings printed below can be fed
# straight back to the command line tool.
family = {
    "AND_4": and_(4),
    "OR_4": or_(4),
    "XOR_4": xor(4),
    "MAJ_5": maj(5),
    "TRIBES_2x2": tribes(2, 2),
    "IND_3": ind(1),
    "exactly one of 3": sym(3, "0100"),
}

cols = ("s", "bs", "fbs", "c", "cmin", "deg", "d", "rank", "alt", "subcube_dt", "parity_dt")
print(f"{'function':<18}" + "".join(f"{c:>11}" for c in cols))
for name, f in family.items():
    r = measure_report(f)
    row = r.as_dict()
    row["fbs"] = str(r.fbs)
    print(f"{name:<18}" + "".join(f"{str(row[c]):>11}" for c in cols))

# %%
# Fractional block sensitivity can sit strictly between bs and C. At the all
# ones input of "exactly one of 3" every minimal block is a pair, the pairs
# overlap, and the best fractional packing puts weight 1/2 on each.
f = sym(3, "0100")
print()
print("minimal blocks at 111:", [sorted(b) for b in measures.minimal_sensitive_blocks(f, (1, 1, 1)).blocks])
print("bs at 111 =", measures.block_sensitivity(f, (1, 1, 1)),
      " fbs at 111 =", measures.fractional_block_sensitivity(f, (1, 1, 1)))

# %%
# Degree comes from the Moebius transform. MAJ_3 has the cubic term -2*x1x2x3,
# so its degree is 3.
from bfx import mobius_polynomial  # noqa: E402

print()
print("MAJ_3 =", mobius_polynomial(maj(3)))

# %%
# Optimal trees are returned as objects, not just depths.
d, tree = measures.decision_tree_depth(tribes(2, 2))
print()
print("D(TRIBES_2x2) =", d)
sd, st = measures.optimal_subcube_tree(and_(4))
print("one subcube query decides AND_4:", sd == 1, st.cube)

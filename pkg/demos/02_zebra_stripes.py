"""
Zebra functions and their stripes
=================================

A function is a zebra function when every monotone path from 0^n to 1^n
changes value the same number of times. Its points then split into stripes by
how many changes it takes to reach them.
"""

from collections import Counter

from bfx import TruthTable, or_, xor
from bfx.core import affine_zebra
from bfx.zebra import enumerate_zebra, stripes, threshold_function, verify_zebra_facts

# %%
# Parity is the extreme case: each Hamming level is its own stripe.
sd = stripes(xor(3))
print("XOR_3 stripes:", [len(s) for s in sd.stripes], "colours", sd.values)

# A monotone function has at most two stripes.
sd = stripes(or_(3))
print("OR_3 stripes: ", [len(s) for s in sd.stripes], "colours", sd.values)

# %%
# The lopsided 2-bit function is not a zebra function: one path flips twice,
# the other never does.
lopsided = TruthTable(2, 0b0010)
print("lopsided verdicts:", verify_zebra_facts(lopsided))

# %%
# Reading a linear form with coefficients in (0, 1) through its integer layers gives a zebra function
# whose stripes are layers of the form.
f = affine_zebra(4, ["-1/2", "9/10", "4/5", "7/10", "3/5"], [0, 1, 0, 1, 0])
sd = stripes(f)
print()
print(f, "alt =", sd.k, "stripe sizes", sd.sizes())
for i in range(1, sd.k + 1):
    fi = threshold_function(f, i)
    print(f"  threshold f_{i}: {fi}  monotone={fi.is_monotone()}")
print("  facts:", all(ok for _, ok in verify_zebra_facts(f)))

# %%
# How many zebra functions are there, by alternation number?
for n in range(1, 5):
    counts = Counter(stripes(g).k for g in enumerate_zebra(n))
    print(f"n={n}: {sum(counts.values()):>5} zebra functions, by alternation {dict(sorted(counts.items()))}")

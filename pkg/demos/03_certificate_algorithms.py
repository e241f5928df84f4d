"""
Certificates from alternation
=============================

Two climbing procedures find a small certificate by walking up from 0^n, one
value change at a time. The number of climbs is at most the alternation
number, and each climb adds few coordinates. A third procedure
turns minimum certificates into a decision tree.
"""

from bfx import and_, maj, or_, tribes, xor
from bfx import measures
from bfx.certalgs import cert_via_bs, cert_via_degree, greedy_cert_dtree

for name, f in [("OR_3", or_(3)), ("AND_3", and_(3)), ("MAJ_3", maj(3)), ("TRIBES_2x2", tribes(2, 2))]:
    t1, t2 = cert_via_bs(f), cert_via_degree(f)
    print(f"{name:<11} alt={measures.measure_report(f).alt}  "
          f"by s: {t1.iterations} climbs -> {t1.certificate}   "
          f"by deg: {t2.iterations} climbs -> {t2.certificate}")

# %%
# The greedy tree queries a minimum certificate of whatever function is left.
print()
for name, f in [("AND_2", and_(2)), ("XOR_3", xor(3)), ("TRIBES_2x2", tribes(2, 2))]:
    tr = greedy_cert_dtree(f)
    print(f"{name:<11} worst queries {tr.max_queries}, D = {measures.dt_depth(f)}, computes f: {tr.correct}")

# One run, step by step.
tr = greedy_cert_dtree(tribes(2, 2))
steps, out = tr.steps((0, 1, 1, 1))
print()
print("TRIBES_2x2 on 0111:")
for s in steps:
    print(f"  query {s.certificate}  (Cmin of what is left = {s.restriction_cmin}) answers {dict(s.outcomes)}")
print("  output", out)

"""
Graph properties on a few vertices
==================================

A graph property is a function of the edge indicators that ignores vertex
labels. Each nontrivial property reduces, by fixing and merging edge
variables, either to AND on the edges of a smallest accepted graph or to a
symmetric function.
"""

from bfx import graphs as G

v = 4
print(f"v={v}: {len(G.iso_classes(v))} isomorphism classes on {len(G.edges(v))} edge variables")
for c in G.iso_classes(v):
    print(f"  {G.class_name(v, c):<14} {len(G.edge_list(v, c))} edges")

# %%
for name in ("connected", "contains-triangle", "has-edge", "triangle-free"):
    p = G.named_property(v, name)
    f, w = G.reduce_property(p)
    print(f"{name:<18} case {w.case}, m={w.m}, reduces to {f}"
          f"{' (complemented)' if w.complemented else ''}")

# Labelled predicates that depend on names are caught.
print("edge {1,2} present is a graph property:", G.check_invariance(G.named_property(v, "edge-12")))

# %%
# Larger vertex counts go through the predicate directly.
p = G.named_property(8, "exactly-m-edges:1")
f, w = G.case2_reduction(p)
print()
print("exactly one edge on 8 vertices ->", f, "symmetric:", f.is_symmetric())

# %%
# All 2048 properties on four vertices (a few seconds).
rows, summary = G.theorem_graph_report(4)
print()
print(summary)

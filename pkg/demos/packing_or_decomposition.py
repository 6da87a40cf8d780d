"""Either k disjoint long cycles or a decomposition of bounded width.

On (k+1)-connected graphs the pipeline removes a hitting set H for the
cycles of length >= t. If the block-cut forest of G - H is shallow it
returns a decomposition; otherwise it finds a deep binary tree in the
forest and routes k disjoint long cycles through its leaf blocks and H.
"""
from circpw.corpus import triconnected_graphs
from circpw.gadgets import hub_forest, named
from circpw.graph import complete_graph
from circpw.oracles import max_long_cycle_packing
from circpw.packing import bbr_bound, pipeline_params, thm2_pipeline

# %% parameters
print("hitting-set bound for k=2, t=3:", bbr_bound(2, 3))
p = pipeline_params(2, 3, 9)
print("k=2, t=3, h=9 gives i =", p.i, "and j =", p.j)

# %% decomposition branch
for name, g in (("K5", complete_graph(5)), ("petersen", named("petersen"))):
    out = thm2_pipeline(g, 2, 3)
    print(f"{name}: branch={out.branch} H={out.hitting_set} "
          f"width={out.decomposition.width} budget={out.budget}")

# %% packing branch: two hubs over a tree of bridges shaped like cbt(4)
g, hubs = hub_forest(4, 2)
out = thm2_pipeline(g, 2, 3, h_override=hubs)
print("hub gadget:", out.branch, "R =", out.trace["forest_R"], "i+j =", out.params.depth)
for cyc in out.packing.cycles:
    print("  cycle of length", len(cyc), ":", cyc)

# %% every 3-connected graph on 7 vertices
counts = {"decomposition": 0, "packing": 0}
for g in triconnected_graphs(7):
    out = thm2_pipeline(g, 2, 4)
    out.verify(g)
    counts[out.branch] += 1
    if len(max_long_cycle_packing(g, 4)) < 2:
        assert out.branch == "decomposition"
print("3-connected graphs on 7 vertices, t=4:", counts)

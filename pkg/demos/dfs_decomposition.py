"""Path decompositions of 2-connected graphs from a DFS tree.

Every back edge of a DFS tree spans fewer than t levels when the longest
cycle has length t, and the tree is shallow enough that grouping the
levels gives width at most floor(t/2)(t-1). This script compares that
width with the exact pathwidth on a handful of graphs.
"""
import random

from circpw.bounds import thm1_bound, thm1_decompose
from circpw.corpus import random_biconnected
from circpw.gadgets import named, outerplanar_family
from circpw.graph import complete_graph, cycle_graph
from circpw.oracles import circumference, exact_pathwidth

# %% a few fixed graphs and a few random ones
rng = random.Random(7)
graphs = {
    "K4": complete_graph(4),
    "C8": cycle_graph(8),
    "petersen": named("petersen"),
    "Q": named("Q"),
    "outerplanar(2)": outerplanar_family(2),
}
for idx in range(4):
    graphs[f"random{idx}"] = random_biconnected(rng.randint(6, 12), rng)

# %% circumference, decomposition width, bound and exact pathwidth
print(f"{'graph':>15} {'n':>3} {'t':>3} {'height':>6} {'width':>5} {'bound':>5} {'pw':>3}")
for name, g in graphs.items():
    t = circumference(g)
    cert = thm1_decompose(g, t)
    print(f"{name:>15} {g.n:>3} {t:>3} {cert.dfs_height:>6} {cert.width:>5} "
          f"{thm1_bound(t):>5} {exact_pathwidth(g):>3}")

# %% the certificate is plain JSON
print(thm1_decompose(complete_graph(4)).to_json())

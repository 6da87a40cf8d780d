"""Gluing block decompositions along the block-cut forest.

A graph whose blocks all have pathwidth at most m and whose block-cut
forest has pathwidth at most n has pathwidth at most (m+3)(n+1)-3. The
composition below builds such a decomposition explicitly.
"""
import random

from circpw.bounds import lemma2_decompose
from circpw.corpus import random_block_glued
from circpw.decomposition import validate
from circpw.graph import Graph, block_cut_forest
from circpw.oracles import exact_pathwidth

# %% two triangles sharing a vertex
g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
res = lemma2_decompose(g)
print("two triangles: m =", res.m, "n =", res.n, "bound =", res.bound)
for bag in res.decomposition.bags:
    print("  ", sorted(bag))

# %% random glued graphs: width against the bound, and against the optimum
rng = random.Random(11)
print(f"\n{'n':>3} {'blocks':>6} {'m':>2} {'fn':>2} {'width':>5} {'bound':>5} {'pw':>4}")
for _ in range(8):
    g = random_block_glued(rng.randint(8, 18), rng)
    res = lemma2_decompose(g)
    assert validate(g, res.decomposition).valid
    pw = exact_pathwidth(g) if g.n <= 18 else "-"
    print(f"{g.n:>3} {len(block_cut_forest(g).blocks):>6} {res.m:>2} {res.n:>2} "
          f"{res.decomposition.width:>5} {res.bound:>5} {pw:>4}")

"""Constructive pathwidth bounds.

``thm1_decompose`` turns a depth-first spanning tree of a 2-connected
graph with circumference t into a path decomposition of width at most
floor(t/2)(t-1). ``lemma2_compose`` glues decompositions of the blocks
along a decomposition of the block-cut forest, with width at most
(m+3)(n+1)-3.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .decomposition import (
    PathDecomposition,
    forest_closure_decomposition,
    normalise_bags,
    validate,
)
from .errors import PreconditionError, ProofAssertionError, VerificationError
from .graph import BlockCutForest, Graph, block_cut_forest, dfs_tree
from .oracles import OracleBudget, circumference
from .trees import forest_decomposition


def thm1_bound(t: int) -> int:
    return (t // 2) * (t - 1)


def lemma2_bound(m: int, n: int) -> int:
    return (m + 3) * (n + 1) - 3


@dataclass(frozen=True)
class Thm1Certificate:
    decomposition: PathDecomposition
    circumference: int
    dfs_height: int
    bound: int
    max_span: int

    @property
    def width(self) -> int:
        return self.decomposition.width

    def to_dict(self) -> dict:
        d = self.decomposition.to_dict()
        d["meta"] = {"t": self.circumference, "bound": self.bound, "dfsHeight": self.dfs_height}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def thm1_decompose(g: Graph, t: int | None = None, budget: OracleBudget | None = None) -> Thm1Certificate:
    """Depth-first tree from vertex 0, closure decomposition, and checks.

    ``t`` is the circumference (or any upper bound on it). When omitted it
    is computed exactly, which is only feasible at desk scale. A non-tree
    edge spanning more than t - 1 levels would close a cycle longer than
    t, so it means the supplied ``t`` was wrong.
    """
    if g.n < 3 or len(block_cut_forest(g).blocks) != 1:
        raise PreconditionError("thm1_decompose needs a 2-connected graph on >= 3 vertices")
    if t is None:
        t = circumference(g, budget)
    if t < 3:
        raise PreconditionError(f"circumference bound {t} is impossible for a 2-connected graph")
    tree = dfs_tree(g, 0)
    h = tree.heights
    max_span = 0
    for u, v in g.edges():
        span = abs(h[u] - h[v])
        if span > t - 1:
            raise ProofAssertionError(
                f"edge {u}-{v} spans {span} levels, so the circumference exceeds t={t}",
                {"edge": (u, v), "span": span, "t": t})
        max_span = max(max_span, span)
    bound = thm1_bound(t)
    if tree.height > bound:
        raise ProofAssertionError(
            f"DFS height {tree.height} exceeds {bound}", {"height": tree.height, "t": t})
    d = forest_closure_decomposition(tree)
    report = validate(g, d)
    if not report.valid:
        raise VerificationError(report.summary())
    return Thm1Certificate(d, t, tree.height, bound, max_span)


def trivial_block_decomposition(block: tuple[int, ...]) -> PathDecomposition:
    """The single bag of a bridge or isolated-vertex block."""
    if len(block) > 2:
        raise ValueError("only bridges and isolated vertices have a trivial decomposition")
    return PathDecomposition([block])


def block_decompositions(g: Graph, bcf: BlockCutForest, t: int | None = None,
                         budget: OracleBudget | None = None) -> dict[int, PathDecomposition]:
    """A decomposition per block, in host vertex ids.

    Bridges and isolated vertices get their single bag; 2-connected blocks
    go through :func:`thm1_decompose` with ``t`` as the circumference bound
    (computed per block when omitted).
    """
    out = {}
    for b, blk in enumerate(bcf.blocks):
        if len(blk) <= 2:
            out[b] = trivial_block_decomposition(blk)
        else:
            sub, ids = g.induced_subgraph(blk)
            out[b] = thm1_decompose(sub, t, budget).decomposition.relabel(ids)
    return out


@dataclass(frozen=True)
class Lemma2Result:
    decomposition: PathDecomposition
    m: int
    n: int

    @property
    def bound(self) -> int:
        return lemma2_bound(self.m, self.n)


def lemma2_compose(g: Graph, bcf: BlockCutForest, forest_decomp: PathDecomposition,
                   block_decomps: Mapping[int, PathDecomposition]) -> PathDecomposition:
    """Compose block decompositions into one for ``g``.

    Recursion per component of the block-cut forest: take a path P of the
    forest through a node x of the first bag and a node y of the last bag,
    extended greedily (smallest ids) until both ends are leaves, hence
    blocks. The blocks on P and the blocks hanging off the cut vertices of
    P form G0; its decomposition chains the blocks of P, with the
    neighbouring cut vertices added to their bags, and slots in each
    hanging block (plus its cut vertex) after the preceding block of P.
    After normalising, every remaining component of G - G0 is decomposed
    recursively using the forest decomposition restricted to it (which
    lost a vertex of P in every bag) and spliced into the bag where its
    attaching cut vertex first appears.
    """
    return _compose(g, bcf, forest_decomp, block_decomps).decomposition


def _compose(g, bcf, forest_decomp, block_decomps) -> Lemma2Result:
    if bcf != block_cut_forest(g):
        raise PreconditionError("block-cut forest does not belong to this graph")
    forest = bcf.forest_graph()
    report = validate(forest, forest_decomp)
    if not report.valid:
        raise PreconditionError("forest decomposition invalid: " + report.summary())
    if set(block_decomps) != set(range(len(bcf.blocks))):
        raise PreconditionError("need exactly one decomposition per block")
    m = 0
    for b, blk in enumerate(bcf.blocks):
        sub, ids = g.induced_subgraph(blk)
        pos = {v: i for i, v in enumerate(ids)}
        d = block_decomps[b]
        if any(v not in pos for bag in d.bags for v in bag):
            raise PreconditionError(f"decomposition of block {b} uses vertices outside it")
        local = d.relabel(pos)
        rep = validate(sub, local)
        if not rep.valid:
            raise PreconditionError(f"decomposition of block {b} invalid: " + rep.summary())
        m = max(m, d.width)
    n = forest_decomp.width if forest_decomp.bags else 0

    composer = _Composer(bcf, forest, block_decomps)
    bags: list[frozenset[int]] = []
    for comp in forest.components():
        bags.extend(composer.component(set(comp), forest_decomp.bags))
    out = PathDecomposition(bags).canonical()
    if not out.bags:
        out = PathDecomposition([frozenset()])
    bound = lemma2_bound(m, n)
    if g.n and out.width > bound:
        raise ProofAssertionError(f"composed width {out.width} exceeds {bound}",
                                  {"m": m, "n": n, "width": out.width})
    rep = validate(g, out)
    if not rep.valid:
        raise VerificationError("composed decomposition invalid: " + rep.summary())
    return Lemma2Result(out, m, n)


class _Composer:
    def __init__(self, bcf: BlockCutForest, forest: Graph, block_decomps):
        self.bcf = bcf
        self.forest = forest
        self.block_decomps = block_decomps

    def _bags_of(self, node: int) -> list[frozenset[int]]:
        return list(self.block_decomps[node].bags)

    def component(self, nodes: set[int], xbags) -> list[frozenset[int]]:
        """Decomposition of the subgraph formed by the blocks in ``nodes``
        (a connected piece of the forest)."""
        bcf, forest = self.bcf, self.forest
        if len(nodes) == 1:
            (b,) = nodes
            return self._bags_of(b)
        restricted = [bag & nodes for bag in xbags]
        restricted = [bag for bag in restricted if bag]
        x = min(restricted[0])
        y = min(restricted[-1])
        path = forest.bfs_path(x, y, within=nodes)
        path = self._extend(path, nodes)
        on_path = set(path)

        blocks_p = path[0::2]
        cuts_p = [bcf.cut_vertex_of(c) for c in path[1::2]]
        g0_blocks = set(blocks_p)
        hanging: list[list[int]] = []
        for c in path[1::2]:
            hang = sorted(w for w in forest.neighbors(c) if w in nodes and w not in on_path)
            hanging.append(hang)
            g0_blocks.update(hang)

        seq: list[frozenset[int]] = []
        s = len(blocks_p)
        for i, b in enumerate(blocks_p):
            extra = set()
            if i > 0:
                extra.add(cuts_p[i - 1])
            if i < s - 1:
                extra.add(cuts_p[i])
            seq.extend(bag | extra for bag in self._bags_of(b))
            if i < s - 1:
                for c_blk in hanging[i]:
                    seq.extend(bag | {cuts_p[i]} for bag in self._bags_of(c_blk))
        y_bags = normalise_bags(seq)

        # Blocks outside G0 and the cut vertices joining two of them form
        # the block-cut forest of the rest.
        rest_blocks = {b for b in nodes if bcf.is_block_node(b)} - g0_blocks
        rest_cuts = {c for c in nodes if not bcf.is_block_node(c)
                     and sum(1 for w in forest.neighbors(c) if w in rest_blocks) >= 2}
        rest_nodes = rest_blocks | rest_cuts
        g0_vertices = set().union(*(bag for bag in y_bags))
        first = {}
        for i, bag in enumerate(y_bags):
            for v in bag:
                first.setdefault(v, i)

        splice: dict[int, list[frozenset[int]]] = {}
        for comp in forest.components(rest_nodes):
            comp_set = set(comp)
            sub_bags = self.component(comp_set, xbags)
            comp_vertices = set().union(*(set(bcf.blocks[b]) for b in comp_set if bcf.is_block_node(b)))
            shared = comp_vertices & g0_vertices
            if len(shared) != 1:
                raise ProofAssertionError(
                    "a remaining component meets G0 in more than one vertex",
                    {"component": sorted(comp_set), "shared": sorted(shared)})
            (w,) = shared
            at = first[w]
            if at in splice:
                raise ProofAssertionError("two components attach at the same bag", {"bag": at})
            splice[at] = sub_bags

        out = []
        for i, bag in enumerate(y_bags):
            if i in splice:
                out.extend(bag | h for h in splice[i])
            else:
                out.append(bag)
        return out

    def _extend(self, path: list[int], nodes: set[int]) -> list[int]:
        """Grow both ends of a forest path until they are leaves."""
        forest = self.forest
        for _ in range(2):
            on = set(path)
            while True:
                end = path[-1]
                nxt = [w for w in forest.neighbors(end) if w in nodes and w not in on]
                if not nxt:
                    break
                path.append(min(nxt))
                on.add(path[-1])
            path.reverse()
        return path


def lemma2_decompose(g: Graph, t: int | None = None,
                     budget: OracleBudget | None = None) -> Lemma2Result:
    """Block-cut composition with canonical inputs: block decompositions
    from :func:`block_decompositions` and the rooted decomposition of the
    block-cut forest."""
    bcf = block_cut_forest(g)
    blocks = block_decompositions(g, bcf, t, budget)
    fdec, _, _ = forest_decomposition(bcf.forest_graph())
    return _compose(g, bcf, fdec, blocks)

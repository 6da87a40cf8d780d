"""Packing versus covering of long cycles in (k+1)-connected graphs.

Either a small hitting set H leaves G - H with short cycles only, and then
a decomposition of G - H (built block by block and glued along its
block-cut forest) plus H in every bag has bounded width; or the block-cut
forest of G - H has a deep complete-binary-tree minor, and k disjoint long
cycles can be routed through its leaf blocks and the vertices of H.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from ._bits import find_long_cycle, mask_of
from .bounds import block_decompositions, lemma2_bound, lemma2_compose, thm1_decompose
from .decomposition import PathDecomposition, add_to_every_bag
from .errors import BudgetError, PreconditionError, ProofAssertionError, VerificationError
from .graph import BlockCutForest, Graph, block_cut_forest, is_k_connected, vertex_connectivity
from .oracles import DEFAULT_CEILINGS, OracleBudget, _admit
from .trees import cbt, extract_cbt_minor, forest_decomposition, minor_to_subdivision, rooted_pw_map


# -- closed forms ------------------------------------------------------------

def bbr_bound(k: int, t: int, scheme: str = "bbr", constant: float | None = None) -> int:
    """Size of a hitting set guaranteed when there are no k disjoint cycles
    of length >= t.

    ``scheme="bbr"`` is 13t(k-1)(k-2) + (2t+3)(k-1). ``scheme="fh"`` models
    an O(t k log k) budget as ceil(constant * t * k * log2 k); the constant
    has to be supplied because no explicit value is known.
    """
    if k < 1 or t < 3:
        raise ValueError("need k >= 1 and t >= 3")
    if scheme == "bbr":
        return 13 * t * (k - 1) * (k - 2) + (2 * t + 3) * (k - 1)
    if scheme == "fh":
        if constant is None:
            raise ValueError("the fh scheme needs an explicit constant")
        return math.ceil(constant * t * k * math.log2(k)) if k > 1 else 0
    raise ValueError(f"unknown scheme {scheme!r}")


@dataclass(frozen=True)
class PipelineParams:
    k: int
    t: int
    h: int
    i: int
    j: int
    h_raw: int
    floored: bool

    @property
    def depth(self) -> int:
        return self.i + self.j

    def to_dict(self) -> dict:
        return {"k": self.k, "t": self.t, "h": self.h, "i": self.i, "j": self.j}


def pipeline_params(k: int, t: int, h_raw: int) -> PipelineParams:
    """i = floor(log2((k-1)(2h-2k+1))) + 1 and j = ceil(t/2 + log2(h-k+1))
    with h = max(h_raw, k), both in exact integer arithmetic."""
    if k < 2:
        raise PreconditionError("parameters need k >= 2 (k = 1 is the 2-connected case)")
    if t < 3:
        raise ValueError("t must be at least 3")
    h = max(h_raw, k)
    i = ((k - 1) * (2 * h - 2 * k + 1)).bit_length()
    # smallest j with 2j - t >= 2 log2(h - k + 1)
    sq = (h - k + 1) ** 2
    j = (t + 1) // 2
    while 2 * j - t < 0 or (1 << (2 * j - t)) < sq:
        j += 1
    return PipelineParams(k, t, h, i, j, h_raw, h != h_raw)


# -- hitting sets ----------------------------------------------------------------

@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]
    threshold: int

    def __len__(self):
        return len(self.vertices)


def _greedy_packing(masks, alive: int, t: int) -> int:
    count = 0
    while True:
        cyc = find_long_cycle(masks, alive, t)
        if cyc is None:
            return count
        count += 1
        alive &= ~mask_of(cyc)


def min_hitting_set(g: Graph, t: int, budget: OracleBudget | None = None) -> HittingSet:
    """Smallest H with circumference(g - H) <= t - 1; among those the
    lexicographically smallest sorted tuple.

    Branch and bound: find a cycle of length >= t and branch on which of
    its vertices enters H, forbidding the vertices branched on earlier.
    Disjoint long cycles found greedily give the lower bound.
    """
    deadline = _admit(g.n, "hitting_set", budget)
    if t < 3:
        raise ValueError("t must be at least 3")
    masks = g.masks
    full = (1 << g.n) - 1

    def feasible(alive: int, s: int, forbidden: int) -> bool:
        deadline.check()
        cyc = find_long_cycle(masks, alive, t)
        if cyc is None:
            return True
        if s == 0 or _greedy_packing(masks, alive, t) > s:
            return False
        banned = forbidden
        for c in cyc:
            if not (banned >> c) & 1:
                if feasible(alive & ~(1 << c), s - 1, banned):
                    return True
                banned |= 1 << c
        return False

    size = _greedy_packing(masks, full, t)
    while not feasible(full, size, 0):
        size += 1
    chosen: list[int] = []
    alive = full
    floor = -1
    for left in range(size, 0, -1):
        for v in range(floor + 1, g.n):
            # everything at or below v that is not chosen stays in the graph
            forbidden = ((2 << v) - 1) & alive & ~(1 << v)
            if feasible(alive & ~(1 << v), left - 1, forbidden):
                chosen.append(v)
                alive &= ~(1 << v)
                floor = v
                break
        else:
            raise AssertionError("lexicographic pass lost the optimum")
    return HittingSet(tuple(chosen), t)


def _long_cycle_in_blocks(g: Graph, t: int) -> list[int] | None:
    """A cycle of length >= t, searched block by block so that large graphs
    with small blocks stay cheap."""
    masks = g.masks
    for blk in block_cut_forest(g).blocks:
        if len(blk) < max(t, 3):
            continue
        if len(blk) > DEFAULT_CEILINGS["circumference"]:
            raise BudgetError(f"block of {len(blk)} vertices is too large to search for long cycles")
        cyc = find_long_cycle(masks, mask_of(blk), t)
        if cyc is not None:
            return cyc
    return None


# -- cycle packings --------------------------------------------------------------

@dataclass(frozen=True)
class CyclePacking:
    cycles: tuple[tuple[int, ...], ...]
    min_length: int

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))

    def __len__(self):
        return len(self.cycles)

    def problems(self, g: Graph) -> list[str]:
        out = []
        owner: dict[int, int] = {}
        for idx, cyc in enumerate(self.cycles):
            if len(cyc) < 3:
                out.append(f"cycle {idx} has fewer than 3 vertices")
            if len(cyc) < self.min_length:
                out.append(f"cycle {idx} has length {len(cyc)} < {self.min_length}")
            if len(set(cyc)) != len(cyc):
                out.append(f"cycle {idx} repeats a vertex")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
                    out.append(f"cycle {idx} uses non-edge {a}-{b}")
            for v in cyc:
                if v in owner and owner[v] != idx:
                    out.append(f"cycles {owner[v]} and {idx} share vertex {v}")
                owner[v] = idx
        return out

    def verify(self, g: Graph) -> None:
        issues = self.problems(g)
        if issues:
            raise VerificationError("invalid cycle packing: " + "; ".join(issues))

    def to_dict(self) -> dict:
        return {"min_length": self.min_length, "cycles": [list(c) for c in self.cycles]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> CyclePacking:
        return cls(tuple(tuple(c) for c in d["cycles"]), d["min_length"])


@dataclass(frozen=True)
class TreeCycle:
    """A cycle of the block-cut forest plus one outside vertex: ``anchor``
    closes a forest path that starts and ends at leaf blocks. ``route``
    alternates block and cut-vertex node ids."""

    anchor: int
    route: tuple[int, ...]


def _path_in_block(g: Graph, block: tuple[int, ...], a: int, b: int,
                   prefer_avoid: set[int], must_avoid: set[int]) -> list[int]:
    """Path a..b inside ``block``; tries to avoid ``prefer_avoid`` as well."""
    if a == b:
        return [a]
    for avoid in (prefer_avoid | must_avoid, must_avoid):
        p = g.bfs_path(a, b, avoid=avoid - {a, b}, within=block)
        if p is not None:
            return p
    raise ProofAssertionError(
        f"no {a}-{b} path in block {block} avoiding {sorted(must_avoid)}",
        {"block": block, "avoid": sorted(must_avoid)})


def reroute_cycles(g: Graph, bcf: BlockCutForest, tree_cycles: list[TreeCycle],
                   min_length: int = 3) -> CyclePacking:
    """Turn forest cycles into vertex-disjoint cycles of ``g``.

    ``bcf`` is the block-cut forest of ``g`` minus the anchors. The anchor
    enters the first block at a non-cut neighbour x, each block is crossed
    from one cut vertex to the next while keeping clear of cut vertices
    used by the other routes, and the last block is left at a non-cut
    neighbour y of the anchor.
    """
    forest = bcf.forest_graph()
    for tc in tree_cycles:
        r = tc.route
        if len(r) % 2 == 0:
            raise PreconditionError("a route must alternate block, cut, ..., block")
        for idx, node in enumerate(r):
            if bcf.is_block_node(node) != (idx % 2 == 0):
                raise PreconditionError(f"route node {node} at position {idx} has the wrong kind")
        for a, b in zip(r, r[1:]):
            if not forest.has_edge(a, b):
                raise PreconditionError(f"route step {a}-{b} is not a forest edge")
    claimed: dict[int, int] = {}
    for idx, tc in enumerate(tree_cycles):
        for node in tc.route[1::2]:
            v = bcf.cut_vertex_of(node)
            if v in claimed:
                raise PreconditionError(f"routes {claimed[v]} and {idx} share cut vertex {v}")
            claimed[v] = idx
    cut_set = set(bcf.cut_vertices)

    cycles = []
    for idx, tc in enumerate(tree_cycles):
        blocks = [bcf.blocks[b] for b in tc.route[0::2]]
        cuts = [bcf.cut_vertex_of(c) for c in tc.route[1::2]]
        others = {v for v, owner in claimed.items() if owner != idx}
        ends = []
        for blk in (blocks[0], blocks[-1]):
            nbrs = [u for u in blk if u not in cut_set and u not in ends
                    and g.has_edge(tc.anchor, u)]
            if not nbrs:
                raise PreconditionError(f"anchor {tc.anchor} has no free non-cut neighbour in block {blk}")
            ends.append(min(nbrs))
        x, y = ends
        stops = [x] + cuts + [y]
        walk = [tc.anchor]
        used = {tc.anchor}
        for blk, a, b in zip(blocks, stops, stops[1:]):
            prefer = (set(blk) & cut_set) - {a, b}
            p = _path_in_block(g, blk, a, b, prefer, others | (used - {a}))
            walk.extend(p[1:] if walk[-1] == p[0] else p)
            used.update(p)
        cycles.append(tuple(walk))
    packing = CyclePacking(tuple(cycles), min_length)
    issues = packing.problems(g)
    if issues:
        raise ProofAssertionError("rerouted cycles fail verification: " + "; ".join(issues),
                                  {"cycles": [list(c) for c in cycles]})
    return packing


# -- the pipeline ------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineOutcome:
    branch: str
    hitting_set: tuple[int, ...]
    params: PipelineParams | None
    decomposition: PathDecomposition | None = None
    packing: CyclePacking | None = None
    budget: int | None = None
    trace: dict = field(default_factory=dict, compare=False)

    def verify(self, g: Graph) -> None:
        from .decomposition import validate

        if (self.decomposition is None) == (self.packing is None):
            raise VerificationError("exactly one certificate must be present")
        if self.decomposition is not None:
            report = validate(g, self.decomposition)
            if not report.valid:
                raise VerificationError(report.summary())
            if self.budget is not None and self.decomposition.width > self.budget:
                raise VerificationError(f"width {self.decomposition.width} over budget {self.budget}")
        else:
            self.packing.verify(g)
            if self.params is not None and len(self.packing) < self.params.k:
                raise VerificationError(f"only {len(self.packing)} cycles, need {self.params.k}")

    def to_dict(self) -> dict:
        cert = (self.decomposition.to_dict() if self.decomposition is not None
                else self.packing.to_dict())
        return {
            "branch": self.branch,
            "H": list(self.hitting_set),
            "params": None if self.params is None else
            {"h": self.params.h, "i": self.params.i, "j": self.params.j},
            "certificate": cert,
            "budget": self.budget,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def thm2_pipeline(g: Graph, k: int, t: int, h_override=None,
                  budget: OracleBudget | None = None) -> PipelineOutcome:
    """Either a decomposition of width at most (m+3)(i+j+1)-3+|H| or k
    vertex-disjoint cycles of length >= t.

    ``h_override`` replaces the minimum hitting set; it must still leave
    no cycle of length >= t.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        cert = thm1_decompose(g, None, budget)
        return PipelineOutcome("decomposition", (), None, cert.decomposition, None, cert.bound,
                               {"delegated": "k=1", "t": cert.circumference})
    if not is_k_connected(g, k + 1):
        raise PreconditionError(f"graph is {vertex_connectivity(g)}-connected, need {k + 1}")
    if h_override is None:
        H = min_hitting_set(g, t, budget).vertices
    else:
        H = tuple(sorted(set(h_override)))
        if any(not 0 <= v < g.n for v in H):
            raise PreconditionError("hitting set names a vertex outside the graph")
    rest, ids = g.remove_vertices(H)
    if h_override is not None:
        cyc = _long_cycle_in_blocks(rest, t)
        if cyc is not None:
            raise PreconditionError(
                f"override leaves the cycle {[ids[v] for v in cyc]} of length {len(cyc)} >= {t}")
    params = pipeline_params(k, t, len(H))
    trace: dict = {"H": list(H), "params": params.to_dict()}
    if params.floored:
        trace["h_floor"] = f"|H| = {len(H)} raised to k = {k}"

    bcf = block_cut_forest(rest)
    forest = bcf.forest_graph()
    fdec, n_star, roots = forest_decomposition(forest)
    trace["forest_R"] = n_star
    trace["roots"] = roots

    if n_star <= params.depth:
        if rest.n:
            # G - H has circumference <= t - 1, which bounds every block
            blocks = block_decompositions(rest, bcf, t - 1, budget)
            composed = lemma2_compose(rest, bcf, fdec, blocks).relabel(ids)
        else:
            composed = PathDecomposition([()])
        full = add_to_every_bag(composed, H)
        m = max(((t - 1) // 2) * (t - 2), 1)
        limit = lemma2_bound(m, params.depth) + len(H)
        trace["m"] = m
        if full.width > limit:
            raise ProofAssertionError(f"width {full.width} exceeds {limit}", trace)
        out = PipelineOutcome("decomposition", H, params, full, None, limit, trace)
        out.verify(g)
        return out

    packing = _packing_branch(g, rest, ids, H, bcf, forest, roots, params, trace)
    out = PipelineOutcome("packing", H, params, None, packing, None, trace)
    out.verify(g)
    return out


def _packing_branch(g, rest, ids, H, bcf, forest, roots, params, trace) -> CyclePacking:
    k, t, i, j = params.k, params.t, params.i, params.j
    q = params.depth
    root = max(roots, key=lambda r: (r[1], -r[0]))[0]
    comp = next(c for c in forest.components() if root in c)
    sub, sub_ids = forest.induced_subgraph(comp)
    local_root = sub_ids.index(root)
    model = extract_cbt_minor(sub, local_root, q, rooted_pw_map(sub, local_root))
    subdiv = minor_to_subdivision(sub, model)
    if subdiv.max_degree() > 3:
        raise ProofAssertionError("subdivision has a vertex of degree above 3", trace)
    pattern = cbt(q)
    leaf_node = {}
    for label in range(1, 2 ** q + 1):
        node = sub_ids[subdiv.branch[pattern.leaf(label)]]
        if forest.degree(node) != 1 or not bcf.is_block_node(node):
            raise ProofAssertionError(f"leaf {label} of the subdivision is not a leaf block", trace)
        leaf_node[label] = node

    # hub adjacency goes through the non-cut vertices of a leaf block
    cut_set = set(bcf.cut_vertices)
    hub_nbrs: dict[int, set[int]] = {}
    for label, node in leaf_node.items():
        inner = [u for u in bcf.blocks[node] if u not in cut_set]
        hub_nbrs[label] = {v for v in H if any(g.has_edge(v, ids[u]) for u in inner)}
        if len(hub_nbrs[label]) < k:
            raise ProofAssertionError(
                f"leaf block {bcf.blocks[node]} sees only {len(hub_nbrs[label])} hitting-set vertices",
                trace)
    d = {v: sum(1 for label in leaf_node if v in hub_nbrs[label]) for v in H}
    X = sorted(H, key=lambda v: (-d[v], v))[:k]
    spread = params.h - k + 1
    if d[X[-1]] * spread < 2 ** q:
        raise ProofAssertionError("k-th largest degree is below 2^(i+j)/(h-k+1)", trace)

    good: dict[int, list[int]] = {}
    for v in X:
        good[v] = []
        for m_idx in range(2 ** i):
            labels = range(m_idx * 2 ** j + 1, (m_idx + 1) * 2 ** j + 1)
            seen = sum(1 for label in labels if v in hub_nbrs[label])
            if seen * spread >= 2 ** (j - 1):
                good[v].append(m_idx)
        if len(good[v]) < k:
            raise ProofAssertionError(f"vertex {v} is in only {len(good[v])} good pairs", trace)
    taken: set[int] = set()
    match: dict[int, int] = {}
    for v in sorted(X, key=lambda v: (len(good[v]), v)):
        free = [m_idx for m_idx in good[v] if m_idx not in taken]
        if not free:
            raise ProofAssertionError(f"greedy matching failed at {v}", {**trace, "good": good})
        match[v] = free[0]
        taken.add(free[0])
    trace["good_pairs"] = {str(v): good[v] for v in X}
    trace["matching"] = {str(v): m for v, m in match.items()}

    tree_cycles = []
    for v in X:
        m_idx = match[v]
        base = m_idx * 2 ** j
        labels = [label for label in range(base + 1, base + 2 ** j + 1) if v in hub_nbrs[label]]
        a, b = labels[0], labels[-1]
        route = forest.bfs_path(leaf_node[a], leaf_node[b])
        floor = math.ceil(2 * math.log2(b - a + 1) - 1e-9)
        if len(route) - 1 < floor:
            raise ProofAssertionError(f"forest path {a}..{b} shorter than 2 log2(b-a+1)", trace)
        tree_cycles.append(TreeCycle(v, tuple(route)))
    trace["tree_cycles"] = [[tc.anchor, list(tc.route)] for tc in tree_cycles]

    lifted = _lift_forest(g, rest, ids, bcf)
    packing = reroute_cycles(g, lifted, tree_cycles, min_length=3)
    short = [c for c in packing.cycles if len(c) < t]
    if short:
        raise ProofAssertionError(
            f"rerouted cycle of length {min(len(c) for c in short)} is shorter than t={t}",
            {**trace, "cycles": [list(c) for c in packing.cycles]})
    return CyclePacking(packing.cycles, t)


def _lift_forest(g: Graph, rest: Graph, ids, bcf: BlockCutForest) -> BlockCutForest:
    """The block-cut forest of G - H with vertices renamed to ids of G."""
    return BlockCutForest(
        g.n,
        tuple(tuple(ids[u] for u in blk) for blk in bcf.blocks),
        tuple(tuple((ids[a], ids[b]) for a, b in es) for es in bcf.block_edges),
        tuple(ids[c] for c in bcf.cut_vertices),
    )

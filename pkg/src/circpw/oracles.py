"""Exact exponential-time reference solvers.

Every solver refuses instances above its vertex ceiling (or past its time
limit) with :class:`~circpw.errors.BudgetError`; none of them ever returns
an approximate answer. Each returns a witness alongside the number.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from ._bits import Deadline, bits, component_masks, mask_of, reach
from .decomposition import PathDecomposition
from .errors import BudgetError
from .graph import Graph, RootedForest, block_cut_forest

DEFAULT_CEILINGS = {
    "pathwidth": 20,
    "treedepth": 16,
    "circumference": 20,
    "longest_path": 20,
    "minor_host": 16,
    "minor_pattern": 6,
    "transversal": 18,
    "packing": 14,
    "hitting_set": 18,
}


@dataclass(frozen=True)
class OracleBudget:
    """Per-call override of the vertex ceiling and an optional wall-clock cap."""

    max_vertices: int | None = None
    time_limit: float | None = None


def _admit(n: int, key: str, budget: OracleBudget | None) -> Deadline:
    ceiling = DEFAULT_CEILINGS[key]
    if budget is not None and budget.max_vertices is not None:
        ceiling = budget.max_vertices
    if n > ceiling:
        raise BudgetError(f"{key}: {n} vertices exceeds the ceiling of {ceiling}")
    return Deadline(None if budget is None else budget.time_limit, key)


# -- pathwidth -----------------------------------------------------------

@dataclass(frozen=True)
class PathwidthResult:
    width: int
    ordering: tuple[int, ...]

    def decomposition(self, g: Graph) -> PathDecomposition:
        return ordering_to_decomposition(g, self.ordering)


def ordering_to_decomposition(g: Graph, ordering) -> PathDecomposition:
    """Bag i holds the i-th vertex plus every earlier vertex that still has a
    neighbour at position >= i; width equals the vertex separation."""
    pos = {v: i for i, v in enumerate(ordering)}
    last = {v: max([pos[w] for w in g.neighbors(v)] + [pos[v]]) for v in ordering}
    bags = []
    for i, v in enumerate(ordering):
        bags.append(frozenset([v] + [u for u in ordering[:i] if last[u] >= i]))
    return PathDecomposition(bags)


def solve_pathwidth(g: Graph, budget: OracleBudget | None = None) -> PathwidthResult:
    """Vertex separation number by dynamic programming over vertex subsets.

    f(S) = max(|boundary(S)|, min over v in S of f(S - v)), where the
    boundary counts vertices of S with a neighbour outside S. Subsets are
    processed layer by layer in popcount order with numpy gathers.
    """
    deadline = _admit(g.n, "pathwidth", budget)
    n = g.n
    if n == 0:
        return PathwidthResult(0, ())
    size = 1 << n
    subsets = np.arange(size, dtype=np.int64)
    boundary = np.zeros(size, dtype=np.int8)
    popcount = np.zeros(size, dtype=np.int8)
    for u, nb in enumerate(g.masks):
        inside = ((subsets >> u) & 1).astype(bool)
        popcount += inside
        boundary += inside & ((subsets & nb) != nb)
    order = np.argsort(popcount, kind="stable")
    starts = np.searchsorted(popcount[order], np.arange(n + 2))
    f = np.full(size, 127, dtype=np.int8)
    f[0] = 0
    for p in range(1, n + 1):
        deadline.check()
        idx = order[starts[p]:starts[p + 1]]
        best = np.full(idx.shape, 127, dtype=np.int8)
        for v in range(n):
            has = ((idx >> v) & 1).astype(bool)
            sub = idx[has] ^ (1 << v)
            best[has] = np.minimum(best[has], f[sub])
        f[idx] = np.maximum(best, boundary[idx])
    width = int(f[size - 1])
    rev = []
    s = size - 1
    while s:
        for v in bits(s):
            if f[s ^ (1 << v)] <= f[s]:
                rev.append(v)
                s ^= 1 << v
                break
    return PathwidthResult(width, tuple(reversed(rev)))


def exact_pathwidth(g: Graph, budget: OracleBudget | None = None) -> int:
    return solve_pathwidth(g, budget).width


# -- treedepth -----------------------------------------------------------

@dataclass(frozen=True)
class TreedepthResult:
    depth: int
    forest: RootedForest


def solve_treedepth(g: Graph, budget: OracleBudget | None = None) -> TreedepthResult:
    """td = 1 on a single vertex, max over components, otherwise
    1 + min over v of td(G - v); memoised over vertex subsets."""
    deadline = _admit(g.n, "treedepth", budget)
    masks = g.masks
    if g.n == 0:
        return TreedepthResult(0, RootedForest(()))
    choice: dict[int, int] = {}

    @lru_cache(maxsize=None)
    def td_connected(mask: int) -> int:
        deadline.check()
        k = mask.bit_count()
        if k == 1:
            choice[mask] = mask.bit_length() - 1
            return 1
        if all((masks[v] & mask) | (1 << v) == mask for v in bits(mask)):
            choice[mask] = (mask & -mask).bit_length() - 1
            return k
        best = k + 1
        for v in bits(mask):
            rest = mask ^ (1 << v)
            val = 1
            for c in component_masks(masks, rest):
                val = max(val, 1 + td_connected(c))
                if val >= best:
                    break
            if val < best:
                best = val
                choice[mask] = v
        return best

    full = (1 << g.n) - 1
    depth = max(td_connected(c) for c in component_masks(masks, full))

    parent: list[int | None] = [None] * g.n

    def build(mask: int, par: int | None) -> None:
        stack = [(mask, par)]
        while stack:
            m, p = stack.pop()
            v = choice[m] if m in choice else None
            if v is None:
                td_connected(m)
                v = choice[m]
            parent[v] = p
            for c in component_masks(masks, m ^ (1 << v)):
                stack.append((c, v))

    for c in component_masks(masks, full):
        build(c, None)
    return TreedepthResult(depth, RootedForest(tuple(parent)))


def exact_treedepth(g: Graph, budget: OracleBudget | None = None) -> int:
    return solve_treedepth(g, budget).depth


# -- longest cycles and paths ---------------------------------------------

def longest_cycle(g: Graph, budget: OracleBudget | None = None) -> list[int]:
    """A longest cycle as a vertex sequence; empty if ``g`` is acyclic.

    Searched block by block: for each start s (smallest vertex of the
    cycle) extend simple paths over larger vertices, pruning when the
    vertices still reachable cannot beat the best cycle found.
    """
    deadline = _admit(g.n, "circumference", budget)
    masks = g.masks
    best: list[int] = []
    for blk in block_cut_forest(g).blocks:
        if len(blk) < 3 or len(blk) <= len(best):
            continue
        bmask = mask_of(blk)
        for s in blk:
            allowed = bmask & ~((2 << s) - 1)
            if allowed.bit_count() + 1 <= len(best):
                break
            path = [s]

            def extend(used: int) -> bool:
                nonlocal best
                deadline.check()
                v = path[-1]
                if len(path) >= 3 and (masks[v] >> s) & 1 and len(path) > len(best):
                    best = list(path)
                    if len(best) == len(blk):
                        return True
                free = allowed & ~used
                if len(path) + reach(masks, v, free | (1 << v)).bit_count() - 1 <= len(best):
                    return False
                for w in bits(masks[v] & free):
                    path.append(w)
                    if extend(used | (1 << w)):
                        return True
                    path.pop()
                return False

            if extend(1 << s):
                break
    return best


def circumference(g: Graph, budget: OracleBudget | None = None) -> int:
    return len(longest_cycle(g, budget))


def longest_path(g: Graph, budget: OracleBudget | None = None) -> list[int]:
    """A longest path as a vertex sequence (a single vertex if edgeless)."""
    deadline = _admit(g.n, "longest_path", budget)
    masks = g.masks
    if g.n == 0:
        return []
    best = [0]
    for comp in component_masks(masks, (1 << g.n) - 1):
        size = comp.bit_count()
        if size <= len(best):
            continue
        for s in bits(comp):
            path = [s]

            def extend(used: int) -> bool:
                nonlocal best
                deadline.check()
                if len(path) > len(best):
                    best = list(path)
                    if len(best) == size:
                        return True
                v = path[-1]
                free = comp & ~used
                if len(path) + reach(masks, v, free | (1 << v)).bit_count() - 1 <= len(best):
                    return False
                for w in bits(masks[v] & free):
                    path.append(w)
                    if extend(used | (1 << w)):
                        return True
                    path.pop()
                return False

            if extend(1 << s):
                break
    return best


def longest_path_edges(g: Graph, budget: OracleBudget | None = None) -> int:
    return max(len(longest_path(g, budget)) - 1, 0)


# -- feedback vertex sets ---------------------------------------------------

def _forest_after_removal(g: Graph, removed: frozenset[int]) -> bool:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def minimum_transversal(g: Graph, budget: OracleBudget | None = None) -> tuple[int, ...]:
    """Lexicographically first minimum feedback vertex set.

    Vertices that lie on no cycle (peeled off by repeatedly deleting
    degree <= 1 vertices) are never needed, so only the 2-core is searched.
    """
    deadline = _admit(g.n, "transversal", budget)
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    queue = [v for v in alive if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    core = sorted(alive)
    for size in range(len(core) + 1):
        for combo in combinations(core, size):
            deadline.check()
            if _forest_after_removal(g, frozenset(combo)):
                return combo
    raise AssertionError("unreachable: removing every core vertex leaves a forest")


def transversal_number(g: Graph, budget: OracleBudget | None = None) -> int:
    return len(minimum_transversal(g, budget))


# -- long cycle packing -----------------------------------------------------

def max_long_cycle_packing(g: Graph, t: int, budget: OracleBudget | None = None):
    """Maximum number of vertex-disjoint cycles of length >= t, with witness.

    Returns a :class:`~circpw.packing.CyclePacking`. The lowest available
    vertex is either left out or covered by a cycle through it; only
    cycles whose vertex set contains no smaller long cycle through the same
    vertex are tried, since shrinking a cycle never hurts a packing.
    """
    from .packing import CyclePacking

    deadline = _admit(g.n, "packing", budget)
    if t < 3:
        raise ValueError("cycle length threshold must be at least 3")
    masks = g.masks

    def cycles_through(v: int, avail: int) -> dict[int, list[int]]:
        found: dict[int, list[int]] = {}
        path = [v]

        def extend(used: int):
            deadline.check()
            u = path[-1]
            if len(path) >= t and (masks[u] >> v) & 1:
                found.setdefault(used, list(path))
                return
            for w in bits(masks[u] & avail & ~used):
                path.append(w)
                extend(used | (1 << w))
                path.pop()

        extend(1 << v)
        return found

    memo: dict[int, tuple[int, tuple[tuple[int, ...], ...]]] = {}

    def best(avail: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
        if avail.bit_count() < t:
            return 0, ()
        if avail in memo:
            return memo[avail]
        v = (avail & -avail).bit_length() - 1
        result = best(avail ^ (1 << v))
        bound = avail.bit_count() // t
        if result[0] < bound:
            for used, cyc in cycles_through(v, avail).items():
                k, rest = best(avail & ~used)
                if k + 1 > result[0]:
                    result = (k + 1, (tuple(cyc),) + rest)
                    if result[0] == bound:
                        break
        memo[avail] = result
        return result

    _, cycles = best((1 << g.n) - 1)
    return CyclePacking(tuple(cycles), t)


# -- minors -------------------------------------------------------------------

def minor_contains(g: Graph, pattern: Graph, budget: OracleBudget | None = None):
    """A :class:`~circpw.trees.MinorModel` of ``pattern`` in ``g`` or ``None``.

    Search over edge contractions of ``g``; at every contracted state the
    pattern is looked for as a (not necessarily induced or spanning)
    subgraph. Isomorphic states are visited once, keyed by a nauty
    canonical certificate. Safe reductions shrink each state first:
    vertices of degree <= 1 are dropped when the pattern has minimum
    degree >= 2 and degree-2 vertices are contracted away when it has
    minimum degree >= 3.
    """
    from .trees import MinorModel

    deadline = _admit(g.n, "minor_host", budget)
    if pattern.n > DEFAULT_CEILINGS["minor_pattern"]:
        raise BudgetError(f"minor_pattern: {pattern.n} vertices exceeds the ceiling "
                          f"of {DEFAULT_CEILINGS['minor_pattern']}")
    if pattern.n == 0:
        return MinorModel(pattern, {})
    pmin = min(pattern.degree(v) for v in range(pattern.n))
    pm = pattern.m
    porder = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    pmasks = pattern.masks

    def embed(adj: list[int]) -> dict[int, int] | None:
        k = len(adj)
        deg = [a.bit_count() for a in adj]
        assign: dict[int, int] = {}
        used = 0

        def go(i: int) -> bool:
            nonlocal used
            if i == len(porder):
                return True
            x = porder[i]
            for s in range(k):
                if (used >> s) & 1 or deg[s] < pattern.degree(x):
                    continue
                if all((adj[s] >> assign[y]) & 1 for y in bits(pmasks[x]) if y in assign):
                    assign[x] = s
                    used |= 1 << s
                    if go(i + 1):
                        return True
                    used &= ~(1 << s)
                    del assign[x]
            return False

        return dict(assign) if go(0) else None

    def reduce(sets: list[frozenset[int]], adj: list[int]):
        changed = True
        while changed:
            changed = False
            for i in range(len(sets)):
                d = adj[i].bit_count()
                if (pmin >= 2 and d <= 1) or (pmin >= 1 and d == 0):
                    sets, adj = _drop(sets, adj, i)
                    changed = True
                    break
                if pmin >= 3 and d == 2:
                    j = (adj[i] & -adj[i]).bit_length() - 1
                    sets, adj = _merge(sets, adj, j, i)
                    changed = True
                    break
        return sets, adj

    seen: set[bytes] = set()
    start_sets = [frozenset([v]) for v in range(g.n)]
    start_adj = list(g.masks)
    stack = [reduce(start_sets, start_adj)]
    while stack:
        deadline.check()
        sets, adj = stack.pop()
        k = len(sets)
        m = sum(a.bit_count() for a in adj) // 2
        if k < pattern.n or m < pm:
            continue
        key = _certificate(adj)
        if key in seen:
            continue
        seen.add(key)
        hit = embed(adj)
        if hit is not None:
            return MinorModel(pattern, {x: sets[s] for x, s in hit.items()})
        if k == pattern.n:
            continue
        for i in range(k):
            for j in bits(adj[i] >> (i + 1)):
                j += i + 1
                stack.append(reduce(*_merge(sets, adj, i, j)))
    return None


def _drop(sets, adj, i):
    keep = [j for j in range(len(sets)) if j != i]
    return _restrict(sets, adj, keep)


def _merge(sets, adj, i, j):
    """Contract state vertex ``j`` into ``i``."""
    sets = list(sets)
    adj = list(adj)
    sets[i] = sets[i] | sets[j]
    adj[i] = (adj[i] | adj[j]) & ~((1 << i) | (1 << j))
    for w in bits(adj[j]):
        if w != i:
            adj[w] |= 1 << i
    keep = [x for x in range(len(sets)) if x != j]
    return _restrict(sets, adj, keep)


def _restrict(sets, adj, keep):
    pos = {old: new for new, old in enumerate(keep)}
    new_adj = []
    for old in keep:
        a = 0
        for w in bits(adj[old]):
            if w in pos:
                a |= 1 << pos[w]
        new_adj.append(a)
    return [sets[old] for old in keep], new_adj


def _certificate(adj: list[int]) -> bytes:
    import pynauty

    k = len(adj)
    g = pynauty.Graph(k, adjacency_dict={v: list(bits(adj[v])) for v in range(k)})
    return k.to_bytes(2, "big") + pynauty.certificate(g)

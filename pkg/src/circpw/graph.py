"""Simple undirected graphs on vertices ``0..n-1`` and the basic machinery
built on them: depth-first spanning trees, vertex connectivity and the
block/cut-vertex structure.

Neighbours are always visited in ascending id order so that every
construction downstream is reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import PreconditionError


class Graph:
    """Immutable simple graph with dense integer vertex ids."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        edges = {(min(u, v), max(u, v)) for u, nb in enumerate(adjacency) for v in nb}
        return cls(len(adjacency), sorted(edges))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        edges = []
        for u, m in enumerate(masks):
            m >>= u + 1
            v = u + 1
            while m:
                if m & 1:
                    edges.append((u, v))
                m >>= 1
                v += 1
        return cls(len(masks), edges)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __len__(self):
        return self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def _sorted_nbrs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(a)) for a in self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._sorted_nbrs[v]

    def adjacency_set(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._sorted_nbrs[u] if u < v]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks, for the exponential solvers."""
        out = []
        for a in self._adj:
            m = 0
            for v in a:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self._adj)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Return ``(sub, old_ids)``; vertex ``i`` of ``sub`` is ``old_ids[i]``.

        Relabelling preserves the relative order of vertex ids.
        """
        old_ids = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(old_ids)}
        edges = [
            (new_id[u], new_id[v])
            for u in old_ids
            for v in self._sorted_nbrs[u]
            if u < v and v in new_id
        ]
        return Graph(len(old_ids), edges), old_ids

    def remove_vertices(self, removed: Iterable[int]) -> tuple[Graph, list[int]]:
        removed = set(removed)
        return self.induced_subgraph(v for v in range(self.n) if v not in removed)

    def components(self, within: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components (of the induced subgraph on ``within``), each
        sorted, listed by smallest vertex."""
        allowed = set(range(self.n)) if within is None else set(within)
        seen = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._sorted_nbrs[u]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def bfs_path(self, s: int, t: int, avoid: Iterable[int] = (),
                 within: Iterable[int] | None = None) -> list[int] | None:
        """Shortest s-t path avoiding ``avoid`` (ties broken by smallest id)."""
        blocked = set(avoid)
        allowed = None if within is None else set(within)
        if s in blocked or t in blocked:
            return None
        prev = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for w in self._sorted_nbrs[u]:
                if w in prev or w in blocked or (allowed is not None and w not in allowed):
                    continue
                prev[w] = u
                queue.append(w)
        if t not in prev:
            return None
        path = [t]
        while path[-1] != s:
            path.append(prev[path[-1]])
        return path[::-1]

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) if i < n - 1 else (0, n - 1) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph(offset, edges)


@dataclass(frozen=True)
class RootedForest:
    """Rooted forest given by parent pointers (``None`` marks a root)."""

    parent: tuple[int | None, ...]

    def __post_init__(self):
        # Computing heights doubles as the acyclicity check.
        n = len(self.parent)
        heights = [-1] * n
        for v in range(n):
            chain = []
            u = v
            while u is not None and heights[u] < 0:
                if len(chain) > n:
                    raise ValueError("parent links contain a cycle")
                chain.append(u)
                u = self.parent[u]
            base = -1 if u is None else heights[u]
            for w in reversed(chain):
                base += 1
                heights[w] = base
        object.__setattr__(self, "heights", tuple(heights))

    heights: tuple[int, ...] = field(init=False, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @property
    def height(self) -> int:
        return max(self.heights, default=0)

    def ancestors(self, v: int) -> list[int]:
        """Path from ``v`` up to its root, ``v`` first."""
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when ``a`` is an ancestor of ``b`` (or ``a == b``)."""
        while b is not None and self.heights[b] >= self.heights[a]:
            if b == a:
                return True
            b = self.parent[b]
        return False

    def tree_edges(self) -> list[tuple[int, int]]:
        return sorted((min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None)

    def closure(self) -> Graph:
        edges = []
        for v in range(self.n):
            for a in self.ancestors(v)[1:]:
                edges.append((a, v) if a < v else (v, a))
        return Graph(self.n, sorted(edges))

    def preorder(self) -> list[int]:
        order = []
        for r in self.roots:
            stack = [r]
            while stack:
                v = stack.pop()
                order.append(v)
                stack.extend(reversed(self.children[v]))
        return order


def dfs_tree(g: Graph, root: int = 0) -> RootedForest:
    """Depth-first spanning tree of a connected graph.

    Unvisited neighbours are explored in ascending id order.
    """
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    parent: list[int | None] = [None] * g.n
    visited = [False] * g.n
    visited[root] = True
    stack = [(root, iter(g.neighbors(root)))]
    count = 1
    while stack:
        v, it = stack[-1]
        for w in it:
            if not visited[w]:
                visited[w] = True
                parent[w] = v
                count += 1
                stack.append((w, iter(g.neighbors(w))))
                break
        else:
            stack.pop()
    if count != g.n:
        raise PreconditionError("dfs_tree needs a connected graph")
    return RootedForest(tuple(parent))


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent)."""
    return len(vertex_disjoint_paths(g, s, t, cutoff))


def vertex_disjoint_paths(g: Graph, s: int, t: int, cutoff: int | None = None) -> list[list[int]]:
    """Internally vertex-disjoint s-t paths of maximum number.

    Augmenting-path max flow on the split graph with unit vertex capacities.
    Stops early once ``cutoff`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise ValueError("endpoints must be distinct and nonadjacent")
    # v_in = 2v, v_out = 2v + 1
    big = g.n
    res: dict[int, dict[int, int]] = {a: {} for a in range(2 * g.n)}
    for v in range(g.n):
        res[2 * v][2 * v + 1] = big if v in (s, t) else 1
        res[2 * v + 1].setdefault(2 * v, 0)
        for w in g.neighbors(v):
            res[2 * v + 1][2 * w] = 1
            res[2 * w].setdefault(2 * v + 1, 0)
    original = {a: dict(arcs) for a, arcs in res.items()}
    source, sink = 2 * s + 1, 2 * t
    found = 0
    while cutoff is None or found < cutoff:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b, c in res[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            res[a][b] -= 1
            res[b][a] += 1
            b = a
        found += 1

    used = {a: {b: original[a][b] - c for b, c in arcs.items() if original[a][b] - c > 0}
            for a, arcs in res.items()}
    paths = []
    for _ in range(found):
        path = [s]
        a = source
        while a != sink:
            b = min(used[a])
            used[a][b] -= 1
            if not used[a][b]:
                del used[a][b]
            a = b
            if a % 2 == 0:
                path.append(a // 2)
        paths.append(path)
    return paths


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; ``n - 1`` for complete graphs, 0 when disconnected."""
    n = g.n
    if n <= 1 or not g.is_connected():
        return 0
    if g.is_complete():
        return n - 1
    best = min(g.degree(v) for v in range(n))
    # Even's argument: some vertex among the first best+1 lies outside a
    # minimum separator, and a partner on the far side has a larger index.
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            k = local_vertex_connectivity(g, i, j, cutoff=best)
            if k < best:
                best = k
        i += 1
    return best


@dataclass(frozen=True)
class BlockCutForest:
    """Blocks and cut vertices of a graph together with their incidence.

    ``blocks[b]`` is a sorted vertex tuple; ``block_edges[b]`` its edges.
    In :meth:`forest_graph`, block ``b`` is node ``b`` and
    ``cut_vertices[c]`` is node ``len(blocks) + c``.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: tuple[int, ...]

    @cached_property
    def incidence(self) -> list[tuple[int, int]]:
        """Pairs ``(block index, cut vertex)``."""
        cuts = set(self.cut_vertices)
        return [(b, v) for b, blk in enumerate(self.blocks) for v in blk if v in cuts]

    @cached_property
    def node_of_cut(self) -> dict[int, int]:
        nb = len(self.blocks)
        return {v: nb + i for i, v in enumerate(self.cut_vertices)}

    @property
    def num_nodes(self) -> int:
        return len(self.blocks) + len(self.cut_vertices)

    def is_block_node(self, node: int) -> bool:
        return node < len(self.blocks)

    def cut_vertex_of(self, node: int) -> int:
        return self.cut_vertices[node - len(self.blocks)]

    def forest_graph(self) -> Graph:
        return Graph(self.num_nodes, sorted(
            (b, self.node_of_cut[v]) for b, v in self.incidence))

    def blocks_of(self, v: int) -> list[int]:
        return [b for b, blk in enumerate(self.blocks) if v in blk]

    def block_subgraph(self, g: Graph, b: int) -> tuple[Graph, list[int]]:
        return g.induced_subgraph(self.blocks[b])


def block_cut_forest(g: Graph) -> BlockCutForest:
    """Blocks via an iterative Hopcroft-Tarjan sweep with an edge stack.

    Isolated vertices become singleton blocks; bridges become two-vertex
    blocks. Blocks are listed in order of their sorted vertex tuples.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = []
    timer = 0
    for s in range(n):
        if disc[s] >= 0:
            continue
        if g.degree(s) == 0:
            disc[s] = timer
            timer += 1
            found.append(((s,), ()))
            continue
        disc[s] = low[s] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(s, -1, iter(g.neighbors(s)))]
        while stack:
            v, p, it = stack[-1]
            advanced = False
            for w in it:
                if w == p:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if p >= 0:
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp_edges = []
                    while True:
                        e = edge_stack.pop()
                        comp_edges.append((min(e), max(e)))
                        if e == (p, v):
                            break
                    verts = sorted({x for e in comp_edges for x in e})
                    found.append((tuple(verts), tuple(sorted(comp_edges))))
    found.sort()
    count = [0] * n
    for verts, _ in found:
        for v in verts:
            count[v] += 1
    cuts = tuple(v for v in range(n) if count[v] >= 2)
    return BlockCutForest(
        n=n,
        blocks=tuple(b for b, _ in found),
        block_edges=tuple(e for _, e in found),
        cut_vertices=cuts,
    )


def is_biconnected(g: Graph) -> bool:
    """2-connected with at least 3 vertices."""
    if g.n < 3:
        return False
    bcf = block_cut_forest(g)
    return len(bcf.blocks) == 1


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether the vertex connectivity is at least ``k``, stopping each
    flow once ``k`` paths are found."""
    n = g.n
    if k <= 0:
        return True
    if n <= k or not g.is_connected():
        return False
    if any(g.degree(v) < k for v in range(n)):
        return False
    # the smallest vertex outside a separator of size < k has index < k
    for i in range(k):
        for j in range(i + 1, n):
            if not g.has_edge(i, j) and local_vertex_connectivity(g, i, j, cutoff=k) < k:
                return False
    return True

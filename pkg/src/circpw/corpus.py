"""Seeded and exhaustive graph corpora for property and acceptance tests."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from .graph import Graph, block_cut_forest, vertex_connectivity


def certificate(g: Graph) -> bytes:
    import pynauty

    pg = pynauty.Graph(g.n, adjacency_dict={v: list(g.neighbors(v)) for v in range(g.n)})
    return g.n.to_bytes(2, "big") + pynauty.certificate(pg)


def _extend_all(graphs: list[Graph], min_degree: int = 0) -> list[Graph]:
    """Every graph on one more vertex, up to isomorphism, obtained by adding
    a vertex with at least ``min_degree`` neighbours."""
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        n = g.n
        base = list(g.edges())
        for size in range(min_degree, n + 1):
            for nbrs in combinations(range(n), size):
                h = Graph(n + 1, base + [(v, n) for v in nbrs])
                seen.setdefault(certificate(h), h)
    return list(seen.values())


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism (n <= 8 is quick)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (Graph(0, []),)
    return tuple(_extend_all(list(all_graphs(n - 1))))


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and len(block_cut_forest(g).blocks) == 1


@lru_cache(maxsize=None)
def biconnected_graphs(n: int) -> tuple[Graph, ...]:
    """All 2-connected graphs on ``n`` vertices up to isomorphism.

    Deleting a vertex of a 2-connected graph leaves it connected, so these
    are extensions of connected graphs by a vertex of degree >= 2.
    """
    if n < 3:
        return ()
    connected = [g for g in all_graphs(n - 1) if g.is_connected()]
    return tuple(g for g in _extend_all(connected, 2) if is_biconnected(g))


@lru_cache(maxsize=None)
def triconnected_graphs(n: int) -> tuple[Graph, ...]:
    """All 3-connected graphs on ``n`` vertices up to isomorphism (n >= 4).

    Every vertex-deleted subgraph of a 3-connected graph is 2-connected.
    """
    if n < 4:
        return ()
    if n == 4:
        return tuple(g for g in all_graphs(4) if g.is_complete())
    return tuple(g for g in _extend_all(list(biconnected_graphs(n - 1)), 3)
                 if vertex_connectivity(g) >= 3)


def random_biconnected(n: int, rng: random.Random, chord_p: float = 0.15) -> Graph:
    """A cycle grown by random ears until it has ``n`` vertices, plus random
    chords. Every ear keeps the graph 2-connected."""
    if n < 3:
        raise ValueError("need n >= 3")
    first = rng.randint(3, n)
    edges = {tuple(sorted((i, (i + 1) % first))) for i in range(first)}
    size = first
    while size < n:
        a, b = rng.sample(range(size), 2)
        inner = rng.randint(1, n - size)
        chain = [a] + list(range(size, size + inner)) + [b]
        edges.update(tuple(sorted(e)) for e in zip(chain, chain[1:]))
        size += inner
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < chord_p:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def random_block_glued(max_n: int, rng: random.Random, max_block: int = 6) -> Graph:
    """Blocks (random 2-connected pieces or bridges) glued along a random
    tree: each new block shares one vertex with what is already built.
    Sometimes a second component is started."""
    edges: list[tuple[int, int]] = []
    n = 1
    while True:
        size = rng.randint(2, max_block)
        if n + size - 1 > max_n:
            break
        if rng.random() < 0.05:
            anchor = n
            n += 1
        else:
            anchor = rng.randrange(n)
        if size == 2:
            block = Graph(2, [(0, 1)])
        else:
            block = random_biconnected(size, rng, 0.2)
        ids = [anchor] + list(range(n, n + size - 1))
        edges.extend((ids[u], ids[v]) for u, v in block.edges())
        n += size - 1
    return Graph(n, sorted(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random recursive tree, each vertex hung from a uniformly chosen
    earlier one, then ids shuffled."""
    if n < 1:
        raise ValueError("need n >= 1")
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    for v in range(1, n):
        a, b = perm[v], perm[rng.randrange(v)]
        edges.append((min(a, b), max(a, b)))
    return Graph(n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def sample_triconnected(n: int, count: int, rng: random.Random, p: float = 0.55) -> list[Graph]:
    """Distinct (non-isomorphic) 3-connected graphs from G(n, p) draws."""
    out: dict[bytes, Graph] = {}
    tries = 0
    while len(out) < count and tries < 200 * count:
        tries += 1
        g = random_graph(n, p, rng)
        if vertex_connectivity(g) >= 3:
            out.setdefault(certificate(g), g)
    return list(out.values())

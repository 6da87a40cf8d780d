"""Generators for the example families: trees with dominant vertices, the
outerplanar doubling family, disjoint cycles, small named graphs, and
block forests with hub vertices for driving the packing branch."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetError, PreconditionError, VerificationError
from .graph import Graph, complete_bipartite, complete_graph, cycle_graph, disjoint_union
from .trees import cbt

GADGET_NAMES = ("cbt_dominants", "outerplanar_family", "disjoint_cycles", "hub_forest",
                "Q", "K4", "K23", "K3uK3", "petersen")


def add_dominants(g: Graph, d: int) -> Graph:
    """``g`` plus ``d`` new vertices adjacent to everything, each other included."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    n = g.n + d
    edges = list(g.edges())
    for x in range(g.n, n):
        edges.extend((v, x) for v in range(x))
    return Graph(n, edges)


def cbt_plus_dominants(h: int, d: int) -> Graph:
    """Complete binary tree of height ``h`` (ids 0..2^(h+1)-2, level order)
    followed by ``d`` dominant vertices."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    return add_dominants(cbt(h).graph, d)


def outerplanar_family(i: int) -> Graph:
    """Start from a triangle; each round puts a new degree-2 vertex on every
    edge of the outer cycle, which is tracked as an explicit vertex list."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i > 6:
        raise BudgetError(f"outerplanar_family({i}) has {3 * 2 ** i} vertices; limit is i <= 6")
    edges = [(0, 1), (1, 2), (0, 2)]
    outer = [0, 1, 2]
    n = 3
    for _ in range(i):
        new_outer = []
        for a, b in zip(outer, outer[1:] + outer[:1]):
            edges.append((a, n))
            edges.append((b, n))
            new_outer.extend([a, n])
            n += 1
        outer = new_outer
    return Graph(n, edges)


def disjoint_cycles(t: int, k: int) -> Graph:
    if t < 3 or k < 1:
        raise ValueError("need t >= 3 and k >= 1")
    return disjoint_union(*[cycle_graph(t)] * k)


def hub_forest(h: int, k: int, block: str = "edge") -> tuple[Graph, tuple[int, ...]]:
    """Hubs over a tree of blocks whose block-cut tree follows cbt(h).

    ``block="edge"`` keeps cbt(h) itself (every block a bridge).
    ``block="triangle"`` replaces each tree edge p-c by a triangle on p, c
    and a new vertex. Then ``k`` mutually adjacent hubs are joined to every
    other vertex. Returns the graph and the hub ids; removing the hubs
    leaves no cycle longer than a block.
    """
    if block not in ("edge", "triangle"):
        raise ValueError("block must be 'edge' or 'triangle'")
    tree = cbt(h).graph
    edges = list(tree.edges())
    n = tree.n
    if block == "triangle":
        for p, c in tree.edges():
            edges.extend([(p, n), (c, n)])
            n += 1
    g = add_dominants(Graph(n, edges), k)
    return g, tuple(range(n, n + k))


def _q_graph() -> Graph:
    """K_{2,2,2} with parts {0,1}, {2,3}, {4,5}, minus the triangle 0-2-4."""
    parts = [(0, 1), (2, 3), (4, 5)]
    edges = [(a, b) for x in range(3) for y in range(x + 1, 3) for a in parts[x] for b in parts[y]]
    drop = {(0, 2), (0, 4), (2, 4)}
    return Graph(6, [e for e in edges if e not in drop])


def _petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


_NAMED = {
    "Q": _q_graph,
    "K4": lambda: complete_graph(4),
    "K23": lambda: complete_bipartite(2, 3),
    "K3uK3": lambda: disjoint_cycles(3, 2),
    "petersen": _petersen,
}


def named(name: str) -> Graph:
    try:
        return _NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; choose from {sorted(_NAMED)}") from None


@dataclass(frozen=True)
class GadgetSpec:
    name: str
    parameters: tuple[int, ...] = ()

    def build(self) -> Graph:
        p = self.parameters
        arity = {"cbt_dominants": 2, "outerplanar_family": 1, "disjoint_cycles": 2, "hub_forest": 2}
        want = arity.get(self.name, 0)
        if self.name not in GADGET_NAMES:
            raise ValueError(f"unknown gadget {self.name!r}")
        if len(p) != want:
            raise ValueError(f"{self.name} takes {want} integer parameter(s), got {len(p)}")
        if self.name == "cbt_dominants":
            return cbt_plus_dominants(*p)
        if self.name == "outerplanar_family":
            return outerplanar_family(*p)
        if self.name == "disjoint_cycles":
            return disjoint_cycles(*p)
        if self.name == "hub_forest":
            return hub_forest(*p)[0]
        return named(self.name)


@dataclass
class Prop1Certificate:
    """A tau-connected graph (tau = transversal number of the pattern) that
    cannot contain the pattern as a minor, with the facts checked."""

    graph: Graph
    pattern_tau: int
    facts: dict = field(default_factory=dict)

    def explanation(self) -> str:
        d = self.pattern_tau - 1
        noun = "vertex" if d == 1 else "vertices"
        return (f"complete binary tree plus {d} dominant {noun}: every cycle meets the "
                f"dominants, so its transversal number is {d} < {self.pattern_tau}; a minor "
                f"cannot have a larger transversal number, so the pattern is absent")


def proposition1_certificate(pattern: Graph, h: int, budget=None) -> tuple[Graph, str]:
    """cbt(h) plus tau(pattern) - 1 dominants, with connectivity, transversal
    number and minor absence confirmed by the oracles."""
    cert = proposition1_check(pattern, h, budget)
    return cert.graph, cert.explanation()


def proposition1_check(pattern: Graph, h: int, budget=None) -> Prop1Certificate:
    from .graph import vertex_connectivity
    from .oracles import minor_contains, transversal_number

    if h < 1:
        raise PreconditionError("need h >= 1; a single vertex plus dominants is a clique")
    tau = transversal_number(pattern, budget)
    if tau < 1:
        raise PreconditionError("pattern is acyclic, so there is nothing to certify")
    g = cbt_plus_dominants(h, tau - 1)
    facts = {
        "connectivity": vertex_connectivity(g),
        "tau": transversal_number(g, budget),
        "minor_absent": minor_contains(g, pattern, budget) is None,
    }
    ok = (facts["connectivity"] >= tau and facts["tau"] == tau - 1 and facts["minor_absent"])
    if not ok:
        raise VerificationError(f"certificate check failed: {facts}")
    return Prop1Certificate(g, tau, facts)

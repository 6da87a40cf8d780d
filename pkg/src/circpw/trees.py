"""Complete binary trees, the rooted pathwidth recursion on trees, and
extraction of complete-binary-tree minors and subdivisions from trees."""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field

from .decomposition import PathDecomposition, concatenate
from .errors import PreconditionError, ProofAssertionError
from .graph import Graph, RootedForest


@dataclass(frozen=True)
class LabeledCBT:
    """Complete binary tree in level order: vertex v has children 2v+1, 2v+2.

    Leaves are labelled 1..2^h from left to right.
    """

    graph: Graph
    root: int
    height: int
    leaf_label: dict[int, int] = field(compare=False)

    def leaf(self, label: int) -> int:
        if not 1 <= label <= 2 ** self.height:
            raise ValueError(f"leaf label {label} outside 1..{2 ** self.height}")
        return 2 ** self.height - 2 + label

    @property
    def leaves(self) -> list[int]:
        return [self.leaf(a) for a in range(1, 2 ** self.height + 1)]


def cbt(h: int) -> LabeledCBT:
    if h < 0:
        raise ValueError("height must be nonnegative")
    n = 2 ** (h + 1) - 1
    g = Graph(n, [((v - 1) // 2, v) for v in range(1, n)])
    first_leaf = 2 ** h - 1
    labels = {v: v - first_leaf + 1 for v in range(first_leaf, n)}
    return LabeledCBT(g, 0, h, labels)


def cbt_index(depth: int, pos: int) -> int:
    """Level-order id of the ``pos``-th vertex (from the left) at ``depth``."""
    return 2 ** depth - 1 + pos


def leaf_distance(t: LabeledCBT, a: int, b: int) -> int:
    """Tree distance between leaves labelled ``a <= b``.

    Checks on the way out that it is at least 2 log2(b - a + 1).
    """
    if a > b:
        raise ValueError("labels must satisfy a <= b")
    u, v = t.leaf(a), t.leaf(b)
    d = 0
    while u != v:
        u, v = (u - 1) // 2, (v - 1) // 2
        d += 2
    floor = math.ceil(2 * math.log2(b - a + 1) - 1e-9)
    if d < floor:
        raise ProofAssertionError(
            f"leaf distance {d} below 2*log2({b - a + 1})", {"a": a, "b": b, "h": t.height})
    return d


def root_tree(t: Graph, root: int) -> RootedForest:
    """Parent pointers of a tree hung from ``root``; rejects non-trees."""
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} out of range")
    if t.m != t.n - 1:
        raise PreconditionError("not a tree: edge count is not n - 1")
    parent: list[int | None] = [None] * t.n
    seen = [False] * t.n
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in t.neighbors(v):
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                queue.append(w)
    if not all(seen):
        raise PreconditionError("not a tree: graph is disconnected")
    return RootedForest(tuple(parent))


@dataclass(frozen=True)
class RootedPwMap:
    """R(v) for every vertex of a rooted tree.

    R(leaf) = 0 and, with child values r1 >= r2 >= ..., an internal vertex
    gets max(r1, r2 + 1, 1). This upper-bounds the minimum width of a path
    decomposition of the subtree whose last bag holds v.
    """

    tree: RootedForest
    value: tuple[int, ...]

    def ordered_children(self, v: int) -> list[int]:
        """Children by decreasing value, ties to the smaller id."""
        return sorted(self.tree.children[v], key=lambda w: (-self.value[w], w))

    @property
    def root(self) -> int:
        return self.tree.roots[0]

    def __getitem__(self, v: int) -> int:
        return self.value[v]


def _postorder(f: RootedForest) -> list[int]:
    return f.preorder()[::-1]


def rooted_pw_map(t: Graph, root: int) -> RootedPwMap:
    f = root_tree(t, root)
    value = [0] * t.n
    for v in _postorder(f):
        kids = sorted((value[w] for w in f.children[v]), reverse=True)
        if kids:
            r2 = kids[1] if len(kids) > 1 else -1
            value[v] = max(kids[0], r2 + 1, 1)
    return RootedPwMap(f, tuple(value))


def rooted_decomposition(t: Graph, root: int, pw_map: RootedPwMap | None = None) -> PathDecomposition:
    """Decomposition of a tree with ``root`` in the last bag and width at
    most R(root).

    For children w1, w2, ... ordered by R: the decomposition for w1, then
    the bag {w1, v}, then the decompositions for w2, w3, ... with v added
    to every bag.
    """
    pw = pw_map if pw_map is not None else rooted_pw_map(t, root)
    f = pw.tree
    parts: dict[int, list[frozenset[int]]] = {}
    for v in _postorder(f):
        ws = pw.ordered_children(v)
        if not ws:
            parts[v] = [frozenset([v])]
            continue
        bags = parts.pop(ws[0])
        bags.append(frozenset([ws[0], v]))
        for w in ws[1:]:
            bags.extend(b | {v} for b in parts.pop(w))
        parts[v] = bags
    return PathDecomposition(parts[root])


def forest_decomposition(forest: Graph) -> tuple[PathDecomposition, int, list[tuple[int, int]]]:
    """Rooted decompositions of every component concatenated.

    Each component is rooted at its smallest vertex. Returns the
    decomposition, the largest root value R and ``(root, R)`` per component.
    """
    parts = []
    roots = []
    for comp in forest.components():
        sub, ids = forest.induced_subgraph(comp)
        pw = rooted_pw_map(sub, 0)
        parts.append(rooted_decomposition(sub, 0, pw).relabel(ids))
        roots.append((ids[0], pw.value[0]))
    if not parts:
        return PathDecomposition([]), 0, []
    return concatenate(*parts), max(r for _, r in roots), roots


@dataclass(frozen=True)
class MinorModel:
    """Branch sets realising ``pattern`` as a minor of some host graph."""

    pattern: Graph
    branch_sets: dict[int, frozenset[int]]
    root_anchor: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "branch_sets",
                           {x: frozenset(s) for x, s in self.branch_sets.items()})

    def problems(self, host: Graph) -> list[str]:
        out = []
        owner: dict[int, int] = {}
        for x in range(self.pattern.n):
            s = self.branch_sets.get(x)
            if not s:
                out.append(f"pattern vertex {x} has an empty branch set")
                continue
            for v in s:
                if not 0 <= v < host.n:
                    out.append(f"branch set of {x} holds {v}, not a host vertex")
                elif v in owner:
                    out.append(f"host vertex {v} in branch sets of {owner[v]} and {x}")
                else:
                    owner[v] = x
            if all(0 <= v < host.n for v in s) and len(host.components(s)) != 1:
                out.append(f"branch set of {x} is not connected")
        for x, y in self.pattern.edges():
            sx, sy = self.branch_sets.get(x, ()), self.branch_sets.get(y, ())
            if not any(0 <= a < host.n and host.adjacency_set(a) & sy for a in sx):
                out.append(f"pattern edge {x}-{y} is not realised")
        if self.root_anchor is not None:
            x, v = self.root_anchor
            if v not in self.branch_sets.get(x, ()):
                out.append(f"anchor {v} not in the branch set of {x}")
        return out

    def is_valid(self, host: Graph) -> bool:
        return not self.problems(host)

    def relabel(self, ids) -> MinorModel:
        anchor = None if self.root_anchor is None else (self.root_anchor[0], ids[self.root_anchor[1]])
        return MinorModel(self.pattern,
                          {x: frozenset(ids[v] for v in s) for x, s in self.branch_sets.items()},
                          anchor)

    def to_dict(self) -> dict:
        d = {
            "pattern": {"n": self.pattern.n, "edges": [list(e) for e in self.pattern.edges()]},
            "branch_sets": {str(x): sorted(s) for x, s in sorted(self.branch_sets.items())},
        }
        if self.root_anchor is not None:
            d["root_anchor"] = list(self.root_anchor)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> MinorModel:
        p = d["pattern"]
        pattern = Graph(p["n"], [tuple(e) for e in p["edges"]])
        sets = {int(x): frozenset(s) for x, s in d["branch_sets"].items()}
        anchor = tuple(d["root_anchor"]) if d.get("root_anchor") else None
        return cls(pattern, sets, anchor)


def extract_cbt_minor(t: Graph, root: int, q: int, pw_map: RootedPwMap | None = None) -> MinorModel:
    """A complete binary tree of height ``q`` as a minor of the tree ``t``,
    with ``root`` in the branch set of the pattern root.

    Needs R(root) >= q + 1. Walking down: while the best child still has
    R >= q + 1 the current vertex joins the root branch set and the walk
    continues there; otherwise the two best children both have R = q and
    each supplies a tree of height q - 1.
    """
    pw = pw_map if pw_map is not None else rooted_pw_map(t, root)
    if pw.value[root] < q + 1:
        raise PreconditionError(f"R(root) = {pw.value[root]} is below {q + 1}")

    def grow(v: int, q: int) -> dict[tuple[int, int], set[int]]:
        top = set()
        while True:
            top.add(v)
            if q == 0:
                return {(0, 0): top}
            ws = pw.ordered_children(v)
            if pw.value[ws[0]] >= q + 1:
                v = ws[0]
                continue
            if len(ws) < 2 or pw.value[ws[1]] < q:
                raise ProofAssertionError(
                    "child values do not support a split", {"vertex": v, "q": q})
            out = {(0, 0): top}
            for offset, w in ((0, ws[0]), (1, ws[1])):
                for (d, p), s in grow(w, q - 1).items():
                    out[(d + 1, p + offset * 2 ** d)] = s
            return out

    found = grow(root, q)
    pattern = cbt(q).graph
    sets = {cbt_index(d, p): frozenset(s) for (d, p), s in found.items()}
    model = MinorModel(pattern, sets, (0, root))
    return model


@dataclass(frozen=True)
class Subdivision:
    """Pattern vertices mapped to host vertices and pattern edges to host
    paths (listed from the smaller pattern endpoint)."""

    pattern: Graph
    branch: dict[int, int]
    paths: dict[tuple[int, int], tuple[int, ...]]

    def vertices(self) -> set[int]:
        out = set(self.branch.values())
        for p in self.paths.values():
            out.update(p)
        return out

    def subgraph_edges(self) -> set[tuple[int, int]]:
        edges = set()
        for p in self.paths.values():
            for a, b in zip(p, p[1:]):
                edges.add((min(a, b), max(a, b)))
        return edges

    def max_degree(self) -> int:
        deg: dict[int, int] = {}
        for a, b in self.subgraph_edges():
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        return max(deg.values(), default=0)

    def problems(self, host: Graph) -> list[str]:
        out = []
        images = list(self.branch.values())
        if len(set(images)) != len(images):
            out.append("branch vertices are not distinct")
        image_set = set(images)
        interior_owner: dict[int, tuple[int, int]] = {}
        for (x, y), p in sorted(self.paths.items()):
            if p[0] != self.branch[x] or p[-1] != self.branch[y]:
                out.append(f"path for {x}-{y} has wrong endpoints")
            if len(set(p)) != len(p):
                out.append(f"path for {x}-{y} repeats a vertex")
            for a, b in zip(p, p[1:]):
                if not host.has_edge(a, b):
                    out.append(f"path for {x}-{y} uses non-edge {a}-{b}")
            for v in p[1:-1]:
                if v in image_set:
                    out.append(f"path for {x}-{y} passes branch vertex {v}")
                if v in interior_owner:
                    out.append(f"paths {interior_owner[v]} and {(x, y)} share {v}")
                interior_owner[v] = (x, y)
        if set(self.paths) != set(self.pattern.edges()):
            out.append("paths do not match the pattern edges")
        return out


def _tree_path(t: Graph, a: int, b: int, within) -> list[int]:
    p = t.bfs_path(a, b, within=within)
    if p is None:
        raise PreconditionError(f"no path {a}-{b} inside a branch set")
    return p


def minor_to_subdivision(t: Graph, model: MinorModel) -> Subdivision:
    """Turn a minor model of a max-degree-3 pattern in the tree ``t`` into a
    subdivision, then push every pattern leaf out to a leaf of ``t``.

    Inside each branch set the branch vertex is the meeting point of the
    paths to its (at most three) attachment vertices. Leaf images descend
    through smallest-id children, away from the rest of the subdivision.
    """
    pattern = model.pattern
    if pattern.max_degree() > 3:
        raise PreconditionError("pattern has a vertex of degree above 3")
    issues = model.problems(t)
    if issues:
        raise PreconditionError("invalid minor model: " + "; ".join(issues))
    if t.m != t.n - 1 or not t.is_connected():
        raise PreconditionError("host must be a tree")
    sets = model.branch_sets

    attach: dict[tuple[int, int], int] = {}
    for x, y in pattern.edges():
        a, b = min((a, b) for a in sets[x] for b in t.neighbors(a) if b in sets[y])
        attach[(x, y)] = a
        attach[(y, x)] = b

    image: dict[int, int] = {}
    for x in range(pattern.n):
        pts = [attach[(x, y)] for y in pattern.neighbors(x)]
        if not pts:
            if model.root_anchor is not None and model.root_anchor[0] == x:
                image[x] = model.root_anchor[1]
            else:
                image[x] = min(sets[x])
        elif len(pts) <= 2:
            image[x] = pts[0]
        else:
            p01 = set(_tree_path(t, pts[0], pts[1], sets[x]))
            p02 = set(_tree_path(t, pts[0], pts[2], sets[x]))
            p12 = set(_tree_path(t, pts[1], pts[2], sets[x]))
            (image[x],) = p01 & p02 & p12

    paths: dict[tuple[int, int], list[int]] = {}
    for x, y in pattern.edges():
        left = _tree_path(t, image[x], attach[(x, y)], sets[x])
        right = _tree_path(t, attach[(y, x)], image[y], sets[y])
        paths[(x, y)] = left + right

    anchor = model.root_anchor[1] if model.root_anchor else min(sets[0])
    rooted = root_tree(t, anchor)
    for x in range(pattern.n):
        if pattern.degree(x) > 1:
            continue
        u = image[x]
        if pattern.degree(x) == 1:
            (y,) = pattern.neighbors(x)
            key = (min(x, y), max(x, y))
            p = paths[key] if key[0] == x else paths[key][::-1]
            prev = p[1]
        else:
            p, prev = [u], None
        ext = []
        while t.degree(u) >= 2:
            options = [w for w in t.neighbors(u) if w != prev]
            kids = [w for w in options if rooted.parent[w] == u]
            nxt = min(kids) if kids else min(options)
            ext.append(nxt)
            prev, u = u, nxt
        if not ext:
            continue
        new_p = ext[::-1] + [image[x]] + p[1:]
        image[x] = u
        if pattern.degree(x) == 1:
            paths[key] = new_p if key[0] == x else new_p[::-1]

    return Subdivision(pattern, image, {e: tuple(p) for e, p in paths.items()})

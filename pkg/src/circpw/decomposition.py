"""Path decompositions: representation, validation, normalisation and the
conversion of a rooted forest into a decomposition of its closure."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PreconditionError
from .graph import Graph, RootedForest

MISSING_VERTEX = "missing-vertex"
UNCOVERED_EDGE = "uncovered-edge"
BROKEN_INTERVAL = "broken-interval"


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __init__(self, bags: Iterable[Iterable[int]]):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))

    def __len__(self):
        return len(self.bags)

    def __iter__(self):
        return iter(self.bags)

    @property
    def width(self) -> int:
        return width(self)

    def canonical(self) -> PathDecomposition:
        """Drop empty bags."""
        return PathDecomposition(b for b in self.bags if b)

    def relabel(self, mapping: Sequence[int] | dict[int, int]) -> PathDecomposition:
        return PathDecomposition({mapping[v] for v in b} for b in self.bags)

    def first_bag(self) -> dict[int, int]:
        """Vertex -> index of the first bag containing it."""
        first: dict[int, int] = {}
        for i, b in enumerate(self.bags):
            for v in b:
                first.setdefault(v, i)
        return first

    def to_dict(self) -> dict:
        return {"width": width(self), "bags": [sorted(b) for b in self.bags]}

    def to_json(self, **extra) -> str:
        d = self.to_dict()
        d.update(extra)
        return json.dumps(d, sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> PathDecomposition:
        bags = d["bags"]
        if not isinstance(bags, list) or not all(isinstance(b, list) for b in bags):
            raise ValueError("'bags' must be an array of arrays")
        if not all(isinstance(v, int) for b in bags for v in b):
            raise ValueError("bags must contain integer vertex ids")
        return cls(bags)

    @classmethod
    def from_json(cls, text: str) -> PathDecomposition:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    kind: str
    item: int | tuple[int, int]
    bags: tuple[int, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        lines = [f"invalid: {len(self.violations)} violation(s)"]
        for v in self.violations:
            lines.append(f"  {v.kind} {v.item} bags={list(v.bags)}")
        return "\n".join(lines)


def width(d: PathDecomposition) -> int:
    if not d.bags:
        raise ValueError("width of an empty decomposition is undefined")
    return max(len(b) for b in d.bags) - 1


def validate(g: Graph, d: PathDecomposition) -> ValidationReport:
    """Check the three decomposition axioms and report every failure."""
    where: dict[int, list[int]] = {}
    for i, b in enumerate(d.bags):
        for v in b:
            if not (isinstance(v, int) and 0 <= v < g.n):
                raise ValueError(f"bag {i} holds vertex {v!r} outside 0..{g.n - 1}")
            where.setdefault(v, []).append(i)
    violations = []
    for v in range(g.n):
        if v not in where:
            violations.append(Violation(MISSING_VERTEX, v))
    for u, v in g.edges():
        if u in where and v in where and not any(u in d.bags[i] for i in where[v]):
            violations.append(Violation(UNCOVERED_EDGE, (u, v)))
    for v in sorted(where):
        idx = where[v]
        if idx[-1] - idx[0] + 1 != len(idx):
            violations.append(Violation(BROKEN_INTERVAL, v, tuple(idx)))
    return ValidationReport(tuple(violations))


def require_valid(g: Graph, d: PathDecomposition, what: str = "decomposition") -> None:
    report = validate(g, d)
    if not report.valid:
        raise PreconditionError(f"{what} is not a valid path decomposition: {report.summary()}")


def normalise_bags(bags: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    """Split bags until no two vertices share a first bag.

    Assumes the vertex intervals are contiguous, so the vertices first
    appearing in bag i are exactly ``B_i - B_{i-1}``. Those vertices are
    introduced one bag at a time in ascending id order, which is what
    repeatedly replacing ``B_i`` by ``B_i - {v}, B_i`` produces when ``v``
    is always the largest remaining newcomer.
    """
    out = []
    prev: frozenset[int] = frozenset()
    for b in bags:
        new = sorted(b - prev)
        for r in range(1, len(new)):
            out.append(b - frozenset(new[r:]))
        out.append(b)
        prev = b
    return out


def normalise(g: Graph, d: PathDecomposition) -> PathDecomposition:
    require_valid(g, d)
    return PathDecomposition(normalise_bags(d.canonical().bags))


def is_normalised(d: PathDecomposition) -> bool:
    first = d.first_bag()
    return len(set(first.values())) == len(first)


def forest_closure_decomposition(f: RootedForest) -> PathDecomposition:
    """One bag per vertex: its root path, in depth-first preorder.

    The result decomposes ``clos(f)`` (so any subgraph of it) with width
    equal to the height of ``f``.
    """
    if f.n == 0:
        raise ValueError("empty forest")
    bags = []
    for v in f.preorder():
        bags.append(frozenset(f.ancestors(v)))
    return PathDecomposition(bags)


def concatenate(*parts: PathDecomposition) -> PathDecomposition:
    return PathDecomposition(b for d in parts for b in d.bags)


def add_to_every_bag(d: PathDecomposition, extra: Iterable[int]) -> PathDecomposition:
    extra = frozenset(extra)
    if not d.bags:
        return PathDecomposition([extra])
    return PathDecomposition(b | extra for b in d.bags)

"""Bitmask helpers for the exponential searches (vertex sets as ints)."""
from __future__ import annotations

import time
from typing import Iterator, Sequence

from .errors import BudgetError


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def reach(masks: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside ``allowed`` (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(masks: Sequence[int], alive: int) -> list[int]:
    out = []
    rest = alive
    while rest:
        low = (rest & -rest).bit_length() - 1
        c = reach(masks, low, alive)
        out.append(c)
        rest &= ~c
    return out


def is_forest_mask(masks: Sequence[int], alive: int) -> bool:
    edges2 = sum((masks[v] & alive).bit_count() for v in bits(alive))
    return edges2 // 2 == alive.bit_count() - len(component_masks(masks, alive))


def find_any_cycle(masks: Sequence[int], alive: int) -> list[int] | None:
    """Some cycle in the induced subgraph, via an iterative DFS back edge."""
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for s in bits(alive):
        if s in depth:
            continue
        depth[s] = 0
        parent[s] = -1
        stack = [(s, iter(list(bits(masks[s] & alive))))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == parent[v]:
                    continue
                if w in depth:
                    if depth[w] < depth[v]:
                        cyc = [v]
                        while cyc[-1] != w:
                            cyc.append(parent[cyc[-1]])
                        return cyc
                    continue
                depth[w] = depth[v] + 1
                parent[w] = v
                stack.append((w, iter(list(bits(masks[w] & alive)))))
                break
            else:
                stack.pop()
    return None


def find_long_cycle(masks: Sequence[int], alive: int, t: int,
                    max_len: int | None = None) -> list[int] | None:
    """A cycle with at least ``t`` vertices (and at most ``max_len``) in the
    subgraph induced by ``alive``; ``None`` if there is none."""
    if t <= 3 and max_len is None:
        return find_any_cycle(masks, alive)
    cap = alive.bit_count() if max_len is None else max_len
    for s in bits(alive):
        allowed = alive & ~((2 << s) - 1)
        if (allowed.bit_count() + 1) < t:
            break
        path = [s]
        found = _extend_to_cycle(masks, s, allowed, path, 1 << s, t, cap)
        if found:
            return found
    return None


def _extend_to_cycle(masks, s, allowed, path, used, t, cap):
    v = path[-1]
    if len(path) >= t and (masks[v] >> s) & 1 and len(path) >= 3:
        return list(path)
    if len(path) >= cap:
        return None
    free = allowed & ~used
    if len(path) + (reach(masks, v, free | (1 << v)).bit_count() - 1) < t:
        return None
    for w in bits(masks[v] & free):
        path.append(w)
        got = _extend_to_cycle(masks, s, allowed, path, used | (1 << w), t, cap)
        if got:
            return got
        path.pop()
    return None


class Deadline:
    def __init__(self, seconds: float | None, what: str):
        self.what = what
        self.end = None if seconds is None else time.monotonic() + seconds
        self._tick = 0

    def check(self) -> None:
        if self.end is None:
            return
        # the clock is read on the first call and every 256th after it
        tick = self._tick
        self._tick += 1
        if tick & 255 == 0 and time.monotonic() > self.end:
            raise BudgetError(f"{self.what}: time limit exceeded")

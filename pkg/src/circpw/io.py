"""Reading and writing graphs: ``n m`` edge lists, graph6, DOT."""
from __future__ import annotations

from .errors import ParseError
from .graph import Graph

FORMATS = ("edgelist", "graph6")


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {format!r}")


def format_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return to_edgelist(g)
    if format == "graph6":
        return to_graph6(g) + "\n"
    if format == "dot":
        return g.to_dot()
    raise ValueError(f"unknown graph format {format!r}")


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line.strip()!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {line.strip()!r}", lineno) from None


def parse_edgelist(text: str) -> Graph:
    """Header ``n m`` then ``m`` lines ``u v`` with 0-based ids.

    Blank lines are ignored.
    """
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    seen = set()
    edges = []
    for lineno, ln in body:
        u, v = _ints(ln, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def to_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("missing vertex count", 1)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated vertex count", 1)
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated vertex count", 1)
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Standard graph6: N(n) then the upper triangle, column by column,
    packed six bits per byte with offset 63."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if "\n" in line:
        raise ParseError("graph6 input must hold a single graph", 2)
    data = line.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("byte outside the graph6 range 63..126", 1)
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", 1)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (head + body).decode("ascii")

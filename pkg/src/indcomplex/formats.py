"""Text formats: graph6, a small adjacency-list fixture format, facet lists.

graph6 follows the standard encoding: one byte n+63 for n <= 62, then the
upper triangle of the adjacency matrix in column order, packed big-endian
into 6-bit chunks, each chunk offset by 63.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph


class FormatError(ValueError):
    """Parse failure with a 1-based line and column position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def _triangle_pairs(n: int):
    """(i, j) pairs of the upper triangle in graph6 column order."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    chars = [chr(n + 63)]
    chunk = 0
    filled = 0
    for i, j in _triangle_pairs(n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            chars.append(chr(chunk + 63))
            chunk = filled = 0
    if filled:
        chars.append(chr((chunk << (6 - filled)) + 63))
    return "".join(chars)


def graph_from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 input")
    n = ord(s[0]) - 63
    if n < 0 or ord(s[0]) > 126:
        raise FormatError(f"bad graph6 size byte {s[0]!r}")
    if n > MAX_VERTICES:
        raise FormatError(f"graph6 input has {n} vertices, cap is {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise FormatError(f"graph6 body has {len(s) - 1} bytes, expected {need}",
                          column=len(s))
    bitpos = 0
    adj = [0] * n
    for i, j in _triangle_pairs(n):
        byte = ord(s[1 + bitpos // 6]) - 63
        if byte < 0 or byte > 63:
            raise FormatError(f"bad graph6 byte {s[1 + bitpos // 6]!r}",
                              column=2 + bitpos // 6)
        if byte >> (5 - bitpos % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        bitpos += 1
    return Graph.from_adjacency_masks(tuple(adj))


def graph_to_adjacency_text(g: Graph) -> str:
    """Serialize as "n; u v; u v; ..." with edges sorted."""
    parts = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "; ".join(parts)


def graph_from_adjacency_text(text: str) -> Graph:
    """Parse "n; u v; u v; ...", reporting the failing column on error."""
    line = text.rstrip("\n")
    fields = line.split(";")
    col = 1
    head = fields[0].strip()
    if not head.isdigit():
        raise FormatError(f"expected vertex count, got {head!r}", column=col)
    n = int(head)
    if n > MAX_VERTICES:
        raise FormatError(f"vertex count {n} exceeds cap {MAX_VERTICES}", column=col)
    edges = []
    col += len(fields[0]) + 1
    for field in fields[1:]:
        if not field.strip():
            col += len(field) + 1
            continue
        bits_ = field.split()
        if len(bits_) != 2 or not all(b.isdigit() for b in bits_):
            raise FormatError(f"expected 'u v', got {field.strip()!r}", column=col)
        u, v = int(bits_[0]), int(bits_[1])
        if u >= n or v >= n or u == v:
            raise FormatError(f"bad edge {u} {v} for n={n}", column=col)
        edges.append((u, v))
        col += len(field) + 1
    return Graph(n, edges)


def complex_to_facet_lines(complex_) -> str:
    """Serialize a simplicial complex as sorted "facet: v1 v2 ..." lines."""
    rows = []
    for facet in complex_.facets():
        rows.append(sorted(facet))
    rows.sort(key=lambda f: (len(f), f))
    return "\n".join("facet:" + "".join(f" {v}" for v in f) for f in rows)


def complex_from_facet_lines(text: str):
    from .complexes import SimplicialComplex

    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        row = raw.strip()
        if not row:
            continue
        if not row.startswith("facet:"):
            raise FormatError("expected 'facet: ...'", line=lineno)
        body = row[len("facet:"):].split()
        if not all(b.isdigit() for b in body):
            raise FormatError(f"non-integer vertex in {row!r}", line=lineno)
        facets.append(frozenset(int(b) for b in body))
    return SimplicialComplex.from_facets(facets)

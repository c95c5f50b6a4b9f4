"""Simple graphs on at most 32 vertices, stored as adjacency bitmasks.

Vertices are always 0..n-1.  Surgeries (deletion, contraction, splitting)
return new graphs with densely renumbered vertices; the ``labels`` tuple
carries the original vertex names through any chain of surgeries so that
reduction traces can report witnesses in the coordinates of the root graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 32
CYCLE_ENUM_CAP = 16


class GraphTooLargeError(ValueError):
    """Raised when an operation's documented size cap is exceeded."""


class VertexError(ValueError):
    """Raised for out-of-range or otherwise invalid vertex arguments."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Immutable simple graph: no loops, symmetric adjacency."""

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Optional[tuple[str, ...]] = None):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphTooLargeError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise VertexError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency_masks(cls, masks: Iterable[int],
                             labels: Optional[tuple[str, ...]] = None) -> "Graph":
        """Build from per-vertex neighbor bitmasks (validated)."""
        masks = tuple(masks)
        n = len(masks)
        if n > MAX_VERTICES:
            raise GraphTooLargeError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise VertexError(f"adjacency of {v} mentions vertices >= {n}")
            if m >> v & 1:
                raise VertexError(f"self-loop at {v}")
        for v, m in enumerate(masks):
            for u in bits(m):
                if not masks[u] >> v & 1:
                    raise VertexError(f"adjacency not symmetric at ({u},{v})")
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", masks)
        object.__setattr__(g, "labels", tuple(labels) if labels is not None else None)
        return g

    # -- basic queries -------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexError(f"vertex {v} out of range for n={self.n}")

    def label(self, v: int) -> str:
        self._check(v)
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_labels(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(str(v) for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.adj[v])

    def neighborhood(self, v: int) -> frozenset[int]:
        """N(v), the open neighborhood."""
        self._check(v)
        return frozenset(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        """N[v] = N(v) with v itself."""
        self._check(v)
        return frozenset(bits(self.adj[v] | (1 << v)))

    def neighborhood_mask(self, v: int) -> int:
        self._check(v)
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- surgeries -----------------------------------------------------

    def induced_subgraph(self, keep_mask: int) -> "Graph":
        """Induced subgraph on the vertices of ``keep_mask``, renumbered densely.

        Kept vertices are renumbered in increasing order; labels follow.
        """
        keep = [v for v in bits(keep_mask) if v < self.n]
        index = {v: i for i, v in enumerate(keep)}
        masks = []
        for v in keep:
            m = 0
            for u in bits(self.adj[v] & keep_mask):
                m |= 1 << index[u]
            masks.append(m)
        labels = tuple(self.label(v) for v in keep)
        g = Graph.__new__(Graph)
        object.__setattr__(g, "n", len(keep))
        object.__setattr__(g, "adj", tuple(masks))
        object.__setattr__(g, "labels", labels)
        return g

    def delete_vertices(self, remove: Iterable[int]) -> "Graph":
        """Delete a vertex set; the rest is renumbered densely (labels record the map)."""
        rm = 0
        for v in remove:
            self._check(v)
            rm |= 1 << v
        return self.induced_subgraph(((1 << self.n) - 1) & ~rm)

    def contract_path(self, witness: "PathWitness") -> "Graph":
        """Contract a degree-two path a-b-c-d (ends non-adjacent) to one new vertex.

        The new vertex is numbered last and made adjacent to
        (N(a) | N(d)) minus the path; no loop can arise because the ends
        are non-adjacent and the interior has degree two.
        """
        validate_path_witness(self, witness)
        if witness.ends_adjacent:
            raise ValueError("cannot contract a path whose ends are adjacent")
        a, b, c, d = witness.a, witness.b, witness.c, witness.d
        path_mask = (1 << a) | (1 << b) | (1 << c) | (1 << d)
        keep = [v for v in range(self.n) if not path_mask >> v & 1]
        index = {v: i for i, v in enumerate(keep)}
        p = len(keep)
        p_nbrs = (self.adj[a] | self.adj[d]) & ~path_mask
        masks = []
        for v in keep:
            m = 0
            for u in bits(self.adj[v] & ~path_mask):
                m |= 1 << index[u]
            if p_nbrs >> v & 1:
                m |= 1 << p
            masks.append(m)
        masks.append(sum(1 << index[u] for u in bits(p_nbrs)))
        merged = "+".join(self.label(v) for v in (a, b, c, d))
        labels = tuple(self.label(v) for v in keep) + (merged,)
        g = Graph.__new__(Graph)
        object.__setattr__(g, "n", p + 1)
        object.__setattr__(g, "adj", tuple(masks))
        object.__setattr__(g, "labels", labels)
        return g

    # -- connectivity --------------------------------------------------

    def _component_mask(self, start: int, within: int) -> int:
        """Vertices reachable from ``start`` inside the vertex set ``within``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def component_masks(self, within: Optional[int] = None) -> list[int]:
        if within is None:
            within = (1 << self.n) - 1
        rest = within
        comps = []
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = self._component_mask(v, within)
            comps.append(comp)
            rest &= ~comp
        return comps

    def connected_components(self) -> list["Graph"]:
        """Maximal connected induced subgraphs; the empty graph has none."""
        return [self.induced_subgraph(m) for m in self.component_masks()]

    def is_connected(self) -> bool:
        """Connected in the usual sense; the empty graph counts as not connected."""
        return len(self.component_masks()) == 1

    def cut_vertices(self) -> frozenset[int]:
        """Articulation points: vertices whose removal splits some component."""
        cuts = []
        full = (1 << self.n) - 1
        base = self.component_masks()
        for v in range(self.n):
            rest = full & ~(1 << v)
            before = sum(1 for m in base if m != 1 << v)
            if popcount(rest) == 0:
                continue
            after = len(self.component_masks(rest))
            if after > before:
                cuts.append(v)
        return frozenset(cuts)

    def is_two_connected(self) -> bool:
        """Connected, at least three vertices, and no cut vertex."""
        return self.n >= 3 and self.is_connected() and not self.cut_vertices()

    def split_at_cut_vertex(self, w: int) -> tuple["Graph", "Graph"]:
        """Split at a cut vertex: one component of G-w plus w, versus the rest plus w.

        The first part is the component containing the smallest vertex.
        Vertex sets overlap exactly in w; the edge sets partition E(G).
        """
        self._check(w)
        rest = ((1 << self.n) - 1) & ~(1 << w)
        comps = self.component_masks(rest)
        attached = [m for m in comps if self.adj[w] & m]
        if len(attached) < 2:
            raise VertexError(f"vertex {w} is not a cut vertex")
        first = attached[0]
        g1 = self.induced_subgraph(first | (1 << w))
        g2 = self.induced_subgraph(rest & ~first | (1 << w))
        return g1, g2

    # -- cycles --------------------------------------------------------

    def cycle_masks(self) -> list[tuple[int, int]]:
        """All simple cycles as (length, vertex mask), each counted once.

        DFS over simple paths rooted at the cycle's smallest vertex, with
        the second path vertex smaller than the last to kill orientation.
        """
        if self.n > CYCLE_ENUM_CAP:
            raise GraphTooLargeError(f"cycle enumeration capped at {CYCLE_ENUM_CAP} vertices")
        out = []
        adj = self.adj
        for root in range(self.n):
            higher = ~((1 << (root + 1)) - 1)
            # entries: (current, visited mask, second path vertex, path length)
            work = [(x, 1 << root | 1 << x, x, 2)
                    for x in bits(adj[root] & higher)]
            while work:
                cur, visited, second, length = work.pop()
                if length >= 3 and adj[cur] >> root & 1 and second < cur:
                    out.append((length, visited))
                for nxt in bits(adj[cur] & higher & ~visited):
                    work.append((nxt, visited | 1 << nxt, second, length + 1))
        return out

    def cycle_lengths(self) -> list[int]:
        """Multiset of simple cycle lengths, sorted."""
        return sorted(length for length, _ in self.cycle_masks())

    def has_cycle_div3(self) -> bool:
        """True iff some simple cycle has length divisible by three."""
        if self.n > CYCLE_ENUM_CAP:
            raise GraphTooLargeError(f"cycle enumeration capped at {CYCLE_ENUM_CAP} vertices")
        adj = self.adj
        # triangles first: cheap and very common
        for u in range(self.n):
            for v in bits(adj[u] >> (u + 1) << (u + 1)):
                if adj[u] & adj[v]:
                    return True
        for root in range(self.n):
            higher = ~((1 << (root + 1)) - 1)
            work = [(x, 1 << root | 1 << x, 2) for x in bits(adj[root] & higher)]
            while work:
                cur, visited, length = work.pop()
                if length >= 3 and length % 3 == 0 and adj[cur] >> root & 1:
                    return True
                for nxt in bits(adj[cur] & higher & ~visited):
                    work.append((nxt, visited | 1 << nxt, length + 1))
        return False

    def induced_cycle_lengths(self) -> list[int]:
        """Multiset of chordless cycle lengths, sorted."""
        out = []
        for length, mask in self.cycle_masks():
            if all(popcount(self.adj[v] & mask) == 2 for v in bits(mask)):
                out.append(length)
        return sorted(out)

    def has_induced_cycle_div3(self) -> bool:
        return any(length % 3 == 0 for length in self.induced_cycle_lengths())


# -- reduction targets -------------------------------------------------

@dataclass(frozen=True)
class PathWitness:
    """A path a-b-c-d of length three whose interior b, c has degree two."""

    a: int
    b: int
    c: int
    d: int
    ends_adjacent: bool

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def validate_path_witness(g: Graph, w: PathWitness) -> None:
    verts = w.vertices
    if len(set(verts)) != 4:
        raise ValueError(f"path witness vertices not distinct: {verts}")
    for v in verts:
        g._check(v)
    if not (g.has_edge(w.a, w.b) and g.has_edge(w.b, w.c) and g.has_edge(w.c, w.d)):
        raise ValueError(f"{verts} is not a path in the graph")
    if g.degree(w.b) != 2 or g.degree(w.c) != 2:
        raise ValueError("interior path vertices must have degree two")
    if g.has_edge(w.a, w.d) != w.ends_adjacent:
        raise ValueError("ends_adjacent flag does not match the graph")


# Target kinds, in dispatch priority order.
BASE_CASE = "base_case"
DISCONNECTED = "disconnected"
DOMINATED_VERTEX = "dominated_vertex"
CUT_VERTEX = "cut_vertex"
ADJACENT_DEGREE_TWO_PAIR = "adjacent_degree_two_pair"
NO_TARGET = "no_target"


@dataclass(frozen=True)
class ReductionTarget:
    """Which reduction rule applies, with its witness data.

    ``no_target`` on a 2-connected graph certifies (by the structure
    theorem for this graph class) a cycle of length divisible by three.
    """

    kind: str
    witness: tuple[int, ...] = ()
    path: Optional[PathWitness] = None


def find_dominated_pair(g: Graph) -> Optional[tuple[int, int]]:
    """Lexicographically least (u, v) with u != v and N(u) subset of N(v).

    Such u, v are never adjacent: an edge would put v inside N(v).
    """
    for u in range(g.n):
        au = g.adj[u]
        for v in range(g.n):
            if u != v and au & ~g.adj[v] == 0 and not au >> v & 1:
                return (u, v)
    return None


def find_path_witness(g: Graph) -> Optional[PathWitness]:
    """Least adjacent degree-two pair b < c, extended to a path a-b-c-d."""
    for b in range(g.n):
        if popcount(g.adj[b]) != 2:
            continue
        for c in bits(g.adj[b] >> (b + 1) << (b + 1)):
            if popcount(g.adj[c]) != 2:
                continue
            a = next(bits(g.adj[b] & ~(1 << c)))
            d = next(bits(g.adj[c] & ~(1 << b)))
            if a == d:
                continue  # triangle, not a path
            return PathWitness(a, b, c, d, bool(g.adj[a] >> d & 1))
    return None


def find_reduction_target(g: Graph) -> ReductionTarget:
    """Deterministic rule dispatch, in fixed priority order.

    Priority: base case (n < 3), disconnected, dominated vertex (which
    subsumes isolated vertices and non-adjacent degree-two twins), cut
    vertex, adjacent degree-two pair.  Witnesses are lexicographically
    least for reproducible traces.
    """
    if g.n < 3:
        return ReductionTarget(BASE_CASE)
    if not g.is_connected():
        return ReductionTarget(DISCONNECTED)
    pair = find_dominated_pair(g)
    if pair is not None:
        return ReductionTarget(DOMINATED_VERTEX, witness=pair)
    cuts = g.cut_vertices()
    if cuts:
        return ReductionTarget(CUT_VERTEX, witness=(min(cuts),))
    path = find_path_witness(g)
    if path is not None:
        return ReductionTarget(ADJACENT_DEGREE_TWO_PAIR, witness=path.vertices, path=path)
    return ReductionTarget(NO_TARGET)


# -- common constructions (used throughout the tests and demos) --------

def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise ValueError("cycles need at least three vertices")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])

"""Simplicial complexes, independence complexes, and complex combinators.

A complex is a downward-closed family of faces over integer vertices.  The
VOID complex (no faces at all) is distinct from the EMPTY complex {<>},
which is the sphere of dimension -1 and the identity for joins.  The
independence complex of a graph is never void: the empty set is always
independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable

from .graphs import Graph, PathWitness, bits, validate_path_witness
from .homology import BettiVector, reduced_betti_from_masks

INDEPENDENCE_VERTEX_CAP = 24

Face = FrozenSet[int]


class GroundSetCollisionError(ValueError):
    """Join requires disjoint ground sets."""


class SimplicialComplex:
    """Finite abstract simplicial complex with explicit face family."""

    __slots__ = ("faces", "vertices")

    def __init__(self, faces: Iterable[Iterable[int]]):
        fam = frozenset(frozenset(f) for f in faces)
        if fam and frozenset() not in fam:
            raise ValueError("a non-void complex must contain the empty face")
        for face in fam:
            for v in face:
                if face - {v} not in fam:
                    raise ValueError(f"not downward closed at face {sorted(face)}")
        object.__setattr__(self, "faces", fam)
        object.__setattr__(self, "vertices",
                           frozenset(v for f in fam for v in f))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given faces; no facets gives the void complex."""
        fam: set[Face] = set()
        stack = [frozenset(f) for f in facets]
        if stack:
            fam.add(frozenset())
        while stack:
            face = stack.pop()
            if face in fam:
                continue
            fam.add(face)
            for v in face:
                stack.append(face - {v})
        return cls(fam)

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The (-1)-sphere {<>}."""
        return cls((frozenset(),))

    @classmethod
    def point(cls, v: int = 0) -> "SimplicialComplex":
        return cls.from_facets([{v}])

    # -- queries -------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_empty_complex(self) -> bool:
        return self.faces == frozenset({frozenset()})

    @property
    def dim(self) -> int:
        """Dimension; -1 for {<>}, and -2 by convention for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.faces) - 1

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.faces)} faces, dim={self.dim})"

    def facets(self) -> list[Face]:
        """Inclusion-maximal faces."""
        return [f for f in self.faces
                if not any(f < g for g in self.faces if len(g) == len(f) + 1)]

    # -- combinators ---------------------------------------------------

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """All unions of a face of self with a face of other; {<>} is the identity."""
        if self.vertices & other.vertices:
            raise GroundSetCollisionError(
                f"ground sets share {sorted(self.vertices & other.vertices)}")
        return SimplicialComplex(s | t for s in self.faces for t in other.faces)

    def suspension(self) -> "SimplicialComplex":
        """Join with two fresh points."""
        base = max(self.vertices, default=-1) + 1
        two_points = SimplicialComplex(
            (frozenset(), frozenset({base}), frozenset({base + 1})))
        return self.join(two_points)

    def link(self, v: int) -> "SimplicialComplex":
        return SimplicialComplex(f for f in self.faces
                                 if v not in f and f | {v} in self.faces)

    def delete(self, v: int) -> "SimplicialComplex":
        return SimplicialComplex(f for f in self.faces if v not in f)

    # -- homology ------------------------------------------------------

    def betti_vector(self) -> BettiVector:
        order = {v: i for i, v in enumerate(sorted(self.vertices))}
        masks = []
        for face in self.faces:
            m = 0
            for v in face:
                m |= 1 << order[v]
            masks.append(m)
        return reduced_betti_from_masks(masks)


# -- independence complexes --------------------------------------------

def independent_set_masks(g: Graph) -> list[int]:
    """All independent sets of g as bitmasks (the empty set included)."""
    sets = [0]
    adj = g.adj
    for v in range(g.n):
        bit = 1 << v
        av = adj[v]
        sets += [s | bit for s in sets if not av & s]
    return sets


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex whose faces are the independent vertex sets of g."""
    if g.n > INDEPENDENCE_VERTEX_CAP:
        raise ValueError(
            f"independence complex capped at {INDEPENDENCE_VERTEX_CAP} vertices")
    return SimplicialComplex(frozenset(bits(m)) for m in independent_set_masks(g))


def graph_betti_vector(g: Graph) -> BettiVector:
    """Reduced Betti vector of Ind(g), computed directly from bitmasks.

    Same result as ``independence_complex(g).betti_vector()`` but without
    building the face-set objects; this is the oracle used in sweeps.
    """
    if g.n > INDEPENDENCE_VERTEX_CAP:
        raise ValueError(
            f"independence complex capped at {INDEPENDENCE_VERTEX_CAP} vertices")
    return reduced_betti_from_masks(independent_set_masks(g))


def reduced_euler_characteristic_by_counts(g: Graph) -> int:
    """Minus the alternating sum of independent-set counts by cardinality.

    The empty set counts at cardinality zero.  Matches the Betti-derived
    reduced Euler characteristic.
    """
    total = 0
    for m in independent_set_masks(g):
        total += -1 if bin(m).count("1") & 1 else 1
    return -total


# -- the two explicit collapse matchings of the path rule --------------

@dataclass(frozen=True)
class FaceMatching:
    """Pairs (face, face + {free_vertex}) meant to be collapsed together."""

    free_vertex: int
    pairs: tuple[tuple[Face, Face], ...]

    def matched_faces(self) -> set[Face]:
        out: set[Face] = set()
        for small, big in self.pairs:
            out.add(small)
            out.add(big)
        return out


def lemma_path_matchings(g: Graph, witness: PathWitness
                         ) -> tuple[FaceMatching, FaceMatching]:
    """The two face matchings that collapse Ind(G) toward the suspension.

    For a path a-b-c-d with degree-two interior and non-adjacent ends:
    the first matching pairs each independent sigma containing a, avoiding
    b, c, d and meeting N(d), with sigma + {c}; the second swaps the roles
    of (a, c) and (d, b).
    """
    validate_path_witness(g, witness)
    if witness.ends_adjacent:
        raise ValueError("matchings are defined for non-adjacent path ends")
    faces = [frozenset(bits(m)) for m in independent_set_masks(g)]
    a, b, c, d = witness.a, witness.b, witness.c, witness.d
    nd = g.neighborhood(d)
    na = g.neighborhood(a)

    m_pairs = tuple(
        (s, s | {c}) for s in faces
        if a in s and not s & {b, c, d} and s & nd)
    n_pairs = tuple(
        (s, s | {b}) for s in faces
        if d in s and not s & {a, b, c} and s & na)
    return FaceMatching(c, m_pairs), FaceMatching(b, n_pairs)


def matching_is_valid(k: SimplicialComplex, matching: FaceMatching) -> bool:
    """Pairs are faces, pairwise disjoint as a family, and removing them
    leaves a downward-closed family."""
    seen: set[Face] = set()
    for small, big in matching.pairs:
        if small not in k.faces or big not in k.faces:
            return False
        if big != small | {matching.free_vertex} or matching.free_vertex in small:
            return False
        if small in seen or big in seen:
            return False
        seen.add(small)
        seen.add(big)
    remainder = k.faces - seen
    return all(f - {v} in remainder for f in remainder for v in f)


def collapse_matchings(k: SimplicialComplex, *matchings: FaceMatching
                       ) -> SimplicialComplex:
    """Remove all matched faces; valid matchings leave a complex with the
    same homotopy type."""
    removed: set[Face] = set()
    for m in matchings:
        removed |= m.matched_faces()
    return SimplicialComplex(k.faces - removed)

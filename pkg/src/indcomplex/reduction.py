"""Recursive homotopy-type computation for independence complexes.

For graphs with no cycle of length divisible by three the rewriting below
always terminates in Contractible or Sphere(d).  Unknown is a value, not
an error: it reports that a rule's precondition failed, which (for a
connected 2-connected remainder) certifies a cycle of length divisible by
three somewhere in the input.  Every step is recorded in a replayable
trace whose witnesses use the root graph's vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import (ADJACENT_DEGREE_TWO_PAIR, BASE_CASE, CUT_VERTEX,
                     DISCONNECTED, DOMINATED_VERTEX, NO_TARGET, Graph,
                     GraphTooLargeError, find_reduction_target, popcount)


@dataclass(frozen=True)
class HomotopyType:
    """Contractible, Sphere(d >= -1), or Unknown."""

    kind: str
    dim: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("contractible", "sphere", "unknown"):
            raise ValueError(f"bad homotopy kind {self.kind!r}")
        if self.kind == "sphere":
            if self.dim is None or self.dim < -1:
                raise ValueError("sphere dimension must be >= -1")
        elif self.dim is not None:
            raise ValueError(f"{self.kind} carries no dimension")

    def __str__(self) -> str:
        if self.kind == "sphere":
            return f"Sphere({self.dim})"
        return self.kind.capitalize()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "dim": self.dim}


CONTRACTIBLE = HomotopyType("contractible")
UNKNOWN = HomotopyType("unknown")


def sphere(dim: int) -> HomotopyType:
    return HomotopyType("sphere", dim)


def join_type(t1: HomotopyType, t2: HomotopyType) -> HomotopyType:
    """Homotopy type of a join: cones absorb, sphere dimensions add plus one."""
    if t1.kind == "contractible" or t2.kind == "contractible":
        return CONTRACTIBLE
    if t1.kind == "unknown" or t2.kind == "unknown":
        return UNKNOWN
    return sphere(t1.dim + t2.dim + 1)


def suspension_type(t: HomotopyType) -> HomotopyType:
    return join_type(sphere(0), t)


class NoContractibleSideError(ValueError):
    """The cut-vertex case analysis found no contractible side complex."""


class TheoremViolationError(AssertionError):
    """An in-class graph broke an invariant the proved theorem guarantees.

    Raising this means an implementation bug (or a research event); it is
    never expected in normal operation.
    """


@dataclass(frozen=True)
class SeparationSide:
    """Types of Ind of one side of a cut-vertex split: the whole side,
    the side minus the cut vertex, and minus its closed neighborhood."""

    whole: HomotopyType
    minus_w: HomotopyType
    minus_closed_nbhd: HomotopyType

    def triple(self) -> tuple[HomotopyType, HomotopyType, HomotopyType]:
        return (self.whole, self.minus_w, self.minus_closed_nbhd)

    def has_contractible(self) -> bool:
        return any(t.kind == "contractible" for t in self.triple())


def separate_combine(g1: SeparationSide, g2: SeparationSide
                     ) -> tuple[HomotopyType, int]:
    """Combine the six side types at a cut vertex; returns (type, case).

    Cases are tried in fixed order on the first side: (1) side minus the
    cut vertex contractible, (2) side minus the closed neighborhood
    contractible, (3) the whole side contractible.
    """
    if g1.minus_w.kind == "contractible":
        return suspension_type(join_type(g1.minus_closed_nbhd,
                                         g2.minus_closed_nbhd)), 1
    if g1.minus_closed_nbhd.kind == "contractible":
        return join_type(g1.minus_w, g2.minus_w), 2
    if g1.whole.kind == "contractible":
        return join_type(g1.minus_w, g2.whole), 3
    raise NoContractibleSideError(
        "no contractible complex on the first side of the split")


@dataclass(frozen=True)
class TraceStep:
    """One applied rule: what it matched, what it did, and its subresults."""

    rule: str
    witness: tuple[str, ...]
    n_before: int
    n_after: int
    combinator: str
    result: HomotopyType
    children: tuple["TraceStep", ...] = ()
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "rule": self.rule,
            "witness": list(self.witness),
            "n_before": self.n_before,
            "n_after": self.n_after,
            "combinator": self.combinator,
            "result": self.result.to_dict(),
            "children": [c.to_dict() for c in self.children],
        }
        if self.note:
            out["note"] = self.note
        return out

    def rules(self) -> list[str]:
        """Rule names of this step and all descendants, preorder."""
        out = [self.rule]
        for c in self.children:
            out += c.rules()
        return out


def replay_trace(step: TraceStep) -> HomotopyType:
    """Recompute the root type from the leaves via the recorded combinators."""
    kids = [replay_trace(c) for c in step.children]
    comb = step.combinator
    if comb == "leaf":
        return step.result
    if comb == "identity":
        return kids[0]
    if comb == "suspension":
        return suspension_type(kids[0])
    if comb == "join":
        out = sphere(-1)
        for t in kids:
            out = join_type(out, t)
        return out
    if comb in ("separate1", "separate2", "separate3"):
        g1 = SeparationSide(kids[0], kids[1], kids[2])
        g2 = SeparationSide(kids[3], kids[4], kids[5])
        result, case = separate_combine(g1, g2)
        if f"separate{case}" != comb:
            return UNKNOWN
        return result
    if comb == "unknown":
        return UNKNOWN
    raise ValueError(f"bad combinator {comb!r}")


def _class_violation_possible(g: Graph) -> bool:
    """Best-effort check that g has a cycle of length divisible by three."""
    try:
        return g.has_cycle_div3()
    except GraphTooLargeError:
        return True  # too large to certify either way


def reduce_graph(g: Graph) -> tuple[HomotopyType, TraceStep]:
    """Map a graph to the homotopy type of its independence complex.

    Never Unknown when g has no cycle of length divisible by three; each
    recursive call strictly decreases the vertex count.
    """
    labels = g.vertex_labels()

    # base cases
    if g.n == 0:
        t = sphere(-1)
        return t, TraceStep("BaseCase", (), 0, 0, "leaf", t)
    if g.n == 1:
        return CONTRACTIBLE, TraceStep("BaseCase", (labels[0],), 1, 1,
                                       "leaf", CONTRACTIBLE)
    if g.n == 2:
        t = sphere(0) if g.edge_count() else CONTRACTIBLE
        return t, TraceStep("BaseCase", labels, 2, 2, "leaf", t)

    # an isolated vertex cones the whole complex
    for v in range(g.n):
        if not g.adj[v]:
            return CONTRACTIBLE, TraceStep(
                "IsolatedVertexCone", (labels[v],), g.n, g.n, "leaf",
                CONTRACTIBLE)

    target = find_reduction_target(g)

    if target.kind == DISCONNECTED:
        kids = []
        t = sphere(-1)
        for comp in g.connected_components():
            ct, ctrace = reduce_graph(comp)
            kids.append(ctrace)
            t = join_type(t, ct)
        return t, TraceStep("ComponentJoin", (), g.n, g.n, "join", t,
                            tuple(kids))

    if target.kind == DOMINATED_VERTEX:
        u, v = target.witness
        sub_t, sub_trace = reduce_graph(g.delete_vertices({v}))
        return sub_t, TraceStep("Fold", (labels[u], labels[v]), g.n,
                                g.n - 1, "identity", sub_t, (sub_trace,))

    if target.kind == CUT_VERTEX:
        (w,) = target.witness
        g1, g2 = g.split_at_cut_vertex(w)
        sides = []
        kid_traces = []
        for part in (g1, g2):
            w_local = next(i for i in range(part.n)
                           if part.label(i) == labels[w])
            nbhd = part.closed_neighborhood(w_local)
            types = []
            traces = []
            for sub in (part, part.delete_vertices({w_local}),
                        part.delete_vertices(nbhd)):
                st, strace = reduce_graph(sub)
                types.append(st)
                traces.append(strace)
            sides.append(SeparationSide(*types))
            kid_traces.append(traces)
        if any(t.kind == "unknown"
               for side in sides for t in side.triple()):
            kids = tuple(kid_traces[0] + kid_traces[1])
            return UNKNOWN, TraceStep(
                "SeparateUnknown", (labels[w],), g.n, g1.n + g2.n,
                "unknown", UNKNOWN, kids,
                note="a recursive side result was Unknown")
        if not sides[0].has_contractible() and sides[1].has_contractible():
            sides.reverse()
            kid_traces.reverse()
        kids = tuple(kid_traces[0] + kid_traces[1])
        try:
            t, case = separate_combine(sides[0], sides[1])
        except NoContractibleSideError:
            if _class_violation_possible(g):
                return UNKNOWN, TraceStep(
                    "SeparateNoContractibleSide", (labels[w],), g.n,
                    g1.n + g2.n, "unknown", UNKNOWN, kids,
                    note="no contractible side: a cycle of length divisible "
                         "by three is implied")
            raise TheoremViolationError(
                f"graph {g!r} has no cycle of length divisible by three but "
                "its cut-vertex case analysis found no contractible side")
        return t, TraceStep(f"SeparateCase{case}", (labels[w],), g.n,
                            g1.n + g2.n, f"separate{case}", t, kids)

    if target.kind == ADJACENT_DEGREE_TWO_PAIR:
        witness = target.path
        names = tuple(labels[v] for v in witness.vertices)
        if not witness.ends_adjacent:
            sub = g.contract_path(witness)
            sub_t, sub_trace = reduce_graph(sub)
            t = suspension_type(sub_t)
            return t, TraceStep("Path", names, g.n, sub.n, "suspension",
                                t, (sub_trace,))
        sub = g.delete_vertices(witness.vertices)
        sub_t, sub_trace = reduce_graph(sub)
        t = suspension_type(sub_t)
        return t, TraceStep("Square", names, g.n, sub.n, "suspension",
                            t, (sub_trace,))

    assert target.kind == NO_TARGET
    return UNKNOWN, TraceStep(
        "NoTarget", (), g.n, g.n, "unknown", UNKNOWN,
        note="2-connected with no applicable rule: the graph has a cycle "
             "of length divisible by three")

"""Show the reduction engine's replayable traces step by step.

Every run of the engine records which rule fired, the witness vertices
in the coordinates of the input graph, and how the child results were
combined.  The trace is a certificate: replaying its combinators from
the leaves must reproduce the final homotopy type.  Run with:

    python3 demos/reduction_traces.py
"""

from indcomplex import cycle_graph, reduce_graph, replay_trace
from indcomplex.graphs import Graph


def show(step, depth=0):
    witness = " ".join(step.witness) or "-"
    print("  " * depth + f"{step.rule:18} witness [{witness}]  "
          f"n {step.n_before} -> {step.n_after}  via {step.combinator}"
          f"  => {step.result}")
    if step.note:
        print("  " * depth + f"  note: {step.note}")
    for child in step.children:
        show(child, depth + 1)


# a long cycle: repeated path contractions, each one a suspension
for g, title in [
    (cycle_graph(11), "C11: path contractions until a base case"),
    (Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0),
               (0, 3)]),
     "C7 plus a chord: the chord creates dominated vertices, so folds fire"),
    (Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
     "two triangles joined by an edge: Unknown, with the reason recorded"),
]:
    print(title)
    t, trace = reduce_graph(g)
    show(trace)
    assert replay_trace(trace) == t
    print(f"result {t}; trace replays to the same answer\n")

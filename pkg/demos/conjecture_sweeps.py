"""Run the desk-scale verification sweeps at small sizes.

The theorem sweep pits the reduction engine against the Smith normal
form homology oracle on every labeled graph in the class.  The chi
sweep checks both directions of the reduced-Euler-characteristic bound.
The two open conjectures run in report mode: a counterexample would be
flagged with a certificate, not raised as an error.  Run with:

    python3 demos/conjecture_sweeps.py
"""

from indcomplex.verify import (check_conjecture2, check_conjecture3,
                               check_conjecture4, check_theorem,
                               knn_sphere_count)

for n in range(6):
    r = check_theorem(n)
    print(f"theorem n={n}: {r.graphs_examined:5} graphs, "
          f"{r.class_no_cycle_div3:4} in class, "
          f"{r.checks_passed} passed, {r.checks_failed} failed "
          f"({r.seconds:.2f}s)")

print()
for n in range(6):
    r = check_conjecture2(n)
    print(f"chi bound n={n}: {r.graphs_examined:5} graphs, "
          f"{r.class_no_induced_cycle_div3:4} without induced cycle div 3, "
          f"{r.checks_failed} failed")

print()
for name, check in [("total Betti <= 1", check_conjecture3),
                    ("sphere or trivial", check_conjecture4)]:
    r = check(5)
    print(f"open conjecture '{name}' n=5: {r.checks_passed} consistent, "
          f"{r.flagged} flagged")

print()
print("sphere-inducing subsets of K_nn (expected (2^n - 1)^2 + 1):")
for n in (1, 2, 3):
    print(f"  n={n}: {knn_sphere_count(n)}")

"""Edge-count thresholds: what a graph must contain once it has too many
edges, checked exhaustively at small orders.

Run:  python3 demos/05_turan_suite.py
"""

from spectree import (
    bound_linear_forest,
    bound_path,
    check_lemma,
    edge_threshold_S_plus,
)
from spectree.enumeration import all_graphs
from spectree.turan import three_leg_spiders

print("Path threshold: a P_t-free graph on n vertices has at most (t-2)n/2 edges")
for t in (4, 5, 6):
    b = bound_path(12, t)
    print(f"  t={t}: at most {b.bound:.0f} edges on 12 vertices ({b.applicability})")

print()
print("Linear forests and the broom threshold (asymptotic bounds)")
print(" ", bound_linear_forest(20, (4, 5)))
print("  edge threshold forcing B_(2,2k+1):",
      {k: edge_threshold_S_plus(30, k) for k in (2, 3)})

print()
print("Exhaustive verification at desk scale (every graph up to 7 vertices):")
checked = violations = 0
for n in range(1, 8):
    for g in all_graphs(n):
        v = check_lemma(g, "sum_longest_path")
        checked += 1
        violations += v.violation
print(f"  longest-path walk bound: {checked} graphs, {violations} violations")

checked = violations = 0
for n in range(1, 8):
    for g in all_graphs(n):
        for t in (4, 5):
            v = check_lemma(g, "spider3_erdos_sos", t=t)
            checked += 1
            violations += v.violation
print(f"  three-leg spider threshold (t=4,5): {checked} checks, {violations} violations")

print()
print("The three-leg spiders the threshold guarantees, by order:")
for t in (4, 5, 6, 7):
    print(f"  t={t}: {[s.legs for s in three_leg_spiders(t)]}")

"""Which brooms of order 2k+3 live inside the extremal graphs?

The complete-split graph S_{n,k} misses exactly two of them; adding a single
edge inside its independent set recovers one.  This gap is why the
order-(2k+3) tree conjecture needs the augmented graph S+_{n,k}.

Run:  python3 demos/02_broom_tables.py
"""

from spectree import (
    Broom,
    CompleteSplit,
    CompleteSplitPlus,
    build_family,
    contains_tree,
)

n = 30
for k in (2, 3):
    order = 2 * k + 3
    s_host = build_family(CompleteSplit(n, k))
    plus_host = build_family(CompleteSplitPlus(n, k))
    print(f"k = {k}: brooms B_(s,t) with s + t = {order}, hosts on n = {n} vertices")
    print(f"  {'broom':>10} {'in S':>6} {'in S+':>6}")
    for s in range(1, order - 1):
        t = order - s
        broom = Broom(s, t)
        in_s = contains_tree(s_host, broom) is not None
        in_plus = contains_tree(plus_host, broom) is not None
        mark = lambda b: "yes" if b else "NO"
        print(f"  B_({s},{t:>2}) {mark(in_s):>6} {mark(in_plus):>6}")
    print()

print("Pattern: S misses B_(1,2k+2) (the long path needs a cover of size k+1)")
print("and B_(2,2k+1); the extra edge in S+ absorbs the second exception but")
print("can never produce the path, which is why the path stays excluded.")

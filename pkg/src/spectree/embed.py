"""Exact containment engines: tree embedding, linear forests, longest paths,
free-tree generation and the proof-guided spider embedder."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    BudgetExceededError,
    CapExceededError,
    HypothesisViolationError,
    ParameterError,
)
from .graphs import (
    FAMILY_TYPES,
    Graph,
    Spider,
    bits,
    build_family,
)
from .spectral import walk_sum_B_u

DEFAULT_BUDGET = 10**8
LONGEST_PATH_CAP = 20


@dataclass(frozen=True)
class Embedding:
    """Injective pattern -> host vertex assignment preserving edges."""

    assignment: tuple  # assignment[pattern_id] = host_id

    def pairs(self):
        return list(enumerate(self.assignment))


def is_valid_embedding(host, pattern, emb):
    """Independent validation: injectivity plus edge preservation."""
    a = emb.assignment
    if len(a) != pattern.n or len(set(a)) != len(a):
        return False
    if any(not 0 <= h < host.n for h in a):
        return False
    return all(host.has_edge(a[u], a[v]) for u, v in pattern.edges())


def as_graph(pattern):
    if isinstance(pattern, Graph):
        return pattern
    if isinstance(pattern, FAMILY_TYPES):
        return build_family(pattern)
    raise ParameterError(f"pattern must be a Graph or family spec, got {pattern!r}")


def is_tree(g):
    return g.n >= 1 and g.e == g.n - 1 and g.is_connected()


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = budget

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceededError("search budget exhausted")


def contains_tree(host, pattern, budget=DEFAULT_BUDGET):
    """Exact tree-subgraph search.  Returns an Embedding or None.

    Raises BudgetExceededError when the visit budget runs out, which is a
    distinct outcome from "not contained".
    """
    pat = as_graph(pattern)
    if not is_tree(pat):
        raise ParameterError("pattern is not a tree")
    if pat.n > host.n:
        return None
    order, parents = _pattern_order(pat)
    return _embed_tree(host, pat, order, parents, _Budget(budget))


def _pattern_order(pat):
    """BFS order from the highest-degree vertex, children by decreasing
    degree; parents[i] is the index (in the order) of the parent."""
    root = max(range(pat.n), key=pat.degree)
    order = [root]
    parents = [None]
    pos = {root: 0}
    head = 0
    while head < len(order):
        v = order[head]
        for w in sorted(pat.neighbors(v), key=pat.degree, reverse=True):
            if w not in pos:
                pos[w] = len(order)
                parents.append(head)
                order.append(w)
        head += 1
    return order, parents


def _embed_tree(host, pat, order, parents, budget):
    n = len(order)
    image = [0] * n
    pat_deg = [pat.degree(v) for v in order]
    host_by_deg = sorted(range(host.n), key=host.degree, reverse=True)

    def rec(i, used):
        budget.spend()
        if i == n:
            return True
        if parents[i] is None:
            cands = (h for h in host_by_deg if host.degree(h) >= pat_deg[i])
        else:
            pmask = host.rows[image[parents[i]]] & ~used
            cands = sorted(bits(pmask), key=host.degree, reverse=True)
            cands = (h for h in cands if host.degree(h) >= pat_deg[i])
        # twin pruning: vertices with identical neighborhoods (open or
        # closed) are interchangeable, so try only one per twin class
        open_sigs = set()
        closed_sigs = set()
        for h in cands:
            if used >> h & 1:
                continue
            row = host.rows[h]
            if row in open_sigs or row | 1 << h in closed_sigs:
                continue
            open_sigs.add(row)
            closed_sigs.add(row | 1 << h)
            image[i] = h
            if rec(i + 1, used | 1 << h):
                return True
        return False

    if not rec(0, 0):
        return None
    assignment = [0] * pat.n
    for i, v in enumerate(order):
        assignment[v] = image[i]
    return Embedding(tuple(assignment))


def brute_force_contains(host, pattern):
    """Permutation-oracle containment test (small instances only)."""
    from itertools import permutations

    pat = as_graph(pattern)
    if pat.n > host.n:
        return None
    pedges = pat.edges()
    for perm in permutations(range(host.n), pat.n):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pedges):
            return Embedding(tuple(perm))
    return None


# -- vertex-cover test ----------------------------------------------------


def min_vertex_cover_tree(g):
    """Minimum vertex cover size of a tree (or forest) by leaf-to-root DP."""
    total = 0
    seen = set()
    for v in range(g.n):
        if v in seen:
            continue
        # iterative post-order over the component rooted at v
        order = []
        parent = {v: None}
        stack = [v]
        while stack:
            x = stack.pop()
            order.append(x)
            for w in g.neighbors(x):
                if w not in parent:
                    parent[w] = x
                    stack.append(w)
        seen.update(order)
        incl = {}
        excl = {}
        for x in reversed(order):
            ch = [w for w in g.neighbors(x) if parent.get(w) == x]
            incl[x] = 1 + sum(min(incl[w], excl[w]) for w in ch)
            excl[x] = sum(incl[w] for w in ch)
        total += min(incl[v], excl[v])
    return total


def fits_in_S(tree, k):
    """Whether the tree embeds in S_{n,k} for all large n: minimum vertex
    cover at most k."""
    t = as_graph(tree)
    if not is_tree(t):
        raise ParameterError("pattern is not a tree")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    return min_vertex_cover_tree(t) <= k


# -- linear forests -------------------------------------------------------


def find_linear_forest(host, lengths, anchor_set=None, budget=DEFAULT_BUDGET):
    """Vertex-disjoint paths with the given vertex counts.

    When anchor_set is given, every path has at least one end-vertex inside
    it.  Returns a list of vertex lists aligned with `lengths`, or None.
    """
    if not lengths or any(t < 1 for t in lengths):
        raise ParameterError(f"path orders must be >= 1, got {lengths}")
    if anchor_set is not None:
        anchor_mask = 0
        for v in anchor_set:
            if not 0 <= v < host.n:
                raise ParameterError(f"anchor vertex {v} out of range")
            anchor_mask |= 1 << v
    else:
        anchor_mask = (1 << host.n) - 1
    if sum(lengths) > host.n:
        return None
    idx = sorted(range(len(lengths)), key=lambda i: -lengths[i])
    bud = _Budget(budget)
    paths = [None] * len(lengths)

    def place(j, used):
        if j == len(idx):
            return True
        want = lengths[idx[j]]
        open_sigs = set()
        closed_sigs = set()
        for start in bits(anchor_mask & ~used):
            bud.spend()
            row = host.rows[start]
            if row in open_sigs or row | 1 << start in closed_sigs:
                continue
            open_sigs.add(row)
            closed_sigs.add(row | 1 << start)
            if extend([start], used | 1 << start, want, j):
                return True
        return False

    def extend(path, used, want, j):
        if len(path) == want:
            paths[idx[j]] = list(path)
            if place(j + 1, used):
                return True
            paths[idx[j]] = None
            return False
        open_sigs = set()
        closed_sigs = set()
        for w in bits(host.rows[path[-1]] & ~used):
            bud.spend()
            row = host.rows[w]
            if row in open_sigs or row | 1 << w in closed_sigs:
                continue
            open_sigs.add(row)
            closed_sigs.add(row | 1 << w)
            path.append(w)
            if extend(path, used | 1 << w, want, j):
                return True
            path.pop()
        return False

    return paths if place(0, 0) else None


# -- longest paths ---------------------------------------------------------


@dataclass(frozen=True)
class PathStats:
    p: tuple  # p[v] = edge count of a longest path starting at v
    longest_order: int  # vertex count of a global longest path
    witness: tuple  # one longest path as a vertex tuple
    x: frozenset  # V(witness)
    y: frozenset  # remaining vertices
    s: dict  # s[v] = |N(v) & X| for v in Y


def longest_path_stats(g, cap=LONGEST_PATH_CAP):
    """Exact per-vertex longest-path lengths via bitmask DFS memoization."""
    if g.n > cap:
        raise CapExceededError(f"longest-path search capped at n={cap}, got {g.n}")
    if g.n == 0:
        raise ParameterError("empty graph")
    rows = g.rows
    memo = {}

    def f(last, mask):
        key = (last, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best = 0
        m = rows[last] & ~mask
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            cand = 1 + f(w, mask | low)
            if cand > best:
                best = cand
        memo[key] = best
        return best

    p = tuple(f(v, 1 << v) for v in range(g.n))
    start = max(range(g.n), key=lambda v: p[v])
    path = [start]
    mask = 1 << start
    remaining = p[start]
    while remaining:
        for w in bits(rows[path[-1]] & ~mask):
            if f(w, mask | 1 << w) == remaining - 1:
                path.append(w)
                mask |= 1 << w
                remaining -= 1
                break
    x = frozenset(path)
    y = frozenset(range(g.n)) - x
    s = {v: (g.rows[v] & mask).bit_count() for v in sorted(y)}
    return PathStats(p, len(path), tuple(path), x, y, s)


# -- free trees ------------------------------------------------------------


def _tree_code(g):
    """AHU canonical code of a tree: invariant under relabeling."""
    n = g.n
    if n == 1:
        return ("()",)
    if n == 2:
        return ("(())",)
    # find centers by leaf stripping
    deg = list(g.degrees())
    alive = set(range(n))
    leaves = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in leaves:
            alive.discard(v)
            for w in g.neighbors(v):
                if w in alive:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        leaves = nxt
    centers = sorted(alive)

    def rooted(v, parent):
        ch = sorted(rooted(w, v) for w in g.neighbors(v) if w != parent)
        return "(" + "".join(ch) + ")"

    if len(centers) == 1:
        return (rooted(centers[0], None),)
    a, b = centers
    return tuple(sorted((rooted(a, b), rooted(b, a))))


def all_trees_of_order(t, cap=12):
    """All pairwise non-isomorphic free trees on t vertices, deterministic
    order.  Generated by leaf augmentation with canonical-code dedup."""
    if not 2 <= t <= cap:
        raise CapExceededError(f"tree generation supports 2 <= t <= {cap}, got {t}")
    level = {_tree_code(Graph.from_edges(2, [(0, 1)])): Graph.from_edges(2, [(0, 1)])}
    for m in range(3, t + 1):
        nxt = {}
        for g in level.values():
            for v in range(g.n):
                edges = g.edges() + [(v, g.n)]
                h = Graph.from_edges(g.n + 1, edges)
                code = _tree_code(h)
                if code not in nxt:
                    nxt[code] = h
        level = nxt
    return [level[c] for c in sorted(level)]


def labeled_tree_from_pruefer(seq, t):
    """Labeled tree on t vertices from a Pruefer sequence (len t-2)."""
    degree = [1] * t
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(t) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return Graph.from_edges(t, edges)


# -- proof-guided spider embedding ----------------------------------------


@dataclass
class SpiderTrace:
    u: int = -1
    b_u: int = 0
    branch: str = ""
    notes: list = field(default_factory=list)


def proof_guided_spider_embed(g, spider, k, eps=1e-9, budget=DEFAULT_BUDGET):
    """Constructive spider embedding replaying the extremal argument.

    Requires a spider of order 2k+3 with at least 3 odd legs and
    2*(unit legs) - (odd legs) >= 2.  Picks a vertex u with nonnegative
    walk sum, branches on deg(u) vs log2(n), and assembles the spider from
    a linear forest found in the local graph around u.  Falls back to the
    generic exact search when the constructive route fails at desk scale;
    any returned embedding is validated.
    """
    if not isinstance(spider, Spider):
        raise ParameterError("pattern must be a Spider spec")
    spider.validate()
    r = spider.odd_legs
    s = spider.unit_legs
    if r < 3 or 2 * s - r < 2:
        raise HypothesisViolationError(
            f"need r >= 3 and 2s - r >= 2, got r={r}, s={s}"
        )
    if spider.order != 2 * k + 3:
        raise HypothesisViolationError(
            f"spider order {spider.order} != 2k+3 = {2 * k + 3}"
        )
    pat = build_family(spider)
    trace = SpiderTrace()

    best = None
    for v in range(g.n):
        w = walk_sum_B_u(g, v, k)
        if w.b_u >= 0 and (best is None or w.b_u > best.b_u):
            best = w
    if best is None:
        trace.notes.append("no vertex with nonnegative walk sum; falling back")
        return _finish_fallback(g, pat, trace, budget)
    u = best.u
    trace.u = u
    trace.b_u = best.b_u
    du = g.degree(u)

    if du <= math.log2(max(g.n, 2)):
        emb = _case_low_degree(g, u, k, spider, pat, trace)
    else:
        emb = _case_high_degree(g, u, k, spider, pat, best, trace, budget)
    if emb is not None and is_valid_embedding(g, pat, emb):
        return emb, trace
    if emb is not None:
        trace.notes.append("constructed embedding failed validation; falling back")
    return _finish_fallback(g, pat, trace, budget)


def _finish_fallback(g, pat, trace, budget):
    trace.branch = trace.branch or "fallback"
    trace.notes.append("exact fallback search")
    emb = contains_tree(g, pat, budget=budget)
    if emb is None:
        return None
    return emb, trace


def _spider_leg_slots(spider):
    """Pattern vertex ids per leg for the deterministic spider layout."""
    slots = []
    nxt = 1
    for t in spider.legs:
        slots.append(list(range(nxt, nxt + t)))
        nxt += t
    return slots


def _case_low_degree(g, u, k, spider, pat, trace):
    """Complete-bipartite route: k common neighbors over a chunk of the
    second neighborhood."""
    trace.branch = "case1_bipartite"
    shells = g.bfs_shells(u)
    n1 = bits(shells[0]) if shells else []
    n2m = shells[1] if len(shells) > 1 else 0
    side_small, side_big = _spider_bipartition(pat)
    if len(side_small) > k:
        trace.notes.append("spider cover side exceeds k")
        return None
    for xs in combinations(n1, k):
        common = n2m
        for x in xs:
            common &= g.rows[x]
        ys = bits(common)
        if len(ys) >= len(side_big):
            assignment = [0] * pat.n
            xs = list(xs)
            for i, v in enumerate(side_small):
                assignment[v] = xs[i]
            for i, v in enumerate(side_big):
                assignment[v] = ys[i]
            return Embedding(tuple(assignment))
    trace.notes.append("no k-set with enough common second-shell neighbors")
    return None


def _spider_bipartition(pat):
    """2-coloring classes of the (bipartite) spider, smaller side first."""
    color = [-1] * pat.n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in pat.neighbors(v):
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
    a = [v for v in range(pat.n) if color[v] == 0]
    b = [v for v in range(pat.n) if color[v] == 1]
    return (a, b) if len(a) <= len(b) else (b, a)


def _case_high_degree(g, u, k, spider, pat, wsum, trace, budget):
    """Linear-forest route inside L_u or inside G[N1(u)]."""
    shells = g.bfs_shells(u)
    n1m = shells[0] if shells else 0
    n2m = shells[1] if len(shells) > 1 else 0
    e_cross = sum((g.rows[v] & n2m).bit_count() for v in bits(n1m))
    threshold = (
        k * g.degree(u) + (2 * k - 2) * n2m.bit_count() - k * (g.n - k)
    )
    long_legs = [(i, t) for i, t in enumerate(spider.legs) if t >= 2]
    lengths = [t for _, t in long_legs]

    if e_cross > threshold:
        trace.branch = "case2_subcase1_Lu"
        l_graph = wsum.l_graph
        inv = list(wsum.l_vertices)
        anchor = [i for i, v in enumerate(inv) if n1m >> v & 1]
        try:
            forest = (
                find_linear_forest(l_graph, lengths, anchor_set=anchor, budget=budget)
                if lengths
                else []
            )
        except BudgetExceededError:
            trace.notes.append("linear-forest budget exhausted in L_u")
            return None
        if forest is None:
            trace.notes.append("no anchored linear forest in L_u")
            return None
        host_paths = []
        for path in forest:
            hp = [inv[i] for i in path]
            # orient so the N1(u) end attaches to the center
            if not n1m >> hp[0] & 1:
                hp.reverse()
            host_paths.append(hp)
    else:
        trace.branch = "case2_subcase2_N1"
        sub, verts = g.subgraph(bits(n1m))
        try:
            forest = (
                find_linear_forest(sub, lengths, budget=budget) if lengths else []
            )
        except BudgetExceededError:
            trace.notes.append("linear-forest budget exhausted in G[N1(u)]")
            return None
        if forest is None:
            trace.notes.append("no linear forest in G[N1(u)]")
            return None
        host_paths = [[verts[i] for i in path] for path in forest]

    used = {u}
    for hp in host_paths:
        used.update(hp)
    spare = [v for v in bits(n1m) if v not in used]
    unit_legs = [i for i, t in enumerate(spider.legs) if t == 1]
    if len(spare) < len(unit_legs):
        trace.notes.append("not enough spare first-shell vertices for unit legs")
        return None

    slots = _spider_leg_slots(spider)
    assignment = [0] * pat.n
    assignment[0] = u
    for (leg_i, _), hp in zip(long_legs, host_paths):
        for slot, hv in zip(slots[leg_i], hp):
            assignment[slot] = hv
    for leg_i, hv in zip(unit_legs, spare):
        assignment[slots[leg_i][0]] = hv
    return Embedding(tuple(assignment))

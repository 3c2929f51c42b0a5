"""Immutable simple graphs with bitset adjacency rows, plus family constructors.

Vertices are dense ids 0..n-1.  Adjacency is kept as one Python int per
vertex (bit j set iff adjacent to j), which gives O(1) adjacency tests and
word-parallel neighborhood intersection in the embedding hot paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceededError, Graph6Error, ParameterError

MAX_VERTICES = 5000


class Graph:
    """Undirected simple graph.  Immutable after construction."""

    __slots__ = ("n", "rows", "e")

    def __init__(self, n, rows, e):
        self.n = n
        self.rows = rows  # tuple of ints, rows[v] bit u == adjacency
        self.e = e

    @classmethod
    def from_edges(cls, n, edges):
        if n < 0 or n > MAX_VERTICES:
            raise ParameterError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        e = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ParameterError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            e += 1
        return cls(n, tuple(rows), e)

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def degree(self, v):
        return self.rows[v].bit_count()

    def degrees(self):
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v):
        return _bits(self.rows[v])

    def edges(self):
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(r):
                out.append((u, v))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.e})"

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, u, v):
        if u == v or self.has_edge(u, v):
            raise ParameterError(f"cannot add edge ({u},{v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows), self.e + 1)

    def without_edge(self, u, v):
        if not self.has_edge(u, v):
            raise ParameterError(f"no edge ({u},{v}) to remove")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows), self.e - 1)

    def relabel(self, perm):
        """New graph with vertex v renamed to perm[v]."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows), self.e)

    def subgraph(self, vertices):
        """Induced subgraph on `vertices` (iterable), relabeled 0..m-1.

        Returns (subgraph, vertex_list) with vertex_list[i] the original id.
        """
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        e = 0
        for i, v in enumerate(vs):
            for w in _bits(self.rows[v]):
                j = index.get(w)
                if j is not None and j > i:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    e += 1
        return Graph(len(vs), tuple(rows), e), vs

    # -- traversal --------------------------------------------------------

    def component_masks(self):
        """Bitmasks of the connected components, ordered by least vertex."""
        seen = 0
        comps = []
        full = (1 << self.n) - 1
        while seen != full:
            start = (~seen & full) & -(~seen & full)  # lowest unseen bit
            frontier = start
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.component_masks()) == 1

    def bfs_shells(self, u):
        """Vertex masks at BFS distance 1, 2, ... from u (u excluded)."""
        if not 0 <= u < self.n:
            raise ParameterError(f"vertex {u} out of range for n={self.n}")
        seen = 1 << u
        shells = []
        frontier = self.rows[u]
        while frontier:
            shells.append(frontier)
            seen |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
        return shells


def _bits(mask):
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bits(mask):
    return _bits(mask)


# -- family specs ---------------------------------------------------------


@dataclass(frozen=True)
class CompleteSplit:
    """K_k joined to an independent set of n-k vertices."""

    n: int
    k: int

    def validate(self):
        if not 1 <= self.k <= self.n - 1:
            raise ParameterError(f"CompleteSplit requires 1 <= k <= n-1, got {self}")


@dataclass(frozen=True)
class CompleteSplitPlus:
    """CompleteSplit plus one edge inside the independent set."""

    n: int
    k: int

    def validate(self):
        if not 1 <= self.k <= self.n - 2:
            raise ParameterError(
                f"CompleteSplitPlus requires 1 <= k <= n-2, got {self}"
            )


@dataclass(frozen=True)
class Path:
    t: int  # number of vertices

    def validate(self):
        if self.t < 1:
            raise ParameterError(f"Path requires t >= 1, got {self}")


@dataclass(frozen=True)
class Star:
    s: int  # number of leaves

    def validate(self):
        if self.s < 0:
            raise ParameterError(f"Star requires s >= 0, got {self}")


@dataclass(frozen=True)
class Complete:
    n: int

    def validate(self):
        if self.n < 1:
            raise ParameterError(f"Complete requires n >= 1, got {self}")


@dataclass(frozen=True)
class Spider:
    """One center with legs of the given edge lengths."""

    legs: tuple

    def __init__(self, *legs):
        if len(legs) == 1 and isinstance(legs[0], (tuple, list)):
            legs = tuple(legs[0])
        object.__setattr__(self, "legs", tuple(legs))

    def validate(self):
        if not self.legs or any(t < 1 for t in self.legs):
            raise ParameterError(f"Spider requires nonempty legs >= 1, got {self}")

    @property
    def order(self):
        return 1 + sum(self.legs)

    @property
    def odd_legs(self):
        return sum(1 for t in self.legs if t % 2 == 1)

    @property
    def unit_legs(self):
        return sum(1 for t in self.legs if t == 1)


@dataclass(frozen=True)
class Broom:
    """Star K_{1,s} whose center is an end of a path P_t.  Order s+t."""

    s: int
    t: int

    def validate(self):
        if self.s < 1 or self.t < 1:
            raise ParameterError(f"Broom requires s,t >= 1, got {self}")


@dataclass(frozen=True)
class GeneralizedBroom:
    """Path P_t with s pendant edges at its ell-th vertex.  Order s+t."""

    s: int
    t: int
    ell: int

    def validate(self):
        if self.s < 1 or not 1 <= self.ell <= self.t:
            raise ParameterError(
                f"GeneralizedBroom requires s >= 1, 1 <= ell <= t, got {self}"
            )


@dataclass(frozen=True)
class Explicit:
    n: int
    edges: tuple = field(default_factory=tuple)

    def validate(self):
        pass  # Graph.from_edges rejects loops/duplicates


FAMILY_TYPES = (
    CompleteSplit,
    CompleteSplitPlus,
    Path,
    Star,
    Complete,
    Spider,
    Broom,
    GeneralizedBroom,
    Explicit,
)


def build_family(spec):
    """Construct the concrete graph of a family spec."""
    spec.validate()
    if isinstance(spec, CompleteSplit):
        return join(build_family(Complete(spec.k)), empty_graph(spec.n - spec.k))
    if isinstance(spec, CompleteSplitPlus):
        g = join(build_family(Complete(spec.k)), empty_graph(spec.n - spec.k))
        return g.with_edge(spec.k, spec.k + 1)
    if isinstance(spec, Path):
        return Graph.from_edges(spec.t, [(i, i + 1) for i in range(spec.t - 1)])
    if isinstance(spec, Star):
        return Graph.from_edges(spec.s + 1, [(0, i) for i in range(1, spec.s + 1)])
    if isinstance(spec, Complete):
        return Graph.from_edges(
            spec.n, [(i, j) for i in range(spec.n) for j in range(i + 1, spec.n)]
        )
    if isinstance(spec, Spider):
        # vertex 0 is the center; legs laid out consecutively
        edges = []
        nxt = 1
        for t in spec.legs:
            prev = 0
            for _ in range(t):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Graph.from_edges(nxt, edges)
    if isinstance(spec, Broom):
        # B_{s,t} = path on t vertices with s pendants at its last vertex
        return build_family(GeneralizedBroom(spec.s, spec.t, spec.t))
    if isinstance(spec, GeneralizedBroom):
        edges = [(i, i + 1) for i in range(spec.t - 1)]
        edges += [(spec.ell - 1, spec.t + i) for i in range(spec.s)]
        return Graph.from_edges(spec.s + spec.t, edges)
    if isinstance(spec, Explicit):
        return Graph.from_edges(spec.n, spec.edges)
    raise ParameterError(f"unknown family spec {spec!r}")


def empty_graph(n):
    return Graph(n, (0,) * n, 0)


# -- graph operations ------------------------------------------------------


def disjoint_union(g, h):
    if g.n + h.n > MAX_VERTICES:
        raise ParameterError(f"union order {g.n + h.n} exceeds cap {MAX_VERTICES}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows), g.e + h.e)


def join(g, h):
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << u.n) - 1) ^ gmask
    rows = [r | hmask for r in u.rows[: g.n]] + [r | gmask for r in u.rows[g.n :]]
    return Graph(u.n, tuple(rows), u.e + g.n * h.n)


def m_copies(g, m):
    if m < 1:
        raise ParameterError(f"m_copies requires m >= 1, got {m}")
    out = g
    for _ in range(m - 1):
        out = disjoint_union(out, g)
    return out


def neighborhood_shells(g, u):
    """Vertex sets N^1(u), N^2(u), ... as sorted lists."""
    return [set(_bits(m)) for m in g.bfs_shells(u)]


# -- graph6 ----------------------------------------------------------------


def encode_graph6(g):
    """Byte-exact graph6 encoding (standard long forms above n=62)."""
    n = g.n
    out = []
    if n <= 62:
        out.append(chr(63 + n))
    elif n <= 258047:
        out.append(chr(126))
        out.extend(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    else:
        out.append(chr(126) + chr(126))
        out.extend(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(text):
    """Decode a graph6 string, rejecting malformed input with its offset."""
    s = text.rstrip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    data = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet", i)
        data.append(c - 63)
    pos = 0
    if data[0] != 63:
        n = data[0]
        pos = 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise Graph6Error("truncated long-form order", len(data))
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated very-long-form order", len(data))
        n = 0
        for v in data[2:8]:
            n = n << 6 | v
        pos = 8
    need = n * (n - 1) // 2
    avail = 6 * (len(data) - pos)
    if avail < need:
        raise Graph6Error(
            f"need {need} adjacency bits, found {avail}", len(s)
        )
    if len(data) - pos > (need + 5) // 6:
        raise Graph6Error("trailing bytes after adjacency bits", pos + (need + 5) // 6)
    rows = [0] * n
    e = 0
    bit = 0
    for j in range(1, n):
        for i in range(j):
            chunk = data[pos + bit // 6]
            if chunk >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                e += 1
            bit += 1
    return Graph(n, tuple(rows), e)


# -- edge-list text format -------------------------------------------------


def write_edge_list(g):
    lines = [f"{g.n} {g.e}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParameterError("empty edge-list input")
    try:
        n, m = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
    except ValueError as exc:
        raise ParameterError(f"malformed edge-list input: {exc}") from exc
    if len(edges) != m:
        raise ParameterError(f"header promises {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


# -- canonical form --------------------------------------------------------

CANONICAL_CAP = 10


def _refine_colors(g):
    """Stable 1-WL coloring.  Returns per-vertex integer color ranks whose
    sorted order is isomorphism-invariant."""
    colors = g.degrees()
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_key(g, cap=CANONICAL_CAP):
    """Canonical graph6 string: identical iff graphs are isomorphic.

    Minimum upper-triangle bit code over all vertex orderings consistent
    with the stable WL color classes, found by branch-and-bound.
    """
    if g.n > cap:
        raise CapExceededError(f"canonical form capped at n={cap}, got n={g.n}")
    if g.n <= 1:
        return encode_graph6(g)
    colors = _refine_colors(g)
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    blocks = [classes[c] for c in sorted(classes)]

    n = g.n
    rows = g.rows
    best = None  # list of column codes (ints), one per position 1..n-1
    seq = []

    def rec(bi, remaining, tight):
        nonlocal best
        if bi == len(blocks):
            if best is None or cols < best:
                best = list(cols)
            return
        block = blocks[bi] if remaining is None else remaining
        pos = len(seq)
        for idx, v in enumerate(block):
            col = 0
            rv = rows[v]
            for i in range(pos):
                col = col << 1 | (rv >> seq[i] & 1)
            t = tight
            if t and best is not None:
                b = best[pos]
                if col > b:
                    continue
                if col < b:
                    t = False
            seq.append(v)
            cols.append(col)
            rest = block[:idx] + block[idx + 1 :]
            if rest:
                rec(bi, rest, t)
            else:
                rec(bi + 1, None, t)
            seq.pop()
            cols.pop()

    cols = []
    # first position: column code is empty, so recursion handles ordering
    rec(0, None, True)
    # rebuild the canonically labeled graph from the column codes
    rows2 = [0] * n
    e = 0
    for j in range(1, n):
        col = best[j]
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                rows2[i] |= 1 << j
                rows2[j] |= 1 << i
                e += 1
    return encode_graph6(Graph(n, tuple(rows2), e))


# -- structural isomorphism tests for the extremal families ---------------


def is_complete_split(g, k):
    """Exact test for g == S_{n,k} up to isomorphism, any n."""
    n = g.n
    if not 1 <= k <= n - 1:
        return False
    if g.e != k * n - k * (k + 1) // 2:
        return False
    hub_mask = 0
    hub_count = 0
    for v in range(n):
        if g.degree(v) == n - 1:
            hub_mask |= 1 << v
            hub_count += 1
    if hub_count < k:
        return False
    # remaining vertices must be independent with exactly the hubs as nbrs
    for v in range(n):
        if not hub_mask >> v & 1:
            if g.rows[v] != hub_mask:
                return False
    return True


def is_complete_split_plus(g, k):
    """Exact test for g == S+_{n,k} up to isomorphism, any n."""
    n = g.n
    if not 1 <= k <= n - 2:
        return False
    if g.e != k * n - k * (k + 1) // 2 + 1:
        return False
    hub_mask = 0
    for v in range(n):
        if g.degree(v) == n - 1:
            hub_mask |= 1 << v
    if hub_mask.bit_count() != k:
        return False
    extra = []
    for v in range(n):
        if not hub_mask >> v & 1:
            other = g.rows[v] & ~hub_mask
            if g.rows[v] & hub_mask != hub_mask:
                return False
            if other:
                extra.append((v, other))
    return (
        len(extra) == 2
        and extra[0][1] == 1 << extra[1][0]
        and extra[1][1] == 1 << extra[0][0]
    )

"""Isomorph-free exhaustive generation of small graphs and seeded samplers."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CapExceededError, ParameterError
from .graphs import (
    CompleteSplit,
    CompleteSplitPlus,
    Graph,
    build_family,
    canonical_key,
    decode_graph6,
    encode_graph6,
)

EXHAUSTIVE_CAP = 8
OPT_IN_CAP = 9

_cache = {}


def _representatives(n):
    """Canonical representatives of all isomorphism classes on n vertices,
    sorted by canonical graph6 string.  Built by vertex augmentation."""
    if n in _cache:
        return _cache[n]
    if n == 1:
        reps = [encode_graph6(Graph(1, (0,), 0))]
    else:
        keys = set()
        for key in _representatives(n - 1):
            base = decode_graph6(key)
            for mask in range(1 << (n - 1)):
                rows = list(base.rows) + [mask]
                e = base.e + bin(mask).count("1")
                for v in range(n - 1):
                    if mask >> v & 1:
                        rows[v] |= 1 << (n - 1)
                g = Graph(n, tuple(rows), e)
                keys.add(canonical_key(g))
        reps = sorted(keys)
    _cache[n] = reps
    return reps


def all_graphs(n, connected_only=False, cap=EXHAUSTIVE_CAP):
    """One representative per isomorphism class on n vertices, as a list in
    deterministic (canonical graph6) order."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if cap > OPT_IN_CAP:
        raise ParameterError(f"cap beyond n={OPT_IN_CAP} is out of scope")
    if n > cap:
        raise CapExceededError(f"exhaustive enumeration capped at n={cap}, got {n}")
    graphs = [decode_graph6(k) for k in _representatives(n)]
    if connected_only:
        graphs = [g for g in graphs if g.is_connected()]
    return graphs


@dataclass
class EnumerationCursor:
    """Resumable cursor over the canonical stream for one order."""

    n: int
    connected_only: bool = False
    token: int = 0
    emitted: int = 0

    def __iter__(self):
        return self

    def __next__(self):
        graphs = all_graphs(self.n, self.connected_only)
        if self.token >= len(graphs):
            raise StopIteration
        g = graphs[self.token]
        self.token += 1
        self.emitted += 1
        return g


def spool_graph6(graphs, path):
    """Write one graph6 line per graph."""
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def random_graph(n, m=None, p=None, seed=0):
    """Uniform G(n, m) or independent-edge G(n, p), reproducible per seed."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if (m is None) == (p is None):
        raise ParameterError("give exactly one of m and p")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if m is not None:
        if not 0 <= m <= len(pairs):
            raise ParameterError(f"m={m} out of range for n={n}")
        edges = rng.sample(pairs, m)
    else:
        if not 0 <= p <= 1:
            raise ParameterError(f"p={p} outside [0, 1]")
        edges = [pq for pq in pairs if rng.random() < p]
    return Graph.from_edges(n, edges)


def perturb_extremal(base, add=0, remove=0, seed=0):
    """Remove `remove` random edges from the extremal base graph, then add
    `add` random non-edges.  Reproducible per seed."""
    if not isinstance(base, (CompleteSplit, CompleteSplitPlus)):
        raise ParameterError("base must be CompleteSplit or CompleteSplitPlus")
    if add < 0 or remove < 0:
        raise ParameterError("add and remove must be nonnegative")
    g = build_family(base)
    rng = random.Random(seed)
    if remove > g.e:
        raise ParameterError(f"cannot remove {remove} of {g.e} edges")
    for u, v in rng.sample(g.edges(), remove):
        g = g.without_edge(u, v)
    non_edges = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if not g.has_edge(i, j)
    ]
    if add > len(non_edges):
        raise ParameterError(f"cannot add {add} edges, only {len(non_edges)} slots")
    for u, v in rng.sample(non_edges, add):
        g = g.with_edge(u, v)
    return g

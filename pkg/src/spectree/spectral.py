"""Spectral radius computation, closed forms, bounds and integer certificates.

The closed form for the complete-split graph and the sandwich bound for its
one-edge augmentation are evaluated exactly in floating point; quotient
certificates and walk-sum quantities are exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundInapplicableError,
    ConvergenceError,
    HypothesisViolationError,
    ParameterError,
)
from .graphs import Graph, bits

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class SpectralResult:
    mu: float
    residual: float
    iterations: int
    component_id: int


def adjacency_matrix(g, dtype=float):
    a = np.zeros((g.n, g.n), dtype=dtype)
    for u, v in g.edges():
        a[u, v] = 1
        a[v, u] = 1
    return a


def spectral_radius(g, tol=DEFAULT_TOL, max_iter=None):
    """Perron root of the component with largest spectral radius.

    Power iteration on A + I per connected component (the shift keeps
    bipartite +-mu pairs from stalling), all-ones start vector, stopping on
    the infinity-norm residual ||Av - mu v||.
    """
    if g.n == 0:
        raise ParameterError("spectral radius undefined for the empty graph")
    if tol <= 0:
        raise ParameterError("tol must be positive")
    if max_iter is None:
        max_iter = 100 * max(g.n, 10)
    best = None
    for cid, mask in enumerate(g.component_masks()):
        verts = bits(mask)
        if len(verts) == 1:
            res = SpectralResult(0.0, 0.0, 0, cid)
        else:
            sub, _ = g.subgraph(verts)
            a = adjacency_matrix(sub)
            res = _power_iteration(a, tol, max_iter, cid)
        if best is None or res.mu > best.mu:
            best = res
    return best


def _power_iteration(a, tol, max_iter, cid):
    n = a.shape[0]
    shifted = a + np.eye(n)
    v = np.ones(n) / math.sqrt(n)
    mu = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        w = shifted @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            break
        v = w / norm
        av = a @ v
        mu = float(v @ av)
        residual = float(np.max(np.abs(av - mu * v)))
        if residual <= tol:
            return SpectralResult(mu, residual, it, cid)
    raise ConvergenceError(
        f"power iteration residual {residual:.3e} > tol {tol:.3e} "
        f"after {max_iter} iterations",
        best=SpectralResult(mu, residual, max_iter, cid),
    )


def jacobi_spectral_radius(g, sweeps=100, tol=1e-12):
    """Largest eigenvalue via cyclic Jacobi rotations.  Second opinion for
    tests; capped at n = 64."""
    if g.n == 0:
        raise ParameterError("empty graph")
    if g.n > 64:
        raise ParameterError("jacobi fallback capped at n=64")
    a = adjacency_matrix(g)
    n = g.n
    for _ in range(sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                off = max(off, abs(apq))
                theta = (a[q, q] - a[p, p]) / (2 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1)
                )
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
        if off < tol:
            break
    return float(np.max(np.diag(a)))


# -- closed forms and bounds ----------------------------------------------


def mu_S_closed(n, k):
    """Closed-form spectral radius of the complete-split graph S_{n,k}."""
    if not 1 <= k <= n - 1:
        raise ParameterError(f"require 1 <= k <= n-1, got n={n}, k={k}")
    radicand = k * n - (3 * k * k + 2 * k - 1) / 4
    if radicand <= 0:
        raise ParameterError(f"nonpositive radicand for n={n}, k={k}")
    return (k - 1) / 2 + math.sqrt(radicand)


def mu_S_plus_bounds(n, k):
    """Strict sandwich (lo, hi) around the spectral radius of S+_{n,k}."""
    if not 1 <= k <= n - 2:
        raise ParameterError(f"require 1 <= k <= n-2, got n={n}, k={k}")
    denom = n - k - 2 * math.sqrt((n - k) / k)
    if denom <= 0:
        raise BoundInapplicableError(
            f"sandwich denominator {denom:.6g} <= 0 for n={n}, k={k}"
        )
    lo = mu_S_closed(n, k)
    return lo, lo + 1 / denom


def bound_min_degree(n, m, delta):
    """Upper bound on mu from order, size and minimum degree."""
    if not 0 <= delta <= n - 1:
        raise ParameterError(f"require 0 <= delta <= n-1, got {delta}, n={n}")
    if not delta * n / 2 <= m <= n * (n - 1) / 2:
        raise ParameterError(f"m={m} inconsistent with n={n}, delta={delta}")
    radicand = 2 * m - delta * n + (delta + 1) ** 2 / 4
    if radicand < 0:
        raise BoundInapplicableError(f"negative radicand for n={n}, m={m}, delta={delta}")
    return (delta - 1) / 2 + math.sqrt(radicand)


def bound_edges(m):
    """Upper bound on mu from the edge count alone."""
    if m < 0:
        raise ParameterError(f"m must be nonnegative, got {m}")
    return -0.5 + math.sqrt(2 * m + 0.25)


# -- quotient certificate --------------------------------------------------


@dataclass(frozen=True)
class QuotientCertificate:
    a: int
    b: int
    column_sums: tuple
    mu_prime: float
    verdict: str  # proves_upper_bound | proves_equality | inconclusive


def lemma1_certificate(g, a, b):
    """Exact-integer column sums of A^2 - aA - bI and the resulting verdict.

    All column sums <= 0 certifies mu(g) <= largest root of x^2 - ax - b,
    with equality iff all sums are zero.  Requires g connected
    (irreducibility).
    """
    if a < 0 or b < 1:
        raise ParameterError(f"require a >= 0 and b >= 1, got a={a}, b={b}")
    if not g.is_connected():
        raise HypothesisViolationError("certificate requires a connected graph")
    n = g.n
    adj = adjacency_matrix(g, dtype=np.int64)
    bmat = adj @ adj - a * adj - b * np.eye(n, dtype=np.int64)
    sums = tuple(int(x) for x in bmat.sum(axis=0))
    mu_prime = a / 2 + math.sqrt(a * a / 4 + b)
    if all(s == 0 for s in sums):
        verdict = "proves_equality"
    elif all(s <= 0 for s in sums):
        verdict = "proves_upper_bound"
    else:
        verdict = "inconclusive"
    return QuotientCertificate(a, b, sums, mu_prime, verdict)


# -- walk-sum decomposition ------------------------------------------------


@dataclass(frozen=True)
class WalkSumDecomposition:
    u: int
    l_graph: Graph  # graph on N1(u) union N2(u), relabeled
    l_vertices: tuple  # l_graph id -> original id
    n1: tuple  # original ids of N1(u)
    degree_in_l: tuple  # degrees in l_graph of N1(u), aligned with n1
    b_u: int


def walk_sum_B_u(g, u, k):
    """Exact walk-sum quantity at u for the threshold parameter k.

    B_u = sum of L_u-degrees over N1(u) - (k-2) d(u) - k(n-k), where L_u is
    the graph on N1(u) union N2(u) keeping only the edges inside N1(u) and
    between N1(u) and N2(u).
    """
    if not 0 <= u < g.n:
        raise ParameterError(f"vertex {u} out of range for n={g.n}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    shells = g.bfs_shells(u)
    n1 = shells[0] if shells else 0
    n2 = shells[1] if len(shells) > 1 else 0
    verts = sorted(bits(n1 | n2))
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for v in bits(n1):
        for w in bits(g.rows[v] & (n1 | n2)):
            i, j = index[v], index[w]
            edges.add((min(i, j), max(i, j)))
    l_graph = Graph.from_edges(len(verts), sorted(edges))
    n1_list = tuple(bits(n1))
    degs = tuple(l_graph.degree(index[v]) for v in n1_list)
    b_u = sum(degs) - (k - 2) * g.degree(u) - k * (g.n - k)
    return WalkSumDecomposition(u, l_graph, tuple(verts), n1_list, degs, b_u)


# -- dense-core witness search --------------------------------------------


def dense_core_witness(g, k, c, tol=DEFAULT_TOL):
    """Minimum-degree peeling witness search.

    Repeatedly deletes vertices of degree <= k-1 and reports the first
    intermediate subgraph H satisfying either
      (i)  mu(H) > sqrt((2k+1)|H|), or
      (ii) |H| >= sqrt(n), delta(H) >= k and
           mu(H) > (k-1)/2 + sqrt(k|H| - k^2 + c + 1/2),
    as (H, "i" | "ii").  Returns None when peeling empties the graph with
    neither condition met.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    n0 = g.n
    h = g
    while h.n > 0:
        if h.e > 0:
            mu = spectral_radius(h, tol).mu
        else:
            mu = 0.0
        if mu > math.sqrt((2 * k + 1) * h.n):
            return h, "i"
        delta = min(h.degrees())
        if (
            h.n >= math.sqrt(n0)
            and delta >= k
            and mu > (k - 1) / 2 + math.sqrt(k * h.n - k * k + c + 0.5)
        ):
            return h, "ii"
        weak = [v for v in range(h.n) if h.degree(v) <= k - 1]
        if not weak:
            return None  # stable core, no condition met
        keep = [v for v in range(h.n) if h.degree(v) > k - 1]
        if not keep:
            return None
        h, _ = h.subgraph(keep)
    return None

"""Edge-count bounds and per-graph lemma verdicts.

Bounds labeled "asymptotic" only hold for sufficiently large order; the
harness treats those as advisory at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolationError, ParameterError
from .graphs import Broom, Path, Spider, encode_graph6, is_complete_split_plus
from .embed import contains_tree, longest_path_stats


@dataclass(frozen=True)
class TuranBound:
    forbidden: object  # FamilySpec or tuple of path orders
    n: int
    bound: float
    applicability: str  # "exact" | "asymptotic"


@dataclass(frozen=True)
class LemmaVerdict:
    lemma: str
    graph_key: str
    hypothesis_holds: bool
    conclusion_holds: bool
    violation: bool
    asymptotic: bool
    details: dict = field(default_factory=dict, compare=False)


def bound_path(n, t):
    """Max edges of a P_t-free graph on n vertices: (t-2)n/2.  Exact."""
    if n < 1 or t < 1:
        raise ParameterError(f"require n, t >= 1, got n={n}, t={t}")
    return TuranBound(Path(t), n, (t - 2) * n / 2, "exact")


def bound_ell_P3(n, ell):
    """Max edges of an (ell P_3)-free graph: below (ell - 1/2)n for large n."""
    if ell < 2:
        raise ParameterError(f"require ell >= 2, got {ell}")
    return TuranBound(("P3",) * ell, n, (ell - 0.5) * n, "asymptotic")


def bound_linear_forest(n, lengths):
    """Linear-forest bound (sum of floor(a_i/2) - 1) n for large n."""
    lengths = tuple(lengths)
    if len(lengths) < 2:
        raise ParameterError("need at least 2 path components")
    if any(a < 2 for a in lengths):
        raise ParameterError(f"all path orders must be >= 2, got {lengths}")
    if all(a == 3 for a in lengths):
        raise ParameterError("the all-P3 linear forest is excluded")
    bound = (sum(a // 2 for a in lengths) - 1) * n
    return TuranBound(lengths, n, float(bound), "asymptotic")


def edge_threshold_S_plus(n, k):
    """Edge count of S+_{n,k}: the Turán threshold forcing the long broom."""
    if not 1 <= k <= n - 2:
        raise ParameterError(f"require 1 <= k <= n-2, got n={n}, k={k}")
    return k * n - k * (k + 1) // 2 + 1


def three_leg_spiders(t):
    """All t-vertex spiders with three legs: partitions of t-1 into 3 parts."""
    out = []
    for a in range(1, t - 2):
        for b in range(1, a + 1):
            c = t - 1 - a - b
            if 1 <= c <= b:
                out.append(Spider(a, b, c))
    return sorted(set(out), key=lambda s: s.legs)


def check_lemma(g, lemma, k=None, t=None):
    """Verdict of one lemma/theorem instance on a concrete graph.

    lemma is one of:
      - "sum_longest_path": e(G) <= sum_v p_v / 2 (exact, unconditional)
      - "path_turan" (needs k): edge threshold forces P_{2k+3} for connected
        G other than S+_{n,k} (asymptotic)
      - "spider3_erdos_sos" (needs t): e > (t-2)n/2 forces every t-vertex
        3-leg spider (exact)
      - "broom_turan" (needs k): edge threshold forces B_{2,2k+1} in
        connected G (asymptotic)
    """
    key = encode_graph6(g)
    if lemma == "sum_longest_path":
        stats = longest_path_stats(g)
        concl = g.e <= sum(stats.p) / 2
        return LemmaVerdict(
            lemma, key, True, concl, not concl, False, {"p_sum": sum(stats.p)}
        )
    if lemma == "path_turan":
        if k is None:
            raise ParameterError("path_turan requires k")
        if not g.is_connected():
            raise HypothesisViolationError("path_turan requires a connected graph")
        hyp = g.e >= edge_threshold_S_plus(g.n, k) if g.n >= k + 2 else False
        hyp = hyp and not is_complete_split_plus(g, k)
        concl = contains_tree(g, Path(2 * k + 3)) is not None if hyp else False
        return LemmaVerdict(lemma, key, hyp, concl, hyp and not concl, True)
    if lemma == "spider3_erdos_sos":
        if t is None:
            raise ParameterError("spider3_erdos_sos requires t")
        hyp = g.e > (t - 2) * g.n / 2
        missing = []
        if hyp:
            for sp in three_leg_spiders(t):
                if contains_tree(g, sp) is None:
                    missing.append(sp.legs)
        concl = hyp and not missing
        return LemmaVerdict(
            lemma, key, hyp, concl, hyp and not concl, False, {"missing": missing}
        )
    if lemma == "broom_turan":
        if k is None:
            raise ParameterError("broom_turan requires k")
        if not g.is_connected():
            raise HypothesisViolationError("broom_turan requires a connected graph")
        hyp = g.n >= k + 2 and g.e >= edge_threshold_S_plus(g.n, k)
        concl = (
            contains_tree(g, Broom(2, 2 * k + 1)) is not None if hyp else False
        )
        return LemmaVerdict(lemma, key, hyp, concl, hyp and not concl, True)
    raise ParameterError(f"unknown lemma id {lemma!r}")

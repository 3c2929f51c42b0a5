"""Campaign runner: evaluates the conjecture/theorem predicates over graph
streams, applies the boundary policy for float thresholds, and builds
deterministic reports."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, asdict

from . import __version__
from .errors import ParameterError
from .graphs import (
    Broom,
    CompleteSplit,
    CompleteSplitPlus,
    GeneralizedBroom,
    Path,
    Spider,
    build_family,
    encode_graph6,
    is_complete_split,
    is_complete_split_plus,
)
from .spectral import mu_S_closed, spectral_radius, bound_min_degree, bound_edges
from .embed import all_trees_of_order, contains_tree
from .enumeration import all_graphs, perturb_extremal, random_graph
from .turan import check_lemma, edge_threshold_S_plus

SCHEMA_VERSION = 1

CAMPAIGNS = (
    "conjecture_a",
    "conjecture_b",
    "theorem_path",
    "theorem_spider",
    "theorem_brooms",
    "broom_turan",
    "lemma_suite",
    "genbroom_explore",
)


@dataclass(frozen=True)
class Source:
    kind: str  # exhaustive | random | perturbation
    count: int = 0
    seed: int = 0
    base: object = None  # family spec for perturbation
    radius: int = 1


@dataclass(frozen=True)
class CampaignSpec:
    campaign: str
    k: int
    n_min: int
    n_max: int
    source: Source = Source("exhaustive")
    epsilon: float = 1e-9
    budget: int = 10**8

    def validate(self):
        if self.campaign not in CAMPAIGNS:
            raise ParameterError(f"unknown campaign {self.campaign!r}")
        if self.k < 2:
            raise ParameterError(f"k must be >= 2, got {self.k}")
        if self.n_min > self.n_max or self.n_min < 1:
            raise ParameterError(f"bad n range [{self.n_min}, {self.n_max}]")
        if self.epsilon <= 0:
            raise ParameterError("epsilon must be positive")


@dataclass
class VerificationReport:
    schema_version: int
    spec: dict
    totals: dict
    verdicts: list
    violations: list
    boundary: list
    empirical_thresholds: dict
    timings: dict
    tool_version: str


def _graph_stream(spec, n):
    """Deterministic (index, graph) stream for one order.  Indices are
    stable regardless of sharding."""
    src = spec.source
    if src.kind == "exhaustive":
        for i, g in enumerate(all_graphs(n)):
            yield i, g
    elif src.kind == "random":
        for i in range(src.count):
            yield i, random_graph(n, p=0.5, seed=src.seed * 1_000_003 + n * 101 + i)
    elif src.kind == "perturbation":
        base = src.base
        if isinstance(base, CompleteSplit):
            base = CompleteSplit(n, base.k)
        elif isinstance(base, CompleteSplitPlus):
            base = CompleteSplitPlus(n, base.k)
        else:
            raise ParameterError("perturbation base must be a complete-split spec")
        i = 0
        yield i, build_family(base)
        count = src.count or 20
        for a in range(src.radius + 1):
            for r in range(src.radius + 1 - a):
                if a + r == 0:
                    continue
                for j in range(count):
                    i += 1
                    yield i, perturb_extremal(
                        base, add=a, remove=r, seed=src.seed * 7_654_321 + i
                    )
    else:
        raise ParameterError(f"unknown source kind {src.kind!r}")


def _patterns(spec, n):
    """The containment conclusion patterns for mu-threshold campaigns."""
    k = spec.k
    c = spec.campaign
    if c in ("conjecture_a", "conjecture_b"):
        order = 2 * k + 2 if c == "conjecture_a" else 2 * k + 3
        return [("tree", t) for t in all_trees_of_order(order)]
    if c == "theorem_path":
        return [("path", build_family(Path(2 * k + 2)))]
    if c == "theorem_brooms":
        return [
            (f"broom_{s}_{t}", build_family(Broom(s, t)))
            for s in range(1, 2 * k + 2)
            for t in (2 * k + 2 - s,)
        ]
    if c == "theorem_spider":
        out = []
        for legs in _partitions(2 * k + 2):
            sp = Spider(*legs)
            if sp.odd_legs >= 3 and 2 * sp.unit_legs - sp.odd_legs >= 2:
                out.append((f"spider_{'_'.join(map(str, legs))}", build_family(sp)))
        return out
    if c == "broom_turan":
        return [("broom", build_family(Broom(2, 2 * k + 1)))]
    if c == "genbroom_explore":
        out = []
        order = 2 * k + 3
        for s in (1, 2):
            t = order - s
            for ell in range(2, t):
                out.append(
                    (f"genbroom_{s}_{t}_{ell}", build_family(GeneralizedBroom(s, t, ell)))
                )
        return out
    return []


def _partitions(total, largest=None, prefix=()):
    largest = largest or total
    if total == 0:
        yield prefix
        return
    for part in range(min(largest, total), 0, -1):
        yield from _partitions(total - part, part, prefix + (part,))


def _stable_key(g):
    """Graph identity for reports: canonical graph6 when small, plain
    graph6 otherwise."""
    from .graphs import canonical_key, CANONICAL_CAP

    if g.n <= CANONICAL_CAP:
        return canonical_key(g)
    return encode_graph6(g)


def run_campaign(spec, shards=1):
    """Run one campaign.  `shards` partitions the stream; results are
    invariant under the partitioning."""
    spec.validate()
    t_start = time.perf_counter()
    verdicts = []
    violations = []
    boundary = []
    per_n_violations = {}
    scanned = 0
    qualifying = 0
    for n in range(spec.n_min, spec.n_max + 1):
        items = list(_graph_stream(spec, n))
        shard_lists = [items[s::shards] for s in range(shards)]
        shard_results = [_run_shard(spec, n, chunk) for chunk in shard_lists]
        merged = [v for res in shard_results for v in res]
        merged.sort(key=lambda v: (v["key"], v["index"]))
        nviol = 0
        for v in merged:
            scanned += 1
            if v["classification"] == "qualifying":
                qualifying += 1
            if v["classification"] == "boundary":
                boundary.append(v)
            if v["violation"]:
                violations.append(v)
                nviol += 1
            verdicts.append(v)
        per_n_violations[n] = nviol
    thresholds = _empirical_thresholds(per_n_violations)
    totals = {
        "graphs_scanned": scanned,
        "hypothesis_satisfying": qualifying,
        "boundary_classified": len(boundary),
        "violations": len(violations),
    }
    timings = {"wall_clock_s": round(time.perf_counter() - t_start, 6)}
    return VerificationReport(
        schema_version=SCHEMA_VERSION,
        spec=_spec_dict(spec),
        totals=totals,
        verdicts=verdicts,
        violations=violations,
        boundary=boundary,
        empirical_thresholds=thresholds,
        timings=timings,
        tool_version=__version__,
    )


def _spec_dict(spec):
    d = asdict(spec)
    src = d["source"]
    if src["base"] is not None:
        base = spec.source.base
        src["base"] = f"{type(base).__name__}{tuple(getattr(base, f) for f in ('n', 'k') if hasattr(base, f))}"
    return d


def _run_shard(spec, n, items):
    out = []
    for index, g in items:
        out.append(_verdict_for_graph(spec, n, index, g))
    return out


def _verdict_for_graph(spec, n, index, g):
    c = spec.campaign
    if c == "lemma_suite":
        return _lemma_suite_verdict(spec, n, index, g)
    if c == "broom_turan":
        return _broom_turan_verdict(spec, n, index, g)
    return _mu_campaign_verdict(spec, n, index, g)


def _mu_campaign_verdict(spec, n, index, g):
    k = spec.k
    c = spec.campaign
    eps = spec.epsilon
    if c == "conjecture_b":
        thr = _mu_s_plus_numeric(n, k)
        exceptional = lambda h: is_complete_split_plus(h, k)
    else:
        thr = mu_S_closed(n, k)
        exceptional = lambda h: is_complete_split(h, k)
    mu = spectral_radius(g).mu
    v = {
        "index": index,
        "n": n,
        "key": _stable_key(g),
        "mu": mu,
        "classification": None,
        "conclusion_holds": None,
        "missing": [],
        "violation": False,
    }
    if mu >= thr + eps:
        v["classification"] = "qualifying"
    elif mu < thr - eps:
        v["classification"] = "non_qualifying"
    else:
        # boundary policy: exceptional-graph isomorphism first, then a
        # higher-precision re-solve, then record as boundary
        if exceptional(g):
            v["classification"] = "excluded_exceptional"
            return v
        mu_hi = spectral_radius(g, tol=1e-13).mu
        v["mu"] = mu_hi
        if mu_hi >= thr + eps:
            v["classification"] = "qualifying"
        elif mu_hi < thr - eps:
            v["classification"] = "non_qualifying"
        else:
            v["classification"] = "boundary"
            return v
    if v["classification"] != "qualifying":
        return v
    missing = []
    for name, pat in _patterns(spec, n):
        if pat.n > g.n or contains_tree(g, pat, budget=spec.budget) is None:
            missing.append(name)
    v["missing"] = missing
    v["conclusion_holds"] = not missing
    advisory = spec.campaign == "genbroom_explore"
    v["violation"] = bool(missing) and not advisory
    return v


_mu_plus_cache = {}


def _mu_s_plus_numeric(n, k):
    if (n, k) not in _mu_plus_cache:
        _mu_plus_cache[(n, k)] = spectral_radius(
            build_family(CompleteSplitPlus(n, k)), tol=1e-13
        ).mu
    return _mu_plus_cache[(n, k)]


def _broom_turan_verdict(spec, n, index, g):
    v = {
        "index": index,
        "n": n,
        "key": _stable_key(g),
        "mu": None,
        "classification": "non_qualifying",
        "conclusion_holds": None,
        "missing": [],
        "violation": False,
    }
    if not g.is_connected():
        return v
    if n < spec.k + 2 or g.e < edge_threshold_S_plus(n, spec.k):
        return v
    v["classification"] = "qualifying"
    ok = contains_tree(g, Broom(2, 2 * spec.k + 1), budget=spec.budget) is not None
    v["conclusion_holds"] = ok
    v["missing"] = [] if ok else [f"broom_2_{2 * spec.k + 1}"]
    v["violation"] = not ok  # advisory at small n; thresholds reported
    return v


def _lemma_suite_verdict(spec, n, index, g):
    failures = []
    verd = check_lemma(g, "sum_longest_path")
    if verd.violation:
        failures.append("sum_longest_path")
    for t in (4, 5):
        verd = check_lemma(g, "spider3_erdos_sos", t=t)
        if verd.violation:
            failures.append(f"spider3_t{t}")
    mu = spectral_radius(g).mu if g.e else 0.0
    if mu > bound_edges(g.e) + 1e-9:
        failures.append("edge_bound")
    delta = min(g.degrees()) if g.n else 0
    if mu > bound_min_degree(g.n, g.e, delta) + 1e-9:
        failures.append("min_degree_bound")
    return {
        "index": index,
        "n": n,
        "key": _stable_key(g),
        "mu": mu,
        "classification": "qualifying",
        "conclusion_holds": not failures,
        "missing": failures,
        "violation": bool(failures),
    }


def _empirical_thresholds(per_n_violations):
    """Smallest scanned n from which on no violations were seen."""
    ns = sorted(per_n_violations)
    threshold = None
    for n in reversed(ns):
        if per_n_violations[n] == 0:
            threshold = n
        else:
            break
    return {
        "per_n_violations": {str(n): per_n_violations[n] for n in ns},
        "zero_violation_from_n": threshold,
    }


# -- report serialization --------------------------------------------------


def report_to_json(report):
    return json.dumps(asdict(report), sort_keys=True, indent=2) + "\n"


def report_to_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["n", "index", "key", "mu", "classification", "conclusion_holds", "missing", "violation"]
    )
    for v in report.verdicts:
        writer.writerow(
            [
                v["n"],
                v["index"],
                v["key"],
                "" if v["mu"] is None else repr(v["mu"]),
                v["classification"],
                "" if v["conclusion_holds"] is None else int(v["conclusion_holds"]),
                ";".join(v["missing"]),
                int(v["violation"]),
            ]
        )
    return buf.getvalue()


def write_report(report, fmt, path):
    """Serialize a report deterministically (stable field order)."""
    if fmt == "json":
        payload = report_to_json(report)
    elif fmt == "csv":
        payload = report_to_csv(report)
    else:
        raise ParameterError(f"unknown report format {fmt!r}")
    try:
        with open(path, "w") as fh:
            fh.write(payload)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc

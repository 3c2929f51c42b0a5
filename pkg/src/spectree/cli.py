"""Command-line interface.

Exit codes: 0 completed with no violations, 1 completed with violations,
2 usage error, 3 budget/cap error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import (
    BudgetExceededError,
    CapExceededError,
    Graph6Error,
    HypothesisViolationError,
    ParameterError,
)
from .graphs import (
    Broom,
    Complete,
    CompleteSplit,
    CompleteSplitPlus,
    GeneralizedBroom,
    Path,
    Spider,
    Star,
    build_family,
    decode_graph6,
    encode_graph6,
    write_edge_list,
)
from .spectral import lemma1_certificate, spectral_radius
from .embed import all_trees_of_order, contains_tree
from .enumeration import all_graphs
from .harness import (
    CampaignSpec,
    Source,
    VerificationReport,
    report_to_csv,
    report_to_json,
    run_campaign,
)

USAGE_ERROR = 2
CAP_ERROR = 3


def parse_family(text, n=None, k=None):
    """Family spec from a CLI token like 'S', 'S+', 'path:6', 'spider:1,1,3'."""
    name, _, args = text.partition(":")
    params = [int(x) for x in args.split(",")] if args else []
    name = name.lower()
    if name in ("s", "complete-split"):
        return CompleteSplit(n, k)
    if name in ("s+", "complete-split-plus"):
        return CompleteSplitPlus(n, k)
    if name == "path":
        return Path(params[0] if params else n)
    if name == "star":
        return Star(params[0] if params else n - 1)
    if name == "complete":
        return Complete(params[0] if params else n)
    if name == "spider":
        return Spider(*params)
    if name == "broom":
        return Broom(*params)
    if name == "genbroom":
        return GeneralizedBroom(*params)
    raise ParameterError(f"unknown family {text!r}")


def _read_graph(arg):
    if arg == "-":
        arg = sys.stdin.readline().strip()
    return decode_graph6(arg)


def build_parser():
    p = argparse.ArgumentParser(prog="spectree", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", help="emit a family graph as graph6/edge-list")
    f.add_argument("spec", help="family token, e.g. S, S+, path:6, spider:1,1,3")
    f.add_argument("--n", type=int)
    f.add_argument("--k", type=int)
    f.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    f.add_argument("--out")

    m = sub.add_parser("mu", help="spectral radius of a graph6 input")
    m.add_argument("graph", help="graph6 string, or - for stdin")

    c = sub.add_parser("contains", help="tree containment verdict/witness")
    c.add_argument("host", help="graph6 string, family token, or - for stdin")
    c.add_argument("tree", help="family token for the tree pattern")
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--budget", type=int, default=10**8)

    q = sub.add_parser("certify", help="quotient certificate (integer column sums)")
    q.add_argument("graph", help="graph6 string, family token, or - for stdin")
    q.add_argument("--n", type=int)
    q.add_argument("--k", type=int)
    q.add_argument("--a", type=int)
    q.add_argument("--b", type=int)

    e = sub.add_parser("enumerate", help="spool graphs or trees as graph6")
    e.add_argument("what", choices=("graphs", "trees"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--connected", action="store_true")
    e.add_argument("--out")

    v = sub.add_parser("verify", help="run a campaign")
    v.add_argument("campaign", nargs="?", help="campaign id (or use --config)")
    v.add_argument("--config", help="key=value config file")
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--n", type=int, default=8)
    v.add_argument("--n-max", type=int)
    v.add_argument("--source", default="exhaustive")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=20)
    v.add_argument("--radius", type=int, default=1)
    v.add_argument("--epsilon", type=float, default=1e-9)
    v.add_argument("--budget", type=int, default=10**8)
    v.add_argument("--shards", type=int, default=1)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out")

    r = sub.add_parser("report", help="re-render a stored JSON report")
    r.add_argument("path")
    r.add_argument("--format", choices=("json", "csv"), default="csv")
    r.add_argument("--out")
    return p


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_or_family(arg, n, k):
    if arg == "-" or all(63 <= ord(ch) <= 126 for ch in arg) and ":" not in arg and arg not in ("S", "S+"):
        try:
            return _read_graph(arg)
        except Graph6Error:
            pass
    return build_family(parse_family(arg, n=n, k=k))


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code in (0, None) else USAGE_ERROR
    try:
        return _dispatch(args)
    except (ParameterError, Graph6Error, HypothesisViolationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (CapExceededError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_ERROR


def _dispatch(args):
    if args.command == "family":
        g = build_family(parse_family(args.spec, n=args.n, k=args.k))
        text = encode_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g)
        _emit(text, args.out)
        return 0
    if args.command == "mu":
        g = _read_graph(args.graph)
        res = spectral_radius(g)
        print(f"mu {res.mu:.12f} residual {res.residual:.3e} iterations {res.iterations}")
        return 0
    if args.command == "contains":
        host = _graph_or_family(args.host, args.n, args.k)
        pattern = parse_family(args.tree, n=args.n, k=args.k)
        emb = contains_tree(host, pattern, budget=args.budget)
        if emb is None:
            print("not-contained")
            return 0
        print("contained " + " ".join(f"{p}->{h}" for p, h in emb.pairs()))
        return 0
    if args.command == "certify":
        g = _graph_or_family(args.graph, args.n, args.k)
        a = args.a if args.a is not None else (args.k - 1 if args.k else None)
        b = args.b if args.b is not None else (args.k * (g.n - args.k) if args.k else None)
        if a is None or b is None:
            raise ParameterError("give --a/--b or --k to derive them")
        cert = lemma1_certificate(g, a, b)
        print(
            f"verdict {cert.verdict} mu_prime {cert.mu_prime:.12f} "
            f"column_sums {list(cert.column_sums)}"
        )
        return 0
    if args.command == "enumerate":
        if args.what == "graphs":
            graphs = all_graphs(args.n, connected_only=args.connected)
        else:
            graphs = all_trees_of_order(args.n)
        text = "".join(encode_graph6(g) + "\n" for g in graphs)
        _emit(text, args.out)
        return 0
    if args.command == "verify":
        spec = _campaign_spec_from_args(args)
        report = run_campaign(spec, shards=args.shards)
        payload = report_to_json(report) if args.format == "json" else report_to_csv(report)
        _emit(payload, args.out)
        print(
            f"campaign {spec.campaign}: scanned {report.totals['graphs_scanned']}, "
            f"violations {report.totals['violations']}",
            file=sys.stderr,
        )
        return 1 if report.totals["violations"] else 0
    if args.command == "report":
        with open(args.path) as fh:
            data = json.load(fh)
        report = VerificationReport(**data)
        payload = report_to_json(report) if args.format == "json" else report_to_csv(report)
        _emit(payload, args.out)
        return 0
    raise ParameterError(f"unknown command {args.command!r}")


def _campaign_spec_from_args(args):
    cfg = {}
    if args.config:
        with open(args.config) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ParameterError(f"bad config line {line!r}")
                key, _, value = line.partition("=")
                cfg[key.strip()] = value.strip()
    campaign = cfg.get("campaign", args.campaign)
    if not campaign:
        raise ParameterError("campaign id required (positional or config)")
    k = int(cfg.get("k", args.k))
    n_min = int(cfg.get("n", args.n))
    n_max = int(cfg.get("n_max", args.n_max if args.n_max is not None else n_min))
    kind = cfg.get("source", args.source)
    seed = int(cfg.get("seed", args.seed))
    count = int(cfg.get("count", args.count))
    radius = int(cfg.get("radius", args.radius))
    if kind == "exhaustive":
        source = Source("exhaustive")
    elif kind == "random":
        source = Source("random", count=count, seed=seed)
    elif kind in ("perturbation", "perturbation-plus"):
        base = CompleteSplit(n_min, k) if kind == "perturbation" else CompleteSplitPlus(n_min, k)
        source = Source("perturbation", count=count, seed=seed, base=base, radius=radius)
    else:
        raise ParameterError(f"unknown source {kind!r}")
    return CampaignSpec(
        campaign=campaign,
        k=k,
        n_min=n_min,
        n_max=n_max,
        source=source,
        epsilon=float(cfg.get("epsilon", args.epsilon)),
        budget=int(cfg.get("budget", args.budget)),
    )


if __name__ == "__main__":
    sys.exit(main())

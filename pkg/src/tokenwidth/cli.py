"""Command-line front end.

Subcommands: build, verify, table, tw, mmb, border, bramble, spectral.
Every command accepts --format/--out plus cap overrides; caps may also
be set through TOKENWIDTH_CAP_* environment variables. Exit codes:
0 pass, 1 invariant failure, 2 usage error, 3 resource cap exceeded.
Identical configurations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .brambles import (
    DEFAULT_BRAMBLE_SET_CAP,
    bramble_from_json,
    bramble_to_json,
    kn_bramble,
    min_hitting_set,
    star_bramble,
    validate_bramble,
)
from .decompositions import (
    decomposition_to_json,
    f2kn_path_decomposition,
    fkkn_lex_decomposition,
    star_decomposition,
    validate,
    width,
)
from .errors import InvalidParameterError, ResourceLimitError
from .formulas import bounds
from .graphs import FAMILIES, Graph, generate, graph_from_json
from .oracles import (
    DEFAULT_EIG_CAP,
    DEFAULT_MMB_CAP,
    DEFAULT_TW_CAP,
    border,
    exact_treewidth_certificate,
    mmb_certificate,
    spectral_lower_bound,
)
from .tokens import DEFAULT_TOKEN_VERTEX_CAP, token_graph, token_graph_to_json
from .verification import SUITES, run_suite

CAP_DEFAULTS = {
    "token_vertices": DEFAULT_TOKEN_VERTEX_CAP,
    "tw": DEFAULT_TW_CAP,
    "mmb": DEFAULT_MMB_CAP,
    "eig": DEFAULT_EIG_CAP,
    "bramble_sets": DEFAULT_BRAMBLE_SET_CAP,
}


@dataclass
class RunConfig:
    """Resolved run configuration echoed into reports.

    Caps are positive, ranges nonempty, and the seed is recorded in every
    emitted report so runs are reproducible byte for byte.
    """

    command: str
    family: str | None = None
    n_range: tuple[int, int] | None = None
    k: int | None = None
    seed: int = 0
    fmt: str = "text"
    out: str | None = None
    caps: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for name, value in self.caps.items():
            if value <= 0:
                raise InvalidParameterError(f"cap {name} must be positive, got {value}")
        if self.n_range is not None and self.n_range[1] < self.n_range[0]:
            raise InvalidParameterError(f"empty n range {self.n_range}")

    def echo(self) -> dict:
        data = {"command": self.command, "seed": self.seed, "caps": dict(sorted(self.caps.items()))}
        if self.family is not None:
            data["family"] = self.family
        if self.n_range is not None:
            data["n_range"] = list(self.n_range)
        if self.k is not None:
            data["k"] = self.k
        return data


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _resolve_caps(args) -> dict[str, int]:
    caps = {}
    for name, default in CAP_DEFAULTS.items():
        flag = getattr(args, f"cap_{name}", None)
        env = os.environ.get(f"TOKENWIDTH_CAP_{name.upper()}")
        caps[name] = flag if flag is not None else (int(env) if env else default)
    return caps


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    for name in CAP_DEFAULTS:
        p.add_argument(f"--cap-{name.replace('_', '-')}", dest=f"cap_{name}", type=int, default=None)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load_graph_file(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


def _input_graph(args, caps) -> Graph:
    if args.infile:
        return _load_graph_file(args.infile)
    if not args.family or args.n is None:
        raise InvalidParameterError("provide --in FILE or --family with --n (and --k for token graphs)")
    base = generate(args.family, args.n)
    if args.k is None:
        return base
    return token_graph(base, args.k, cap=caps["token_vertices"]).graph


# -- subcommand implementations ---------------------------------------------


def cmd_build(args) -> int:
    caps = _resolve_caps(args)
    RunConfig("build", family=args.family, n_range=(args.n, args.n), k=args.k,
              seed=args.seed, fmt=args.fmt, out=args.out, caps=caps)
    base = generate(args.family, args.n)
    if args.bramble:
        if args.k not in (None, 2):
            raise InvalidParameterError("bramble constructions exist for k=2 only")
        if args.family == "star":
            b = star_bramble(args.n)
        elif args.family == "complete":
            b = kn_bramble(args.n, cap_sets=caps["bramble_sets"])
        else:
            raise InvalidParameterError("no bramble construction for family 'path'")
        size, witness = min_hitting_set(b, cap_sets=caps["bramble_sets"])
        payload = bramble_to_json(b)
        payload["order"] = size
        payload["witness"] = sorted(witness)
        _emit(_dump_json(payload), args.out)
        return 0
    if args.decomp:
        if args.k is None:
            raise InvalidParameterError("--decomp needs --k")
        if args.family == "star":
            d = star_decomposition(args.n, args.k)
        elif args.family == "complete":
            d = f2kn_path_decomposition(args.n) if args.k == 2 else fkkn_lex_decomposition(
                args.n, args.k, cap=caps["token_vertices"])
        else:
            raise InvalidParameterError("no decomposition construction for family 'path'")
        tg = token_graph(base, args.k, cap=caps["token_vertices"])
        report = validate(d, tg)
        if not report.ok:
            raise AssertionError(f"constructed decomposition failed validation: {report.summary()}")
        payload = decomposition_to_json(d, tg)
        payload["width"] = width(d)
        _emit(_dump_json(payload), args.out)
        return 0
    if args.k is not None:
        tg = token_graph(base, args.k, cap=caps["token_vertices"])
        _emit(_dump_json(token_graph_to_json(tg)), args.out)
    else:
        from .graphs import graph_to_json

        _emit(_dump_json(graph_to_json(base)), args.out)
    return 0


def cmd_tw(args) -> int:
    caps = _resolve_caps(args)
    g = _input_graph(args, caps)
    value, order = exact_treewidth_certificate(g, cap=caps["tw"])
    if args.fmt == "json":
        _emit(_dump_json({"treewidth": value, "elimination_order": order}), args.out)
    else:
        _emit(f"treewidth {value}\nelimination_order {json.dumps(order)}\n", args.out)
    return 0


def cmd_mmb(args) -> int:
    caps = _resolve_caps(args)
    g = _input_graph(args, caps)
    value, order = mmb_certificate(g, cap=caps["mmb"])
    if args.fmt == "json":
        _emit(_dump_json({"minimax_border": value, "ordering": order}), args.out)
    else:
        _emit(f"minimax_border {value}\nordering {json.dumps(order)}\n", args.out)
    return 0


def cmd_border(args) -> int:
    caps = _resolve_caps(args)
    g = _input_graph(args, caps)
    subset = [int(x) for x in args.subset.split(",") if x.strip() != ""]
    value = border(g, subset)
    if args.fmt == "json":
        _emit(_dump_json({"border": value, "subset": sorted(subset)}), args.out)
    else:
        _emit(f"border {value}\n", args.out)
    return 0


def cmd_bramble(args) -> int:
    caps = _resolve_caps(args)
    if args.infile:
        with open(args.infile, encoding="utf-8") as fh:
            b = bramble_from_json(json.load(fh))
    elif args.family == "star":
        b = star_bramble(args.n)
    elif args.family == "complete":
        b = kn_bramble(args.n, cap_sets=caps["bramble_sets"])
    else:
        raise InvalidParameterError("provide --in FILE or --family star|complete with --n")
    report = validate_bramble(b)
    size, witness = min_hitting_set(b, cap_sets=caps["bramble_sets"])
    result = {
        "sets": len(b.sets),
        "valid": report.ok,
        "validation": report.summary(),
        "order": size,
        "witness": sorted(witness),
        "treewidth_lower_bound": size - 1,
    }
    if args.fmt == "json":
        _emit(_dump_json(result), args.out)
    else:
        _emit(
            f"sets {len(b.sets)}\nvalid {report.ok}\norder {size}\n"
            f"witness {json.dumps(sorted(witness))}\ntreewidth_lower_bound {size - 1}\n",
            args.out,
        )
    return 0 if report.ok else 1


def cmd_spectral(args) -> int:
    caps = _resolve_caps(args)
    if not args.family or args.n is None or args.k is None:
        raise InvalidParameterError("spectral needs --family, --n and --k")
    tg = token_graph(generate(args.family, args.n), args.k, cap=caps["token_vertices"])
    rep = spectral_lower_bound(tg, eig_cap=caps["eig"])
    payload = {
        "lambda2": rep.lambda2,
        "lambda2_token": rep.lambda2_token,
        "max_degree": rep.max_degree,
        "n_vertices": rep.n_vertices,
        "chandran_lower_bound": rep.chandran_lower_bound,
    }
    if args.fmt == "json":
        _emit(_dump_json(payload), args.out)
    else:
        lines = [f"{key} {payload[key]}" for key in sorted(payload)]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _table_rows(family: str, k: int, n_lo: int, n_hi: int) -> list[dict]:
    rows = []
    for n in range(n_lo, n_hi + 1):
        if family == "complete":
            if not 2 <= k <= n - 1:
                continue
        elif not 1 <= k <= n - 1:
            continue
        rep = bounds(family, n, k)
        rows.append({
            "family": rep.family,
            "n": rep.n,
            "k": rep.k,
            "lower": rep.lower,
            "upper": rep.upper,
            "exact": rep.exact,
            "sources": "; ".join(rep.sources),
        })
    if not rows:
        raise InvalidParameterError(f"no valid (n, k) pairs for family {family} with k={k} in {n_lo}..{n_hi}")
    return rows


def cmd_table(args) -> int:
    caps = _resolve_caps(args)
    n_lo, n_hi = _parse_range(args.n)
    config = RunConfig("table", family=args.family, n_range=(n_lo, n_hi), k=args.k,
                       seed=args.seed, fmt=args.fmt, out=args.out, caps=caps)
    rows = _table_rows(args.family, args.k, n_lo, n_hi)
    if args.fmt == "json":
        _emit(_dump_json({"config": config.echo(), "rows": rows}), args.out)
        return 0
    if args.fmt == "csv":
        buf = io.StringIO()
        buf.write(f"# config {json.dumps(config.echo(), sort_keys=True)}\n")
        writer = csv.DictWriter(buf, fieldnames=["family", "n", "k", "lower", "upper", "exact", "sources"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue(), args.out)
        return 0
    cols = ["family", "n", "k", "lower", "upper", "exact"]
    head = f"{'family':<9} {'n':>3} {'k':>2} {'lower':>10} {'upper':>7} {'exact':>7}"
    lines = [head, "-" * len(head)]
    for row in rows:
        lower = "-" if row["lower"] is None else f"{row['lower']:.3f}"
        upper = "-" if row["upper"] is None else str(row["upper"])
        exact = "-" if row["exact"] is None else str(row["exact"])
        lines.append(f"{row['family']:<9} {row['n']:>3} {row['k']:>2} {lower:>10} {upper:>7} {exact:>7}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    caps = _resolve_caps(args)
    config = RunConfig("verify", family=None, n_range=None, k=None,
                       seed=args.seed, fmt=args.fmt, out=args.out, caps=caps)
    kwargs = {
        "n_max": args.n_max,
        "k_max": args.k_max,
        "samples": args.samples,
        "seed": args.seed,
        "tw_cap": caps["tw"],
        "mmb_cap": caps["mmb"],
    }
    try:
        checks = run_suite(args.suite, **kwargs)
    except KeyError:
        raise InvalidParameterError(
            f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))} or 'all'")
    checks = sorted(checks, key=lambda c: c.key)
    passed = sum(1 for c in checks if c.passed)
    report = {
        "config": {**config.echo(), "suite": args.suite},
        "checks": [{"key": c.key, "passed": c.passed, "detail": c.detail} for c in checks],
        "total": len(checks),
        "passed": passed,
        "failed": len(checks) - passed,
        "ok": passed == len(checks),
    }
    if args.fmt == "json":
        _emit(_dump_json(report), args.out)
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.key}: {c.detail}" for c in checks]
        lines.append(f"{'PASS' if report['ok'] else 'FAIL'} suite={args.suite} "
                     f"checks={report['total']} failed={report['failed']} seed={args.seed}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report["ok"] else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenwidth",
        description="Token graphs with certified tree decompositions, brambles and exact treewidth oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit token graph, decomposition or bramble JSON")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--decomp", action="store_true", help="emit the family's decomposition")
    p.add_argument("--bramble", action="store_true", help="emit the family's 2-token bramble")
    _add_common(p)
    p.set_defaults(fn=cmd_build)

    for name, fn, needs_subset in (("tw", cmd_tw, False), ("mmb", cmd_mmb, False), ("border", cmd_border, True)):
        p = sub.add_parser(name, help=f"run the {name} oracle on a graph")
        p.add_argument("--in", dest="infile", default=None, help="graph JSON file")
        p.add_argument("--family", choices=FAMILIES, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--k", type=int, default=None)
        if needs_subset:
            p.add_argument("--subset", required=True, help="comma-separated vertex labels")
        _add_common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("bramble", help="validate a bramble and certify its order")
    p.add_argument("--in", dest="infile", default=None, help="bramble JSON file")
    p.add_argument("--family", choices=("star", "complete"), default=None)
    p.add_argument("--n", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_bramble)

    p = sub.add_parser("spectral", help="algebraic-connectivity lower bound for a token graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_spectral)

    p = sub.add_parser("table", help="bound tables over an n range")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", required=True, help="single value or range like 4..8")
    _add_common(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(sorted(SUITES))}, or 'all'")
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--k-max", dest="k_max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InvalidParameterError as exc:
        print(f"error: invalid-parameter: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: resource-limit: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: missing-file: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"error: invariant-failure: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

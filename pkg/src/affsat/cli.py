"""Command-line front end and the persistent crystal-graph cache.

One query, one document: every command writes exactly one JSON, DOT or TSV
document to stdout and keeps diagnostics on stderr.  Exit codes: 0 success,
2 validation error, 3 node-cap exceeded, 1 internal inconsistency (should
not happen; it means the two multiplicity routes disagreed).

Weights are entered either through the dimension-vector dictionary
(-w framing dims, -v gauge dims, so lambda = sum w_i Lambda_i and
mu = lambda - sum v_i alpha_i) or as explicit {"n":..,"w":..,"c":..} JSON.
The graph cache stores one file per key under --cache-dir (default
$AFFSAT_CACHE_DIR), keyed by a digest of (schema version, rank, lambda,
budget, convention id), and serves byte-identical documents on warm hits.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import crystal, freudenthal, satake
from .cartan import Weight, weights_from_dims
from .crystal import CONVENTION_ID, DEFAULT_NODE_CAP, canonical_dumps
from .errors import (
    ConsistencyError,
    DomainError,
    IncomparableWeightsError,
    RankError,
    ResourceCapError,
)

SCHEMA_VERSION = 1
ENV_CACHE_DIR = "AFFSAT_CACHE_DIR"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3


def _parse_vector(text: str, n: int, name: str) -> tuple[int, ...]:
    try:
        vec = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise DomainError(f"malformed {name} vector {text!r}: expected comma-separated integers") from exc
    if len(vec) != n:
        raise DomainError(f"{name} vector must have length n={n}, got {len(vec)}")
    return vec


def _weight_from_json_arg(text: str) -> Weight:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed weight JSON {text!r}: {exc}") from exc
    return Weight.from_json(obj)


def _resolve_lambda(args) -> Weight:
    if getattr(args, "lam", None):
        return _weight_from_json_arg(args.lam)
    if args.n is None or getattr(args, "w", None) is None:
        raise DomainError("pass -n with -w, or an explicit --lam JSON weight")
    w = _parse_vector(args.w, args.n, "w")
    lam, _ = weights_from_dims(args.n, w, (0,) * args.n)
    return lam


def _resolve_mu(args, lam: Weight) -> Weight:
    if getattr(args, "mu", None):
        return _weight_from_json_arg(args.mu)
    if getattr(args, "v", None) is None:
        raise DomainError("pass -v (lowering vector) or --mu (explicit weight JSON)")
    v = _parse_vector(args.v, lam.n, "v")
    if any(x < 0 for x in v):
        raise DomainError("v entries must be nonnegative")
    return Weight(lam.n, lam.w, tuple(a + b for a, b in zip(lam.c, v)))


def _resolve_budget(args, lam: Weight, *, fallback_v: bool = True) -> tuple[int, ...]:
    if getattr(args, "budget", None):
        return _parse_vector(args.budget, lam.n, "budget")
    if getattr(args, "depth", None) is not None:
        if args.depth < 0:
            raise DomainError("--depth must be nonnegative")
        return (args.depth,) * lam.n
    if fallback_v and getattr(args, "v", None):
        return _parse_vector(args.v, lam.n, "v")
    raise DomainError("no budget: pass --budget, --depth or -v")


def _tensor_pair(args) -> tuple[Weight, Weight]:
    if getattr(args, "lam1", None) or getattr(args, "lam2", None):
        if not (args.lam1 and args.lam2):
            raise DomainError("--lam1 and --lam2 must be given together")
        return _weight_from_json_arg(args.lam1), _weight_from_json_arg(args.lam2)
    if not (getattr(args, "w1", None) and getattr(args, "w2", None)):
        raise DomainError("tensor queries need --w1 and --w2 (or --lam1/--lam2)")
    if args.n is None:
        raise DomainError("pass -n with --w1/--w2")
    w1 = _parse_vector(args.w1, args.n, "w1")
    w2 = _parse_vector(args.w2, args.n, "w2")
    lam1, _ = weights_from_dims(args.n, w1, (0,) * args.n)
    lam2, _ = weights_from_dims(args.n, w2, (0,) * args.n)
    return lam1, lam2


def _is_tensor_query(args) -> bool:
    return bool(getattr(args, "w1", None) or getattr(args, "lam1", None))


# -- cache ------------------------------------------------------------------


def _cache_key(lam: Weight, budget: tuple[int, ...]) -> str:
    payload = canonical_dumps({
        "schema_version": SCHEMA_VERSION,
        "n": lam.n,
        "lambda": lam.to_json(),
        "budget": list(budget),
        "convention_id": CONVENTION_ID,
    })
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_get_or_build(lam: Weight, budget, cache_dir: Optional[str], *,
                       node_cap: int = DEFAULT_NODE_CAP) -> str:
    """Canonical graph JSON for (lambda, budget), served from cache when possible.

    A cached document is only served when its stored digest matches; corrupt
    entries are rebuilt and overwritten with a warning.  Cache write failures
    degrade to build-without-store.
    """
    budget = tuple(int(x) for x in budget)

    def build() -> str:
        return crystal.generate_crystal(lam, budget, node_cap=node_cap).to_json_str()

    if cache_dir is None:
        return build()
    root = Path(cache_dir)
    if root.exists() and not root.is_dir():
        raise DomainError(f"cache dir {cache_dir!r} exists and is not a directory")
    key = _cache_key(lam, budget)
    path = root / f"{key}.json"
    if path.exists():
        try:
            entry = json.loads(path.read_text())
            payload = entry["payload"]
            if hashlib.sha256(payload.encode()).hexdigest() == entry["sha256"]:
                return payload
            print(f"affsat: cache entry {path.name} failed its digest check; rebuilding",
                  file=sys.stderr)
        except (OSError, ValueError, KeyError, TypeError):
            print(f"affsat: cache entry {path.name} is unreadable; rebuilding", file=sys.stderr)
    doc = build()
    entry = {
        "schema_version": SCHEMA_VERSION,
        "key": key,
        "sha256": hashlib.sha256(doc.encode()).hexdigest(),
        "created_at": datetime.now(timezone.utc).isoformat(),
        "payload": doc,
    }
    try:
        root.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(entry))
        os.replace(tmp, path)
    except OSError as exc:
        print(f"affsat: cache write failed ({exc}); continuing without store", file=sys.stderr)
    return doc


def dot_from_graph_json(obj: dict) -> str:
    """DOT rendering of a canonical graph document: nodes labelled by weight,
    edges labelled by residue and colored by residue class."""
    palette = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
               "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f")
    lines = ["digraph crystal {", "  rankdir=TB;"]
    for node in obj["nodes"]:
        lines.append(f'  n{node["id"]} [label="c={node["weight"]["c"]}"];')
    for edge in obj["edges"]:
        color = palette[edge["i"] % len(palette)]
        lines.append(f'  n{edge["from"]} -> n{edge["to"]} [label="{edge["i"]}", color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------


def _cmd_crystal(args) -> tuple[str, int]:
    lam = _resolve_lambda(args)
    budget = _resolve_budget(args, lam)
    if args.format not in ("json", "dot"):
        raise DomainError(f"unknown format {args.format!r} for crystal (json or dot)")
    cache_dir = args.cache_dir or os.environ.get(ENV_CACHE_DIR)
    doc = cache_get_or_build(lam, budget, cache_dir, node_cap=args.node_cap)
    if args.format == "dot":
        return dot_from_graph_json(json.loads(doc)), EXIT_OK
    return doc, EXIT_OK


def _cmd_mult(args) -> tuple[str, int]:
    if _is_tensor_query(args):
        lam1, lam2 = _tensor_pair(args)
        mu = _resolve_mu(args, lam1 + lam2)
        m = crystal.tensor_weight_multiplicity(lam1, lam2, mu, node_cap=args.node_cap)
    else:
        lam = _resolve_lambda(args)
        mu = _resolve_mu(args, lam)
        m = crystal.weight_multiplicity(lam, mu, node_cap=args.node_cap)
    return canonical_dumps({"multiplicity": m}), EXIT_OK


def _cmd_tensor(args) -> tuple[str, int]:
    lam1, lam2 = _tensor_pair(args)
    budget = _resolve_budget(args, lam1)
    hw = crystal.tensor_highest_weights(lam1, lam2, budget, node_cap=args.node_cap)
    items = sorted(hw.items(), key=lambda kv: (sum(kv[0].c), kv[0].c))
    doc = canonical_dumps({
        "highest_weights": [{"kappa": k.to_json(), "multiplicity": m} for k, m in items],
    })
    return doc, EXIT_OK


def _cmd_branch(args) -> tuple[str, int]:
    if args.format not in ("json", "tsv"):
        raise DomainError(f"unknown format {args.format!r} for branch (json or tsv)")
    lam = _resolve_lambda(args)
    mu = _resolve_mu(args, lam)
    if args.i is None:
        raise DomainError("branch requires a residue: pass -i")
    rows = satake.sheaf_multiplicity_table(lam, mu, args.i)
    if args.format == "tsv":
        out = ["k\tkappa_prime\tpairing\tmultiplicity"]
        for row in rows:
            out.append(f"{row.k}\t{canonical_dumps(row.kappa_prime.to_json())}\t"
                       f"{row.pairing}\t{row.multiplicity}")
        return "\n".join(out) + "\n", EXIT_OK
    doc = canonical_dumps({
        "table": [
            {"k": row.k, "kappa_prime": row.kappa_prime.to_json(),
             "pairing": row.pairing, "multiplicity": row.multiplicity}
            for row in rows
        ],
    })
    return doc, EXIT_OK


def _cmd_leaves(args) -> tuple[str, int]:
    lam = _resolve_lambda(args)
    mu = _resolve_mu(args, lam)
    strata = satake.enumerate_leaves(lam, mu, include_empty=args.include_empty)
    return canonical_dumps({"strata": [s.to_json() for s in strata]}), EXIT_OK


def _cmd_fixed(args) -> tuple[str, int]:
    if _is_tensor_query(args):
        lam1, lam2 = _tensor_pair(args)
        mu = _resolve_mu(args, lam1 + lam2)
        splittings = satake.tensor_fixed_points(lam1, lam2, mu, node_cap=args.node_cap)
        doc = canonical_dumps({
            "count": len(splittings),
            "splittings": [{"mu1": a.to_json(), "mu2": b.to_json()} for a, b in splittings],
        })
        return doc, EXIT_OK
    lam = _resolve_lambda(args)
    mu = _resolve_mu(args, lam)
    count = satake.attracting_component_count(lam, mu, node_cap=args.node_cap)
    doc = canonical_dumps({
        "fixed_point_count": 1 if count > 0 else 0,
        "attracting_component_count": count,
    })
    return doc, EXIT_OK


def _cmd_check(args) -> tuple[str, int]:
    lam = _resolve_lambda(args)
    if args.depth is None:
        raise DomainError("check requires --depth")
    budget = (args.depth,) * lam.n
    graph = crystal.generate_crystal(lam, budget, node_cap=args.node_cap)
    counts = graph.weight_counts()
    disagreements = []
    compared = 0
    from itertools import product as _product
    for u in _product(*(range(b + 1) for b in budget)):
        compared += 1
        mu = Weight(lam.n, lam.w, tuple(a + b for a, b in zip(lam.c, u)))
        got = counts.get(u, 0)
        want = freudenthal.freudenthal_multiplicity(lam, mu)
        if got != want:
            disagreements.append({"c": list(u), "crystal": got, "freudenthal": want})
    ok = not disagreements
    message = f"crystal vs Freudenthal: {'OK' if ok else 'FAIL'} ({compared} weights compared)"
    print(message, file=sys.stderr)
    doc = canonical_dumps({
        "status": "OK" if ok else "FAIL",
        "weights_compared": compared,
        "disagreements": disagreements,
        "message": message,
    })
    return doc, EXIT_OK if ok else EXIT_INTERNAL


_HANDLERS = {
    "crystal": _cmd_crystal,
    "mult": _cmd_mult,
    "tensor": _cmd_tensor,
    "branch": _cmd_branch,
    "leaves": _cmd_leaves,
    "fixed": _cmd_fixed,
    "check": _cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affsat",
        description="Affine type-A crystal combinatorics: truncated crystal graphs, "
                    "weight multiplicities, tensor decompositions, branching tables, "
                    "symplectic-leaf labels and fixed-point predicates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, mu=False, tensor=False, residue=False, formats=None,
               budget=False, depth=False, cache=False, include_empty=False):
        sp.add_argument("-n", type=int, default=None, help="rank (number of residues), >= 2")
        sp.add_argument("-w", default=None, help="framing dims, comma separated (defines lambda)")
        sp.add_argument("--lam", default=None, help="explicit lambda as weight JSON")
        if mu:
            sp.add_argument("-v", default=None, help="gauge dims, comma separated (defines mu)")
            sp.add_argument("--mu", default=None, help="explicit mu as weight JSON")
        if tensor:
            sp.add_argument("--w1", default=None, help="framing dims of the first factor")
            sp.add_argument("--w2", default=None, help="framing dims of the second factor")
            sp.add_argument("--lam1", default=None, help="first factor as weight JSON")
            sp.add_argument("--lam2", default=None, help="second factor as weight JSON")
        if residue:
            sp.add_argument("-i", type=int, default=None, help="residue index in 0..n-1")
        if budget:
            sp.add_argument("--budget", default=None, help="lowering budget, comma separated")
        if depth:
            sp.add_argument("--depth", type=int, default=None, help="uniform budget shorthand")
        if formats:
            sp.add_argument("--format", default="json", help=f"output format ({'|'.join(formats)})")
        if cache:
            sp.add_argument("--cache-dir", default=None,
                            help=f"graph cache directory (default ${ENV_CACHE_DIR})")
        if include_empty:
            sp.add_argument("--include-empty", action="store_true",
                            help="keep strata whose regular locus is empty")
        sp.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP,
                        help="abort generation beyond this many nodes")

    common(sub.add_parser("crystal", help="truncated crystal graph of lambda"),
           mu=True, budget=True, depth=True, formats=("json", "dot"), cache=True)
    common(sub.add_parser("mult", help="weight multiplicity (tensor variant via --w1/--w2)"),
           mu=True, tensor=True)
    common(sub.add_parser("tensor", help="tensor decomposition within a budget"),
           mu=True, tensor=True, budget=True, depth=True)
    common(sub.add_parser("branch", help="rank-1 branching table at residue i"),
           mu=True, residue=True, formats=("json", "tsv"))
    common(sub.add_parser("leaves", help="symplectic-leaf stratum labels"),
           mu=True, include_empty=True)
    common(sub.add_parser("fixed", help="fixed point and attracting-component counts"),
           mu=True, tensor=True)
    common(sub.add_parser("check", help="compare the crystal engine against Freudenthal"),
           depth=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = _HANDLERS[args.command](args)
    except (RankError, DomainError, IncomparableWeightsError) as exc:
        print(f"affsat: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceCapError as exc:
        print(f"affsat: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"affsat: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(doc if doc.endswith("\n") else doc + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

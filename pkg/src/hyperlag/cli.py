"""Command-line front-end.

Every invocation writes exactly one JSON object to stdout and a short human
summary to stderr.  Exit codes: 0 success, 1 domain error (input outside a
result's hypotheses, or failed verification), 2 usage or parse error,
3 search budget exceeded.  Numeric payload fields are decimal strings;
exact rationals are "p/q".
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from .core import Hypergraph, ParseError, blowup, edge_types, parse, serialize, sorted_edges
from .exact import lagrangian12_exact, max_clique
from .extremal import (
    OutOfHypothesisError,
    SearchBudgetError,
    chromatic_number,
    dense_report,
    extremal_search,
    lubell,
    turan_density_12,
)
from .hom import exists_hom
from .numeric import evaluate, maximize
from .verify import SUITES, run_suite

DEFAULT_CACHE = "hyperlag_cache.jsonl"


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _frac(x: Fraction) -> str:
    return str(x)


def _digest(paths) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()


def _load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _parse_weights(text: str, n: int):
    try:
        weights = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"weights must be comma-separated numbers, got {text!r}") from None
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    total = sum(weights)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"weights sum to {total!r}, more than 1e-9 away from 1")
    return [w / total for w in weights]


def _cmd_eval(args):
    h = _load(args.file)
    x = _parse_weights(args.weights, h.n)
    return {"value": _fmt(evaluate(h, x)), "weights": [_fmt(w) for w in x]}, False, [args.file]


def _cmd_lagrangian(args):
    h = _load(args.file)
    res = maximize(h, restarts=args.restarts, tol=args.tol, seed=args.seed)
    payload = {
        "value": _fmt(res.value),
        "weighting": [_fmt(w) for w in res.weighting],
        "support": sorted(res.support),
        "iterations": res.iterations,
        "converged": res.converged,
        "kkt_residual": _fmt(res.kkt_residual),
    }
    if edge_types(h) <= {1, 2}:
        exact_value = lagrangian12_exact(h).value
        payload["exact_value"] = _frac(exact_value)
        payload["agrees_exact"] = bool(abs(res.value - float(exact_value)) <= 1e-6)
    return payload, False, [args.file]


def _cmd_exact12(args):
    h = _load(args.file)
    res = lagrangian12_exact(h)
    payload = {
        "value": _frac(res.value),
        "case": res.case_tag,
        "witness_weighting": [_frac(w) for w in res.witness],
    }
    return payload, True, [args.file]


def _cmd_clique(args):
    h = _load(args.file)
    res = max_clique(h)
    return {"size": res.size, "witness": list(res.witness)}, True, [args.file]


def _cmd_chromatic(args):
    h = _load(args.file)
    return {"chromatic_number": chromatic_number(h)}, True, [args.file]


def _cmd_hom(args):
    f = _load(args.f_file)
    g = _load(args.g_file)
    witness = exists_hom(f, g)
    payload = {"exists": witness is not None}
    payload["mapping"] = None if witness is None else {str(k): v for k, v in sorted(witness.items())}
    return payload, True, [args.f_file, args.g_file]


def _cmd_blowup(args):
    h = _load(args.file)
    try:
        sizes = [int(tok) for tok in args.s.split(",")]
    except ValueError:
        raise ValueError(f"class sizes must be comma-separated integers, got {args.s!r}") from None
    result = blowup(h, sizes)
    text = serialize(result)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    payload = {
        "vertices": result.n,
        "edge_count": len(result.edges),
        "output": args.output,
        "output_digest": hashlib.sha256(text.encode()).hexdigest(),
    }
    return payload, True, [args.file]


def _cmd_lubell(args):
    h = _load(args.file)
    return {"value": _frac(lubell(h))}, True, [args.file]


def _cmd_turan12(args):
    h = _load(args.file)
    value = turan_density_12(h)
    pair_level = Hypergraph(h.n, frozenset(e for e in h.edges if len(e) == 2))
    return {"value": _frac(value), "chromatic_number": chromatic_number(pair_level)}, True, [args.file]


def _cmd_extremal(args):
    f = _load(args.f_file)
    cache = args.cache if args.cache is not None else os.environ.get("HYPERLAG_CACHE", DEFAULT_CACHE)
    rec = extremal_search(
        f,
        args.n,
        mode=args.mode,
        search=args.search,
        seed=args.seed,
        cache_path=cache or None,
        jobs=args.jobs,
    )
    payload = {
        "n": rec.n,
        "mode": rec.mode,
        "search": rec.search,
        "max_lubell": _frac(rec.max_lubell),
        "witness": serialize(rec.witness),
        "seed": rec.seed,
    }
    return payload, True, [args.f_file]


def _cmd_dense(args):
    h = _load(args.file)
    dense, base, drops, uncovered = dense_report(h)
    payload = {
        "dense": dense,
        "value": _frac(base),
        "edge_deletions": [
            {"edge": list(e), "value": _frac(v), "drops": bool(v < base)} for e, v in drops
        ],
        "uncovered_vertices": uncovered,
    }
    return payload, True, [args.file]


def _cmd_verify(args):
    checks = run_suite(args.suite, artifacts_dir=args.artifacts)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"[{status}] criterion {c.criterion}: {c.detail}", file=sys.stderr)
    passed = sum(1 for c in checks if c.passed)
    payload = {
        "suite": args.suite,
        "total": len(checks),
        "passed": passed,
        "failed": len(checks) - passed,
        "checks": [
            {"criterion": c.criterion, "passed": c.passed, "detail": c.detail} for c in checks
        ],
    }
    return payload, True, []


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlag",
        description="Lagrangians, clique structure, and Turan-type extremal search "
        "for non-uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="edge polynomial at a given weighting")
    p.add_argument("file")
    p.add_argument("--weights", required=True, help="comma-separated weights, must sum to 1")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("lagrangian", help="numeric maximization over the simplex")
    p.add_argument("file")
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_lagrangian)

    p = sub.add_parser("exact12", help="exact optimum for a {1,2}-graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_exact12)

    p = sub.add_parser("clique", help="exact maximum clique of a 2-uniform graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_clique)

    p = sub.add_parser("chromatic", help="exact chromatic number of a 2-uniform graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_chromatic)

    p = sub.add_parser("hom", help="homomorphism witness from F to G, if any")
    p.add_argument("f_file")
    p.add_argument("g_file")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("blowup", help="write the blowup by the given class sizes")
    p.add_argument("file")
    p.add_argument("--s", required=True, help="comma-separated class sizes")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("lubell", help="exact Lubell density")
    p.add_argument("file")
    p.set_defaults(func=_cmd_lubell)

    p = sub.add_parser("turan12", help="closed-form density for a {1,2}-graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_turan12)

    p = sub.add_parser("extremal", help="finite-n extremal host search")
    p.add_argument("f_file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["free", "hom-free"], default="free")
    p.add_argument("--search", choices=["exhaustive", "local"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cache", default=None, help="cache path (default HYPERLAG_CACHE or ./hyperlag_cache.jsonl)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("dense", help="denseness test with per-edge deletion values")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dense)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--suite", choices=list(SUITES), default="all")
    p.add_argument("--artifacts", default=None, help="directory for data artifacts")
    p.set_defaults(func=_cmd_verify)

    return parser


def _emit_error(command: str, code: str, reason: str) -> None:
    print(json.dumps({"command": command, "error": {"code": code, "reason": reason}}))
    print(f"error[{code}]: {reason}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = args.command
    try:
        payload, exact, inputs = args.func(args)
        digest = _digest(inputs) if inputs else ""
    except OutOfHypothesisError as exc:
        _emit_error(command, "out-of-hypothesis", str(exc))
        return 1
    except SearchBudgetError as exc:
        _emit_error(command, "budget", str(exc))
        return 3
    except (ParseError, ValueError) as exc:
        _emit_error(command, "usage", str(exc))
        return 2
    except OSError as exc:
        _emit_error(command, "io", str(exc))
        return 2
    out = {"command": command, "input_digest": digest, "exact": exact, "payload": payload}
    print(json.dumps(out, sort_keys=True))
    if command == "verify":
        failed = payload["failed"]
        print(f"{command}: {payload['passed']}/{payload['total']} checks passed", file=sys.stderr)
        return 0 if failed == 0 else 1
    print(f"{command}: ok", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

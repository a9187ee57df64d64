"""Command-line interface.  Every command writes one JSON document to stdout
(``sample-spectra`` writes JSON lines).

Exit codes: 0 success or positive verdict, 3 negative verdict, 64 usage
error, 65 bad input data, 66 unreadable input file, 70 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .errors import HornconeError

SCHEMA_VERSION = 1
EXIT_OK, EXIT_NEGATIVE = 0, 3
EXIT_USAGE, EXIT_DATA, EXIT_NOINPUT, EXIT_INTERNAL = 64, 65, 66, 70

log = logging.getLogger("horncone")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _json_arg(text: str):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not valid JSON: {exc}") from exc


def _load_input(value):
    """--input accepts a file path or inline JSON."""
    if value is None:
        return {}
    if os.path.exists(value):
        try:
            with open(value, encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise FileNotFoundError(str(exc)) from exc
    try:
        return json.loads(value)
    except ValueError:
        raise FileNotFoundError(f"{value!r} is neither a readable file nor JSON") from None


def _pick(args, data, name, key=None):
    val = getattr(args, name, None)
    if val is None:
        val = data.get(key or name)
    return val


def _need(val, name):
    if val is None:
        raise UsageError(f"missing --{name.replace('_', '-')} (or the key in --input)")
    return val


# --- subcommands ---------------------------------------------------------------

def cmd_lr(args, data):
    from . import lr

    inner = _need(_pick(args, data, "inner"), "inner")
    content = _need(_pick(args, data, "content"), "content")
    outer = _need(_pick(args, data, "outer"), "outer")
    n = _pick(args, data, "n") or max(len(inner), len(content), len(outer), 1)
    c = lr.lr_coeff(inner, content, outer, n)
    out = {"c": c, "inner": inner, "content": content, "outer": outer, "n": n}
    if args.oracle:
        out["oracle"] = lr.lr_oracle(inner, content, outer, n)
    return out, EXIT_OK if c else EXIT_NEGATIVE


def cmd_genlr(args, data):
    from . import genlr

    lam = _need(_pick(args, data, "lam", "lambda"), "lambda")
    n = _pick(args, data, "n")
    t = genlr.SpectraTuple.from_lists(lam, n)
    value = genlr.f_naive(t) if args.naive else genlr.f_dp(t)
    return {"f": value}, EXIT_OK if value else EXIT_NEGATIVE


def cmd_kl(args, data):
    from . import genlr

    lq = _need(_pick(args, data, "lambda_quotient"), "lambda_quotient")
    mq = _need(_pick(args, data, "mu_quotient"), "mu_quotient")
    q = genlr.KLQuery(tuple(tuple(x) for x in lq), tuple(tuple(x) for x in mq))
    delta, coeff = genlr.kl_monomial(q)
    return {"delta": delta, "coeff": coeff}, EXIT_OK if coeff else EXIT_NEGATIVE


def cmd_horn(args, data):
    from . import horn

    n = _need(_pick(args, data, "n"), "n")
    m = _need(_pick(args, data, "m"), "m")
    mode = _pick(args, data, "mode") or "minimal"
    sys_ = horn.enumerate_S(int(n), int(m), mode, disk_cache=not args.no_cache)
    out = sys_.to_json()
    out["count"] = len(sys_.inequalities)
    out["trace_equality"] = sys_.render()[0]
    out["inequalities"] = [q.render() for q in sys_.inequalities]
    return out, EXIT_OK


def cmd_cone(args, data):
    from . import cone, horn
    from .spectra import RationalSpectra

    lam = _need(_pick(args, data, "lam", "lambda"), "lambda")
    spec = RationalSpectra.from_lists(lam)
    n = _pick(args, data, "n") or spec.n
    m = _pick(args, data, "m") or spec.m
    mode = _pick(args, data, "mode") or "minimal"
    sys_ = horn.enumerate_S(int(n), int(m), mode, disk_cache=not args.no_cache)
    rep = cone.check_membership(spec, sys_, args.slack or 0)
    out = rep.to_json()
    out["mode"] = mode
    return out, EXIT_OK if rep.member else EXIT_NEGATIVE


def cmd_les(args, data):
    from . import pgroups

    p = _need(_pick(args, data, "p"), "p")
    types = _need(_pick(args, data, "types"), "types")
    q = pgroups.ExactSequenceQuery(int(p), tuple(tuple(t) for t in types))
    if args.brute_force:
        exists = pgroups.brute_force_les(q, args.order_bound)
        method = "brute-force"
    else:
        exists = pgroups.decide_les(q)
        method = "f-criterion"
    return {"exists": exists, "method": method}, EXIT_OK if exists else EXIT_NEGATIVE


def cmd_sample(args, data):
    import numpy as np

    from . import spectra

    n = int(_need(_pick(args, data, "n"), "n"))
    m = int(_need(_pick(args, data, "m"), "m"))
    count = int(_pick(args, data, "count") or 1)
    rng = np.random.default_rng(args.seed)
    lines = []
    for _ in range(count):
        _fam, lam = spectra.forward_sample(n, m, rng)
        lines.append({"n": n, "m": m, "lambda": lam.to_json()})
    return lines, EXIT_OK


def cmd_witness(args, data):
    from . import spectra

    lam = _need(_pick(args, data, "lam", "lambda"), "lambda")
    spec = spectra.RationalSpectra.from_lists(lam)
    cfg = spectra.ProjectionConfig(
        max_iterations=args.max_iterations,
        tolerance=args.tolerance,
        restarts=args.restarts,
        rng_seed=args.seed,
    )
    res = spectra.witness_search(spec, cfg)
    if not res.success:
        log.warning("witness search failed: best residual %.3g after %d iterations",
                    res.best_residual, res.iterations)
    return res.to_json(), EXIT_OK if res.success else EXIT_NEGATIVE


def cmd_verify(args, data):
    from . import suites

    name = args.suite
    kw = {}
    if name in ("saturation", "equivalence"):
        kw = {"samples": args.samples or (200 if name == "saturation" else 500), "seed": args.seed}
    elif name == "forward":
        kw = {"n": args.n or 3, "m": args.m or 5, "count": args.samples or 100, "seed": args.seed}
    elif name == "descset":
        kw = {"n_max": args.n or 3, "m_max": args.m or 5}
    elif name == "pgroups":
        kw = {"max_weight": args.max_weight}
    res = suites.SUITES[name](**kw)
    return res, EXIT_OK if res["passed"] else EXIT_NEGATIVE


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--no-cache", action="store_true", help="recompute instead of using the disk cache")
    common.add_argument("--pretty", action="store_true", help="indent JSON and print a summary on stderr")
    common.add_argument("--input", help="JSON file or inline JSON object supplying arguments")

    parser = _Parser(prog="horncone", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--inner", type=_json_arg)
    p.add_argument("--content", type=_json_arg)
    p.add_argument("--outer", type=_json_arg)
    p.add_argument("--n", type=int)
    p.add_argument("--oracle", action="store_true", help="also compute by Schur polynomial expansion")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("genlr", parents=[common], help="generalized LR coefficient f")
    p.add_argument("--lambda", dest="lam", type=_json_arg)
    p.add_argument("--n", type=int)
    p.add_argument("--naive", action="store_true", help="enumerate chains explicitly")
    p.set_defaults(func=cmd_genlr)

    p = sub.add_parser("kl", parents=[common], help="single Kazhdan-Lusztig monomial")
    p.add_argument("--lambda-quotient", dest="lambda_quotient", type=_json_arg)
    p.add_argument("--mu-quotient", dest="mu_quotient", type=_json_arg)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("horn", parents=[common], help="Horn-type inequality systems")
    hs = p.add_subparsers(dest="horn_command", parser_class=_Parser)
    q = hs.add_parser("list", parents=[common], help="enumerate S(n, m)")
    q.add_argument("--n", type=int)
    q.add_argument("--m", type=int)
    q.add_argument("--mode", choices=["minimal", "nonzero"])
    q.set_defaults(func=cmd_horn)

    p = sub.add_parser("cone", parents=[common], help="membership in K(n, m)")
    cs = p.add_subparsers(dest="cone_command", parser_class=_Parser)
    q = cs.add_parser("check", parents=[common], help="exact membership report")
    q.add_argument("--lambda", dest="lam", type=_json_arg)
    q.add_argument("--n", type=int)
    q.add_argument("--m", type=int)
    q.add_argument("--mode", choices=["minimal", "nonzero"])
    q.add_argument("--slack", type=float, default=None, help="tolerance on every inequality")
    q.set_defaults(func=cmd_cone)

    p = sub.add_parser("les", parents=[common], help="long exact sequences of p-groups")
    ls = p.add_subparsers(dest="les_command", parser_class=_Parser)
    q = ls.add_parser("decide", parents=[common], help="decide existence")
    q.add_argument("--p", type=int)
    q.add_argument("--types", type=_json_arg)
    q.add_argument("--brute-force", action="store_true", help="search embeddings directly")
    q.add_argument("--order-bound", type=int, default=64)
    q.set_defaults(func=cmd_les)

    p = sub.add_parser("sample-spectra", parents=[common], help="random points of K(n, m)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--count", type=int)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("witness", parents=[common], help="search Hermitian matrices with given spectra")
    p.add_argument("--lambda", dest="lam", type=_json_arg)
    p.add_argument("--max-iterations", type=int, default=10_000)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--restarts", type=int, default=20)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="run a cross-check suite")
    p.add_argument("suite", choices=["saturation", "equivalence", "descset", "pgroups", "forward", "example-ex"])
    p.add_argument("--samples", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max-weight", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(out, pretty: bool):
    indent = 2 if pretty else None
    if isinstance(out, list):
        for item in out:
            sys.stdout.write(json.dumps(item, sort_keys=True) + "\n")
        return
    sys.stdout.write(json.dumps(out, indent=indent, sort_keys=True) + "\n")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            raise UsageError("missing subcommand")
        logging.basicConfig(level=logging.INFO if args.pretty else logging.WARNING,
                            format="%(message)s", stream=sys.stderr)
        print(f"seed: {args.seed}", file=sys.stderr)
        data = _load_input(args.input)
        if not isinstance(data, dict):
            raise UsageError("--input must be a JSON object")
        out, code = args.func(args, data)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except (HornconeError, ValueError, TypeError, KeyError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception:  # noqa: BLE001
        log.exception("internal error")
        return EXIT_INTERNAL
    if not isinstance(out, list):
        out = dict(out, schema_version=SCHEMA_VERSION)
    _emit(out, args.pretty)
    if args.pretty:
        verdict = "ok" if code == EXIT_OK else "negative"
        print(f"{args.command}: {verdict}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

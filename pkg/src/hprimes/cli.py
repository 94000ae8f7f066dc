"""
Command-line entry point: ``hprimes <subcommand> ...``.

Exit codes: 0 success, 1 a verification reported failures, 2 usage error.
All output is deterministic for a given configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import catalog, counting, deleting, poset, qalgebra
from .perms import Permutation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    m: int
    p: int
    seed: int = 0
    size_bound: int = poset.DEFAULT_SIZE_BOUND
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.m < 2 or self.p < 2:
            raise ValueError(f"m and p must both be >= 2 (got m={self.m}, p={self.p})")
        if self.m + self.p > self.size_bound:
            raise ValueError(f"m+p = {self.m + self.p} exceeds the size bound {self.size_bound}")
        if self.format not in ("json", "dot", "text"):
            raise ValueError(f"unknown format {self.format!r}")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _matrix_json(Y) -> list[list[str]]:
    return [[_frac(x) for x in row] for row in Y]


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args, fmt: str = "json") -> RunConfig:
    try:
        return RunConfig(args.m, args.p, getattr(args, "seed", 0) or 0,
                         poset.size_bound(args.size_bound), getattr(args, "out", None), fmt)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'j,beta', got {text!r}") from None
    return a, b


def cmd_count(args) -> int:
    cfg = _config(args)
    values = {
        "enumeration": len(poset.enumerate_S(cfg.m, cfg.p, cfg.size_bound)),
        "vesztergombi": counting.vesztergombi_count(cfg.m, cfg.p),
        "polyBernoulli": counting.poly_bernoulli_neg(cfg.p, cfg.m),
        "hspecFormula": counting.hspec_count(cfg.m, cfg.p),
    }
    record = {"m": cfg.m, "p": cfg.p, **{k: str(v) for k, v in values.items()},
              "agree": len(set(values.values())) == 1}
    print(_dumps(record))
    return EXIT_OK if record["agree"] else EXIT_FAIL


def cmd_enumerate(args) -> int:
    cfg = _config(args)
    if args.t is not None:
        if cfg.m != cfg.p:
            raise UsageError("--t needs m == p")
        perms = poset.enumerate_S_t(cfg.m, args.t, cfg.size_bound)
    else:
        perms = poset.enumerate_S(cfg.m, cfg.p, cfg.size_bound)
    sys.stdout.write("".join(_dumps(s.to_json()) + "\n" for s in perms))
    return EXIT_OK


def cmd_hasse(args) -> int:
    cfg = _config(args, args.format)
    g = poset.hasse(cfg.m, cfg.p, cfg.size_bound)
    text = poset.export_dot(g) if cfg.format == "dot" else poset.export_json(g)
    _emit(text, cfg.output_path)
    return EXIT_OK


def cmd_xi(args) -> int:
    cfg = _config(args)
    if args.sigma:
        try:
            sigma = Permutation.parse(args.sigma)
            entries = [catalog.xi_descriptor(sigma, cfg.m, cfg.p)]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        entries = catalog.build_catalog(cfg.m, cfg.p, cfg.size_bound)
    _emit(catalog.catalog_json(cfg.m, cfg.p, entries), cfg.output_path)
    return EXIT_OK


def _report(name: str, failures: list[dict], **extra) -> int:
    print(_dumps({"check": name, **extra, "ok": not failures, "failures": failures}))
    return EXIT_OK if not failures else EXIT_FAIL


def _check_n(n: int, lo: int = 1) -> None:
    if n < lo:
        raise UsageError(f"--n must be >= {lo}")


def cmd_verify_relations(args) -> int:
    _check_n(args.n, 2)
    return _report("relations", qalgebra.check_relations(args.n), n=args.n)


def cmd_verify_delta_central(args) -> int:
    _check_n(args.n)
    return _report("delta-central", qalgebra.check_delta_central(args.n), n=args.n)


def cmd_dd_run(args) -> int:
    n, m = args.n, args.m
    if not 2 <= m <= n - 2:
        raise UsageError(f"need 2 <= m <= n-2 (got n={n}, m={m})")
    target = deleting.StepIndex(*(args.target or (m, m)))
    if target not in deleting.enumerate_E(m, n - m):
        raise UsageError(f"target {target} is not in E")
    rng = random.Random(args.seed)
    Y = deleting.random_generic_matrix(n, m, rng, target)
    steps = list(deleting.dd_trace(Y, m, target))
    result = steps[-1][1]
    record = {"seed": args.seed, "n": n, "m": m, "target": list(target),
              "input": _matrix_json(Y), "output": _matrix_json(result)}
    ok = True
    if target == (m, m):
        det, diag = deleting.bareiss_det(Y), deleting.diagonal_product(result)
        ok = det == diag
        record.update({"determinant": _frac(det), "diagonalProduct": _frac(diag), "agree": ok})
    back = deleting.dd_inverse_run(result, m, target)
    record["roundTrip"] = back == Y
    ok = ok and back == Y
    print(_dumps(record))
    if args.trace:
        trace = [{"step": list(r), "matrix": _matrix_json(M)} for r, M in steps]
        _emit(_dumps(trace) + "\n", args.trace)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_catalog(args) -> int:
    cfg = _config(args)
    rep = catalog.verify_catalog(cfg.m, cfg.p, cfg.size_bound)
    return _report("catalog", rep.failures, m=cfg.m, p=cfg.p, entries=rep.size)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hprimes", description="Restricted permutations, quantum matrices and H-prime catalogs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def mp(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--size-bound", type=int, default=None,
                        help=f"max m+p (default ${poset.SIZE_BOUND_ENV} or {poset.DEFAULT_SIZE_BOUND})")
        return sp

    mp("count", "four-way count of S").set_defaults(func=cmd_count)
    sp = mp("enumerate", "list S as JSON lines")
    sp.add_argument("--t", type=int, default=None, help="barrier count (square case)")
    sp.set_defaults(func=cmd_enumerate)
    sp = mp("hasse", "Hasse diagram of S")
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_hasse)
    sp = mp("xi", "catalog sigma -> ideal descriptor")
    sp.add_argument("--sigma", default=None, help='one-line notation, e.g. "3,4,1,2"')
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_xi)
    mp("verify-catalog", "criterion, lemma, nesting and strata checks").set_defaults(func=cmd_verify_catalog)

    sp = sub.add_parser("verify-relations", help="quantum matrix relations on 2x2 submatrices")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_verify_relations)
    sp = sub.add_parser("verify-delta-central", help="centrality of the quantum determinant")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_verify_delta_central)

    sp = sub.add_parser("dd-run", help="deleting derivations at q=1 on a seeded random matrix")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--target", type=_pair, default=None, help="last step j,beta (default m,m)")
    sp.add_argument("--trace", default=None, help="write every intermediate matrix to this JSON file")
    sp.set_defaults(func=cmd_dd_run)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        print(f"hprimes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (poset.SizeBoundError, deleting.ZeroPivotError) as exc:
        print(f"hprimes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

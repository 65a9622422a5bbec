"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .aq_catalog import (
    AqModule,
    enumerate_coh,
    langlands_data,
    module_from_row,
    module_to_row,
    poincare,
)
from .cyclotomic import CyclotomicNumber, CyclotomicSubfield, compositum, generated_field
from .errors import AqjlError
from .global_model import (
    GlobalRepDescriptor,
    descriptor_poincare,
    global_jl,
    global_purity,
    global_rationality_field,
    jl_field_equality_check,
    regular_algebraic_report,
)
from .hecke import SatakeParams, hecke_eigenvalues, local_rationality_field
from .jl_transfer import fiber, transfer
from .langlands_params import WeilParameter, is_algebraic, is_regular, parameter_of, purity_weight
from .partitions import parse_partition
from .roots import GroupKind
from .tables import render_tables
from .weights import SelfDualData, parse_weight, selfdual_data

log = logging.getLogger("aqjl")


def _arg(fn: Callable[[str], object]) -> Callable[[str], object]:
    """Wrap a parser so argparse names the offending flag on failure."""

    def parse(text: str):
        try:
            return fn(text)
        except (AqjlError, ValueError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc

    parse.__name__ = fn.__name__
    return parse


@_arg
def partition_arg(text: str):
    return parse_partition(text)


@_arg
def ints_arg(text: str) -> list[int]:
    return [int(tok) for tok in text.strip().strip("[]").split(",") if tok.strip()]


@_arg
def json_arg(text: str):
    return json.loads(text)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False, ensure_ascii=False, separators=(",", ":")))


def _mu_for(args, n: int):
    return parse_weight(",".join(str(x) for x in args.mu), n)


def _lambda_data(args, k: int) -> SelfDualData:
    """From --mu, or from --lambda (and --w)."""
    if getattr(args, "mu", None) is not None:
        return selfdual_data(_mu_for(args, 2 * k))
    lam = args.lam if args.lam is not None else [0]
    if lam == [0]:
        lam = [0] * k
    return SelfDualData(args.w, tuple(lam))


# subcommands


def cmd_catalog(args) -> int:
    kind = GroupKind(args.kind, args.k if args.kind == "H" else 2 * args.k)
    mu = _mu_for(args, kind.n)
    mods = enumerate_coh(kind, mu, canonical=not args.all_rows, workers=args.workers)
    if args.format == "json":
        for m in mods:
            _emit(module_to_row(m))
        return 0
    rows = []
    for m in mods:
        row = module_to_row(m)
        poly = "n/a" if row["poincare"] is None else str(poincare(m))
        rows.append([str(m.partition), str(m.eps), "yes" if row["tempered"] else "no", poly, langlands_data(m).label()])
    header = ["partition", "eps", "tempered", "poincare", "langlands"]
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    for r in [header, *rows]:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def cmd_tables(args) -> int:
    sys.stdout.write(render_tables(args.k, _mu_for(args, 2 * args.k)))
    return 0


def _module_from_flags(args, tag: str) -> AqModule:
    part = args.partition
    size = part.total
    kind = GroupKind(tag, size)
    data = _lambda_data(args, kind.k)
    return AqModule(kind, part, data, getattr(args, "eps", 0) or 0)


def _modules_from_input(args, tag: str) -> list[AqModule]:
    if args.partition is not None:
        return [_module_from_flags(args, tag)]
    mods = []
    for line in sys.stdin:
        line = line.strip()
        if line:
            try:
                mods.append(module_from_row(json.loads(line)))
            except json.JSONDecodeError as exc:
                raise AqjlError(f"stdin: not a JSON row: {exc}") from exc
    return mods


def cmd_jl_transfer(args) -> int:
    for m in _modules_from_input(args, "R"):
        _emit(module_to_row(transfer(m)))
    return 0


def cmd_jl_fiber(args) -> int:
    for m in _modules_from_input(args, "H"):
        mu = _mu_for(args, m.kind.n) if args.mu is not None else m.lam.highest_weight()
        for s in fiber(m, mu):
            _emit(module_to_row(s))
    return 0


def cmd_poincare(args) -> int:
    m = _module_from_flags(args, args.kind)
    poly = poincare(m)
    if args.format == "json":
        _emit(poly.to_json())
    else:
        print(poly)
    return 0


def _parse_pairs(text: str) -> WeilParameter:
    pairs = []
    for chunk in text.split(";"):
        if chunk.strip():
            p, q = chunk.split(",")
            pairs.append((Fraction(p.strip()), Fraction(q.strip())))
    return WeilParameter.of(pairs)


def cmd_param(args) -> int:
    if args.pairs is not None:
        t = args.pairs
    elif args.partition is not None:
        t = parameter_of(_module_from_flags(args, "R"), Fraction(args.twist))
    else:
        raise AqjlError("param needs --partition or --pairs")
    alg = is_algebraic(t)
    out = {
        "parameter": t.to_json(),
        "algebraic": alg,
        "regular": is_regular(t) if alg else None,
        "purity": purity_weight([t], strict=False),
    }
    _emit(out)
    return 0


def cmd_check(args) -> int:
    desc = GlobalRepDescriptor.load(args.file)
    if args.predicate == "regular-algebraic":
        report = regular_algebraic_report(desc)
        _emit(report)
        return 0 if report["regular_algebraic"] else 1
    if args.predicate == "purity":
        w = global_purity(desc)
        _emit({"purity": w} if w is not None else {"purity": None, "reason": "p+q is not constant"})
        return 0 if w is not None else 1
    if args.predicate == "jl-fields":
        ok = jl_field_equality_check(desc)
        _emit({"equal": ok, "field": global_rationality_field(desc).to_json()})
        return 0 if ok else 1
    raise AqjlError(f"unknown predicate {args.predicate!r}")


def cmd_rationality(args) -> int:
    if args.satake is not None:
        s = SatakeParams.from_json(args.satake)
        _emit(
            {
                "eigenvalues": [e.to_json() for e in hecke_eigenvalues(s)],
                "field": local_rationality_field(s).to_json(),
            }
        )
        return 0
    if args.fields is not None:
        fields = [CyclotomicSubfield.from_json(f) for f in args.fields]
        _emit(compositum(fields).to_json())
        return 0
    if args.number is not None:
        _emit(generated_field([CyclotomicNumber.from_json(args.number)]).to_json())
        return 0
    raise AqjlError("rationality needs --satake, --fields or --number")


def cmd_global(args) -> int:
    desc = GlobalRepDescriptor.load(args.file)
    if args.op == "jl":
        _emit(global_jl(desc).to_json())
    elif args.op == "purity":
        _emit({"purity": global_purity(desc, normalize=args.normalize)})
    elif args.op == "poincare":
        _emit(descriptor_poincare(desc).to_json())
    elif args.op == "field":
        _emit(global_rationality_field(desc).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aqjl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def weight_flags(p, required=False):
        p.add_argument("--mu", type=ints_arg, required=required, help="highest weight, comma separated; 0 = zero weight")

    def module_flags(p, kind_flag=False):
        p.add_argument("--partition", type=partition_arg, help="comma-separated parts, e.g. 0,2,2")
        weight_flags(p)
        p.add_argument("--lambda", dest="lam", type=ints_arg, help="block weight lambda (alternative to --mu)")
        p.add_argument("--w", type=int, default=0, help="determinant twist w used with --lambda")
        if kind_flag:
            p.add_argument("--kind", choices=["H", "R"], required=True)

    p = sub.add_parser("catalog", help="enumerate Coh_mu as JSON rows")
    p.add_argument("--kind", choices=["H", "R"], required=True)
    p.add_argument("--k", type=int, required=True, help="k, with n = 2k on the split side")
    weight_flags(p)
    p.add_argument("--all-rows", action="store_true", help="keep both members of equivalent partition pairs")
    p.add_argument("--workers", type=int, default=None, help="threads for admissibility checks")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_catalog, mu=[0])

    p = sub.add_parser("tables", help="render the split and quaternionic tables")
    p.add_argument("--k", type=int, required=True)
    weight_flags(p)
    p.set_defaults(func=cmd_tables, mu=[0])

    p = sub.add_parser("jl-transfer", help="|LJ| of split modules (flags or JSON rows on stdin)")
    module_flags(p)
    p.add_argument("--eps", type=int, default=0, choices=[0, 1])
    p.set_defaults(func=cmd_jl_transfer)

    p = sub.add_parser("jl-fiber", help="split modules over a quaternionic one")
    module_flags(p)
    p.set_defaults(func=cmd_jl_fiber)

    p = sub.add_parser("poincare", help="Poincare polynomial of one module")
    module_flags(p, kind_flag=True)
    p.add_argument("--eps", type=int, default=0, choices=[0, 1])
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("param", help="Langlands parameter and its predicates")
    module_flags(p)
    p.add_argument("--eps", type=int, default=0, choices=[0, 1])
    p.add_argument("--twist", default="0", help="extra |det|^s twist")
    p.add_argument("--pairs", type=_arg(_parse_pairs), help="raw parameter 'p,q;p,q;...'")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("check", help="run a predicate on a descriptor file")
    p.add_argument("predicate", choices=["regular-algebraic", "purity", "jl-fields"])
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("rationality", help="Hecke eigenvalues and rationality fields")
    p.add_argument("--satake", type=json_arg, help="JSON list of cyclotomic numbers")
    p.add_argument("--fields", type=json_arg, help="JSON list of subfields to compose")
    p.add_argument("--number", type=json_arg, help="JSON cyclotomic number")
    p.set_defaults(func=cmd_rationality)

    p = sub.add_parser("global", help="operations on a descriptor file")
    p.add_argument("op", choices=["jl", "purity", "poincare", "field"])
    p.add_argument("file")
    p.add_argument("--normalize", action="store_true", help="apply the (1-n) purity shift")
    p.set_defaults(func=cmd_global)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=os.environ.get("AQJL_LOG_LEVEL", "WARNING").upper(), format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AqjlError as exc:
        print(f"aqjl {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

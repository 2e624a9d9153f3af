"""
Command-line entry point.

Exit status: 0 success / valid, 1 validation failure, 2 usage or parse error.
Artifacts go to ``--out`` or standard output; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import catalog
from .constructions import (
    alpha_product_labeling,
    bigraceful_product_labeling,
    near_alpha_product_labeling,
)
from .decompositions import (
    k2nx1_decomposition,
    knn_decomposition,
    near_alpha_to_bigraceful,
    verify_decomposition,
)
from .errors import AlphaProdError, CertificationError, HypothesisError, ParseError, PreconditionError
from .families import FamilySpec, enumerate_family, validate_family
from .labelings import (
    BigracefulLabeling,
    VertexLabeling,
    normalize_kind,
    search_labelings,
    validate_alpha,
    validate_beta,
    validate_bigraceful,
    validate_near_alpha,
)
from .products import weak_tensor_h
from .textio import (
    decomposition_from_document,
    family_from_document,
    format_assignment,
    format_decomposition,
    format_family,
    format_graph,
    parse_document,
)

DEFAULT_SEED = 0


class UsageError(AlphaProdError):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(args, line):
    if not args.quiet:
        print(line)


def _err(line):
    print(line, file=sys.stderr)


def _int_set(text):
    try:
        return frozenset(int(t) for t in text.split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _kind_name(kind):
    return kind.replace("_", "-")


# -- subcommands -------------------------------------------------------------


def cmd_validate(args):
    doc = parse_document(_read(args.file))
    if doc.family is not None:
        family = family_from_document(doc)
        kind = normalize_kind(args.kind) if args.kind else family.kind
        problems = validate_family(family, kind)
        label = f"family {_kind_name(kind)}"
        if problems:
            _say(args, f"{label} invalid")
            for p in problems:
                _err(p)
            return 1
        _say(args, f"{label} valid members={len(family)}")
        return 0

    record = doc.graph(0)
    labeling = record.labeling
    if labeling is None:
        raise UsageError(f"graph {record.name} carries no labeling block")
    kind = normalize_kind(args.kind) if args.kind else labeling.kind
    G = record.graph
    suffix = ""
    if kind == "bigraceful":
        if not isinstance(labeling, BigracefulLabeling):
            raise UsageError("bigraceful validation needs a bigraceful labeling block")
        problems = validate_bigraceful(G, labeling, args.mode)
        suffix = f" ({args.mode})"
    elif isinstance(labeling, BigracefulLabeling):
        raise UsageError(f"{_kind_name(kind)} validation needs a map-style labeling block")
    elif kind == "beta":
        problems = validate_beta(G, labeling)
    elif kind == "alpha":
        k = labeling.characteristic if labeling.kind == "alpha" else None
        check = validate_alpha(G, labeling.assignment, k)
        problems = check.problems
        if check.valid:
            suffix = f" k={check.k}"
    else:
        if labeling.parts is None:
            raise UsageError("near-alpha validation needs partA/partB lines")
        problems = validate_near_alpha(G, labeling, *labeling.parts)

    if problems:
        _say(args, f"{_kind_name(kind)} invalid")
        for p in problems:
            _err(p)
        return 1
    _say(args, f"{_kind_name(kind)} valid{suffix}")
    return 0


def _load_product_inputs(args):
    left_doc = parse_document(_read(args.left))
    left = left_doc.graph(0)
    family = family_from_document(parse_document(_read(args.family)))
    if args.assign == "random":
        h = catalog.random_assignment(random.Random(args.seed), left.graph, len(family))
    else:
        h = parse_document(_read(args.assign)).assignment
        if h is None:
            raise UsageError(f"{args.assign} contains no assign lines")
    return left, family, h


def cmd_product(args):
    left, family, h = _load_product_inputs(args)
    P = weak_tensor_h(left.graph, family, h)
    _emit(args, format_graph(args.name or f"{left.name}_h", P))
    return 0


def cmd_construct(args):
    left, family, h = _load_product_inputs(args)
    kind = normalize_kind(args.kind)
    if left.labeling is None:
        raise UsageError(f"graph {left.name} carries no labeling block")
    if kind == "alpha":
        result = alpha_product_labeling(left.graph, left.labeling, family, h)
    elif kind == "near_alpha":
        result = near_alpha_product_labeling(left.graph, left.labeling, family, h)
    elif kind == "bigraceful":
        if not isinstance(left.labeling, BigracefulLabeling):
            raise HypothesisError("left factor labeling is not a bigraceful labeling")
        result = bigraceful_product_labeling(left.graph, left.labeling, family, h)
    else:
        raise UsageError("construct supports alpha, near-alpha and bigraceful")
    prov = result.provenance
    cert = ["# certificate", f"# kind {_kind_name(kind)}", f"# q {prov['q']}", f"# n {prov['n']}"]
    if kind == "alpha":
        cert += [f"# k_G {prov['k_G']}", f"# k {prov['k']}", f"# characteristic {prov['characteristic']}"]
    cert.append("# verdict valid")
    cert += ["# assignment"] + ["# " + line for line in format_assignment(prov["assignment"]).splitlines()]
    text = "\n".join(cert) + "\n" + format_graph(args.name or f"{left.name}_h", result.product, result.labeling)
    _emit(args, text)
    return 0


def cmd_enumerate(args):
    spec = FamilySpec(args.L, args.H, args.n, args.kind)
    family = enumerate_family(spec, no_isolated=args.no_isolated)
    _emit(args, format_family(family))
    if args.out:
        _say(args, f"{len(family)} members")
    return 0


def cmd_decompose(args):
    record = parse_document(_read(args.file)).graph(0)
    G, labeling = record.graph, record.labeling
    if labeling is None:
        raise UsageError(f"graph {record.name} carries no labeling block")
    if args.host == "k2nx1":
        if args.x is None:
            raise UsageError("--host k2nx1 requires --x")
        if not isinstance(labeling, VertexLabeling) or labeling.kind != "near_alpha":
            raise UsageError("k2nx1 decompositions need a near-alpha labeling")
        dec = k2nx1_decomposition(G, labeling, args.x)
    else:
        if isinstance(labeling, VertexLabeling):
            if labeling.kind != "near_alpha":
                raise UsageError("knn decompositions need a bigraceful or near-alpha labeling")
            labeling = near_alpha_to_bigraceful(G, labeling)
        dec = knn_decomposition(G, labeling)
    problems = verify_decomposition(dec)
    if problems:
        for p in problems:
            _err(p)
        return 1
    _emit(args, format_decomposition(dec, record.name))
    return 0


def cmd_verify_decomposition(args):
    dec = decomposition_from_document(parse_document(_read(args.file)))
    problems = verify_decomposition(dec)
    if problems:
        _say(args, "decomposition invalid")
        for p in problems:
            _err(p)
        return 1
    _say(args, f"decomposition valid host={dec.host.kind} {dec.host.order} blocks={len(dec.base_blocks)}")
    return 0


def cmd_search(args):
    record = parse_document(_read(args.file)).graph(0)
    found = search_labelings(record.graph, args.kind, args.mode, args.max_edges)
    if args.count:
        _emit(args, f"{len(found)}\n")
        return 0
    chunks = [f"# count {len(found)}\n"]
    for i, labeling in enumerate(found):
        chunks.append("\n" + format_graph(f"{record.name}_{i}", record.graph, labeling))
    _emit(args, "".join(chunks))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the artifact here instead of standard output")
    common.add_argument("--quiet", action="store_true", help="suppress status lines")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random helpers")

    parser = argparse.ArgumentParser(
        prog="alphaprod",
        description="Weak h-products of bipartite graphs and labeling transfer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = ["beta", "alpha", "near-alpha", "near_alpha", "bigraceful"]
    transfer_kinds = ["alpha", "near-alpha", "near_alpha", "bigraceful"]

    p = sub.add_parser("validate", parents=[common], help="validate a labeling or a family file")
    p.add_argument("--kind", choices=kinds)
    p.add_argument("--mode", choices=["strict", "modular"], default="strict")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    for name, func, helptext in (
        ("product", cmd_product, "build the weak h-product"),
        ("construct", cmd_construct, "build a labeled weak h-product"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name == "construct":
            p.add_argument("--kind", choices=transfer_kinds, required=True)
        p.add_argument("--left", required=True, help="left factor graph file")
        p.add_argument("--family", required=True, help="family file")
        p.add_argument("--assign", required=True, help="assignment file, or 'random' (uses --seed)")
        p.add_argument("--name", help="name of the output graph")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate an admissible family")
    p.add_argument("--kind", choices=transfer_kinds, default="alpha")
    p.add_argument("--L", type=_int_set, required=True)
    p.add_argument("--H", type=_int_set, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-isolated", action="store_true", help="drop members with isolated vertices")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", parents=[common], help="build a cyclic decomposition certificate")
    p.add_argument("--host", choices=["k2nx1", "knn"], required=True)
    p.add_argument("--x", type=int)
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-decomposition", parents=[common], help="check a decomposition certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_decomposition)

    p = sub.add_parser("search", parents=[common], help="list all labelings of a small graph")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--mode", choices=["strict", "modular"], default="strict")
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--count", action="store_true", help="print only the number of labelings")
    p.add_argument("file")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (HypothesisError, CertificationError) as exc:
        _err(f"error: {exc}")
        return 1
    except (UsageError, ParseError, PreconditionError, AlphaProdError, ValueError) as exc:
        _err(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())

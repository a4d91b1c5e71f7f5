"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure.
"""

import argparse
import json
import sys
from math import prod

from .combinatorics import count_distinct_monomials
from .decompose import (
    SCHEMES,
    decompose,
    expected_part_sizes,
    layer_sizes,
    max_ces_dim,
    max_ges_dim,
    max_sym_ges_dim,
    verify,
)
from .embeddings import EmbedSpec, generator_states, nupb_size
from .errors import EntsubError
from .multirank import is_gme
from .serialize import (
    decomposition_from_dict,
    decomposition_to_dict,
    dumps,
    load_json,
    state_from_dict,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dims(text):
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"dims must be comma-separated integers, got {text!r}")


def _spec(args):
    return EmbedSpec(args.dims, args.ksub)


def _emit(text, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_decompose(args):
    spec = _spec(args)
    dec = decompose(spec, args.scheme, seed=args.seed)
    report = verify(dec, args.trials, args.fresh, args.seed) if args.verify else None
    _emit(dumps(decomposition_to_dict(dec, report)), args.out)
    if args.out:
        p, g, c = dec.sizes
        status = "" if report is None else (" verified" if report.passed else " VERIFICATION FAILED")
        print(f"{spec.family.value} dims={','.join(map(str, spec.dims))}: product {p}, GES {g}, CES {c}{status}")
    if report is not None and not report.passed:
        for check in report.failures():
            print(f"failed: {check.name}: {check.detail}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _rank_text(ranks):
    return "(" + ",".join(str(r) for _, r in ranks) + ")"


def cmd_multirank(args):
    psi = state_from_dict(load_json(args.state))
    report = is_gme(psi)
    ells = [args.ell] if args.ell else sorted(report.ranks)
    if args.ell and args.ell not in report.ranks:
        raise UsageError(f"--ell must lie in 1..{len(psi.dims) // 2}")
    out = {
        "gme": report.gme,
        "multiranks": {str(l): _rank_text(report.ranks[l]) for l in ells},
        "partitions": {str(l): [list(I) for I, _ in report.ranks[l]] for l in ells},
    }
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_verify(args):
    dec = decomposition_from_dict(load_json(args.infile))
    report = verify(dec, args.trials, args.fresh, args.seed)
    print(dumps(report.to_dict()), end="")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_counts(args):
    spec = _spec(args)
    dims = spec.dims
    product_dim, ges_dim, ces_dim = expected_part_sizes(spec)
    out = {
        "dims": list(dims),
        "k_sub": spec.k_sub,
        "family": spec.family.value,
        "nupb_size": nupb_size(spec),
        "product_dim": product_dim,
        "ges_dim": ges_dim,
        "ces_dim": ces_dim,
        "total_dim": prod(dims),
        "max_ces_dim": max_ces_dim(dims),
        "max_ges_dim": max_ges_dim(dims),
        "generator_terms": [len(k) for k, _ in generator_states(spec)],
    }
    if spec.homogeneous:
        out["distinct_monomials"] = count_distinct_monomials(spec.n, spec.d, spec.k_sub)
        out["max_sym_ges_dim"] = max_sym_ges_dim(spec.n, spec.d)
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def cmd_layers(args):
    dec = decomposition_from_dict(load_json(args.infile))
    sizes = layer_sizes(dec)
    print(json.dumps({"scheme": dec.scheme, "sizes": list(sizes)}, sort_keys=True))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="entsub", description="Entangled-subspace decompositions from nUPBs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_flags(p):
        p.add_argument("--dims", type=_dims, required=True, help="local dimensions, e.g. 3,3,3")
        p.add_argument("--ksub", type=int, default=None, help="substituted coordinates (homogeneous only)")

    def check_flags(p):
        p.add_argument("--trials", type=int, default=200)
        p.add_argument("--fresh", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("decompose", help="build product/GES/CES bases")
    spec_flags(p)
    p.add_argument("--scheme", choices=SCHEMES, default="triangular")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--fresh", type=int, default=20)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("multirank", help="multiranks and GME verdict of a state file")
    p.add_argument("--state", required=True)
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(func=cmd_multirank)

    p = sub.add_parser("verify", help="re-run the checks on a stored decomposition")
    p.add_argument("--in", dest="infile", required=True)
    check_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counts", help="sizes and dimension bounds for a spec")
    spec_flags(p)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("layers", help="GES layer sizes of a stored decomposition")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_layers)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (EntsubError, OSError, ValueError) as exc:
        print(f"entsub: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``ginv solve|analyze|verify|projective|oracle``.

Exit codes: 0 found / holds, 1 refuted / fails, 2 input error, 3 internal
certificate failure.
"""

import argparse
import sys

from .counting import count_ops
from .exceptions import BudgetExceeded, CertificateInvalid, GinvError
from .io import dumps, load_matrix, matrix_to_json, report_to_json
from .matrix import determinantal_ideal_gens, rank_at_most

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_ARITY = {"solve": 1, "analyze": 1, "verify": 2, "projective": 1, "oracle": 1}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ginv", description="Generalized inverses of matrices over commutative rings."
    )
    parser.add_argument("command", choices=sorted(_ARITY))
    parser.add_argument("files", nargs="+", help="matrix JSON files")
    parser.add_argument("--ring", help="ring spec overriding the one in the files")
    parser.add_argument("--budget", type=int, default=None, help="candidate budget for the oracle")
    parser.add_argument("--counts", action="store_true", help="include operation counts")
    return parser


def cmd_solve(A, args):
    from .nagata import general_ginverse

    report = general_ginverse(A)
    return report_to_json(report, args.counts), EXIT_OK if report.found else EXIT_REFUTED


def cmd_analyze(A, args):
    from .nagata import gram_data

    with count_ops() as counts:
        gram = gram_data(A)
        fmt = A.domain.format_element
        top = min(A.m, A.n) + 1
        out = {
            "ring": A.domain.spec,
            "rows": A.m,
            "cols": A.n,
            "gram": {f"g_{k}": str(gram.g[k]) for k in range(1, gram.p + 1)},
            "determinantal_ideals": {
                str(k): [fmt(x) for x in determinantal_ideal_gens(A, k)] for k in range(top + 1)
            },
            "rank_at_most": {str(k): rank_at_most(A, k) for k in range(top)},
        }
    if args.counts:
        out["op_counts"] = counts.as_dict()
    return out, EXIT_OK


def cmd_verify(A, B, args):
    from .oracle import verify_ginverse_pair

    check = verify_ginverse_pair(A, B)
    return {"identities": check.as_dict(), "all": check.all}, EXIT_OK if check.all else EXIT_REFUTED


def cmd_projective(G, args):
    from .nagata import projectivity_certificate

    cert = projectivity_certificate(G)
    out = {"projective": cert.projective}
    if cert.projective:
        out["P"] = matrix_to_json(cert.P)
        out["rank_polynomial"] = [G.domain.format_element(r) for r in cert.rank_polynomial]
    else:
        out["reason"] = cert.reason
    if args.counts:
        out["op_counts"] = cert.ginverse.op_counts.as_dict()
    return out, EXIT_OK if cert.projective else EXIT_REFUTED


def cmd_oracle(A, args):
    from .oracle import DEFAULT_BUDGET, brute_force_ginverse

    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    B = brute_force_ginverse(A, budget=budget)
    if B is None:
        return {"found": False}, EXIT_REFUTED
    return {"found": True, "B": matrix_to_json(B)}, EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "projective": cmd_projective,
    "oracle": cmd_oracle,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if len(args.files) != _ARITY[args.command]:
        parser.print_usage(sys.stderr)
        print(f"ginv: {args.command} takes {_ARITY[args.command]} file(s)", file=sys.stderr)
        return EXIT_INPUT
    try:
        mats = [load_matrix(path, args.ring) for path in args.files]
        out, code = _COMMANDS[args.command](*mats, args)
    except CertificateInvalid as exc:
        print(f"ginv: internal certificate failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GinvError, OSError) as exc:
        if isinstance(exc, BudgetExceeded):
            print(f"ginv: {exc}", file=sys.stderr)
        else:
            print(f"ginv: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())

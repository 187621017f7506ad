# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

"""
Command-line front end.

c-vectors are passed little-endian, c0 first: ``--q 1,0`` is τ_0 at p = 3.
Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from . import __version__, config
from .cohomology import D2Instance, d2_kernel_test, d2_kernel_test_vanishing_norm, h1_report
from .errors import DescentError, FermatpyError, VerificationError
from .finite_field import FiniteField, finite_field, residue_field
from .galois_action import CVector, b_unit, gamma_poly, norm_of_b, tilde_gamma
from .homology import invariant_report, question_probe
from .render import STYLES, to_xy_string
from .verify import run_suite
from .zeta import jacobi_matrix, l_polynomial_residue, zeta_mod_p_report

log = logging.getLogger(__name__)


class _Output:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, record: Dict[str, Any], text: Callable[[], str]) -> None:
        if self.fmt == "json":
            print(json.dumps(record, sort_keys=True, indent=2))
        else:
            print(text())


def _format_gamma(p: int, q: CVector) -> str:
    data = gamma_poly(q)
    terms = []
    for i in range(p):
        c = data.ring.format(data.f_coeffs[i])
        if c == "0":
            continue
        if " + " in c and i:
            c = f"({c})"
        mono = "" if i == 0 else ("e" if i == 1 else f"e^{i}")
        terms.append(c if not mono else (mono if c == "1" else f"{c}{mono}"))
    return " + ".join(terms) if terms else "0"


# subcommands


def _cmd_bq(args: argparse.Namespace, out: _Output) -> int:
    unit = b_unit(CVector.parse(args.p, args.q))
    out.emit(unit.to_dict(), lambda: unit.to_string(args.style))
    return 0


def _cmd_gamma(args: argparse.Namespace, out: _Output) -> int:
    q = CVector.parse(args.p, args.q)
    data = gamma_poly(q)
    ring = data.ring
    record = {
        "p": args.p,
        "c_vector": list(q.c),
        "ring": repr(ring),
        "gamma": [ring.format(c) for c in data.f_coeffs],
        "tilde_gamma": tilde_gamma(q).to_y().coefficients().tolist(),
    }
    out.emit(record, lambda: _format_gamma(args.p, q))
    return 0


def _cmd_norm(args: argparse.Namespace, out: _Output) -> int:
    q = CVector.parse(args.p, args.q)
    n = norm_of_b(q)
    record = {"p": args.p, "c_vector": list(q.c), "norm": n.to_numpy().tolist()}
    out.emit(record, lambda: to_xy_string(n, "table"))
    return 0


def _cmd_invariants(args: argparse.Namespace, out: _Output) -> int:
    report = invariant_report(args.p)
    record = report.to_dict()
    lines = [report.to_df().to_string(index=False)]
    if args.probe_question:
        probe = question_probe(args.p)
        record["question"] = probe.to_dict()
        lines.append(f"fixed spaces of tau_1..tau_r coincide: {probe.kernels_coincide}")
        lines.append(f"M^Q = ker(B_tau0 - 1) ∩ ker(B_tau1 - 1): {probe.mq_from_two_kernels}")
    out.emit(record, lambda: "\n".join(lines))
    return 0


def _cmd_cohomology(args: argparse.Namespace, out: _Output) -> int:
    report = h1_report(args.p)
    out.emit(report.to_dict(), lambda: report.to_df().to_string(index=False))
    return 0


def _cmd_d2check(args: argparse.Namespace, out: _Output) -> int:
    if args.random:
        if args.p is None:
            raise ValueError("--random requires --p")
        inst = D2Instance.random_in_image(args.p, np.random.default_rng(args.seed))
        print(json.dumps(inst.to_dict(), sort_keys=True))
        return 0

    inst = D2Instance.from_json(args.instance)
    if args.p is not None and args.p != inst.p:
        raise ValueError(f"--p {args.p} does not match the instance prime {inst.p}")
    verdict = d2_kernel_test(inst)
    record = {"p": inst.p, "full": verdict.to_dict()}
    if inst.p >= 5:
        fast = d2_kernel_test_vanishing_norm(inst)
        record["vanishing_norm"] = fast.to_dict()
        if fast.in_kernel != verdict.in_kernel:
            raise VerificationError("both kernel tests agree", f"p={inst.p}")
    out.emit(record, lambda: "in ker d2" if verdict.in_kernel else "not in ker d2")
    return 0


def _field(args: argparse.Namespace) -> FiniteField:
    if args.f is None:
        return residue_field(args.p, args.ell, args.seed)
    return finite_field(args.ell, args.f, args.seed)


def _cmd_zeta(args: argparse.Namespace, out: _Output) -> int:
    fld = _field(args)
    report = zeta_mod_p_report(args.p, fld, args.m_max, args.cap)
    out.emit(report.to_dict(), lambda: report.to_df().to_string(index=False))
    return 0 if report.vanishes and report.series_holds else 1


def _cmd_jacobi(args: argparse.Namespace, out: _Output) -> int:
    fld = _field(args)
    sums = jacobi_matrix(args.p, fld)
    residue = l_polynomial_residue(args.p, fld)
    record = {
        "p": args.p,
        "q": fld.order(),
        "J": {f"{i},{j}": v.coefficients() for (i, j), v in sums.items()},
        "l_polynomial_mod_lambda": residue.to_dict(),
    }
    out.emit(record, lambda: "\n".join(f"J({i},{j}) = {v}" for (i, j), v in sums.items()))
    return 0


def _cmd_verify_paper(args: argparse.Namespace, out: _Output) -> int:
    df = run_suite(args.p, args.seed)
    record = {"p": args.p, "seed": args.seed, "checks": json.loads(df.to_json(orient="records"))}
    out.emit(record, lambda: df.to_string(index=False))
    failed = df[~df["passed"]]
    for _, row in failed.iterrows():
        print(f"FAILED {row['check']} [{row['location']}]: {row['description']} ({row['detail']})", file=sys.stderr)
    return 1 if len(failed) else 0


# parser


def make_cli() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format.")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Seed for randomized checks and field construction (default: $FERMATPY_SEED or 0).",
    )
    common.add_argument("-v", "--verbose", action="count", default=0, help="Increase log verbosity.")

    prime = argparse.ArgumentParser(add_help=False)
    prime.add_argument("--p", type=int, required=True, choices=config.SUPPORTED_PRIMES, help="Odd prime p.")

    cvector = argparse.ArgumentParser(add_help=False)
    cvector.add_argument("--q", type=str, required=True, help="c-vector c0,c1,...,cr of an element of Q.")

    cli = argparse.ArgumentParser(prog="fermatpy", description="Galois action on the homology of Fermat curves.")
    cli.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = cli.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bq", parents=[common, prime, cvector], help="Print the unit B_q.")
    p.add_argument("--style", choices=STYLES, default="factored")
    p.set_defaults(func=_cmd_bq)

    p = sub.add_parser("gamma", parents=[common, prime, cvector], help="Print the polynomial γ_q.")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("norm", parents=[common, prime, cvector], help="Print the norm N_q of B_q.")
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("invariants", parents=[common, prime], help="Dimensions of M^Q and M^Q ∩ H1(U).")
    p.add_argument("--probe-question", action="store_true", help="Compare the fixed spaces of the generators.")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("cohomology", parents=[common, prime], help="Dimension of H^1(Q, M).")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("d2check", parents=[common], help="Decide whether φ lies in the kernel of d2.")
    p.add_argument("--p", type=int, choices=config.SUPPORTED_PRIMES, default=None)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--instance", type=str, help="JSON file with the fields p, u and w.")
    group.add_argument("--random", action="store_true", help="Emit a random instance in the kernel.")
    p.set_defaults(func=_cmd_d2check)

    for name, func, text in (
        ("zeta", _cmd_zeta, "Point counts and the zeta function mod p."),
        ("jacobi", _cmd_jacobi, "Jacobi sums J(χ^i, χ^j) in Z[ζ_p]."),
    ):
        p = sub.add_parser(name, parents=[common, prime], help=text)
        p.add_argument("--ell", type=int, required=True, help="Characteristic of the finite field.")
        p.add_argument("--f", type=int, default=None, help="Degree over F_ell (default: order of ell mod p).")
        if name == "zeta":
            p.add_argument("--m-max", type=int, default=1, help="Largest extension degree counted.")
            p.add_argument(
                "--cap", type=int, default=None, help="Point count cap (default: $FERMATPY_POINT_COUNT_CAP)."
            )
        p.set_defaults(func=func)

    p = sub.add_parser(
        "verify-paper", parents=[common, prime], help="Run the acceptance suite for p, keyed to the published results."
    )
    p.set_defaults(func=_cmd_verify_paper)

    return cli


def _setup_logger(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = config.log_level()
    logging.basicConfig(format=config.LOG_FORMAT, level=level, stream=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    cli = make_cli()
    try:
        args = cli.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        _setup_logger(args.verbose)
        if args.seed is None:
            args.seed = config.default_seed()
        return args.func(args, _Output(args.format))
    except VerificationError as e:
        print(f"check failed: {e.identity}: {e}", file=sys.stderr)
        return 1
    except DescentError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except (FermatpyError, ValueError, OSError) as e:
        print(f"fermatpy {args.command}: error: {e}", file=sys.stderr)
        return 2


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

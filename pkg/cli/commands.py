from typing import Any, Callable, List, Optional, Sequence
import argparse
import logging
import os
import sys

from config import ConfigManager, DEFAULT_CONFIG_PATH
from core import (
    DimensionMismatch,
    NullConeBreakdown,
    NullConeError,
    ParseError,
    UnknownSuite,
)
from hilbert import induced_norm
from orthonormal import gram_schmidt, best_approximation, fourier_coefficients, residual_curve
from sequences import RieszFischerMap, l2_norm, rf_forward, rf_inverse
from utils.serialization import (
    bicomplex_to_json,
    idempotent_to_json,
    ket_from_json,
    ket_to_json,
    kets_from_json,
    load_json,
    dump_json_atomic,
    dumps,
    sequence_from_json,
    sequence_to_json,
    system_from_json,
    system_to_json,
)
from verification import ALL, VerificationRunner, suite_names, summarize
from .expression import evaluate

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NULL_CONE = 3
EXIT_IO = 4

SEED_ENV = "BIHILBERT_SEED"
# round trips through an orthonormal basis are accurate to this absolute residual
RF_TOLERANCE = 1e-10


def status(message: str) -> None:
    """A `[+]` progress line; standard output stays reserved for the JSON payload."""
    print(f"[+] {message}", file=sys.stderr, flush=True)


def emit(payload: Any) -> None:
    print(dumps(payload))


def _load_config(args: argparse.Namespace) -> ConfigManager:
    config = ConfigManager(args.config)
    config.create_config({"tolerances": args.tolerances, "sampling": args.sampling})
    return config


def cmd_eval(args: argparse.Namespace) -> int:
    w = evaluate(args.expr)
    emit({"cartesian": bicomplex_to_json(w), "idempotent": idempotent_to_json(w)})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = _load_config(args)
    trials = args.trials if args.trials is not None else config.get("defaults.trials", 1000)
    dim = args.dim if args.dim is not None else config.get("defaults.dim", 16)
    workers = args.workers if args.workers is not None else config.get("defaults.workers", 1)
    seed = args.seed if args.seed is not None else config.get("defaults.seed", 0)

    runner = VerificationRunner(config, show_progress=not args.no_progress, workers=workers)
    status(f"Verifying {args.suite} ({trials} trials, dim {dim}, seed {seed})...")
    reports = runner.run(args.suite, trials, seed, dim)

    if args.json:
        emit(summarize(reports))
    else:
        for report in reports:
            verdict = "PASS" if report.passed else "FAIL"
            print(
                f"{report.suite:<18} {verdict}  failures {report.failures}/{report.trials}"
                f"  max violation {report.max_violation:.3e} (tolerance {report.tolerance:.1e})"
            )
    failures = sum(report.failures for report in reports)
    status("All done!" if failures == 0 else f"{failures} failing checks.")
    return EXIT_OK if failures == 0 else EXIT_FAILED


def _write_or_emit(payload: Any, output: Optional[str]) -> None:
    if output is None:
        emit(payload)
    else:
        dump_json_atomic(payload, output)
        status(f"Wrote {output}")


def cmd_gram_schmidt(args: argparse.Namespace) -> int:
    space, kets = kets_from_json(load_json(args.input))
    status(f"Orthonormalizing {len(kets)} kets in dimension {space.dim}...")
    system = gram_schmidt(space, kets)
    _write_or_emit(system_to_json(system), args.output)
    return EXIT_OK


def cmd_approx(args: argparse.Namespace) -> int:
    document = load_json(args.input)
    if not isinstance(document, dict) or "system" not in document or "ket" not in document:
        raise ParseError("expected an object with 'system' and 'ket'")
    system = system_from_json(document["system"])
    psi = ket_from_json(document["ket"])
    n = args.n if args.n is not None else document.get("n", system.size)
    if not isinstance(n, int):
        raise ParseError(f"prefix length must be an integer, got {n!r}")

    projection, residual = best_approximation(system, psi, n)
    payload = {
        "projection": ket_to_json(projection),
        "coefficients": [bicomplex_to_json(c) for c in fourier_coefficients(system, psi).values[:n]],
        "residual": residual,
    }
    if args.curve:
        payload["residual_curve"] = residual_curve(system, psi)
    _write_or_emit(payload, args.output)
    return EXIT_OK


def cmd_rf(args: argparse.Namespace) -> int:
    document = load_json(args.input)
    if not isinstance(document, dict) or "system" not in document:
        raise ParseError("expected an object with 'system' and either 'ket' or 'sequence'")
    if ("ket" in document) == ("sequence" in document):
        raise ParseError("exactly one of 'ket' and 'sequence' must be given")
    rf_map = RieszFischerMap.for_system(system_from_json(document["system"]))

    if "ket" in document:
        psi = ket_from_json(document["ket"])
        image = rf_forward(rf_map, psi)
        # isometry defect | ||T(psi)||_2 - ||psi|| |
        residual = abs(l2_norm(image) - induced_norm(rf_map.domain.space, psi))
        payload = {"sequence": sequence_to_json(image), "residual": residual}
    else:
        s = sequence_from_json(document["sequence"])
        psi = rf_inverse(rf_map, s)
        # round-trip defect ||T(T^-1(s)) - s||_2
        residual = l2_norm(rf_forward(rf_map, psi) - s)
        payload = {"ket": ket_to_json(psi), "residual": residual}

    _write_or_emit(payload, args.output)
    if residual > args.tolerance:
        log.warning("residual %.3e above tolerance %.1e", residual, args.tolerance)
        return EXIT_FAILED
    return EXIT_OK


def _default_seed() -> Optional[int]:
    value = os.environ.get(SEED_ENV)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{SEED_ENV} must be an integer, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihilbert",
        description="""
            Bicomplex numbers, finite bicomplex Hilbert modules and the Riesz-Fischer map onto l^2_2.

            Evaluate expressions, orthonormalize kets, project onto orthonormal systems and run the seeded
            property suites that check every algebraic and analytic identity numerically.
            """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug diagnostics to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_eval = subparsers.add_parser("eval", help="Evaluate a bicomplex expression")
    p_eval.add_argument(
        "expr",
        type=str,
        help="Expression over reals, i1, i2, j, e1, e2 with + - * / ^n, conj1/2/3(...) and sqrt(...)",
    )
    p_eval.set_defaults(handler=cmd_eval)

    p_verify = subparsers.add_parser("verify", help="Run seeded verification suites")
    p_verify.add_argument(
        "-s",
        "--suite",
        type=str,
        default=ALL,
        help=f"Suite to run: {', '.join(suite_names())} or {ALL}",
        metavar="SUITE",
    )
    p_verify.add_argument("-t", "--trials", type=int, default=None, help="Randomized trials per suite")
    p_verify.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"Master seed (default: ${SEED_ENV}, then the config)",
    )
    p_verify.add_argument("-d", "--dim", type=int, default=None, help="Module dimension N")
    p_verify.add_argument("-w", "--workers", type=int, default=None, help="Threads evaluating trials")
    p_verify.add_argument("--json", action="store_true", help="Print the machine-readable report")
    p_verify.add_argument("--no-progress", action="store_true", help="Hide the progress bar")
    p_verify.add_argument(
        "-c",
        "--config",
        type=str,
        default=str(DEFAULT_CONFIG_PATH),
        help="Path to the base configuration file (including .yaml extension)",
        metavar="BASE_CONFIG_PATH",
    )
    p_verify.add_argument(
        "--tolerances",
        type=str,
        default=None,
        help="Name of the tolerances config file (without .yaml extension)",
        metavar="TOLERANCES_CONFIG",
    )
    p_verify.add_argument(
        "--sampling",
        type=str,
        default=None,
        help="Name of the sampling config file (without .yaml extension)",
        metavar="SAMPLING_CONFIG",
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_gs = subparsers.add_parser("gram-schmidt", help="Orthonormalize the kets of a JSON file")
    p_gs.add_argument("-i", "--input", type=str, required=True, help='JSON {"space": ..., "kets": [...]}')
    p_gs.add_argument("-o", "--output", type=str, default=None, help="Output file (default: stdout)")
    p_gs.set_defaults(handler=cmd_gram_schmidt)

    p_approx = subparsers.add_parser("approx", help="Best approximation of a ket by an orthonormal system")
    p_approx.add_argument(
        "-i", "--input", type=str, required=True, help='JSON {"system": ..., "ket": ..., "n": optional}'
    )
    p_approx.add_argument("-n", type=int, default=None, help="Prefix length (default: the whole system)")
    p_approx.add_argument("--curve", action="store_true", help="Also report the residual of every prefix")
    p_approx.add_argument("-o", "--output", type=str, default=None, help="Output file (default: stdout)")
    p_approx.set_defaults(handler=cmd_approx)

    p_rf = subparsers.add_parser("rf", help="Apply the Riesz-Fischer map (or its inverse)")
    p_rf.add_argument(
        "-i", "--input", type=str, required=True, help='JSON {"system": ..., "ket" | "sequence": ...}'
    )
    p_rf.add_argument("-o", "--output", type=str, default=None, help="Output file (default: stdout)")
    p_rf.add_argument(
        "--tolerance", type=float, default=RF_TOLERANCE, help="Largest accepted residual"
    )
    p_rf.set_defaults(handler=cmd_rf)

    return parser


def _fail(code: int, message: str) -> int:
    print(f"[-] {message}", file=sys.stderr, flush=True)
    return code


def run(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    """Runs a command, mapping library errors onto exit codes."""
    try:
        return handler(args)
    except NullConeBreakdown as e:
        return _fail(EXIT_NULL_CONE, f"Gram-Schmidt breakdown at ket {e.index}: {e}")
    except NullConeError as e:
        return _fail(EXIT_NULL_CONE, f"null cone: {e}")
    except UnknownSuite as e:
        return _fail(EXIT_USAGE, f"unknown suite {e.args[0]!r}, expected one of {', '.join(suite_names())} or {ALL}")
    except (ParseError, DimensionMismatch) as e:
        return _fail(EXIT_USAGE, str(e))
    except OSError as e:
        return _fail(EXIT_IO, f"I/O error: {e}")
    except (ValueError, KeyError) as e:
        # invalid arguments or configuration (negative trials, non-orthonormal system, missing tolerance)
        return _fail(EXIT_USAGE, str(e))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "seed", False) is None:
        try:
            args.seed = _default_seed()
        except ParseError as e:
            return _fail(EXIT_USAGE, str(e))
    return run(args.handler, args)

"""
Command-line interface for the symmetric h⁰ engine.

Commands:
  gamma   print γ_n in the σ basis
  eval    print h⁰(M̄_{0,n}, ⊗ L_i^{x_i}) at one exponent vector
  verify  check γ_n against the published tables and the value oracle
  table   print γ_3 ... γ_{n_max}

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""
import argparse
import logging
import sys
from typing import List, Optional

from src.algebra.errors import AlgebraError
from src.config.settings import settings
from src.gamma import verification
from src.gamma.gamma import gamma, gamma_table, h0
from src.gating.validator import InputValidator, ValidationError
from src.models.output import OutputFormat
from src.models.report import CheckCategory, VerificationReport
from src.rendering.render import PolynomialRenderer

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="hzero",
        description="Compute γ_n = h⁰(M̄_{0,n}, L_1^{x_1} ⊗ ... ⊗ L_n^{x_n}) exactly",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m src.cli gamma --n 6 --format latex

  python -m src.cli eval --n 4 --x 1,2,3,4

  python -m src.cli verify --n-max 8 --grid-bound 2

  python -m src.cli table --n-max 8 --format json
        """
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log computation progress to standard error"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    format_choices = [fmt.value for fmt in OutputFormat]

    gamma_parser = subparsers.add_parser("gamma", help="Print γ_n")
    gamma_parser.add_argument("--n", type=int, required=True, help="Number of marked points (>= 3)")
    gamma_parser.add_argument("--format", choices=format_choices, default=OutputFormat.TEXT.value)
    gamma_parser.add_argument("--ascii", action="store_true", help="Write s1, s2, ... instead of σ1, σ2, ...")

    eval_parser = subparsers.add_parser("eval", help="Evaluate h⁰ at an exponent vector")
    eval_parser.add_argument("--n", type=int, required=True, help="Number of marked points (>= 3)")
    eval_parser.add_argument("--x", type=str, required=True, help="Comma-separated non-negative exponents")

    verify_parser = subparsers.add_parser("verify", help="Verify against tables and the value oracle")
    verify_parser.add_argument("--n-max", type=int, default=settings.default_n_max,
                               help=f"Largest n for oracle checks (default: {settings.default_n_max})")
    verify_parser.add_argument("--grid-bound", type=int, default=settings.default_grid_bound,
                               help=f"Largest oracle exponent (default: {settings.default_grid_bound})")

    table_parser = subparsers.add_parser("table", help="Print γ_3 ... γ_{n_max}")
    table_parser.add_argument("--n-max", type=int, required=True, help="Largest n (>= 3)")
    table_parser.add_argument("--format", choices=format_choices, default=OutputFormat.TEXT.value)
    table_parser.add_argument("--ascii", action="store_true", help="Write s1, s2, ... instead of σ1, σ2, ...")

    return parser


def cmd_gamma(n: int, output_format: OutputFormat, ascii: bool = False) -> int:
    InputValidator.validate_n(n)
    print(PolynomialRenderer.render(n, gamma(n), output_format, ascii))
    return EXIT_OK


def cmd_eval(n: int, x: str) -> int:
    InputValidator.validate_n(n)
    values = InputValidator.parse_exponents(x, length=n)
    print(h0(n, values))
    return EXIT_OK


def format_report(report: VerificationReport) -> List[str]:
    """Summary lines, one per check family, followed by any failures."""
    lines = []
    for category, counts in report.summary().items():
        status = "pass" if counts["passed"] == counts["total"] else "FAIL"
        if category in (CheckCategory.TABLE, CheckCategory.ANCHOR, CheckCategory.WORKED):
            lines.append(f"{category.value}: {counts['passed']}/{counts['total']} {status}")
        else:
            lines.append(f"{category.value}: {counts['points']} points {status}")
    for failure in report.failures:
        lines.append(f"  FAILED {failure.name}: {failure.detail}")
    return lines


def cmd_verify(n_max: int, grid_bound: int) -> int:
    InputValidator.validate_n(n_max)
    if grid_bound < 0:
        raise ValidationError(f"grid bound must be >= 0, got {grid_bound}")
    report = verification.run_verification(n_max, grid_bound)
    for line in format_report(report):
        print(line)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_table(n_max: int, output_format: OutputFormat, ascii: bool = False) -> int:
    InputValidator.validate_n(n_max)
    print(PolynomialRenderer.render_table(gamma_table(n_max), output_format, ascii))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main CLI entry point.

    Parses command-line arguments and dispatches to one command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.command == "gamma":
            return cmd_gamma(args.n, OutputFormat(args.format), args.ascii)
        if args.command == "eval":
            return cmd_eval(args.n, args.x)
        if args.command == "verify":
            return cmd_verify(args.n_max, args.grid_bound)
        return cmd_table(args.n_max, OutputFormat(args.format), args.ascii)
    except (ValidationError, AlgebraError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface for josephideal."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from ..config import config
from ..exceptions import ConfigError, JosephError
from ..models import SuiteConfig, format_rational
from ..services import derive_lambda_c, emit_report, list_suites, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def parse_case(text: str) -> Tuple[int, int]:
    """Parse ``"m,n"``."""
    try:
        m, n = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected m,n but got {text!r}") from exc
    return m, n


class JosephCLI:
    """Command-line interface for the sl(m|n) verification suites."""

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Main entry point for CLI; returns the process exit code."""
        parser = self._create_parser()
        args = parser.parse_args(argv)

        logging.basicConfig(
            level=getattr(logging, args.log_level.upper(), logging.WARNING),
            stream=sys.stderr,
            format="%(asctime)s %(name)s %(levelname)s %(message)s",
        )

        if hasattr(args, 'func'):
            return args.func(args)
        parser.print_help()
        return EXIT_OK

    def _create_parser(self) -> argparse.ArgumentParser:
        """Create argument parser with subcommands."""
        parser = argparse.ArgumentParser(
            description='josephideal - exact verification of the Joseph ideal for sl(m|n)'
        )
        parser.add_argument(
            '--log-level',
            default=config.log_level,
            help='Logging level (DEBUG, INFO, WARNING, ...)'
        )

        subparsers = parser.add_subparsers(title='commands', dest='command')

        # Run command
        run_parser = subparsers.add_parser(
            'run',
            help='Run verification suites over (m,n) cases'
        )
        run_parser.add_argument('--m', type=int, help='Even dimension m')
        run_parser.add_argument('--n', type=int, help='Odd dimension n')
        run_parser.add_argument(
            '--case',
            type=parse_case,
            action='append',
            default=[],
            help='A case as m,n (repeatable)'
        )
        run_parser.add_argument(
            '--suite',
            action='append',
            default=[],
            help='Suite to run (repeatable, default prelim)'
        )
        run_parser.add_argument(
            '--format',
            default='json',
            help='Report format: json or text'
        )
        run_parser.add_argument(
            '--out',
            type=Path,
            help='Write the report here instead of stdout'
        )
        run_parser.add_argument(
            '--jobs',
            type=int,
            default=config.jobs,
            help='Worker processes'
        )
        run_parser.add_argument(
            '--mem-cap-mb',
            type=int,
            default=config.mem_cap_mb,
            help='Memory cap for dense modular blocks'
        )
        run_parser.add_argument(
            '--slow',
            action='store_true',
            help='Allow slow suites (beta3)'
        )
        run_parser.add_argument(
            '--timings',
            action='store_true',
            help='Record wall-clock times in the report'
        )
        run_parser.add_argument(
            '--seed',
            type=int,
            default=config.seed,
            help='Seed for the random samples'
        )
        run_parser.add_argument(
            '--samples',
            type=int,
            default=50,
            help='Random samples per identity check'
        )
        run_parser.set_defaults(func=self._cmd_run)

        # Lambda-c command
        lambda_parser = subparsers.add_parser(
            'lambda-c',
            help='Derive the critical parameter by reducing S two ways'
        )
        lambda_parser.add_argument('m', type=int, help='Even dimension m')
        lambda_parser.add_argument('n', type=int, help='Odd dimension n')
        lambda_parser.add_argument(
            '--jobs',
            type=int,
            default=config.jobs,
            help='Worker processes'
        )
        lambda_parser.add_argument(
            '--json',
            action='store_true',
            help='Print the derivation as JSON'
        )
        lambda_parser.set_defaults(func=self._cmd_lambda_c)

        # Suites command
        suites_parser = subparsers.add_parser(
            'suites',
            help='List the verification suites and their hypotheses'
        )
        suites_parser.set_defaults(func=self._cmd_suites)

        # Serve command
        serve_parser = subparsers.add_parser(
            'serve',
            help='Start the JSON API'
        )
        serve_parser.add_argument('--host', default='127.0.0.1', help='Bind address')
        serve_parser.add_argument('--port', type=int, default=8000, help='Port')
        serve_parser.set_defaults(func=self._cmd_serve)

        return parser

    def _build_config(self, args) -> SuiteConfig:
        cases = list(args.case)
        if (args.m is None) != (args.n is None):
            raise ConfigError("--m and --n must be given together")
        if args.m is not None:
            cases.insert(0, (args.m, args.n))
        return SuiteConfig(
            cases=cases,
            suites=args.suite or ["prelim"],
            output=args.out,
            format=args.format,
            jobs=args.jobs,
            mem_cap_mb=args.mem_cap_mb,
            slow=args.slow,
            timings=args.timings,
            seed=args.seed,
            samples=args.samples,
        )

    def _cmd_run(self, args) -> int:
        """Run the selected suites and emit the report."""
        try:
            cfg = self._build_config(args)
            doc = run_suite(cfg)
        except ConfigError as e:
            print(f"✗ Configuration error: {e}", file=sys.stderr)
            return EXIT_CONFIG

        data = emit_report(doc, cfg.format)
        if cfg.output:
            cfg.output.write_bytes(data)
            counts = doc.counts()
            print(f"✓ Report written to {cfg.output}")
            if doc.passed:
                print(f"✓ All {counts['checks']} checks passed")
            else:
                print(f"✗ {counts['failed']} of {counts['checks']} checks failed")
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
        return EXIT_OK if doc.passed else EXIT_FAIL

    def _cmd_lambda_c(self, args) -> int:
        """Derive λᶜ for one case."""
        try:
            report = derive_lambda_c(args.m, args.n, jobs=args.jobs)
        except JosephError as e:
            print(f"✗ Error: {e}", file=sys.stderr)
            return EXIT_CONFIG

        if args.json:
            print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
            return EXIT_OK if report.passed else EXIT_FAIL

        print(f"\nsl({args.m}|{args.n}):\n")
        if report.lambda_c is None:
            print("✗ Left and right reductions are not consistent multiples of T")
            return EXIT_FAIL
        print(f"  Left reduction:  {report.left_scalar} · T")
        print(f"  Right reduction: {report.right_scalar} · T")
        print(f"  λᶜ = {format_rational(report.lambda_c)}")
        if report.passed:
            print(f"✓ Agrees with -1/(8(m-n+1)) for all {len(report.reductions)} basis elements")
        else:
            print(f"⚠ Expected {format_rational(report.expected)}")
        print()
        return EXIT_OK if report.passed else EXIT_FAIL

    def _cmd_suites(self, args) -> int:
        """List the available suites."""
        print("\nVerification suites:\n")
        for suite in list_suites():
            slow = " (needs --slow)" if suite['slow'] else ""
            print(f"  {suite['name']:<14} requires {suite['requires']}{slow}")
            print(f"    {suite['description']}")
        print()
        return EXIT_OK

    def _cmd_serve(self, args) -> int:
        """Start the API with uvicorn."""
        import uvicorn

        uvicorn.run("josephideal.web.app:app", host=args.host, port=args.port)
        return EXIT_OK


def main(argv: Optional[List[str]] = None):
    """Entry point for CLI."""
    cli = JosephCLI()
    sys.exit(cli.run(argv))


if __name__ == '__main__':
    main()

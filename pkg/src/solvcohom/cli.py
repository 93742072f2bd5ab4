#!/usr/bin/env python3
"""
solvcohom CLI

Builds the double complexes of splitting-type solvmanifolds and prints
cohomology tables, decompositions and formality verdicts.
"""

import argparse
import logging
import os
import sys
from typing import Any, Optional, TextIO

from pydantic import ValidationError
from rich.console import Console

from .core.config import EngineConfig
from .core.errors import ErrorCode
from .core.exceptions import ParseException, SolvcohomException
from .emitters import TextEmitter, get_emitter
from .golden import regenerate_golden
from .models import EmitTarget, OutputFormat, RunRequest
from .pipeline import build_report, load_manifest

logger = logging.getLogger(__name__)

PARAMETER_FLAGS = ("A", "n", "nprime", "q", "r", "x3")


def setup_logging(level: str = "WARNING"):
    """Setup logging configuration"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def parse_massey(text: str) -> tuple[str, str, str]:
    parts = [part.strip() for part in text.split(";")]
    if len(parts) != 3 or not all(parts):
        raise ParseException(
            ErrorCode.PRS002,
            text=text,
            column=1,
            context={"reason": "expected three monomials separated by ';'"},
        )
    return parts[0], parts[1], parts[2]


def parse_emit(value: Any) -> list[str]:
    if isinstance(value, (list, tuple)):
        items = [str(v) for v in value]
    else:
        items = str(value).split(",")
    return [item.strip() for item in items if item.strip()]


def build_request(args: argparse.Namespace, config: EngineConfig) -> RunRequest:
    """Merge manifest values with command-line flags; flags win."""
    settings: dict[str, Any] = {}
    manifest = args.manifest or args.manifest_file
    if manifest:
        settings.update(load_manifest(manifest))
    for key in ("family", "case", "emit", "format", "massey") + PARAMETER_FLAGS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value

    massey = settings.get("massey")
    try:
        return RunRequest(
            family=settings.get("family") if not args.bicomplex else None,
            case=str(settings["case"]) if settings.get("case") is not None else None,
            params={k: str(settings[k]) for k in PARAMETER_FLAGS if settings.get(k) is not None},
            bicomplex_path=args.bicomplex,
            emit=parse_emit(settings.get("emit", "dims")),
            format=settings.get("format") or config.output_format,
            massey=parse_massey(massey) if isinstance(massey, str) else massey,
            diamond=args.diamond,
        )
    except ValidationError as e:
        reason = "; ".join(error["msg"] for error in e.errors())
        raise ParseException(
            ErrorCode.PRS004,
            text=manifest or "command line",
            context={"path": manifest or "command line", "line": 1, "column": 1, "reason": reason},
            original_exception=e,
        ) from e


def run(
    request: RunRequest,
    config: Optional[EngineConfig] = None,
    out_dir: Optional[str] = None,
    stream: Optional[TextIO] = None,
) -> int:
    """Run the pipeline and write the rendered report; returns the exit status."""
    stream = stream or sys.stdout
    config = config or EngineConfig()
    try:
        report = build_report(request, config)
        emitter = get_emitter(request.format, report, {"diamond": request.diamond})
        if out_dir:
            os.makedirs(out_dir, exist_ok=True)
            path = os.path.join(out_dir, f"{report.source}.{emitter.extension}")
            with open(path, "w", encoding="utf-8") as f:
                f.write(emitter.render())
            print(f"Report written: {path}", file=sys.stderr)
        elif isinstance(emitter, TextEmitter) and stream.isatty():
            emitter.print_rich(Console(file=stream))
        else:
            stream.write(emitter.render())
        return 0
    except SolvcohomException as e:
        return report_error(e)


def report_error(error: SolvcohomException) -> int:
    print(f"Error: {error.formatted_message}", file=sys.stderr)
    if error.suggested_fix:
        print(f"Suggested fix: {error.suggested_fix}", file=sys.stderr)
    logger.debug(f"{error.error_code.value}: {error.to_dict()}")
    return error.exit_code


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvcohom",
        description="Cohomology and formality of splitting-type solvmanifolds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Dolbeault and Bott-Chern tables of a catalogue case
  solvcohom --family g8 --case v --emit dims

  # Classify the lattice from its parameters
  solvcohom --family g8 --A i/3 --n -2 --nprime 3 --emit dims,decomposition

  # Formality verdicts
  solvcohom --family g1 --case iii --emit formality

  # A Massey triple in the closure algebra
  solvcohom --family g8 --case ii --emit massey --massey "T^{-1}dz_{13};T̄ dz_{2̄3̄};T̄^{-1}dz_{1̄3̄}"

  # Decomposition of a raw bicomplex
  solvcohom --bicomplex f.json --emit decomposition --format text

  # Regenerate the golden corpus
  solvcohom --regenerate-golden --out-dir golden/
        """,
    )
    parser.add_argument("manifest_file", nargs="?", help="Manifest file with key = value lines")
    parser.add_argument("--config", "-c", help="Path to YAML configuration file")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")

    source = parser.add_argument_group("input")
    source.add_argument("--family", help="g1, g2 (g2_alpha0, g2_alpha_pos) or g8")
    source.add_argument("--case", help="Case token, e.g. v, iii, odd, alpha0-pi2")
    source.add_argument("--A", dest="A", help="g8 parameter A in Q(i), e.g. 1+i")
    source.add_argument("--n", type=int, help="g8 lattice trace n")
    source.add_argument("--nprime", type=int, help="g8 lattice trace n'")
    source.add_argument("--q", help="g2 parameter q (integer or 'generic')")
    source.add_argument("--r", help="g1 parameter r")
    source.add_argument("--x3", choices=["pi/2", "pi/3", "pi/4", "pi/6"], help="g2 angle for alpha = 0")
    source.add_argument("--bicomplex", help="Raw bicomplex JSON or YAML file")
    source.add_argument("--manifest", help="Manifest file with key = value lines")

    output = parser.add_argument_group("output")
    output.add_argument(
        "--emit",
        help="Comma list of " + ", ".join(t.value for t in EmitTarget) + " (default: dims)",
    )
    output.add_argument(
        "--format",
        "-f",
        choices=[f.value for f in OutputFormat],
        help="Output format (default: from configuration, text)",
    )
    output.add_argument("--out-dir", "-o", help="Write files here instead of stdout")
    output.add_argument("--massey", help="Massey triple 'a12;a23;a34' of monomials")
    output.add_argument("--diamond", action="store_true", help="Also print dimensions as diamonds")
    output.add_argument(
        "--regenerate-golden",
        action="store_true",
        help="Write tables and decompositions for all catalogue cases to --out-dir",
    )
    return parser


def main(argv: Optional[list[str]] = None):
    """Main CLI entry point"""
    parser = create_parser()
    args = parser.parse_args(argv)

    try:
        config = EngineConfig(args.config)
    except SolvcohomException as e:
        setup_logging("WARNING")
        sys.exit(report_error(e))

    setup_logging("DEBUG" if args.verbose else config.log_level)

    if args.regenerate_golden:
        if not args.out_dir:
            parser.error("--regenerate-golden needs --out-dir")
        try:
            paths = regenerate_golden(args.out_dir, config)
        except SolvcohomException as e:
            sys.exit(report_error(e))
        print(f"Wrote {len(paths)} files to {args.out_dir}", file=sys.stderr)
        return

    try:
        request = build_request(args, config)
    except SolvcohomException as e:
        sys.exit(report_error(e))

    status = run(request, config, args.out_dir)
    if status:
        sys.exit(status)


if __name__ == "__main__":
    main()

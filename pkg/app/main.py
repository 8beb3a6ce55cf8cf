"""Command-line entry point: `bohrnet check | ks | explain`."""

import argparse
import asyncio
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from app import __version__
from app.core.config import settings
from app.core.exceptions import (
    BohrNetException,
    CapExceededException,
    CoverException,
    SpecParseException,
    SpecValidationException,
)
from app.core.logging import setup_logging
from app.descent.theorem import INCONSISTENT, TheoremVerdict
from app.schemas.report import ReportFile
from app.spectra.kochen_specker import KSReport
from app.verification.service import verification_service

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohrnet",
        description="Bohrification and descent checks for lattice nets of observables.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--section-cap", type=int, default=None, metavar="N")
        p.add_argument("--no-trivial-context", action="store_true")
        p.add_argument("--threads", type=int, default=None, metavar="N")
        p.add_argument(
            "--json-out", default=None, metavar="PATH",
            help="write the JSON report ('-' for stdout)",
        )

    check = sub.add_parser("check", help="axioms, descent over covers and the theorem check")
    check.add_argument("spec", type=Path)
    check.add_argument("--cover-cap", type=int, default=None, metavar="N")
    common(check)

    ks = sub.add_parser("ks", help="count global sections of a projection dataset")
    ks.add_argument("dataset", type=Path)
    common(ks)

    explain = sub.add_parser("explain", help="posets, f, L and adjunction tables for one cover")
    explain.add_argument("spec", type=Path)
    explain.add_argument("cover", help="two slice opens, e.g. '0-1;2' or '0;1'")
    explain.add_argument("--no-trivial-context", action="store_true")
    return parser


def overrides_from(args: argparse.Namespace) -> dict[str, Any]:
    for name in ("cover_cap", "section_cap", "threads"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            raise CoverException(f"--{name.replace('_', '-')} must be at least 1")
    return {
        "cover_cap": getattr(args, "cover_cap", None),
        "section_cap": getattr(args, "section_cap", None),
        "threads": getattr(args, "threads", None),
        "include_trivial_context": False if args.no_trivial_context else None,
    }


def write_report(report: ReportFile, target: Optional[str]) -> None:
    if target is None:
        return
    text = report.to_json(settings.json_indent)
    if target == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(target).write_text(text + "\n", encoding="utf-8")


def summarize_check(verdict: TheoremVerdict) -> str:
    lines = []
    for name, axiom in (
        ("isotony", verdict.isotony),
        ("causal locality", verdict.causal_locality),
        ("slice locality", verdict.slice_locality),
        ("additivity", verdict.additivity),
        ("strong locality", verdict.strong_locality),
        ("Einstein causality", verdict.einstein_causality),
    ):
        line = f"{name:<20} {axiom.status}"
        if axiom.witness and not axiom.holds:
            line += f"  {axiom.witness}"
        lines.append(line)
    local = sum(r.local for r in verdict.reports)
    lines.append(f"{'descent':<20} {local}/{len(verdict.reports)} covers local")
    for r in verdict.reports:
        if not r.local:
            lines.append(f"  first non-local cover {r.u};{r.v}: {r.verdict}")
            break
    lines.append(f"{'theorem':<20} {verdict.biconditional}")
    return "\n".join(lines)


def summarize_ks(ks: KSReport) -> str:
    bound = "" if ks.sections.exact else " (lower bound)"
    return (
        f"d={ks.dimension}, {ks.projections} projections, {ks.contexts} contexts\n"
        f"global sections: {ks.sections.count}{bound}\n"
        f"verdict: {ks.verdict}"
    )


def run_command(args: argparse.Namespace) -> int:
    overrides = overrides_from(args)
    if args.command == "check":
        outcome = asyncio.run(verification_service.check_net(args.spec, overrides))
        if args.json_out != "-":
            print(summarize_check(outcome.verdict))
        write_report(outcome.report, args.json_out)
        verdict = outcome.verdict
        if verdict.biconditional == INCONSISTENT:
            print(
                f"inconsistent: strong locality {verdict.strong_locality.status}"
                f" but descent {'local' if verdict.descent_local else 'not local'}",
                file=sys.stderr,
            )
            return EXIT_INCONSISTENT
        return EXIT_OK
    if args.command == "ks":
        report, ks = asyncio.run(verification_service.run_ks(args.dataset, overrides))
        if args.json_out != "-":
            print(summarize_ks(ks))
        write_report(report, args.json_out)
        return EXIT_OK
    trace = verification_service.explain(args.spec, args.cover, overrides)
    print(trace.render())
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    log = setup_logging(args.log_level)
    try:
        return run_command(args)
    except SpecParseException as e:
        label = "parse error"
        message = e.message
    except SpecValidationException as e:
        label = "schema error"
        message = e.message
        for hint in e.details.get("suggestions", []):
            if "value" in hint:
                message += (
                    f"\n  unknown {hint['key']} '{hint['value']}',"
                    f" did you mean '{hint['suggestion']}'?"
                )
            elif "suggestion" in hint:
                message += f"\n  unknown key '{hint['key']}', did you mean '{hint['suggestion']}'?"
    except CapExceededException as e:
        label = "cap exceeded"
        message = f"{e.message} (cap {e.cap})"
    except CoverException as e:
        label = "usage error"
        message = e.message
    except BohrNetException as e:
        label = "input error"
        message = e.message
    log.error(f"{label}: {message}")
    print(f"{label}: {message}", file=sys.stderr)
    return EXIT_INPUT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

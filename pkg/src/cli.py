"""Command-line entry point: `python src/cli.py <command> ...`.

Exit codes: 0 success, 1 failed verification or unexpected error, 2 usage error.
"""
import argparse
import json
import math
import sys
import traceback
from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd

from blocks.solver import any_blocks_for
from blocks.symbolic import SymmetryLabel
from blocks.tables import element_symbol, resolve_atom
from config import paths
from exceptions import DomainError
from integrals.closed_form import compute_integrals, pt_coefficient, pt_integrals
from integrals.symbols import IntegralSymbol
from orbitals.basis import DilationParams
from spectra.analysis import (
    gap_ratio_report,
    ground_energy_scan,
    ionization_scan,
    isoelectronic_scan)
from spectra.reference import export_reference_data
from spectra.spectrum import atom_spectrum
from utils import load_solver_config, save_dataframe_as_csv, set_log_level, write_error_file
from verification import run_verification

FORMATS = ("table", "csv", "json")
CSV_FLOAT_FORMAT = "%.12g"
ENERGY_PREFIXES = ("E_", "dE", "I")


class UsageError(Exception):
    """Invalid command-line input; mapped to exit code 2."""


def parse_range(text: str, integer: bool = False) -> List[float]:
    """
    Inclusive range 'a:b' or 'a:b:step' (step defaults to 1); a single value is
    a one-element range.
    """
    try:
        parts = [float(part) for part in text.split(":")]
    except ValueError:
        raise UsageError(f"Invalid range {text!r}; expected a:b or a:b:step") from None
    if len(parts) == 1:
        parts = [parts[0], parts[0]]
    if len(parts) not in (2, 3):
        raise UsageError(f"Invalid range {text!r}; expected a:b or a:b:step")
    start, stop = parts[0], parts[1]
    step = parts[2] if len(parts) == 3 else 1.0
    if step <= 0 or stop < start:
        raise UsageError(f"Invalid range {text!r}; need a <= b and a positive step")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = [start + index * step for index in range(count)]
    if integer:
        if any(value != int(value) for value in values):
            raise UsageError(f"Range {text!r} must contain integers")
        return [int(value) for value in values]
    return values


def parse_terms(text: str) -> List[SymmetryLabel]:
    labels = [SymmetryLabel.parse(part.strip()) for part in text.split(",") if part.strip()]
    if len(labels) not in (1, 2):
        raise UsageError(f"Expected one or two comma-separated terms, got {text!r}")
    return labels


def _to_ev(frame: pd.DataFrame) -> pd.DataFrame:
    factor = load_solver_config()["hartree_to_ev"]
    frame = frame.copy()
    for column in frame.columns:
        if str(column).startswith(ENERGY_PREFIXES):
            frame[column] = pd.to_numeric(frame[column]) * factor
    return frame


def render_frame(frame: pd.DataFrame, output_format: str) -> str:
    """Render a frame as an aligned table, CSV (12 significant digits) or JSON records."""
    if output_format == "csv":
        return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT)
    if output_format == "json":
        records = frame.astype(object).where(frame.notna(), None).to_dict(orient="records")
        return json.dumps(records, indent=2, ensure_ascii=False) + "\n"
    decimals = load_solver_config()["decimals"]
    return frame.to_string(index=False, na_rep="",
                           float_format=lambda value: f"{value:.{decimals}f}") + "\n"


def emit(frame: pd.DataFrame, args: argparse.Namespace) -> None:
    if getattr(args, "ev", False):
        frame = _to_ev(frame)
    if args.output and args.format == "csv":
        save_dataframe_as_csv(frame, args.output, float_format=CSV_FLOAT_FORMAT)
        return
    text = render_frame(frame, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as file:
            file.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args: argparse.Namespace) -> int:
    N = resolve_atom(args.atom)
    spectrum = atom_spectrum(N, args.charge)
    frame = spectrum.to_frame(unicode_terms=args.format == "table")
    if spectrum.Z != N or N <= 2:
        frame = frame.drop(columns=["E_exp", "E_MDHF", "dE_exp", "dE_MDHF"])
    emit(frame, args)
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    if args.ground:
        frame = ground_energy_scan(parse_range(args.ground, integer=True))
    elif args.gap_ratios:
        spectra = {element_symbol(N): atom_spectrum(N)
                   for N in parse_range(args.gap_ratios, integer=True)}
        frame = gap_ratio_report(spectra)
    elif args.ionization:
        if args.z_eq_n:
            frame = ionization_scan(parse_range(args.z_eq_n, integer=True))
        elif args.n is not None and args.z:
            frame = pd.concat([ionization_scan([args.n], Z=Z) for Z in parse_range(args.z)],
                              ignore_index=True)
        else:
            raise UsageError("--ionization needs --z-eq-n a:b, or --n with --z")
    else:
        if args.n is None or not args.z or not args.terms:
            raise UsageError("scan needs --n, --z and --terms (or --ground, --gap-ratios or --ionization)")
        frame = isoelectronic_scan(args.n, parse_range(args.z), parse_terms(args.terms))
    if args.format == "table" and "term" in frame.columns:
        frame["term"] = [SymmetryLabel.parse(term).term for term in frame["term"]]
    emit(frame, args)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(args.level, seed=args.seed)
    emit(report.to_frame(), args)
    if report.passed:
        return 0
    failures = "\n".join(f"{check.name}: {check.detail}" for check in report.failures)
    write_error_file(failures + "\n", paths.VERIFY_ERROR_FILE_PATH)
    sys.stderr.write(f"{len(report.failures)} check(s) failed:\n{failures}\n")
    return 1


def _format_pt(symbol: IntegralSymbol, Z: float) -> str:
    coefficient, power = pt_coefficient(symbol)
    factor = "Z" if power == 1 else f"Z^{power}"
    value = float(pt_integrals(Z)[symbol])
    return f"{symbol.label} = {coefficient} · {factor} = {value!r}"


def cmd_integrals(args: argparse.Namespace) -> int:
    if args.pt:
        if args.format == "table" and not args.output:
            sys.stdout.write("".join(_format_pt(symbol, args.z) + "\n" for symbol in IntegralSymbol))
            return 0
        exact = pt_integrals(args.z)
        frame = pd.DataFrame([{
            "symbol": symbol.label,
            "coefficient": str(pt_coefficient(symbol)[0]),
            "power": pt_coefficient(symbol)[1],
            "exact": str(Fraction(exact[symbol])),
            "value": float(exact[symbol]),
        } for symbol in IntegralSymbol])
    else:
        params = DilationParams(args.z if args.z1 is None else args.z1, args.z2, args.z3)
        ints = compute_integrals(args.z, params)
        frame = pd.DataFrame([{"symbol": symbol.label, "kind": symbol.kind.value,
                               "value": float(ints[symbol])} for symbol in ints])
    emit(frame, args)
    return 0


def cmd_blocks(args: argparse.Namespace) -> int:
    N = resolve_atom(args.atom)
    rows = []
    for block in any_blocks_for(N):
        rows.append({
            "term": block.label.term if args.format == "table" else block.label.ascii,
            "basis": " | ".join(block.basis),
            "H11": block.diagonal[0].render(),
            "H22": block.diagonal[1].render() if block.dimension == 2 else None,
            "H12": block.cross.render() if block.cross is not None else None,
        })
    emit(pd.DataFrame(rows), args)
    return 0


def cmd_export_data(args: argparse.Namespace) -> int:
    path = export_reference_data(args.output or paths.EXPORTED_DATA_FILE_PATH)
    sys.stdout.write(f"Reference data written to {path}\n")
    return 0


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--ev", action="store_true", help="report energies in eV")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")
    common.add_argument("--output", help="write to this file instead of stdout")

    parser = _Parser(prog="minimal-ci",
                     description="Minimal asymptotics-based CI for atoms and ions with 1-10 electrons.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = commands.add_parser("solve", parents=[common], help="levels of one atom or ion")
    solve.add_argument("atom", help="symbol (H..Ne) or electron count (1..10)")
    solve.add_argument("--charge", type=_positive_float, default=None,
                       help="nuclear charge Z (default: neutral atom)")
    solve.set_defaults(handler=cmd_solve)

    scan = commands.add_parser("scan", parents=[common], help="isoelectronic and ionization scans")
    scan.add_argument("--n", type=int, help="electron count")
    scan.add_argument("--z", help="nuclear charges a:b[:step]")
    scan.add_argument("--terms", help="one or two terms, e.g. 3So,1Do")
    scan.add_argument("--ground", metavar="A:B", help="ground energies of atoms N=A..B")
    scan.add_argument("--gap-ratios", metavar="A:B",
                      help="first gap over |E| of atoms N=A..B next to experiment")
    scan.add_argument("--ionization", action="store_true", help="ionization energies")
    scan.add_argument("--z-eq-n", metavar="A:B", help="neutral atoms N=A..B (with --ionization)")
    scan.set_defaults(handler=cmd_scan)

    verify = commands.add_parser("verify", parents=[common], help="oracle self-checks")
    verify.add_argument("level", nargs="?", choices=("quick", "full"), default="quick")
    verify.add_argument("--seed", type=int, default=None)
    verify.set_defaults(handler=cmd_verify)

    integrals = commands.add_parser("integrals", parents=[common], help="integral values")
    integrals.add_argument("--z", type=_positive_float, required=True, help="nuclear charge Z")
    integrals.add_argument("--z1", type=_positive_float)
    integrals.add_argument("--z2", type=_positive_float)
    integrals.add_argument("--z3", type=_positive_float)
    integrals.add_argument("--pt", action="store_true", help="exact PT rationals")
    integrals.set_defaults(handler=cmd_integrals)

    blocks = commands.add_parser("blocks", parents=[common], help="symbolic block entries")
    blocks.add_argument("atom")
    blocks.set_defaults(handler=cmd_blocks)

    export = commands.add_parser("export-data", parents=[common], help="write the reference dataset")
    export.set_defaults(handler=cmd_export_data)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return the exit code.

    Args:
        argv (Sequence[str], optional): Arguments; defaults to sys.argv[1:].
    """
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            set_log_level("INFO")
        return args.handler(args)
    except (UsageError, DomainError) as error:
        sys.stderr.write(f"error: {error}\n")
        return 2
    except Exception as error:
        write_error_file(traceback.format_exc(), paths.CLI_ERROR_FILE_PATH)
        sys.stderr.write(f"error: {error} (traceback in {paths.CLI_ERROR_FILE_PATH})\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line surface.

    heptagon spectrum [--format table|json] [--numeric]
    heptagon verify   [--section 2..7|all] [--format table|json]
    heptagon galois   ELEMENT_JSON [--variant NAME] [--format table|json]
    heptagon export   [--k K] [--out PATH] [--timestamped]

Exit codes: 0 when everything passed, 1 when a verify check failed, an export
could not be written or a computation stopped with an error, 2 for usage
errors (bad arguments, malformed group elements, bad configuration).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from pydantic import TypeAdapter
from typing_extensions import TypedDict

from .errors import GroupError, HeptagonError
from .fields import brillouin
from .galois import (
    DENSITY_LEVELS,
    VARIANT_NAMES,
    WreathElement,
    act_on_spectrum,
    act_on_subfield,
    density_label_permutation,
    heisenberg_lattice,
    in_variant,
    variant,
)
from .model import N_NODES, fourier_block, s_block, sector_dimension
from .qubits import (
    QUBIT_WEIGHTS,
    density_matrices,
    full_spectrum,
    highest_weight_basis,
    projectors,
    qubit_hamiltonian,
)
from .report import SECTIONS, build_report
from .schemas import ExportBundle, MatrixModel, SpectrumRecordModel, WreathElementModel
from .settings import configure_logging
from .utils import format_spectrum_table, save_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ============================================================================
# ARGUMENT PARSING
# ============================================================================

def _section(value: str):
    if value == "all":
        return value
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"section must be 2..7 or 'all', got {value!r}")
    if n not in SECTIONS:
        raise argparse.ArgumentTypeError(f"section must be 2..7 or 'all', got {n}")
    return n


def create_heptagon_cli_parser() -> argparse.ArgumentParser:
    """
    Create argument parser for the heptagon commands.

    Returns:
        Configured ArgumentParser with the spectrum, verify, galois and export subcommands
    """
    parser = argparse.ArgumentParser(
        prog="heptagon",
        description="Exact spectrum and Galois structure of the XXX heptagon",
    )
    parser.add_argument("--log-level", dest="log_level", default=None,
                        help="Logging level for stderr (default: from settings)")
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="Print the 128 levels grouped by (k, r', nu)")
    spectrum.add_argument("--format", choices=("table", "json"), default="table")
    spectrum.add_argument("--numeric", action="store_true",
                          help="Add a 15-digit decimal column")

    verify = sub.add_parser("verify", help="Run the verification suite")
    verify.add_argument("--section", type=_section, default="all",
                        help="Section 2..7 or 'all' (default: all)")
    verify.add_argument("--format", choices=("table", "json"), default="table")

    galois = sub.add_parser("galois", help="Show how a group element permutes the exact data")
    galois.add_argument("element",
                        help='Element as JSON, e.g. \'{"eps": [[1,1,1],[1,1,1]], "l": 2}\'')
    galois.add_argument("--variant", choices=VARIANT_NAMES, default="complex-total")
    galois.add_argument("--format", choices=("table", "json"), default="table")

    export = sub.add_parser("export", help="Write spectrum and block matrices as JSON")
    export.add_argument("--k", type=int, default=1, help="Quasimomentum (default: 1)")
    export.add_argument("--out", default=None, help="Output file (default: stdout)")
    export.add_argument("--timestamped", action="store_true",
                        help="Also keep a UTC-timestamped copy next to --out")
    return parser


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_spectrum(args: argparse.Namespace) -> int:
    records = full_spectrum()
    if args.format == "json":
        models = [SpectrumRecordModel.from_record(rec) for rec in records]
        adapter = TypeAdapter(List[SpectrumRecordModel])
        print(adapter.dump_json(models, indent=2, by_alias=True).decode("utf-8"))
    else:
        print(format_spectrum_table(records, numeric=args.numeric))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    sections = None if args.section == "all" else [args.section]
    report = build_report(sections)
    if args.format == "json":
        print(report.to_model().model_dump_json(indent=2))
    else:
        print(report.render_table())
    return EXIT_OK if report.ok else EXIT_FAILED


def _key_label(key) -> str:
    k, rp, nu = key
    nu_text = "" if nu is None else f",nu={nu:+d}"
    return f"E[k={k},r'={rp}{nu_text}]"


def _density_label(label) -> str:
    r, rp, nu, k = label
    return f"rho[r={r},r'={rp},nu={nu:+d},k={k}]"


class GaloisSummary(TypedDict):
    element: Dict[str, object]
    identity: bool
    cycles: List[List[str]]
    subfields: Dict[str, str]
    density: Dict[str, str]


def galois_summary(g: WreathElement) -> GaloisSummary:
    """Energy cycles, moved subfields and moved density-matrix labels of g."""
    perm = act_on_spectrum(g)
    subfields = {}
    for complex_fields in (False, True):
        for node in heisenberg_lattice(complex_fields):
            target = act_on_subfield(g, node)
            if target.name != node.name:
                subfields[node.name] = target.name
    density = {
        _density_label(src): _density_label(dst)
        for src, dst in density_label_permutation(g).items()
        if src != dst
    }
    return {
        "element": g.to_dict(),
        "identity": perm.is_identity,
        "cycles": [[_key_label(key) for key in cycle] for cycle in perm.cycles()],
        "subfields": subfields,
        "density": density,
    }


def cmd_galois(args: argparse.Namespace) -> int:
    g = WreathElementModel.model_validate_json(args.element).to_element()
    group = variant(args.variant)
    if not in_variant(g, group):
        raise GroupError(f"{g} is not an element of {group.name}")
    summary = galois_summary(g)
    if args.format == "json":
        print(json.dumps(summary, indent=2))
        return EXIT_OK

    print(f"element: {g}  (group {group.name}, order {group.order})")
    if summary["identity"]:
        print("energies: identity permutation")
    else:
        print("energies:")
        for cycle in summary["cycles"]:
            print("  " + " -> ".join(cycle + cycle[:1]))
    if summary["subfields"]:
        print("subfields:")
        for src, dst in summary["subfields"].items():
            print(f"  {src} -> {dst}")
    else:
        print("subfields: all fixed")
    if summary["density"]:
        print(f"density matrices: {len(summary['density'])} labels moved")
        for src, dst in summary["density"].items():
            print(f"  {src} -> {dst}")
    else:
        print("density matrices: all fixed")
    return EXIT_OK


def build_export_bundle(k: int) -> ExportBundle:
    """Spectrum records and every block matrix at quasimomentum k."""
    k = brillouin(k)
    blocks = {
        f"H{r}": MatrixModel.from_matrix(fourier_block(r, k))
        for r in range(N_NODES + 1) if sector_dimension(r, k)
    }
    s_blocks = {
        f"S{r}{dr}": MatrixModel.from_matrix(s_block(r, dr, k))
        for r, dr in ((1, 1), (2, 1), (1, 2))
    }
    qubits = {}
    density = {}
    if k != 0:
        qubits = {
            f"H{rp}{rp}": MatrixModel.from_matrix(qubit_hamiltonian(rp, k)) for rp in QUBIT_WEIGHTS
        }
    for r, rp in DENSITY_LEVELS:
        for sign, rho in zip("+-", density_matrices(r, rp, k)):
            density[f"rho{r}{rp}{sign}"] = MatrixModel.from_matrix(rho)
    projector_models = {
        f"P{r}{rp}": MatrixModel.from_matrix(projectors(r, rp, k))
        for r in (2, 3) for rp in range(r + 1) if highest_weight_basis(rp, k)
    }
    spectrum = [SpectrumRecordModel.from_record(rec) for rec in full_spectrum() if rec.k == k]
    return ExportBundle(
        k=k,
        spectrum=spectrum,
        fourier_blocks=blocks,
        s_blocks=s_blocks,
        qubit_hamiltonians=qubits,
        projectors=projector_models,
        density_matrices=density,
    )


def cmd_export(args: argparse.Namespace) -> int:
    bundle = build_export_bundle(args.k)
    text = bundle.model_dump_json(indent=2, by_alias=True)
    if args.out is None:
        print(text)
        return EXIT_OK
    paths = save_output(text, args.out, keep_timestamped=args.timestamped)
    if not paths:
        print(f"Error: could not write {args.out}", file=sys.stderr)
        return EXIT_FAILED
    print(f"Saved export: {paths['latest']}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "galois": cmd_galois,
    "export": cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_heptagon_cli_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        configure_logging(args.log_level)
        return COMMANDS[args.command](args)
    except GroupError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HeptagonError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

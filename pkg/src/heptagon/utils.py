"""
Heptagon Utilities

Helpers shared by the command-line scripts.

Main functional areas:
1. File Management: write JSON output to a latest file plus an optional
   UTC-timestamped copy
2. Formatting: human-readable energies and spectrum tables
3. Validation: dependency checks and a quick self-test

Dependencies:
- numpy, sympy: numeric oracle and integer factorization
- pydantic, pydantic-settings, python-dotenv, PyYAML: schemas and configuration
"""

from __future__ import annotations

import importlib.util
import logging
import os
from datetime import datetime, timezone
from typing import Dict, Optional, Sequence

from .quadratic import QuadNum
from .qubits import SpectrumRecord

logger = logging.getLogger(__name__)

REQUIRED_MODULES = ("numpy", "sympy", "pydantic", "pydantic_settings", "dotenv", "yaml")


# ============================================================================
# FILE MANAGEMENT
# ============================================================================

def timestamped_path(path: str, now: Optional[datetime] = None) -> str:
    """
    Insert a UTC timestamp before the extension.

    Example:
        timestamped_path("out/bundle.json") -> "out/bundle-2026-10-18T09-30-00Z.json"
    """
    stamp = (now or datetime.now(timezone.utc)).strftime("%Y-%m-%dT%H-%M-%SZ")
    base, ext = os.path.splitext(path)
    return f"{base}-{stamp}{ext}"


def save_output(json_output: str, latest_path: str, keep_timestamped: bool = False) -> Dict[str, str]:
    """
    Save JSON output to a latest file and, optionally, a timestamped copy.

    Args:
        json_output: JSON text to save
        latest_path: File overwritten on every run
        keep_timestamped: Also write ``<name>-<UTC timestamp>.json`` next to it

    Returns:
        Dictionary with 'latest' and, when written, 'timestamped' file paths.
        Empty if writing failed.
    """
    try:
        directory = os.path.dirname(latest_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        paths = {}
        if keep_timestamped:
            stamped = timestamped_path(latest_path)
            with open(stamped, "w", encoding="utf-8") as f:
                f.write(json_output)
            paths["timestamped"] = stamped
        with open(latest_path, "w", encoding="utf-8") as f:
            f.write(json_output)
        paths["latest"] = latest_path
        logger.info("wrote %s", ", ".join(paths.values()))
        return paths
    except OSError as e:
        logger.warning("failed to save output to %s: %s", latest_path, e)
        return {}


# ============================================================================
# FORMATTING
# ============================================================================

def format_energy(energy: QuadNum) -> str:
    """
    Symbolic energy base + coeff*sqrt(D) in the {1, rho, rho^2} basis.

    Example:
        format_energy(energies(2, 0)[0]) -> "-2"
    """
    if energy.tag is None:
        return str(energy.a)
    return f"{energy.a} + ({energy.b})*sqrt({energy.tag})"


def format_decimal(value: float) -> str:
    """15 significant digits; advisory only."""
    return f"{value:.15g}"


def _align(cells: Sequence[str], widths: Sequence[int]) -> str:
    # numeric columns right-aligned, energies left-aligned
    parts = [c.rjust(w) if i < 4 else c.ljust(w) for i, (c, w) in enumerate(zip(cells, widths))]
    return "  ".join(parts).rstrip()


def format_spectrum_table(records: Sequence[SpectrumRecord], numeric: bool = False) -> str:
    """
    Spectrum records as an aligned table with a totals line.

    Example:
        print(format_spectrum_table(full_spectrum()))
        #  k  r'  nu  mult  energy
        #  0   0   .     8  0
        # ...
        # total states: 128
    """
    header = ["k", "r'", "nu", "mult", "energy"] + (["numeric"] if numeric else [])
    rows = []
    for rec in records:
        row = [
            str(rec.k),
            str(rec.r_prime),
            "." if rec.nu is None else f"{rec.nu:+d}",
            str(rec.multiplicity),
            format_energy(rec.energy_exact),
        ]
        if numeric:
            row.append(format_decimal(rec.energy_float))
        rows.append(row)
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    lines = [_align(header, widths)]
    lines.extend(_align(row, widths) for row in rows)
    total = sum(rec.multiplicity for rec in records)
    lines.append(f"total states: {total}")
    return "\n".join(lines)


# ============================================================================
# VALIDATION AND TESTING UTILITIES
# ============================================================================

def validate_environment() -> Dict[str, bool]:
    """
    Check that every runtime dependency can be imported.

    Example:
        status = validate_environment()
        if not status["sympy"]:
            print("Warning: sympy is missing")
    """
    return {name: importlib.util.find_spec(name) is not None for name in REQUIRED_MODULES}


def run_self_test() -> bool:
    """Spectrum totals and the cheapest verify section."""
    from .qubits import full_spectrum
    from .report import build_report

    try:
        records = full_spectrum()
        if sum(rec.multiplicity for rec in records) != 128:
            return False
        return build_report([3]).ok
    except Exception as e:
        logger.error("self-test failed: %s", e)
        return False


if __name__ == "__main__":
    print("Heptagon Utilities")
    print("=" * 40)

    env_status = validate_environment()
    print("Environment Check:")
    for component, available in env_status.items():
        status = "✅" if available else "❌"
        print(f"  {component}: {status}")

    if all(env_status.values()):
        print("\n🎉 All dependencies available!")
        test_result = run_self_test()
        print(f"Self-test: {'✅ PASS' if test_result else '❌ FAIL'}")
    else:
        print("\n⚠️  Some dependencies missing - see requirements.txt")

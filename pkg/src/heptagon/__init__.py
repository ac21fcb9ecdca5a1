"""
Exact spectrum of the spin-1/2 XXX Heisenberg heptagon.

Energies live in Q(rho, sqrt(Delta)) with rho = w + 1/w, w = exp(2 pi i / 7).
Every computation is exact over the rationals; ``oracle`` is the only module
that touches floating point, and only to cross-check.
"""

from .fields import CycAut, CycNum, RhoNum
from .galois import WreathElement
from .quadratic import DiscTag, QuadNum
from .qubits import SpectrumRecord, full_spectrum
from .report import VerifyReport, build_report

__all__ = [
    "CycAut",
    "CycNum",
    "DiscTag",
    "QuadNum",
    "RhoNum",
    "SpectrumRecord",
    "VerifyReport",
    "WreathElement",
    "build_report",
    "full_spectrum",
]

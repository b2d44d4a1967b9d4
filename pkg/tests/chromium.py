"""Exact transcription of the two spin-coupled Chromium test states.

Spatial orbital order (1-based): 3d0 3dz 3dm 3dx 3dy 4s 4pz 4px 4py
4d0 4dz 4dm 4dx 4dy; spin-orbital 2k-1 is orbital k spin up, 2k spin down
("~" suffix).  The states are kept unnormalized with integer / sqrt-3
coefficients; the normalizations are 1/sqrt(10) and 1/sqrt(21).
"""

from __future__ import annotations

from fractions import Fraction

from fermifock import FermiState, OrbitalConfig
from fermifock.bitops import coords_to_fermi
from fermifock.scalars import ExactScalar

SPATIAL_NAMES = ["3d0", "3dz", "3dm", "3dx", "3dy", "4s",
                 "4pz", "4px", "4py", "4d0", "4dz", "4dm", "4dx", "4dy"]
SPATIAL_COUNT = len(SPATIAL_NAMES)
SPIN_ORBS = 2 * SPATIAL_COUNT

_SPATIAL_INDEX = {name: i + 1 for i, name in enumerate(SPATIAL_NAMES)}


def spin_orbital(name: str) -> int:
    """1-based spin-orbital index of e.g. "3dx" (up) or "4s~" (down)."""
    down = name.endswith("~")
    k = _SPATIAL_INDEX[name.rstrip("~")]
    return 2 * k - (0 if down else 1)


def _ket(names: str) -> int:
    return coords_to_fermi(sorted(spin_orbital(n) for n in names.split()))


def _coeff(rational, sqrt3=0) -> ExactScalar:
    return ExactScalar(Fraction(rational), 0, Fraction(sqrt3), 0)


# unnormalized: true states carry a prefactor 1/sqrt(10) resp. 1/sqrt(21)
PSI1_TERMS = [
    (_coeff(1), "3d0 3dm 3dx 4s 4s~ 4dx"),
    (_coeff(-1), "3d0 3dm 3dy 4s 4s~ 4dy"),
    (_coeff(-1), "3d0 3dz 3dx 4s 4s~ 4dy"),
    (_coeff(-1), "3d0 3dz 3dy 4s 4s~ 4dx"),
    (_coeff(0, 1), "3dz 3dm 3dx 4s 4s~ 4dy"),
    (_coeff(0, -1), "3dz 3dm 3dy 4s 4s~ 4dx"),
]

PSI2_TERMS = [
    (_coeff(0, Fraction(-1, 2)), "3d0 4s 4s~ 4pz 4px 4dy"),
    (_coeff(0, Fraction(-1, 2)), "3d0 4s 4s~ 4pz 4py 4dx"),
    (_coeff(2), "3dm 4s 4s~ 4px 4py 4dz"),
    (_coeff(Fraction(1, 2)), "3dm 4s 4s~ 4pz 4px 4dy"),
    (_coeff(Fraction(-1, 2)), "3dm 4s 4s~ 4pz 4py 4dx"),
    (_coeff(Fraction(1, 2)), "3dx 4s 4s~ 4px 4py 4dy"),
    (_coeff(1), "3dx 4s 4s~ 4pz 4px 4dz"),
    (_coeff(0, 1), "3dx 4s 4s~ 4pz 4py 4d0"),
    (_coeff(-1), "3dx 4s 4s~ 4pz 4py 4dm"),
    (_coeff(Fraction(-1, 2)), "3dy 4s 4s~ 4px 4py 4dx"),
    (_coeff(0, 1), "3dy 4s 4s~ 4pz 4px 4d0"),
    (_coeff(1), "3dy 4s 4s~ 4pz 4px 4dm"),
    (_coeff(1), "3dy 4s 4s~ 4pz 4py 4dz"),
    (_coeff(-2), "3dz 4s 4s~ 4px 4py 4dm"),
    (_coeff(Fraction(1, 2)), "3dz 4s 4s~ 4pz 4px 4dx"),
    (_coeff(Fraction(1, 2)), "3dz 4s 4s~ 4pz 4py 4dy"),
]

NORM_SQ_1 = 10
NORM_SQ_2 = 21


def state(terms) -> FermiState:
    config = OrbitalConfig((SPIN_ORBS,), (6,))
    return FermiState.from_determinants(
        config, {_ket(names): c for c, names in terms}, exact=True)


def psi1_unnormalized() -> FermiState:
    return state(PSI1_TERMS)


def psi2_unnormalized() -> FermiState:
    return state(PSI2_TERMS)

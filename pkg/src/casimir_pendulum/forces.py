"""Casimir-Polder potentials and forces on a polarized atom near a
conducting plate.

Only the two asymptotic regimes are modelled:

* near zone, R well below c/omega0 (electrostatic-like):
      U(R) = -alpha0 * hbar * omega0 / (32 * pi * R^3)
* far zone, R well above c/omega0 (retarded):
      U(R) = -3 * alpha0 * hbar * c / (32 * pi^2 * R^4)

There is deliberately no interpolation in between: classify the distance
first and refuse to evaluate in the intermediate region rather than guess.

Sign convention: potentials and forces are signed values along increasing
atom-plate distance R.  Attraction toward the plate is therefore negative,
and force == -dU/dR holds literally.

When the atom is released rather than held fixed, the attraction is
enhanced by a constant factor beta in [1, 2] (beta = 1: atom stays at rest,
beta = 2: atom falling in from far away).  The total force multiplier is
(1 + beta); see :func:`total_restoring_factor`.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .constants import constants, crossover_length

__all__ = [
    "AtomProperties",
    "Zone",
    "Regime",
    "DEFAULT_MARGIN",
    "classify_regime",
    "potential_near",
    "potential_far",
    "force_near",
    "force_far",
    "total_restoring_factor",
]

# Conservative reading of "much smaller / much greater than": a factor of 10.
DEFAULT_MARGIN = 10.0


@dataclass(frozen=True)
class AtomProperties:
    """Atomic inputs to the force law.

    alpha0 -- static polarizability, expressed as a volume in m^3
    omega0 -- dominant transition angular frequency, rad/s
    """

    alpha0: float
    omega0: float

    def __post_init__(self) -> None:
        if not self.alpha0 > 0:
            raise ValueError(f"alpha0 must be positive, got {self.alpha0!r}")
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be positive, got {self.omega0!r}")


class Zone(Enum):
    NEAR = "near"
    FAR = "far"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class Regime:
    """Zone classification of an atom-plate distance.

    ratio is crossover_length/R: large in the near zone, small in the far
    zone, near unity in between.
    """

    zone: Zone
    ratio: float


def classify_regime(r: float, atom: AtomProperties, margin: float = DEFAULT_MARGIN) -> Regime:
    """Classify distance r against the crossover length c/omega0.

    Near requires r * margin <= c/omega0; far requires r >= margin * c/omega0;
    anything else is intermediate.  A boundary point with margin = 1 resolves
    to near (the <= comparison wins).
    """
    if not r > 0:
        raise ValueError(f"distance must be positive, got {r!r}")
    if not margin >= 1:
        raise ValueError(f"margin must be >= 1, got {margin!r}")
    rc = crossover_length(atom.omega0)
    if r * margin <= rc:
        zone = Zone.NEAR
    elif r >= margin * rc:
        zone = Zone.FAR
    else:
        zone = Zone.INTERMEDIATE
    return Regime(zone=zone, ratio=rc / r)


def potential_near(r: float, atom: AtomProperties) -> float:
    """Near-zone interaction energy, J (negative: bound)."""
    if not r > 0:
        raise ValueError(f"distance must be positive, got {r!r}")
    return -atom.alpha0 * constants().hbar * atom.omega0 / (32.0 * math.pi * r**3)


def potential_far(r: float, atom: AtomProperties) -> float:
    """Far-zone (retarded) interaction energy, J (negative: bound)."""
    if not r > 0:
        raise ValueError(f"distance must be positive, got {r!r}")
    return -3.0 * atom.alpha0 * constants().hbar * constants().c / (32.0 * math.pi**2 * r**4)


def force_near(r: float, atom: AtomProperties) -> float:
    """Near-zone force, N, signed along increasing r (negative = attraction).

    Equals -d/dr of :func:`potential_near`.
    """
    if not r > 0:
        raise ValueError(f"distance must be positive, got {r!r}")
    return -3.0 * atom.alpha0 * constants().hbar * atom.omega0 / (32.0 * math.pi * r**4)


def force_far(r: float, atom: AtomProperties) -> float:
    """Far-zone force, N, signed along increasing r (negative = attraction).

    Equals -d/dr of :func:`potential_far`; note the steeper r^-5 law.
    """
    if not r > 0:
        raise ValueError(f"distance must be positive, got {r!r}")
    return -3.0 * atom.alpha0 * constants().hbar * constants().c / (8.0 * math.pi**2 * r**5)


def total_restoring_factor(beta: float) -> float:
    """Multiplier 1 + beta combining the static attraction with the
    release-enhanced restoring part (beta in [1, 2], 2 = maximal
    enhancement for an atom released far from the plate)."""
    if not 1.0 <= beta <= 2.0:
        raise ValueError(f"beta must lie in [1, 2], got {beta!r}")
    return 1.0 + beta

"""Physical constants and the short/long-range crossover length.

All quantities are SI.  The constants are pinned to their 2019 SI
(exact-by-definition) figures so that independently built binaries agree
to the last bit.
"""

from dataclasses import dataclass

__all__ = ["Constants", "constants", "crossover_length"]


@dataclass(frozen=True)
class Constants:
    """Fixed constant set consumed by the force and pendulum models.

    hbar    -- reduced Planck constant, J*s
    c       -- speed of light in vacuum, m/s
    g_accel -- standard gravitational acceleration, m/s^2
    """

    hbar: float = 1.054571817e-34
    c: float = 2.99792458e8
    g_accel: float = 9.80665

    def __post_init__(self) -> None:
        if not (self.hbar > 0 and self.c > 0 and self.g_accel > 0):
            raise ValueError("physical constants must all be positive")


_CONSTANTS = Constants()


def constants() -> Constants:
    """Return the fixed SI constant set (the same values on every call)."""
    return _CONSTANTS


def crossover_length(omega0: float) -> float:
    """Crossover distance c/omega0 separating the two asymptotic zones of
    the atom-plate interaction.

    Below this length the potential is electrostatic-like (R^-3); far above
    it retardation changes the law to R^-4.

    omega0 -- dominant transition angular frequency of the atom, rad/s
    """
    if not omega0 > 0:
        raise ValueError(f"omega0 must be positive, got {omega0!r}")
    return _CONSTANTS.c / omega0

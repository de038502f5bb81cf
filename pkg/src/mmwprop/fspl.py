"""Free-space path loss between isotropic antennas.

Both forms assume far-field propagation; no minimum-distance guard is
applied beyond d > 0.
"""
import math

import numpy as np

from .errors import InvalidQuantityError
from .quantities import Distance, Frequency, coerce

SPEED_OF_LIGHT = 299_792_458.0  # m/s

# 20*log10(4*pi*1e9*1e3/c) rounded to two decimals
FSPL_CONSTANT_DB = 92.45


def fspl_db(f, d):
    """Free-space path loss in dB for frequency ``f`` (GHz) and distance ``d`` (km).

    Uses the engineering form ``20 log10(d) + 20 log10(f) + 92.45``.
    """
    f = coerce(f, Frequency)
    d = coerce(d, Distance)
    return 20.0 * math.log10(d.value) + 20.0 * math.log10(f.value) + FSPL_CONSTANT_DB


def fspl_linear_ratio(f, d):
    """Free-space loss as a power ratio ``(4 pi d f / c)**2`` in SI units."""
    f = coerce(f, Frequency)
    d = coerce(d, Distance)
    return (4.0 * math.pi * d.m * f.hz / SPEED_OF_LIGHT) ** 2


def fspl_db_array(f_ghz, d_km):
    """Vectorised ``fspl_db`` for positive GHz/km arrays (broadcast together)."""
    f_ghz = np.asarray(f_ghz, dtype=float)
    d_km = np.asarray(d_km, dtype=float)
    if np.any(f_ghz <= 0) or np.any(d_km <= 0):
        raise InvalidQuantityError("frequency and distance must be > 0")
    return 20.0 * np.log10(d_km) + 20.0 * np.log10(f_ghz) + FSPL_CONSTANT_DB

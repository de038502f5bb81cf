"""Cloud and fog specific attenuation (ITU-R P.840 Rayleigh model).

Liquid water permittivity follows the double-Debye relaxation model. The
Rayleigh approximation requires droplets much smaller than the wavelength,
which holds for fog (droplet radius below about 0.01 cm).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfModelRangeError
from .quantities import Frequency, LiquidWaterDensity, Temperature, celsius_to_kelvin, coerce

__all__ = [
    "FogConditions", "LiquidWaterPermittivity", "water_permittivity",
    "specific_attenuation_coefficient", "fog_attenuation", "fog_attenuation_array",
    "F_MAX_GHZ", "T_MIN_K", "T_MAX_K", "STANDARD_TEMPERATURE",
]

# the recommendation states validity up to 200 GHz; no extrapolation beyond
F_MAX_GHZ = 200.0
PERMITTIVITY_F_MAX_GHZ = 1000.0
T_MIN_K = 233.0
T_MAX_K = 313.0

STANDARD_TEMPERATURE = celsius_to_kelvin(15.0)


@dataclass(frozen=True)
class FogConditions:
    water_density: LiquidWaterDensity = LiquidWaterDensity(0.0)
    temperature: Temperature = field(default_factory=lambda: STANDARD_TEMPERATURE)

    def __post_init__(self):
        object.__setattr__(self, "water_density", coerce(self.water_density, LiquidWaterDensity))
        object.__setattr__(self, "temperature", coerce(self.temperature, Temperature))


@dataclass(frozen=True)
class LiquidWaterPermittivity:
    """Complex permittivity ``eps_prime - 1j * eps_double_prime`` of liquid water."""

    eps_prime: float
    eps_double_prime: float

    @property
    def complex(self):
        return complex(self.eps_prime, -self.eps_double_prime)


def _check_temperature(t_k):
    if not T_MIN_K <= t_k <= T_MAX_K:
        raise OutOfModelRangeError(
            f"fog model valid for {T_MIN_K:g}-{T_MAX_K:g} K, got {t_k:g} K",
            mechanism="fog",
        )


def _check_frequency(f_ghz, f_max):
    f_ghz = np.asarray(f_ghz, dtype=float)
    if np.any(f_ghz <= 0) or np.any(f_ghz > f_max):
        lo, hi = float(np.min(f_ghz)), float(np.max(f_ghz))
        shown = f"{lo:g} GHz" if lo == hi else f"range {lo:g}-{hi:g} GHz"
        raise OutOfModelRangeError(
            f"fog model valid for 0-{f_max:g} GHz, got {shown}", mechanism="fog"
        )
    return f_ghz


def _permittivity(f_ghz, t_k):
    theta = 300.0 / t_k
    eps0 = 77.66 + 103.3 * (theta - 1.0)
    eps1 = 0.0671 * eps0
    eps2 = 3.52
    # principal and secondary relaxation frequencies, GHz
    fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0) ** 2
    fs = 39.8 * fp
    rp = 1.0 + (f_ghz / fp) ** 2
    rs = 1.0 + (f_ghz / fs) ** 2
    eps_pp = f_ghz * (eps0 - eps1) / (fp * rp) + f_ghz * (eps1 - eps2) / (fs * rs)
    eps_p = (eps0 - eps1) / rp + (eps1 - eps2) / rs + eps2
    return eps_p, eps_pp


def _kl(f_ghz, t_k):
    eps_p, eps_pp = _permittivity(f_ghz, t_k)
    eta = (2.0 + eps_p) / eps_pp
    return 0.819 * f_ghz / (eps_pp * (1.0 + eta**2))


def water_permittivity(f, t=STANDARD_TEMPERATURE):
    f = coerce(f, Frequency)
    t = coerce(t, Temperature)
    _check_frequency(f.value, PERMITTIVITY_F_MAX_GHZ)
    _check_temperature(t.value)
    eps_p, eps_pp = _permittivity(f.value, t.value)
    return LiquidWaterPermittivity(float(eps_p), float(eps_pp))


def specific_attenuation_coefficient(f, t=STANDARD_TEMPERATURE):
    """Specific attenuation coefficient K_l in (dB/km)/(g/m^3)."""
    f = coerce(f, Frequency)
    t = coerce(t, Temperature)
    _check_frequency(f.value, F_MAX_GHZ)
    _check_temperature(t.value)
    return float(_kl(f.value, t.value))


def fog_attenuation(cond, f):
    """Fog specific attenuation ``K_l(f, T) * M`` in dB/km."""
    kl = specific_attenuation_coefficient(f, cond.temperature)
    return kl * cond.water_density.value


def fog_attenuation_array(f_ghz, cond):
    """Vectorised ``fog_attenuation`` over frequencies in GHz."""
    f_ghz = _check_frequency(f_ghz, F_MAX_GHZ)
    _check_temperature(cond.temperature.value)
    return _kl(f_ghz, cond.temperature.value) * cond.water_density.value

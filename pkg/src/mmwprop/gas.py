"""Gaseous specific attenuation by the line-by-line summation of ITU-R P.676-10.

Oxygen and water-vapour resonance lines are summed with a pressure-broadened
line shape, and the dry-air continuum (non-resonant Debye spectrum of oxygen
plus pressure-induced nitrogen absorption) is added to the oxygen part.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _assets
from ._grid import linear_grid
from .errors import OutOfModelRangeError
from .quantities import Frequency, Pressure, Temperature, VapourDensity, celsius_to_kelvin, coerce

__all__ = [
    "GasAtmosphere", "SpectralLine", "LineTable", "AbsorptionSpectrum",
    "STANDARD_ATMOSPHERE", "oxygen_lines", "water_lines", "load_line_table",
    "line_strength", "line_width", "line_shape", "specific_attenuation",
    "specific_attenuation_array", "absorption_spectrum",
    "F_MIN_GHZ", "F_MAX_GHZ",
]

F_MIN_GHZ = 1.0
F_MAX_GHZ = 1000.0

OXYGEN_ASSET = "p676_oxygen_lines.csv"
WATER_ASSET = "p676_water_lines.csv"
LINE_COUNTS = {"oxygen": 44, "water": 35}


@dataclass(frozen=True)
class GasAtmosphere:
    """Local atmospheric state for a horizontal path."""

    dry_pressure: Pressure = Pressure(1013.25)
    temperature: Temperature = field(default_factory=lambda: celsius_to_kelvin(15.0))
    vapour_density: VapourDensity = VapourDensity(7.5)

    def __post_init__(self):
        object.__setattr__(self, "dry_pressure", coerce(self.dry_pressure, Pressure))
        object.__setattr__(self, "temperature", coerce(self.temperature, Temperature))
        object.__setattr__(self, "vapour_density", coerce(self.vapour_density, VapourDensity))

    @property
    def theta(self):
        return 300.0 / self.temperature.value

    @property
    def vapour_pressure(self):
        """Water-vapour partial pressure in hPa."""
        return self.vapour_density.value * self.temperature.value / 216.7


STANDARD_ATMOSPHERE = GasAtmosphere()


@dataclass(frozen=True)
class SpectralLine:
    """One resonance line; ``coefficients`` are a1..a6 (oxygen) or b1..b6 (water)."""

    species: str
    center_frequency: float
    coefficients: tuple


@dataclass(frozen=True)
class LineTable:
    species: str
    f0: np.ndarray
    c: np.ndarray  # shape (6, n_lines)
    version: str

    def __len__(self):
        return len(self.f0)

    def lines(self):
        return [
            SpectralLine(self.species, float(f), tuple(float(x) for x in col))
            for f, col in zip(self.f0, self.c.T)
        ]


def load_line_table(species, raw=None, expected_checksum=None):
    name = OXYGEN_ASSET if species == "oxygen" else WATER_ASSET
    prefix = "a" if species == "oxygen" else "b"
    comments, rows = _assets.load_table(name, raw, expected_checksum)
    if len(rows) != LINE_COUNTS[species]:
        raise ValueError(
            f"{name}: {len(rows)} lines, expected {LINE_COUNTS[species]}"
        )
    f0 = np.array([float(r["f0"]) for r in rows])
    c = np.array([[float(r[f"{prefix}{i}"]) for r in rows] for i in range(1, 7)])
    f0.setflags(write=False)
    c.setflags(write=False)
    return LineTable(species, f0, c, comments[0] if comments else "")


@lru_cache(maxsize=None)
def oxygen_lines():
    return load_line_table("oxygen")


@lru_cache(maxsize=None)
def water_lines():
    return load_line_table("water")


# -- per-line quantities, vectorised over lines -----------------------------

def _strength(species, c, atm):
    theta = atm.theta
    if species == "oxygen":
        return c[0] * 1e-7 * atm.dry_pressure.value * theta**3 * np.exp(c[1] * (1.0 - theta))
    return c[0] * 1e-1 * atm.vapour_pressure * theta**3.5 * np.exp(c[1] * (1.0 - theta))


def _width(species, f0, c, atm):
    theta = atm.theta
    p = atm.dry_pressure.value
    e = atm.vapour_pressure
    if species == "oxygen":
        width = c[2] * 1e-4 * (p * theta ** (0.8 - c[3]) + 1.1 * e * theta)
        # Zeeman splitting of the oxygen lines
        return np.sqrt(width**2 + 2.25e-6)
    width = c[2] * 1e-4 * (p * theta ** c[3] + c[4] * e * theta ** c[5])
    # Doppler broadening of the water-vapour lines
    return 0.535 * width + np.sqrt(0.217 * width**2 + 2.1316e-12 * f0**2 / theta)


def _interference(species, c, atm):
    if species != "oxygen":
        return np.zeros_like(c[0])
    theta = atm.theta
    return (c[4] + c[5] * theta) * 1e-4 * (atm.dry_pressure.value + atm.vapour_pressure) * theta**0.8


def _shape(f, f0, width, delta):
    """Line-shape factor; ``f`` is a column vector against row vectors of lines."""
    lower = (width - delta * (f0 - f)) / ((f0 - f) ** 2 + width**2)
    upper = (width - delta * (f0 + f)) / ((f0 + f) ** 2 + width**2)
    return f / f0 * (lower + upper)


def _dry_continuum(f, atm):
    theta = atm.theta
    p = atm.dry_pressure.value
    e = atm.vapour_pressure
    d = 5.6e-4 * (p + e) * theta**0.8
    return f * p * theta**2 * (
        6.14e-5 / (d * (1.0 + (f / d) ** 2))
        + 1.4e-12 * p * theta**1.5 / (1.0 + 1.9e-5 * f**1.5)
    )


def _imaginary_refractivity(table, f, atm):
    strength = _strength(table.species, table.c, atm)
    width = _width(table.species, table.f0, table.c, atm)
    delta = _interference(table.species, table.c, atm)
    shapes = _shape(f[:, None], table.f0[None, :], width[None, :], delta[None, :])
    # row-wise sum keeps each frequency independent of how the grid is chunked
    return (shapes * strength[None, :]).sum(axis=1)


def _line_params(line):
    c = np.asarray(line.coefficients, dtype=float)[:, None]
    f0 = np.array([line.center_frequency])
    return f0, c


def line_strength(line, atm=STANDARD_ATMOSPHERE):
    """Line strength S_i for ``line`` under ``atm``."""
    _, c = _line_params(line)
    return float(_strength(line.species, c, atm)[0])


def line_width(line, atm=STANDARD_ATMOSPHERE):
    """Pressure-broadened line width in GHz, including Zeeman/Doppler terms."""
    f0, c = _line_params(line)
    return float(_width(line.species, f0, c, atm)[0])


def line_shape(line, f, atm=STANDARD_ATMOSPHERE):
    """Line-shape factor F_i at frequency ``f`` (GHz)."""
    f = coerce(f, Frequency)
    _check_frequency(f.value)
    f0, c = _line_params(line)
    width = _width(line.species, f0, c, atm)
    delta = _interference(line.species, c, atm)
    return float(_shape(f.value, f0, width, delta)[0])


def _check_frequency(f_ghz):
    f_ghz = np.asarray(f_ghz, dtype=float)
    if np.any(f_ghz < F_MIN_GHZ) or np.any(f_ghz > F_MAX_GHZ):
        lo, hi = float(np.min(f_ghz)), float(np.max(f_ghz))
        shown = f"{lo:g} GHz" if lo == hi else f"range {lo:g}-{hi:g} GHz"
        raise OutOfModelRangeError(
            f"gas model valid for {F_MIN_GHZ:g}-{F_MAX_GHZ:g} GHz, got {shown}",
            mechanism="gas",
        )
    return f_ghz


def specific_attenuation_array(f_ghz, atm=STANDARD_ATMOSPHERE):
    """Return ``(gamma_oxygen, gamma_water)`` in dB/km for an array of frequencies."""
    f = np.atleast_1d(_check_frequency(f_ghz))
    n_ox = _imaginary_refractivity(oxygen_lines(), f, atm) + _dry_continuum(f, atm)
    n_wv = _imaginary_refractivity(water_lines(), f, atm)
    # clip rounding-level negatives from the interference term in far wings
    gamma_o = np.maximum(0.1820 * f * n_ox, 0.0)
    gamma_w = np.maximum(0.1820 * f * n_wv, 0.0)
    return gamma_o, gamma_w


def specific_attenuation(f, atm=STANDARD_ATMOSPHERE):
    """Return ``(gamma_oxygen, gamma_water, gamma_total)`` in dB/km at ``f``."""
    f = coerce(f, Frequency)
    gamma_o, gamma_w = specific_attenuation_array(f.value, atm)
    gamma_o, gamma_w = float(gamma_o[0]), float(gamma_w[0])
    return gamma_o, gamma_w, gamma_o + gamma_w


@dataclass(frozen=True)
class AbsorptionSpectrum:
    frequency: np.ndarray
    oxygen: np.ndarray
    water: np.ndarray
    total: np.ndarray

    def __len__(self):
        return len(self.frequency)

    def __iter__(self):
        return zip(self.frequency, self.oxygen, self.water, self.total)


def absorption_spectrum(atm=STANDARD_ATMOSPHERE, f_start=1.0, f_stop=300.0, step=0.1):
    if not F_MIN_GHZ <= f_start < f_stop <= F_MAX_GHZ:
        raise OutOfModelRangeError(
            f"gas spectrum needs {F_MIN_GHZ:g} <= start < stop <= {F_MAX_GHZ:g} GHz,"
            f" got {f_start:g}-{f_stop:g}",
            mechanism="gas",
        )
    freq = linear_grid(f_start, f_stop, step)
    gamma_o, gamma_w = specific_attenuation_array(freq, atm)
    return AbsorptionSpectrum(freq, gamma_o, gamma_w, gamma_o + gamma_w)

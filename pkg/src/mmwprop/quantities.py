"""Unit-carrying scalar quantities.

Internal units are fixed: GHz, km, mm/h, g/m^3, K, hPa. Conversions happen
only in the alternate constructors (``Temperature.from_celsius`` etc.).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidQuantityError

__all__ = [
    "Frequency", "Distance", "RainRate", "RainCategory", "LiquidWaterDensity",
    "Temperature", "Pressure", "VapourDensity", "LinkGeometry",
    "classify_rain", "celsius_to_kelvin", "ZERO_CELSIUS",
]

ZERO_CELSIUS = 273.15


def _check_finite(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise InvalidQuantityError(f"{name} must be finite, got {value!r}")
    return value


def _positive(name, value, unit):
    value = _check_finite(name, value)
    if value <= 0:
        raise InvalidQuantityError(f"{name} must be > 0 {unit}, got {value!r}")
    return value


def _nonnegative(name, value, unit):
    value = _check_finite(name, value)
    if value < 0:
        raise InvalidQuantityError(f"{name} must be >= 0 {unit}, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class Frequency:
    """Carrier frequency in GHz."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", _positive("frequency", self.value, "GHz"))

    @classmethod
    def from_hz(cls, hz):
        return cls(float(hz) / 1e9)

    @property
    def hz(self):
        return self.value * 1e9


@dataclass(frozen=True, order=True)
class Distance:
    """Path length in km."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", _positive("distance", self.value, "km"))

    @classmethod
    def from_m(cls, metres):
        return cls(float(metres) / 1e3)

    @property
    def m(self):
        return self.value * 1e3


@dataclass(frozen=True, order=True)
class RainRate:
    """Rain rate in mm/h."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", _nonnegative("rain rate", self.value, "mm/h"))


@dataclass(frozen=True, order=True)
class LiquidWaterDensity:
    """Fog/cloud liquid water content in g/m^3."""

    value: float

    def __post_init__(self):
        object.__setattr__(
            self, "value", _nonnegative("liquid water density", self.value, "g/m^3")
        )


@dataclass(frozen=True, order=True)
class Temperature:
    """Absolute temperature, stored in kelvin."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", _positive("temperature", self.value, "K"))

    @classmethod
    def from_celsius(cls, celsius):
        return celsius_to_kelvin(celsius)

    @property
    def celsius(self):
        return self.value - ZERO_CELSIUS


@dataclass(frozen=True, order=True)
class Pressure:
    """Dry-air partial pressure in hPa."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", _positive("pressure", self.value, "hPa"))

    @classmethod
    def from_pa(cls, pa):
        return cls(float(pa) / 100.0)


@dataclass(frozen=True, order=True)
class VapourDensity:
    """Water-vapour density in g/m^3."""

    value: float

    def __post_init__(self):
        object.__setattr__(
            self, "value", _nonnegative("vapour density", self.value, "g/m^3")
        )


@dataclass(frozen=True)
class LinkGeometry:
    """Terrestrial link geometry.

    ``tilt_angle`` is the polarization tilt relative to horizontal, so 0 is
    horizontal and 90 is vertical polarization.
    """

    range: Distance = Distance(1.0)
    elevation_angle: float = 0.0
    tilt_angle: float = 0.0

    def __post_init__(self):
        if not isinstance(self.range, Distance):
            object.__setattr__(self, "range", Distance(self.range))
        elev = _check_finite("elevation angle", self.elevation_angle)
        tilt = _check_finite("tilt angle", self.tilt_angle)
        if not -90.0 <= elev <= 90.0:
            raise InvalidQuantityError(
                f"elevation angle must lie in [-90, 90] deg, got {elev!r}"
            )
        if not 0.0 <= tilt <= 90.0:
            raise InvalidQuantityError(f"tilt angle must lie in [0, 90] deg, got {tilt!r}")
        object.__setattr__(self, "elevation_angle", elev)
        object.__setattr__(self, "tilt_angle", tilt)


class RainCategory(enum.IntEnum):
    VERY_LIGHT = 0
    LIGHT = 1
    MODERATE = 2
    HEAVY = 3
    EXTREME = 4
    TORRENTIAL = 5


# lower edges of LIGHT..TORRENTIAL in mm/h; a value on an edge belongs to the upper class
RAIN_CATEGORY_EDGES = (0.25, 1.0, 4.0, 16.0, 50.0)


def classify_rain(rate):
    """Map a rain rate to its intensity class.

    Classes are half-open intervals ``[lo, hi)``, so exactly 4 mm/h is HEAVY.
    """
    if not isinstance(rate, RainRate):
        rate = RainRate(rate)
    category = RainCategory.VERY_LIGHT
    for edge, upper in zip(RAIN_CATEGORY_EDGES, list(RainCategory)[1:]):
        if rate.value >= edge:
            category = upper
    return category


def celsius_to_kelvin(celsius):
    celsius = _check_finite("temperature", celsius)
    if celsius <= -ZERO_CELSIUS:
        raise InvalidQuantityError(
            f"temperature must be above absolute zero, got {celsius!r} degC"
        )
    return Temperature(celsius + ZERO_CELSIUS)


def coerce(value, cls):
    """Return ``value`` as an instance of ``cls``, wrapping plain numbers."""
    if isinstance(value, cls):
        return value
    return cls(value)

"""Millimetre-wave link attenuation: free space, rain, fog and atmospheric gases."""
from .errors import InvalidQuantityError, OutOfModelRangeError
from .quantities import (
    Distance, Frequency, LinkGeometry, LiquidWaterDensity, Pressure, RainCategory,
    RainRate, Temperature, VapourDensity, celsius_to_kelvin, classify_rain,
)

__version__ = "0.1.0"

__all__ = [
    "InvalidQuantityError", "OutOfModelRangeError", "Distance", "Frequency",
    "LinkGeometry", "LiquidWaterDensity", "Pressure", "RainCategory", "RainRate",
    "Temperature", "VapourDensity", "celsius_to_kelvin", "classify_rain",
]

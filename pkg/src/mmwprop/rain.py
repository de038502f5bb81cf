"""Rain specific attenuation from the ITU-R P.838-3 power law.

The coefficients k and alpha are obtained from the recommendation's
log-Gaussian regression in log10(f), evaluated directly rather than
interpolated from its printed table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _assets
from .errors import InvalidQuantityError, OutOfModelRangeError
from .quantities import Distance, Frequency, LinkGeometry, RainRate, coerce

__all__ = [
    "RainCoefficients", "RegressionTable", "load_regression_table",
    "coefficients_hv", "combine_polarization", "specific_attenuation",
    "path_attenuation", "rain_attenuation", "F_MIN_GHZ", "F_MAX_GHZ",
]

F_MIN_GHZ = 1.0
F_MAX_GHZ = 1000.0

ASSET = "p838_coefficients.csv"
TERM_COUNTS = {"kH": 4, "kV": 4, "aH": 5, "aV": 5}


@dataclass(frozen=True)
class RainCoefficients:
    """Power-law pair for ``gamma = k * R**alpha``."""

    k: float
    alpha: float

    def __post_init__(self):
        if not (self.k > 0 and self.alpha > 0):
            raise InvalidQuantityError(
                f"rain coefficients must be positive, got k={self.k}, alpha={self.alpha}"
            )


@dataclass(frozen=True)
class _Regression:
    a: tuple
    b: tuple
    c: tuple
    m: float
    const: float

    def __call__(self, log_f):
        log_f = np.asarray(log_f, dtype=float)
        a = np.asarray(self.a)[:, None]
        b = np.asarray(self.b)[:, None]
        c = np.asarray(self.c)[:, None]
        terms = a * np.exp(-(((log_f.ravel() - b) / c) ** 2))
        out = terms.sum(axis=0) + self.m * log_f.ravel() + self.const
        return out.reshape(log_f.shape)


@dataclass(frozen=True)
class RegressionTable:
    """Regression terms for kH, kV, alphaH, alphaV plus the asset header."""

    kH: _Regression
    kV: _Regression
    aH: _Regression
    aV: _Regression
    version: str


def load_regression_table(raw=None, expected_checksum=None):
    comments, rows = _assets.load_table(ASSET, raw, expected_checksum)
    groups = {}
    for row in rows:
        groups.setdefault(row["target"], []).append(row)
    regs = {}
    for target, n_terms in TERM_COUNTS.items():
        terms = sorted(groups.get(target, []), key=lambda r: int(r["term"]))
        if len(terms) != n_terms:
            raise ValueError(f"{ASSET}: {target} has {len(terms)} terms, expected {n_terms}")
        regs[target] = _Regression(
            a=tuple(float(r["a"]) for r in terms),
            b=tuple(float(r["b"]) for r in terms),
            c=tuple(float(r["c_j"]) for r in terms),
            m=float(terms[0]["m"]),
            const=float(terms[0]["c"]),
        )
    version = comments[0] if comments else ""
    return RegressionTable(version=version, **regs)


@lru_cache(maxsize=None)
def default_table():
    return load_regression_table()


def _check_range(f_ghz):
    f_ghz = np.asarray(f_ghz, dtype=float)
    if np.any(f_ghz < F_MIN_GHZ) or np.any(f_ghz > F_MAX_GHZ):
        raise OutOfModelRangeError(
            f"rain model valid for {F_MIN_GHZ:g}-{F_MAX_GHZ:g} GHz, got {_describe(f_ghz)}",
            mechanism="rain",
        )
    return f_ghz


def _describe(arr):
    if arr.ndim == 0:
        return f"{float(arr):g} GHz"
    return f"range {arr.min():g}-{arr.max():g} GHz"


def coefficients_hv_array(f_ghz, table=None):
    """Vectorised ``(kH, alphaH, kV, alphaV)`` for an array of frequencies in GHz."""
    table = table or default_table()
    log_f = np.log10(_check_range(f_ghz))
    return (
        10.0 ** table.kH(log_f),
        table.aH(log_f),
        10.0 ** table.kV(log_f),
        table.aV(log_f),
    )


def coefficients_hv(f, table=None):
    """Return ``(kH, alphaH, kV, alphaV)`` at frequency ``f``.

    Raises OutOfModelRangeError outside 1-1000 GHz.
    """
    f = coerce(f, Frequency)
    return tuple(float(x) for x in coefficients_hv_array(f.value, table))


def _combine(kh, ah, kv, av, elevation_deg, tilt_deg):
    factor = math.cos(math.radians(elevation_deg)) ** 2 * math.cos(math.radians(2 * tilt_deg))
    k = (kh + kv + (kh - kv) * factor) / 2.0
    alpha = (kh * ah + kv * av + (kh * ah - kv * av) * factor) / (2.0 * k)
    return k, alpha


def combine_polarization(kH, alphaH, kV, alphaV, geom=None):
    """Combine H/V coefficients for the path elevation and polarization tilt.

    The default geometry (horizontal polarization, zero elevation) returns
    ``(kH, alphaH)`` unchanged.
    """
    geom = geom or LinkGeometry()
    k, alpha = _combine(kH, alphaH, kV, alphaV, geom.elevation_angle, geom.tilt_angle)
    return RainCoefficients(k, alpha)


def specific_attenuation(coeff, rate):
    """Rain specific attenuation ``k * R**alpha`` in dB/km."""
    rate = coerce(rate, RainRate)
    if rate.value == 0.0:
        return 0.0
    return coeff.k * rate.value ** coeff.alpha


def path_attenuation(gamma, d):
    """Attenuation in dB over a terrestrial path of length ``d`` km.

    No effective path-length reduction is applied.
    """
    d = coerce(d, Distance)
    return gamma * d.value


def rain_attenuation(f, rate, geom=None, table=None):
    """Specific attenuation in dB/km for frequency ``f`` and rain ``rate``."""
    coeff = combine_polarization(*coefficients_hv(f, table), geom)
    return specific_attenuation(coeff, rate)


def rain_attenuation_array(f_ghz, rate, geom=None, table=None):
    """Vectorised ``rain_attenuation`` over an array of frequencies in GHz."""
    geom = geom or LinkGeometry()
    rate = coerce(rate, RainRate)
    kh, ah, kv, av = coefficients_hv_array(f_ghz, table)
    k, alpha = _combine(kh, ah, kv, av, geom.elevation_angle, geom.tilt_angle)
    if rate.value == 0.0:
        return np.zeros_like(k)
    return k * rate.value ** alpha

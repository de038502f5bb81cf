"""Link attenuation budgets and band feasibility classification."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import fog as fog_model
from . import gas as gas_model
from . import rain as rain_model
from .errors import InvalidQuantityError, OutOfModelRangeError
from .fspl import fspl_db
from .quantities import Frequency, LinkGeometry, RainRate, coerce

__all__ = [
    "Scenario", "AttenuationBreakdown", "BandClass", "BandThresholds", "BandInterval",
    "BandReport", "evaluate", "classify_bands", "DEFAULT_THRESHOLDS", "DEFAULT_MIN_RUN",
]


@dataclass(frozen=True)
class Scenario:
    frequency: Frequency
    geometry: LinkGeometry = LinkGeometry()
    rain_rate: RainRate = RainRate(0.0)
    fog: fog_model.FogConditions = field(default_factory=fog_model.FogConditions)
    atmosphere: gas_model.GasAtmosphere = gas_model.STANDARD_ATMOSPHERE
    include_rain: bool = True
    include_fog: bool = True
    include_gas: bool = True

    def __post_init__(self):
        object.__setattr__(self, "frequency", coerce(self.frequency, Frequency))
        object.__setattr__(self, "rain_rate", coerce(self.rain_rate, RainRate))


@dataclass(frozen=True)
class AttenuationBreakdown:
    """Path attenuation per mechanism, all in dB over the link range."""

    fspl_db: float
    rain_db: float
    fog_db: float
    gas_db: float

    @property
    def total_db(self):
        return self.fspl_db + self.rain_db + self.fog_db + self.gas_db

    def as_dict(self):
        return {
            "fspl_db": self.fspl_db,
            "rain_db": self.rain_db,
            "fog_db": self.fog_db,
            "gas_db": self.gas_db,
            "total_db": self.total_db,
        }


def _mechanism(name, func, *args):
    try:
        return func(*args)
    except OutOfModelRangeError as exc:
        raise OutOfModelRangeError(f"{name}: {exc}", mechanism=name) from exc


def evaluate(scenario):
    """Compose FSPL, rain, fog and gas attenuation for ``scenario``.

    A mechanism whose input is null (zero rain rate, zero water density)
    contributes exactly 0 dB without consulting its model, so disabling it
    and nulling its input give identical results.
    """
    f = scenario.frequency
    d = scenario.geometry.range
    rain_db = fog_db = gas_db = 0.0
    if scenario.include_rain and scenario.rain_rate.value > 0:
        gamma = _mechanism("rain", rain_model.rain_attenuation, f, scenario.rain_rate,
                           scenario.geometry)
        rain_db = rain_model.path_attenuation(gamma, d)
    if scenario.include_fog and scenario.fog.water_density.value > 0:
        gamma = _mechanism("fog", fog_model.fog_attenuation, scenario.fog, f)
        fog_db = gamma * d.value
    if scenario.include_gas:
        gamma = _mechanism("gas", gas_model.specific_attenuation, f, scenario.atmosphere)[2]
        gas_db = gamma * d.value
    return AttenuationBreakdown(fspl_db(f, d), rain_db, fog_db, gas_db)


class BandClass(enum.IntEnum):
    WINDOW = 0  # green
    MODERATE = 1  # blue
    BLOCKED = 2  # red

    @property
    def colour(self):
        return ("green", "blue", "red")[self]


@dataclass(frozen=True)
class BandThresholds:
    """Specific-attenuation limits in dB/km.

    Below ``low`` is WINDOW, at or above ``high`` is BLOCKED.
    """

    low: float = 0.5
    high: float = 3.0

    def __post_init__(self):
        if not 0 < self.low <= self.high:
            raise InvalidQuantityError(
                f"thresholds need 0 < low <= high, got low={self.low}, high={self.high}"
            )

    def classify(self, gamma):
        gamma = np.asarray(gamma, dtype=float)
        return np.where(gamma < self.low, BandClass.WINDOW,
                        np.where(gamma < self.high, BandClass.MODERATE, BandClass.BLOCKED))


DEFAULT_THRESHOLDS = BandThresholds()
# runs shorter than this many samples are absorbed into a neighbour
DEFAULT_MIN_RUN = 3


@dataclass(frozen=True)
class BandInterval:
    """Frequencies ``[start, stop)`` sharing one class; the last interval is closed."""

    start: float
    stop: float
    band_class: BandClass
    n_samples: int
    gamma_min: float
    gamma_mean: float
    gamma_max: float

    def contains(self, f, closed=False):
        return self.start <= f < self.stop or (closed and f == self.stop)


@dataclass(frozen=True)
class BandReport:
    intervals: tuple
    thresholds: BandThresholds

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def interval_at(self, f):
        last = len(self.intervals) - 1
        for i, interval in enumerate(self.intervals):
            if interval.contains(f, closed=i == last):
                return interval
        raise ValueError(f"{f:g} GHz is outside the report range")

    def of_class(self, band_class):
        return [iv for iv in self.intervals if iv.band_class == band_class]


def _runs(classes):
    runs = []
    start = 0
    for i in range(1, len(classes) + 1):
        if i == len(classes) or classes[i] != classes[start]:
            runs.append([int(classes[start]), start, i])
            start = i
    return runs


def _coalesce(runs):
    out = [runs[0]]
    for run in runs[1:]:
        if run[0] == out[-1][0]:
            out[-1][2] = run[2]
        else:
            out.append(run)
    return out


def _merge_short_runs(runs, min_run):
    while len(runs) > 1:
        short = [i for i, r in enumerate(runs) if r[2] - r[1] < min_run]
        if not short:
            break
        i = min(short, key=lambda j: (runs[j][2] - runs[j][1], j))
        left = runs[i - 1] if i > 0 else None
        right = runs[i + 1] if i + 1 < len(runs) else None
        if right is None or (left is not None and left[2] - left[1] >= right[2] - right[1]):
            runs[i][0] = left[0]
        else:
            runs[i][0] = right[0]
        runs = _coalesce(runs)
    return runs


def classify_bands(spectrum, thresholds=DEFAULT_THRESHOLDS, min_run=DEFAULT_MIN_RUN,
                   extra=None):
    """Split a swept spectrum into contiguous WINDOW/MODERATE/BLOCKED intervals.

    Classification uses ``spectrum.total``; ``extra`` (dB/km per sample) is
    added first when rain or fog should count. Runs shorter than ``min_run``
    samples are merged into their longer neighbour so grid noise does not
    produce sliver intervals.
    """
    freq = np.asarray(spectrum.frequency, dtype=float)
    gamma = np.asarray(spectrum.total, dtype=float)
    if freq.size == 0:
        raise InvalidQuantityError("cannot classify an empty spectrum")
    if extra is not None:
        gamma = gamma + np.asarray(extra, dtype=float)
    runs = _merge_short_runs(_runs(thresholds.classify(gamma)), max(int(min_run), 1))
    intervals = []
    for cls, a, b in runs:
        stop = freq[b] if b < len(freq) else freq[-1]
        seg = gamma[a:b]
        intervals.append(BandInterval(
            start=float(freq[a]), stop=float(stop), band_class=BandClass(cls),
            n_samples=b - a, gamma_min=float(seg.min()), gamma_mean=float(seg.mean()),
            gamma_max=float(seg.max()),
        ))
    return BandReport(tuple(intervals), thresholds)

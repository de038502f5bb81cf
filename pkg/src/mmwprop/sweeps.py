"""Parameter sweeps and their CSV serialisation.

A sweep evaluates one quantity along a frequency or distance axis for each
member of a curve family (rain rates, water densities, ...). Output is
written with six significant digits so identical inputs give byte-identical
files regardless of how many worker threads evaluated the grid.
"""
from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from . import fog as fog_model
from . import gas as gas_model
from . import rain as rain_model
from ._grid import linear_grid
from .errors import InvalidQuantityError
from .fspl import fspl_db_array
from .quantities import Distance, LinkGeometry, LiquidWaterDensity, VapourDensity

__all__ = ["SweepSpec", "SweepResult", "QUANTITIES", "PRESETS", "run_sweep",
           "write_csv", "format_csv", "preset"]

# quantity -> (allowed axes, family meaning)
QUANTITIES = {
    "fspl": ("frequency", "distance"),
    "rain": ("frequency",),
    "fog": ("frequency",),
    "gas": ("frequency",),
    "gas-components": ("frequency",),
}

GAS_COMPONENTS = ("oxygen", "water", "total")


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep.

    ``family`` holds, per quantity: frequencies in GHz (fspl over distance),
    distances in km (fspl over frequency), rain rates in mm/h (rain), liquid
    water densities in g/m^3 (fog), vapour densities in g/m^3 (gas), or the
    component names oxygen/water/total (gas-components).
    """

    quantity: str
    axis: str
    start: float
    stop: float
    step: float
    family: tuple
    geometry: LinkGeometry = LinkGeometry()
    fog: fog_model.FogConditions = field(default_factory=fog_model.FogConditions)
    atmosphere: gas_model.GasAtmosphere = gas_model.STANDARD_ATMOSPHERE
    name: str = ""

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise InvalidQuantityError(
                f"unknown sweep quantity {self.quantity!r}; choose from {sorted(QUANTITIES)}"
            )
        if self.axis not in QUANTITIES[self.quantity]:
            raise InvalidQuantityError(
                f"{self.quantity} sweeps run over {'/'.join(QUANTITIES[self.quantity])},"
                f" not {self.axis!r}"
            )
        if not self.step > 0:
            raise InvalidQuantityError(f"sweep step must be > 0, got {self.step:g}")
        if not self.start < self.stop:
            raise InvalidQuantityError(
                f"sweep start must be < stop, got {self.start:g} >= {self.stop:g}"
            )
        if self.start <= 0:
            raise InvalidQuantityError(f"sweep axis must be positive, got start={self.start:g}")
        if not self.family:
            raise InvalidQuantityError("sweep family must not be empty")
        if self.quantity == "gas-components":
            bad = [m for m in self.family if m not in GAS_COMPONENTS]
            if bad:
                raise InvalidQuantityError(f"unknown gas components {bad}")
            object.__setattr__(self, "family", tuple(self.family))
        else:
            object.__setattr__(self, "family", tuple(float(m) for m in self.family))

    def grid(self):
        return linear_grid(self.start, self.stop, self.step)


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    axis_values: np.ndarray
    columns: tuple  # one array per family member; NaN marks an omitted point
    header: tuple
    provenance: tuple


def _fspl_columns(spec, x):
    if spec.axis == "distance":
        # members are frequencies in GHz, the axis is distance in km
        return [fspl_db_array(member, x) for member in spec.family]
    return [fspl_db_array(x, member) for member in spec.family]


def _rain_columns(spec, x):
    return [rain_model.rain_attenuation_array(x, rate, spec.geometry) for rate in spec.family]


def _fog_columns(spec, x):
    cols = []
    valid = x <= fog_model.F_MAX_GHZ
    for density in spec.family:
        cond = replace(spec.fog, water_density=LiquidWaterDensity(density))
        col = np.full(x.shape, np.nan)
        if valid.any():
            col[valid] = fog_model.fog_attenuation_array(x[valid], cond)
        cols.append(col)
    return cols


def _gas_columns(spec, x):
    cols = []
    for rho in spec.family:
        atm = replace(spec.atmosphere, vapour_density=VapourDensity(rho))
        gamma_o, gamma_w = gas_model.specific_attenuation_array(x, atm)
        cols.append(gamma_o + gamma_w)
    return cols


def _gas_component_columns(spec, x):
    gamma_o, gamma_w = gas_model.specific_attenuation_array(x, spec.atmosphere)
    parts = {"oxygen": gamma_o, "water": gamma_w, "total": gamma_o + gamma_w}
    return [parts[m] for m in spec.family]


_EVALUATORS = {
    "fspl": _fspl_columns,
    "rain": _rain_columns,
    "fog": _fog_columns,
    "gas": _gas_columns,
    "gas-components": _gas_component_columns,
}


def _header(spec):
    axis = "frequency_ghz" if spec.axis == "frequency" else "distance_km"
    q = spec.quantity
    if q == "fspl":
        key, unit = ("f", "GHz") if spec.axis == "distance" else ("d", "km")
        names = [f"fspl_db[{key}={m:g}{unit}]" for m in spec.family]
    elif q == "rain":
        names = [f"rain_db_per_km[R={m:g}mm/h]" for m in spec.family]
    elif q == "fog":
        names = [f"fog_db_per_km[M={m:g}g/m3]" for m in spec.family]
    elif q == "gas":
        names = [f"gas_db_per_km[rho={m:g}g/m3]" for m in spec.family]
    else:
        names = [f"{m}_db_per_km" for m in spec.family]
    return (axis, *names)


def _provenance(spec):
    lines = [f"mmwprop {__version__}"]
    if spec.name:
        lines.append(f"preset: {spec.name}")
    lines.append(
        f"sweep: quantity={spec.quantity} axis={spec.axis}"
        f" start={spec.start:g} stop={spec.stop:g} step={spec.step:g}"
    )
    g, atm, fog = spec.geometry, spec.atmosphere, spec.fog
    if spec.quantity == "fspl":
        lines.append("model: free-space path loss 20log10(d_km)+20log10(f_GHz)+92.45")
    elif spec.quantity == "rain":
        lines.append(f"model: {rain_model.default_table().version}")
        lines.append(
            f"parameters: range_km={g.range.value:g} elevation_deg={g.elevation_angle:g}"
            f" tilt_deg={g.tilt_angle:g}"
        )
    elif spec.quantity == "fog":
        lines.append("model: ITU-R P.840 double-Debye Rayleigh cloud/fog attenuation")
        lines.append(
            f"parameters: temperature_k={fog.temperature.value:g}"
            f" max_frequency_ghz={fog_model.F_MAX_GHZ:g} (empty cells above)"
        )
    else:
        lines.append(f"model: {gas_model.oxygen_lines().version}")
        lines.append(f"model: {gas_model.water_lines().version}")
        lines.append(
            f"parameters: dry_pressure_hpa={atm.dry_pressure.value:g}"
            f" temperature_k={atm.temperature.value:g}"
            f" vapour_density_g_m3={atm.vapour_density.value:g}"
        )
    return tuple(lines)


def run_sweep(spec, workers=1):
    """Evaluate ``spec`` on its grid, optionally split across ``workers`` threads.

    Each grid point is computed independently, so the split does not change
    any value.
    """
    x = spec.grid()
    if spec.axis == "distance":
        # grid values are validated as positive distances
        Distance(x[0])
    evaluate = _EVALUATORS[spec.quantity]
    workers = max(int(workers), 1)
    if workers == 1 or len(x) < 2 * workers:
        columns = evaluate(spec, x)
    else:
        chunks = np.array_split(x, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda chunk: evaluate(spec, chunk), chunks))
        columns = [np.concatenate([p[i] for p in parts]) for i in range(len(spec.family))]
    return SweepResult(spec, x, tuple(columns), _header(spec), _provenance(spec))


def _fmt(value):
    if np.isnan(value):
        return ""
    return f"{value:.6g}"


def format_csv(result):
    """Render ``result`` as CSV text with ``#`` provenance lines."""
    buf = io.StringIO()
    for line in result.provenance:
        buf.write(f"# {line}\n")
    buf.write(",".join(result.header) + "\n")
    stacked = np.column_stack([result.axis_values, *result.columns])
    for row in stacked:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def write_csv(result, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_csv(result))


WORST_CASE_GEOMETRY = LinkGeometry(Distance(1.0), elevation_angle=0.0, tilt_angle=0.0)

PRESETS = {
    "fig2": SweepSpec("fspl", "distance", 0.01, 10.0, 0.01, (2.4, 28.0, 100.0), name="fig2"),
    "fig3": SweepSpec("fspl", "frequency", 1.0, 300.0, 1.0, (0.1, 1.0, 10.0), name="fig3"),
    "fig4": SweepSpec("rain", "frequency", 1.0, 300.0, 1.0,
                      (0.25, 1.0, 4.0, 16.0, 50.0, 100.0), geometry=WORST_CASE_GEOMETRY,
                      name="fig4"),
    "fig5": SweepSpec("fog", "frequency", 1.0, 200.0, 1.0, (0.05, 0.1, 0.25, 0.5),
                      name="fig5"),
    "fig6": SweepSpec("gas-components", "frequency", 1.0, 300.0, 0.1, GAS_COMPONENTS,
                      name="fig6"),
}


def preset(name):
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidQuantityError(
            f"unknown preset {name!r}; choose from {', '.join(PRESETS)}"
        ) from None

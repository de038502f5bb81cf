"""JSON scenario files: a link scenario and/or a sweep definition.

Files are validated against ``data/scenario.schema.json``; unknown keys are
rejected. Temperatures may be given in kelvin or Celsius and are always
written back in kelvin.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import jsonschema

from .budget import Scenario
from .errors import InvalidQuantityError
from .fog import FogConditions, STANDARD_TEMPERATURE
from .gas import GasAtmosphere, STANDARD_ATMOSPHERE
from .quantities import Distance, LinkGeometry, Temperature, celsius_to_kelvin
from .sweeps import SweepSpec

__all__ = ["ScenarioFile", "load", "loads", "dump", "dumps", "to_dict", "from_dict",
           "scenario_from_dict", "scenario_to_dict"]


@dataclass(frozen=True)
class ScenarioFile:
    scenario: Scenario | None = None
    sweep: SweepSpec | None = None


@lru_cache(maxsize=None)
def schema():
    text = resources.files(__package__).joinpath("data").joinpath("scenario.schema.json")
    return json.loads(text.read_text(encoding="utf-8"))


def _temperature(section, default):
    if "temperature_k" in section:
        return Temperature(section["temperature_k"])
    if "temperature_c" in section:
        return celsius_to_kelvin(section["temperature_c"])
    return default


def scenario_from_dict(data, frequency_required=True):
    if frequency_required and "frequency_ghz" not in data:
        raise InvalidQuantityError("scenario: 'frequency_ghz' is required")
    fog_d = data.get("fog", {})
    atm_d = data.get("atmosphere", {})
    inc = data.get("include", {})
    geometry = LinkGeometry(
        Distance(data.get("range_km", 1.0)),
        elevation_angle=data.get("elevation_deg", 0.0),
        tilt_angle=data.get("tilt_deg", 0.0),
    )
    fog = FogConditions(fog_d.get("water_density_g_m3", 0.0),
                        _temperature(fog_d, STANDARD_TEMPERATURE))
    atmosphere = GasAtmosphere(
        atm_d.get("dry_pressure_hpa", STANDARD_ATMOSPHERE.dry_pressure.value),
        _temperature(atm_d, STANDARD_ATMOSPHERE.temperature),
        atm_d.get("vapour_density_g_m3", STANDARD_ATMOSPHERE.vapour_density.value),
    )
    return Scenario(
        frequency=data.get("frequency_ghz", 1.0),
        geometry=geometry,
        rain_rate=data.get("rain_rate_mm_h", 0.0),
        fog=fog,
        atmosphere=atmosphere,
        include_rain=inc.get("rain", True),
        include_fog=inc.get("fog", True),
        include_gas=inc.get("gas", True),
    )


def scenario_to_dict(s):
    return {
        "frequency_ghz": s.frequency.value,
        "range_km": s.geometry.range.value,
        "elevation_deg": s.geometry.elevation_angle,
        "tilt_deg": s.geometry.tilt_angle,
        "rain_rate_mm_h": s.rain_rate.value,
        "fog": {
            "water_density_g_m3": s.fog.water_density.value,
            "temperature_k": s.fog.temperature.value,
        },
        "atmosphere": {
            "dry_pressure_hpa": s.atmosphere.dry_pressure.value,
            "temperature_k": s.atmosphere.temperature.value,
            "vapour_density_g_m3": s.atmosphere.vapour_density.value,
        },
        "include": {"rain": s.include_rain, "fog": s.include_fog, "gas": s.include_gas},
    }


def from_dict(data):
    try:
        jsonschema.validate(data, schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InvalidQuantityError(f"scenario file invalid at {where}: {exc.message}") from None
    scenario = None
    sweep = None
    if "scenario" in data:
        scenario = scenario_from_dict(data["scenario"], frequency_required="sweep" not in data)
    if "sweep" in data:
        sw = data["sweep"]
        base = scenario or scenario_from_dict({}, frequency_required=False)
        sweep = SweepSpec(
            quantity=sw["quantity"], axis=sw["axis"], start=sw["start"], stop=sw["stop"],
            step=sw["step"], family=tuple(sw["family"]), geometry=base.geometry,
            fog=base.fog, atmosphere=base.atmosphere,
        )
    return ScenarioFile(scenario, sweep)


def to_dict(sf):
    out = {}
    if sf.scenario is not None:
        out["scenario"] = scenario_to_dict(sf.scenario)
    if sf.sweep is not None:
        sw = sf.sweep
        out["sweep"] = {
            "quantity": sw.quantity, "axis": sw.axis, "start": sw.start,
            "stop": sw.stop, "step": sw.step, "family": list(sw.family),
        }
    return out


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidQuantityError(f"scenario file is not valid JSON: {exc}") from None
    return from_dict(data)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(sf):
    return json.dumps(to_dict(sf), indent=2, sort_keys=True) + "\n"


def dump(sf, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(sf))

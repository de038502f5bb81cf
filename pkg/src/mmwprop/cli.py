"""Command-line front end.

Exit codes: 0 ok, 2 invalid input, 3 out of model range, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import __version__
from . import budget, fog, gas, rain, scenario as scenario_file, sweeps
from .errors import InvalidQuantityError, OutOfModelRangeError
from .fspl import fspl_db
from .quantities import (
    Distance, Frequency, LinkGeometry, LiquidWaterDensity, Pressure, RainRate,
    VapourDensity, celsius_to_kelvin,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RANGE = 3
EXIT_IO = 4


class CliIOError(Exception):
    pass


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _range_triplet(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numbers in START:STOP:STEP, got {text!r}")


def _add_geometry(p):
    p.add_argument("--dist-km", type=float, default=1.0, help="path length (default 1 km)")
    p.add_argument("--elevation-deg", type=float, default=0.0)
    p.add_argument("--tilt-deg", type=float, default=0.0,
                   help="polarization tilt, 0 = horizontal (default), 90 = vertical")


def _add_atmosphere(p):
    p.add_argument("--pressure-hpa", type=float, default=1013.25, help="dry-air pressure")
    p.add_argument("--temp-c", type=float, default=15.0)
    p.add_argument("--vapour", type=float, default=7.5, help="water-vapour density, g/m^3")


def _geometry(args):
    return LinkGeometry(Distance(args.dist_km), args.elevation_deg, args.tilt_deg)


def _atmosphere(args):
    return gas.GasAtmosphere(Pressure(args.pressure_hpa), celsius_to_kelvin(args.temp_c),
                             VapourDensity(args.vapour))


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliIOError(f"cannot write {path}: {exc.strerror or exc}") from exc


def cmd_fspl(args):
    print(f"{fspl_db(Frequency(args.freq_ghz), Distance(args.dist_km)):.2f} dB")


def cmd_rain(args):
    geom = _geometry(args)
    gamma = rain.rain_attenuation(Frequency(args.freq_ghz), RainRate(args.rate), geom)
    if args.path:
        print(f"{rain.path_attenuation(gamma, geom.range):.4f} dB")
    else:
        print(f"{gamma:.4f} dB/km")


def cmd_fog(args):
    cond = fog.FogConditions(LiquidWaterDensity(args.density), celsius_to_kelvin(args.temp_c))
    print(f"{fog.fog_attenuation(cond, Frequency(args.freq_ghz)):.4f} dB/km")


def cmd_gas(args):
    g_o, g_w, g_t = gas.specific_attenuation(Frequency(args.freq_ghz), _atmosphere(args))
    print(f"{g_t:.4f} dB/km (oxygen {g_o:.4f}, water {g_w:.4f})")


def cmd_budget(args):
    if args.scenario:
        sf = _load_scenario(args.scenario)
        if sf.scenario is None:
            raise InvalidQuantityError(f"{args.scenario}: no 'scenario' section")
        sc = sf.scenario
    else:
        if args.freq_ghz is None:
            raise InvalidQuantityError("budget needs --freq-ghz or --scenario")
        sc = budget.Scenario(
            frequency=Frequency(args.freq_ghz),
            geometry=_geometry(args),
            rain_rate=RainRate(args.rate),
            fog=fog.FogConditions(LiquidWaterDensity(args.density),
                                  celsius_to_kelvin(args.temp_c)),
            atmosphere=_atmosphere(args),
            include_rain=not args.no_rain,
            include_fog=not args.no_fog,
            include_gas=not args.no_gas,
        )
    result = budget.evaluate(sc)
    if args.json:
        print(json.dumps(result.as_dict(), indent=2))
        return
    print(f"frequency  {sc.frequency.value:g} GHz, range {sc.geometry.range.value:g} km")
    for key, label in (("fspl_db", "free space"), ("rain_db", "rain"), ("fog_db", "fog"),
                       ("gas_db", "gas"), ("total_db", "total")):
        print(f"{label:<10} {result.as_dict()[key]:10.4f} dB")


def _load_scenario(path):
    try:
        return scenario_file.load(path)
    except OSError as exc:
        raise CliIOError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _sweep_from_args(args):
    if args.scenario:
        sf = _load_scenario(args.scenario)
        if sf.sweep is None:
            raise InvalidQuantityError(f"{args.scenario}: no 'sweep' section")
        return sf.sweep
    if args.quantity is None or args.range is None or args.family is None:
        raise InvalidQuantityError("sweep needs --quantity, --range and --family (or --scenario)")
    start, stop, step = args.range
    family = args.family.split(",") if args.quantity == "gas-components" else _float_list(args.family)
    fog_cond = fog.FogConditions(LiquidWaterDensity(0.0), celsius_to_kelvin(args.temp_c))
    return sweeps.SweepSpec(
        quantity=args.quantity, axis=args.axis, start=start, stop=stop, step=step,
        family=tuple(family), geometry=_geometry(args), fog=fog_cond,
        atmosphere=_atmosphere(args),
    )


def cmd_sweep(args):
    result = sweeps.run_sweep(_sweep_from_args(args), workers=args.jobs)
    _emit(sweeps.format_csv(result), args.output)


def cmd_preset(args):
    spec = sweeps.preset(args.name)
    result = sweeps.run_sweep(spec, workers=args.jobs)
    _emit(sweeps.format_csv(result), args.output)


def _band_csv(report):
    lines = ["start_ghz,stop_ghz,class,colour,n_samples,gamma_min,gamma_mean,gamma_max"]
    for iv in report:
        lines.append(
            f"{iv.start:.6g},{iv.stop:.6g},{iv.band_class.name.lower()},{iv.band_class.colour},"
            f"{iv.n_samples},{iv.gamma_min:.6g},{iv.gamma_mean:.6g},{iv.gamma_max:.6g}"
        )
    return "\n".join(lines) + "\n"


def _band_table(report):
    th = report.thresholds
    out = [f"thresholds: window < {th.low:g} dB/km <= moderate < {th.high:g} dB/km <= blocked",
           f"{'start GHz':>10} {'stop GHz':>10}  {'class':<9} {'min':>9} {'mean':>9} {'max':>9}"]
    for iv in report:
        out.append(
            f"{iv.start:10.6g} {iv.stop:10.6g}  {iv.band_class.name.lower():<9}"
            f" {iv.gamma_min:9.4g} {iv.gamma_mean:9.4g} {iv.gamma_max:9.4g}"
        )
    return "\n".join(out) + "\n"


def cmd_bands(args):
    start, stop, step = args.freq
    atm = _atmosphere(args)
    spectrum = gas.absorption_spectrum(atm, start, stop, step)
    extra = None
    if args.basis == "total":
        extra = 0.0
        if args.rate > 0:
            extra = extra + rain.rain_attenuation_array(spectrum.frequency, RainRate(args.rate),
                                                        LinkGeometry(tilt_angle=args.tilt_deg))
        if args.density > 0:
            cond = fog.FogConditions(LiquidWaterDensity(args.density), atm.temperature)
            extra = extra + fog.fog_attenuation_array(spectrum.frequency, cond)
    high = args.gamma_high
    if high is None:
        # an unset upper limit follows a raised lower one
        high = max(budget.DEFAULT_THRESHOLDS.high, args.gamma_low)
    thresholds = budget.BandThresholds(args.gamma_low, high)
    report = budget.classify_bands(spectrum, thresholds, min_run=args.min_run, extra=extra)
    sys.stdout.write(_band_table(report))
    if args.csv:
        _emit(_band_csv(report), args.csv)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mmwprop",
        description="Millimetre-wave attenuation: free space, rain, fog and atmospheric gases.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fspl", help="free-space path loss in dB")
    p.add_argument("--freq-ghz", type=float, required=True)
    p.add_argument("--dist-km", type=float, required=True)
    p.set_defaults(func=cmd_fspl)

    p = sub.add_parser("rain", help="rain specific attenuation (ITU-R P.838-3)")
    p.add_argument("--freq-ghz", type=float, required=True)
    p.add_argument("--rate", type=float, required=True, help="rain rate, mm/h")
    _add_geometry(p)
    p.add_argument("--path", action="store_true", help="print dB over --dist-km instead of dB/km")
    p.set_defaults(func=cmd_rain)

    p = sub.add_parser("fog", help="fog/cloud specific attenuation (ITU-R P.840)")
    p.add_argument("--freq-ghz", type=float, required=True)
    p.add_argument("--density", type=float, default=0.05, help="liquid water, g/m^3")
    p.add_argument("--temp-c", type=float, default=15.0)
    p.set_defaults(func=cmd_fog)

    p = sub.add_parser("gas", help="gaseous specific attenuation (ITU-R P.676-10)")
    p.add_argument("--freq-ghz", type=float, required=True)
    _add_atmosphere(p)
    p.set_defaults(func=cmd_gas)

    p = sub.add_parser("budget", help="per-mechanism attenuation over a link")
    p.add_argument("--scenario", help="JSON scenario file")
    p.add_argument("--freq-ghz", type=float)
    _add_geometry(p)
    p.add_argument("--rate", type=float, default=0.0, help="rain rate, mm/h")
    p.add_argument("--density", type=float, default=0.0, help="fog liquid water, g/m^3")
    _add_atmosphere(p)
    p.add_argument("--no-rain", action="store_true")
    p.add_argument("--no-fog", action="store_true")
    p.add_argument("--no-gas", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_budget)

    p = sub.add_parser("sweep", help="parameter sweep written as CSV")
    p.add_argument("--scenario", help="JSON file with a 'sweep' section")
    p.add_argument("--quantity", choices=sorted(sweeps.QUANTITIES))
    p.add_argument("--axis", choices=("frequency", "distance"), default="frequency")
    p.add_argument("--range", type=_range_triplet, metavar="START:STOP:STEP")
    p.add_argument("--family", help="comma-separated curve family values")
    _add_geometry(p)
    _add_atmosphere(p)
    p.add_argument("-o", "--output", help="CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("preset", help="fixed sweep configurations fig2..fig6 as CSV")
    p.add_argument("name", choices=sorted(sweeps.PRESETS))
    p.add_argument("-o", "--output", help="CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("bands", help="classify the spectrum into window/moderate/blocked bands")
    p.add_argument("--freq", type=_range_triplet, default=(10.0, 300.0, 0.1),
                   metavar="START:STOP:STEP")
    p.add_argument("--gamma-low", type=float, default=budget.DEFAULT_THRESHOLDS.low)
    p.add_argument("--gamma-high", type=float, default=None,
                   help=f"default {budget.DEFAULT_THRESHOLDS.high:g} dB/km")
    p.add_argument("--min-run", type=int, default=budget.DEFAULT_MIN_RUN)
    p.add_argument("--basis", choices=("gas", "total"), default="gas",
                   help="classify on gas attenuation only, or add rain and fog")
    p.add_argument("--rate", type=float, default=0.0, help="rain rate for --basis total")
    p.add_argument("--tilt-deg", type=float, default=0.0)
    p.add_argument("--density", type=float, default=0.0, help="fog water for --basis total")
    _add_atmosphere(p)
    p.add_argument("--csv", help="also write the report as CSV")
    p.set_defaults(func=cmd_bands)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except OutOfModelRangeError as exc:
        print(f"error: out of model range: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (InvalidQuantityError, ValueError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CliIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

import json
import pathlib

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from mmwprop import OutOfModelRangeError, Temperature
from mmwprop import fog
from mmwprop.quantities import LiquidWaterDensity

GOLDEN = json.loads((pathlib.Path(__file__).parent / "golden" / "fog_points.json").read_text())

STD = Temperature(288.15)


def cond(m, t=STD):
    return fog.FogConditions(LiquidWaterDensity(m), t)


@pytest.mark.parametrize("point", GOLDEN, ids=lambda p: f"{p['f_ghz']}GHz-{p['temperature_k']}K")
def test_golden_points(point):
    t = Temperature(point["temperature_k"])
    eps = fog.water_permittivity(point["f_ghz"], t)
    assert eps.eps_prime == pytest.approx(point["eps_prime"], rel=1e-9)
    assert eps.eps_double_prime == pytest.approx(point["eps_double_prime"], rel=1e-9)
    assert fog.specific_attenuation_coefficient(point["f_ghz"], t) == pytest.approx(
        point["kl"], rel=1e-9)


@given(st.floats(0.5, 200), st.floats(233, 313))
def test_kl_matches_clausius_mossotti_route(f, t):
    kl = fog.specific_attenuation_coefficient(f, Temperature(t))
    assert kl == pytest.approx(oracles.fog_kl_rayleigh(f, t), rel=1e-6)


def test_static_limit():
    eps = fog.water_permittivity(1e-4, STD)
    # eps0 = 77.66 + 103.3*(300/288.15 - 1)
    assert eps.eps_prime == pytest.approx(77.66 + 103.3 * (300 / 288.15 - 1), rel=1e-6)
    assert 75 < eps.eps_prime < 90


def test_lossy_and_decreasing_real_part():
    assert fog.water_permittivity(30, STD).eps_double_prime > 0
    f = np.linspace(10, 300, 200)
    eps_p = [fog.water_permittivity(x, STD).eps_prime for x in f]
    assert np.all(np.diff(eps_p) < 0)


def test_temperature_sensitivity():
    cold = fog.specific_attenuation_coefficient(100, Temperature(278.15))
    warm = fog.specific_attenuation_coefficient(100, Temperature(298.15))
    # colder droplets absorb more in the millimetre band
    assert cold > warm


def test_kl_monotone_in_frequency():
    f = np.linspace(10, 200, 400)
    kl = fog.fog_attenuation_array(f, cond(1.0))
    assert np.all(np.diff(kl) > 0)
    assert fog.specific_attenuation_coefficient(150) > fog.specific_attenuation_coefficient(30)
    assert 0 < fog.specific_attenuation_coefficient(10) < 1


def test_heavy_fog_100ghz_golden():
    # frozen from the oracle: K_l(100 GHz, 288.15 K) = 4.406863 (dB/km)/(g/m^3)
    assert fog.fog_attenuation(cond(0.5), 100) == pytest.approx(0.5 * 4.406863275939453, rel=1e-9)


def test_fog_is_minor_at_28ghz():
    assert fog.fog_attenuation(cond(0.5), 28) < 1.0


def test_linearity_in_density():
    assert fog.fog_attenuation(cond(0.0), 60) == 0.0
    for f in (10, 28, 60, 150, 200):
        ratio = fog.fog_attenuation(cond(0.5), f) / fog.fog_attenuation(cond(0.05), f)
        assert ratio == pytest.approx(10.0, abs=1e-9)


@given(st.floats(1, 200), st.floats(0.001, 5), st.floats(0.001, 5))
def test_strictly_increasing_in_density(f, m1, m2):
    lo, hi = sorted((m1, m2))
    if hi > lo:
        assert fog.fog_attenuation(cond(lo), f) < fog.fog_attenuation(cond(hi), f)


def test_default_temperature_is_15c():
    assert fog.FogConditions().temperature.value == 288.15
    assert fog.STANDARD_TEMPERATURE.value == 288.15


@pytest.mark.parametrize("f", [200.01, 250])
def test_frequency_cap(f):
    with pytest.raises(OutOfModelRangeError) as info:
        fog.fog_attenuation(cond(0.05), f)
    assert info.value.mechanism == "fog"


@pytest.mark.parametrize("t", [232.0, 313.5])
def test_temperature_guard(t):
    with pytest.raises(OutOfModelRangeError):
        fog.water_permittivity(30, Temperature(t))
    with pytest.raises(OutOfModelRangeError):
        fog.fog_attenuation(cond(0.1, Temperature(t)), 30)


def test_permittivity_allows_above_fog_cap():
    assert fog.water_permittivity(500, STD).eps_double_prime > 0


def test_array_matches_scalar():
    f = np.array([1.0, 28.0, 100.0, 200.0])
    expected = [fog.fog_attenuation(cond(0.25), x) for x in f]
    np.testing.assert_allclose(fog.fog_attenuation_array(f, cond(0.25)), expected, rtol=1e-14)

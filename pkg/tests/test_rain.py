import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mmwprop import Distance, InvalidQuantityError, LinkGeometry, OutOfModelRangeError
from mmwprop import rain
from mmwprop._assets import AssetChecksumError, read_bytes

# Rows of the recommendation's printed coefficient table: f, kH, alphaH, kV, alphaV.
# Kept as strings so the printed precision is known.
PRINTED_TABLE = [
    (1, "0.0000259", "0.9691", "0.0000308", "0.8592"),
    (2, "0.0000847", "1.0664", "0.0000998", "0.9490"),
    (10, "0.01217", "1.2571", "0.01129", "1.2156"),
    (12, "0.02386", "1.1825", "0.02455", "1.1216"),
    (15, "0.04481", "1.1233", "0.05008", "1.0440"),
    (20, "0.09164", "1.0568", "0.09611", "0.9847"),
    (25, "0.1571", "0.9991", "0.1533", "0.9491"),
    (30, "0.2403", "0.9485", "0.2291", "0.9129"),
    (35, "0.3374", "0.9047", "0.3224", "0.8761"),
    (40, "0.4431", "0.8673", "0.4274", "0.8421"),
    (45, "0.5521", "0.8355", "0.5375", "0.8123"),
    (50, "0.6600", "0.8084", "0.6472", "0.7871"),
    (60, "0.8606", "0.7656", "0.8515", "0.7486"),
    (70, "1.0315", "0.7345", "1.0253", "0.7215"),
    (80, "1.1704", "0.7115", "1.1668", "0.7021"),
    (90, "1.2807", "0.6944", "1.2795", "0.6876"),
    (100, "1.3671", "0.6815", "1.3680", "0.6765"),
]


def agrees_to_4_sig(computed, printed):
    """Within half a unit of the 4th significant digit, or of the last printed
    digit when the table prints fewer than four."""
    value = float(printed)
    decimals = len(printed.split(".")[1])
    unit = max(10 ** (math.floor(math.log10(abs(value))) - 3), 10.0 ** -decimals)
    return abs(computed - value) <= 0.5 * unit * (1 + 1e-9)


@pytest.mark.parametrize("row", PRINTED_TABLE, ids=lambda r: f"{r[0]}GHz")
def test_regression_matches_printed_table(row):
    f, *printed = row
    computed = rain.coefficients_hv(f)
    for c, p in zip(computed, printed):
        assert agrees_to_4_sig(c, p), (c, p)


@given(st.floats(1, 1000))
def test_regression_matches_independent_oracle(f):
    np.testing.assert_allclose(rain.coefficients_hv(f), oracles.rain_coefficients(f), rtol=1e-12)


@pytest.mark.parametrize("f", [1.0, 1000.0])
def test_range_ends_finite_positive(f):
    values = rain.coefficients_hv(f)
    assert all(math.isfinite(v) and v > 0 for v in values)


@pytest.mark.parametrize("f", [0.5, 1000.5])
def test_out_of_range_frequency(f):
    with pytest.raises(OutOfModelRangeError):
        rain.coefficients_hv(f)


def test_horizontal_worst_case_at_28ghz():
    kh, _, kv, _ = rain.coefficients_hv(28)
    assert kh >= kv


def test_combine_endpoints():
    kh, ah, kv, av = 0.3, 0.9, 0.2, 0.8
    c = rain.combine_polarization(kh, ah, kv, av, LinkGeometry(1, 0, 0))
    assert c.k == pytest.approx(kh, rel=1e-15) and c.alpha == pytest.approx(ah, rel=1e-15)
    c = rain.combine_polarization(kh, ah, kv, av, LinkGeometry(1, 0, 90))
    assert c.k == pytest.approx(kv, rel=1e-15) and c.alpha == pytest.approx(av, rel=1e-15)
    c = rain.combine_polarization(kh, ah, kv, av, LinkGeometry(1, 0, 45))
    assert c.k == pytest.approx((kh + kv) / 2, rel=1e-15)


@given(st.floats(0.001, 10), st.floats(0.1, 2), st.floats(0.001, 10), st.floats(0.1, 2))
def test_combine_endpoints_any_table(kh, ah, kv, av):
    h = rain.combine_polarization(kh, ah, kv, av)
    v = rain.combine_polarization(kh, ah, kv, av, LinkGeometry(1, 0, 90))
    # the weaker component comes out of a difference of the two, so its error
    # grows with the ratio between them
    rel = 1e-13 * max(kh / kv, kv / kh, 10)
    assert h.k == pytest.approx(kh, rel=rel) and h.alpha == pytest.approx(ah, rel=rel)
    assert v.k == pytest.approx(kv, rel=rel) and v.alpha == pytest.approx(av, rel=rel)


def test_specific_attenuation_basics():
    coeff = rain.RainCoefficients(0.2, 0.95)
    assert rain.specific_attenuation(coeff, 0) == 0.0
    assert rain.specific_attenuation(coeff, 10) == pytest.approx(0.2 * 10 ** 0.95)
    with pytest.raises(InvalidQuantityError):
        rain.specific_attenuation(coeff, -1)


def test_28ghz_heavy_rain_checkpoint():
    # kH=0.2051, alphaH=0.9679 at 28 GHz -> 0.2051 * 25**0.9679
    gamma = rain.rain_attenuation(28, 25)
    assert gamma == pytest.approx(4.6236, abs=1e-3)
    assert abs(gamma - 5.0) <= 1.5


def test_path_attenuation():
    assert rain.path_attenuation(5.0, Distance(1)) == 5.0
    assert rain.path_attenuation(5.0, 0.5) == 2.5
    assert rain.path_attenuation(0.0, 10) == 0.0


@given(st.floats(1, 1000), st.floats(0.01, 200), st.floats(0.01, 200))
def test_monotone_in_rate(f, r1, r2):
    lo, hi = sorted((r1, r2))
    if hi > lo:
        assert rain.rain_attenuation(f, lo) < rain.rain_attenuation(f, hi)


# alphaH > alphaV across 10-100 GHz, so H >= V iff R >= (kV/kH)**(1/(aH-aV));
# that crossover peaks at 4.064 mm/h near 15 GHz
HV_CROSSOVER_MAX = 4.07


@given(st.floats(10, 100), st.floats(HV_CROSSOVER_MAX, 100))
def test_horizontal_is_worst_case(f, r):
    h = rain.rain_attenuation(f, r, LinkGeometry(1, 0, 0))
    v = rain.rain_attenuation(f, r, LinkGeometry(1, 0, 90))
    assert h >= v


def test_vertical_exceeds_horizontal_in_light_rain_near_15ghz():
    h = rain.rain_attenuation(15, 1, LinkGeometry(1, 0, 0))
    v = rain.rain_attenuation(15, 1, LinkGeometry(1, 0, 90))
    assert v > h


def test_crossover_rate_bound():
    f = np.linspace(10, 100, 9001)
    kh, ah, kv, av = rain.coefficients_hv_array(f)
    assert (ah > av).all()
    crossover = (kv / kh) ** (1 / (ah - av))
    assert crossover.max() == pytest.approx(4.064, abs=1e-3)


@settings(max_examples=50)
@given(st.floats(1.001, 999))
def test_continuity(f):
    for delta in (1e-3, 1e-6):
        a = rain.rain_attenuation(f, 25)
        b = rain.rain_attenuation(f + delta, 25)
        assert abs(b - a) < 50 * delta * max(a, 1e-3) + 1e-12


def test_array_matches_scalar():
    f = np.linspace(1, 300, 37)
    geom = LinkGeometry(1, 10, 30)
    expected = [rain.rain_attenuation(x, 16, geom) for x in f]
    np.testing.assert_allclose(rain.rain_attenuation_array(f, 16, geom), expected, rtol=1e-13)
    assert not rain.rain_attenuation_array(f, 0).any()


def test_table_asset_header_and_terms():
    table = rain.load_regression_table()
    assert "P.838-3" in table.version
    assert len(table.kH.a) == 4 and len(table.kV.a) == 4
    assert len(table.aH.a) == 5 and len(table.aV.a) == 5


def test_table_checksum_enforced():
    raw = read_bytes("p838_coefficients.csv").replace(b"-5.33980", b"-5.33981")
    with pytest.raises(AssetChecksumError):
        rain.load_regression_table(raw)


def test_invalid_coefficients():
    with pytest.raises(InvalidQuantityError):
        rain.RainCoefficients(0.0, 1.0)

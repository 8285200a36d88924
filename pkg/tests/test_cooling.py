"""Cooling model tests: chiller quadratic, fan power, CRAC, EER table."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcpowersim.cooling import (ChillerSpec, CracSpec, CrahSpec, EerTable,
                                airflow_heat_power, ambient_adjustment,
                                chiller_power, crac_power, crah_power,
                                eer_lookup, heat_load)
from dcpowersim.errors import (InvariantViolation, InvertedTemperatures,
                               OutOfRange)

FARM_PEAK = 10e6
CHILLER = ChillerSpec()
CRAH = CrahSpec()
CRAC = CracSpec()
EER = EerTable()

TABLE_I = ((41.0, 2.66), (35.0, 3.12), (30.0, 3.52), (25.0, 3.93),
           (20.0, 4.34), (15.0, 4.74), (10.0, 5.13), (5.0, 5.49),
           (0.0, 5.82))


# --- heat load diagnostic ---

def test_heat_load_zero_delta():
    assert heat_load(2.0, 1.0, 25.0, 25.0) == 0.0


def test_heat_load_hand_value():
    assert heat_load(1.0, 1.0, 35.0, 25.0, cp_air=1005.0) == pytest.approx(
        10050.0, rel=1e-12)


def test_heat_load_linear_in_containment():
    assert heat_load(1.0, 0.5, 35.0, 25.0, cp_air=1005.0) == pytest.approx(
        5025.0, rel=1e-12)


def test_heat_load_validation():
    with pytest.raises(InvertedTemperatures):
        heat_load(1.0, 1.0, 20.0, 25.0)
    with pytest.raises(OutOfRange):
        heat_load(1.0, 0.0, 35.0, 25.0)
    with pytest.raises(OutOfRange):
        heat_load(1.0, 1.2, 35.0, 25.0)
    with pytest.raises(OutOfRange):
        heat_load(-1.0, 1.0, 35.0, 25.0)


# --- chiller ---

@pytest.mark.parametrize("u,expected", [
    (0.0, 0.7 * 10e6 * 0.63),              # 4.41 MW
    (0.5, 0.7 * 10e6 * (0.32 * 0.25 + 0.11 * 0.5 + 0.63)),  # 5.355 MW
    (1.0, 0.7 * 10e6 * (0.32 + 0.11 + 0.63)),               # 7.42 MW
])
def test_chiller_hand_values(u, expected):
    assert chiller_power(u, FARM_PEAK, CHILLER) == pytest.approx(
        expected, rel=1e-12)


def test_chiller_monotone_and_convex():
    grid = [i / 20 for i in range(21)]
    powers = [chiller_power(u, FARM_PEAK, CHILLER) for u in grid]
    assert all(b > a for a, b in zip(powers, powers[1:]))
    second = [powers[i + 1] - 2 * powers[i] + powers[i - 1]
              for i in range(1, len(powers) - 1)]
    assert all(d >= -1e-6 for d in second)


def test_chiller_validation():
    with pytest.raises(OutOfRange):
        chiller_power(1.5, FARM_PEAK, CHILLER)
    with pytest.raises(OutOfRange):
        chiller_power(0.5, 0.0, CHILLER)
    with pytest.raises(InvariantViolation):
        ChillerSpec(gamma=0.0)


# --- CRAH / CRAC ---

def test_fan_power_full_load():
    # 1333.33 units * 1.33e-5 * 7.5 kW * 14000 CMH = 1862 kW
    assert airflow_heat_power(1.0, FARM_PEAK, CRAH) == pytest.approx(
        1.862e6, rel=1e-9)


def test_crah_full_and_idle():
    assert crah_power(1.0, FARM_PEAK, CRAH) == pytest.approx(
        2.662e6, rel=1e-9)
    assert crah_power(0.0, FARM_PEAK, CRAH) == pytest.approx(
        800e3, rel=1e-12)


def test_crah_efficiency_scales_fan_power():
    half_eta = CrahSpec(eta_heat=0.5)
    assert crah_power(1.0, FARM_PEAK, half_eta) == pytest.approx(
        800e3 + 2 * 1.862e6, rel=1e-9)


def test_fan_power_linear_in_utilisation():
    for u in (0.1, 0.25, 0.4):
        assert airflow_heat_power(2 * u, FARM_PEAK, CRAH) == \
            2.0 * airflow_heat_power(u, FARM_PEAK, CRAH)


def test_crac_full_load():
    # 2.5 MW idle + 7 * 1862 kW condenser+fan = 15.534 MW
    assert crac_power(1.0, FARM_PEAK, CRAC, CRAH) == pytest.approx(
        15.534e6, rel=1e-9)


def test_crac_idle_only_at_zero():
    assert crac_power(0.0, FARM_PEAK, CRAC, CRAH) == pytest.approx(
        2.5e6, rel=1e-12)


def test_crac_zero_cop_degenerates_to_fan_plus_idle():
    no_condenser = CracSpec(idle_frac=0.25, cop=0.0)
    assert crac_power(1.0, FARM_PEAK, no_condenser, CRAH) == pytest.approx(
        2.5e6 + 1.862e6, rel=1e-9)


def test_crac_costs_more_than_crah():
    # Holds whenever cop > 0 and the CRAC idle floor is at least the CRAH one.
    for u in (0.0, 0.3, 0.7, 1.0):
        assert crac_power(u, FARM_PEAK, CRAC, CRAH) > \
            crah_power(u, FARM_PEAK, CRAH)


@given(st.floats(min_value=0.0, max_value=0.95),
       st.floats(min_value=0.001, max_value=0.05))
def test_cooling_units_nondecreasing_in_utilisation(u, step):
    assert crah_power(u + step, FARM_PEAK, CRAH) >= crah_power(
        u, FARM_PEAK, CRAH)
    assert crac_power(u + step, FARM_PEAK, CRAC, CRAH) >= crac_power(
        u, FARM_PEAK, CRAC, CRAH)


# --- EER table ---

def test_every_breakpoint_reproduced_exactly():
    for ambient_c, eer in TABLE_I:
        assert eer_lookup(ambient_c, EER) == eer


def test_interpolation_midpoint():
    assert eer_lookup(27.5, EER) == pytest.approx(3.725, rel=1e-12)


def test_clamping_outside_range():
    assert eer_lookup(50.0, EER) == 2.66
    assert eer_lookup(-10.0, EER) == 5.82


def test_lookup_continuous_and_nonincreasing():
    previous = None
    for i in range(-50, 510):
        t = i / 10.0
        value = eer_lookup(t, EER)
        if previous is not None:
            assert value <= previous + 1e-12
            assert abs(value - previous) < 0.02   # no jumps on a 0.1 C grid
        previous = value


def test_adjustment_identity_at_reference():
    assert ambient_adjustment(30.0, 30.0, EER) == 1.0


def test_adjustment_hand_values():
    assert ambient_adjustment(41.0, 30.0, EER) == pytest.approx(
        3.52 / 2.66, rel=1e-12)
    assert ambient_adjustment(0.0, 30.0, EER) == pytest.approx(
        3.52 / 5.82, rel=1e-12)


def test_adjustment_nondecreasing_in_ambient():
    values = [ambient_adjustment(t, 30.0, EER) for t in range(-5, 55)]
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_table_validation():
    with pytest.raises(InvariantViolation):
        EerTable(breakpoints=())
    with pytest.raises(InvariantViolation):
        EerTable(breakpoints=((30.0, 3.5), (35.0, 3.1)))   # ascending order
    with pytest.raises(InvariantViolation):
        EerTable(breakpoints=((35.0, 3.1), (30.0, 2.9)))   # EER drops when colder
    with pytest.raises(InvariantViolation):
        EerTable(breakpoints=((35.0, 0.0),))

"""Core datum, derived invariants, strip selection, admissibility, main term."""

import json
import math

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from zerobound import (
    DomainError,
    GammaFactor,
    InvalidStripError,
    LFunctionData,
    ValidationError,
    conductor_product,
    derive_quantities,
    load_document,
    main_term,
    min_admissible_height,
    require_admissible,
    select_strip,
    tail_sum,
)
from zerobound.selberg import document_dict

# frozen by scripts/derive_oracle_values.py (mpmath, 40 digits)
TAIL_2 = 0.6449340668482264
TAIL_3 = 0.2020569031595943
TAIL_4 = 0.08232323371113819


# --- construction and validation -------------------------------------------

def test_gamma_factor_rejects_bad_parameters():
    with pytest.raises(ValidationError):
        GammaFactor(0.0, 0j)
    with pytest.raises(ValidationError):
        GammaFactor(-1.0, 0j)
    with pytest.raises(ValidationError):
        GammaFactor(1.0, complex(-0.5, 1.0))


def test_datum_validation():
    good = dict(factors=(GammaFactor(1.0, 0j),), Q=1.0, omega=1 + 0j, k=0, a1=1.0)
    LFunctionData(**good)
    with pytest.raises(ValidationError):
        LFunctionData(**{**good, "factors": ()})
    with pytest.raises(ValidationError):
        LFunctionData(**{**good, "Q": 0.0})
    with pytest.raises(ValidationError):
        LFunctionData(**{**good, "omega": 1.1 + 0j})
    with pytest.raises(ValidationError):
        LFunctionData(**{**good, "k": -1})
    with pytest.raises(ValidationError):
        LFunctionData(**{**good, "a1": 0.5})
    # degree 2 * 0.25 = 0.5 < 1 is degenerate
    with pytest.raises(ValidationError):
        LFunctionData(**{**good, "factors": (GammaFactor(0.25, 0j),)})


def test_omega_modulus_tolerance():
    # unimodular up to 1e-12 passes, beyond fails
    LFunctionData(
        factors=(GammaFactor(1.0, 0j),), Q=1.0, omega=complex(1.0 + 5e-13, 0.0), k=0, a1=1.0
    )


# --- derived quantities ------------------------------------------------------

def test_derive_quantities_newform(nf12_pair):
    data, _ = nf12_pair
    dq = derive_quantities(data)
    assert dq.d_L == 2.0
    assert dq.lambda_cap == 1.0
    assert dq.mu_cap == complex(4 - 2 * 12, 0)  # 4 - 2*kappa
    assert dq.v == 0.0
    assert dq.u == 0j


def test_derive_quantities_zeta(zeta_pair):
    data, _ = zeta_pair
    dq = derive_quantities(data)
    half_log_half = 0.5 * math.log(0.5)
    assert dq.d_L == 1.0
    assert dq.lambda_cap == pytest.approx(0.5, rel=1e-15)
    assert dq.v == pytest.approx(half_log_half, rel=1e-15)
    assert dq.u == pytest.approx(-half_log_half, rel=1e-15)
    assert dq.mu_cap == 2 + 0j
    assert conductor_product(data) == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-15)


def test_derive_quantities_is_pure(nf12_pair):
    data, _ = nf12_pair
    assert derive_quantities(data) == derive_quantities(data)


# --- tail sums ----------------------------------------------------------------

def test_tail_sum_frozen_values():
    assert tail_sum(2.0, 1.0) == pytest.approx(TAIL_2, abs=1e-12)
    assert tail_sum(3.0, 1.0) == pytest.approx(TAIL_3, abs=1e-12)
    assert tail_sum(4.0, 1.0) == pytest.approx(TAIL_4, abs=1e-12)


def test_tail_sum_zero_coefficient():
    assert tail_sum(3.0, 0.0) == 0.0


def test_tail_sum_divergent():
    with pytest.raises(DomainError):
        tail_sum(1.0, 1.0)
    with pytest.raises(DomainError):
        tail_sum(0.5, 1.0)


def test_tail_sum_is_upper_bound():
    # result must over-approximate the true sum (checked against mpmath)
    for x in (2.0, 2.5, 3.0, 4.0, 6.0):
        true = float(mp.zeta(x) - 1)
        got = tail_sum(x, 1.0)
        assert got >= true
        assert got - true < 1e-12


@given(st.floats(min_value=2.5, max_value=12.0), st.floats(min_value=0.25, max_value=3.0))
def test_tail_sum_decreasing_in_exponent(x, step):
    # x >= 2.5 keeps the adaptive cutoff small enough for a property sweep
    assert tail_sum(x + step, 1.0) < tail_sum(x, 1.0)


def test_tail_sum_decreasing_at_low_exponent():
    assert tail_sum(2.0, 1.0) > tail_sum(2.25, 1.0) > tail_sum(3.0, 1.0)


# --- strip selection ------------------------------------------------------------

def test_select_strip_default():
    strip = select_strip(1.0)
    assert (strip.a, strip.b, strip.R) == (3.0, -4.0, 7.0)


def test_select_strip_larger_coefficients():
    # 3*(zeta(3)-1) ~ 0.606 >= 1/2 pushes a to 4; 5*(zeta(3)-1) ~ 1.01 >= 1 pushes b to -5
    assert select_strip(3.0).a == 4.0
    assert select_strip(5.0).b == -5.0


def test_select_strip_output_satisfies_conditions():
    for a1 in (1.0, 2.0, 3.0, 5.0, 10.0):
        strip = select_strip(a1)
        assert tail_sum(strip.a, a1) < 0.5
        assert tail_sum(-strip.b - 1.0, a1) < 1.0
        assert strip.R > 5.0


def test_select_strip_overrides():
    strip = select_strip(1.0, a=2.5, b=-3.5)
    assert (strip.a, strip.b) == (2.5, -3.5)
    with pytest.raises(InvalidStripError, match="tail_sum"):
        select_strip(3.0, a=2.2)  # 3*(sum n^-2.2 - ...) is far above 1/2
    with pytest.raises(InvalidStripError, match="a > 2"):
        select_strip(1.0, a=2.0)
    with pytest.raises(InvalidStripError, match="b < -3"):
        select_strip(1.0, b=-3.0)
    with pytest.raises(InvalidStripError, match="tail_sum"):
        select_strip(8.0, b=-3.5)  # 8 * sum n^-2.5 ~ 2.7 >= 1


def test_select_strip_rejects_small_a1():
    with pytest.raises(ValidationError):
        select_strip(0.9)


# --- admissible heights -----------------------------------------------------------

def test_min_height_newform():
    from zerobound import presets

    for kappa in (2, 12, 40):
        data, strip = presets.newform(1, kappa)
        h = min_admissible_height(data, strip)
        assert h.value == 15.0 + kappa
        assert not h.strict_adjusted
        assert float(h) == h.value


def test_min_height_zeta(zeta_pair):
    data, strip = zeta_pair
    h = min_admissible_height(data, strip)
    assert h.value == 16.0
    assert h.binding == "gamma-shift"


def test_min_height_pole_constraint():
    strip = select_strip(1.0)
    base = dict(factors=(GammaFactor(0.5, 0j),), Q=1.0, omega=1 + 0j, a1=1.0)
    without_pole = LFunctionData(**base, k=0)
    with_pole = LFunctionData(**base, k=5)
    assert min_admissible_height(without_pole, strip).value == 16.0
    # 14 + 1/(2^(1/5) - 1) ~ 20.7 dominates once k = 5
    expected = 14.0 + 1.0 / (2.0 ** 0.2 - 1.0)
    assert min_admissible_height(with_pole, strip).value == pytest.approx(expected, rel=1e-15)
    assert min_admissible_height(with_pole, strip).binding == "pole-window"


def test_min_height_lower_bound_invariant():
    from zerobound import presets

    for data, strip in (presets.zeta(), presets.newform(5, 4), presets.newform(7, 20)):
        assert min_admissible_height(data, strip).value >= 2.0 * strip.R + 1.0


def test_require_admissible_names_constraint(zeta_pair):
    data, strip = zeta_pair
    require_admissible(data, strip, 16.0)
    with pytest.raises(DomainError, match="gamma-shift"):
        require_admissible(data, strip, 15.5)
    with pytest.raises(DomainError, match="base-window"):
        require_admissible(data, strip, 3.0)


# --- main term ----------------------------------------------------------------------

def test_main_term_zeta_closed_form(zeta_pair):
    # with lambda Q^2 = 1/(2 pi) the main term collapses to (T/2pi) log(T/(2 pi e))
    data, _ = zeta_pair
    for T in (16.0, 50.0, 100.0, 1234.5):
        expected = T / (2 * math.pi) * math.log(T / (2 * math.pi * math.e))
        assert main_term(data, T) == pytest.approx(expected, rel=1e-14)


def test_main_term_vanishes_at_unit_conductor():
    data = LFunctionData(factors=(GammaFactor(1.0, 0j),), Q=1.0, omega=1 + 0j, k=0, a1=1.0)
    assert conductor_product(data) == pytest.approx(1.0)
    assert main_term(data, math.e) == pytest.approx(0.0, abs=1e-15)


def test_main_term_monotone_for_large_heights(zeta_pair, nf12_pair):
    for data, _ in (zeta_pair, nf12_pair):
        lq2 = conductor_product(data)
        start = math.e * max(1.0, 1.0 / lq2)
        grid = [start * (1.1 ** i) for i in range(60)]
        values = [main_term(data, t) for t in grid]
        assert all(b > a for a, b in zip(values, values[1:]))


def test_main_term_domain():
    data = LFunctionData(factors=(GammaFactor(1.0, 0j),), Q=1.0, omega=1 + 0j, k=0, a1=1.0)
    with pytest.raises(DomainError):
        main_term(data, 0.0)


# --- JSON interchange ------------------------------------------------------------------

def test_document_round_trip(nf12_pair):
    data, strip = nf12_pair
    doc = document_dict(data, strip)
    text = json.dumps(doc)
    data2, strip2 = load_document(json.loads(text))
    assert data2 == data
    assert strip2 == strip


def test_load_document_rejects_garbage():
    with pytest.raises(ValidationError):
        load_document({"factors": [{"lambda": 1.0}], "Q": 1.0})

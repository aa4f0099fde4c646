"""The divergent solution family and its exact derivates."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from resurgentia import families
from resurgentia.scalars import ExactScalar
from resurgentia.series import PowerSeries

F = Fraction


def test_kernel_coefficients_frozen():
    cs = families.gen_c_coeffs(8)
    assert cs[0] == F(1)
    assert cs[1] == F(5, 72)
    assert cs[2] == F(385, 10368)
    assert cs[3] == F(85085, 2239488)
    assert cs[4] == F(37182145, 644972544)


def test_psi_matches_kernel_route():
    # Gamma-ratio recurrence vs the Airy-ODE recursion inside gen_psi_phi
    cs = families.gen_c_coeffs(12)
    psi, _ = families.gen_psi_phi(12)
    for n in range(13):
        assert psi.series.coeff(n).re == cs[n]


def test_phi_is_reflection():
    psi, phi = families.gen_psi_phi(10)
    assert phi.series == psi.series.reflect()


def test_free_energy_frozen():
    g, f, a = families.gen_g_f(8)
    assert [g.series.coeff(k).re for k in range(5)] == [
        F(0), F(5, 72), F(5, 144), F(1105, 31104), F(565, 10368),
    ]
    assert f.series == g.series.reflect()
    assert a[:4] == [F(5, 24), F(5, 16), F(1105, 1152), F(565, 128)]


def test_genus_scaling_identity():
    g, _, a = families.gen_g_f(12)
    for k, ag in enumerate(a):
        assert ag == F(3) ** (k + 1) * g.series.coeff(k + 1).re


def test_ode_residuals_vanish():
    psi, _ = families.gen_psi_phi(24)
    assert families.ode_residual(psi.series, "airy_linear").is_zero()
    g, _, _ = families.gen_g_f(24)
    assert families.ode_residual(g.series, "hae_nonlinear").is_zero()


def test_nonlinear_residual_constant_shift_invariance():
    g, _, _ = families.gen_g_f(12)
    shifted = g.series + PowerSeries.constant(F(7, 3), 12)
    assert families.ode_residual(shifted, "hae_nonlinear").is_zero()


def test_ode_residual_catches_wrong_series():
    s = PowerSeries.from_coeffs([1, 1, 1, 1, 1], 4)
    assert not families.ode_residual(s, "airy_linear").is_zero()
    with pytest.raises(ValueError):
        families.ode_residual(PowerSeries.one(1), "airy_linear")
    with pytest.raises(ValueError):
        families.ode_residual(PowerSeries.one(4), "bogus")


def test_tower_frozen_and_power_law():
    Gs = families.gen_Gn(8, 4)
    G1 = Gs[0].series
    assert [G1.coeff(k).re for k in range(3)] == [F(1), F(-5, 36), F(25, 2592)]
    assert [Gs[1].series.coeff(k).re for k in range(3)] == [F(-1, 2), F(5, 36), F(-25, 1296)]
    power = PowerSeries.one(8)
    for n, G in enumerate(Gs, start=1):
        power = power * G1
        assert G.series.scale(F((-1) ** (n - 1) * n)) == power
        assert G.series.coeff(0) == ExactScalar(F((-1) ** (n - 1), n))


def test_tower_requires_positive_index():
    with pytest.raises(ValueError):
        families.gen_Gn(6, 0)


def test_gevrey_growth_ratio():
    """b_{n+1}/(n b_n) approaches the inverse singularity location 1/2."""
    g, _, _ = families.gen_g_f(82)
    for n in range(60, 80):
        bn = g.series.coeff(n).re
        bn1 = g.series.coeff(n + 1).re
        ratio = bn1 / (n * bn)
        assert abs(ratio - F(1, 2)) < F(1, 10) * F(1, 2), (n, ratio)


@given(st.integers(min_value=2, max_value=20))
def test_psi_route_agreement_any_order(order):
    psi, phi = families.gen_psi_phi(order)
    assert psi.series.coeff(0) == ExactScalar.one()
    assert phi.series.coeff(1) == -psi.series.coeff(1)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=8))
def test_constant_shift_invariance_fuzz(c):
    g, _, _ = families.gen_g_f(8)
    shifted = g.series + PowerSeries.constant(c, 8)
    assert families.ode_residual(shifted, "hae_nonlinear").is_zero()

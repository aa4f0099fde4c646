"""The alien-derivation engine: every identity is exact or it is wrong."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from resurgentia import families
from resurgentia.alien import (
    Caps,
    Poly,
    TransElement,
    apply_ddz,
    apply_delta,
    apply_delta_plus,
    apply_dotted,
    apply_stokes,
    bridge_check,
    companion_F,
    deltaplus_table,
    expand_to_series,
    formal_integral,
    stokes_action_check,
    te_apply,
)
from resurgentia.scalars import ExactScalar

F = Fraction
I = ExactScalar(0, 1)
WIDE = Caps(8, 8)


def test_formal_integral_grades():
    G = formal_integral(Caps(5, 5))
    assert sorted(k[2] for k in G.terms) == [0, 0, 1, 2, 3, 4, 5]


def test_bridge_identities():
    assert bridge_check(Caps(5, 5))["ok"]


def test_stokes_actions():
    assert stokes_action_check(Caps(5, 5))["ok"]


def test_companion_mirror():
    Fc = companion_F(Caps(4, 4))
    assert sorted(k[2] for k in Fc.terms) == [-4, -3, -2, -1, 0, 0]


def test_deltaplus_table_closed_forms():
    tab = deltaplus_table(4, 4)
    minus_i = ExactScalar(0, -1)
    for (om, k), elem in tab.items():
        n = abs(om) // 2
        if om > 0:
            j = k + n
            expected = {(0, j, 0): Poly.const((minus_i ** n) * ExactScalar(F(comb(j, n) * (-1) ** (j - 1), j)))}
        elif n > k:
            expected = {}
        elif n == k:
            expected = {(0, 0, 0): Poly.const((I ** k) * ExactScalar(F(-1, k)))}
        else:
            j = k - n
            expected = {(0, j, 0): Poly.const((I ** n) * ExactScalar(F(comb(k - 1, n) * (-1) ** (j - 1), j)))}
        assert elem.terms == {kk: v for kk, v in expected.items() if not v.is_zero()}, (om, k)


def test_deltaplus_on_free_energy_generator():
    g = TransElement.generator("g", WIDE)
    for m in (1, 2, 3):
        got = apply_delta_plus(g, 2 * m)
        want = TransElement({(0, m, 0): Poly.const((I ** m) * ExactScalar(F(-1, m)))}, WIDE)
        assert got == want, m


def _fuzz_element():
    return TransElement(
        {
            (1, 2, 1): Poly.var("s2", 2) * Poly.var("p"),
            (0, -3, -2): Poly.var("q", 1, F(2, 3)) + Poly.var("z", -1),
            (2, 0, 0): Poly.var("s1") * Poly.var("d2"),
        },
        WIDE,
    )


def test_deltaplus_composition_identities():
    x = _fuzz_element()
    lhs = apply_delta_plus(x, 4)
    rhs = apply_delta(x, 4) + apply_delta(apply_delta(x, 2), 2).scale(F(1, 2))
    assert lhs == rhs
    lhs6 = apply_delta_plus(x, -6)
    rhs6 = (
        apply_delta(x, -6)
        + (apply_delta(apply_delta(x, -2), -4) + apply_delta(apply_delta(x, -4), -2)).scale(F(1, 2))
        + apply_delta(apply_delta(apply_delta(x, -2), -2), -2).scale(F(1, 6))
    )
    assert lhs6 == rhs6


def test_leibniz_rules():
    x = _fuzz_element()
    y = TransElement(
        {
            (0, 1, 1): Poly.var("s2") * Poly.var("q"),
            (0, 0, -1): Poly.var("z", -2, F(5, 36)),
        },
        WIDE,
    )
    for om in (2, -2):
        assert apply_delta(x * y, om) == apply_delta(x, om) * y + x * apply_delta(y, om)
    assert apply_ddz(x * y) == apply_ddz(x) * y + x * apply_ddz(y)


def test_dotted_derivations_commute_with_ddz():
    x = _fuzz_element()
    for direction in ("geq0", "leq0"):
        assert apply_ddz(apply_dotted(x, direction)) == apply_dotted(apply_ddz(x), direction)


def test_stokes_one_parameter_group():
    t1 = Poly.var("t1")
    t2 = Poly.var("t2")
    for direction in ("geq0", "leq0"):
        src = formal_integral(Caps(6, 6), grade_cap=6)
        assert apply_stokes(src, direction, t1 + t2) == apply_stokes(
            apply_stokes(src, direction, t2), direction, t1
        )


def test_expansion_matches_series_routes():
    G = formal_integral(Caps(5, 5))
    exp = expand_to_series(G, 20)
    psi, phi = families.gen_psi_phi(22)
    ratio = (phi.series * psi.series.inverse()).truncate(20)
    assert exp[((0, 1, 0, 0, 0, 0), 1)] == ratio
    assert exp[((0, 0, 0, 0, 0, 0), 0)] == psi.series.log().truncate(20)


def test_ddz_expands_to_log_derivative():
    g = TransElement.generator("g", WIDE)
    exp = expand_to_series(apply_ddz(g), 20)
    psi, _ = families.gen_psi_phi(22)
    want = psi.series.log()._deriv_in_window(1).truncate(20)
    assert exp[((0, 0, 0, 0, 0, 0), 0)] == want


def test_label_dispatch():
    g = TransElement.generator("g", WIDE)
    G = formal_integral(Caps(4, 4))
    assert te_apply("delta(2)", g) == apply_delta(g, 2)
    assert te_apply("delta_plus(-4)", g) == apply_delta_plus(g, -4)
    assert te_apply("stokes(geq0)", G) == apply_stokes(G, "geq0")
    with pytest.raises(ValueError):
        te_apply("nonsense(1)", g)


def test_leftward_admissibility_rejection():
    bad = TransElement({(0, 1, 1): Poly.const(1)}, WIDE)
    with pytest.raises(ArithmeticError, match="admissible"):
        apply_stokes(bad, "leq0")


def test_affine_algebra_rejection():
    g = TransElement.generator("g", WIDE)
    with pytest.raises(ArithmeticError):
        g * g


def test_odd_ray_rejection():
    g = TransElement.generator("g", WIDE)
    with pytest.raises(ValueError):
        apply_delta(g, 3)
    with pytest.raises(ValueError):
        apply_delta(g, 0)


def test_far_rays_annihilate():
    x = _fuzz_element()
    for om in (4, 6, 8, -4, -6, -8):
        assert apply_delta(x, om).is_zero(), om


small_polys = st.sampled_from(
    [
        Poly.var("s2"),
        Poly.var("s1") * Poly.var("s2"),
        Poly.var("p", 2),
        Poly.var("q", 1, F(1, 3)),
        Poly.var("z", -1),
        Poly.const(F(2, 7)),
    ]
)
keys = st.tuples(
    st.sampled_from([0, 1, 2]),
    st.integers(min_value=-2, max_value=2),
    st.integers(min_value=-2, max_value=2),
)


@given(st.dictionaries(keys, small_polys, min_size=1, max_size=3))
def test_delta_is_a_derivation_fuzz(terms):
    x = TransElement(terms, WIDE)
    y = TransElement({(0, 1, 1): Poly.var("s2")}, WIDE)
    for om in (2, -2):
        assert apply_delta(x * y, om) == apply_delta(x, om) * y + x * apply_delta(y, om)


@given(st.dictionaries(keys, small_polys, min_size=1, max_size=3))
def test_rightward_stokes_invertible_fuzz(terms):
    x = TransElement(terms, WIDE)
    forward = apply_stokes(x, "geq0")
    back = apply_stokes(forward, "geq0", -1)
    assert back.truncated(Caps(6, 6)) == x.truncated(Caps(6, 6))

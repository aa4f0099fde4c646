"""Generators for the divergent series family and its free-energy relatives.

The base object is the unique formal solution with constant term one of the
linear equation

    psi'' + 2 psi' + (5/36) z^{-2} psi = 0,

a factorially divergent series psi = sum_n c_n z^{-n} whose coefficients obey

    c_{n+1} = c_n (n + 1/6)(n + 5/6) / (2(n + 1)),    c_0 = 1.

Everything else is built from it: the reflected partner phi(z) = psi(-z), the
log-series g = log psi (whose coefficients b_n encode the genus expansion via
a_{n+1} = 3^n b_n), the reflection f(z) = g(-z), and the unit ratio powers
G_n = ((-1)^{n-1}/n) (phi/psi)^n that seed the two-parameter transseries. All
coefficients are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .scalars import ExactScalar
from .series import DEFAULT_ORDER, PowerSeries

FAMILY_TAGS = ("psi", "phi", "g", "f", "G_n", "free_energy")


@dataclass(frozen=True)
class FamilySeries:
    """A tagged member of the series family."""

    tag: str
    series: PowerSeries
    n: Optional[int] = None  # only used by the G_n tower
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if (self.tag == "G_n") != (self.n is not None):
            raise ValueError("the index n is exactly for the G_n tag")

    @property
    def order(self) -> int:
        return self.series.order


def gen_c_coeffs(order: int = DEFAULT_ORDER) -> list[Fraction]:
    """c_0 .. c_order of the base series, as exact rationals.

    The closed form is a ratio of Gamma factors; consecutive ratios telescope
    to the rational recurrence used here, so no transcendental constants are
    ever needed.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    cs = [Fraction(1)]
    for n in range(order):
        cs.append(cs[-1] * Fraction(6 * n + 1, 6) * Fraction(6 * n + 5, 6) / (2 * (n + 1)))
    return cs


def _psi_by_ode_recursion(order: int) -> list[Fraction]:
    # substitute sum d_n z^{-n} into the linear equation and read off the
    # z^{-(n+2)} coefficient: n(n+1) d_n - 2(n+1) d_{n+1} + (5/36) d_n = 0
    ds = [Fraction(1)]
    for n in range(order):
        ds.append(ds[-1] * (Fraction(n * (n + 1)) + Fraction(5, 36)) / (2 * (n + 1)))
    return ds


def gen_psi_phi(order: int = DEFAULT_ORDER) -> tuple[FamilySeries, FamilySeries]:
    """The base series and its reflection, cross-checked over two routes.

    Route (a) is the closed-form coefficient ratio, route (b) the recursion
    obtained by substituting the ansatz into the linear equation. The two must
    agree exactly.
    """
    closed = gen_c_coeffs(order)
    recursed = _psi_by_ode_recursion(order)
    if closed != recursed:
        raise ArithmeticError("ODE/closed-form disagreement")
    psi = PowerSeries.from_coeffs(closed)
    phi = psi.reflect()
    return (
        FamilySeries("psi", psi),
        FamilySeries("phi", phi),
    )


def gen_g_f(order: int = DEFAULT_ORDER) -> tuple[FamilySeries, FamilySeries, list[Fraction]]:
    """g = log psi, its reflection f, and the genus coefficients a_g.

    Returns (g, f, a) where a[k] is the coefficient a_{k+2} = 3^{k+1} b_{k+1}
    of the genus expansion, so a = [a_2, a_3, ...] with order entries.
    """
    psi, _ = gen_psi_phi(order)
    g = psi.series.log()
    f = g.reflect()
    a: list[Fraction] = []
    three_pow = 1
    for n in range(1, order + 1):
        bn = g.coeff(n)
        assert bn.is_rational()
        three_pow *= 3
        a.append(three_pow * bn.re)  # a_{n+1} = 3^n b_n
    return FamilySeries("g", g), FamilySeries("f", f), a


def gen_Gn(order: int = DEFAULT_ORDER, nmax: int = 6) -> list[FamilySeries]:
    """The tower G_1 .. G_nmax with G_n = ((-1)^{n-1} / n) * (phi/psi)^n.

    G_1 is produced along two routes, exp(f - g) and phi/psi, which must agree
    exactly; the higher members follow from n (-1)^{n-1} G_n = (G_1)^n.
    """
    if nmax < 1:
        raise ValueError("nmax must be positive")
    psi, phi = gen_psi_phi(order)
    g, f, _ = gen_g_f(order)
    ratio = phi.series * psi.series.inverse()
    via_exp = (f.series - g.series).exp()
    if ratio.coeffs != via_exp.coeffs:
        raise ArithmeticError("ODE/closed-form disagreement")
    out = []
    power = PowerSeries.one(order)
    for n in range(1, nmax + 1):
        power = power * ratio
        sign = Fraction((-1) ** (n - 1), n)
        out.append(FamilySeries("G_n", power.scale(sign), n=n))
    return out


def ode_residual(series: PowerSeries, which: str) -> PowerSeries:
    """Residual window of the defining equation, exact through order N - 2.

    which = "airy_linear": psi'' + 2 psi' + (5/36) z^{-2} psi.
    which = "hae_nonlinear": g'' + (g')^2 + 2 g' + (5/36) z^{-2}; any constant
    shift of g leaves this residual unchanged.
    """
    n = series.order
    if n < 2:
        raise ValueError("need order >= 2 to form a second derivative")
    quad = PowerSeries.monomial(2, n - 2, Fraction(5, 36))
    if which == "airy_linear":
        d1 = series.diff()
        d2 = d1.diff()
        return d2 + d1.truncate(n - 2).scale(2) + quad * series.truncate(n - 2)
    if which == "hae_nonlinear":
        d1 = series.diff()
        d2 = d1.diff()
        sq = (d1 * d1).truncate(n - 2)
        return d2 + sq + d1.truncate(n - 2).scale(2) + quad
    raise ValueError(f"unknown residual kind {which!r}")

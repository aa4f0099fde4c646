"""Borel-Laplace summation, sectorial solutions, and their identity checks.

The Borel image of z^{-1} psi is the hypergeometric germ

    Bhat(zeta) = sum c_n zeta^n / n!  =  (1/2pi) int_0^1 t^{-5/6} (1-t)^{-1/6}
                                         (1 - (1-t) zeta/2)^{-1/6} dt,

holomorphic off the cut [2, oo); the mirror kernel Bhat_+(zeta) = Bhat(-zeta)
carries the cut (-oo, -2]. Directional Laplace integration of these kernels
produces the lateral sums, and every higher-level object here (the sectorial
family G, connection residuals, median-real values) is a finite composition of
those two quadratures with exact series data from the companion modules.

Direction windows are arcs of rays: theta and theta + 2pi label the same ray
and the same integral, so a shifted window such as 2pi + I_+ needs no special
bookkeeping. A negative-real z admits admissible rays in I_+ only through the
lower subarc (-pi, -pi/2); that lateral sum IS the continuation of G_+ to the
e^{2pi i} sheet edge, while I_- reaches the same point through (pi/2, pi).
The two windows therefore disambiguate the sheet by domain, which is exactly
what the left connection formula compares.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from . import families

TWO_PI = 2.0 * math.pi

INTERVALS: dict[str, tuple[float, float]] = {
    "I0": (-TWO_PI, 0.0),
    "Ipi": (-math.pi, math.pi),
    "Iplus": (-math.pi, 0.0),
    "Iminus": (0.0, math.pi),
}

# singular rays of the Borel kernels, as base angles mod 2pi
CUTS = {"psi": (0.0,), "g": (0.0,), "phi": (math.pi,), "f": (math.pi,)}

DEFAULT_QUAD_TOL = 1e-10
DEFAULT_END_TOL = 1e-6
DELTA_RAY = 0.05
THETA_MARGIN = 0.45  # preferred standoff from cuts; accuracy, not validity

_GAMMA56 = math.gamma(5.0 / 6.0)


class DomainError(ValueError):
    """Request outside the summation or solution domain."""


class BranchCutError(ValueError):
    """Evaluation on a branch cut."""


class QuadratureError(ArithmeticError):
    """Tolerance not reached; carries the best value and its error estimate."""

    def __init__(self, message: str, value=None, err: float = math.inf):
        super().__init__(message)
        self.value = value
        self.err = err


@dataclass(frozen=True)
class Direction:
    """A Laplace direction: an angle strictly inside its window."""

    theta: float
    interval: tuple[float, float]

    def __post_init__(self):
        a, b = self.interval
        if not (a < self.theta < b):
            raise DomainError("direction angle must lie strictly inside its window")


@dataclass(frozen=True)
class SumValue:
    value: complex
    err: float
    meta: dict = field(default_factory=dict)


def normalize_interval(interval) -> tuple[float, float]:
    if isinstance(interval, str):
        key = {
            "i0": "I0", "0": "I0", "lower": "I0",
            "ipi": "Ipi", "pi": "Ipi", "sym": "Ipi",
            "iplus": "Iplus", "plus": "Iplus", "+": "Iplus",
            "iminus": "Iminus", "minus": "Iminus", "-": "Iminus",
        }.get(interval.lower().replace("_", ""))
        if key is None:
            raise ValueError(f"unknown interval tag {interval!r}")
        return INTERVALS[key]
    a, b = float(interval[0]), float(interval[1])
    if not a < b:
        raise ValueError("empty interval")
    return (a, b)


def choose_theta(
    z: complex,
    interval,
    cuts: Sequence[float] = (0.0, math.pi),
    delta_ray: float = DELTA_RAY,
    theta_margin: float = THETA_MARGIN,
    decay_min: float = 1e-3,
) -> float:
    """Pick the admissible direction maximizing the decay rate Re(z e^{i theta}).

    The window is split at every cut ray it contains; within each cut-free
    subarc the steepest ray -arg z is clamped to a standoff of theta_margin
    (never less than delta_ray) from the subarc ends. Raises "domain empty"
    when no admissible ray decays.
    """
    a, b = normalize_interval(interval)
    z = complex(z)
    if z == 0:
        raise DomainError("domain empty: z = 0")
    # cut angles inside the window
    points = [a, b]
    for base in cuts:
        k0 = math.floor((a - base) / TWO_PI)
        for k in range(k0 - 1, k0 + 4):
            c = base + TWO_PI * k
            if a < c < b:
                points.append(c)
    points = sorted(set(points))
    peak = -cmath.phase(z)
    best_theta = None
    best_rate = -math.inf
    for lo, hi in zip(points[:-1], points[1:]):
        if hi - lo <= 2.0 * delta_ray:
            continue
        eff = max(delta_ray, min(theta_margin, (hi - lo) / 4.0))
        for k in range(-2, 3):
            cand = min(max(peak + TWO_PI * k, lo + eff), hi - eff)
            rate = (z * cmath.exp(1j * cand)).real
            if rate > best_rate:
                best_rate = rate
                best_theta = cand
    if best_theta is None or best_rate < decay_min:
        raise DomainError("domain empty: no admissible decaying ray in the window")
    return best_theta


# -- kernels -------------------------------------------------------------------


def eval_Ahat(zeta: complex, branch: str = "A", arg_zeta: Optional[float] = None) -> complex:
    """The algebraic Borel germ zeta^{-1/6}(1 -+ zeta/2)^{-1/6}/Gamma(5/6).

    branch "A" carries the cut [2, oo), "A_plus" the mirrored (-oo, -2].
    arg_zeta selects the sheet of the zeta^{-1/6} prefactor explicitly
    (principal value by default); the second factor is always principal.
    """
    zeta = complex(zeta)
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    if branch not in ("A", "A_plus"):
        raise ValueError("branch must be 'A' or 'A_plus'")
    if arg_zeta is None:
        arg_zeta = cmath.phase(zeta)
    pref = abs(zeta) ** (-1.0 / 6.0) * cmath.exp(-1j * arg_zeta / 6.0)
    w = 1.0 - zeta / 2.0 if branch == "A" else 1.0 + zeta / 2.0
    if w.real <= 0.0 and abs(w.imag) < 1e-13:
        raise BranchCutError("branch cut")
    return pref * w ** (-1.0 / 6.0) / _GAMMA56


@lru_cache(maxsize=None)
def _gj_nodes(n: int) -> tuple:
    # weight (1-x)^{-1/6}(1+x)^{-5/6}; with t = (x+1)/2 this absorbs the
    # endpoint factors t^{-5/6}(1-t)^{-1/6} exactly (the 2-powers cancel)
    x, w = roots_jacobi(n, -1.0 / 6.0, -5.0 / 6.0)
    return x, w


@lru_cache(maxsize=None)
def _gl_nodes(n: int) -> tuple:
    return roots_legendre(n)


@lru_cache(maxsize=None)
def _c_floats(n: int) -> tuple:
    return tuple(float(c) for c in families.gen_c_coeffs(n))


@lru_cache(maxsize=None)
def _bhat_maclaurin_coeffs(n: int) -> np.ndarray:
    cs = _c_floats(n)
    fact = 1.0
    out = np.empty(len(cs))
    for k, c in enumerate(cs):
        if k > 0:
            fact *= k
        out[k] = c / fact
    return out


_NODE_LADDER = (48, 96, 192, 384, 768)
# node noise of the high-order Jacobi rules caps certifiable agreement; the
# values themselves stay accurate to ~1e-10 well past the Maclaurin radius
_BHAT_TOL_FLOOR = 5e-11
_MACLAURIN_RADIUS = 1.5
_MACLAURIN_TERMS = 120


def _bhat_quad(zarr: np.ndarray, sign: float, n: int) -> np.ndarray:
    x, w = _gj_nodes(n)
    t = (x + 1.0) / 2.0
    base = 1.0 - sign * np.multiply.outer(zarr, 1.0 - t) / 2.0
    return (base ** (-1.0 / 6.0)) @ w / TWO_PI


def eval_Bhat(zeta, branch: str = "B", tol: float = DEFAULT_QUAD_TOL):
    """The Borel transform of z^{-1} psi (branch "B") or its mirror ("B_plus").

    Gauss-Jacobi quadrature of the convolution integral, escalating the node
    count until two refinements agree within tol; values with |zeta| <= 1.5 are
    additionally cross-checked against the exact-coefficient Maclaurin series.
    Accepts scalars or arrays.
    """
    if branch not in ("B", "B_plus"):
        raise ValueError("branch must be 'B' or 'B_plus'")
    tol = max(tol, _BHAT_TOL_FLOOR)
    sign = 1.0 if branch == "B" else -1.0
    scalar = np.isscalar(zeta) or isinstance(zeta, complex)
    zarr = np.atleast_1d(np.asarray(zeta, dtype=complex))
    on_cut = (np.abs(zarr.imag) < 1e-13) & (sign * zarr.real >= 2.0 - 1e-13)
    if np.any(on_cut):
        raise BranchCutError("branch cut")
    prev = None
    diff = math.inf
    cur = None
    for n in _NODE_LADDER:
        cur = _bhat_quad(zarr, sign, n)
        if prev is not None:
            diff = float(np.max(np.abs(cur - prev)))
            if diff < tol:
                break
        prev = cur
    else:
        raise QuadratureError(
            "quadrature failure", value=cur[0] if scalar else cur, err=diff
        )
    near = np.abs(zarr) <= _MACLAURIN_RADIUS
    if np.any(near):
        coeffs = _bhat_maclaurin_coeffs(_MACLAURIN_TERMS)
        series = np.polynomial.polynomial.polyval(sign * zarr[near], coeffs)
        mismatch = float(np.max(np.abs(series - cur[near])))
        if mismatch > max(1e-8, 100.0 * tol):
            raise QuadratureError(
                "quadrature failure: Maclaurin cross-check mismatch",
                value=cur[0] if scalar else cur,
                err=mismatch,
            )
    return complex(cur[0]) if scalar else cur


def maclaurin_borel_eval(coeffs: Sequence, radius: float = _MACLAURIN_RADIUS) -> Callable:
    """Borel-kernel evaluator sum a_n zeta^n/n! from exact series coefficients.

    Only valid inside the stated radius; the returned callable raises past it.
    Used for summing auxiliary exact series (products, derivatives) where no
    closed-form kernel is on hand.
    """
    arr = np.empty(len(coeffs))
    fact = 1.0
    for k, c in enumerate(coeffs):
        if k > 0:
            fact *= k
        arr[k] = float(c) / fact

    def kernel(zeta):
        zarr = np.atleast_1d(np.asarray(zeta, dtype=complex))
        if np.any(np.abs(zarr) > radius):
            raise DomainError("Maclaurin kernel evaluated outside its radius")
        vals = np.polynomial.polynomial.polyval(zarr, arr)
        return vals if np.ndim(zeta) else complex(vals[0])

    return kernel


# -- Laplace integration ----------------------------------------------------------


def laplace_ray(
    fhat: Callable,
    z: complex,
    theta,
    tol: float = DEFAULT_QUAD_TOL,
    growth_margin: float = 8.0,
    max_panels: int = 4000,
) -> SumValue:
    """Directional Laplace transform int_0^{e^{i theta} oo} fhat(zeta) e^{-z zeta} dzeta.

    Composite adaptive Gauss-Legendre on [0, T] with T set by the decay rate;
    each panel is accepted when 24- and 48-node values agree to the panel's
    share of tol, and the analytic tail bound is folded into the error field.
    """
    theta = theta.theta if isinstance(theta, Direction) else float(theta)
    z = complex(z)
    rate = (z * cmath.exp(1j * theta)).real
    if rate <= 1e-3:
        raise DomainError("outside half-plane: Re(z e^{i theta}) too small")
    T = (math.log(1.0 / tol) + growth_margin) / rate
    phase = cmath.exp(1j * theta)
    x24, w24 = _gl_nodes(24)
    x48, w48 = _gl_nodes(48)

    def panel(a: float, b: float, x: np.ndarray, w: np.ndarray) -> complex:
        s = (a + b) / 2.0 + (b - a) / 2.0 * x
        zs = phase * s
        vals = np.asarray(fhat(zs), dtype=complex) * np.exp(-z * zs)
        return complex((b - a) / 2.0 * (w @ vals) * phase)

    stack = [(0.0, T)]
    total = 0.0 + 0.0j
    err = 0.0
    npanels = 0
    while stack:
        a, b = stack.pop()
        v1 = panel(a, b, x24, w24)
        v2 = panel(a, b, x48, w48)
        d = abs(v1 - v2)
        if d < tol * (b - a) / T or (b - a) < 1e-9 * T:
            total += v2
            err += d
            npanels += 1
            if npanels > max_panels:
                raise QuadratureError("quadrature failure", value=total, err=err)
        else:
            m = (a + b) / 2.0
            stack.append((a, m))
            stack.append((m, b))
            if len(stack) + npanels > max_panels:
                raise QuadratureError("quadrature failure", value=total, err=err)
    tail = abs(complex(np.asarray(fhat(np.array([phase * T])))[0])) * math.exp(-rate * T) / rate
    err += tail
    return SumValue(total, err, {"theta": theta, "T": T, "panels": npanels})


# -- family sums ------------------------------------------------------------------


def _psi_kernel(tol):
    return lambda zs: eval_Bhat(zs, "B", tol)


def _phi_kernel(tol):
    return lambda zs: eval_Bhat(zs, "B_plus", tol)


def sum_family(
    name: str,
    z: complex,
    interval="Ipi",
    tol: float = DEFAULT_QUAD_TOL,
    theta: Optional[float] = None,
) -> SumValue:
    """Lateral Borel sum of psi, phi, g = log(psi-sum), or f = log(phi-sum).

    The direction is chosen automatically inside the window (away from the
    kernel's singular rays) unless theta is supplied.
    """
    if name not in ("psi", "phi", "g", "f"):
        raise ValueError("name must be one of psi, phi, g, f")
    z = complex(z)
    if theta is None:
        theta = choose_theta(z, interval, CUTS[name])
    else:
        a, b = normalize_interval(interval)
        if not (a < theta < b):
            raise DomainError("direction angle must lie strictly inside its window")
    kern = _psi_kernel(tol) if name in ("psi", "g") else _phi_kernel(tol)
    lap = laplace_ray(kern, z, theta, tol)
    val = z * lap.value
    err = abs(z) * lap.err
    meta = dict(lap.meta, family=name)
    if name in ("g", "f"):
        if val.real <= 0.0 and abs(val.imag) < 1e-13:
            raise BranchCutError("branch cut: log of a negative real sum")
        err = err / max(abs(val), 1e-30)
        val = cmath.log(val)
    return SumValue(val, err, meta)


def G_pm(
    sign,
    z: complex,
    sigma1: complex = 0.0,
    sigma2: complex = 0.0,
    tol: float = DEFAULT_END_TOL,
    theta: Optional[float] = None,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> SumValue:
    """The sectorial solution G_± = sigma_1 + log S psi + log(1 + sigma_2 e^{-2z} S phi / S psi).

    sign selects the window: "+" sums over I_+ = (-pi, 0), "-" over I_- = (0, pi).
    Both Laplace sums use one common direction. The closed-form log route and
    the partial-sum route of the defining series are compared and their
    difference is folded into the error (and must stay below tol).
    """
    sgn = {"+": "+", "plus": "+", 1: "+", "-": "-", "minus": "-", -1: "-"}.get(sign)
    if sgn is None:
        raise ValueError("sign must be '+' or '-'")
    interval = INTERVALS["Iplus"] if sgn == "+" else INTERVALS["Iminus"]
    z = complex(z)
    sigma1 = complex(sigma1)
    sigma2 = complex(sigma2)
    if sigma2 != 0 and z.real <= 0.5 * math.log(2.0 * abs(sigma2)):
        raise DomainError("outside solution domain: Re z <= (1/2) log|2 sigma_2|")
    if theta is None:
        theta = choose_theta(z, interval, (0.0, math.pi))
    else:
        a, b = interval
        if not (a < theta < b):
            raise DomainError("direction angle must lie strictly inside its window")
    spsi = laplace_ray(_psi_kernel(quad_tol), z, theta, quad_tol)
    sphi = laplace_ray(_phi_kernel(quad_tol), z, theta, quad_tol)
    psi_val = z * spsi.value
    phi_val = z * sphi.value
    if psi_val.real <= 0.0 and abs(psi_val.imag) < 1e-13:
        raise BranchCutError("branch cut: log of a negative real sum")
    ratio = sigma2 * cmath.exp(-2.0 * z) * phi_val / psi_val
    if abs(ratio) >= 0.95:
        raise DomainError("outside solution domain: exponential term not contractive")
    closed = sigma1 + cmath.log(psi_val) + cmath.log(1.0 + ratio)
    # independent route: partial sums of the defining series
    series_tail = 0.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(1, 200):
        term = term * ratio
        contrib = (-1) ** (n - 1) * term / n
        series_tail += contrib
        if abs(contrib) < 1e-14:
            break
    series = sigma1 + cmath.log(psi_val) + series_tail
    route_diff = abs(closed - series)
    err = abs(z) * (spsi.err + sphi.err) / max(abs(psi_val), 1e-30) + route_diff
    if route_diff > tol:
        raise QuadratureError(
            "quadrature failure: series and closed-form routes disagree",
            value=closed,
            err=route_diff,
        )
    return SumValue(closed, err, {"theta": theta, "sign": sgn})


# -- identity checks ---------------------------------------------------------------


def first_identity_check(z: complex, tol: float = DEFAULT_END_TOL) -> dict:
    """Residual of S^{I+} psi = S^{I-} psi - i e^{-2z} S^{Ipi} phi."""
    z = complex(z)
    a = sum_family("psi", z, "Iplus")
    b = sum_family("psi", z, "Iminus")
    c = sum_family("phi", z, "Ipi")
    lhs = a.value
    rhs = b.value - 1j * cmath.exp(-2.0 * z) * c.value
    res = abs(lhs - rhs)
    return {
        "residual": res,
        "ok": res <= tol,
        "lhs": lhs,
        "rhs": rhs,
        "err": a.err + b.err + abs(cmath.exp(-2.0 * z)) * c.err,
    }


def connection_check(
    which: str,
    z: complex,
    sigma1: complex = 0.0,
    sigma2: complex = 0.0,
    tol: float = DEFAULT_END_TOL,
) -> dict:
    """Connection-formula residual.

    right: G_+(z, s1, s2) - G_-(z, s1, s2 - i), for z near the positive axis.
    left:  G_+(e^{2pi i} z, s1, s2) - G_-(z, s1 + log(1 + i s2), s2/(1 + i s2)),
    for z near the negative axis; the e^{2pi i} edge is reached automatically
    because I_+ admits only the rays in (-pi, -pi/2) there.
    """
    z = complex(z)
    sigma1 = complex(sigma1)
    sigma2 = complex(sigma2)
    if which == "right":
        lhs = G_pm("+", z, sigma1, sigma2, tol)
        rhs = G_pm("-", z, sigma1, sigma2 - 1j, tol)
    elif which == "left":
        w = 1.0 + 1j * sigma2
        if abs(w) < 1e-9:
            raise DomainError("domain empty: 1 + i sigma_2 vanishes")
        lhs = G_pm("+", z, sigma1, sigma2, tol)
        rhs = G_pm("-", z, sigma1 + cmath.log(w), sigma2 / w, tol)
    else:
        raise ValueError("which must be 'right' or 'left'")
    res = abs(lhs.value - rhs.value)
    return {
        "residual": res,
        "ok": res <= tol,
        "lhs": lhs.value,
        "rhs": rhs.value,
        "err": lhs.err + rhs.err,
    }


def median_real_check(
    x: float,
    a: float,
    b: float = 0.0,
    ray: str = "arg0",
    theta: float = 0.0,
    tol: float = 1e-8,
) -> tuple[complex, float]:
    """Median-summation reality: the designated G_- value must be real.

    arg0:  G_-(x, a, b - i/2) along the positive axis.
    argpi: G_-(x e^{-i pi}, a - i theta/2, -i(1 - e^{i theta})) along the
           negative axis; theta = 0 collapses to the sigma_2 = 0 slice.
    """
    if x <= 0:
        raise DomainError("x must be positive")
    if ray == "arg0":
        val = G_pm("-", x, a, b - 0.5j, quad_tol=1e-11).value
    elif ray == "argpi":
        z = x * cmath.exp(-1j * math.pi)
        sigma2 = -1j * (1.0 - cmath.exp(1j * theta))
        val = G_pm("-", z, a - 1j * theta / 2.0, sigma2, quad_tol=1e-11).value
    else:
        raise ValueError("ray must be 'arg0' or 'argpi'")
    return val, abs(val.imag)


def check_homomorphism(z: complex, order: int = 60, tol: float = DEFAULT_END_TOL) -> dict:
    """|S(psi phi) - S psi . S phi| with the product summed by its own Borel data.

    The product kernel is only available as an exact Maclaurin series, so |z|
    must be large enough that the truncation radius T stays inside it.
    """
    z = complex(z)
    theta = choose_theta(z, "Ipi", (0.0, math.pi))
    rate = (z * cmath.exp(1j * theta)).real
    T = (math.log(1.0 / DEFAULT_QUAD_TOL) + 8.0) / rate
    if T > _MACLAURIN_RADIUS:
        raise DomainError("Maclaurin route needs larger |z| at this tolerance")
    psi, phi = families.gen_psi_phi(order)
    prod = psi.series * phi.series
    kern = maclaurin_borel_eval(prod.coeffs)
    lhs = z * laplace_ray(kern, z, theta).value
    spsi = z * laplace_ray(_psi_kernel(DEFAULT_QUAD_TOL), z, theta).value
    sphi = z * laplace_ray(_phi_kernel(DEFAULT_QUAD_TOL), z, theta).value
    res = abs(lhs - spsi * sphi)
    return {"residual": res, "ok": res <= tol, "theta": theta}


def check_derivation(z: complex, h: float = 0.005, tol: float = 1e-5) -> dict:
    """5-point d/dz of S g against the summed derivative S(g') = S psi'/S psi."""
    z = complex(z)
    theta = choose_theta(z, "Iminus", (0.0, math.pi))

    def sg(zz: complex) -> complex:
        return sum_family("g", zz, "Iminus", theta=theta).value

    fd = (-sg(z + 2 * h) + 8 * sg(z + h) - 8 * sg(z - h) + sg(z - 2 * h)) / (12 * h)
    kern = _psi_kernel(DEFAULT_QUAD_TOL)
    kern_moment = lambda zs: -zs * eval_Bhat(zs, "B", DEFAULT_QUAD_TOL)
    spsi = z * laplace_ray(kern, z, theta).value
    spsi_prime = laplace_ray(kern, z, theta).value + z * laplace_ray(kern_moment, z, theta).value
    exact = spsi_prime / spsi
    res = abs(fd - exact)
    return {"residual": res, "ok": res <= tol, "theta": theta}


def check_reflection(z: complex, sigma1: complex, sigma2: complex, tol=DEFAULT_END_TOL) -> dict:
    """conj G_-(z, s1, s2) = G_+(conj z, conj s1, conj s2)."""
    lhs = G_pm("-", z, sigma1, sigma2)
    rhs = G_pm("+", complex(z).conjugate(), complex(sigma1).conjugate(), complex(sigma2).conjugate())
    res = abs(lhs.value.conjugate() - rhs.value)
    return {"residual": res, "ok": res <= tol}


def gpm_ode_residual(sign, z: complex, sigma1: complex, sigma2: complex, h: float = 1e-3) -> float:
    """5-point finite-difference residual of G'' + (G')^2 + 2G' + 5/(36 z^2)."""
    z = complex(z)
    theta = choose_theta(z, INTERVALS["Iplus"] if str(sign) in ("+", "plus", "1") else INTERVALS["Iminus"], (0.0, math.pi))
    vals = {}
    for k in (-2, -1, 0, 1, 2):
        vals[k] = G_pm(sign, z + k * h, sigma1, sigma2, theta=theta, quad_tol=1e-11).value
    d1 = (-vals[2] + 8 * vals[1] - 8 * vals[-1] + vals[-2]) / (12 * h)
    d2 = (-vals[2] + 16 * vals[1] - 30 * vals[0] + 16 * vals[-1] - vals[-2]) / (12 * h * h)
    return abs(d2 + d1 * d1 + 2 * d1 + 5.0 / (36.0 * z * z))


# -- diagnostics -------------------------------------------------------------------


def singularity_locate(coeffs: Sequence, method: str = "ratio"):
    """Nearest Borel-plane singularity of ghat(zeta) = sum b_{n+1} zeta^n / n!.

    Input is the exact list b_1, b_2, ... of series coefficients. The ratio
    route returns n b_n / b_{n+1} at the deepest available index; the Pade
    route returns the smallest-modulus pole of a near-diagonal approximant.
    Entire input (no finite singularity) is flagged with complex infinity.
    """
    if len(coeffs) < 40:
        raise ValueError("need at least 40 coefficients")
    if method == "ratio":
        tail = []
        for n in range(len(coeffs) - 10, len(coeffs) - 1):
            bn, bn1 = coeffs[n - 1], coeffs[n]
            if bn1 == 0:
                raise ValueError("zero coefficient in ratio window")
            tail.append(n * bn / bn1)
        vals = [complex(t) for t in tail]
        # a finite singularity gives a drift of O(1/n^2) per step across the
        # tail window; an entire function's ratios keep growing without bound
        drift = abs(vals[-1] - vals[0]) / max(abs(vals[-1]), 1e-30)
        increasing = all(abs(vals[i + 1]) > abs(vals[i]) for i in range(len(vals) - 1))
        if drift > 0.05 and increasing:
            return complex(math.inf, 0.0)
        return vals[-1]
    if method == "pade":
        # Borel data d_n = b_{n+1}/n! kept exact; the [L/M] denominator system
        # sum_j q_j d_{L+k-j} = -d_{L+k} is solved over the rationals, because
        # in double precision it is ill-conditioned beyond tiny M
        d = []
        fact = Fraction(1)
        for n, bc in enumerate(coeffs):
            if n > 0:
                fact *= n
            d.append(_as_fraction(bc) / fact)
        M = min(10, len(d) // 4)
        # entire input has no finite radius: the tail ratios |d_{n-1}/d_n|
        # keep growing instead of stabilizing, and any Pade pole is spurious
        tail_r = []
        for n in range(len(d) - 10, len(d)):
            if d[n] == 0 or d[n - 1] == 0:
                tail_r = []
                break
            tail_r.append(abs(complex(d[n - 1])) / abs(complex(d[n])))
        if tail_r:
            drift = (tail_r[-1] - tail_r[0]) / max(tail_r[-1], 1e-30)
            increasing = all(b > a for a, b in zip(tail_r, tail_r[1:]))
            if drift > 0.05 and increasing:
                return complex(math.inf, 0.0)
        # a genuine pole is also stable under a change of denominator degree
        first = _pade_smallest_pole(d, M)
        second = _pade_smallest_pole(d, M - 1)
        if first is None or second is None:
            return complex(math.inf, 0.0)
        if abs(first - second) > 0.25 * abs(first):
            return complex(math.inf, 0.0)
        return first
    raise ValueError("method must be 'ratio' or 'pade'")


def _pade_smallest_pole(d: list, M: int):
    L = len(d) - 1 - M
    A = [[d[L + k - j] for j in range(1, M + 1)] for k in range(1, M + 1)]
    rhs = [-d[L + k] for k in range(1, M + 1)]
    q = _solve_exact(A, rhs)
    if q is None:
        return None
    poly = np.array([float(qj) for qj in reversed(q)] + [1.0])
    roots = np.roots(poly)
    roots = roots[np.isfinite(roots)]
    if len(roots) == 0:
        return None
    smallest = roots[np.argmin(np.abs(roots))]
    if abs(smallest) > 1e6:
        return None
    return complex(smallest)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if hasattr(c, "re") and hasattr(c, "im"):
        if c.im != 0:
            raise ValueError("Pade route needs real coefficients")
        return Fraction(c.re)
    return Fraction(c)


def _solve_exact(A: list, rhs: list):
    """Gaussian elimination over the rationals; None on a singular system."""
    n = len(rhs)
    M = [row[:] + [rhs[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def airy_oracle(w: complex) -> complex:
    """Ai(w) by its Maclaurin series; independent test oracle, |w| <= 10."""
    w = complex(w)
    if abs(w) > 10.0:
        raise DomainError("oracle validated only for |w| <= 10")
    c1 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
    c2 = 3.0 ** (-1.0 / 3.0) / math.gamma(1.0 / 3.0)
    # two entire solutions of y'' = w y with a_{k+3} = a_k / ((k+2)(k+3))
    total_f = term = 1.0 + 0.0j
    k = 0
    w3 = w * w * w
    while abs(term) > 1e-20 and k < 300:
        term = term * w3 / ((k + 2.0) * (k + 3.0))
        total_f += term
        k += 3
    total_g = term = w
    k = 1
    while abs(term) > 1e-20 and k < 300:
        term = term * w3 / ((k + 2.0) * (k + 3.0))
        total_g += term
        k += 3
    return c1 * total_f - c2 * total_g


def gevrey_check(
    z: complex,
    interval="Iminus",
    n_max: int = 40,
    coeffs: Optional[Sequence] = None,
) -> dict:
    """Truncation-error table |S g(z) - sum_{n<N} b_n z^{-n}| for N = 1..n_max.

    With a custom convergent coefficient list, the reference value is the
    numerically converged direct sum instead of a Borel sum; the table then
    decreases monotonically instead of showing an optimal truncation.
    """
    z = complex(z)
    if coeffs is None:
        if abs(z) < 5.0:
            raise DomainError("need |z| >= 5 for a clean profile")
        g = families.gen_g_f(max(n_max + 2, 16))[0].series
        bs = [complex(c) for c in g.coeffs]
        ref = sum_family("g", z, interval).value
    else:
        bs = [complex(c) for c in coeffs]
        full = sum(b * z ** (-n) for n, b in enumerate(bs))
        ref = full
    errors = []
    partial = 0.0 + 0.0j
    for n_next in range(1, n_max + 1):
        # error of the sum over n < n_next
        errors.append(abs(ref - partial))
        if n_next < len(bs):
            partial += bs[n_next] * z ** (-n_next)
        else:
            partial += 0.0
    idx = min(range(len(errors)), key=lambda i: errors[i])
    unimodal = all(
        errors[i + 1] < errors[i] * 1.05 for i in range(idx)
    ) and all(errors[i + 1] > errors[i] * 0.95 for i in range(idx, len(errors) - 1))
    return {
        "N": list(range(1, n_max + 1)),
        "errors": errors,
        "argmin_N": idx + 1,
        "unimodal": unimodal,
        "expected_min_near": 2.0 * abs(z),
    }

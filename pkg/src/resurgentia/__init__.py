"""resurgentia: exact and numerical resurgence toolkit.

Exact layer: formal power series in z^{-1} over (Gaussian) rationals, the
divergent solution family of a damped linear equation and its log/free-energy
relatives, and a symbolic alien-derivation engine in which bridge equations
and Stokes automorphisms are algebraic identities.

Numeric layer: Borel kernels in closed form, directional Laplace summation,
lateral connection formulas, median-summation reality checks, and the
large-radius tower obtained by a change of variable to the string coupling.
"""

from .scalars import ExactScalar
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    ps_arith,
    ps_compose,
    ps_diff,
    ps_log_exp,
)
from .families import (
    FamilySeries,
    gen_Gn,
    gen_c_coeffs,
    gen_g_f,
    gen_psi_phi,
    ode_residual,
)
from .alien import (
    Caps,
    CompositionContext,
    Poly,
    TransElement,
    apply_ddz,
    apply_delta,
    apply_delta_plus,
    apply_stokes,
    bridge_check,
    companion_F,
    deltaplus_table,
    expand_to_series,
    formal_integral,
    stokes_action_check,
    te_apply,
)
from .borel import (
    BranchCutError,
    Direction,
    DomainError,
    G_pm,
    QuadratureError,
    SumValue,
    airy_oracle,
    check_derivation,
    check_homomorphism,
    check_reflection,
    choose_theta,
    connection_check,
    eval_Ahat,
    eval_Bhat,
    first_identity_check,
    gevrey_check,
    laplace_ray,
    median_real_check,
    singularity_locate,
    sum_family,
)
from .largeradius import (
    UCoeffSeries,
    ULaurent,
    gen_H0,
    gen_Hn,
    gen_phi_u,
    gen_R,
    lambda_s_squared,
    lr_bridge_check,
    lr_connection_check,
    lr_stokes_check,
    lr_sum,
    lr_transseries,
    make_context,
    u_equation_residual,
)
from .config import ENV_VAR, RunConfig, load_config_file, resolve_config

__version__ = "0.1.0"

__all__ = [
    "BranchCutError",
    "Caps",
    "CompositionContext",
    "DEFAULT_ORDER",
    "Direction",
    "DomainError",
    "ENV_VAR",
    "ExactScalar",
    "FamilySeries",
    "G_pm",
    "Poly",
    "PowerSeries",
    "QuadratureError",
    "RunConfig",
    "SumValue",
    "TransElement",
    "UCoeffSeries",
    "ULaurent",
    "airy_oracle",
    "apply_ddz",
    "apply_delta",
    "apply_delta_plus",
    "apply_stokes",
    "bridge_check",
    "check_derivation",
    "check_homomorphism",
    "check_reflection",
    "choose_theta",
    "companion_F",
    "connection_check",
    "deltaplus_table",
    "eval_Ahat",
    "eval_Bhat",
    "expand_to_series",
    "first_identity_check",
    "formal_integral",
    "gen_Gn",
    "gen_H0",
    "gen_Hn",
    "gen_c_coeffs",
    "gen_g_f",
    "gen_phi_u",
    "gen_psi_phi",
    "gen_R",
    "gevrey_check",
    "lambda_s_squared",
    "laplace_ray",
    "load_config_file",
    "lr_bridge_check",
    "lr_connection_check",
    "lr_stokes_check",
    "lr_sum",
    "lr_transseries",
    "make_context",
    "median_real_check",
    "ode_residual",
    "ps_arith",
    "ps_compose",
    "ps_diff",
    "ps_log_exp",
    "resolve_config",
    "singularity_locate",
    "sum_family",
    "te_apply",
    "u_equation_residual",
    "__version__",
]

"""Hankel positivity toolkit.

Positive measures, their Widom boundedness constants, Pick functions and
bounded boundary symbols, outer factors, and finite Hankel sections — with the
transport and polar identities tying the half-plane and disc pictures
together, and a CLI (``hankelpos``) over JSON measure descriptions.
"""

import os as _os

# Thread cap for the BLAS pools behind the eigen-solvers.  Must run before
# numpy is first imported anywhere in the process to take effect.
_threads = _os.environ.get("HANKELPOS_THREADS", "").strip()
if _threads.isdigit() and int(_threads) > 0:
    for _var in (
        "OMP_NUM_THREADS",
        "OPENBLAS_NUM_THREADS",
        "MKL_NUM_THREADS",
        "NUMEXPR_NUM_THREADS",
    ):
        _os.environ.setdefault(_var, _threads)
del _os, _threads

from .quadrature import (  # noqa: E402
    QuadratureError,
    integrate,
    integrate_halfline,
    integrate_real_line,
)
from .measures import (  # noqa: E402
    Atom,
    CayleyPiece,
    GridSpec,
    Measure,
    MeasureSpecError,
    PowerPiece,
    WidomReport,
    atom,
    cayley_pushforward,
    disc_measure,
    halfplane_measure,
    laplace_transform,
    lebesgue_piece,
    load_measure,
    mass_interval,
    measure_from_spec,
    measure_to_spec,
    moment,
    moments,
    power_piece,
    rho_interval,
    rho_total,
    total_mass,
    widom_check,
)
from .kernels import (  # noqa: E402
    TWO_PI,
    DomainPoint,
    HardyCoeffs,
    cayley_map,
    circle_nodes,
    circle_quadrature,
    disc_point,
    gamma2_eval,
    halfplane_point,
    hardy_coeffs,
    poisson,
    sqrt_cayley_derivative,
    szego,
    szego_disc,
    szego_halfplane,
)
from .pick import (  # noqa: E402
    SymbolSamples,
    default_symbol_grid,
    delta_samples,
    delta_values,
    kappa,
    psi_mu,
    psi_mu_values,
    symbol_bound,
    symbol_h,
    symbol_h_samples,
    symbol_h_values,
    symbol_samples_csv,
)
from .outer import (  # noqa: E402
    BoundaryWeight,
    constant_weight,
    delta_modulus_weight,
    g_from_delta,
    outer_eval,
    rational_modulus_weight,
    reflect_weight,
    weighted_szego,
)
from .hankel import (  # noqa: E402
    OSContractionReport,
    PolarReport,
    PositivityCertificate,
    SupportReport,
    TransportReport,
    contraction_check,
    disc_to_hp_symbol,
    hilbert_section,
    hp_to_disc_symbol,
    norm_estimate,
    polar_decomposition_check,
    positivity_certificate,
    quadratic_form,
    section_from_measure,
    section_from_moments,
    section_from_symbol_disc,
    support_sign_test,
    symbol_kernel,
    verify_rp_transport,
)
from .verify import SuiteResult, run_suites  # noqa: E402

__version__ = "0.1.0"

__all__ = [
    "QuadratureError",
    "integrate",
    "integrate_halfline",
    "integrate_real_line",
    "Atom",
    "CayleyPiece",
    "GridSpec",
    "Measure",
    "MeasureSpecError",
    "PowerPiece",
    "WidomReport",
    "atom",
    "cayley_pushforward",
    "disc_measure",
    "halfplane_measure",
    "laplace_transform",
    "lebesgue_piece",
    "load_measure",
    "mass_interval",
    "measure_from_spec",
    "measure_to_spec",
    "moment",
    "moments",
    "power_piece",
    "rho_interval",
    "rho_total",
    "total_mass",
    "widom_check",
    "TWO_PI",
    "DomainPoint",
    "HardyCoeffs",
    "cayley_map",
    "circle_nodes",
    "circle_quadrature",
    "disc_point",
    "gamma2_eval",
    "halfplane_point",
    "hardy_coeffs",
    "poisson",
    "sqrt_cayley_derivative",
    "szego",
    "szego_disc",
    "szego_halfplane",
    "SymbolSamples",
    "default_symbol_grid",
    "delta_samples",
    "delta_values",
    "kappa",
    "psi_mu",
    "psi_mu_values",
    "symbol_bound",
    "symbol_h",
    "symbol_h_samples",
    "symbol_h_values",
    "symbol_samples_csv",
    "BoundaryWeight",
    "constant_weight",
    "delta_modulus_weight",
    "g_from_delta",
    "outer_eval",
    "rational_modulus_weight",
    "reflect_weight",
    "weighted_szego",
    "OSContractionReport",
    "PolarReport",
    "PositivityCertificate",
    "SupportReport",
    "TransportReport",
    "contraction_check",
    "disc_to_hp_symbol",
    "hilbert_section",
    "hp_to_disc_symbol",
    "norm_estimate",
    "polar_decomposition_check",
    "positivity_certificate",
    "quadratic_form",
    "section_from_measure",
    "section_from_moments",
    "section_from_symbol_disc",
    "support_sign_test",
    "symbol_kernel",
    "verify_rp_transport",
    "SuiteResult",
    "run_suites",
    "__version__",
]

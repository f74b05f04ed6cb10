"""Bound states of the D-dimensional Manning-Rosen potential.

Closed-form spectra and normalized wavefunctions, cross-validated by an
independent finite-difference eigensolver of the radial equation.
"""

from .errors import (ConvergenceError, DomainError, LabelError, NoMinimumError,
                     NormalizationError, UnboundStateError)
from .model import (CentrifugalMode, PotentialParams, QuantumState,
                    effective_potential, potential_curvature, potential_minimum,
                    potential_value)
from .oracle import (AuditResult, OracleResult, RadialGrid, approximation_audit,
                     default_grid, solve_radial, sturm_count)
from .specfun import QuadratureRule, gauss_legendre, jacobi, ln_gamma
from .spectrum import (SpectrumEntry, bound_states, coulomb_limit_energy,
                       critical_coupling, degenerate_partners, energy,
                       epsilon_parameter, hulthen_energy, parse_spectroscopic,
                       screened_coulomb_coupling, shape_parameter, state_label)
from .wavefun import (AngularMultiIndex, RadialSolution, angular_factor,
                      normalization_closed_form, normalization_quadrature,
                      radial_wavefunction, total_wavefunction)

__version__ = "0.1.0"

__all__ = [
    "AngularMultiIndex",
    "AuditResult",
    "CentrifugalMode",
    "ConvergenceError",
    "DomainError",
    "LabelError",
    "NoMinimumError",
    "NormalizationError",
    "OracleResult",
    "PotentialParams",
    "QuadratureRule",
    "QuantumState",
    "RadialGrid",
    "RadialSolution",
    "SpectrumEntry",
    "UnboundStateError",
    "angular_factor",
    "approximation_audit",
    "bound_states",
    "coulomb_limit_energy",
    "critical_coupling",
    "default_grid",
    "degenerate_partners",
    "effective_potential",
    "energy",
    "epsilon_parameter",
    "gauss_legendre",
    "hulthen_energy",
    "jacobi",
    "ln_gamma",
    "normalization_closed_form",
    "normalization_quadrature",
    "parse_spectroscopic",
    "potential_curvature",
    "potential_minimum",
    "potential_value",
    "radial_wavefunction",
    "screened_coulomb_coupling",
    "shape_parameter",
    "solve_radial",
    "state_label",
    "sturm_count",
    "total_wavefunction",
]

from monopole_spectra.quadrature import GridFunction

from .angular import angular_momentum_check
from .gauge import GaugeField, flux_integral
from .hamiltonian import (
    apply_hamiltonian,
    apply_hamiltonian_u,
    hamiltonian_image_exponents,
    hamiltonian_matrix_element,
    hermiticity_defect,
)
from .supercharges import (
    SusyResiduals,
    apply_Q,
    apply_Q_grid,
    apply_Qbar,
    apply_Qbar_grid,
    susy_algebra_residuals,
)

__all__ = [
    "GaugeField",
    "GridFunction",
    "SusyResiduals",
    "angular_momentum_check",
    "apply_Q",
    "apply_Q_grid",
    "apply_Qbar",
    "apply_Qbar_grid",
    "apply_hamiltonian",
    "apply_hamiltonian_u",
    "flux_integral",
    "hamiltonian_image_exponents",
    "hamiltonian_matrix_element",
    "hermiticity_defect",
    "susy_algebra_residuals",
]

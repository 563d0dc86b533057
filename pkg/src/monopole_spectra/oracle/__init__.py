from .discretization import Boundary, DiscretizationSpec, Method
from .counterexamples import (
    S3LaplacianReport,
    WittenReport,
    s3_laplacian_check,
    witten_sqm_check,
)
from .rayleigh_ritz import RitzResult, rayleigh_ritz_eigen
from .sturm_liouville import (
    RadialTower,
    SturmLiouvilleResult,
    admissible_towers,
    jacobi_fd_eigenvalues,
    sturm_liouville_eigen,
)

__all__ = [
    "Boundary",
    "DiscretizationSpec",
    "Method",
    "RadialTower",
    "RitzResult",
    "S3LaplacianReport",
    "SturmLiouvilleResult",
    "WittenReport",
    "admissible_towers",
    "jacobi_fd_eigenvalues",
    "rayleigh_ritz_eigen",
    "s3_laplacian_check",
    "sturm_liouville_eigen",
    "witten_sqm_check",
]

"""Numerical toolkit for bounded symmetric anti-linear operators.

Covers spectral-data extraction (nodes, weights, phases), the block
functional model, anti-linear Lanczos and Gram-Schmidt tridiagonalisation
into complex Jacobi parameters, the Autonne-Takagi factorisation, and the
fully solvable delta-coupling example.
"""

from .errors import InvalidDataError, NumericError
from .polynomials import (
    ComplexPolynomial,
    chebyshev_T,
    chebyshev_U,
    evaluate,
    parity_split,
    star,
)
from .spectral import (
    NodeClass,
    SpectralData,
    classify,
    equivalent,
    gauge_transform,
    model_dimension,
    sesquilinear_form,
    validate,
)
from .operators import (
    AntiLinearOperator,
    JacobiParameters,
    LanczosResult,
    ModulusSpectrum,
    apply,
    apply_polynomial,
    check_symmetry,
    extract_spectral_data,
    jacobi_to_operator,
    lanczos_tridiagonalize,
    modulus_spectrum,
    operator_norm,
    square,
    takagi,
)
from .model import ModelSpace, ModelVerification, build_model, model_cyclic_vector, verify_model
from .orthopoly import (
    GramSchmidtResult,
    gram_schmidt,
    recurrence_generate,
    verify_anti_orthogonality,
)
from . import delta_potential

__version__ = "0.1.0"

__all__ = [
    "AntiLinearOperator",
    "ComplexPolynomial",
    "GramSchmidtResult",
    "InvalidDataError",
    "JacobiParameters",
    "LanczosResult",
    "ModelSpace",
    "ModelVerification",
    "ModulusSpectrum",
    "NodeClass",
    "NumericError",
    "SpectralData",
    "apply",
    "apply_polynomial",
    "build_model",
    "check_symmetry",
    "chebyshev_T",
    "chebyshev_U",
    "classify",
    "delta_potential",
    "equivalent",
    "evaluate",
    "extract_spectral_data",
    "gauge_transform",
    "gram_schmidt",
    "jacobi_to_operator",
    "lanczos_tridiagonalize",
    "model_cyclic_vector",
    "model_dimension",
    "modulus_spectrum",
    "operator_norm",
    "parity_split",
    "recurrence_generate",
    "sesquilinear_form",
    "square",
    "star",
    "takagi",
    "validate",
    "verify_anti_orthogonality",
]

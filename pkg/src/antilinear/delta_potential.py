"""Closed forms for the free Jacobi matrix with a complex delta coupling.

The operator is the tridiagonal matrix with unit off-diagonals and a single
complex diagonal entry omega at site 0.  Its spectral data is known exactly:
an absolutely continuous part on [0, 2] with density

    (|omega|^2 + 1) / pi * sqrt(4 - s^2) / ((1 + |omega|^2)^2 - |omega|^2 s^2),

a point mass at |omega| + 1/|omega| (present iff |omega| > 1) with weight
1 - 1/|omega|^2 and phase omega/|omega|, and the phase function
psi(s) = omega * s / (1 + |omega|^2) on [0, 2].  The module also carries the
resolvent entries and Cauchy-Stieltjes transforms in the Joukowsky variable,
the Chebyshev representation of the recurrence polynomials, and a quadrature
discretisation feeding the generic pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.linalg import solve_banded

from .errors import InvalidDataError, NumericError
from .operators import AntiLinearOperator, JacobiParameters, jacobi_to_operator
from .orthopoly import recurrence_generate
from .polynomials import chebyshev_T, chebyshev_U, evaluate
from .spectral import SpectralData

SUPPORT_MAX = 2.0
POLE_TOL = 1e-12
RENORM_HARD_LIMIT = 1e-3
#: |2 - s^2| below this switches the Chebyshev form to the recurrence path.
CHEB_SINGULARITY_TOL = 1e-6


@dataclass(frozen=True)
class DeltaAtom:
    location: float
    weight: float
    phase: complex


@dataclass(frozen=True)
class Discretization:
    data: SpectralData
    renormalization: float  # factor applied to make the weights sum to 1
    mode: str


def _check_support(s) -> np.ndarray:
    arr = np.asarray(s, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > SUPPORT_MAX):
        raise InvalidDataError("s must lie in [0, 2]")
    return arr


def density(s, omega: complex):
    """Density of the absolutely continuous part on [0, 2]."""
    arr = _check_support(s)
    aw = abs(omega) ** 2
    # (1 + aw)^2 - aw s^2 rewritten to avoid cancellation near aw = 1, s = 2
    num = np.sqrt((SUPPORT_MAX - arr) * (SUPPORT_MAX + arr))
    den = (1.0 - aw) ** 2 + aw * (SUPPORT_MAX - arr) * (SUPPORT_MAX + arr)
    out = (aw + 1.0) / np.pi * num / den
    return float(out) if np.isscalar(s) else out


def atom(omega: complex) -> DeltaAtom | None:
    """Point mass of the singular part; present only for |omega| > 1."""
    mod = abs(omega)
    if mod <= 1.0:
        return None
    return DeltaAtom(
        location=mod + 1.0 / mod,
        weight=(mod**2 - 1.0) / mod**2,
        phase=omega / mod,
    )


def phase(s, omega: complex):
    """Phase function on the continuous spectrum [0, 2]."""
    arr = _check_support(s)
    out = omega * arr / (1.0 + abs(omega) ** 2)
    return complex(out) if np.isscalar(s) else out


def discretize(omega: complex, M: int, mode: str = "chebyshev") -> Discretization:
    """Quadrature discretisation of the spectral data on M continuum nodes.

    mode "chebyshev" substitutes s = 2 sin(theta), absorbing the
    sqrt(4 - s^2) edge factor, and applies Gauss-Legendre in theta; it stays
    accurate for every omega, including |omega| = 1 where the density picks
    up an inverse square-root edge.  mode "legendre" is the plain
    Gauss-Legendre rule on [0, 2].
    """
    if M < 2:
        raise InvalidDataError("M must be at least 2")
    aw = abs(omega) ** 2
    if mode == "chebyshev":
        x, gw = leggauss(M)
        theta = (x + 1.0) * (np.pi / 4.0)
        cos2 = np.cos(theta) ** 2
        s = 2.0 * np.sin(theta)
        w = (aw + 1.0) * gw * cos2 / ((1.0 - aw) ** 2 + 4.0 * aw * cos2)
    elif mode == "legendre":
        x, gw = leggauss(M)
        s = 1.0 + x
        w = density(s, omega) * gw
    else:
        raise InvalidDataError(f"unknown quadrature mode {mode!r}")

    nodes = list(s)
    weights = list(w)
    phases = list(phase(s, omega))
    pm = atom(omega)
    if pm is not None:
        nodes.append(pm.location)
        weights.append(pm.weight)
        phases.append(pm.phase)

    total = float(np.sum(weights))
    factor = 1.0 / total
    if abs(factor - 1.0) > RENORM_HARD_LIMIT:
        raise NumericError(
            f"quadrature mass {total:.12g} too far from 1; density or rule is broken"
        )
    weights = [wj * factor for wj in weights]
    return Discretization(SpectralData(nodes, weights, phases), factor, mode)


def _resolvent_denominator(xi: complex, omega: complex) -> complex:
    if not 0.0 < abs(xi) < 1.0:
        raise InvalidDataError("xi must satisfy 0 < |xi| < 1")
    den = (1.0 + xi) * (1.0 - abs(omega) ** 2 * xi)
    if abs(den) < POLE_TOL:
        raise NumericError(f"xi = {xi} is too close to a resolvent pole")
    return den


def resolvent_00(xi: complex, omega: complex) -> complex:
    """Entry (0,0) of (2 + xi + 1/xi - J J*)^{-1} in the volume limit."""
    return xi / _resolvent_denominator(xi, omega)


def resolvent_01(xi: complex, omega: complex) -> complex:
    """Entry (0,1) of the same resolvent."""
    return omega * xi**2 / _resolvent_denominator(xi, omega)


def cauchy_nu(xi: complex, omega: complex) -> complex:
    """Cauchy-Stieltjes transform of the symmetrised measure, evaluated at
    the Joukowsky point xi + 1/xi."""
    if not 0.0 < abs(xi) < 1.0:
        raise InvalidDataError("xi must satisfy 0 < |xi| < 1")
    den = 1.0 - abs(omega) ** 2 * xi**2
    if abs(den) < POLE_TOL:
        raise NumericError(f"xi = {xi} is too close to a transform pole")
    return xi / den


def cauchy_psi(xi: complex, omega: complex) -> complex:
    """Transform of the phase-weighted (odd-extended) measure at xi + 1/xi."""
    if not 0.0 < abs(xi) < 1.0:
        raise InvalidDataError("xi must satisfy 0 < |xi| < 1")
    den = 1.0 - abs(omega) ** 2 * xi**2
    if abs(den) < POLE_TOL:
        raise NumericError(f"xi = {xi} is too close to a transform pole")
    return omega * xi * (1.0 + xi**2) / den


def cauchy_nu_from_data(data: SpectralData, xi: complex) -> complex:
    """Discrete counterpart of cauchy_nu: the symmetrised node sum."""
    z = xi + 1.0 / xi
    return complex(np.sum(data.weights * z / (z**2 - data.nodes**2)))


def cauchy_psi_from_data(data: SpectralData, xi: complex) -> complex:
    """Discrete counterpart of cauchy_psi."""
    z = xi + 1.0 / xi
    return complex(
        np.sum(data.weights * data.nodes * data.phases * z / (z**2 - data.nodes**2))
    )


def delta_parameters(omega: complex, n: int) -> JacobiParameters:
    """The exact Jacobi parameters: unit off-diagonals, omega at site 0."""
    b = np.zeros(n, dtype=complex)
    b[0] = omega
    return JacobiParameters(np.ones(n - 1), b)


def build_truncated_J(omega: complex, N: int) -> AntiLinearOperator:
    """N x N truncation of the delta-coupled Jacobi matrix."""
    if N < 1:
        raise InvalidDataError("N must be positive")
    if N == 1:
        return AntiLinearOperator(np.array([[omega]], dtype=complex))
    return jacobi_to_operator(delta_parameters(omega, N), N)


def chebyshev_q(n: int, s: float, omega: complex) -> complex:
    """Recurrence polynomial q_n at a real point via Chebyshev closed forms.

    Near the removable singularity at s^2 = 2 the evaluation falls back to
    running the recurrence itself.
    """
    if n < 0:
        raise InvalidDataError("n must be nonnegative")
    s = float(s)
    if abs(2.0 - s * s) < CHEB_SINGULARITY_TOL:
        polys = recurrence_generate(delta_parameters(omega, n + 1), n)
        return evaluate(polys[n], s)
    half = 0.5 * s
    denom = 2.0 - s * s
    if n % 2 == 0:
        t = chebyshev_T(n, half)
        u = chebyshev_U(n + 1, half)
        return ((2.0 - 2.0 * np.conj(omega) * s) * t + (2.0 * np.conj(omega) - s) * u) / denom
    t = chebyshev_T(n - 1, half)
    u = chebyshev_U(n, half)
    return (-2.0 * omega * t + (2.0 + omega * s - s * s) * u) / denom


def truncated_resolvent_entries(omega: complex, xi: complex, N: int) -> tuple[complex, complex]:
    """Entries (0,0) and (0,1) of (2 + xi + 1/xi - J J*)^{-1} on the N x N
    truncation, via a banded solve of the penta-diagonal system."""
    if N < 1:
        raise InvalidDataError("N must be positive")
    if abs(xi) == 0.0:
        raise InvalidDataError("xi must be nonzero")
    z = 2.0 + xi + 1.0 / xi
    aw = abs(omega) ** 2

    diag = np.full(N, 2.0, dtype=complex)
    diag[0] = 1.0 + aw
    if N == 1:
        diag[0] = aw
    else:
        diag[N - 1] = 1.0
    sup1 = np.zeros(max(N - 1, 0), dtype=complex)
    if N >= 2:
        sup1[0] = omega
    sup2 = np.ones(max(N - 2, 0), dtype=complex)

    ab = np.zeros((5, N), dtype=complex)
    ab[2, :] = z - diag
    if N >= 2:
        ab[1, 1:] = -sup1
        ab[3, :-1] = -np.conj(sup1)
    if N >= 3:
        ab[0, 2:] = -sup2
        ab[4, :-2] = -sup2

    rhs = np.zeros((N, 2), dtype=complex)
    rhs[0, 0] = 1.0
    if N >= 2:
        rhs[1, 1] = 1.0
    sol = solve_banded((2, 2), ab, rhs)
    return complex(sol[0, 0]), complex(sol[0, 1])

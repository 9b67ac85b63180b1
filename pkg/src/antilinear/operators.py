"""Finite symmetric anti-linear operators B: x -> A conj(x) with A = A^T.

The distinguished cyclic vector is always the first basis vector e_0.  The
module covers application and squaring, the modulus spectrum, extraction of
the (nodes, weights, phases) spectral data, anti-linear Lanczos
tridiagonalisation with full reorthogonalization, Jacobi-matrix assembly,
and the Autonne-Takagi factorisation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDataError, NumericError
from .polynomials import ComplexPolynomial
from .spectral import SpectralData

DEFAULT_TOL_CLUSTER = 1e-8
DEFAULT_TOL_BREAKDOWN = 1e-11
DEFAULT_TOL_WEIGHT = 1e-12
PHASE_CLAMP_TOL = 1e-9
WEIGHT_BALANCE_TOL = 1e-9


class AntiLinearOperator:
    """B x = A conj(x) on C^n; the cyclic vector is e_0."""

    __slots__ = ("matrix",)

    cyclic_index = 0

    def __init__(self, matrix):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidDataError(f"operator matrix must be square, got {m.shape}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("AntiLinearOperator is immutable")

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def cyclic_vector(self) -> np.ndarray:
        delta = np.zeros(self.dimension, dtype=complex)
        delta[self.cyclic_index] = 1.0
        return delta

    def __repr__(self) -> str:
        return f"AntiLinearOperator(dimension={self.dimension})"


@dataclass(frozen=True)
class JacobiParameters:
    """Off-diagonal a_n > 0 and complex diagonal b_n; len(a) = len(b) - 1."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).ravel().copy()
        b = np.asarray(self.b, dtype=complex).ravel().copy()
        if len(b) == 0:
            raise InvalidDataError("Jacobi parameters need at least one diagonal entry")
        if len(a) != len(b) - 1:
            raise InvalidDataError(
                f"need len(a) = len(b) - 1, got {len(a)} and {len(b)}"
            )
        if np.any(a <= 0.0):
            raise InvalidDataError("off-diagonal entries must be positive")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __len__(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class ModulusSpectrum:
    """Eigen-data of |B| = sqrt(A conj(A)): ascending eigenvalues, orthonormal
    eigenvector columns, and index clusters of coinciding eigenvalues."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    clusters: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LanczosResult:
    params: JacobiParameters
    basis: np.ndarray  # orthonormal Krylov vectors as columns
    exhausted: bool  # True when the cyclic subspace ran out before max_steps


def _inner(x: np.ndarray, y: np.ndarray) -> complex:
    # <x, y> linear in x, anti-linear in y
    return complex(np.vdot(y, x))


def apply(op: AntiLinearOperator, x) -> np.ndarray:
    """Evaluate B x = A conj(x)."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (op.dimension,):
        raise InvalidDataError(
            f"vector of length {x.shape} does not match dimension {op.dimension}"
        )
    return op.matrix @ np.conj(x)


def square(op: AntiLinearOperator) -> np.ndarray:
    """The linear operator B^2 = A conj(A); Hermitian PSD when A = A^T."""
    return op.matrix @ np.conj(op.matrix)


def operator_norm(op: AntiLinearOperator) -> float:
    """Largest singular value of A (= largest |B| eigenvalue)."""
    return float(np.linalg.norm(op.matrix, 2))


def check_symmetry(op: AntiLinearOperator, n_samples: int = 32, seed: int = 0) -> float:
    """Max of |<Bx, y> - <By, x>| over random unit pairs."""
    rng = np.random.default_rng(seed)
    n = op.dimension
    worst = 0.0
    for _ in range(n_samples):
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        x /= np.linalg.norm(x)
        y /= np.linalg.norm(y)
        worst = max(worst, abs(_inner(apply(op, x), y) - _inner(apply(op, y), x)))
    return worst


def _cluster_indices(values: np.ndarray, threshold: float) -> tuple[tuple[int, ...], ...]:
    clusters = []
    current = [0]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] <= threshold:
            current.append(i)
        else:
            clusters.append(tuple(current))
            current = [i]
    clusters.append(tuple(current))
    return tuple(clusters)


def modulus_spectrum(
    op: AntiLinearOperator, tol_cluster: float = DEFAULT_TOL_CLUSTER
) -> ModulusSpectrum:
    """Eigendecomposition of B^2 with eigenvalues mapped to |B| scale and
    grouped into clusters by the gap threshold tol_cluster * (1 + max)."""
    vals, vecs = np.linalg.eigh(square(op))
    if np.any(vals < -1e-10 * max(1.0, abs(vals[-1]))):
        raise NumericError(f"B^2 has a significantly negative eigenvalue {vals[0]:.3e}")
    s = np.sqrt(np.clip(vals, 0.0, None))
    threshold = tol_cluster * (1.0 + s[-1])
    return ModulusSpectrum(s, vecs, _cluster_indices(s, threshold))


def extract_spectral_data(
    op: AntiLinearOperator,
    tol_cluster: float = DEFAULT_TOL_CLUSTER,
    tol_weight: float = DEFAULT_TOL_WEIGHT,
    assert_cyclic: bool = True,
    cyclic: np.ndarray | None = None,
) -> SpectralData:
    """Spectral data of B at the cyclic vector (e_0 unless one is passed;
    the functional model hands in its weighted indicator here).

    Per eigenvalue cluster with value s and projection P the weight is
    w = ||P delta||^2 and, for s > 0, the phase is
    psi = <P B delta, delta>/(s w); a zero cluster carries psi = 1 by
    convention.  Clusters of weight below tol_weight are dropped.
    """
    delta = _cyclic_vector(op, cyclic)
    spec = modulus_spectrum(op, tol_cluster)
    delta_ampl = spec.eigenvectors.T @ np.conj(delta)  # <v_i, delta> per column
    b_delta = apply(op, delta)
    b_ampl = spec.eigenvectors.conj().T @ b_delta  # <B delta, v_i> per column
    zero_threshold = tol_cluster * (1.0 + spec.eigenvalues[-1])

    nodes, weights, phases = [], [], []
    for cluster in spec.clusters:
        idx = list(cluster)
        w = float(np.sum(np.abs(delta_ampl[idx]) ** 2))
        if w < tol_weight:
            continue
        s = float(np.mean(spec.eigenvalues[idx]))
        if s <= zero_threshold:
            s, psi = 0.0, 1.0 + 0j
        else:
            if assert_cyclic and len(idx) > 2:
                raise NumericError(
                    f"cluster at s = {s:.6g} has multiplicity {len(idx)} > 2; "
                    "e_0 cannot be cyclic"
                )
            psi = complex(np.sum(b_ampl[idx] * delta_ampl[idx])) / (s * w)
            mod = abs(psi)
            if mod > 1.0 + PHASE_CLAMP_TOL:
                raise NumericError(
                    f"extracted |psi| = {mod:.12g} > 1 at s = {s:.6g}; broken "
                    "symmetry or clustering failure"
                )
            if mod > 1.0:
                psi /= mod
        nodes.append(s)
        weights.append(w)
        phases.append(psi)

    total = sum(weights)
    if abs(total - 1.0) > WEIGHT_BALANCE_TOL:
        raise NumericError(f"extracted weights sum to {total:.12g}, not 1")
    weights = [w / total for w in weights]
    return SpectralData(nodes, weights, phases)


def lanczos_tridiagonalize(
    op: AntiLinearOperator,
    max_steps: int | None = None,
    tol_breakdown: float = DEFAULT_TOL_BREAKDOWN,
) -> LanczosResult:
    """Anti-linear Lanczos from v_0 = e_0 with full reorthogonalization.

    Iterates w = B v_k, b_k = <w, v_k>, r = w - b_k v_k - a_{k-1} v_{k-1},
    a_k = ||r||, v_{k+1} = r / a_k; stops at breakdown (a_k below
    tol_breakdown * ||B||, the cyclic subspace is exhausted) or after
    max_steps vectors.
    """
    n = op.dimension
    if max_steps is None:
        max_steps = n
    if not 1 <= max_steps <= n:
        raise InvalidDataError(f"max_steps must be in [1, {n}], got {max_steps}")
    scale = operator_norm(op)

    vs = [op.cyclic_vector()]
    a_seq: list[float] = []
    b_seq: list[complex] = []
    exhausted = False
    for k in range(max_steps):
        v = vs[k]
        w = apply(op, v)
        b_k = _inner(w, v)
        b_seq.append(b_k)
        r = w - b_k * v
        if k > 0:
            r = r - a_seq[k - 1] * vs[k - 1]
        basis = np.column_stack(vs)
        r = r - basis @ (basis.conj().T @ r)
        a_k = float(np.linalg.norm(r))
        if a_k <= tol_breakdown * scale:
            exhausted = True
            break
        if k == max_steps - 1:
            break
        a_seq.append(a_k)
        vs.append(r / a_k)

    return LanczosResult(
        params=JacobiParameters(np.array(a_seq), np.array(b_seq)),
        basis=np.column_stack(vs),
        exhausted=exhausted,
    )


def jacobi_to_operator(params: JacobiParameters, n: int) -> AntiLinearOperator:
    """Leading n x n complex symmetric tridiagonal matrix of the parameters."""
    if n < 1:
        raise InvalidDataError("n must be positive")
    if len(params.b) < n or len(params.a) < n - 1:
        raise InvalidDataError(
            f"parameters too short for n = {n}: {len(params.a)} off-diagonal, "
            f"{len(params.b)} diagonal"
        )
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n), np.arange(n)] = params.b[:n]
    if n > 1:
        m[np.arange(n - 1), np.arange(1, n)] = params.a[: n - 1]
        m[np.arange(1, n), np.arange(n - 1)] = params.a[: n - 1]
    return AntiLinearOperator(m)


def apply_polynomial(
    op: AntiLinearOperator, p: ComplexPolynomial, x: np.ndarray
) -> np.ndarray:
    """p(B) x = sum_k c_k B^k x, accumulating powers of the anti-linear B."""
    x = np.asarray(x, dtype=complex)
    acc = np.zeros_like(x)
    power = x
    for k, c in enumerate(p.coeffs):
        if k > 0:
            power = apply(op, power)
        acc = acc + c * power
    return acc


def takagi(matrix, tol_cluster: float = DEFAULT_TOL_CLUSTER):
    """Autonne-Takagi factorisation A = U diag(sigma) U^T for A = A^T.

    Returns (U, sigma) with U unitary and sigma the singular values in
    descending order.  Built on the eigendecomposition of A conj(A); each
    degenerate singular-value cluster is fixed up through the restricted
    symmetric block, diagonalised via its real-symmetric embedding
    [[Re M, Im M], [Im M, -Re M]] (whose +sigma eigenvectors x + i y are the
    Takagi columns of the block).
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidDataError(f"matrix must be square, got {a.shape}")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if a.size and np.max(np.abs(a - a.T)) > 1e-12 * max(1.0, scale):
        raise InvalidDataError("matrix is not complex symmetric")

    op = AntiLinearOperator(a)
    spec = modulus_spectrum(op, tol_cluster)
    zero_threshold = tol_cluster * (1.0 + spec.eigenvalues[-1])

    n = a.shape[0]
    u = np.zeros((n, n), dtype=complex)
    for cluster in spec.clusters:
        idx = list(cluster)
        vc = spec.eigenvectors[:, idx]
        s_mean = float(np.mean(spec.eigenvalues[idx]))
        if s_mean <= zero_threshold:
            u[:, idx] = vc  # kernel columns already satisfy A conj(v) = 0
            continue
        m_block = vc.conj().T @ a @ np.conj(vc)
        k = len(idx)
        g = np.block(
            [
                [m_block.real, m_block.imag],
                [m_block.imag, -m_block.real],
            ]
        )
        gvals, gvecs = np.linalg.eigh(g)
        plus = gvecs[:, -k:]  # eigenvectors for the k positive eigenvalues
        x_block = plus[:k, :] + 1j * plus[k:, :]
        u[:, idx] = vc @ x_block

    order = np.argsort(spec.eigenvalues)[::-1]
    return u[:, order], spec.eigenvalues[order].copy()

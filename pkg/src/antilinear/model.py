"""Functional model operator built from spectral data.

The model space carries one coordinate per S1 node and two per S2 node.
Coordinates absorb sqrt(w_j), so the model matrix is block diagonal with the
blocks s_j * [[psi, r], [r, -conj(psi)]] (r = sqrt(1 - |psi|^2)) on S2 nodes
and the scalar s_j * psi_j on S1 nodes, while the cyclic vector carries the
weights: sqrt(w_j) in the first slot of every node.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import (
    AntiLinearOperator,
    apply,
    check_symmetry,
    modulus_spectrum,
)
from .spectral import DEFAULT_TOL_PHASE, SpectralData, classify, ensure_valid

CYCLIC_RANK_TOL = 1e-9


@dataclass(frozen=True)
class ModelSpace:
    """Block layout of the model space: (node index, slot) per coordinate."""

    layout: tuple[tuple[int, int], ...]
    node_weights: np.ndarray
    labels: tuple[str, ...]

    @property
    def dimension(self) -> int:
        return len(self.layout)

    def blocks(self) -> list[dict]:
        sizes: dict[int, int] = {}
        for j, _slot in self.layout:
            sizes[j] = sizes.get(j, 0) + 1
        return [{"node": j, "size": sizes[j]} for j in sorted(sizes)]


@dataclass(frozen=True)
class ModelVerification:
    """Residuals for the four model properties (symmetry, |B| = mult-by-s,
    the two moment identities, cyclicity of the weighted indicator)."""

    symmetry: float
    modulus: float
    moments: float
    cyclic_defect: float

    def max_residual(self) -> float:
        return max(self.symmetry, self.modulus, self.moments, self.cyclic_defect)

    def as_dict(self) -> dict:
        return {
            "symmetry": self.symmetry,
            "modulus": self.modulus,
            "moments": self.moments,
            "cyclic_defect": self.cyclic_defect,
        }


def build_model(
    data: SpectralData, tol_phase: float = DEFAULT_TOL_PHASE
) -> tuple[AntiLinearOperator, ModelSpace]:
    """Assemble the block-diagonal model operator and its space layout."""
    ensure_valid(data)
    cls = classify(data, tol_phase)
    layout: list[tuple[int, int]] = []
    blocks: list[np.ndarray] = []
    for j, (s, psi, lab) in enumerate(zip(data.nodes, data.phases, cls.labels)):
        if lab == "S1":
            layout.append((j, 1))
            blocks.append(np.array([[s * psi]], dtype=complex))
        else:
            layout.append((j, 1))
            layout.append((j, 2))
            r = np.sqrt(max(0.0, 1.0 - abs(psi) ** 2))
            blocks.append(s * np.array([[psi, r], [r, -np.conj(psi)]], dtype=complex))
    dim = len(layout)
    matrix = np.zeros((dim, dim), dtype=complex)
    pos = 0
    for blk in blocks:
        k = blk.shape[0]
        matrix[pos : pos + k, pos : pos + k] = blk
        pos += k
    space = ModelSpace(tuple(layout), data.weights.copy(), cls.labels)
    return AntiLinearOperator(matrix), space


def model_cyclic_vector(data: SpectralData, space: ModelSpace) -> np.ndarray:
    """Coordinates of the weighted indicator: sqrt(w_j) in slot 1 of node j."""
    vec = np.zeros(space.dimension, dtype=complex)
    for i, (j, slot) in enumerate(space.layout):
        if slot == 1:
            vec[i] = np.sqrt(data.weights[j])
    return vec


def verify_model(
    data: SpectralData, tol_phase: float = DEFAULT_TOL_PHASE
) -> ModelVerification:
    """Numerically check the four model properties; returns their residuals."""
    ensure_valid(data)
    op, space = build_model(data, tol_phase)
    one = model_cyclic_vector(data, space)
    d = space.dimension

    res_sym = check_symmetry(op)

    # modulus: |B| must be the diagonal of node values in model coordinates
    spec = modulus_spectrum(op)
    abs_b = (spec.eigenvectors * spec.eigenvalues) @ spec.eigenvectors.conj().T
    target = np.diag([data.nodes[j] for j, _slot in space.layout])
    res_mod = float(np.max(np.abs(abs_b - target)))

    # moment identities for f(s) = s^k, k = 0..6
    vecs = spec.eigenvectors
    one_ampl = vecs.conj().T @ one
    b_one_ampl = vecs.conj().T @ apply(op, one)
    res_mom = 0.0
    for k in range(7):
        sk = spec.eigenvalues**k
        even = complex(np.vdot(one_ampl, sk * one_ampl))
        even_target = complex(np.sum(data.weights * data.nodes**k))
        odd = complex(np.vdot(one_ampl, sk * b_one_ampl))
        odd_target = complex(
            np.sum(data.weights * data.nodes ** (k + 1) * data.phases)
        )
        res_mom = max(
            res_mom,
            abs(even - even_target) / (1.0 + abs(even_target)),
            abs(odd - odd_target) / (1.0 + abs(odd_target)),
        )

    # cyclicity: numerical rank of the (column-normalized) iterated-vector matrix
    krylov = np.zeros((d, d), dtype=complex)
    vec = one.copy()
    for k in range(d):
        nv = float(np.linalg.norm(vec))
        if nv == 0.0:
            break  # iterates died out; the zero columns lower the rank honestly
        krylov[:, k] = vec / nv
        vec = apply(op, vec)
    svals = np.linalg.svd(krylov, compute_uv=False)
    rank = int(np.sum(svals > CYCLIC_RANK_TOL * svals[0]))
    res_cyc = float(d - rank)

    return ModelVerification(res_sym, res_mod, res_mom, res_cyc)

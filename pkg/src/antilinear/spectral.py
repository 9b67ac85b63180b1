"""Finitely supported spectral data (nodes, weights, phases).

A dataset represents a probability measure on [0, inf) supported on the
``nodes`` together with a phase function sampled at the nodes.  Phases have
modulus at most one; a node at s = 0 must carry phase exactly 1 (data with a
different phase at 0 is rejected rather than silently rewritten).

The module also hosts the sesquilinear form on polynomials induced by the
data, the S1/S2 node classification, the gauge transform and the
unitary-equivalence predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDataError
from .polynomials import ComplexPolynomial, evaluate, parity_split

WEIGHT_SUM_TOL = 1e-12
PHASE_MODULUS_TOL = 1e-12
#: |psi| >= 1 - DEFAULT_TOL_PHASE counts as S1 (eigen-solver accuracy at desk scale).
DEFAULT_TOL_PHASE = 1e-9


class SpectralData:
    """Nodes s_j >= 0 (strictly increasing), weights w_j > 0 summing to 1,
    and phases psi_j with |psi_j| <= 1."""

    __slots__ = ("nodes", "weights", "phases")

    def __init__(self, nodes, weights, phases):
        nodes = np.asarray(nodes, dtype=float).ravel().copy()
        weights = np.asarray(weights, dtype=float).ravel().copy()
        phases = np.asarray(phases, dtype=complex).ravel().copy()
        for arr in (nodes, weights, phases):
            arr.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "phases", phases)

    def __setattr__(self, name, value):
        raise AttributeError("SpectralData is immutable")

    def __len__(self) -> int:
        return len(self.nodes)

    def __repr__(self) -> str:
        return (
            f"SpectralData(nodes={self.nodes.tolist()!r}, "
            f"weights={self.weights.tolist()!r}, phases={self.phases.tolist()!r})"
        )


@dataclass(frozen=True)
class NodeClass:
    """Per-node S1/S2 labels ('S1' where |psi| is unimodular up to tolerance)."""

    labels: tuple[str, ...]

    @property
    def is_s1(self) -> np.ndarray:
        return np.array([lab == "S1" for lab in self.labels])

    @property
    def n_s1(self) -> int:
        return sum(lab == "S1" for lab in self.labels)

    @property
    def n_s2(self) -> int:
        return sum(lab == "S2" for lab in self.labels)


def validate(data: SpectralData) -> list[str]:
    """Return the list of violated invariants (empty when the data is valid)."""
    report = []
    n = len(data.nodes)
    if not (len(data.weights) == n and len(data.phases) == n):
        report.append(
            f"length mismatch: {n} nodes, {len(data.weights)} weights, "
            f"{len(data.phases)} phases"
        )
        return report
    if n == 0:
        report.append("empty data")
        return report
    if data.nodes[0] < 0.0:
        report.append(f"negative node {data.nodes[0]}")
    if np.any(np.diff(data.nodes) <= 0.0):
        report.append("nodes not strictly increasing")
    if np.any(data.weights <= 0.0):
        report.append("nonpositive weight")
    mass = float(np.sum(data.weights))
    if abs(mass - 1.0) > WEIGHT_SUM_TOL:
        report.append(f"weights sum to {mass:.17g}, not 1")
    mods = np.abs(data.phases)
    if np.any(mods > 1.0 + PHASE_MODULUS_TOL):
        report.append(f"phase modulus {mods.max():.17g} exceeds 1")
    zero = data.nodes == 0.0
    if np.any(zero) and np.any(np.abs(data.phases[zero] - 1.0) > PHASE_MODULUS_TOL):
        report.append("phase at node s = 0 must be 1")
    return report


def ensure_valid(data: SpectralData) -> None:
    report = validate(data)
    if report:
        raise InvalidDataError("invalid spectral data: " + "; ".join(report))


def classify(data: SpectralData, tol_phase: float = DEFAULT_TOL_PHASE) -> NodeClass:
    """S1 where |psi_j| >= 1 - tol_phase or s_j = 0, otherwise S2."""
    labels = tuple(
        "S1" if (s == 0.0 or abs(psi) >= 1.0 - tol_phase) else "S2"
        for s, psi in zip(data.nodes, data.phases)
    )
    return NodeClass(labels)


def model_dimension(data: SpectralData, tol_phase: float = DEFAULT_TOL_PHASE) -> int:
    """Dimension of the functional model space: one slot per S1 node, two per S2."""
    cls = classify(data, tol_phase)
    return cls.n_s1 + 2 * cls.n_s2


def form_on_values(weights, phases, p_even, p_odd, q_even, q_odd) -> complex:
    """Sesquilinear form from even/odd part values sampled at the nodes.

    All array arguments are aligned with the node list.  This is the kernel
    shared with the Gram-Schmidt machinery, which caches node values instead
    of re-evaluating coefficient arrays.
    """
    qe = np.conj(q_even)
    qo = np.conj(q_odd)
    terms = p_even * qe + p_odd * qe * phases + p_even * qo * np.conj(phases) + p_odd * qo
    return complex(np.sum(weights * terms))


def sesquilinear_form(
    p: ComplexPolynomial, q: ComplexPolynomial, data: SpectralData
) -> complex:
    """The form [p, q] = sum_j w_j <K_j (p_e, p_o), (q_e, q_o)> with the
    rank-one-or-two node kernel K_j = [[1, psi_j], [conj(psi_j), 1]]."""
    ensure_valid(data)
    pe, po = parity_split(p)
    qe, qo = parity_split(q)
    s = data.nodes
    return form_on_values(
        data.weights,
        data.phases,
        evaluate(pe, s),
        evaluate(po, s),
        evaluate(qe, s),
        evaluate(qo, s),
    )


def gauge_transform(data: SpectralData, alpha: float) -> SpectralData:
    """Multiply every phase by exp(-2i*alpha) (the cyclic-vector rotation).

    A node at s = 0 keeps its conventional phase 1, which is only consistent
    when exp(-2i*alpha) = 1; other alphas combined with a zero node are
    rejected.
    """
    ensure_valid(data)
    factor = np.exp(-2j * alpha)
    has_zero = bool(np.any(data.nodes == 0.0))
    if has_zero and abs(factor - 1.0) > 1e-9:
        raise InvalidDataError(
            "gauge transform with alpha not a multiple of pi would break the "
            "phase-1 convention at the node s = 0"
        )
    phases = data.phases * factor
    if has_zero:
        phases = phases.copy()
        phases[data.nodes == 0.0] = 1.0
    return SpectralData(data.nodes, data.weights, phases)


def equivalent(
    d1: SpectralData,
    d2: SpectralData,
    tol: float,
    tol_phase: float = DEFAULT_TOL_PHASE,
) -> bool:
    """Unitary equivalence of the underlying operators: identical supports
    (within tol, matched in order) and matching S1 classification.  Weights
    and phase arguments are deliberately ignored."""
    ensure_valid(d1)
    ensure_valid(d2)
    if len(d1) != len(d2):
        return False
    if np.any(np.abs(d1.nodes - d2.nodes) > tol):
        return False
    c1 = classify(d1, tol_phase)
    c2 = classify(d2, tol_phase)
    return c1.labels == c2.labels

"""Orthonormal polynomials for the node-kernel sesquilinear form.

Gram-Schmidt applied to 1, s, s^2, ... with respect to the form produces the
polynomial family whose three-term recurrence
s q_n*(s) = a_n q_{n+1}(s) + b_n q_n(s) + a_{n-1} q_{n-1}(s) carries the
Jacobi parameters of the operator; the normalisation [q_n, q_n] = 1 together
with a_n > 0 and q_0 = 1 pins every unimodular factor.

Form values are accumulated on node-value vectors (even/odd parts sampled at
the nodes), never through coefficient inner products; the coefficient arrays
are carried along only so the polynomials themselves can be returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDataError, NumericError
from .operators import JacobiParameters
from .polynomials import ComplexPolynomial, ONE, star
from .spectral import SpectralData, ensure_valid, form_on_values

#: Relative degeneracy cutoff; the absolute threshold scales with max(1, s_max)^2.
DEFAULT_TOL_DEGENERACY = 1e-12


@dataclass(frozen=True)
class GramSchmidtResult:
    polynomials: tuple[ComplexPolynomial, ...]
    params: JacobiParameters
    count: int
    degenerate: bool  # True when [r, r] fell below the threshold (support exhausted)
    terminal_residual: float


class _Rep:
    """A polynomial together with its even/odd values at the nodes."""

    __slots__ = ("coeffs", "even", "odd")

    def __init__(self, coeffs, even, odd):
        self.coeffs = coeffs
        self.even = even
        self.odd = odd

    def axpy(self, c, other):
        return _Rep(
            self.coeffs - c * other.coeffs,
            self.even - c * other.even,
            self.odd - c * other.odd,
        )

    def scaled(self, c):
        return _Rep(c * self.coeffs, c * self.even, c * self.odd)


def gram_schmidt(
    data: SpectralData,
    n_max: int,
    tol_degeneracy: float | None = None,
) -> GramSchmidtResult:
    """Orthonormalize 1, s, s^2, ... against the form induced by the data.

    Stops after n_max polynomials or when the residual norm [r, r] drops
    below the degeneracy threshold (the finite support is exhausted); the
    achieved count never exceeds the model dimension of the data.
    """
    ensure_valid(data)
    if n_max < 1:
        raise InvalidDataError("n_max must be at least 1")
    s = data.nodes
    w = data.weights
    psi = data.phases
    s_max = float(s[-1])
    if tol_degeneracy is None:
        tol_degeneracy = DEFAULT_TOL_DEGENERACY * max(1.0, s_max) ** 2

    def form(u: _Rep, v: _Rep) -> complex:
        return form_on_values(w, psi, u.even, u.odd, v.even, v.odd)

    q0 = _Rep(ONE, np.ones(len(s), dtype=complex), np.zeros(len(s), dtype=complex))
    reps = [q0]
    a_seq: list[float] = []
    b_seq: list[complex] = []
    degenerate = False
    terminal = np.inf

    for n in range(n_max):
        qn = reps[n]
        # p = s * star(q_n); under the parity split the even/odd values swap
        p = _Rep(
            star(qn.coeffs).shift_up(),
            s * np.conj(qn.odd),
            s * np.conj(qn.even),
        )
        b_n = form(p, qn)
        b_seq.append(b_n)
        r = p.axpy(b_n, qn)
        if n > 0:
            r = r.axpy(a_seq[n - 1], reps[n - 1])
        for k in range(n + 1):  # one full re-orthogonalization pass
            r = r.axpy(form(r, reps[k]), reps[k])
        rr = form(r, r).real
        if rr < -tol_degeneracy:
            raise NumericError(f"[r, r] = {rr:.3e} < 0; the form is not PSD")
        if rr < tol_degeneracy:
            degenerate = True
            terminal = rr
            break
        if n == n_max - 1:
            break
        a_n = float(np.sqrt(rr))
        a_seq.append(a_n)
        reps.append(r.scaled(1.0 / a_n))

    return GramSchmidtResult(
        polynomials=tuple(rep.coeffs for rep in reps),
        params=JacobiParameters(np.array(a_seq), np.array(b_seq)),
        count=len(reps),
        degenerate=degenerate,
        terminal_residual=float(terminal) if np.isfinite(terminal) else -1.0,
    )


def recurrence_generate(params: JacobiParameters, n_max: int) -> list[ComplexPolynomial]:
    """Run the three-term recurrence forward, producing q_0 .. q_{n_max}."""
    if n_max < 0:
        raise InvalidDataError("n_max must be nonnegative")
    if n_max > len(params.a):
        raise InvalidDataError(
            f"need {n_max} off-diagonal entries, parameters carry {len(params.a)}"
        )
    polys = [ONE]
    prev = ComplexPolynomial()
    for n in range(n_max):
        qn = polys[n]
        rhs = star(qn).shift_up() - params.b[n] * qn
        if n > 0:
            rhs = rhs - params.a[n - 1] * prev
        prev = qn
        polys.append((1.0 / params.a[n]) * rhs)
    return polys


def verify_anti_orthogonality(polys, data: SpectralData) -> float:
    """Max deviation |[q_n, q_m] - delta_nm| over all pairs."""
    from .spectral import sesquilinear_form

    worst = 0.0
    for i, p in enumerate(polys):
        for j, q in enumerate(polys):
            target = 1.0 if i == j else 0.0
            worst = max(worst, abs(sesquilinear_form(p, q, data) - target))
    return worst

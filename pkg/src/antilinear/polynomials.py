"""Complex polynomials in the monomial basis, plus Chebyshev evaluators.

A polynomial is stored as a coefficient array indexed by power.  The zero
polynomial is the empty coefficient sequence.  Coefficients with modulus
below ``TRAILING_TOL`` are stripped from the high end at construction so
that degree queries are stable.
"""

from __future__ import annotations

import numpy as np

TRAILING_TOL = 1e-14


class ComplexPolynomial:
    """Immutable polynomial sum_k c_k s^k with complex coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        arr = np.asarray(coeffs, dtype=complex).ravel()
        keep = len(arr)
        while keep > 0 and abs(arr[keep - 1]) < TRAILING_TOL:
            keep -= 1
        arr = arr[:keep].copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexPolynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def __call__(self, s):
        return evaluate(self, s)

    def __add__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=complex)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] += other.coeffs
        return ComplexPolynomial(out)

    def __sub__(self, other: "ComplexPolynomial") -> "ComplexPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=complex)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] -= other.coeffs
        return ComplexPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            if self.is_zero() or other.is_zero():
                return ComplexPolynomial()
            return ComplexPolynomial(np.convolve(self.coeffs, other.coeffs))
        return ComplexPolynomial(self.coeffs * complex(other))

    __rmul__ = __mul__

    def shift_up(self) -> "ComplexPolynomial":
        """Multiply by the independent variable: p(s) -> s*p(s)."""
        if self.is_zero():
            return self
        return ComplexPolynomial(np.concatenate(([0.0], self.coeffs)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __hash__(self):
        return hash(tuple(self.coeffs.tolist()))

    def __repr__(self) -> str:
        return f"ComplexPolynomial({self.coeffs.tolist()!r})"


#: The constant polynomial 1.
ONE = ComplexPolynomial([1.0])
#: The zero polynomial.
ZERO = ComplexPolynomial()


def star(p: ComplexPolynomial) -> ComplexPolynomial:
    """Conjugate every coefficient: star(p)(s) = conj(p(conj(s)))."""
    return ComplexPolynomial(np.conj(p.coeffs))


def parity_split(p: ComplexPolynomial) -> tuple[ComplexPolynomial, ComplexPolynomial]:
    """Split into (even, odd) parts so that even(s) = (p(s) + p(-s)) / 2."""
    even = np.zeros(len(p.coeffs), dtype=complex)
    odd = np.zeros(len(p.coeffs), dtype=complex)
    even[0::2] = p.coeffs[0::2]
    odd[1::2] = p.coeffs[1::2]
    return ComplexPolynomial(even), ComplexPolynomial(odd)


def evaluate(p: ComplexPolynomial, s):
    """Horner evaluation at a scalar or ndarray argument."""
    if len(p.coeffs) == 0:
        if np.isscalar(s):
            return 0j
        return np.zeros(np.shape(s), dtype=complex)
    acc = np.full(np.shape(s), p.coeffs[-1], dtype=complex)
    for c in p.coeffs[-2::-1]:
        acc = acc * s + c
    if np.isscalar(s):
        return complex(acc)
    return acc


def _cheb_recurrence(n: int, x, u0, u1):
    # u_{k+1} = 2x u_k - u_{k-1}
    if n == 0:
        return u0 if np.isscalar(x) else np.broadcast_to(u0, np.shape(x)).copy()
    prev, cur = u0, u1
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def chebyshev_T(n: int, x):
    """Chebyshev polynomial of the first kind, T_n(x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _cheb_recurrence(n, x, 1.0 if np.isscalar(x) else np.ones(np.shape(x)), x)


def chebyshev_U(n: int, x):
    """Chebyshev polynomial of the second kind, U_n(x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _cheb_recurrence(
        n, x, 1.0 if np.isscalar(x) else np.ones(np.shape(x)), 2.0 * x
    )

"""JSON and CSV codecs for the on-disk formats.

Complex numbers are always two-element [re, im] arrays.  The JSON emitter is
deterministic: object keys keep insertion order and every float is printed
with 17 significant digits, so identical inputs produce byte-identical
files.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import InvalidDataError
from .operators import AntiLinearOperator, JacobiParameters
from .polynomials import ComplexPolynomial
from .spectral import NodeClass, SpectralData


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise InvalidDataError(f"non-finite value {x!r} cannot be serialized")
    return format(float(x), ".17g")


def dumps_canonical(obj) -> str:
    """Deterministic JSON rendering (fixed key order, 17-digit floats)."""
    parts: list[str] = []
    _emit(obj, parts)
    return "".join(parts)


def _emit(obj, parts: list[str]) -> None:
    if obj is None:
        parts.append("null")
    elif obj is True:
        parts.append("true")
    elif obj is False:
        parts.append("false")
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        parts.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        parts.append(fmt_float(float(obj)))
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                parts.append(",")
            parts.append(json.dumps(str(key)))
            parts.append(":")
            _emit(value, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        parts.append("[")
        for i, value in enumerate(obj):
            if i:
                parts.append(",")
            _emit(value, parts)
        parts.append("]")
    else:
        raise InvalidDataError(f"cannot serialize {type(obj).__name__}")


def complex_to_pair(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def pair_to_complex(pair) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise InvalidDataError(f"expected [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


# ---------------------------------------------------------------- polynomials

def polynomial_to_json(p: ComplexPolynomial) -> list[list[float]]:
    return [complex_to_pair(c) for c in p.coeffs]


def polynomial_from_json(obj) -> ComplexPolynomial:
    if not isinstance(obj, list):
        raise InvalidDataError("polynomial JSON must be an array of [re, im] pairs")
    return ComplexPolynomial([pair_to_complex(c) for c in obj])


# ------------------------------------------------------------- spectral data

def spectral_to_dict(data: SpectralData) -> dict:
    return {
        "nodes": [float(s) for s in data.nodes],
        "weights": [float(w) for w in data.weights],
        "phases": [complex_to_pair(p) for p in data.phases],
    }


def spectral_from_dict(obj) -> SpectralData:
    if not isinstance(obj, dict) or not {"nodes", "weights", "phases"} <= set(obj):
        raise InvalidDataError(
            "spectral data JSON needs the keys nodes, weights and phases"
        )
    phases = [pair_to_complex(p) for p in obj["phases"]]
    return SpectralData(obj["nodes"], obj["weights"], phases)


# ------------------------------------------------------------------ operator

def operator_to_dict(op: AntiLinearOperator) -> dict:
    return {
        "matrix": [[complex_to_pair(z) for z in row] for row in op.matrix]
    }


def operator_from_dict(obj) -> AntiLinearOperator:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise InvalidDataError("operator JSON needs the key matrix")
    rows = obj["matrix"]
    if not isinstance(rows, list) or not rows:
        raise InvalidDataError("operator matrix must be a non-empty array of rows")
    matrix = [[pair_to_complex(z) for z in row] for row in rows]
    widths = {len(row) for row in matrix}
    if widths != {len(matrix)}:
        raise InvalidDataError("operator matrix must be square")
    return AntiLinearOperator(matrix)


# --------------------------------------------------------------------- jacobi

def jacobi_to_dict(params: JacobiParameters) -> dict:
    return {
        "a": [float(x) for x in params.a],
        "b": [complex_to_pair(z) for z in params.b],
    }


def jacobi_from_dict(obj) -> JacobiParameters:
    if not isinstance(obj, dict) or not {"a", "b"} <= set(obj):
        raise InvalidDataError("Jacobi JSON needs the keys a and b")
    return JacobiParameters(
        np.asarray(obj["a"], dtype=float),
        np.array([pair_to_complex(z) for z in obj["b"]]),
    )


# ------------------------------------------------------------------------ CSV

def classification_csv(data: SpectralData, node_class: NodeClass) -> str:
    lines = ["s,w,re_psi,im_psi,class"]
    for s, w, psi, lab in zip(
        data.nodes, data.weights, data.phases, node_class.labels
    ):
        lines.append(
            f"{fmt_float(s)},{fmt_float(w)},{fmt_float(psi.real)},"
            f"{fmt_float(psi.imag)},{lab}"
        )
    return "\n".join(lines) + "\n"


def density_curve_csv(s, values) -> str:
    lines = ["s,density"]
    for si, vi in zip(s, values):
        lines.append(f"{fmt_float(si)},{fmt_float(vi)}")
    return "\n".join(lines) + "\n"


def phase_curve_csv(s, phases) -> str:
    lines = ["s,re_psi,im_psi"]
    for si, pi in zip(s, phases):
        lines.append(f"{fmt_float(si)},{fmt_float(np.real(pi))},{fmt_float(np.imag(pi))}")
    return "\n".join(lines) + "\n"


def coefficients_csv(
    params: JacobiParameters, ref_a=None, ref_b=None
) -> str:
    """Coefficient table; the error column compares against a reference
    parameter set when one is supplied (blank otherwise)."""
    lines = ["n,a_n,re_b_n,im_b_n,abs_error"]
    for n, bn in enumerate(params.b):
        a_field = fmt_float(params.a[n]) if n < len(params.a) else ""
        if ref_a is not None and ref_b is not None:
            err = abs(bn - ref_b[n]) if n < len(ref_b) else abs(bn)
            if n < len(params.a):
                ref = ref_a[n] if n < len(ref_a) else 0.0
                err = max(err, abs(params.a[n] - ref))
            err_field = fmt_float(err)
        else:
            err_field = ""
        lines.append(
            f"{n},{a_field},{fmt_float(bn.real)},{fmt_float(bn.imag)},{err_field}"
        )
    return "\n".join(lines) + "\n"


def polynomials_to_json(polys) -> list[list[list[float]]]:
    return [polynomial_to_json(p) for p in polys]


def polynomials_csv(polys) -> str:
    lines = ["n,k,re_coeff,im_coeff"]
    for n, p in enumerate(polys):
        for k, c in enumerate(p.coeffs):
            lines.append(f"{n},{k},{fmt_float(c.real)},{fmt_float(c.imag)}")
    return "\n".join(lines) + "\n"

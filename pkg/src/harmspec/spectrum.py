"""Deterministic eigenvalues of symmetric rational matrices and harmonic
energy.

The solver is a cyclic Jacobi sweep with a fixed (row-major) rotation
order and no randomization, so a given matrix always produces bit-identical
output. Exact entries are converted to floats once, with correct rounding,
and every tolerance is relative to the Frobenius norm.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .charpoly import RatPoly
from .graphs import Graph, adjacency_matrix, degrees, encode_graph6
from .harmonic import harmonic_matrix

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    """Eigensolver failed to converge; carries the final off-diagonal residual."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi sweep did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e}); the input looks pathological"
        )
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing, plus solver diagnostics."""

    eigenvalues: tuple[float, ...]
    off_norm: float
    sweeps: int

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)


@dataclass(frozen=True)
class EnergyReport:
    """Harmonic energy of one graph: the energy value, the graph6
    fingerprint of the input, the method tag, and the full spectrum."""

    he: float
    graph6: str
    method: str
    spectrum: Spectrum


def _to_float_matrix(m: Sequence[Sequence[Fraction | int | float]]) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in m], dtype=float)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(
    a: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS
) -> tuple[np.ndarray, float, int]:
    """Cyclic Jacobi on a symmetric float matrix.

    Returns (eigenvalues sorted non-increasing, final off-diagonal norm,
    sweeps used). Raises JacobiConvergenceError when the off-diagonal norm
    is still above tol * ||a||_F after max_sweeps sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        return np.array([]), 0.0, 0
    fro = float(np.linalg.norm(a))
    threshold = tol * fro
    sweeps = 0
    off = _off_norm(a)
    while off > threshold:
        if sweeps >= max_sweeps:
            raise JacobiConvergenceError(off, sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    # theta would overflow; the rotation angle is ~apq/diff.
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    if theta == 0.0:
                        t = 1.0
                    else:
                        t = math.copysign(1.0, theta) / (
                            abs(theta) + math.sqrt(theta * theta + 1.0)
                        )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = _off_norm(a)
    eig = np.sort(np.diag(a))[::-1]
    return eig, off, sweeps


def eigenvalues_symmetric(
    m: Sequence[Sequence[Fraction | int | float]], tol: float = DEFAULT_TOL
) -> Spectrum:
    """Spectrum of an exact symmetric matrix via the Jacobi solver."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    a = _to_float_matrix(m)
    if a.size and not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    eig, off, sweeps = jacobi_eigenvalues(a, tol)
    return Spectrum(tuple(float(x) for x in eig), off, sweeps)


def harmonic_energy(g: Graph, tol: float = DEFAULT_TOL) -> EnergyReport:
    """Sum of absolute eigenvalues of the harmonic matrix."""
    spec = eigenvalues_symmetric(harmonic_matrix(g), tol)
    he = float(sum(abs(x) for x in spec.eigenvalues))
    return EnergyReport(he, encode_graph6(g), "jacobi", spec)


def adjacency_energy(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Classic graph energy: sum of absolute adjacency eigenvalues."""
    spec = eigenvalues_symmetric(adjacency_matrix(g), tol)
    return float(sum(abs(x) for x in spec.eigenvalues))


def regular_shortcut_energy(g: Graph, tol: float = DEFAULT_TOL) -> EnergyReport:
    """Harmonic energy of a d-regular graph via its adjacency spectrum.

    For a d-regular graph the harmonic matrix is the adjacency matrix
    scaled by 1/d, so the harmonic energy is the graph energy divided
    by d. Rejects non-regular input, naming the degree multiset.
    """
    degs = degrees(g)
    distinct = sorted(set(degs))
    if len(distinct) != 1 or distinct[0] < 1:
        multiset = dict(sorted(Counter(degs).items()))
        raise ValueError(
            f"regular shortcut needs a d-regular graph with d >= 1; degree multiset {multiset}"
        )
    d = distinct[0]
    spec = eigenvalues_symmetric(adjacency_matrix(g), tol)
    scaled = Spectrum(
        tuple(x / d for x in spec.eigenvalues), spec.off_norm / d, spec.sweeps
    )
    he = float(sum(abs(x) for x in scaled.eigenvalues))
    return EnergyReport(he, encode_graph6(g), "regular-shortcut", scaled)


@dataclass(frozen=True)
class NewtonReport:
    """Consistency between an exact polynomial and a numeric spectrum."""

    max_root_residual: float
    power_sum_mismatch: tuple[float, float, float]


def newton_check(p: RatPoly, s: Spectrum | Sequence[float]) -> NewtonReport:
    """Report how well a numeric spectrum matches an exact polynomial.

    max_root_residual is max |p(e)| over the eigenvalues, scaled by the
    Euclidean norm of the coefficient vector. The power-sum entries compare
    sum(e^k) for k = 1, 2, 3 against the Newton-identity values implied by
    the top coefficients of p.
    """
    eig = list(s.eigenvalues if isinstance(s, Spectrum) else s)
    if p.degree != len(eig):
        raise ValueError(
            f"polynomial degree {p.degree} does not match spectrum length {len(eig)}"
        )
    coeffs = [float(c) for c in p.coeffs]
    norm = math.sqrt(sum(c * c for c in coeffs)) or 1.0
    max_res = max((abs(_horner(coeffs, x)) for x in eig), default=0.0) / norm

    n = p.degree
    # Monic normalization, then elementary symmetric functions from the top
    # coefficients: e_k = (-1)^k * a_{n-k}.
    lead = float(p.leading) if not p.is_zero else 1.0
    a = [float(p.coefficient(n - k)) / lead for k in range(0, 4)]
    e1 = -a[1] if n >= 1 else 0.0
    e2 = a[2] if n >= 2 else 0.0
    e3 = -a[3] if n >= 3 else 0.0
    p1 = e1
    p2 = e1 * p1 - 2 * e2
    p3 = e1 * p2 - e2 * p1 + 3 * e3
    s1 = sum(eig)
    s2 = sum(x * x for x in eig)
    s3 = sum(x**3 for x in eig)
    return NewtonReport(
        max_root_residual=max_res,
        power_sum_mismatch=(abs(s1 - p1), abs(s2 - p2), abs(s3 - p3)),
    )


def _horner(coeffs: list[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def spectrum_json(report: EnergyReport) -> dict:
    return {
        "graph6": report.graph6,
        "method": report.method,
        "he": report.he,
        "eigenvalues": list(report.spectrum.eigenvalues),
        "off_norm": report.spectrum.off_norm,
        "sweeps": report.spectrum.sweeps,
    }

"""Truncated Fock-space representation of coherent states and ladder operators.

States live in a finite-dimensional number basis |0>, |1>, ..., |D-1> and are
stored as 1-d complex numpy arrays of length D (the truncation dimension).
Amplitudes are dimensionless.  All functions are pure: they never mutate their
inputs and return freshly allocated arrays, so concurrent read access is safe.

Evaluation of a coherent state uses the stable amplitude recurrence
``amps[m] = amps[m-1] * alpha / sqrt(m)`` starting from ``exp(-|alpha|^2 / 2)``
instead of forming ``alpha^m`` and ``m!`` separately, which keeps every partial
value bounded by 1 for truncation dimensions up to several thousand.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

# A Fock vector is a 1-d complex128 array; its length is the truncation dim.
FockVector = np.ndarray

# exp(-|alpha|^2) underflows past this point and the Poisson weights degenerate.
_MAX_ABS_ALPHA_SQ = 700.0


def _check_alpha(alpha: complex) -> complex:
    alpha = complex(alpha)
    if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
        raise ValueError(f"coherent amplitude must be finite, got {alpha!r}")
    return alpha


def coherent_state(alpha: complex, dim: int) -> FockVector:
    """Coherent state with amplitude ``alpha`` truncated to ``dim`` levels.

    Args:
        alpha: complex coherent amplitude.
        dim: truncation dimension, at least 1.

    Returns:
        Complex array of length ``dim`` with entries
        ``exp(-|alpha|^2 / 2) * alpha^m / sqrt(m!)``.  The squared norm is
        at most 1; the deficit equals the truncated Poisson tail weight.
    """
    alpha = _check_alpha(alpha)
    if dim < 1:
        raise ValueError(f"truncation dimension must be >= 1, got {dim}")
    lam = abs(alpha) ** 2
    if lam > _MAX_ABS_ALPHA_SQ:
        raise ValueError(f"|alpha|^2 = {lam:g} too large for double precision")
    factors = np.empty(dim, dtype=complex)
    factors[0] = math.exp(-lam / 2.0)
    if dim > 1:
        factors[1:] = alpha / np.sqrt(np.arange(1, dim))
    return np.cumprod(factors)


def inner_product(u: FockVector, v: FockVector) -> complex:
    """Hilbert-space pairing <u|v> = sum_m conj(u[m]) * v[m].

    Conjugate-symmetric: ``inner_product(u, v) == conj(inner_product(v, u))``.
    Raises ValueError on dimension mismatch.
    """
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return complex(np.vdot(u, v))


def coherent_overlap_closed(alpha: complex, beta: complex) -> complex:
    """Closed-form coherent-state overlap.

    Evaluates ``exp(-|alpha|^2/2 - |beta|^2/2 + conj(alpha)*beta)``; the
    magnitude never exceeds 1.
    """
    alpha = _check_alpha(alpha)
    beta = _check_alpha(beta)
    return cmath.exp(-abs(alpha) ** 2 / 2.0 - abs(beta) ** 2 / 2.0
                     + alpha.conjugate() * beta)


def rotated_overlap(alpha: complex, n: int, k: int, l: int) -> complex:
    """Overlap of the k-th and l-th rotated copies of a coherent state.

    The n copies sit at the vertices of a regular n-gon, the j-th one rotated
    by ``exp(2*pi*1j*j/n)``.  Their overlap has the closed form
    ``exp(|alpha|^2 * (exp(2*pi*1j*(l-k)/n) - 1))``, which equals 1 for k == l.

    Args:
        alpha: coherent amplitude of the unrotated copy.
        n: number of vertices, at least 1.
        k, l: vertex indices in [0, n).
    """
    alpha = _check_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (0 <= k < n and 0 <= l < n):
        raise ValueError(f"vertex indices must lie in [0, {n}), got k={k}, l={l}")
    rot = cmath.exp(2j * cmath.pi * (l - k) / n)
    return cmath.exp(abs(alpha) ** 2 * (rot - 1.0))


def annihilate(v: FockVector) -> FockVector:
    """Apply the lowering operator: result[m] = sqrt(m+1) * v[m+1].

    The top entry of the result is 0; the dimension is unchanged.
    """
    v = np.asarray(v, dtype=complex)
    dim = v.shape[0]
    out = np.zeros(dim, dtype=complex)
    if dim > 1:
        out[:-1] = np.sqrt(np.arange(1, dim)) * v[1:]
    return out


def create(v: FockVector) -> FockVector:
    """Apply the raising operator: result[m] = sqrt(m) * v[m-1].

    The amplitude raised past the truncation edge, ``sqrt(dim) * v[dim-1]``,
    is discarded; use :func:`creation_dropped_weight` to quantify the loss.
    Callers needing exactness must pad the dimension first.
    """
    v = np.asarray(v, dtype=complex)
    dim = v.shape[0]
    out = np.zeros(dim, dtype=complex)
    if dim > 1:
        out[1:] = np.sqrt(np.arange(1, dim)) * v[:-1]
    return out


def creation_dropped_weight(v: FockVector) -> float:
    """Squared norm of the amplitude :func:`create` discards at the top level."""
    v = np.asarray(v, dtype=complex)
    dim = v.shape[0]
    return dim * abs(v[dim - 1]) ** 2


def truncation_dim(alpha: complex, eps: float) -> int:
    """Smallest dimension whose truncated Poisson tail weight is below ``eps``.

    Finds the smallest D with ``exp(-|alpha|^2) * sum_{m>=D} |alpha|^(2m)/m!
    < eps``.  Monotone non-increasing in ``eps``; returns 1 for ``alpha = 0``.

    Args:
        alpha: coherent amplitude (only ``|alpha|`` matters).
        eps: tail budget, strictly between 0 and 1.
    """
    alpha = _check_alpha(alpha)
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    lam = abs(alpha) ** 2
    if lam == 0.0:
        return 1
    if lam > _MAX_ABS_ALPHA_SQ:
        raise ValueError(f"|alpha|^2 = {lam:g} too large for double precision")

    # Poisson weights p_m = exp(-lam) lam^m / m!, accumulated until they are
    # negligible relative to eps, then suffix-summed smallest-first so the
    # tiny tails are not lost to cancellation.
    weights = []
    p = math.exp(-lam)
    m = 0
    while m <= lam or p >= eps * 1e-8:
        weights.append(p)
        m += 1
        p *= lam / m
    tail = 0.0
    for d in range(len(weights) - 1, -1, -1):
        tail += weights[d]
        if tail >= eps:
            return d + 1
    return 1

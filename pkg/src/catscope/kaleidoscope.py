"""Orthonormal cat-state bases from rotated coherent states.

The n-state basis for amplitude ``alpha`` starts from the n coherent states
``|w2^j * alpha>`` at the vertices of a regular n-gon, where
``w2 = exp(+2*pi*1j/n)`` rotates counterclockwise.  Mixing them with the
discrete Fourier transform matrix (entries ``w^(j*k)/sqrt(n)`` with
``w = conj(w2) = exp(-2*pi*1j/n)``) concentrates the k-th output on Fock
levels congruent to k mod n, which is what makes the n outputs orthogonal.
Normalizing each output then costs one mod-n exponential value per state.

All builders are pure functions; :class:`KaleidoscopeBasis` is frozen and its
arrays are marked read-only, so instances are safe to share across threads.
"""

from __future__ import annotations

import cmath
import math
import warnings

from dataclasses import dataclass

import numpy as np

from .fock import coherent_state, inner_product, truncation_dim
from .modexp import ModExpSpec, modexp_all, modexp_series


class DegenerateAlpha(ValueError):
    """alpha = 0 requested where the rotated copies collapse onto each other.

    At alpha = 0 every rotated coherent state is the vacuum, so only the
    residue-0 combination survives; the remaining states are 0/0.
    """


class ConditioningWarning(RuntimeWarning):
    """A normalization constant is formed from a very small mod-n exponential.

    The closed forms stay exact but the floating-point construction loses
    digits; emitted when ``f_k(|alpha|^2) < 1e-12 * exp(|alpha|^2)``.
    """


# Amplitudes below this are treated as zero when locating the leading Fock
# level for the phase convention; matches the mod-n support tolerance.
_SUPPORT_TOL = 1e-13


@dataclass(frozen=True)
class KaleidoscopeBasis:
    """n orthonormal cat states for one coherent amplitude.

    Attributes:
        n: number of basis states.
        alpha: coherent amplitude at vertex 0.
        dim: shared Fock truncation dimension.
        states: (n, dim) complex array, one normalized state per row, each
            scaled so its first nonzero Fock amplitude is real positive.
        norm_constants: per-state closed-form coefficients; the k-th value
            multiplies the bare sum ``sum_j w^(j*k) |w2^j alpha>`` to produce
            the unit-norm state.
        tail_eps: Poisson tail budget used to pick ``dim``.
    """

    n: int
    alpha: complex
    dim: int
    states: np.ndarray
    norm_constants: np.ndarray
    tail_eps: float


@dataclass(frozen=True)
class GramReport:
    """Gram matrix of a state set and its entrywise distance from identity."""

    gram: np.ndarray
    max_deviation: float


def dft_matrix(n: int) -> np.ndarray:
    """Discrete Fourier transform gate: entry (k, j) = w^(j*k)/sqrt(n).

    Uses ``w = exp(-2*pi*1j/n)``; exponents are reduced mod n before
    exponentiation so every entry is an n-th root of unity to machine
    precision.  Unitary: both ``Q Q^dag`` and ``Q^dag Q`` are the identity
    within 1e-13.  For n = 2 this is the Hadamard gate.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    j = np.arange(n)
    exponents = np.outer(j, j) % n
    return np.exp(-2j * np.pi * exponents / n) / math.sqrt(n)


def cat_states_raw(n: int, alpha: complex, dim: int) -> np.ndarray:
    """Unnormalized cat states: DFT rows applied to the rotated coherent states.

    The k-th row is ``(1/sqrt(n)) * sum_j w^(j*k) |w2^j alpha>`` on ``dim``
    Fock levels.  Its squared norm is ``n * exp(-|alpha|^2) * f_k(|alpha|^2)``
    and its support lies on Fock levels congruent to k mod n.

    Returns:
        (n, dim) complex array, one raw state per row.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rotated = np.empty((n, dim), dtype=complex)
    for j in range(n):
        rotated[j] = coherent_state(cmath.exp(2j * cmath.pi * j / n) * alpha, dim)
    return dft_matrix(n) @ rotated


def normalization_constants(n: int, alpha: complex) -> np.ndarray:
    """Closed-form normalization coefficients for the n cat states.

    The k-th constant is ``exp(|alpha|^2/2) / (n * sqrt(f_k(|alpha|^2)))``;
    multiplying the bare combination ``sum_j w^(j*k) |w2^j alpha>`` by it
    yields a unit-norm state.  For n = 2 these reduce to the familiar
    ``exp(|alpha|^2/2) / (2*sqrt(cosh|alpha|^2))`` (even) and the ``sinh``
    analogue (odd).

    Raises:
        DegenerateAlpha: if ``alpha = 0`` with ``n >= 2``.

    Warns:
        ConditioningWarning: when some ``f_k(|alpha|^2)`` is below
            ``1e-12 * exp(|alpha|^2)`` and the constant loses accuracy.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lam = abs(complex(alpha)) ** 2
    if lam == 0.0 and n >= 2:
        raise DegenerateAlpha(
            "DegenerateAlpha: f_k(0) = 0 for k >= 1, the cat states with "
            "nonzero residue are undefined at alpha = 0")
    values = np.array([v.real if isinstance(v, complex) else v
                       for v in modexp_all(n, lam)])
    small = values < 1e-12 * math.exp(lam)
    if small.any():
        worst = int(np.argmax(small))
        warnings.warn(
            f"f_{worst}(|alpha|^2) = {values[worst]:.3e} is below "
            f"1e-12 * exp(|alpha|^2); normalization constant {worst} is "
            "ill-conditioned", ConditioningWarning, stacklevel=2)
    return math.exp(lam / 2.0) / (n * np.sqrt(values))


def kaleidoscope_basis(n: int, alpha: complex, eps: float = 1e-14) -> KaleidoscopeBasis:
    """Build the n orthonormal cat states for amplitude ``alpha``.

    The shared truncation dimension comes from ``truncation_dim(alpha, eps)``
    (rotations preserve ``|alpha|``), padded to at least n so every state
    keeps its leading Fock level.  Each state equals the unit-norm scaling of
    the corresponding :func:`cat_states_raw` row, but is assembled by masking
    the coherent amplitudes to the state's congruence class: summing the
    rotated copies in floating point leaves cancellation residue on the
    off-class levels, and normalizing an ill-conditioned state (tiny
    ``f_k(|alpha|^2)``) would amplify that residue past the orthogonality
    budget.  The masked form keeps off-class amplitudes exactly zero, so the
    Gram matrix deviates from the identity by far less than ``10 * eps`` even
    in the regimes that trigger :class:`ConditioningWarning`.

    Each state's global phase is fixed so its first Fock amplitude above
    1e-13 is real positive.

    Raises:
        DegenerateAlpha: if ``alpha = 0`` with ``n >= 2``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    alpha = complex(alpha)
    constants = normalization_constants(n, alpha)  # also rejects alpha = 0
    dim = max(truncation_dim(alpha, eps), n)
    amps = coherent_state(alpha, dim)
    classes = np.arange(dim) % n
    states = np.zeros((n, dim), dtype=complex)
    for k in range(n):
        state = np.where(classes == k, amps, 0.0)
        state /= np.linalg.norm(state)
        lead = np.argmax(np.abs(state) > _SUPPORT_TOL)
        states[k] = state / (state[lead] / abs(state[lead]))
    states.flags.writeable = False
    constants.flags.writeable = False
    return KaleidoscopeBasis(n=n, alpha=alpha, dim=dim, states=states,
                             norm_constants=constants, tail_eps=eps)


def gram(states) -> GramReport:
    """Gram matrix of a state set and its max entrywise deviation from identity.

    Accepts any nonempty sequence of equal-length Fock vectors (or an (n, dim)
    array).  The matrix is Hermitian by construction.
    """
    matrix = np.asarray(states, dtype=complex)
    if matrix.ndim == 1:
        matrix = matrix[None, :]
    if matrix.size == 0:
        raise ValueError("need at least one state")
    count = matrix.shape[0]
    g = np.empty((count, count), dtype=complex)
    for a in range(count):
        for b in range(count):
            g[a, b] = inner_product(matrix[a], matrix[b])
    deviation = float(np.max(np.abs(g - np.eye(count))))
    return GramReport(gram=g, max_deviation=deviation)


def roots_lemma_sum(n: int, m: int, s: int) -> complex:
    """Direct evaluation of sum_{j=0}^{n-1} w2^((m-s)*j), w2 = exp(2*pi*1j/n).

    The sum equals n exactly when ``m`` is congruent to ``s`` mod n and
    vanishes otherwise; it is evaluated term by term (each term an n-th root
    of unity), not by short-circuiting through that identity.  ``m`` and
    ``s`` may be any integers.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0j
    for j in range(n):
        total += cmath.exp(2j * cmath.pi * (((m - s) * j) % n) / n)
    return total


def raw_state_norm_sq_closed(n: int, alpha: complex, k: int) -> float:
    """Closed-form squared norm of the k-th raw cat state.

    Equals ``n * exp(-|alpha|^2) * f_k(|alpha|^2)``; useful as the analytic
    cross-check against the numerically summed raw states.
    """
    if not 0 <= k < n:
        raise ValueError(f"state index must lie in [0, {n}), got {k}")
    lam = abs(complex(alpha)) ** 2
    value = modexp_series(ModExpSpec(n, k), lam)
    return n * math.exp(-lam) * (value.real if isinstance(value, complex) else value)

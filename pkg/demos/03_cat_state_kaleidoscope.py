#!/usr/bin/env python3
"""Build the orthonormal cat-state bases and inspect what makes them tick.

Run:  python demos/03_cat_state_kaleidoscope.py
"""

import math

import numpy as np

from catscope import (
    annihilate,
    dft_matrix,
    gram,
    inner_product,
    kaleidoscope_basis,
    normalization_constants,
    roots_lemma_sum,
)


def main():
    print("=" * 72)
    print("From n rotated coherent states to n orthonormal qudit states")
    print("=" * 72)

    print("\nThe n = 2 mixing matrix is the Hadamard gate:")
    print(np.round(dft_matrix(2), 6))

    print("\nEven/odd qubit cat states at alpha = 1:")
    basis = kaleidoscope_basis(2, 1.0, 1e-14)
    lam = 1.0
    print("  normalization constants:", np.round(basis.norm_constants, 9))
    print("  closed forms         : ",
          round(math.exp(lam / 2) / (2 * math.sqrt(math.cosh(lam))), 9),
          round(math.exp(lam / 2) / (2 * math.sqrt(math.sinh(lam))), 9))
    print("  state 0 amplitudes (even levels only):", np.round(basis.states[0][:6].real, 5))
    print("  state 1 amplitudes (odd levels only): ", np.round(basis.states[1][:6].real, 5))

    print("\nThree states, alpha = 1: the Gram matrix is the 3x3 identity")
    basis = kaleidoscope_basis(3, 1.0, 1e-14)
    report = gram(basis.states)
    print(np.round(report.gram.real, 12))
    print(f"  max deviation from identity: {report.max_deviation:.2e}")

    print("\nWhy it works: state k lives only on Fock levels = k (mod n).")
    print("Amplitude magnitudes for n = 4, alpha = 1.5 (rows: k, cols: level):")
    basis = kaleidoscope_basis(4, 1.5, 1e-14)
    for k in range(4):
        row = "".join(f"{abs(a):8.4f}" for a in basis.states[k][:8])
        print(f"  k={k}: {row}")

    print("\nThe mechanism in one identity: sum_j w2^((m-k) j) = n * delta")
    for m in range(4):
        value = roots_lemma_sum(4, m, 1)
        print(f"  m={m}, k=1: {value.real:+.3f}{value.imag:+.3f}i")

    print("\nLowering acts as a cyclic shift on the basis labels:")
    basis = kaleidoscope_basis(5, 1.0, 1e-14)
    for k in range(5):
        lowered = annihilate(basis.states[k])
        lowered /= np.linalg.norm(lowered)
        target = (k - 1) % 5
        mag = abs(inner_product(basis.states[target], lowered))
        print(f"  a|{k}~>  ~  |{target}~>   overlap magnitude {mag:.12f}")

    print("\nNormalization constants grow as f_k shrinks (small alpha, large k):")
    consts = normalization_constants(5, 0.6)
    for k, c in enumerate(consts):
        print(f"  k={k}: {c:12.6f}")


if __name__ == "__main__":
    main()

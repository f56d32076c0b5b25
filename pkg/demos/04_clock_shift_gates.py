#!/usr/bin/env python3
"""Clock and shift matrices and their conjugation by the Fourier gate.

Run:  python demos/04_clock_shift_gates.py
"""

import cmath

import numpy as np

from catscope import (
    clock_matrix,
    dft_matrix,
    shift_matrix,
    unitarity_residual,
    verify_clock_shift_decomposition,
    weyl_commutation,
)


def main():
    print("=" * 72)
    print("Generalized Pauli pair: clock (diagonal) and shift (permutation)")
    print("=" * 72)

    print("\nn = 2 reduces to the familiar Pauli matrices:")
    print("  clock =\n", np.round(clock_matrix(2).real, 6))
    print("  shift =\n", np.round(shift_matrix(2).real, 6))

    n = 4
    print(f"\nn = {n}:")
    print("  clock diagonal:", np.round(np.diag(clock_matrix(n)), 6))
    print("  shift acts as e_j -> e_(j+1 mod n):")
    print(np.round(shift_matrix(n).real, 1))

    print("\nThe Fourier gate conjugates clock into shift: S1 = Q S3 Q^dag")
    for m in (2, 3, 8, 16):
        print(f"  n={m:2d}: residual {verify_clock_shift_decomposition(m):.2e}"
              f"   unitarity(Q) {unitarity_residual(dft_matrix(m)):.2e}")

    print("\nWeyl commutation S1 S3 = phase * S3 S1, phase an n-th root of unity:")
    for m in (2, 3, 5, 12):
        phase, residual = weyl_commutation(m)
        expected = cmath.exp(-2j * cmath.pi / m)
        print(f"  n={m:2d}: phase {phase:.6f}  expected {expected:.6f}"
              f"  residual {residual:.2e}")

    print("\nBoth matrices have order n (their n-th power is the identity):")
    for m in (3, 7):
        c = np.linalg.matrix_power(clock_matrix(m), m)
        s = np.linalg.matrix_power(shift_matrix(m), m)
        print(f"  n={m}: ||clock^n - I|| = {np.max(np.abs(c - np.eye(m))):.2e}"
              f"   ||shift^n - I|| = {np.max(np.abs(s - np.eye(m))):.2e}")


if __name__ == "__main__":
    main()

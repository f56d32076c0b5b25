#!/usr/bin/env python3
"""Tour of the truncated Fock-space layer: coherent states, overlaps, ladders.

Run:  python demos/01_coherent_states.py
"""

import math

import numpy as np

from catscope import (
    annihilate,
    coherent_overlap_closed,
    coherent_state,
    create,
    creation_dropped_weight,
    inner_product,
    rotated_overlap,
    truncation_dim,
)


def main():
    print("=" * 72)
    print("Coherent states in a truncated Fock space")
    print("=" * 72)

    alpha = 1.5 + 0.5j
    dim = truncation_dim(alpha, 1e-14)
    print(f"\nalpha = {alpha},  tail budget 1e-14  ->  dimension D = {dim}")

    v = coherent_state(alpha, dim)
    print(f"norm^2 = {np.vdot(v, v).real:.15f}   (deficit is the Poisson tail)")
    print("first amplitudes:", np.round(v[:4], 6))

    print("\nPhoton-number distribution is Poisson with mean |alpha|^2 =",
          f"{abs(alpha)**2:.2f}:")
    probs = np.abs(v) ** 2
    for m in range(0, 9, 2):
        bar = "#" * int(60 * probs[m])
        print(f"  P({m}) = {probs[m]:.4f}  {bar}")

    print("\n" + "=" * 72)
    print("Overlaps: the numerical pairing reproduces the closed form")
    print("=" * 72)
    for a, b in [(1.0, -1.0), (1.0, 1j), (alpha, 0.3 - 1.1j)]:
        dim_ab = 64
        numeric = inner_product(coherent_state(a, dim_ab), coherent_state(b, dim_ab))
        closed = coherent_overlap_closed(a, b)
        print(f"  <{a}|{b}>  numeric {numeric:.12f}")
        print(f"  {'':>14} closed  {closed:.12f}   |diff| = {abs(numeric-closed):.2e}")

    print("\nOpposite-phase pair: |<alpha|-alpha>| = exp(-2|alpha|^2)")
    print(f"  alpha=1: {abs(coherent_overlap_closed(1, -1)):.9f}"
          f"  vs exp(-2) = {math.exp(-2):.9f}")

    print("\nRotated copies on a regular n-gon (n = 4, alpha = 1):")
    for l in range(4):
        print(f"  <alpha | rot_{l} alpha> = {rotated_overlap(1.0, 4, 0, l):.9f}")

    print("\n" + "=" * 72)
    print("Ladder operators")
    print("=" * 72)
    print("annihilate is diagonalized by coherent states:")
    residual = np.linalg.norm(annihilate(v) - alpha * v)
    print(f"  ||a|alpha> - alpha|alpha>|| = {residual:.2e}")

    vac = np.zeros(6, dtype=complex)
    vac[0] = 1.0
    two = create(create(vac)) / math.sqrt(2)
    print("  (a^dag)^2/sqrt(2) |0> =", np.round(two.real, 6))

    top = np.zeros(6, dtype=complex)
    top[-1] = 1.0
    print("  raising the top level is dropped; discarded weight =",
          creation_dropped_weight(top))


if __name__ == "__main__":
    main()

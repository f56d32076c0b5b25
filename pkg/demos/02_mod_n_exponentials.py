#!/usr/bin/env python3
"""The mod-n exponential family f_s: two evaluation routes and the ODE cycle.

Run:  python demos/02_mod_n_exponentials.py
"""

import math

from catscope import ModExpSpec, derivative_residue, modexp_all, modexp_roots, modexp_series


def main():
    print("=" * 72)
    print("f_s(x) = sum_k x^(nk+s)/(nk+s)!  picks every n-th term of exp")
    print("=" * 72)

    print("\nn = 2 recovers the hyperbolic pair at x = 1:")
    print(f"  f_0(1) = {modexp_series(ModExpSpec(2, 0), 1.0):.12f}"
          f"   cosh(1) = {math.cosh(1):.12f}")
    print(f"  f_1(1) = {modexp_series(ModExpSpec(2, 1), 1.0):.12f}"
          f"   sinh(1) = {math.sinh(1):.12f}")

    print("\nThe family partitions the exponential: sum_s f_s(x) = e^x")
    for n in (3, 5):
        x = 2.0
        values = modexp_all(n, x)
        print(f"  n={n}: sum = {sum(values):.12f}   e^{x:g} = {math.exp(x):.12f}")

    print("\nTwo independent routes: series vs roots-of-unity average")
    for n, s, x in [(3, 0, 1.0), (4, 2, -3.0), (6, 5, 2.5)]:
        series = modexp_series(ModExpSpec(n, s), x)
        roots = modexp_roots(ModExpSpec(n, s), x)
        print(f"  f_{s} (mod {n}) at x={x:g}:  series {series:.12f}"
              f"  roots {roots.real:.12f}  |diff| {abs(series - roots):.2e}")

    print("\n" + "=" * 72)
    print("Derivative cycle: d/dx f_s = f_(s-1 mod n), so f^(n) = f")
    print("=" * 72)
    n = 4
    spec = ModExpSpec(n, 2)
    chain = [spec]
    for _ in range(n):
        chain.append(derivative_residue(chain[-1]))
    arrow = " -> ".join(f"f_{c.s}" for c in chain)
    print(f"\n  n={n}: {arrow}   (back to the start after {n} derivatives)")

    x, h = 1.3, 1e-5
    fd = (modexp_series(spec, x + h) - modexp_series(spec, x - h)) / (2 * h)
    exact = modexp_series(derivative_residue(spec), x)
    print(f"  central difference of f_2 at x={x}: {fd:.10f}")
    print(f"  f_1 at x={x}:                       {exact:.10f}")

    print("\nInitial data at 0 is a Kronecker delta across the family:")
    for s in range(n):
        row = [modexp_series(derivative_residue(ModExpSpec(n, s), order=j), 0.0)
               for j in range(n)]
        print(f"  f_{s}^(j)(0), j=0..{n-1}:", [f"{v:g}" for v in row])


if __name__ == "__main__":
    main()

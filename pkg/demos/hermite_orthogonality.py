"""Quaternionic Hermite polynomials are orthogonal on every slice.

The Gaussian pairing over a slice C_I gives
    <H_{m,n}, H_{j,k}> = pi m! n! delta_{mj} delta_{nk}
independently of the chosen imaginary unit I.

Run:  python3 demos/hermite_orthogonality.py
"""
import math

from spolyreg import SliceQuadrature, hermite_series, imaginary_unit, inner_slice

for unit in (imaginary_unit(1, 0, 0), imaginary_unit(1, 1, 1)):
    Q = SliceQuadrature(24, unit=unit)
    print(f"slice unit = ({unit.x:.4f}, {unit.y:.4f}, {unit.z:.4f})")
    print("  (m,n) x (j,k)   inner product      pi m! n!")
    for (m, n), (j, k) in [((1, 1), (1, 1)), ((2, 1), (2, 1)),
                           ((2, 1), (1, 2)), ((3, 0), (3, 0)), ((3, 2), (0, 0))]:
        v = inner_slice(hermite_series(m, n), hermite_series(j, k), Q)
        ref = math.pi * math.factorial(m) * math.factorial(n) if (m, n) == (j, k) else 0.0
        print(f"  ({m},{n}) x ({j},{k})   {v.w:+.12f}   {ref:+.12f}")
    print()

print("The diagonal entries pin the normalization used by every kernel")
print("and transform in this package.")

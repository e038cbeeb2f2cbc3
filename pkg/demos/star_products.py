"""Star products: multiplication that respects slice regularity.

Pointwise products of slice regular functions are generally not slice
regular; the star product convolves coefficient sequences instead and
stays inside the class.  On a common slice it reduces to the pointwise
product, which is what makes closed-form comparisons possible.

Run:  python3 demos/star_products.py
"""
from fractions import Fraction

from spolyreg import SliceSeries, laguerre, laguerre_star, quat

i = quat(0, 1, 0, 0)
j = quat(0, 0, 1, 0)

f = SliceSeries((quat(0), i))   # q -> q i
g = SliceSeries((quat(0), j))   # q -> q j

print("Ordered coefficient convolution:")
print("  (q i) * (q j) has coefficients", [c.as_tuple() for c in f.star(g).coeffs])
print("  (q j) * (q i) has coefficients", [c.as_tuple() for c in g.star(f).coeffs])
print("  the two disagree by the sign of k: the product is noncommutative\n")

p = quat(0.4, 1.1, 0, 0)
fs = SliceSeries((quat(1), quat(0, 2, 0, 0)))
gs = SliceSeries((quat(0, -1, 0, 0), quat(3)))
lhs = fs.star(gs).eval(p)
rhs = fs.eval(p) * gs.eval(p)
print("Same-slice evaluation is a homomorphism:")
print(f"  (f*g)(p)  = {lhs.as_tuple()}")
print(f"  f(p) g(p) = {rhs.as_tuple()}\n")

# The star Laguerre polynomial of the star modulus |p-q|^2 reduces, on a
# common slice, to the classical Laguerre value: here |p-q|^2 = 2 exactly.
U = quat(0, Fraction(3, 5), Fraction(4, 5), 0)   # exact unit, U^2 = -1
pp = quat(2) + U
qq = quat(1) + U * 2
got = laguerre_star(2, 0, qq).eval_left(pp)
print("Laguerre-star reduction with exact rational arithmetic:")
print("  L_{*2}(|p-q|^2_*) at common-slice points =", got.as_tuple())
print("  classical L_2(2)                         =", laguerre(2, 0, Fraction(2)))

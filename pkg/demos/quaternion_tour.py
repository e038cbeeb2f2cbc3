"""A short tour of the quaternion layer.

Run:  python3 demos/quaternion_tour.py
"""
from fractions import Fraction

from spolyreg import format_quaternion, parse_quaternion, quat, split

i = quat(0, 1, 0, 0)
j = quat(0, 0, 1, 0)
k = quat(0, 0, 0, 1)

print("Hamilton's rules")
print("  i*j =", format_quaternion(i * j), "   j*i =", format_quaternion(j * i))
print("  i*j*k =", format_quaternion(i * j * k))

q = quat(1, 2, 3, 4)
print("\nA point and its canonical forms")
print("  q =", format_quaternion(q))
s = q.to_slice()
print(f"  slice form: x={s.x}, y={s.y:.6f}, unit={format_quaternion(s.unit)}")
p = q.to_polar()
print(f"  polar form: r={p.r:.6f}, theta={p.theta:.6f}")

c1, c2 = split(q, i, j)
print("\nSymmetry split across the slice C_i:  q = c1 + c2*j")
print("  c1 =", format_quaternion(c1), "  c2 =", format_quaternion(c2))
print("  reassembled:", format_quaternion(c1 + c2 * j))

print("\nExact arithmetic just works: components may be rationals")
r = quat(Fraction(1, 3), Fraction(1, 2), 0, 0)
print("  r^2 =", (r * r).as_tuple())

print("\nText format round trip")
t = parse_quaternion("1-2i+0.5k")
print("  parsed:", t.as_tuple(), " formatted:", format_quaternion(t))

"""
Torsion in SL(2,Z) and GL(2,Z)
==============================

A finite-order matrix is conjugate to exactly one of a short list of
representatives. The order alone does not tell S from S^-1 in SL(2,Z);
the exponent of a braid lift modulo 12 does.
"""
import itertools

from b3aut.braid3 import matrix_to_braid
from b3aut.intmat import Mat2, order, torsion_class_gl, torsion_class_sl

box = range(-3, 4)
counts = {}
for e, f, g, h in itertools.product(box, repeat=4):
    m = Mat2(e, f, g, h)
    if m.det() != 1 or order(m) == float("inf"):
        continue
    cls = torsion_class_sl(m)
    counts[cls.name] = counts.get(cls.name, 0) + 1
print("SL(2,Z) torsion matrices with entries in [-3,3], by class:")
for name, k in sorted(counts.items()):
    print(f"  {name:<7} {k}")

S = Mat2(0, -1, 1, 0)
for m in (S, S.inv()):
    lift = matrix_to_braid(m)
    print(m, "lift", lift, "exponent", lift.exponent_sum() % 12, "->", torsion_class_sl(m).name)

# in GL(2,Z) the orientation-reversing involutions split into two classes
for m in (Mat2(0, 1, 1, 0), Mat2(-1, 0, 0, 1), Mat2(1, 1, 0, -1), Mat2(1, 0, 2, -1)):
    print(m, "->", torsion_class_gl(m).name)

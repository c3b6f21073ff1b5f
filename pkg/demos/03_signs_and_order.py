"""
Signs, subtraction and order
============================

A fold into Z + Z + Z, whose automorphism is built from the splitting
equivalence, tells negative, zero and positive integers apart.  From there
we get subtraction, a strict order and an equality test, none of which ever
looks inside an integer.
"""

from natfromint.harness import numeral, reveal_sum
from natfromint.kernel import counting
from natfromint.signs import classify, decompose, eq_derived, lt, sub

for k in (-3, -1, 0, 1, 4):
    print(f"{k:3d}: {classify(numeral(k))}, component {reveal_sum(decompose(numeral(k)))}")

# payloads on the positive side run 0, 1, 3, 7, ... and are never needed for
# classification, so they stay unevaluated
with counting() as c:
    print("classify(300) =", classify(numeral(300)))
print("  sigma steps:", c.delta.sigma_steps, "fold steps:", c.delta.fold_steps)

print("-5 < 3:", lt(numeral(-5), numeral(3)))
print("3 < 3:", lt(numeral(3), numeral(3)))
print("eq(4, 4):", eq_derived(numeral(4), numeral(4)), " eq(2, 3):", eq_derived(numeral(2), numeral(3)))
print("7 - 9 classifies as", classify(sub(numeral(7), numeral(9))))

"""
Even and odd halves
===================

Folding the integers into their own square gives doubling; folding them into
the twisted rotation on Z + Z splits every integer into an even or odd half.
"""

from natfromint.algebra import Left, Right
from natfromint.doubling import double, split, unsplit
from natfromint.harness import numeral, reveal, reveal_sum

for k in range(-4, 5):
    print(f"{k:3d} -> double {reveal(double(numeral(k))):3d}, split {reveal_sum(split(numeral(k)))}")

# unsplit sends left(m) to 2m and right(m) to 2m + 1
print("unsplit(left 3) =", reveal(unsplit(Left(numeral(3)))))
print("unsplit(right 3) =", reveal(unsplit(Right(numeral(3)))))

bad = [k for k in range(-200, 201) if reveal(unsplit(split(numeral(k)))) != k]
print("round-trip failures in [-200, 200]:", bad)

"""
Sealed integers and folds
=========================

The kernel hands out integers as opaque handles.  The only things you can do
with one are take its successor or predecessor, or fold it into another
integer algebra.
"""

from natfromint.algebra import Iso
from natfromint.harness import numeral, reveal
from natfromint.kernel import IntAlgebra, counting, fold, pred, succ, zero

# numerals are built by walking from zero; reveal is the test oracle's window
five = numeral(5)
print("five:", five, "revealed:", reveal(five))

# any carrier with a point and an invertible step is an integer algebra
clock = IntAlgebra(0, Iso(lambda h: (h + 1) % 12, lambda h: (h - 1) % 12))
print("5 hours after midnight:", fold(clock, five))
print("5 hours before midnight:", fold(clock, numeral(-5)))

# folding y into (x, pred, succ) subtracts y from x
subtract_from_3 = IntAlgebra(numeral(3), Iso(pred, succ))
print("3 - 5 =", reveal(fold(subtract_from_3, five)))

# folds take exactly |n| structure steps
with counting() as c:
    fold(clock, numeral(-40))
print("fold steps for -40:", c.delta.fold_steps)
print("zero is zero:", reveal(zero()))

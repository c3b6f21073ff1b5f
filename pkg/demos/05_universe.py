"""
A universe of codes
===================

Codes are endofunctions on the integers; their elements are their fixpoints.
The splitting equivalence gives empty types and binary coproducts.
"""

from natfromint.harness import numerals, reveal
from natfromint.universe import code_coproduct, code_empty, code_identity, code_unit, is_el


def members(code, lim=12):
    return [reveal(n) for n in numerals(-lim, lim) if is_el(code, n)]


print("unit:", members(code_unit()))
print("empty:", members(code_empty()))
print("unit + unit:", members(code_coproduct(code_unit(), code_unit())))
print("(unit + unit) + unit:", members(code_coproduct(code_coproduct(code_unit(), code_unit()), code_unit())))
print("all + empty (the evens):", members(code_coproduct(code_identity(), code_empty())))

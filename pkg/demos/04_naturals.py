"""
Natural numbers from partial sections
=====================================

M, the middle and positive integers, is freely generated by its base point
and successor.  Its recursor comes from partial sections defined below a
bound; rectifying M gives Nat, with induction.
"""

from natfromint.harness import m_elem, nat_of_oracle, numeral, reveal
from natfromint.nat_derivation import (
    DisplayedAlgebra,
    build_indfun,
    m_ind,
    nat_add,
    nat_ind,
    nat_mul,
    nat_pred,
    nat_to_int,
    nat_zero,
    rank_algebra,
)

# an inductive section below 4, evaluated everywhere it is defined
f = build_indfun(numeral(4), rank_algebra())
print("section below 4:", [f.eval(m_elem(k)) for k in range(4)])

# recursion on M into strings
words = DisplayedAlgebra(lambda x: "z", lambda w: "s(" + w + ")")
print("m_ind at 3:", m_ind(words, m_elem(3)))

two, three = nat_of_oracle(2), nat_of_oracle(3)
print("2 + 3 =", reveal(nat_to_int(nat_add(two, three))))
print("2 * 3 =", reveal(nat_to_int(nat_mul(two, three))))

# factorial by induction
fact = nat_ind(1, lambda n, acc: acc * (reveal(nat_to_int(n)) + 1), nat_of_oracle(6))
print("6! =", fact)

print("pred of zero:", nat_pred(nat_zero()))
print("pred of 3:", reveal(nat_to_int(nat_pred(three).value)))

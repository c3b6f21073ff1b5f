"""Natural numbers constructed from a sealed integer type."""
from .algebra import Iso, Left, Mid, Right, FixPoint, roll, fixpoints_of
from .kernel import (
    Counters,
    IntAlgebra,
    NatAlgebra,
    OpaqueInt,
    counters_reset,
    counters_snapshot,
    counting,
    fold,
    pred,
    succ,
    zero,
)
from .doubling import double, split, square, twist, unsplit
from .signs import MElem, Sign, case_M, classify, decompose, eq_derived, iota_M, iota_z, lt, s_M, sub
from .nat_derivation import (
    DisplayedAlgebra,
    Nat,
    PartialSection,
    build_indfun,
    m_ind,
    nat_add,
    nat_ind,
    nat_mul,
    nat_pred,
    nat_succ,
    nat_to_int,
    nat_zero,
    rectify,
)
from .universe import code_coproduct, code_empty, code_unit, embed_left, embed_right, is_el

__version__ = "0.1.0"

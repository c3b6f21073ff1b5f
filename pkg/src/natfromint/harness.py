"""
natfromint.harness

Test-oracle access to the sealed integers.  Construction modules must never
import this module; ``seal.check_seal`` enforces that.
"""
from __future__ import annotations

from . import kernel
from .kernel import OpaqueInt, pred, succ, zero
from .nat_derivation import Nat, nat_succ, nat_zero
from .signs import MElem


def reveal(n: OpaqueInt) -> int:
    return kernel._reveal(n)


def numeral(k: int) -> OpaqueInt:
    """Build ``k`` by iterating succ or pred from zero."""
    n = zero()
    step = succ if k >= 0 else pred
    for _ in range(abs(k)):
        n = step(n)
    return n


def numerals(lo: int, hi: int) -> list[OpaqueInt]:
    """``[lo, hi]`` as OpaqueInts, walking upward from ``numeral(lo)``."""
    out = [numeral(lo)]
    for _ in range(hi - lo):
        out.append(succ(out[-1]))
    return out


def m_elem(k: int) -> MElem:
    if k < 0:
        raise ValueError(f"no element of M below zero: {k}")
    return MElem(numeral(k))


def nat_of_oracle(k: int) -> Nat:
    if k < 0:
        raise ValueError(f"natural numbers are nonnegative, got {k}")
    n = nat_zero()
    for _ in range(k):
        n = nat_succ(n)
    return n


def reveal_sum(x):
    """Reveal payloads inside a (possibly lazy) sum value, for display."""
    payload = x.value
    if hasattr(payload, "force"):
        payload = payload.force()
    if isinstance(payload, OpaqueInt):
        payload = reveal(payload)
    return type(x).__name__.lower(), payload

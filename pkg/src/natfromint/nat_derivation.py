"""
natfromint.nat_derivation

Natural numbers rebuilt from the sealed integers.

``M`` (the middle and positive integers) is freely generated by
``iota_z`` and ``s_M``.  Its recursor ``m_ind`` is obtained from partial
sections: a ``PartialSection`` with bound ``u`` is defined on the elements of
``M`` below ``u``.  ``ext`` grows the bound by one, ``res`` shrinks it, and
folding the integers into ``(empty, Iso(ext, res))`` yields an inductive
section below any bound.  Rectifying ``M`` against its own recursor then
gives ``Nat`` with a working induction principle.

Witnesses are erased to flags throughout; sections are closure chains.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterator, TypeVar

from .algebra import UNIT, Eq, Iso, Left, Right, Sum2
from .kernel import IntAlgebra, OpaqueInt, fold, pred, succ, zero
from .signs import (
    MElem,
    WitnessError,
    case_M,
    eq_derived,
    iota_M,
    iota_z,
    lt,
    s_M,
)

V = TypeVar("V")
P = TypeVar("P")


class OutOfDomain(LookupError):
    """A partial section was evaluated at or above its bound."""


@dataclass(frozen=True)
class DisplayedAlgebra(Generic[V]):
    z_a: Callable[[OpaqueInt], V]
    s_a: Callable[[V], V]


@dataclass(frozen=True)
class PartialSection(Generic[V]):
    bound: OpaqueInt
    eval: Callable[[MElem], V]


def _nowhere(m: MElem):
    raise OutOfDomain("the empty section is defined nowhere")


def empty_section() -> PartialSection[Any]:
    return PartialSection(zero(), _nowhere)


def _require_bound(f: PartialSection, expected: OpaqueInt) -> None:
    if not eq_derived(f.bound, expected):
        raise ValueError("partial section has the wrong bound")


def _ext(alg: DisplayedAlgebra[V], f: PartialSection[V]) -> PartialSection[V]:
    z_a, s_a, below = alg.z_a, alg.s_a, f.eval

    def eval(m: MElem) -> V:
        match case_M(m):
            case Left(x):
                return z_a(x)
            case Right(m_prev):
                return s_a(below(m_prev))
        raise TypeError(m)

    return PartialSection(succ(f.bound), eval)


def _res(f: PartialSection[V]) -> PartialSection[V]:
    return PartialSection(pred(f.bound), f.eval)


def ext(u: OpaqueInt, alg: DisplayedAlgebra[V], f: PartialSection[V]) -> PartialSection[V]:
    _require_bound(f, u)
    return _ext(alg, f)


def res(u: OpaqueInt, f: PartialSection[V]) -> PartialSection[V]:
    _require_bound(f, succ(u))
    return _res(f)


def elements_below(u: OpaqueInt) -> Iterator[MElem]:
    """Elements of M strictly below ``u``, in increasing order."""
    m = iota_z(zero())
    while lt(iota_M(m), u):
        yield m
        m = s_M(m)


def sections_agree(
    f: PartialSection[V], g: PartialSection[V], eq: Eq = operator.eq
) -> bool:
    """Extensional agreement of two sections with the same bound."""
    if not eq_derived(f.bound, g.bound):
        return False
    return all(eq(f.eval(m), g.eval(m)) for m in elements_below(f.bound))


def commute_check(
    u: OpaqueInt, alg: DisplayedAlgebra[V], f: PartialSection[V], eq: Eq = operator.eq
) -> bool:
    """Does ``ext_u . res_u`` agree with ``res_{S u} . ext_{S u}`` at ``f``?"""
    lhs = ext(u, alg, res(u, f))
    su = succ(u)
    rhs = res(su, ext(su, alg, f))
    return sections_agree(lhs, rhs, eq)


def section_algebra(alg: DisplayedAlgebra[V]) -> IntAlgebra[PartialSection[V]]:
    return IntAlgebra(empty_section(), Iso(lambda f: _ext(alg, f), _res))


def build_indfun(u: OpaqueInt, alg: DisplayedAlgebra[V]) -> PartialSection[V]:
    """An inductive partial section of ``alg`` below ``u``."""
    return fold(section_algebra(alg), u)


def m_ind(alg: DisplayedAlgebra[V], m: MElem) -> V:
    return build_indfun(succ(iota_M(m)), alg).eval(m)


def rectify(m: MElem) -> MElem:
    base = iota_z(zero())
    return m_ind(DisplayedAlgebra(lambda _: base, s_M), m)


# -- the natural numbers ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Nat:
    """A fixpoint of ``rectify``."""

    m: MElem
    checked: bool = True

    def __post_init__(self):
        if not eq_derived(iota_M(rectify(self.m)), iota_M(self.m)):
            raise WitnessError("not a fixpoint of rectify")

    @classmethod
    def _transported(cls, m: MElem) -> "Nat":
        n = object.__new__(cls)
        object.__setattr__(n, "m", m)
        object.__setattr__(n, "checked", True)
        return n

    def __eq__(self, other):
        if not isinstance(other, Nat):
            return NotImplemented
        return self.m == other.m

    __hash__ = None


def nat_zero() -> Nat:
    return Nat._transported(iota_z(zero()))


def nat_succ(n: Nat) -> Nat:
    return Nat._transported(s_M(n.m))


def nat_pred(n: Nat) -> Sum2[tuple, Nat]:
    """Inverse of ``[nat_zero, nat_succ]``: stability of Nat."""
    match case_M(n.m):
        case Left(x):
            if not eq_derived(x, zero()):
                raise WitnessError("a fixpoint of rectify sits at a non-zero base point")
            return Left(UNIT)
        case Right(m_prev):
            return Right(Nat._transported(m_prev))
    raise TypeError(n)


def nat_ind(z_p: P, s_p: Callable[[Nat, P], P], n: Nat) -> P:
    """Induction on Nat via the recursor of M.

    The carrier pairs each element of M with a guarded value: a function
    from the (erased) fixpoint witness to the result.  The base case is
    path induction on ``z = y``, which at set level is just ``z_p``.
    """

    def z_a(x: OpaqueInt):
        return iota_z(x), lambda witness: z_p

    def s_a(pair):
        m, guarded = pair
        return s_M(m), lambda witness: s_p(Nat._transported(m), guarded(witness))

    _, guarded = m_ind(DisplayedAlgebra(z_a, s_a), n.m)
    return guarded(n.checked)


def nat_to_int(n: Nat) -> OpaqueInt:
    return iota_M(n.m)


def nat_add(a: Nat, b: Nat) -> Nat:
    return nat_ind(a, lambda _, acc: nat_succ(acc), b)


def nat_mul(a: Nat, b: Nat) -> Nat:
    return nat_ind(nat_zero(), lambda _, acc: nat_add(acc, a), b)


def rank_algebra() -> DisplayedAlgebra[int]:
    """Counts successor steps into machine ints; debugging and benchmarks."""
    return DisplayedAlgebra(lambda _: 0, lambda k: k + 1)

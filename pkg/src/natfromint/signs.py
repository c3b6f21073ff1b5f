"""
natfromint.signs

Sign classification of the sealed integers without ever looking inside them.

Given ``e : A ~ B + A`` the ternary sum ``A + B + A`` carries an
automorphism (``shift_auto``).  Folding the integers into it, starting at the
middle, sends every integer to one of three components: negative, middle or
positive.  With ``A = B = Z`` and ``e = split`` this gives ``classify``, and
from it subtraction, the strict order and a derived equality.

Payloads in the outer components grow like powers of two under ``split``,
and computing them costs kernel folds of that size.  ``decompose`` therefore
keeps payloads deferred; ``classify`` only ever inspects tags.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TypeVar

from .algebra import Iso, Lazy, Left, Mid, Right, Sum2, Sum3
from .doubling import split_iso
from .kernel import IntAlgebra, OpaqueInt, count_sigma, fold, pred, succ, zero

A = TypeVar("A")
B = TypeVar("B")

Ternary = Sum3


class Sign(enum.Enum):
    NEG = "Neg"
    MID = "Mid"
    POS = "Pos"

    def __str__(self) -> str:
        return self.value


class WitnessError(AssertionError):
    """A checked witness failed: the construction itself is broken."""


def shift_auto(e: Iso[A, Sum2[B, A]]) -> Iso[Sum3[A, B, A], Sum3[A, B, A]]:
    """The reassociating automorphism of ``A + B + A`` induced by ``e``.

    Forward uses ``e`` on the left component and ``e^-1`` on the others:

        left(a)  -> mid(b)   if e(a) = left(b)
                 -> left(a') if e(a) = right(a')
        mid(b)   -> right(e^-1(left(b)))
        right(a) -> right(e^-1(right(a)))

    Backward is the mirror image.  Every application counts one sigma step.
    """
    e_fwd, e_bwd = e.forward, e.backward

    def forward(x):
        count_sigma()
        match x:
            case Right(a):
                return Right(e_bwd(Right(a)))
            case Mid(b):
                return Right(e_bwd(Left(b)))
            case Left(a):
                match e_fwd(a):
                    case Left(b):
                        return Mid(b)
                    case Right(a2):
                        return Left(a2)
        raise TypeError(x)

    def backward(x):
        count_sigma()
        match x:
            case Left(a):
                return Left(e_bwd(Right(a)))
            case Mid(b):
                return Left(e_bwd(Left(b)))
            case Right(a):
                match e_fwd(a):
                    case Left(b):
                        return Mid(b)
                    case Right(a2):
                        return Right(a2)
        raise TypeError(x)

    return Iso(forward, backward)


def deferred(e: Iso[A, Sum2[B, A]]) -> Iso[Lazy[A], Sum2[Lazy[B], Lazy[A]]]:
    """Lift ``e`` to deferred payloads.

    The forward direction has to force its argument to learn the tag.  The
    backward direction never forces anything.
    """

    def forward(la):
        match e.forward(la.force()):
            case Left(b):
                return Left(Lazy.now(b))
            case Right(a):
                return Right(Lazy.now(a))
        raise TypeError(la)

    def backward(x):
        match x:
            case Left(lb):
                return Lazy(lambda: e.backward(Left(lb.force())))
            case Right(la):
                return Lazy(lambda: e.backward(Right(la.force())))
        raise TypeError(x)

    return Iso(forward, backward)


def sign_algebra() -> IntAlgebra[Ternary]:
    return IntAlgebra(Mid(Lazy.now(zero())), shift_auto(deferred(split_iso())))


def decompose(n: OpaqueInt) -> Ternary:
    """Image of ``n`` in ``Z + Z + Z``; payloads are ``Lazy`` and internal."""
    return fold(sign_algebra(), n)


def classify(n: OpaqueInt) -> Sign:
    match decompose(n):
        case Left(_):
            return Sign.NEG
        case Mid(_):
            return Sign.MID
        case Right(_):
            return Sign.POS
    raise TypeError(n)


def sub(x: OpaqueInt, y: OpaqueInt) -> OpaqueInt:
    """``x - Z = x`` and ``x - S(y) = S^-1(x - y)``."""
    return fold(IntAlgebra(x, Iso(pred, succ)), y)


def lt(x: OpaqueInt, y: OpaqueInt) -> bool:
    return classify(sub(x, y)) is Sign.NEG


def eq_derived(x: OpaqueInt, y: OpaqueInt) -> bool:
    return classify(sub(x, y)) is Sign.MID


# -- the carrier M = Z0 + Z+ ----------------------------------------------------


@dataclass(frozen=True, eq=False)
class MElem:
    """An integer known to lie in the middle or positive component."""

    value: OpaqueInt
    checked: bool = True

    def __post_init__(self):
        if classify(self.value) is Sign.NEG:
            raise WitnessError("MElem built from a negative integer")

    @classmethod
    def _transported(cls, value: OpaqueInt) -> "MElem":
        m = object.__new__(cls)
        object.__setattr__(m, "value", value)
        object.__setattr__(m, "checked", True)
        return m

    def __eq__(self, other):
        if not isinstance(other, MElem):
            return NotImplemented
        return eq_derived(self.value, other.value)

    __hash__ = None


def iota_z(n: OpaqueInt) -> MElem:
    if classify(n) is not Sign.MID:
        raise WitnessError("iota_z expects an element of the middle component")
    return MElem._transported(n)


def iota_M(m: MElem) -> OpaqueInt:
    return m.value


def s_M(m: MElem) -> MElem:
    # x in M iff S(x) is positive, so the witness transports.
    return MElem._transported(succ(m.value))


def case_M(m: MElem) -> Sum2[OpaqueInt, MElem]:
    """Inverse of ``[iota_z, s_M] : Z0 + M -> M``."""
    match classify(m.value):
        case Sign.MID:
            return Left(m.value)
        case Sign.POS:
            return Right(MElem(pred(m.value)))
    raise WitnessError("MElem holds a negative integer")

"""
natfromint.doubling

The splitting equivalence between the integers and two copies of the
integers, built from kernel folds alone.  ``split`` sends even numbers to
the left copy and odd numbers to the right copy, halving (rounding down).
"""
from __future__ import annotations

from typing import TypeVar

from .algebra import Iso, Left, Right, Sum2, either
from .kernel import IntAlgebra, OpaqueInt, fold, integers, succ

T = TypeVar("T")


def square(alg: IntAlgebra[T]) -> IntAlgebra[T]:
    """Same carrier and point, structure automorphism applied twice."""
    f, b = alg.s.forward, alg.s.backward
    return IntAlgebra(alg.z, Iso(lambda x: f(f(x)), lambda x: b(b(x))))


def twist(alg: IntAlgebra[T]) -> IntAlgebra[Sum2[T, T]]:
    """The twisted rotation on ``T + T``.

    ``left(x) -> right(x) -> left(s(x))``, so squaring it acts by ``s`` on
    each copy separately.
    """
    s, s_inv = alg.s.forward, alg.s.backward

    def forward(x):
        match x:
            case Left(a):
                return Right(a)
            case Right(a):
                return Left(s(a))
        raise TypeError(x)

    def backward(x):
        match x:
            case Right(a):
                return Left(a)
            case Left(a):
                return Right(s_inv(a))
        raise TypeError(x)

    return IntAlgebra(Left(alg.z), Iso(forward, backward))


def double(n: OpaqueInt) -> OpaqueInt:
    return fold(square(integers()), n)


def split(n: OpaqueInt) -> Sum2[OpaqueInt, OpaqueInt]:
    return fold(twist(integers()), n)


def unsplit(x: Sum2[OpaqueInt, OpaqueInt]) -> OpaqueInt:
    return either(double, lambda m: succ(double(m)))(x)


def split_iso() -> Iso[OpaqueInt, Sum2[OpaqueInt, OpaqueInt]]:
    return Iso(split, unsplit)

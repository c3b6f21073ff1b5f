"""
natfromint.algebra

Generic set-level machinery: isomorphisms, tagged sums, fixpoints and the
rolling rule.  Nothing here knows about the integers.

Identity witnesses are erased.  A fixpoint is a value plus a flag saying
that ``endo(value) == value`` was checked (or transported) when it was made.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, TypeVar, Union

A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")
T = TypeVar("T")
X = TypeVar("X")
Y = TypeVar("Y")

Eq = Callable[[Any, Any], bool]

UNIT = ()


@dataclass(frozen=True)
class Iso(Generic[X, Y]):
    """A pair of mutually inverse functions.

    The round trips are contract obligations, checked extensionally by
    tests; nothing here enforces them.
    """

    forward: Callable[[X], Y]
    backward: Callable[[Y], X]

    def inverse(self) -> "Iso[Y, X]":
        return Iso(self.backward, self.forward)

    def then(self, other: "Iso[Y, T]") -> "Iso[X, T]":
        f, g = self.forward, other.forward
        fb, gb = self.backward, other.backward
        return Iso(lambda x: g(f(x)), lambda t: fb(gb(t)))


# -- tagged sums -----------------------------------------------------------------


@dataclass(frozen=True)
class Left(Generic[A]):
    value: A


@dataclass(frozen=True)
class Mid(Generic[A]):
    value: A


@dataclass(frozen=True)
class Right(Generic[A]):
    value: A


Sum2 = Union[Left[A], Right[B]]
Sum3 = Union[Left[A], Mid[B], Right[C]]


def either(on_left: Callable[[A], T], on_right: Callable[[B], T]) -> Callable[[Sum2], T]:
    """The copairing ``[f, g]`` out of a binary sum."""

    def case(x):
        match x:
            case Left(a):
                return on_left(a)
            case Right(b):
                return on_right(b)
        raise TypeError(f"not a binary sum: {x!r}")

    return case


def bimap(on_left: Callable[[A], C], on_right: Callable[[B], T]) -> Callable[[Sum2], Sum2]:
    return either(lambda a: Left(on_left(a)), lambda b: Right(on_right(b)))


def swap(x: Sum2) -> Sum2:
    match x:
        case Left(a):
            return Right(a)
        case Right(b):
            return Left(b)
    raise TypeError(f"not a binary sum: {x!r}")


def sum_eq(x, y, eq: Eq = operator.eq) -> bool:
    """No-confusion equality: tags must agree, then payloads are compared."""
    return type(x) is type(y) and eq(x.value, y.value)


# -- deferred values -------------------------------------------------------------


class Lazy(Generic[T]):
    """A memoized thunk."""

    __slots__ = ("_thunk", "_value", "_done")

    def __init__(self, thunk: Callable[[], T]) -> None:
        self._thunk = thunk
        self._done = False
        self._value = None

    @classmethod
    def now(cls, value: T) -> "Lazy[T]":
        lazy = cls(lambda: value)
        lazy._value, lazy._done, lazy._thunk = value, True, None
        return lazy

    def force(self) -> T:
        if not self._done:
            self._value = self._thunk()
            self._done, self._thunk = True, None
        return self._value

    def __repr__(self) -> str:
        return f"Lazy({self._value!r})" if self._done else "Lazy(<pending>)"


# -- fixpoints -------------------------------------------------------------------


class NotAFixpoint(ValueError):
    pass


@dataclass(frozen=True)
class FixPoint(Generic[T]):
    value: T
    checked: bool = True


def fixpoint(endo: Callable[[T], T], x: T, eq: Eq = operator.eq) -> FixPoint[T]:
    if not eq(endo(x), x):
        raise NotAFixpoint(x)
    return FixPoint(x)


def is_fixpoint(endo: Callable[[T], T], fp: FixPoint[T], eq: Eq = operator.eq) -> bool:
    return eq(endo(fp.value), fp.value)


def fixpoints_of(
    endo: Callable[[T], T], carrier: Iterable[T], eq: Eq = operator.eq
) -> list[FixPoint[T]]:
    return [FixPoint(x) for x in carrier if eq(endo(x), x)]


def roll(f: Callable[[X], Y], g: Callable[[Y], X]) -> Iso[FixPoint[X], FixPoint[Y]]:
    """The rolling rule: ``fix(g . f)`` is equivalent to ``fix(f . g)``.

    Forward is ``f`` on the underlying value and backward is ``g``.  The
    witness is transported, not rechecked: ``g(f(x)) = x`` gives
    ``f(g(f(x))) = f(x)``.
    """
    return Iso(
        lambda fp: FixPoint(f(fp.value), fp.checked),
        lambda fp: FixPoint(g(fp.value), fp.checked),
    )

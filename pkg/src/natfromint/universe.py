"""
natfromint.universe

A universe of codes: a code is an endofunction on the integers and its
elements are its fixpoints.  Unit, empty and binary coproduct codes are
built by transporting endofunctions of ``Z + Z`` along ``split``.
"""
from __future__ import annotations

from typing import Callable

from .algebra import Left, Right, bimap, swap
from .doubling import split, unsplit
from .kernel import OpaqueInt, zero
from .signs import eq_derived

Code = Callable[[OpaqueInt], OpaqueInt]


def is_el(code: Code, x: OpaqueInt) -> bool:
    return eq_derived(code(x), x)


def code_unit() -> Code:
    z = zero()
    return lambda x: z


def code_empty() -> Code:
    return lambda x: unsplit(swap(split(x)))


def code_coproduct(f: Code, g: Code) -> Code:
    on_halves = bimap(f, g)
    return lambda x: unsplit(on_halves(split(x)))


def embed_left(x: OpaqueInt) -> OpaqueInt:
    return unsplit(Left(x))


def embed_right(x: OpaqueInt) -> OpaqueInt:
    return unsplit(Right(x))


def code_identity() -> Code:
    return lambda x: x

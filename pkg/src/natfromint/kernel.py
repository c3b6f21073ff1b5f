"""
natfromint.kernel

The sealed integer type.  An OpaqueInt is reachable only through
``zero``, ``succ``, ``pred`` and ``fold``; the hidden representation is an
arbitrary-precision Python int that no construction module may read.

The step counters are test-only observability.  They carry no information
about any particular value.
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass, fields
from typing import Callable, Generic, Iterator, TypeVar

from .algebra import Iso

T = TypeVar("T")


@dataclass(frozen=True)
class IntAlgebra(Generic[T]):
    z: T
    s: Iso[T, T]


@dataclass(frozen=True)
class NatAlgebra(Generic[T]):
    z: T
    s: Callable[[T], T]


class OpaqueInt:
    __slots__ = ("_rep",)

    def __init__(self, rep: int) -> None:
        object.__setattr__(self, "_rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("OpaqueInt is immutable")

    def __repr__(self) -> str:
        return "<OpaqueInt>"

    def __reduce__(self):
        raise TypeError("OpaqueInt cannot be serialized")


# -- telemetry ---------------------------------------------------------------


@dataclass(frozen=True)
class Counters:
    succ_steps: int = 0
    pred_steps: int = 0
    fold_steps: int = 0
    sigma_steps: int = 0

    def __sub__(self, other: "Counters") -> "Counters":
        return Counters(*(getattr(self, f.name) - getattr(other, f.name) for f in fields(self)))

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_NAMES = ("succ_steps", "pred_steps", "fold_steps", "sigma_steps")

# Each thread increments its own tallies; readers sum them under the lock.
_lock = threading.Lock()
_local = threading.local()
_tallies: list[dict[str, int]] = []


def _mine() -> dict[str, int]:
    try:
        return _local.tally
    except AttributeError:
        tally = dict.fromkeys(_NAMES, 0)
        with _lock:
            _tallies.append(tally)
        _local.tally = tally
        return tally


def _tick(name: str, k: int = 1) -> None:
    _mine()[name] += k


def count_sigma(k: int = 1) -> None:
    """Record ``k`` applications of a sign-shift automorphism."""
    _mine()["sigma_steps"] += k


def counters_snapshot() -> Counters:
    with _lock:
        return Counters(**{n: sum(t[n] for t in _tallies) for n in _NAMES})


def counters_reset() -> None:
    with _lock:
        for tally in _tallies:
            for n in _NAMES:
                tally[n] = 0


class CounterScope:
    """Delta of the global counters over a ``with counting()`` block."""

    def __init__(self) -> None:
        self._start = counters_snapshot()
        self._end: Counters | None = None

    @property
    def delta(self) -> Counters:
        end = self._end if self._end is not None else counters_snapshot()
        return end - self._start


@contextmanager
def counting() -> Iterator[CounterScope]:
    scope = CounterScope()
    try:
        yield scope
    finally:
        scope._end = counters_snapshot()


# -- the integer type ----------------------------------------------------------

_ZERO = OpaqueInt(0)


def zero() -> OpaqueInt:
    return _ZERO


def succ(n: OpaqueInt) -> OpaqueInt:
    _tick("succ_steps")
    return OpaqueInt(n._rep + 1)


def pred(n: OpaqueInt) -> OpaqueInt:
    _tick("pred_steps")
    return OpaqueInt(n._rep - 1)


def integers() -> IntAlgebra[OpaqueInt]:
    """The kernel integers as an integer algebra."""
    return IntAlgebra(_ZERO, Iso(succ, pred))


def fold(alg: IntAlgebra[T], n: OpaqueInt) -> T:
    """Image of ``n`` under the unique algebra morphism into ``alg``.

    Applies ``alg.s.forward`` exactly ``n`` times when ``n`` is positive and
    ``alg.s.backward`` exactly ``-n`` times when it is negative.
    """
    k = n._rep
    step = alg.s.forward if k >= 0 else alg.s.backward
    acc = alg.z
    for _ in range(abs(k)):
        acc = step(acc)
    _tick("fold_steps", abs(k))
    return acc


def _reveal(n: OpaqueInt) -> int:
    return n._rep


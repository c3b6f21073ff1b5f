import pytest

from natfromint.algebra import Iso, Left, Right
from natfromint.doubling import double, split, square, twist, unsplit
from natfromint.harness import numeral, numerals, reveal
from natfromint.kernel import IntAlgebra, fold, integers, succ, zero


def revealed(s):
    return type(s).__name__, reveal(s.value)


def test_square_of_integers():
    assert reveal(square(integers()).s.forward(zero())) == 2
    assert reveal(square(integers()).s.backward(zero())) == -2


def test_square_of_identity_algebra():
    ident = IntAlgebra("z", Iso(lambda x: x, lambda x: x))
    sq = square(ident)
    assert sq.z == "z" and sq.s.forward("q") == "q" and sq.s.backward("q") == "q"


@pytest.mark.parametrize("k", range(-4, 5))
def test_fold_into_square_doubles(k):
    assert reveal(fold(square(integers()), numeral(k))) == 2 * k


def test_twist_clauses():
    tw = twist(integers())
    assert revealed(tw.z) == ("Left", 0)
    assert revealed(tw.s.forward(Left(zero()))) == ("Right", 0)
    assert revealed(tw.s.forward(Right(zero()))) == ("Left", 1)
    for k in range(-5, 6):
        for x in (Left(numeral(k)), Right(numeral(k))):
            assert revealed(tw.s.backward(tw.s.forward(x))) == revealed(x)
            assert revealed(tw.s.forward(tw.s.backward(x))) == revealed(x)


def test_square_of_twist_acts_componentwise():
    sq = square(twist(integers()))
    assert revealed(sq.s.forward(Left(numeral(3)))) == ("Left", 4)
    assert revealed(sq.s.forward(Right(numeral(3)))) == ("Right", 4)


@pytest.mark.parametrize("k, expected", [(0, 0), (3, 6), (-2, -4), (17, 34)])
def test_double(k, expected):
    assert reveal(double(numeral(k))) == expected


@pytest.mark.parametrize(
    "k, expected",
    # even k -> left(k // 2), odd k -> right((k - 1) // 2)
    [(0, ("Left", 0)), (4, ("Left", 2)), (5, ("Right", 2)), (-1, ("Right", -1)), (-4, ("Left", -2))],
)
def test_split(k, expected):
    assert revealed(split(numeral(k))) == expected


def test_unsplit():
    assert reveal(unsplit(Left(zero()))) == 0
    assert reveal(unsplit(Right(numeral(2)))) == 5
    assert reveal(unsplit(Right(numeral(-3)))) == -5


def test_round_trips():
    for k, n in zip(range(-512, 513), numerals(-512, 512)):
        s = split(n)
        assert revealed(s) == (("Left" if k % 2 == 0 else "Right"), k // 2)
        assert reveal(unsplit(s)) == k
    for k, n in zip(range(-64, 65), numerals(-64, 64)):
        for x in (Left(n), Right(n)):
            assert revealed(split(unsplit(x))) == revealed(x)


def test_split_is_algebra_morphism():
    tw = twist(integers()).s.forward
    for n in numerals(-50, 50):
        assert revealed(split(succ(n))) == revealed(tw(split(n)))

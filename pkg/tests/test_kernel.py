import threading

import hypothesis.strategies as st
import pytest
from hypothesis import given

from natfromint.algebra import Iso
from natfromint.harness import numeral, numerals, reveal
from natfromint.kernel import (
    IntAlgebra,
    OpaqueInt,
    counters_reset,
    counters_snapshot,
    counting,
    fold,
    integers,
    pred,
    succ,
    zero,
)

small = st.integers(min_value=-512, max_value=512)


def rotation(size):
    return IntAlgebra(0, Iso(lambda i: (i + 1) % size, lambda i: (i - 1) % size))


def test_zero_is_zero():
    assert reveal(zero()) == 0
    assert reveal(pred(succ(zero()))) == 0
    assert reveal(succ(succ(zero()))) == 2


def test_opaque_int_hides_its_value():
    assert repr(numeral(17)) == "<OpaqueInt>"
    with pytest.raises(AttributeError):
        numeral(3).x = 1


@given(small)
def test_succ_pred_inverse(k):
    n = numeral(k)
    assert reveal(succ(pred(n))) == k
    assert reveal(pred(succ(n))) == k


def test_fold_base_law():
    alg = rotation(7)
    assert fold(alg, zero()) == alg.z


def test_fold_subtraction_instance():
    # fold y into (x, pred, succ) computes x - y
    alg = IntAlgebra(numeral(3), Iso(pred, succ))
    assert reveal(fold(alg, numeral(5))) == 3 - 5
    assert reveal(fold(IntAlgebra(zero(), Iso(pred, succ)), numeral(7))) == -7


def test_fold_into_cycle():
    # brute force: rotate e0 five times in Z/3
    e = 0
    for _ in range(5):
        e = (e + 1) % 3
    assert fold(rotation(3), numeral(5)) == e == 2


@given(st.integers(1, 8), st.integers(-64, 64), st.randoms(use_true_random=False))
def test_fold_morphism_laws(size, k, rnd):
    perm = list(range(size))
    rnd.shuffle(perm)
    inv = [perm.index(i) for i in range(size)]
    alg = IntAlgebra(rnd.randrange(size), Iso(perm.__getitem__, inv.__getitem__))
    n = numeral(k)
    assert fold(alg, succ(n)) == perm[fold(alg, n)]
    assert fold(alg, pred(n)) == inv[fold(alg, n)]


def test_fold_agrees_with_any_morphism():
    # h built by hand from h(Z) = z and h . S = s . h
    alg = IntAlgebra("", Iso(lambda w: w + "a" if not w.endswith("b") else w[:-1],
                             lambda w: w[:-1] if w.endswith("a") else w + "b"))
    h = {0: ""}
    for k in range(1, 40):
        h[k] = alg.s.forward(h[k - 1])
        h[-k] = alg.s.backward(h[-k + 1])
    for k, n in zip(range(-39, 40), numerals(-39, 39)):
        assert fold(alg, n) == h[k]


@pytest.mark.parametrize("k", [0, 1, 5, -5, 128, -128])
def test_fold_step_count(k):
    applied = []
    alg = IntAlgebra(0, Iso(lambda x: applied.append(1) or x, lambda x: applied.append(-1) or x))
    n = numeral(k)
    with counting() as c:
        fold(alg, n)
    assert c.delta.fold_steps == abs(k) == len(applied)
    assert all(step == (1 if k > 0 else -1) for step in applied)


def test_counters_reset_and_snapshot():
    succ(zero())
    counters_reset()
    assert counters_snapshot().as_dict() == dict.fromkeys(
        ["succ_steps", "pred_steps", "fold_steps", "sigma_steps"], 0
    )
    fold(integers(), numeral(5))
    snap = counters_snapshot()
    assert snap.fold_steps == 5 and snap.succ_steps == 10  # 5 to build, 5 in the fold
    succ(zero())
    assert snap.succ_steps == 10, "snapshot must be a copy"


def test_counters_sum_across_threads():
    counters_reset()

    def work():
        for _ in range(1000):
            succ(zero())

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert counters_snapshot().succ_steps == 4000


def test_opaque_values_have_no_value_equality():
    # equality must be derived; identity is all the kernel offers
    assert numeral(2) != numeral(2)
    assert isinstance(numeral(2), OpaqueInt)

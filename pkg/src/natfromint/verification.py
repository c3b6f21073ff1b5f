"""
natfromint.verification

Oracle-backed verification cases.  Every case compares a construction that
never looks inside an integer against plain Python arithmetic on revealed
values.  The ``verify`` command and the acceptance tests both run these.

A case is a function ``(scale, rng) -> detail``; it raises AssertionError on
failure.  ``scale`` is 1 for the full suite and 0.5 for the quick one.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import kernel
from .algebra import Iso, Left, Right, fixpoints_of, is_fixpoint, roll
from .doubling import double, split, twist, unsplit
from .harness import m_elem, nat_of_oracle, numeral, numerals, reveal
from .kernel import IntAlgebra, counters_snapshot, counting, fold, integers, pred, succ, zero
from .nat_derivation import (
    DisplayedAlgebra,
    build_indfun,
    commute_check,
    m_ind,
    nat_add,
    nat_ind,
    nat_mul,
    nat_pred,
    nat_succ,
    nat_to_int,
    nat_zero,
    rectify,
    sections_agree,
)
from .seal import check_seal
from .signs import Sign, case_M, classify, eq_derived, iota_M, iota_z, lt, s_M, sub
from .universe import code_coproduct, code_empty, code_identity, code_unit, embed_left, embed_right, is_el

Case = Callable[[float, random.Random], str]


def _r(limit: int, scale: float) -> int:
    return max(1, int(limit * scale))


def _sign(k: int) -> Sign:
    return Sign.NEG if k < 0 else Sign.POS if k > 0 else Sign.MID


# -- acceptance criteria ----------------------------------------------------------


def splitting_equivalence(scale, rng):
    lim = _r(512, scale)
    for k, n in zip(range(-lim, lim + 1), numerals(-lim, lim)):
        s = split(n)
        expect = Left if k % 2 == 0 else Right
        assert isinstance(s, expect), f"split({k}) has the wrong tag"
        assert reveal(s.value) == k // 2, f"split({k}) payload {reveal(s.value)}"
        assert reveal(unsplit(s)) == k, f"unsplit(split({k})) != {k}"
    return f"|n| <= {lim}"


def sign_decomposition(scale, rng):
    lim = _r(512, scale)
    assert classify(zero()) is Sign.MID
    for k, n in zip(range(-lim, lim + 1), numerals(-lim, lim)):
        got = classify(n)
        assert got is _sign(k), f"classify({k}) = {got}"
    return f"|n| <= {lim}"


def order_suite(scale, rng):
    lim = _r(64, scale)
    nums = numerals(-lim - 1, lim + 1)
    idx = {k: n for k, n in zip(range(-lim - 1, lim + 2), nums)}
    zero_ = idx[0]
    checked = 0
    for x in range(-lim, lim + 1):
        nx = idx[x]
        assert reveal(sub(nx, nx)) == 0 and eq_derived(sub(nx, nx), zero_), f"{x} - {x} != Z"
        assert lt(nx, idx[x + 1]), f"not {x} < S({x})"
        if x >= 0:
            assert not lt(nx, zero_), f"{x} in M but {x} < Z"
        for y in range(-lim, lim + 1):
            ny = idx[y]
            d = sub(nx, ny)
            assert reveal(d) == x - y, f"{x} - {y} = {reveal(d)}"
            assert reveal(sub(idx[x + 1], idx[y + 1])) == reveal(d), f"S{x} - S{y} != {x} - {y}"
            xy = lt(nx, ny)
            assert xy == (x < y), f"lt({x}, {y}) = {xy}"
            if xy:
                assert lt(nx, idx[y + 1]), f"{x} < {y} but not {x} < S({y})"
            if lt(idx[x + 1], idx[y + 1]):
                assert xy, f"S{x} < S{y} but not {x} < {y}"
            checked += 1
    return f"{checked} pairs, |x|,|y| <= {lim}"


def rolling_rule(scale, rng):
    pairs = _r(200, scale)
    for _ in range(pairs):
        nx, ny = rng.randint(1, 8), rng.randint(1, 8)
        ft = [rng.randrange(ny) for _ in range(nx)]
        gt = [rng.randrange(nx) for _ in range(ny)]
        f, g = ft.__getitem__, gt.__getitem__
        gf = lambda x: g(f(x))
        fg = lambda y: f(g(y))
        fix_gf = fixpoints_of(gf, range(nx))
        fix_fg = fixpoints_of(fg, range(ny))
        iso = roll(f, g)
        images = [iso.forward(p) for p in fix_gf]
        assert [p.value for p in images] == [f(p.value) for p in fix_gf]
        assert all(is_fixpoint(fg, p) for p in images)
        assert sorted(p.value for p in images) == sorted(p.value for p in fix_fg), (ft, gt)
        assert len({p.value for p in images}) == len(images), "roll not injective"
        assert [iso.backward(iso.forward(p)).value for p in fix_gf] == [p.value for p in fix_gf]
        assert [iso.forward(iso.backward(p)).value for p in fix_fg] == [p.value for p in fix_fg]
        back = roll(g, f)
        assert [back.forward(p).value for p in images] == [p.value for p in fix_gf]
    return f"{pairs} random (f, g) on carriers of size <= 8"


def random_displayed_algebra(rng: random.Random):
    """A random displayed algebra over a small finite carrier, plus its oracle."""
    size = rng.randint(1, 6)
    base = rng.randrange(size)
    table = [rng.randrange(size) for _ in range(size)]
    alg = DisplayedAlgebra(lambda x: base, table.__getitem__)

    def oracle(k: int) -> int:
        v = base
        for _ in range(k):
            v = table[v]
        return v

    return alg, oracle


def m_universal_property(scale, rng):
    count, lim = _r(100, scale), _r(32, scale)
    elems = [m_elem(0)]
    for _ in range(lim):
        elems.append(s_M(elems[-1]))
    for _ in range(count):
        alg, oracle = random_displayed_algebra(rng)
        assert m_ind(alg, iota_z(zero())) == alg.z_a(zero())
        values = [m_ind(alg, m) for m in elems]
        assert values == [oracle(k) for k in range(lim + 1)]
        for m, v_prev, v in zip(elems, values, values[1:]):
            assert m_ind(alg, s_M(m)) == alg.s_a(v_prev) == v
    alg, _ = random_displayed_algebra(rng)
    u = zero()
    for _ in range(lim + 1):
        f = build_indfun(succ(u), alg)
        assert commute_check(u, alg, f), f"commute fails at bound {reveal(u)}"
        u = succ(u)
    return f"{count} algebras, m <= {lim}; commute at bounds <= {lim}"


def natural_numbers(scale, rng):
    add_lim, mul_lim = _r(64, scale), _r(16, scale)
    stab, agree = _r(100, scale), _r(50, scale)
    nats = [nat_zero()]
    for _ in range(max(add_lim, stab, agree)):
        nats.append(nat_succ(nats[-1]))

    tag = object()
    assert nat_ind(tag, lambda n, p: ("s", p), nat_zero()) is tag
    for n in nats[:agree]:
        lhs = nat_ind(0, lambda k, p: p + 1, nat_succ(n))
        assert lhs == nat_ind(0, lambda k, p: p + 1, n) + 1

    for a in range(add_lim + 1):
        for b in range(add_lim + 1):
            assert reveal(nat_to_int(nat_add(nats[a], nats[b]))) == a + b, (a, b)
    for a in range(mul_lim + 1):
        for b in range(mul_lim + 1):
            assert reveal(nat_to_int(nat_mul(nats[a], nats[b]))) == a * b, (a, b)

    assert isinstance(nat_pred(nats[0]), Left)
    for k in range(stab):
        p = nat_pred(nats[k + 1])
        assert isinstance(p, Right) and reveal(nat_to_int(p.value)) == k
        assert reveal(nat_to_int(nat_succ(p.value))) == k + 1

    # Two sections of the same algebra (z = 3, s = x -> 2x + 1 mod 97) built
    # independently: induction on Nat versus plain recursion on revealed ints.
    def oracle(k):
        return 3 if k == 0 else (2 * oracle(k - 1) + 1) % 97

    for k in range(agree):
        assert nat_ind(3, lambda n, p: (2 * p + 1) % 97, nats[k]) == oracle(k), k
    return f"add <= {add_lim}, mul <= {mul_lim}, stability {stab}, sections agree on {agree}"


def random_code(rng: random.Random, depth: int = 2):
    """A code from sealed operations or an oracle-defined one, with its oracle predicate."""
    choice = rng.randrange(6 if depth > 0 else 4)
    if choice == 0:
        return code_unit(), lambda k: k == 0
    if choice == 1:
        return code_empty(), lambda k: False
    if choice == 2:
        return code_identity(), lambda k: True
    if choice == 3:
        # oracle-defined: fixes exactly the chosen residues mod m
        m = rng.randint(2, 5)
        keep = {r for r in range(m) if rng.random() < 0.5}
        return (lambda x: x if reveal(x) % m in keep else succ(x)), (lambda k: k % m in keep)
    f, pf = random_code(rng, depth - 1)
    g, pg = random_code(rng, depth - 1)
    return code_coproduct(f, g), (lambda k: pf(k // 2) if k % 2 == 0 else pg(k // 2))


def universe_laws(scale, rng):
    lim, pairs = _r(256, scale), _r(50, scale)
    nums = numerals(-lim, lim)
    ks = range(-lim, lim + 1)
    unit_members = [k for k, n in zip(ks, nums) if is_el(code_unit(), n)]
    assert unit_members == [0], unit_members
    empty = code_empty()
    assert not any(is_el(empty, n) for n in nums)
    for x, n in zip(ks, nums):
        if abs(x) <= lim // 2:
            assert reveal(embed_left(n)) == 2 * x and reveal(embed_right(n)) == 2 * x + 1
    for _ in range(pairs):
        (f, pf), (g, pg) = random_code(rng), random_code(rng)
        cop = code_coproduct(f, g)
        for k, n in zip(ks, nums):
            half = numeral(k // 2)
            expect = is_el(f, half) if k % 2 == 0 else is_el(g, half)
            assert expect == (pf(k // 2) if k % 2 == 0 else pg(k // 2)), k
            assert is_el(cop, n) == expect, f"coproduct membership wrong at {k}"
    return f"|n| <= {lim}, {pairs} code pairs"


def seal_discipline(scale, rng):
    violations = check_seal()
    assert not violations, "; ".join(map(str, violations))
    return "no construction module reaches behind the seal"


def telemetry_exactness(scale, rng):
    lim = _r(128, scale)
    rot = IntAlgebra(0, Iso(lambda i: (i + 1) % 3, lambda i: (i - 1) % 3))
    for k, n in zip(range(-lim, lim + 1), numerals(-lim, lim)):
        with counting() as c:
            fold(rot, n)
        assert c.delta.fold_steps == abs(k), f"fold({k}) took {c.delta.fold_steps} steps"
        with counting() as c:
            classify(n)
        assert c.delta.sigma_steps == abs(k), f"classify({k}) took {c.delta.sigma_steps} sigma steps"
    return f"|n| <= {lim}"


ACCEPTANCE: dict[str, Case] = {
    "splitting_equivalence": splitting_equivalence,
    "sign_decomposition": sign_decomposition,
    "order_suite": order_suite,
    "rolling_rule": rolling_rule,
    "m_universal_property": m_universal_property,
    "natural_numbers": natural_numbers,
    "universe_laws": universe_laws,
    "seal_discipline": seal_discipline,
    "telemetry_exactness": telemetry_exactness,
}


# -- further invariants -------------------------------------------------------------


def kernel_laws(scale, rng):
    lim = _r(512, scale)
    for k, n in zip(range(-lim, lim + 1), numerals(-lim, lim)):
        assert reveal(succ(pred(n))) == k and reveal(pred(succ(n))) == k
        assert eq_derived(succ(pred(n)), n) and eq_derived(pred(succ(n)), n)
    mlim = _r(64, scale)
    for _ in range(10):
        size = rng.randint(1, 8)
        perm = list(range(size))
        rng.shuffle(perm)
        inv = [0] * size
        for i, p in enumerate(perm):
            inv[p] = i
        alg = IntAlgebra(rng.randrange(size), Iso(perm.__getitem__, inv.__getitem__))
        h = {0: alg.z}
        for k in range(1, mlim + 2):
            h[k], h[-k] = perm[h[k - 1]], inv[h[-k + 1]]
        for k, n in zip(range(-mlim, mlim + 1), numerals(-mlim, mlim)):
            assert fold(alg, succ(n)) == perm[fold(alg, n)]
            assert fold(alg, pred(n)) == inv[fold(alg, n)]
            assert fold(alg, n) == h[k], "fold disagrees with a hand-built morphism"
    return f"inverse laws |n| <= {lim}; morphism laws |n| <= {mlim}"


def splitting_morphism(scale, rng):
    lim = _r(512, scale)
    tw = twist(integers()).s.forward
    for k, n in zip(range(-lim, lim + 1), numerals(-lim, lim)):
        assert reveal(double(n)) == 2 * k
        s, s_next = split(n), split(succ(n))
        t = tw(s)
        assert type(t) is type(s_next) and eq_derived(t.value, s_next.value), k
        for x in (Left(n), Right(n)):
            back = split(unsplit(x))
            assert type(back) is type(x) and eq_derived(back.value, n), k
    return f"|n| <= {lim}"


def m_structure(scale, rng):
    lim = _r(256, scale)
    for k, n in zip(range(-lim, lim + 1), numerals(-lim, lim)):
        in_m = classify(n) is not Sign.NEG
        assert in_m == (classify(succ(n)) is Sign.POS), f"S-restriction fails at {k}"
    m = iota_z(zero())
    for k in range(lim + 1):
        back = case_M(m)
        if k == 0:
            assert isinstance(back, Left) and reveal(back.value) == 0
        else:
            assert isinstance(back, Right) and reveal(iota_M(back.value)) == k - 1
            assert reveal(iota_M(s_M(back.value))) == k
        assert isinstance(case_M(s_M(m)), Right) and case_M(s_M(m)).value == m
        m = s_M(m)
    return f"|n| <= {lim}"


def rectifier(scale, rng):
    lim = _r(64, scale)
    m = iota_z(zero())
    for k in range(lim + 1):
        r = rectify(m)
        assert reveal(iota_M(r)) == k
        assert rectify(s_M(m)) == s_M(r)
        m = s_M(m)
    return f"m <= {lim}"


def indfun_unfolding(scale, rng):
    lim = _r(32, scale)
    from .nat_derivation import ext

    alg, _ = random_displayed_algebra(rng)
    u = zero()
    for _ in range(lim + 1):
        assert sections_agree(build_indfun(succ(u), alg), ext(u, alg, build_indfun(u, alg)))
        u = succ(u)
    return f"bounds <= {lim}"


INVARIANTS: dict[str, Case] = {
    "kernel_laws": kernel_laws,
    "splitting_morphism": splitting_morphism,
    "m_structure": m_structure,
    "rectifier": rectifier,
    "indfun_unfolding": indfun_unfolding,
}


# -- reports ------------------------------------------------------------------------


@dataclass
class CaseRecord:
    name: str
    status: str
    detail: str


@dataclass
class Report:
    suite: str
    cases: list[CaseRecord] = field(default_factory=list)
    counters: kernel.Counters = field(default_factory=kernel.Counters)
    wall_ms: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.cases)

    @property
    def failed(self) -> int:
        return sum(c.status == "fail" for c in self.cases)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": [vars(c) for c in self.cases],
            "passed": self.passed,
            "failed": self.failed,
            "counters": self.counters.as_dict(),
            "wall_ms": round(self.wall_ms, 3),
        }


REPORT_KEYS = {"suite", "cases", "passed", "failed", "counters", "wall_ms"}
CASE_KEYS = {"name", "status", "detail"}


def validate_report(data: dict) -> None:
    """Schema check for a JSON report; raises ValueError."""
    if set(data) != REPORT_KEYS:
        raise ValueError(f"report keys {sorted(data)}")
    if not isinstance(data["cases"], list):
        raise ValueError("cases must be a list")
    for case in data["cases"]:
        if set(case) != CASE_KEYS or case["status"] not in ("pass", "fail"):
            raise ValueError(f"bad case record {case!r}")
    if set(data["counters"]) != set(kernel.Counters().as_dict()):
        raise ValueError("bad counters block")
    if data["passed"] + data["failed"] != len(data["cases"]):
        raise ValueError("passed + failed != total")


def run_case(name: str, case: Case, scale: float, seed: int) -> CaseRecord:
    rng = random.Random(f"{seed}:{name}")
    try:
        detail = case(scale, rng)
    except AssertionError as exc:
        return CaseRecord(name, "fail", str(exc) or "assertion failed")
    except Exception as exc:  # a crash is a failed case, not a crashed suite
        return CaseRecord(name, "fail", f"{type(exc).__name__}: {exc}")
    return CaseRecord(name, "pass", detail)


def run_suite(level: str = "full", seed: int = 0) -> Report:
    scale = {"full": 1.0, "quick": 0.5}[level]
    report = Report(suite=level)
    start, t0 = counters_snapshot(), time.perf_counter()
    for name, case in {**ACCEPTANCE, **INVARIANTS}.items():
        report.cases.append(run_case(name, case, scale, seed))
    report.wall_ms = (time.perf_counter() - t0) * 1000
    report.counters = counters_snapshot() - start
    return report

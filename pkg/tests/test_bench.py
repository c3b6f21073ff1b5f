import pytest

from natfromint.bench import CEILING, format_table, run_bench, sizes


def test_sizes():
    assert sizes(64) == [8, 16, 32, 64]
    assert sizes(5) == [5]


def test_step_counts_are_exact():
    rows = {(r.operation, r.size): r for r in run_bench(64)}
    for n in (8, 16, 32, 64):
        assert rows["classify", n].sigma_steps == n
        assert rows["classify", n].fold_steps == n
        assert rows["sub", n].fold_steps == n
        assert rows["sub", n].sigma_steps == 0


def test_m_ind_grows_quadratically():
    rows = {(r.operation, r.size): r for r in run_bench(64)}
    steps = [rows["m_ind-rank", n].sigma_steps for n in (8, 16, 32, 64)]
    ratios = [b / a for a, b in zip(steps, steps[1:])]
    assert all(r == pytest.approx(4.0) for r in ratios)


def test_ceiling():
    with pytest.raises(ValueError):
        run_bench(CEILING + 1)


def test_table_format():
    text = format_table(run_bench(8))
    assert text.splitlines()[0].split() == ["operation", "size", "sigma_steps", "fold_steps", "wall_ms"]

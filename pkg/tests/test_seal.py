from pathlib import Path

import natfromint
from natfromint.seal import CONSTRUCTION_MODULES, check_seal, scan_source


def test_construction_modules_are_sealed():
    assert check_seal() == []


def test_all_construction_modules_exist():
    pkg = Path(natfromint.__file__).parent
    assert all((pkg / f"{m}.py").exists() for m in CONSTRUCTION_MODULES)


def test_scan_flags_oracle_access():
    bad = "\n".join([
        "from natfromint.harness import reveal",
        "def f(n):",
        "    return n._rep + reveal(n)",
        "def g(n):",
        "    return getattr(n, '_rep')",
        "def h():",
        "    return OpaqueInt(3)",
    ])
    found = scan_source(bad, "bad")
    whats = {v.what for v in found}
    assert "import 'natfromint.harness'" in whats
    assert "attribute '_rep'" in whats
    assert "name 'reveal'" in whats
    assert "string '_rep'" in whats
    assert "direct construction OpaqueInt(...)" in whats
    assert str(found[0]).startswith("bad:1:")


def test_scan_accepts_clean_code():
    assert scan_source("from .kernel import succ\nx = succ") == []


def test_scan_detects_a_planted_violation(tmp_path):
    pkg = Path(natfromint.__file__).parent
    for m in CONSTRUCTION_MODULES:
        (tmp_path / f"{m}.py").write_text((pkg / f"{m}.py").read_text())
    with open(tmp_path / "signs.py", "a") as fh:
        fh.write("\nfrom .harness import reveal\n")
    assert [v.module for v in check_seal(tmp_path)] == ["signs", "signs"]

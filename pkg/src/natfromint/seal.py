"""
natfromint.seal

Static check that construction modules treat integers as a black box: no
reference to the oracle (``reveal``, the harness module), to the hidden
representation, or to the raw OpaqueInt constructor.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass
from pathlib import Path

CONSTRUCTION_MODULES = ("algebra", "doubling", "signs", "nat_derivation", "universe")

FORBIDDEN_NAMES = frozenset({"reveal", "_reveal", "_rep", "harness", "reveal_sum"})
FORBIDDEN_CALLS = frozenset({"OpaqueInt"})


@dataclass(frozen=True)
class Violation:
    module: str
    line: int
    what: str

    def __str__(self) -> str:
        return f"{self.module}:{self.line}: {self.what}"


def scan_source(source: str, module: str = "<string>") -> list[Violation]:
    found = []
    for node in ast.walk(ast.parse(source)):
        line = getattr(node, "lineno", 0)
        if isinstance(node, ast.Name) and node.id in FORBIDDEN_NAMES:
            found.append(Violation(module, line, f"name {node.id!r}"))
        elif isinstance(node, ast.Attribute) and node.attr in FORBIDDEN_NAMES:
            found.append(Violation(module, line, f"attribute {node.attr!r}"))
        elif isinstance(node, ast.Constant) and node.value in FORBIDDEN_NAMES:
            found.append(Violation(module, line, f"string {node.value!r}"))
        elif isinstance(node, (ast.Import, ast.ImportFrom)):
            names = [a.name for a in node.names]
            if isinstance(node, ast.ImportFrom) and node.module:
                names.append(node.module)
            for name in names:
                if set(name.split(".")) & FORBIDDEN_NAMES:
                    found.append(Violation(module, line, f"import {name!r}"))
        elif (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id in FORBIDDEN_CALLS
        ):
            found.append(Violation(module, line, f"direct construction {node.func.id}(...)"))
    return found


def check_seal(package_dir: Path | None = None) -> list[Violation]:
    package_dir = package_dir or Path(__file__).parent
    found = []
    for module in CONSTRUCTION_MODULES:
        path = package_dir / f"{module}.py"
        found.extend(scan_source(path.read_text(encoding="utf-8"), module))
    return found

"""Static layering rules.

The isolation argument rests on what each layer can even see. These checks
parse import statements so a violation fails before any behavior test runs.
"""

import ast
from pathlib import Path

import scholarlens

PACKAGE_ROOT = Path(scholarlens.__file__).parent


def imported_modules(path: Path) -> set[str]:
    tree = ast.parse(path.read_text(encoding="utf-8"))
    found = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            found.update(alias.name for alias in node.names)
        elif isinstance(node, ast.ImportFrom) and node.module:
            found.add(node.module)
    return found


def layer_imports(relative: str) -> set[str]:
    target = PACKAGE_ROOT / relative
    paths = [target] if target.is_file() else sorted(target.rglob("*.py"))
    merged = set()
    for path in paths:
        merged |= imported_modules(path)
    return merged


def test_reasoner_cannot_see_data_sources():
    # the planning layer works from the question alone
    imports = layer_imports("reasoner")
    assert not any(m.startswith("scholarlens.datasources") for m in imports)
    assert not any(m.startswith("scholarlens.executor") for m in imports)


def test_executor_cannot_see_llm_providers():
    # the aggregation layer has no path to a model call
    imports = layer_imports("executor.py")
    assert not any(m.startswith("scholarlens.providers") for m in imports)
    assert not any(m.startswith("scholarlens.synthesizer") for m in imports)
    assert not any(m.startswith("scholarlens.reasoner") for m in imports)


def test_synthesizer_cannot_see_data_sources():
    # the narration layer sees only the summary object
    imports = layer_imports("synthesizer")
    assert not any(m.startswith("scholarlens.datasources") for m in imports)
    assert not any(m.startswith("scholarlens.executor") for m in imports)


def test_core_types_depend_on_nothing_above_them():
    for name in ("core/types.py", "core/serialize.py", "core/tokens.py"):
        imports = layer_imports(name)
        internal = {m for m in imports if m.startswith("scholarlens.")}
        allowed = {
            "scholarlens.core.types",
            "scholarlens.core.tokens",
            "scholarlens.core.errors",
        }
        assert internal <= allowed, f"{name} imports {internal - allowed}"


def test_data_sources_cannot_see_providers():
    imports = layer_imports("datasources")
    assert not any(m.startswith("scholarlens.providers") for m in imports)

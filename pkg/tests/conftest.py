import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rskeychain import _backend  # noqa: E402

BACKENDS = _backend.available()


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    mod = BACKENDS[request.param]
    monkeypatch.setattr(_backend, "kernels", mod)
    return mod


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(acceptance.RESULTS.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")

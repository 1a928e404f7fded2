import pytest

ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def record(request):
    """Record one acceptance line; the lines are echoed again in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def _record(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        lines.append((number, line))
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)

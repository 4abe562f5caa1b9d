import pytest

_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(n, title, ok, detail, elapsed, limit)."""

    def record(n, title, ok, detail, elapsed, limit):
        line = (f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} | {detail} | "
                f"{elapsed:.1f}s (limit {limit}s)")
        _LINES.append(line)
        print(line)
        return line

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

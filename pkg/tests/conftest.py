import pytest

from g2grading.catalog import canonical_c_grading, sweep

ACCEPTANCE_LINES: list[str] = []


def report(criterion: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="session")
def canonical_sweep():
    """(descriptor, group, canonical grading) for every admissible choice with |G| <= 12."""
    return [(d, grp, canonical_c_grading(d, grp)) for d, grp in sweep(12)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = []


@pytest.fixture
def acceptance(request):
    """Record one acceptance line; they are repeated in the terminal summary."""
    lines = request.config.stash[ACCEPTANCE_LINES]

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        line = f"ACCEPTANCE {number:>2} {'PASS' if passed else 'FAIL'} {title}"
        if detail:
            line += f" ({detail})"
        print(line)
        lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

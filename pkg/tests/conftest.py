ACCEPTANCE_LINES: list[str] = []


def w(text):
    """Word literal helper: w('0110') -> (0, 1, 1, 0)."""
    return tuple(int(c) for c in text)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

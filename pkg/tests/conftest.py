from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


class _Outcome:
    detail = ""


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def criterion(number: str, title: str):
        out = _Outcome()
        try:
            yield out
        except BaseException as exc:
            msg = str(exc).strip().splitlines()[0] if str(exc).strip() else type(exc).__name__
            lines.append(f"FAIL criterion {number} ({title}): {msg}")
            raise
        lines.append(f"PASS criterion {number} ({title}): {out.detail}")

    return criterion


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split()[2])):
        terminalreporter.write_line(line)

import pytest

from graphs import PAW, graph

_criteria: dict[str, str] = {}


@pytest.fixture
def paw():
    return graph(PAW)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one test per acceptance criterion")


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num, label = name[len("test_criterion_"):].split("_", 1)
        terminalreporter.write_line(f"criterion {int(num):2d} {_criteria[name]}  {label}")

import pytest

from secantvar.numeric import FieldConfig

_ACCEPTANCE: list[tuple[str, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    if hasattr(report, "wasxfail"):
        status = "FAIL (known: " + report.wasxfail + ")"
    _ACCEPTANCE.append((number, title, status, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_ACCEPTANCE, key=lambda r: int(r[0])):
        head, _, note = status.partition(" ")
        line = f"[{head}] {number}. {title} ({duration:.2f}s)"
        terminalreporter.write_line(line + (f" {note}" if note else ""))


@pytest.fixture
def cfg():
    return FieldConfig()


@pytest.fixture(params=[0, 1, 2], ids=lambda s: f"seed{s}")
def seeded_cfg(request):
    return FieldConfig(seed=request.param)

import pytest
from hypothesis import HealthCheck, settings

# every property runs at least this many generated cases
PROPERTY_EXAMPLES = 1000

settings.register_profile(
    "fordseq",
    max_examples=PROPERTY_EXAMPLES,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fordseq")

ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            ACCEPTANCE_RESULTS[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"[{ACCEPTANCE_RESULTS[name]}] {name}")


@pytest.fixture
def criterion(record_property):
    def mark(name: str) -> None:
        record_property("criterion", name)

    return mark

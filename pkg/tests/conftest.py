import pytest

_verdicts: dict[str, list[str]] = {}
_labels: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, label): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            key, label = mark.args
            _labels[key] = label
            item.user_properties.append(("criterion", key))


def pytest_runtest_logreport(report):
    key = dict(report.user_properties).get("criterion")
    if key is None:
        return
    if report.when == "call" or not report.passed:
        _verdicts.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_verdicts, key=lambda k: [int(p) for p in k.split(".")]):
        outcomes = _verdicts[key]
        if "failed" in outcomes:
            word = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            word = "EXCLUDED"
        else:
            word = "PASS"
        terminalreporter.write_line(f"{word:8} {key:5} {_labels[key]}")

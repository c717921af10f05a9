CRITERIA = {
    1: "Grassmannian family equals the Gaussian binomial",
    2: "rank-2 Kronecker closed form and Euler characteristic",
    3: "triple-oracle equivalence on the battery",
    4: "HN partition identity",
    5: "alternating coarsening sums over 500 random tuples",
    6: "chain worked example: 3 strata, codims 0,1,1, P = 1",
    7: "structural Poincare properties",
    8: "semistability cross-check",
    9: "3-Kronecker d=(6,7) under 30 s, interpolation agrees",
}

_outcomes = {}
_timings = {}


def pytest_runtest_logreport(report):
    number = _criterion(report)
    if number is None:
        return
    if report.when == "call" or report.failed:
        _outcomes[number] = report.passed and _outcomes.get(number, True)
        if report.when == "call":
            _timings[number] = report.duration


def _criterion(report):
    for name, value in report.user_properties:
        if name == "criterion":
            return value
    return None


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None and marker.args:
            item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number, label in CRITERIA.items():
        if number not in _outcomes:
            status = "NOT RUN"
        else:
            status = "PASS" if _outcomes[number] else "FAIL"
        seconds = f" ({_timings[number]:.2f}s)" if number in _timings else ""
        terminalreporter.write_line(f"criterion {number}: {status}  {label}{seconds}")

"""Collects the acceptance-criterion results and prints a one-line verdict each."""

import re

_CRITERION_RE = re.compile(r"test_acceptance\.py::.*test_criterion_(\d+)")

_TITLES = {
    1: "cell index endpoints",
    2: "phase sweep span",
    3: "closed-form vs first-principles index agreement",
    4: "closed-form vs quadrature phase agreement",
    5: "probability laws: normalization, majority port, visibility",
    6: "joint-model cross-checks and pinned discrepancy",
    7: "ray physics: weak-field deflection, Bouguer drift, circular orbit",
    8: "design roundtrip and attenuator identity",
    9: "seeded reproducibility and Poisson statistics",
}

_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION_RE.search(report.nodeid)
    if m:
        _RESULTS[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_RESULTS):
        verdict = "PASS" if _RESULTS[k] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {verdict} - {_TITLES[k]}")

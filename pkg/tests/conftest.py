import pytest

from pairforge.catalog import STANDARD_CATALOG, catalog_pair

CRITERIA = {
    1: "imbedding of rect(1,2) is M_3, rect(1,1) is M_2",
    2: "extract(build(A)) isomorphic to A for all catalog pairs",
    3: "semiprime/prime agree between pair and imbedding",
    4: "local algebra transfer A_a = E_a in rect(2,2)",
    5: "C(A) isomorphic to C(E) with Psi Phi = Id, Phi Psi = Id",
    6: "C(split(2)) commutative and von Neumann regular",
    7: "C(gauss) is Q(i), t^2+1 irreducible, nonzero elements invertible",
    8: "central closure commutes with imbedding; closure is closed",
    9: "transpose extends to an order-2 anti-automorphism with e1* = e2",
    10: "*-centroid theorems",
    11: "HPI checking (S_4, S_3 on rect(2,2); S_2 on rect(1,q))",
    12: "*-identity of degree m gives S_2m locally",
    13: "rank, local degree and rank-one decomposition on rect(2,3)-",
    14: "Amitsur triple agrees",
    15: "rect(2,3) simple and equal to its socle",
    16: "Martindale/Posner capacity bound with equality",
    17: "basis-tuple checking equals dense {0,1,-1} evaluation",
    18: "report-all is deterministic (runs, serial vs parallel)",
}

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ok = rep.passed
        prev = _outcomes.get(n, True)
        _outcomes[n] = prev and ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _outcomes:
            continue
        status = "PASS" if _outcomes[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {CRITERIA[n]}")


@pytest.fixture(scope="session")
def catalog():
    return {name: catalog_pair(name) for name in STANDARD_CATALOG}

from itertools import permutations, product

import pytest

from wreathstat.perm import ColoredPermutation


def all_elements(r, n):
    for tau in permutations(range(1, n + 1)):
        for z in product(range(r), repeat=n):
            yield ColoredPermutation(r, z, tau)


@pytest.fixture
def paper_g34():
    # 1^[1] 3^[2] 2 4^[2] in G(3, 4)
    return ColoredPermutation(3, (1, 2, 0, 2), (1, 3, 2, 4))


@pytest.fixture
def star_g33():
    # 2 1^[1] 3^[2] in G(3, 3), the element written out letter by letter
    return ColoredPermutation(3, (0, 1, 2), (2, 1, 3))


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary table."""
    name = request.node.get_closest_marker("criterion").args[0]
    notes = []
    yield notes
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_RESULTS[name] = (ok, "; ".join(notes))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, note = ACCEPTANCE_RESULTS[name]
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if note:
            line += f"  ({note})"
        terminalreporter.write_line(line)

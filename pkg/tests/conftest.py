import pytest

from eqzeta.burnside import burnside_ring
from eqzeta.groups import builtin_group, parse_cycles, subgroup_generated

# class indices for C6 and S3 in canonical order: (e), Z2, Z3, G
E, Z2, Z3, TOP = 0, 1, 2, 3


def sub(G, *cycles):
    """Subgroup of a permutation group generated by cycle strings."""
    ids = [G.perms.index(parse_cycles(c, G.degree)) for c in cycles]
    return subgroup_generated(G, ids)


def elt(G, cycles):
    return G.perms.index(parse_cycles(cycles, G.degree))


@pytest.fixture(scope="session")
def C6():
    return builtin_group("cyclic", 6)


@pytest.fixture(scope="session")
def S3():
    return builtin_group("symmetric", 3)


@pytest.fixture(scope="session")
def D4():
    return builtin_group("dihedral", 4)


@pytest.fixture(scope="session")
def K4():
    return builtin_group("dihedral", 2)


@pytest.fixture(scope="session")
def test_groups(C6, S3, D4, K4):
    return [C6, S3, D4, K4]


@pytest.fixture(scope="session")
def RC6(C6):
    return burnside_ring(C6)


@pytest.fixture(scope="session")
def RS3(S3):
    return burnside_ring(S3)


# acceptance criteria report: one PASS/FAIL line per criterion

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    n, title = props["criterion"]
    ok = _criteria.get(n, (title, True))[1] and report.passed
    _criteria[n] = (title, ok)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")

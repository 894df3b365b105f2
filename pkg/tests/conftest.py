from types import SimpleNamespace

import pytest

from quadsym.cli import default_catalog
from quadsym.groups import conjugacy_classes, make_group
from quadsym.groupspec import parse_group_spec
from quadsym.reciprocity import discriminant, real_complex_split


@pytest.fixture(scope="session")
def build():
    """Cached construction of a group with its class data and discriminant."""
    cache = {}

    def get(label):
        if label not in cache:
            G = make_group(parse_group_spec(label))
            S = conjugacy_classes(G)
            split = real_complex_split(S)
            D = discriminant(G, S, split)
            cache[label] = SimpleNamespace(G=G, S=S, split=split, D=D)
        return cache[label]

    return get


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    entries = []
    for status, ok in (("passed", True), ("failed", False), ("error", False)):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(rep, "when", "call") == "call":
                entries.append((nodeid.split("::")[-1], ok))
    if entries:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, ok in sorted(entries):
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}")

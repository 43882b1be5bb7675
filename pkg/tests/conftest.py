import sys
import random

import pytest

from hypconj.context import free_group, free_product, load_group
from pathlib import Path

GROUPS = Path(__file__).resolve().parents[1] / "src" / "hypconj" / "groups"


@pytest.fixture(scope="session")
def F2():
    return free_group(2)


@pytest.fixture(scope="session")
def Z23():
    return free_product([2, 3], ["x", "y"])


@pytest.fixture(scope="session")
def Z23_rws():
    return load_group(GROUPS / "z2z3_rws.grp")


@pytest.fixture(scope="session")
def F2_rws():
    return load_group(GROUPS / "f2_rws.grp")


@pytest.fixture
def rng():
    return random.Random(12345)


def W(ctx, *words):
    return [ctx.reduce(ctx.word(w)) for w in words]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(module.RESULTS.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")

"""Shared fixtures: groups and towers computed once per session."""
from __future__ import annotations

import pathlib
import time

import pytest

from braidrep.extension import compute_tower
from braidrep.groups import SL2, SymmetricGroup, alternating_group, parse_group_spec

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def golden_text(name: str) -> str:
    return (GOLDEN_DIR / name).read_text()


@pytest.fixture(scope="session")
def s2():
    return SymmetricGroup(2)


@pytest.fixture(scope="session")
def s3():
    return SymmetricGroup(3)


@pytest.fixture(scope="session")
def s4():
    return SymmetricGroup(4)


@pytest.fixture(scope="session")
def s5():
    return SymmetricGroup(5)


@pytest.fixture(scope="session")
def s6():
    return SymmetricGroup(6)


@pytest.fixture(scope="session")
def z6():
    return parse_group_spec("Z6")


@pytest.fixture(scope="session")
def sl23():
    return SL2(3)


@pytest.fixture(scope="session")
def tower_s2(s2):
    return compute_tower(s2, 6)


@pytest.fixture(scope="session")
def tower_s3(s3):
    return compute_tower(s3, 6)


@pytest.fixture(scope="session")
def tower_s4(s4):
    return compute_tower(s4, 6)


@pytest.fixture(scope="session")
def tower_s5(s5):
    return compute_tower(s5, 6)


@pytest.fixture(scope="session")
def _s6_bundle(s6):
    t0 = time.monotonic()
    tower = compute_tower(s6, 7, with_braid=False)
    return tower, time.monotonic() - t0


@pytest.fixture(scope="session")
def tower_s6(_s6_bundle):
    return _s6_bundle[0]


@pytest.fixture(scope="session")
def s6_tower_seconds(_s6_bundle):
    return _s6_bundle[1]


@pytest.fixture(scope="session")
def tower_z6(z6):
    return compute_tower(z6, 5)


@pytest.fixture(scope="session")
def tower_sl23(sl23):
    return compute_tower(sl23, 5)


@pytest.fixture(scope="session")
def tower_a5():
    return compute_tower(alternating_group(5), 6, with_braid=False)

"""Shared fixtures: the standard small groups and their named subgroups."""

import pytest

from sylowlens.corpus import alternating_group, symmetric_group
from sylowlens.perm import Perm


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def s5():
    return symmetric_group(5)


@pytest.fixture(scope="session")
def a4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def a5():
    return alternating_group(5)


@pytest.fixture(scope="session")
def a4_in_s4(s4):
    return s4.subgroup([Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])], name="A4")


@pytest.fixture(scope="session")
def d8_in_s4(s4):
    # <(0 1 2 3), (0 2)>
    return s4.subgroup([Perm([1, 2, 3, 0]), Perm([2, 1, 0, 3])], name="D8")


@pytest.fixture(scope="session")
def v4_in_s4(s4):
    return s4.subgroup([Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])], name="V4")


@pytest.fixture(scope="session")
def c3_in_s3(s3):
    return s3.subgroup([Perm([1, 2, 0])], name="C3")


@pytest.fixture(scope="session")
def c2_in_s3(s3):
    return s3.subgroup([Perm([1, 0, 2])], name="C2")

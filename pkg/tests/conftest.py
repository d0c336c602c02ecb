import copy
from fractions import Fraction

import pytest

from expseq import Mode, SequenceSpec, build_to, extend


@pytest.fixture(scope="session")
def u0_spec():
    return SequenceSpec(mode=Mode.C, b=Fraction(0), d_fixed=Fraction(3, 2))


@pytest.fixture(scope="session")
def u0_47(u0_spec):
    return build_to(u0_spec, 47)


@pytest.fixture(scope="session")
def u0_55(u0_47):
    state = copy.deepcopy(u0_47)
    while len(state.terms) < 55:
        extend(state)
    return state


@pytest.fixture(scope="session")
def u0_10(u0_spec):
    return build_to(u0_spec, 10)


@pytest.fixture(scope="session")
def u1_50():
    return build_to(SequenceSpec(mode=Mode.C, b=Fraction(1)), 50)


@pytest.fixture(scope="session")
def v0_50():
    return build_to(SequenceSpec(mode=Mode.D, b=Fraction(0)), 50)


@pytest.fixture(scope="session")
def v1_40():
    return build_to(SequenceSpec(mode=Mode.D, b=Fraction(1)), 40)

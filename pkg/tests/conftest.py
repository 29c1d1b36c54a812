import pytest

import wildquotient.gf
import wildquotient.graph
import wildquotient.group


@pytest.fixture(scope="function")
def quaternion_group():
    # q = 2
    return wildquotient.group.build_group(2)


@pytest.fixture(scope="function")
def heisenberg_group():
    # q = 3
    return wildquotient.group.build_group(3)


@pytest.fixture(scope="function")
def field16():
    return wildquotient.gf.make_field(2, 4)


@pytest.fixture(scope="function")
def field27():
    return wildquotient.gf.make_field(3, 3)


@pytest.fixture(scope="function")
def fiber_q3():
    return wildquotient.graph.solve_self_intersections(
        wildquotient.graph.build_fiber_graph(3)
    )

import pytest

from cssplab import (
    build_instance,
    complete_graph,
    cycle_graph,
    exact_brute_force,
    path_graph,
    petersen_graph,
)


@pytest.fixture(scope="session")
def k2_instance():
    return build_instance(complete_graph(2))


@pytest.fixture(scope="session")
def k3_instance():
    return build_instance(complete_graph(3))


@pytest.fixture(scope="session")
def k4_instance():
    return build_instance(complete_graph(4))


@pytest.fixture(scope="session")
def p3_instance():
    return build_instance(path_graph(3))


@pytest.fixture(scope="session")
def c5_instance():
    return build_instance(cycle_graph(5))


@pytest.fixture(scope="session")
def petersen_instance():
    return build_instance(petersen_graph())


# Full enumerations are the expensive part of the suite; solve once.


@pytest.fixture(scope="session")
def k3_full_report(k3_instance):
    return exact_brute_force(k3_instance.M, k3_instance.k, k3_instance.tau_sq)


@pytest.fixture(scope="session")
def k4_full_report(k4_instance):
    return exact_brute_force(k4_instance.M, k4_instance.k, k4_instance.tau_sq)

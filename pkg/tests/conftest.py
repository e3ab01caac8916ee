import numpy as np
import pytest

from switchlearn import EventAlphabet, Fa, SwitchedSystem

# 2-D demo model: four nodes on two events, three distinct subsystem
# matrices, the middle label shared by two nodes.
DEMO2D_MATRICES = (
    np.array([[1.0, 0.3], [0.7, 1.2]]),
    np.array([[0.4, 0.8], [-0.7, 0.6]]),
    np.array([[1.2, 0.7], [1.6, 0.1]]),
)

# 3-D fault-mode model: a healthy event (f) dwells on the current mode,
# the schedule event (g) advances through the mode cycle.
FAULT_MATRICES = (
    np.array([[0.2, 0.4, 0.8], [0.3, 0.6, 0.9], [0.5, 1.5, 1.5]]),
    np.array([[-1.0, 0.1, 0.2], [0.3, -1.0, 0.4], [0.5, 0.6, -1.0]]),
    np.array([[-0.1, -0.2, 0.3], [-0.1, -0.4, 0.6], [0.8, 0.7, -0.6]]),
)


def make_demo2d_fa() -> Fa:
    return Fa(num_nodes=4, initial=0, alphabet=EventAlphabet(("e1", "e2")),
              delta=((3, 1), (2, 0), (1, 3), (0, 2)),
              gamma=(0, 1, 1, 2))


def make_demo2d_system() -> SwitchedSystem:
    return SwitchedSystem(fa=make_demo2d_fa(), matrices=DEMO2D_MATRICES, d=2)


def make_fault_system() -> SwitchedSystem:
    fa = Fa(num_nodes=4, initial=0, alphabet=EventAlphabet(("f", "g")),
            delta=((0, 1), (1, 2), (2, 3), (3, 0)),
            gamma=(0, 1, 1, 2))
    return SwitchedSystem(fa=fa, matrices=FAULT_MATRICES, d=3)


def make_three_node_hypothesis() -> SwitchedSystem:
    # First closed hypothesis reached when learning the demo model: access
    # words (), (e1,), (e2,); it misses the fourth hidden node.
    fa = Fa(num_nodes=3, initial=0, alphabet=EventAlphabet(("e1", "e2")),
            delta=((1, 2), (0, 2), (2, 0)),
            gamma=(0, 2, 1))
    return SwitchedSystem(fa=fa, matrices=DEMO2D_MATRICES, d=2)


def make_four_node_hypothesis() -> SwitchedSystem:
    # Final learned machine for the demo model: isomorphic to it with nodes
    # reordered by access word (), (e1,), (e2,), (e1, e2).
    fa = Fa(num_nodes=4, initial=0, alphabet=EventAlphabet(("e1", "e2")),
            delta=((1, 2), (0, 3), (3, 0), (2, 1)),
            gamma=(0, 2, 1, 1))
    return SwitchedSystem(fa=fa, matrices=DEMO2D_MATRICES, d=2)


@pytest.fixture
def demo2d_fa() -> Fa:
    return make_demo2d_fa()


@pytest.fixture
def demo2d_system() -> SwitchedSystem:
    return make_demo2d_system()


@pytest.fixture
def fault_system() -> SwitchedSystem:
    return make_fault_system()


@pytest.fixture
def three_node_hypothesis() -> SwitchedSystem:
    return make_three_node_hypothesis()


@pytest.fixture
def four_node_hypothesis() -> SwitchedSystem:
    return make_four_node_hypothesis()

"""The two oracles a learner may query: trace generation and equivalence
checking, each with query accounting.

The white-box implementations wrap a known system and exist for testing and
benchmarking; the bounded-testing equivalence checker works purely through
trace queries and demonstrates the fully black-box mode (its "equivalent"
verdict is only as strong as the search depth).
"""

import itertools

import numpy as np

from .automaton import Word, language_equivalent, output_of
from .linalg import LABEL_TOL, mat_approx_eq
from .output_query import compute_output
from .switched_system import SwitchedSystem, execute


class QueryStats:
    """Monotone counters; a k-column trace query counts as k queries."""

    def __init__(self):
        self.io_queries = 0
        self.output_computations = 0
        self.equivalence_queries = 0

    def as_dict(self) -> dict[str, int]:
        return {"io_queries": self.io_queries,
                "output_computations": self.output_computations,
                "equivalence_queries": self.equivalence_queries}


class ObservationOracle:
    """Answers trace queries for a hidden system."""

    def __init__(self):
        self.stats = QueryStats()

    def dimension(self) -> int:
        raise NotImplementedError

    def exec_query(self, x0: np.ndarray, word: Word) -> list[np.ndarray]:
        raise NotImplementedError


class EquivalenceOracle:
    """Compares a hypothesis against the hidden system's behaviour."""

    def __init__(self):
        self.stats = QueryStats()

    def check(self, hypothesis: SwitchedSystem) -> Word | None:
        """None when equivalent, otherwise a counterexample word."""
        raise NotImplementedError


class WhiteBoxObservationOracle(ObservationOracle):
    def __init__(self, hidden: SwitchedSystem):
        super().__init__()
        self._hidden = hidden

    def dimension(self) -> int:
        return self._hidden.d

    def exec_query(self, x0: np.ndarray, word: Word) -> list[np.ndarray]:
        x0 = np.asarray(x0, dtype=float)
        self.stats.io_queries += 1 if x0.ndim == 1 else x0.shape[1]
        return execute(self._hidden, x0, word)


class WhiteBoxEquivalenceOracle(EquivalenceOracle):
    """Exact equivalence via product search; returns shortest counterexamples.

    Labels of the two systems are compared as matrices under label_eq, which
    defaults to max-abs closeness at tol.
    """

    def __init__(self, hidden: SwitchedSystem, label_eq=None, tol: float = LABEL_TOL):
        super().__init__()
        self._hidden = hidden
        self._label_eq = label_eq or (lambda a, b: mat_approx_eq(a, b, tol))

    def check(self, hypothesis: SwitchedSystem) -> Word | None:
        self.stats.equivalence_queries += 1
        hidden = self._hidden
        return language_equivalent(
            hidden.fa, hypothesis.fa,
            lambda i, j: self._label_eq(hidden.matrices[i], hypothesis.matrices[j]))


class BoundedTestingEquivalenceOracle(EquivalenceOracle):
    """Black-box equivalence testing by exhaustive word enumeration.

    Words are tried by increasing length, lexicographic in event index, up
    to l_max (l_max 0 tests only the empty word); the first word whose
    recovered output matrix disagrees with the hypothesis is returned.
    Exhausting the search yields None, which is an unsound "equivalent"
    verdict if the shortest counterexample is longer than l_max.
    """

    def __init__(self, obs: ObservationOracle, l_max: int,
                 label_eq=None, tol: float = LABEL_TOL):
        super().__init__()
        if l_max < 0:
            raise ValueError(f"l_max must be >= 0, got {l_max}")
        self._obs = obs
        self._l_max = l_max
        self._label_eq = label_eq or (lambda a, b: mat_approx_eq(a, b, tol))

    def check(self, hypothesis: SwitchedSystem) -> Word | None:
        self.stats.equivalence_queries += 1
        num_events = len(hypothesis.fa.alphabet)
        for length in range(self._l_max + 1):
            for word in itertools.product(range(num_events), repeat=length):
                observed = compute_output(self._obs, word)
                claimed = hypothesis.matrices[output_of(hypothesis.fa, word)]
                if not self._label_eq(observed, claimed):
                    return word
        return None

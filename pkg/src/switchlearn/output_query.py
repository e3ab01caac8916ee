"""Recovering the matrix that acted last on a trace, and turning recovered
matrices into discrete label ids.

The last-applied matrix of a word is obtained from two trace queries started
at the identity: the final states of the word minus its last event form a
basis (all subsystem matrices are full-rank), and the final states of the
full word are their image under the wanted matrix.
"""

from dataclasses import dataclass, field

import numpy as np

from .automaton import Word
from .errors import AmbiguousLabel
from .linalg import LABEL_TOL, PIVOT_TOL, identity, recover_transform


def compute_output(obs, word: Word, tol: float = PIVOT_TOL) -> np.ndarray:
    """Matrix labelling the node reached by word, from trace queries alone.

    Costs two d-column trace queries (one for the empty word). Raises
    SingularBasis if the intermediate states do not span the space, which
    means some subsystem matrix is rank-deficient.
    """
    d = obs.dimension()
    obs.stats.output_computations += 1
    if len(word) == 0:
        return obs.exec_query(identity(d), ())[-1]
    basis = obs.exec_query(identity(d), word[:-1])[-1]
    image = obs.exec_query(identity(d), word)[-1]
    return recover_transform(basis, image, tol)


@dataclass
class LabelRegistry:
    """Interns recovered matrices into dense label ids.

    Two matrices within tol of each other get the same id. Canonical
    matrices must stay pairwise separated by more than 2*tol, otherwise
    classification becomes ambiguous and AmbiguousLabel is raised.
    """

    tol: float = LABEL_TOL
    canonical: list[np.ndarray] = field(default_factory=list)

    def classify(self, matrix: np.ndarray) -> int:
        matrix = np.asarray(matrix, dtype=float)
        hits = [i for i, known in enumerate(self.canonical)
                if np.max(np.abs(known - matrix)) <= self.tol]
        if len(hits) > 1:
            raise AmbiguousLabel(
                f"matrix matches labels {hits} at tolerance {self.tol:g}; "
                "label tolerance is too coarse for this system")
        if hits:
            return hits[0]
        self.canonical.append(matrix.copy())
        return len(self.canonical) - 1

    def __len__(self) -> int:
        return len(self.canonical)


OutputCache = dict[Word, int]


def cached_output(obs, registry: LabelRegistry, cache: OutputCache, word: Word) -> int:
    """Label id of word's output matrix, memoized by exact word."""
    word = tuple(word)
    if word not in cache:
        cache[word] = registry.classify(compute_output(obs, word))
    return cache[word]

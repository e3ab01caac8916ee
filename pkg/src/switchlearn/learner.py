"""Active learning loop for event-driven switched linear systems.

The learner maintains two word lists: access words, each believed to reach a
distinct node of the hidden automaton, and test words, whose output labels
tell access words apart. The loop closes the access set under one-event
extensions, builds a hypothesis system, asks the equivalence oracle, and on
a counterexample locates (by binary search over output labels along the
hypothesis run) one new access word and one new test word. Access words only
ever grow, and their number is bounded by the hidden node count, so the loop
terminates with a language-equivalent system.
"""

import math
import time
from dataclasses import dataclass, field

from .automaton import EPSILON, EventAlphabet, Fa, Word, run
from .errors import BudgetExceeded, NotACounterexample, NotClosed
from .linalg import LABEL_TOL
from .oracle import EquivalenceOracle, ObservationOracle, QueryStats
from .output_query import LabelRegistry, cached_output
from .switched_system import SwitchedSystem


@dataclass
class ObservationStore:
    """Insertion-ordered access and test words; the empty word leads both."""

    access_words: list[Word] = field(default_factory=lambda: [EPSILON])
    test_words: list[Word] = field(default_factory=lambda: [EPSILON])


@dataclass
class LearnResult:
    system: SwitchedSystem
    stats: QueryStats
    rounds: int
    wall_ms: float
    access_words: list[Word]
    test_words: list[Word]
    # (counterexample length, output computations spent processing it)
    counterexample_costs: list[tuple[int, int]]

    def stats_dict(self) -> dict:
        return {**self.stats.as_dict(), "rounds": self.rounds, "wall_ms": self.wall_ms}


def agree_on_tests(u: Word, v: Word, test_words: list[Word], query) -> bool:
    """True iff u and v get the same output label under every test word."""
    return all(query(u + t) == query(v + t) for t in test_words)


def is_separable(store: ObservationStore, query) -> bool:
    """True iff no two distinct access words agree on all test words."""
    words = store.access_words
    return not any(agree_on_tests(words[i], words[j], store.test_words, query)
                   for i in range(len(words)) for j in range(i + 1, len(words)))


def find_representative(store: ObservationStore, word: Word, query) -> int | None:
    """Index of the access word that word agrees with, in insertion order."""
    for i, candidate in enumerate(store.access_words):
        if agree_on_tests(word, candidate, store.test_words, query):
            return i
    return None


def find_closure_defect(store: ObservationStore, alphabet: EventAlphabet,
                        query) -> tuple[Word, int] | None:
    """First (access word, event) whose extension has no representative."""
    for word in store.access_words:
        for e in range(len(alphabet)):
            if find_representative(store, word + (e,), query) is None:
                return word, e
    return None


def close_store(store: ObservationStore, alphabet: EventAlphabet, query,
                on_mutation=None, max_additions: int | None = None) -> None:
    """Add one-event extensions to the access words until every extension
    has a representative. Each added extension was inequivalent to all
    access words, so separability is preserved."""
    added = 0
    while True:
        defect = find_closure_defect(store, alphabet, query)
        if defect is None:
            return
        if max_additions is not None and added >= max_additions:
            raise BudgetExceeded(
                f"closing added {added} access words without converging; "
                "the label tolerance is likely misconfigured")
        word, e = defect
        store.access_words.append(word + (e,))
        added += 1
        if on_mutation is not None:
            on_mutation(store, query)


def build_hypothesis(store: ObservationStore, registry: LabelRegistry,
                     alphabet: EventAlphabet, query) -> SwitchedSystem:
    """Hypothesis system over the current words: one node per access word
    (empty word initial), transitions to the representative of each
    one-event extension, node labels taken from the word's own output."""
    delta = []
    for word in store.access_words:
        row = []
        for e in range(len(alphabet)):
            target = find_representative(store, word + (e,), query)
            if target is None:
                raise NotClosed(f"extension of {word!r} by event {e} has "
                                "no representative; close the store first")
            row.append(target)
        delta.append(tuple(row))
    gamma = tuple(query(word) for word in store.access_words)
    fa = Fa(num_nodes=len(store.access_words), initial=0, alphabet=alphabet,
            delta=tuple(delta), gamma=gamma)
    d = registry.canonical[0].shape[0]
    return SwitchedSystem(fa=fa, matrices=tuple(registry.canonical), d=d)


def process_counterexample(word: Word, hypothesis: SwitchedSystem,
                           store: ObservationStore, query) -> tuple[Word, Word]:
    """Extract one new access word and one new test word from a counterexample.

    Along the hypothesis run of the counterexample, splice each visited
    node's access word with the remaining suffix and query its output label.
    The first and last labels differ, so a flip between adjacent positions
    exists; binary search on the range endpoints finds one with at most
    ceil(log2(n)) queries beyond the two endpoints. The flip position yields
    an access word not yet in the store and a suffix distinguishing it from
    its current representative.
    """
    n = len(word)
    nodes = run(hypothesis.fa, word)
    labels: dict[int, int] = {}

    def spliced(i: int) -> int:
        if i not in labels:
            labels[i] = query(store.access_words[nodes[i]] + word[i:])
        return labels[i]

    if spliced(0) == spliced(n):
        raise NotACounterexample(
            f"word {word!r} produces the hypothesis's own output label")
    lo, hi = 0, n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if spliced(mid) != spliced(lo):
            hi = mid
        else:
            lo = mid
    new_access = store.access_words[nodes[lo]] + (word[lo],)
    new_test = word[lo + 1:]
    return new_access, new_test


def learn(obs: ObservationOracle, eq: EquivalenceOracle, alphabet: EventAlphabet,
          *, label_tol: float = LABEL_TOL, max_rounds: int | None = None,
          max_outputs: int | None = None, on_mutation=None) -> LearnResult:
    """Learn a system language-equivalent to the one behind the oracles.

    max_rounds caps hypothesis/equivalence iterations (default
    10 * |alphabet| * (|access words| + 1), re-evaluated each round);
    max_outputs caps total output computations. Exceeding either raises
    BudgetExceeded. on_mutation(store, query), when given, is invoked after
    every change to the word lists.
    """
    t0 = time.perf_counter()
    io0 = obs.stats.io_queries
    out0 = obs.stats.output_computations
    eq0 = eq.stats.equivalence_queries

    registry = LabelRegistry(tol=label_tol)
    cache: dict[Word, int] = {}

    def query(word: Word) -> int:
        if max_outputs is not None and obs.stats.output_computations - out0 >= max_outputs:
            raise BudgetExceeded(f"more than {max_outputs} output computations")
        return cached_output(obs, registry, cache, word)

    store = ObservationStore()
    rounds = 0
    counterexample_costs: list[tuple[int, int]] = []
    while True:
        cap = (max_rounds if max_rounds is not None
               else 10 * len(alphabet) * (len(store.access_words) + 1))
        if rounds >= cap:
            raise BudgetExceeded(f"no equivalent hypothesis after {rounds} rounds")
        close_store(store, alphabet, query, on_mutation=on_mutation)
        hypothesis = build_hypothesis(store, registry, alphabet, query)
        rounds += 1
        counterexample = eq.check(hypothesis)
        if counterexample is None:
            break
        before = obs.stats.output_computations
        new_access, new_test = process_counterexample(
            counterexample, hypothesis, store, query)
        counterexample_costs.append(
            (len(counterexample), obs.stats.output_computations - before))
        # one mutation step: the new access word is only separable from its
        # current representative once the new test word is present too
        store.access_words.append(new_access)
        if new_test not in store.test_words:
            store.test_words.append(new_test)
        if on_mutation is not None:
            on_mutation(store, query)

    stats = QueryStats()
    stats.io_queries = obs.stats.io_queries - io0
    stats.output_computations = obs.stats.output_computations - out0
    stats.equivalence_queries = eq.stats.equivalence_queries - eq0
    return LearnResult(system=hypothesis, stats=stats, rounds=rounds,
                       wall_ms=(time.perf_counter() - t0) * 1000.0,
                       access_words=list(store.access_words),
                       test_words=list(store.test_words),
                       counterexample_costs=counterexample_costs)


def max_outputs_for_counterexample(length: int) -> int:
    """Worst-case output computations to process a counterexample of the
    given length: the two endpoints plus one per halving."""
    return 2 + math.ceil(math.log2(length)) if length > 1 else 2

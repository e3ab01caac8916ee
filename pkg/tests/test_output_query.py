import numpy as np
import pytest

from switchlearn import (AmbiguousLabel, EventAlphabet, Fa, GenConfig,
                         LabelRegistry, SingularBasis, SwitchedSystem,
                         WhiteBoxObservationOracle, cached_output,
                         compute_output, mat_approx_eq, output_of,
                         random_system, run)

from conftest import DEMO2D_MATRICES

E1, E2 = 0, 1


def test_two_event_output_recovery(demo2d_system):
    obs = WhiteBoxObservationOracle(demo2d_system)
    recovered = compute_output(obs, (E1, E2))
    assert np.max(np.abs(recovered - DEMO2D_MATRICES[1])) <= 1e-9


def test_empty_word_output_is_initial_label(demo2d_system):
    obs = WhiteBoxObservationOracle(demo2d_system)
    recovered = compute_output(obs, ())
    assert np.max(np.abs(recovered - DEMO2D_MATRICES[0])) <= 1e-12


def test_query_cost_is_constant(demo2d_system):
    obs = WhiteBoxObservationOracle(demo2d_system)
    compute_output(obs, ())
    assert obs.stats.io_queries == 2  # d columns for the empty word
    assert obs.stats.output_computations == 1
    compute_output(obs, (E1, E2, E2))
    assert obs.stats.io_queries == 6  # 2d columns for any non-empty word
    assert obs.stats.output_computations == 2


def conditioned_system(num_nodes, num_events, num_labels, dim, seed):
    """Random system whose matrices have singular values in [0.5, 1.5], so
    state bases stay provably invertible over the word lengths tested here
    (uniform-entry matrices can drive long products numerically singular)."""
    rng = np.random.default_rng(seed)
    matrices = []
    for _ in range(num_labels):
        u, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
        v, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
        matrices.append((u * rng.uniform(0.5, 1.5, dim)) @ v)
    fa = Fa(num_nodes=num_nodes, initial=0,
            alphabet=EventAlphabet(tuple(f"e{i+1}" for i in range(num_events))),
            delta=tuple(tuple(int(t) for t in rng.integers(0, num_nodes, num_events))
                        for _ in range(num_nodes)),
            gamma=tuple(int(g) for g in rng.integers(0, num_labels, num_nodes)))
    return SwitchedSystem(fa=fa, matrices=tuple(matrices), d=dim)


def test_recovery_matches_hidden_labels_on_random_systems():
    rng = np.random.default_rng(42)
    for trial in range(25):
        system = conditioned_system(num_nodes=int(rng.integers(1, 9)),
                                    num_events=int(rng.integers(1, 4)),
                                    num_labels=int(rng.integers(1, 5)),
                                    dim=int(rng.integers(1, 7)),
                                    seed=trial)
        obs = WhiteBoxObservationOracle(system)
        for _ in range(8):
            word = tuple(int(e) for e in rng.integers(
                0, len(system.fa.alphabet), rng.integers(0, 11)))
            recovered = compute_output(obs, word)
            true_label = system.fa.gamma[run(system.fa, word)[-1]]
            assert mat_approx_eq(recovered, system.matrices[true_label], 1e-8)


def test_recovery_classifies_correctly_on_uniform_systems():
    # uniform-entry matrices as the benchmark generator draws them; short
    # words keep the basis conditioning well inside the label tolerance
    rng = np.random.default_rng(7)
    for trial in range(15):
        config = GenConfig(num_nodes=int(rng.integers(1, 9)),
                           num_events=int(rng.integers(1, 4)),
                           num_labels=int(rng.integers(1, 5)),
                           dim=int(rng.integers(1, 7)),
                           seed=trial, full_rank_threshold=0.1)
        system = random_system(config)
        obs = WhiteBoxObservationOracle(system)
        for _ in range(8):
            word = tuple(int(e) for e in rng.integers(
                0, len(system.fa.alphabet), rng.integers(0, 6)))
            recovered = compute_output(obs, word)
            true_label = system.fa.gamma[run(system.fa, word)[-1]]
            assert mat_approx_eq(recovered, system.matrices[true_label], 1e-6)


def test_singular_label_propagates():
    fa = Fa(num_nodes=1, initial=0, alphabet=EventAlphabet(("e1",)),
            delta=((0,),), gamma=(0,))
    degenerate = SwitchedSystem(fa=fa, matrices=(np.array([[1.0, 0.0],
                                                           [0.0, 0.0]]),), d=2)
    obs = WhiteBoxObservationOracle(degenerate)
    with pytest.raises(SingularBasis):
        compute_output(obs, (0,))


def test_registry_assigns_and_reuses_ids():
    registry = LabelRegistry(tol=1e-6)
    assert registry.classify(DEMO2D_MATRICES[0]) == 0
    assert registry.classify(DEMO2D_MATRICES[1]) == 1
    assert registry.classify(DEMO2D_MATRICES[1] + 0.5e-6) == 1
    assert registry.classify(DEMO2D_MATRICES[2]) == 2
    assert len(registry) == 3


def test_registry_ambiguity_detected():
    registry = LabelRegistry(tol=1.0)
    registry.classify(np.zeros((2, 2)))
    registry.classify(np.full((2, 2), 1.5))
    with pytest.raises(AmbiguousLabel):
        registry.classify(np.full((2, 2), 0.75))


def test_cached_output_no_extra_queries(demo2d_system):
    obs = WhiteBoxObservationOracle(demo2d_system)
    registry = LabelRegistry()
    cache = {}
    first = cached_output(obs, registry, cache, (E1, E2))
    spent = obs.stats.io_queries
    second = cached_output(obs, registry, cache, (E1, E2))
    assert first == second
    assert obs.stats.io_queries == spent


def test_cache_clear_reproduces_ids(demo2d_system):
    obs = WhiteBoxObservationOracle(demo2d_system)
    registry = LabelRegistry()
    words = [(), (E1,), (E2,), (E1, E1), (E1, E2), (E2, E1), (E2, E2)]
    cache = {}
    ids = [cached_output(obs, registry, cache, w) for w in words]
    again = [cached_output(obs, registry, {}, w) for w in words]
    assert ids == again
    assert len(registry) == 3  # the demo model uses exactly three labels


def test_registry_never_exceeds_hidden_label_count():
    for seed in range(10):
        config = GenConfig(num_nodes=6, num_events=2, num_labels=4, dim=3,
                           seed=seed)
        system = random_system(config)
        obs = WhiteBoxObservationOracle(system)
        registry = LabelRegistry()
        cache = {}
        rng = np.random.default_rng(seed)
        for _ in range(40):
            word = tuple(int(e) for e in rng.integers(0, 2, rng.integers(0, 9)))
            lid = cached_output(obs, registry, cache, word)
            true_label = output_of(system.fa, word)
            assert mat_approx_eq(registry.canonical[lid],
                                 system.matrices[true_label], 1e-6)
        assert len(registry) <= len(system.matrices)

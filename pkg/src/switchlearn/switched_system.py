"""Switched linear systems: an automaton whose node labels resolve to
full-rank square matrices, with trace semantics and JSON (de)serialization.

Reading a word walks the automaton; each visited node applies its matrix to
the current state, including the last node reached. A word of length n
therefore produces n + 2 states.
"""

import json
from dataclasses import dataclass

import numpy as np

from .automaton import EventAlphabet, Fa, Word, language_of
from .errors import DimensionMismatch, ParseError, ValidationError
from .linalg import PIVOT_TOL, is_full_rank, mat_mul


@dataclass(frozen=True)
class Violation:
    kind: str  # "missing_matrix" | "bad_dimension" | "rank_deficient_label"
    label: int

    def __str__(self):
        return f"{self.kind}(label={self.label})"


@dataclass(frozen=True, eq=False)
class SwitchedSystem:
    fa: Fa
    matrices: tuple[np.ndarray, ...]
    d: int


def execute(system: SwitchedSystem, x0: np.ndarray, word: Word) -> list[np.ndarray]:
    """State sequence from x0 under word; length |word| + 2.

    x0 may be a single state (1-D, d entries) or a matrix of k column
    states; every state in the result has the same shape as x0.
    """
    x = np.asarray(x0, dtype=float)
    if x.ndim not in (1, 2) or x.shape[0] != system.d:
        raise DimensionMismatch(
            f"initial state has shape {x.shape}, expected {system.d} rows")
    states = [x]
    for label in language_of(system.fa, word):
        x = mat_mul(system.matrices[label], x)
        states.append(x)
    return states


def validate(system: SwitchedSystem, rank_tol: float = PIVOT_TOL) -> list[Violation]:
    """All violations of the switched-system invariants; empty when valid."""
    violations = []
    for label in sorted(set(system.fa.gamma)):
        if label >= len(system.matrices):
            violations.append(Violation("missing_matrix", label))
    for label, matrix in enumerate(system.matrices):
        if matrix.shape != (system.d, system.d):
            violations.append(Violation("bad_dimension", label))
        elif not is_full_rank(matrix, rank_tol):
            violations.append(Violation("rank_deficient_label", label))
    return violations


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def load_json(text: str, rank_tol: float = PIVOT_TOL) -> SwitchedSystem:
    """Parse and validate a serialized system; rejects invalid models."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    _expect(isinstance(obj, dict), "top level must be an object")
    for key in ("d", "events", "num_nodes", "initial", "delta", "gamma", "matrices"):
        _expect(key in obj, f"missing field {key!r}")
    _expect(isinstance(obj["d"], int) and obj["d"] >= 1, "d must be a positive integer")
    _expect(isinstance(obj["events"], list) and obj["events"]
            and all(isinstance(e, str) for e in obj["events"]),
            "events must be a non-empty list of strings")
    _expect(isinstance(obj["num_nodes"], int) and obj["num_nodes"] >= 1,
            "num_nodes must be a positive integer")
    _expect(isinstance(obj["initial"], int), "initial must be an integer")
    num_nodes, num_events = obj["num_nodes"], len(obj["events"])
    _expect(isinstance(obj["delta"], list) and len(obj["delta"]) == num_nodes
            and all(isinstance(row, list) and len(row) == num_events
                    and all(isinstance(t, int) for t in row)
                    for row in obj["delta"]),
            "delta must be a num_nodes x num_events table of integers")
    _expect(isinstance(obj["gamma"], list) and len(obj["gamma"]) == num_nodes
            and all(isinstance(g, int) and g >= 0 for g in obj["gamma"]),
            "gamma must list one non-negative label id per node")
    _expect(isinstance(obj["matrices"], list), "matrices must be a list")

    semantic = []
    if not 0 <= obj["initial"] < num_nodes:
        semantic.append(f"initial node {obj['initial']} out of range")
    for row in obj["delta"]:
        for target in row:
            if not 0 <= target < num_nodes:
                semantic.append(f"transition target {target} out of range")
    if semantic:
        raise ValidationError(semantic)

    matrices = []
    for k, rows in enumerate(obj["matrices"]):
        _expect(isinstance(rows, list)
                and all(isinstance(r, list)
                        and all(isinstance(v, (int, float)) for v in r)
                        for r in rows),
                f"matrix {k} must be a list of numeric rows")
        matrix = np.array(rows, dtype=float)
        if matrix.ndim != 2:
            raise ValidationError([Violation("bad_dimension", k)])
        if not np.all(np.isfinite(matrix)):
            raise ValidationError([f"matrix {k} has non-finite entries"])
        matrices.append(matrix)

    system = SwitchedSystem(
        fa=Fa(num_nodes=num_nodes, initial=obj["initial"],
              alphabet=EventAlphabet(tuple(obj["events"])),
              delta=tuple(tuple(row) for row in obj["delta"]),
              gamma=tuple(obj["gamma"])),
        matrices=tuple(matrices),
        d=obj["d"],
    )
    violations = validate(system, rank_tol)
    if violations:
        raise ValidationError(violations)
    return system


def save_json(system: SwitchedSystem) -> str:
    """Deterministic JSON text for a system; inverse of load_json."""
    obj = {
        "d": system.d,
        "events": list(system.fa.alphabet.names),
        "num_nodes": system.fa.num_nodes,
        "initial": system.fa.initial,
        "delta": [list(row) for row in system.fa.delta],
        "gamma": list(system.fa.gamma),
        "matrices": [m.tolist() for m in system.matrices],
    }
    return json.dumps(obj, indent=2) + "\n"

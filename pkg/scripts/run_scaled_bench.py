#!/usr/bin/env python3
"""Run a seeded learning-benchmark sweep and write query/timing stats as CSV.

Defaults to a small grid plus one scaled 100-node instance; pass --grid to
supply your own JSON list of {nodes, events, labels, dim, seed} objects.
"""

import argparse
import csv
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from switchlearn import (GenConfig, WhiteBoxEquivalenceOracle,
                         WhiteBoxObservationOracle, learn, random_system)

DEFAULT_GRID = [
    {"nodes": 10, "events": 2, "labels": 4, "dim": 3, "seed": 1},
    {"nodes": 25, "events": 3, "labels": 6, "dim": 5, "seed": 2},
    {"nodes": 50, "events": 4, "labels": 8, "dim": 10, "seed": 3},
    {"nodes": 100, "events": 5, "labels": 10, "dim": 20, "seed": 2026},
]

FIELDS = ["nodes", "events", "labels", "dim", "seed", "io_queries",
          "output_computations", "equivalence_queries", "rounds", "wall_ms"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", default=None, help="JSON grid file")
    parser.add_argument("--out", default="bench_results.csv")
    parser.add_argument("--rank-threshold", type=float, default=0.3,
                        help="full-rank pivot threshold for generated matrices")
    args = parser.parse_args()

    grid = (json.loads(Path(args.grid).read_text()) if args.grid
            else DEFAULT_GRID)
    with open(args.out, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=FIELDS)
        writer.writeheader()
        for entry in grid:
            config = GenConfig(num_nodes=entry["nodes"],
                               num_events=entry["events"],
                               num_labels=entry["labels"],
                               dim=entry["dim"], seed=entry["seed"],
                               full_rank_threshold=args.rank_threshold)
            hidden = random_system(config)
            result = learn(WhiteBoxObservationOracle(hidden),
                           WhiteBoxEquivalenceOracle(hidden),
                           hidden.fa.alphabet)
            verified = WhiteBoxEquivalenceOracle(hidden).check(result.system)
            row = {**{k: entry[k] for k in ("nodes", "events", "labels",
                                            "dim", "seed")},
                   **result.stats_dict()}
            writer.writerow(row)
            print(f"{entry} -> {result.system.fa.num_nodes} nodes, "
                  f"rounds={result.rounds}, "
                  f"verified={'yes' if verified is None else 'NO'}")
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

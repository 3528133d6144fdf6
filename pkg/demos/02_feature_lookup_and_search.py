"""From a feature table to a found index: the search pipeline end to end.

Builds the four-woman sample table, marks the woman with feature "d",
amplifies, and samples a few collapses.
"""

import numpy as np

from qdating import (
    FeatureTable,
    build_oracle,
    measure,
    run_grover,
    success_probability,
)

table = FeatureTable({0: "a", 1: "b", 2: "c", 3: "d"})
oracle = build_oracle(table, "d")
print(f"looking for feature 'd' -> index {oracle.target} "
      f"({oracle.n_qubits} qubits)")

state = run_grover(oracle.n_qubits, oracle, iterations=1)
print(f"probability at the marked index after one iterate: "
      f"{success_probability(state, oracle.target):.6f}")

rng = np.random.default_rng(0)
draws = [measure(state, rng) for _ in range(10)]
print(f"ten measurement outcomes: {draws}")

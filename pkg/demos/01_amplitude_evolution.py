"""How amplitude amplification concentrates probability on the marked index.

Walks a 1024-entry register through 30 Grover iterates and prints the
probability seesaw between the marked index and everybody else, then shows
the closed-form rotation formula predicting the same curve.
"""

from qdating import amplitude_trace, closed_form_probability, optimal_iterations

N_QUBITS = 10
TARGET = 7

points = amplitude_trace(N_QUBITS, TARGET, 30)

print(f"register size N = {2**N_QUBITS}, marked index = {TARGET}")
print(f"{'k':>3}  {'p(target)':>12}  {'p(other, each)':>15}  {'closed form':>12}")
for p in points:
    if p.iteration % 5 == 0 or p.iteration == 25:
        cf = closed_form_probability(2**N_QUBITS, p.iteration)
        print(
            f"{p.iteration:>3}  {p.p_target:>12.6f}  {p.p_other_each:>15.9f}"
            f"  {cf:>12.6f}"
        )

best = optimal_iterations(2**N_QUBITS)
print(f"\noptimal iterate count: {best} "
      f"(p = {closed_form_probability(2**N_QUBITS, best):.6f})")
print("a classical scan would need on the order of N/2 = "
      f"{2**N_QUBITS // 2} probes for the same certainty")

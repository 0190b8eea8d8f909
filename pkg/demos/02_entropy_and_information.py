#!/usr/bin/env python3
"""Walkthrough: entropy functionals, divergence, and fluctuation odds.

One nonequilibrium occupation vector, four entropy readings of it, and the
chain from "how far from the mean occupations" to "how improbable".
"""

import math

from boltzkit import (
    EntropyValue,
    Macrostate,
    ProbabilityVector,
    boltzmann_shannon_entropy,
    einstein_probability,
    exact_boltzmann_entropy,
    kl_divergence,
    negentropy_relation,
    shannon_entropy,
    stirling_entropy,
)

state = Macrostate([12, 5, 3])
print(f"occupations {list(state.occupations)}, N = {state.total}")
print(f"  exact k ln W          : {exact_boltzmann_entropy(state).value:.6f}")
print(f"  Stirling form         : {stirling_entropy(state).value:.6f}")
print(f"  occupation Shannon sum: {boltzmann_shannon_entropy(state).value:.6f}")
freqs = ProbabilityVector(x / state.total for x in state.occupations)
print(f"  frequency entropy     : {shannon_entropy(freqs).value:.6f} (per particle)")

print("\nDivergence against a reference distribution:")
reference = ProbabilityVector([0.5, 0.3, 0.2])
d = kl_divergence(freqs, reference)
print(f"  D(frequencies || reference) = {d:.6f}  (>= 0, 0 only at equality)")
print(f"  D(reference || reference)   = {kl_divergence(reference, reference):.6f}")

# Distance from the mean occupations doubles as an information measure:
# the entropy deficit of the observed state equals the log-odds against it.
mean = [10.0, 6.0, 4.0]
lhs, rhs = negentropy_relation(state, mean)
print(f"\nmean occupations {mean}")
print(f"  cross-entropy toward the mean : {lhs:.6f}")
print(f"  entropy deficit S_ref - S     : {rhs:.6f}  (identical)")

probability = einstein_probability(EntropyValue(-lhs, 1.0), EntropyValue(0.0, 1.0))
print(f"  implied macrostate probability: exp(-{lhs:.6f}) = {probability:.6f}")

print("\nA state exactly at its means carries no information:")
lhs0, rhs0 = negentropy_relation(Macrostate([10, 6, 4]), mean)
print(f"  lhs = {lhs0}, rhs = {rhs0}, probability = "
      f"{math.exp(-lhs0):.1f}")

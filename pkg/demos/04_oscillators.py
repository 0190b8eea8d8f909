#!/usr/bin/env python3
"""Walkthrough: oscillator ensembles, closed forms vs honest summation.

Linear oscillators carry half-integer levels with equal prior weight; the
planar model carries integer levels whose prior weight grows linearly
(the two-dimensional degeneracy). Closed forms are checked against the
truncated series with a rigorous tail bound, then against the general
equilibrium machinery.
"""

from boltzkit import (
    Dimensionality,
    OscillatorModel,
    auto_truncation,
    generalized_distribution,
    mean_energy_closed,
    mean_energy_series,
    oscillator_as_system,
)

print("Mean energy per oscillator (h_nu = 1)")
print(f"{'beta':>6} {'1d closed':>11} {'1d series':>11} "
      f"{'2d closed':>11} {'2d series':>11} {'tail bound':>11}")
for beta in (0.2, 0.5, 1.0, 2.0, 5.0):
    row = [f"{beta:>6.2f}"]
    worst_bound = 0.0
    for dim in (Dimensionality.LINEAR_1D, Dimensionality.PLANAR_2D):
        model = auto_truncation(OscillatorModel(1.0, dim), beta, tol=1e-10)
        closed = mean_energy_closed(model, beta)
        series, bound = mean_energy_series(model, beta)
        worst_bound = max(worst_bound, bound)
        row += [f"{closed:>11.8f}", f"{series:>11.8f}"]
    print(" ".join(row) + f" {worst_bound:>11.2e}")

print("\nLimits:")
cold_1d = mean_energy_closed(OscillatorModel(1.0, Dimensionality.LINEAR_1D), 50.0)
cold_2d = mean_energy_closed(OscillatorModel(1.0, Dimensionality.PLANAR_2D), 50.0)
print(f"  deep quantum (beta=50): 1d -> {cold_1d:.12f} (ground 1/2), "
      f"2d -> {cold_2d:.12f} (ground 1)")
hot = 1e-6
e1 = mean_energy_closed(OscillatorModel(1.0, Dimensionality.LINEAR_1D), hot)
e2 = mean_energy_closed(OscillatorModel(1.0, Dimensionality.PLANAR_2D), hot)
print(f"  classical (beta=1e-6): beta*<E> -> {hot * e1:.6f} (1d), "
      f"{hot * e2:.6f} (2d)")

print("\nThe same numbers through the generic equilibrium route:")
model = OscillatorModel(1.0, Dimensionality.PLANAR_2D, truncation=300)
spectrum, prior = oscillator_as_system(model)
print(f"  truncated system: {spectrum.count} levels, "
      f"prior grows like the level index (first three: "
      f"{[round(q, 6) for q in prior.entries[:3]]})")
sol = generalized_distribution(spectrum, prior, 1.0)
closed = mean_energy_closed(model, 1.0)
print(f"  equilibrium mean energy: {sol.mean_energy:.12f}")
print(f"  closed form            : {closed:.12f}")
print(f"  difference             : {abs(sol.mean_energy - closed):.2e}")

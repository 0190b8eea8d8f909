"""boltzkit: exact macrostate combinatorics, entropy functionals, and
prior-weighted equilibrium distributions for finite energy-level systems,
with a brute-force oracle that verifies the asymptotic formulas at small
scale.
"""

__version__ = "0.1.0"

from .combinatorics import (
    CompositionSet,
    StatWeight,
    enumerate_compositions,
    log_macrostate_probability,
    macrostate_probability,
    macrostate_probability_exact,
    statistical_weight,
    weight_ratio_probability,
)
from .core import (
    EnergySpectrum,
    Macrostate,
    ProbabilityVector,
    SystemSpec,
    load_spec,
    uniform_prior,
    validate_spec,
)
from .entropy import (
    EntropyValue,
    boltzmann_shannon_entropy,
    einstein_probability,
    exact_boltzmann_entropy,
    kl_cross_entropy,
    kl_divergence,
    negentropy_relation,
    occupation_cross_entropy,
    shannon_entropy,
    stirling_entropy,
)
from .equilibrium import (
    EquilibriumSolution,
    boltzmann_distribution,
    entropy_inequality_check,
    equilibrium_entropy_prior,
    equilibrium_entropy_uniform,
    generalized_distribution,
    solve_beta,
)
from .oracle import (
    OracleReport,
    check_einstein_convergence,
    check_most_probable_state,
    check_normalization_and_means,
    check_weight_dominance,
    default_suite,
    reports_to_json,
    round_to_macrostate,
)
from .oscillators import (
    Dimensionality,
    OscillatorModel,
    auto_truncation,
    mean_energy_closed,
    mean_energy_series,
    oscillator_as_system,
)

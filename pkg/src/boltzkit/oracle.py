"""Brute-force verification of asymptotic claims at exactly-computable scale.

Each check enumerates or evaluates something exactly (big integers, exact
rationals) and compares it against the closed-form or asymptotic route the
library exposes, emitting machine-readable ``OracleReport`` rows. Checks
are deterministic: enumeration order, tie-breaking and rounding rules are
all fixed.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .combinatorics import (
    DEFAULT_SIZE_CAP,
    CompositionSet,
    log_macrostate_probability,
    statistical_weight,
)
from .core import (
    EnergySpectrum,
    Macrostate,
    ProbabilityVector,
    SystemSpec,
    uniform_prior,
)
from .entropy import occupation_cross_entropy
from .equilibrium import generalized_distribution
from .errors import SupportViolation

#: Enumeration sizes above these go through log-gamma instead of big
#: integers (the particle cap keeps factorial division affordable).
EXACT_MODE_CAP = 200_000
EXACT_MODE_PARTICLE_CAP = 300


@dataclass(frozen=True)
class OracleReport:
    """One verified claim: exact quantity vs approximate route.

    For value checks, ``passed`` means the error is within ``tolerance``
    (absolute or relative per check). For convergence checks, one report is
    emitted per schedule point, ``tolerance`` holds the previous point's
    metric, ``abs_error`` the signed change toward it (negative = margin),
    and ``passed`` the strict monotonicity verdict.
    """

    check_name: str
    instance: str
    exact_value: str
    approx_value: float
    abs_error: float
    rel_error: float
    passed: bool
    tolerance: float

    def to_dict(self) -> dict:
        return asdict(self)


def reports_to_json(reports: Sequence[OracleReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def format_fraction(value: Fraction, digits: int = 36) -> str:
    """Decimal rendering of an exact rational, exact when it terminates."""
    if value.denominator == 1:
        return str(value.numerator)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def round_to_macrostate(total: int, p: Sequence[float]) -> Macrostate:
    """Largest-remainder apportionment of total*p into integer occupations.

    Deterministic: leftover units go to the largest fractional parts,
    ties to the lowest index.
    """
    targets = [total * float(q) for q in p]
    base = [math.floor(t) for t in targets]
    leftover = total - sum(base)
    order = sorted(
        range(len(p)), key=lambda j: (-(targets[j] - base[j]), j)
    )
    for j in order[:leftover]:
        base[j] += 1
    return Macrostate(base)


def _exact_prior(
    spec: SystemSpec, exact_prior: Sequence[Fraction] | None
) -> list[Fraction]:
    if exact_prior is not None:
        fractions = [Fraction(q) for q in exact_prior]
        if len(fractions) != spec.spectrum.count:
            raise SupportViolation(
                f"{len(fractions)} exact priors for {spec.spectrum.count} levels"
            )
        return fractions
    return [Fraction(q) for q in spec.prior.entries]


def check_normalization_and_means(
    spec: SystemSpec,
    exact_prior: Sequence[Fraction] | None = None,
    cap: int = DEFAULT_SIZE_CAP,
) -> list[OracleReport]:
    """Exact-rational check that macrostate probabilities sum to 1 and that
    occupation means equal N * prior, by full enumeration.

    Floats are exact rationals, so the default path converts the stored
    prior exactly; pass ``exact_prior`` when the intended rational (say
    1/3) is not float-representable.
    """
    prior = _exact_prior(spec, exact_prior)
    n_levels = spec.spectrum.count
    total_n = spec.particles
    comps = CompositionSet(total=total_n, parts=n_levels)
    comps.require_within_cap(cap)

    total_p = Fraction(0)
    means = [Fraction(0) for _ in range(n_levels)]
    fact_total = math.factorial(total_n)
    for occ in comps.iter_tuples():
        w = fact_total
        for x in occ:
            w //= math.factorial(x)
        p = Fraction(w)
        for x, q in zip(occ, prior):
            if x:
                p *= q**x
        total_p += p
        for j, x in enumerate(occ):
            if x:
                means[j] += x * p

    instance = f"N={total_n} n={n_levels} prior={[str(q) for q in prior]}"
    reports = [
        _exact_report(
            "normalization_sums_to_one", instance, expected=Fraction(1),
            actual=total_p,
        )
    ]
    for j, mean in enumerate(means):
        reports.append(
            _exact_report(
                f"mean_occupation_level_{j + 1}", instance,
                expected=total_n * prior[j], actual=mean,
            )
        )
    return reports


def _exact_report(
    name: str, instance: str, expected: Fraction, actual: Fraction
) -> OracleReport:
    err = abs(actual - expected)
    rel = err / abs(expected) if expected != 0 else err
    return OracleReport(
        check_name=name,
        instance=instance,
        exact_value=format_fraction(actual),
        approx_value=float(expected),
        abs_error=float(err),
        rel_error=float(rel),
        passed=err == 0,
        tolerance=0.0,
    )


def check_most_probable_state(
    spec: SystemSpec, beta: float, cap: int = DEFAULT_SIZE_CAP
) -> OracleReport:
    """Exhaustive argmax of the macrostate probability vs the continuous
    equilibrium distribution.

    The per-particle prior is the generalized equilibrium distribution at
    beta; the argmax is found by scanning every composition (first in
    lexicographic order wins ties) and must sit within max-norm n/N of the
    continuous distribution. ``exact_value`` records the argmax vector.
    """
    sol = generalized_distribution(spec.spectrum, spec.prior, beta)
    p = sol.distribution
    total_n = spec.particles
    n_levels = spec.spectrum.count
    comps = CompositionSet(total=total_n, parts=n_levels)
    comps.require_within_cap(cap)

    best: tuple[int, ...] | None = None
    best_log = -math.inf
    for occ in comps.iter_tuples():
        lp = log_macrostate_probability(Macrostate(occ), p)
        if lp > best_log:
            best, best_log = occ, lp
    assert best is not None
    distance = max(
        abs(x / total_n - q) for x, q in zip(best, p.entries)
    )
    tol = n_levels / total_n
    return OracleReport(
        check_name="most_probable_state_near_distribution",
        instance=f"N={total_n} n={n_levels} beta={beta:g}",
        exact_value=str(list(best)),
        approx_value=distance,
        abs_error=distance,
        rel_error=distance / tol,
        passed=distance <= tol,
        tolerance=tol,
    )


def check_einstein_convergence(
    p: ProbabilityVector,
    prior: ProbabilityVector,
    n_schedule: Sequence[int],
    k: float = 1.0,
) -> list[OracleReport]:
    """Per-particle gap between the exact multinomial log-probability and
    the entropy-difference (fluctuation) formula, along growing N.

    For each N the macrostate is the rounded N*p; the gap
    d(N) = |ln P_exact - (S - S_ref)/k| / N must strictly decrease along
    the schedule (the gap is the Stirling error of ln W, so it shrinks
    like ln N / N).
    """
    if len(p) != len(prior):
        raise SupportViolation(f"length mismatch {len(p)} vs {len(prior)}")
    for a, b in zip(p.entries, prior.entries):
        if a > 0.0 and b <= 0.0:
            raise SupportViolation("p has mass where the prior has none")

    reports = []
    previous = math.inf
    for total_n in n_schedule:
        m = round_to_macrostate(total_n, p.entries)
        log_p_exact = math.log(statistical_weight(m).exact) + math.fsum(
            x * math.log(q) for x, q in zip(m.occupations, prior.entries) if x
        )
        mean = [total_n * q for q in prior.entries]
        # (S - S_ref)/k = -occupation_cross_entropy/k, exactly.
        gap = abs(log_p_exact + occupation_cross_entropy(m, mean, k) / k)
        d = gap / total_n
        reports.append(
            OracleReport(
                check_name="einstein_probability_convergence",
                instance=f"N={total_n} p={list(p.entries)} "
                f"prior={list(prior.entries)}",
                exact_value=f"{log_p_exact:.17g}",
                approx_value=d,
                abs_error=d - previous,
                rel_error=d / previous if math.isfinite(previous) else 0.0,
                passed=d < previous,
                tolerance=previous,
            )
        )
        previous = d
    return reports


def check_weight_dominance(
    n: int, n_schedule: Sequence[int], cap: int = DEFAULT_SIZE_CAP
) -> list[OracleReport]:
    """r(N) = ln W_max / ln W_total must increase toward 1 along N.

    W_total is n**N exactly (multinomial theorem). W_max comes from
    exhaustive big-integer search when the composition set is small
    enough, otherwise from log-gamma at the balanced occupation vector
    (the known argmax of the multinomial coefficient).
    """
    if n < 1:
        raise SupportViolation(f"need n >= 1 levels, got {n}")
    reports = []
    previous = -math.inf
    for total_n in n_schedule:
        if n == 1:
            reports.append(
                OracleReport(
                    check_name="weight_dominance_ratio",
                    instance=f"N={total_n} n=1",
                    exact_value="1",
                    approx_value=1.0,
                    abs_error=0.0,
                    rel_error=0.0,
                    passed=True,
                    tolerance=0.0,
                )
            )
            continue
        comps = CompositionSet(total=total_n, parts=n)
        if (
            comps.cardinality <= min(cap, EXACT_MODE_CAP)
            and total_n <= EXACT_MODE_PARTICLE_CAP
        ):
            fact_total = math.factorial(total_n)
            w_max = 0
            for occ in comps.iter_tuples():
                w = fact_total
                for x in occ:
                    w //= math.factorial(x)
                if w > w_max:
                    w_max = w
            log_w_max = math.log(w_max)
            exact = str(w_max)
        else:
            balanced = round_to_macrostate(total_n, [1.0 / n] * n)
            log_w_max = statistical_weight(balanced).log_value
            exact = f"lgamma:{log_w_max:.17g}"
        ratio = log_w_max / (total_n * math.log(n))
        reports.append(
            OracleReport(
                check_name="weight_dominance_ratio",
                instance=f"N={total_n} n={n}",
                exact_value=exact,
                approx_value=ratio,
                abs_error=previous - ratio,
                rel_error=(previous - ratio) / abs(previous)
                if math.isfinite(previous)
                else 0.0,
                passed=ratio > previous,
                tolerance=previous if math.isfinite(previous) else 0.0,
            )
        )
        previous = ratio
    return reports


# -- default suite ----------------------------------------------------------

def default_suite(scale: str = "quick") -> list[OracleReport]:
    """Canonical oracle run. ``quick`` keeps N <= 12; ``full`` raises the
    enumeration ceiling to N = 20 and adds the convergence schedules.
    """
    if scale not in ("quick", "full"):
        raise ValueError(f"scale must be 'quick' or 'full', got {scale!r}")
    reports: list[OracleReport] = []

    norm_instances = [
        ([0.0, 1.0], [Fraction(1, 2), Fraction(1, 2)], 8),
        ([0.0, 1.0, 2.0], [Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)], 6),
        (
            [0.0, 1.0, 2.0, 3.0],
            [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 8)],
            12,
        ),
    ]
    if scale == "full":
        norm_instances.append(
            ([0.0, 0.5, 2.0], [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)], 20)
        )
    for levels, fractions, particles in norm_instances:
        spec = SystemSpec(
            spectrum=EnergySpectrum(levels),
            prior=ProbabilityVector([float(q) for q in fractions]),
            particles=particles,
        )
        reports.extend(check_normalization_and_means(spec, fractions))

    mode_instances = [
        ([0.0, 1.0], [0.5, 0.5], 10),
        ([0.0, 1.0], [0.25, 0.75], 12),
        ([0.0, 1.0, 2.0], [0.5, 0.3, 0.2], 12),
    ]
    for levels, priors, particles in mode_instances:
        spec = SystemSpec(
            spectrum=EnergySpectrum(levels),
            prior=ProbabilityVector(priors),
            particles=particles,
        )
        for beta in (0.0, 1.0):
            reports.append(check_most_probable_state(spec, beta))

    dominance_schedule = (10, 50, 200) if scale == "quick" else (10, 100, 1000, 10000)
    reports.extend(check_weight_dominance(2, dominance_schedule))

    if scale == "full":
        reports.extend(
            check_einstein_convergence(
                ProbabilityVector([0.6, 0.4]),
                uniform_prior(2),
                (10, 100, 1000),
            )
        )
    return reports

"""Exact macrostate combinatorics.

Statistical weights are arbitrary-precision integers (no overflow, ever);
probabilities have both a log-space floating route and an exact rational
route so asymptotic formulas can be checked against exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import Macrostate, ProbabilityVector
from .errors import SizeGuardExceeded, ValidationError

#: Default cap on eager materialization of a composition set.
DEFAULT_SIZE_CAP = 10_000_000


@dataclass(frozen=True)
class StatWeight:
    exact: int
    log_value: float


def statistical_weight(m: Macrostate) -> StatWeight:
    """Number of microstates (particle assignments) realizing macrostate m.

    ``exact`` is N! / prod(N_i!) as a big integer; ``log_value`` is its
    natural log computed independently through log-gamma.
    """
    exact = math.factorial(m.total)
    for x in m.occupations:
        exact //= math.factorial(x)
    log_value = math.lgamma(m.total + 1) - math.fsum(
        math.lgamma(x + 1) for x in m.occupations
    )
    return StatWeight(exact=exact, log_value=log_value)


@dataclass(frozen=True)
class CompositionSet:
    """All occupation vectors of length ``parts`` summing to ``total``.

    Iteration is lazy, lexicographically ascending, and duplicate-free.
    Each instantiated iterator owns its state, so independent consumers
    (including parallel ones) never interfere.
    """

    total: int
    parts: int

    def __post_init__(self):
        if self.parts < 1:
            raise ValidationError(f"need parts >= 1, got {self.parts}")
        if self.total < 0:
            raise ValidationError(f"need total >= 0, got {self.total}")

    @property
    def cardinality(self) -> int:
        return math.comb(self.total + self.parts - 1, self.parts - 1)

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[Macrostate]:
        for occ in _compositions(self.total, self.parts):
            yield Macrostate(occ)

    def iter_tuples(self) -> Iterator[tuple[int, ...]]:
        """Raw tuples, skipping Macrostate construction, for hot loops."""
        return _compositions(self.total, self.parts)

    def materialize(self, cap: int = DEFAULT_SIZE_CAP) -> list[Macrostate]:
        """Eager list of all members; refuses sets larger than ``cap``."""
        self.require_within_cap(cap)
        return list(self)

    def require_within_cap(self, cap: int = DEFAULT_SIZE_CAP) -> None:
        if self.cardinality > cap:
            raise SizeGuardExceeded(
                f"{self.cardinality} compositions exceed the cap {cap}"
            )


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_compositions(total: int, parts: int) -> CompositionSet:
    """Composition set of ``total`` particles over ``parts`` levels."""
    return CompositionSet(total=total, parts=parts)


def log_macrostate_probability(
    m: Macrostate, prior: ProbabilityVector | Sequence[float]
) -> float:
    """ln of the multinomial probability of m under per-particle priors.

    Returns -inf when some occupied level has zero prior. Raises on
    arity mismatch.
    """
    p = prior.entries if isinstance(prior, ProbabilityVector) else tuple(prior)
    if len(p) != len(m.occupations):
        raise ValidationError(
            f"prior length {len(p)} != macrostate length {len(m.occupations)}"
        )
    log_p = statistical_weight(m).log_value
    for count, q in zip(m.occupations, p):
        if count == 0:
            continue
        if q <= 0.0:
            return -math.inf
        log_p += count * math.log(q)
    return log_p


def macrostate_probability(
    m: Macrostate, prior: ProbabilityVector | Sequence[float]
) -> float:
    """Multinomial probability W(m) * prod(prior_i ** N_i), via log space.

    Zero prior on an occupied level legitimately gives probability 0.
    """
    log_p = log_macrostate_probability(m, prior)
    return 0.0 if log_p == -math.inf else math.exp(log_p)


def macrostate_probability_exact(
    m: Macrostate, prior: Sequence[Fraction]
) -> Fraction:
    """Exact-rational multinomial probability for rational priors."""
    if len(prior) != len(m.occupations):
        raise ValidationError(
            f"prior length {len(prior)} != macrostate length {len(m.occupations)}"
        )
    out = Fraction(statistical_weight(m).exact)
    for count, q in zip(m.occupations, prior):
        if count:
            out *= Fraction(q) ** count
    return out


def weight_ratio_probability(m: Macrostate, cap: int = DEFAULT_SIZE_CAP) -> float:
    """W(m) over the summed weights of every macrostate with the same (N, n).

    Computed by exact big-integer enumeration (the sum equals n**N, which
    the test suite verifies independently), then converted to float. Equals
    the multinomial probability at the uniform prior.
    """
    comps = CompositionSet(total=m.total, parts=len(m.occupations))
    comps.require_within_cap(cap)
    w_m = statistical_weight(m).exact
    fact_total = math.factorial(m.total)
    w_sum = 0
    for occ in comps.iter_tuples():
        w = fact_total
        for x in occ:
            w //= math.factorial(x)
        w_sum += w
    return float(Fraction(w_m, w_sum))

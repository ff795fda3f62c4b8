"""Reeb period lattice, fixed-point strata and the mean Euler characteristic.

The Reeb flow on the manifold of a = (a_0, ..., a_n) rotates the j-th
coordinate at speed 1/a_j, so a point returns after time T exactly when
every a_j supporting it divides T. The minimal periods are therefore the
lcms of subsets of at least two exponents (no point of the manifold has
fewer than two nonzero coordinates), and the points of period T form a
smaller Brieskorn manifold on the exponents dividing T.

Per stratum the relevant data are its Robbin-Salamon index

    mu_RS(Sigma_T) = sum_j (floor(T/a_j) + ceil(T/a_j)) - 2T,

its equivariant Euler characteristic, and its frequency: the number of
multiples of T below the top period d that are not multiples of any larger
period. The mean Euler characteristic combines them into one exact rational
divided by the total index 2d(sum_j 1/a_j - 1); it is an invariant of the
contact structure and is defined whenever that total index is nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import BrieskornError, CapacityError, InvalidInputError, PreconditionError
from .exactarith import count_multiples_avoiding
from .limits import DEFAULT_LIMITS, Limits
from .topology import ExponentTuple, chi_s1, noncoprime_pair

__all__ = [
    "Stratum",
    "MeanEulerReport",
    "reeb_periods",
    "stratum",
    "total_rs_index",
    "frequencies",
    "mean_euler",
    "mean_euler_coprime",
    "connected_sum_chi",
    "has_isolated_exponent",
]


@dataclass(frozen=True)
class Stratum:
    """All T-periodic points of the Reeb flow, itself a Brieskorn manifold.

    `indices` are the positions j with a_j | T, `subtuple` the exponents on
    them, `m_t` their count. The stratum has dimension 2*m_t - 3 and its
    orbit space dimension 2*m_t - 4.
    """

    period: int
    indices: tuple[int, ...]
    subtuple: ExponentTuple
    m_t: int
    dim: int
    quotient_dim: int
    mu_rs: int
    chi_s1: int
    frequency: int


@dataclass(frozen=True)
class MeanEulerReport:
    exponents: ExponentTuple
    total_index: int
    defined: bool
    value: Fraction | None
    strata: tuple[Stratum, ...]
    global_sign: int

    def __post_init__(self):
        assert self.defined == (self.total_index != 0)
        assert (self.value is not None) == self.defined


def reeb_periods(a: ExponentTuple, limits: Limits = DEFAULT_LIMITS) -> list[int]:
    """Sorted minimal periods: lcms of all subsets of >= 2 exponents.

    The largest entry is always d, the lcm of the whole tuple.
    """
    if a.length > limits.subset_cap:
        raise CapacityError(
            f"period enumeration walks 2^{a.length} subsets, exceeding the "
            f"length cap of {limits.subset_cap}"
        )
    periods = set()
    for size in range(2, a.length + 1):
        for subset in combinations(a.entries, size):
            periods.add(math.lcm(*subset))
    return sorted(periods)


def _floor_ceil_index(a: ExponentTuple, T: int) -> int:
    total = 0
    for e in a.entries:
        q, r = divmod(T, e)
        total += 2 * q if r == 0 else 2 * q + 1
    return total - 2 * T


def _build_stratum(
    a: ExponentTuple, T: int, frequency: int, limits: Limits
) -> Stratum:
    indices = tuple(j for j, e in enumerate(a.entries) if T % e == 0)
    # a period is an lcm of >= 2 entries, so at least those entries divide it
    assert len(indices) >= 2
    b = a.subtuple(indices)
    m_t = len(indices)
    mu = _floor_ceil_index(a, T)
    # Each exponent not dividing T contributes an odd floor+ceil term.
    assert (mu - (a.n + 1 - m_t)) % 2 == 0
    return Stratum(
        period=T,
        indices=indices,
        subtuple=b,
        m_t=m_t,
        dim=2 * m_t - 3,
        quotient_dim=2 * m_t - 4,
        mu_rs=mu,
        chi_s1=chi_s1(b, limits),
        frequency=frequency,
    )


def frequencies(periods: Sequence[int], limits: Limits = DEFAULT_LIMITS) -> list[int]:
    """Frequency of each period: multiples below the top period that avoid
    all larger periods. The top period itself has frequency 1 by convention."""
    if not periods:
        raise InvalidInputError("frequencies need at least one period")
    top = periods[-1]
    for i, t in enumerate(periods):
        if i > 0 and t <= periods[i - 1]:
            raise InvalidInputError("periods must be strictly increasing")
        if top % t != 0:
            raise InvalidInputError(f"every period must divide the last; {t} does not divide {top}")
    out = []
    for i, t in enumerate(periods[:-1]):
        out.append(count_multiples_avoiding(t, top, periods[i + 1 :], limits))
    out.append(1)
    return out


def stratum(a: ExponentTuple, T: int, limits: Limits = DEFAULT_LIMITS) -> Stratum:
    """Fully populated stratum for one period of the flow on `a`."""
    periods = reeb_periods(a, limits)
    if T not in periods:
        raise InvalidInputError(f"{T} is not a Reeb period of {a}; periods are {periods}")
    if T == periods[-1]:
        freq = 1
    else:
        larger = [t for t in periods if t > T]
        freq = count_multiples_avoiding(T, periods[-1], larger, limits)
    return _build_stratum(a, T, freq, limits)


def total_rs_index(a: ExponentTuple) -> int:
    """Robbin-Salamon index of the whole manifold: 2d(sum_j 1/a_j - 1)."""
    d = a.d
    return 2 * (sum(d // e for e in a.entries) - d)


def mean_euler(a: ExponentTuple, limits: Limits = DEFAULT_LIMITS) -> MeanEulerReport:
    """Mean Euler characteristic via the stratified formula.

    The signed sum over strata is evaluated twice, once with the
    per-stratum signs (-1)^(mu_RS - quotient_dim/2) and once with the global
    prefactor (-1)^(n+1); the index parity relation makes these agree and
    the agreement is enforced.
    """
    total = total_rs_index(a)
    periods = reeb_periods(a, limits)
    phis = frequencies(periods, limits)
    strata = tuple(
        _build_stratum(a, T, phi, limits) for T, phi in zip(periods, phis)
    )

    numerator_global = sum(s.frequency * s.chi_s1 for s in strata)
    numerator_stratified = sum(
        (-1) ** ((s.mu_rs - (s.quotient_dim // 2)) % 2) * s.frequency * s.chi_s1
        for s in strata
    )
    global_sign = (-1) ** (a.n + 1)
    if numerator_stratified != global_sign * numerator_global:
        raise BrieskornError(
            f"sign coherence failed for {a}: stratified numerator "
            f"{numerator_stratified} != {global_sign} * {numerator_global}"
        )

    if total == 0:
        return MeanEulerReport(a, 0, False, None, strata, global_sign)
    value = Fraction(global_sign * numerator_global, abs(total))
    return MeanEulerReport(a, total, True, value, strata, global_sign)


def mean_euler_coprime(a: ExponentTuple) -> Fraction:
    """Closed form of the mean Euler characteristic for pairwise coprime
    exponents:

        (-1)^(n+1) * [sum_{s=0}^{n-1} (n-s) e_s(a_0 - 1, ..., a_n - 1)]
                   / (2 |sum_j prod(a)/a_j - prod(a)|)

    with e_s the elementary symmetric polynomial of degree s.
    """
    bad = noncoprime_pair(a)
    if bad is not None:
        i, j = bad
        raise PreconditionError(
            f"entries at indices {i} and {j} are not coprime: "
            f"gcd({a.entries[i]}, {a.entries[j]}) = {math.gcd(a.entries[i], a.entries[j])}"
        )
    n = a.n
    shifted = [e - 1 for e in a.entries]
    elementary = [1] + [0] * len(shifted)
    for v in shifted:
        for k in range(len(shifted), 0, -1):
            elementary[k] += v * elementary[k - 1]
    bracket = sum((n - s) * elementary[s] for s in range(n))
    prod = math.prod(a.entries)
    denominator = 2 * abs(sum(prod // e for e in a.entries) - prod)
    return Fraction((-1) ** (n + 1) * bracket, denominator)


def connected_sum_chi(values: Sequence[Fraction], n: int) -> Fraction:
    """Mean Euler characteristic of a contact connected sum in dimension 2n-1.

    Each junction adds (-1)^n * 1/2, so k summands contribute their sum plus
    (k - 1) such corrections. Associative and commutative by construction.
    """
    if not values:
        raise InvalidInputError("connected sum needs at least one summand")
    if n < 2:
        raise InvalidInputError(f"connected sum needs n >= 2, got {n}")
    correction = Fraction((-1) ** n, 2)
    return sum(values, start=Fraction(0)) + (len(values) - 1) * correction


def has_isolated_exponent(a: ExponentTuple) -> bool:
    """True iff some entry is coprime to all the others.

    A sufficient condition for the mean Euler characteristic to be defined:
    with an isolated exponent the unit-fraction sum cannot equal 1.
    """
    for i, e in enumerate(a.entries):
        if all(math.gcd(e, f) == 1 for j, f in enumerate(a.entries) if j != i):
            return True
    return False

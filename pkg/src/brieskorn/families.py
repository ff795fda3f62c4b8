"""Two parametric families of sphere tuples and their exact verifications.

The first family is (m, m+1, 2m+1, 4m+3): always a sphere tuple with the
two middle entries isolated, pairwise coprime exactly when 3 does not
divide m, in which case its mean Euler characteristic has the closed form

    (21m^2 + 17m + 3) / (16m^4 - 8m^3 - 50m^2 - 34m - 6).

The second family consists of consecutive Fermat numbers F_l = 2^(2^l) + 1,
pairwise coprime by the recursion F_l = F_0 * ... * F_{l-1} + 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, InvalidInputError, PreconditionError
from .exactarith import IntPolynomial, dominance_check, dominance_margin
from .limits import DEFAULT_LIMITS, Limits
from .reeb import connected_sum_chi, mean_euler, mean_euler_coprime
from .topology import ExponentTuple, SphereVerdict, evaluate_criterion, pairwise_coprime

# Closed form numerator/denominator for the (m, m+1, 2m+1, 4m+3) family,
# coefficients ascending.
CHI_NUMERATOR = IntPolynomial((3, 17, 21))
CHI_DENOMINATOR = IntPolynomial((-6, -34, -50, -8, 16))

# g'h - h'g for the closed form above; negative for m >= 1, which makes the
# closed form strictly decreasing there.
DERIVATIVE_COMBINATION_COEFFS = (0, 48, 208, 80, -648, -672)


@dataclass(frozen=True)
class FamilyRow:
    parameter: int
    exponents: ExponentTuple
    verdict: SphereVerdict
    pairwise_coprime: bool
    chi_m: Fraction | None
    closed_form: Fraction | None
    agrees: bool | None


def sigma_m_tuple(m: int) -> ExponentTuple:
    """The 4-tuple (m, m+1, 2m+1, 4m+3)."""
    if m < 2:
        raise InvalidInputError(f"family parameter must be >= 2, got {m}")
    return ExponentTuple((m, m + 1, 2 * m + 1, 4 * m + 3))


def sigma_m_closed_form(m: int) -> Fraction:
    """Closed-form mean Euler characteristic of the m-family tuple.

    Only valid for gcd(m, 3) = 1: the derivation rests on the entries being
    pairwise coprime, and 3 | m is exactly when m and 4m+3 share a factor.

    The value is the literal polynomial quotient g(m)/h(m). Its denominator
    identity carries a hidden absolute value: h has all roots inside the
    disc of radius 3 (see `dominance_check`), so h(m) > 0 and the quotient
    equals the invariant for every valid m >= 4, but at m = 2 the sign
    flips and the quotient differs from the true invariant.
    """
    if m < 2:
        raise InvalidInputError(f"family parameter must be >= 2, got {m}")
    if math.gcd(m, 3) != 1:
        raise PreconditionError(
            f"closed form requires gcd(m, 3) = 1; m = {m} is divisible by 3"
        )
    return Fraction(CHI_NUMERATOR.evaluate(m), CHI_DENOMINATOR.evaluate(m))


def sigma_family_rows(
    m_low: int, m_high: int, limits: Limits = DEFAULT_LIMITS
) -> list[FamilyRow]:
    """One row per m in [m_low, m_high], all via the general algorithm.

    Rows with 3 | m carry no closed form: the derivation assumption fails
    there and the general algorithm is the only authority.
    """
    if m_low < 2 or m_high < m_low:
        raise InvalidInputError(f"need 2 <= m_low <= m_high, got [{m_low}, {m_high}]")
    rows = []
    for m in range(m_low, m_high + 1):
        a = sigma_m_tuple(m)
        report = mean_euler(a, limits)
        coprime = math.gcd(m, 3) == 1
        closed = sigma_m_closed_form(m) if coprime else None
        agrees = (report.value == closed) if closed is not None else None
        rows.append(
            FamilyRow(m, a, evaluate_criterion(a), coprime, report.value, closed, agrees)
        )
    return rows


@dataclass(frozen=True)
class SigmaFamilyReport:
    """Exact verification of the m-family over a parameter range.

    closed_form_agreement: general algorithm equals the closed form at every
        m in range with gcd(m, 3) = 1.
    strictly_decreasing: the closed-form values decrease strictly along that
        subsequence.
    derivative_combination_ok: g'h - h'g, computed by exact polynomial
        algebra, has the expected coefficient vector.
    dominance_ok: the denominator's leading term dominates at radius 3, so
        all its complex roots lie in that disc.
    derivative_negative_ok: g'h - h'g evaluates negative at every m in range.
    """

    m_low: int
    m_high: int
    rows: tuple[FamilyRow, ...]
    closed_form_agreement: bool
    strictly_decreasing: bool
    derivative_combination: IntPolynomial
    derivative_combination_ok: bool
    dominance_witness: tuple[int, int]
    dominance_ok: bool
    derivative_negative_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.closed_form_agreement
            and self.strictly_decreasing
            and self.derivative_combination_ok
            and self.dominance_ok
            and self.derivative_negative_ok
        )


def derivative_combination() -> IntPolynomial:
    """g'h - h'g for the closed form, by exact polynomial algebra."""
    g, h = CHI_NUMERATOR, CHI_DENOMINATOR
    return g.derivative() * h - h.derivative() * g


def sigma_family_report(
    m_low: int, m_high: int, limits: Limits = DEFAULT_LIMITS
) -> SigmaFamilyReport:
    """Run the five family checks over [m_low, m_high]."""
    if not 4 <= m_low < m_high:
        raise InvalidInputError(f"need 4 <= m_low < m_high, got [{m_low}, {m_high}]")
    rows = tuple(sigma_family_rows(m_low, m_high, limits))

    coprime_rows = [r for r in rows if r.pairwise_coprime]
    agreement = all(r.agrees for r in coprime_rows)
    decreasing = all(
        coprime_rows[i + 1].chi_m < coprime_rows[i].chi_m
        for i in range(len(coprime_rows) - 1)
    )

    combo = derivative_combination()
    combo_ok = combo.coeffs == DERIVATIVE_COMBINATION_COEFFS
    witness = dominance_margin(CHI_DENOMINATOR, 3)
    dom_ok = dominance_check(CHI_DENOMINATOR, 3)
    negative_ok = all(combo.evaluate(m) < 0 for m in range(m_low, m_high + 1))

    return SigmaFamilyReport(
        m_low,
        m_high,
        rows,
        agreement,
        decreasing,
        combo,
        combo_ok,
        witness,
        dom_ok,
        negative_ok,
    )


def fermat_number(ell: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """F_ell = 2^(2^ell) + 1."""
    if ell < 0:
        raise InvalidInputError(f"Fermat index must be >= 0, got {ell}")
    if ell > limits.fermat_cap:
        raise CapacityError(
            f"Fermat index {ell} exceeds the cap of {limits.fermat_cap} "
            "(sizes grow doubly exponentially)"
        )
    return 2 ** (2**ell) + 1


def fermat_tuple(ell: int, n: int, limits: Limits = DEFAULT_LIMITS) -> ExponentTuple:
    """The (n+1)-tuple (F_ell, ..., F_{ell+n}) of consecutive Fermat numbers.

    The product recursion F_k = F_0 * ... * F_{k-1} + 2 is re-derived and
    checked for every index generated; it is what makes the entries pairwise
    coprime.
    """
    if ell < 0:
        raise InvalidInputError(f"Fermat index must be >= 0, got {ell}")
    if n < 2:
        raise InvalidInputError(f"Fermat tuple needs n >= 2, got {n}")
    if ell + n > limits.fermat_cap:
        raise CapacityError(
            f"Fermat tuple reaches index {ell + n}, exceeding the cap of "
            f"{limits.fermat_cap}"
        )
    numbers = [2 ** (2**k) + 1 for k in range(ell + n + 1)]
    running = numbers[0]
    for k in range(1, len(numbers)):
        assert numbers[k] == running + 2
        running *= numbers[k]
    t = ExponentTuple(tuple(numbers[ell : ell + n + 1]))
    assert pairwise_coprime(t)
    return t


@dataclass(frozen=True)
class FermatRow:
    ell: int
    exponents: ExponentTuple
    chi_m: Fraction
    signed_chi: Fraction
    ratio: Fraction
    ratio_error: Fraction
    in_interval: bool
    self_sum: Fraction
    self_sum_sign_negative: bool


@dataclass(frozen=True)
class FermatAsymptoticsReport:
    """Asymptotics of the Fermat family at fixed n.

    The signed invariant behaves like 1/(2x^3) with x = 2^(2^ell), so the
    exact ratio signed_chi * 2x^3 tends to 1; the report checks that
    |ratio - 1| decreases strictly and that from the first index where the
    signed invariant enters (0, 1/4) it stays there, making the signed
    self-connected-sum value negative.
    """

    n: int
    rows: tuple[FermatRow, ...]
    ratio_error_strictly_decreasing: bool
    first_in_interval: int | None
    in_interval_from_first_on: bool
    self_sum_negative_whenever_below_quarter: bool

    @property
    def passed(self) -> bool:
        return (
            self.ratio_error_strictly_decreasing
            and self.first_in_interval is not None
            and self.in_interval_from_first_on
            and self.self_sum_negative_whenever_below_quarter
        )


def fermat_asymptotics_report(
    ells: Sequence[int], n: int, limits: Limits = DEFAULT_LIMITS
) -> FermatAsymptoticsReport:
    """Exact asymptotic verification over the given Fermat indices."""
    if not ells:
        raise InvalidInputError("need at least one Fermat index")
    if list(ells) != sorted(set(ells)):
        raise InvalidInputError("Fermat indices must be strictly increasing")
    sign = (-1) ** (n + 1)
    quarter = Fraction(1, 4)
    rows = []
    for ell in ells:
        t = fermat_tuple(ell, n, limits)
        chi = mean_euler_coprime(t)
        general = mean_euler(t, limits)
        assert general.defined and general.value == chi
        x = 2 ** (2**ell)
        signed = sign * chi
        ratio = signed * 2 * x**3
        self_sum = connected_sum_chi([chi, chi], n)
        rows.append(
            FermatRow(
                ell=ell,
                exponents=t,
                chi_m=chi,
                signed_chi=signed,
                ratio=ratio,
                ratio_error=abs(ratio - 1),
                in_interval=Fraction(0) < signed < quarter,
                self_sum=self_sum,
                self_sum_sign_negative=sign * self_sum < 0,
            )
        )

    decreasing = all(
        rows[i + 1].ratio_error < rows[i].ratio_error for i in range(len(rows) - 1)
    )
    first = next((r.ell for r in rows if r.in_interval), None)
    from_first_on = first is None or all(
        r.in_interval for r in rows if r.ell >= first
    )
    below_quarter_negative = all(
        r.self_sum_sign_negative for r in rows if r.signed_chi < quarter
    )
    return FermatAsymptoticsReport(
        n, tuple(rows), decreasing, first, from_first_on, below_quarter_negative
    )

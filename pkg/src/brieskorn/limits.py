"""Configurable enumeration caps and cross-check thresholds.

Every exponential enumeration in the package (subset sums, antichain
inclusion-exclusion, Fermat towers, sphere searches) is guarded by a cap so
that absurd inputs fail fast with a `CapacityError` instead of hanging.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import InvalidInputError

# Environment variable spellings match the CLI flags, upper-cased, BK_ prefix.
_ENV_VARS = {
    "subset_cap": "BK_CAP_SUBSETS",
    "antichain_cap": "BK_CAP_ANTICHAIN",
    "fermat_cap": "BK_CAP_FERMAT",
    "direct_count_limit": "BK_DIRECT_COUNT_LIMIT",
}


@dataclass(frozen=True)
class Limits:
    """Caps applied by the enumeration-heavy operations.

    subset_cap: maximum tuple length L for operations that walk all 2^L
        subsets (homology rank, period lattice).
    antichain_cap: maximum antichain size in the counting kernel's
        inclusion-exclusion (2^size terms are summed).
    fermat_cap: largest Fermat index ever materialized (sizes grow doubly
        exponentially).
    direct_count_limit: largest candidate range for which the counting
        kernel runs its direct-enumeration cross-check.
    search_budget: maximum number of candidate tuples a sphere search may
        enumerate.
    """

    subset_cap: int = 24
    antichain_cap: int = 24
    fermat_cap: int = 12
    direct_count_limit: int = 10**6
    search_budget: int = 10**6

    def with_overrides(self, **kwargs) -> "Limits":
        """Return a copy with the given fields replaced (None values ignored)."""
        updates = {k: v for k, v in kwargs.items() if v is not None}
        for name, value in updates.items():
            if value < 0:
                raise InvalidInputError(f"limit {name} must be nonnegative, got {value}")
        return replace(self, **updates)


DEFAULT_LIMITS = Limits()


def limits_from_env(base: Limits = DEFAULT_LIMITS) -> Limits:
    """Read BK_* environment overrides on top of `base`."""
    overrides = {}
    for field, var in _ENV_VARS.items():
        raw = os.environ.get(var)
        if raw is None:
            continue
        try:
            overrides[field] = int(raw)
        except ValueError:
            raise InvalidInputError(f"{var} must be an integer, got {raw!r}") from None
    return base.with_overrides(**overrides)

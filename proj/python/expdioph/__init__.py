"""Exact checks, search-region bounds and exhaustive searches for
(2am+1)^x + (2m)^y = (2am-1)^z."""

from ._core import (
    bounds,
    check,
    check_generic,
    cmp_powersum,
    corollary_search,
    filters,
    identity_scan,
    oracle_search,
    small_case_survivors,
    theorem_search,
    verify_aux,
)

__all__ = [
    "bounds",
    "check",
    "check_generic",
    "cmp_powersum",
    "corollary_search",
    "filters",
    "identity_scan",
    "oracle_search",
    "small_case_survivors",
    "theorem_search",
    "verify_aux",
]

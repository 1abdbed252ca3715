"""Closed-form mixed domination sizes and bounds for P(n,k).

The k=1 and k=2 values are exact; the k>=3 expression is an upper bound
achieved by the general block construction. Case tables are kept verbatim
rather than algebraically collapsed so each branch can be audited against
the construction that realizes it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange

EXACT = "exact"
UPPER_BOUND = "upper-bound"

# exact optima for the smallest k=1 instances, found by exhaustive search
SMALL_K1 = {3: 3, 4: 4, 5: 4, 6: 5, 7: 6}

# additional elements needed on top of 6 per full 8-column block, by n mod 8
_K1_EXTRA = {0: 0, 1: 2, 2: 2, 3: 3, 4: 4, 5: 4, 6: 5, 7: 6}


@dataclass(frozen=True)
class FormulaResult:
    value: int
    kind: str  # EXACT or UPPER_BOUND
    source: str


def gamma_k1(n: int) -> FormulaResult:
    """Exact mixed domination number of P(n,1), n >= 3."""
    if n < 3:
        raise OutOfRange(f"gamma_k1 needs n >= 3, got {n}")
    if n <= 7:
        return FormulaResult(SMALL_K1[n], EXACT, f"k1 small n={n}")
    m, r = divmod(n, 8)
    return FormulaResult(6 * m + _K1_EXTRA[r], EXACT, f"k1 r={r}")


def gamma_k2(n: int) -> FormulaResult:
    """Exact mixed domination number of P(n,2), n >= 5.

    The four remainder cases of the 4-column pattern collapse to a single
    expression 3*(n//4) + n%4.
    """
    if n < 5:
        raise OutOfRange(f"gamma_k2 needs n >= 5, got {n}")
    m, r = divmod(n, 4)
    return FormulaResult(3 * m + r, EXACT, f"k2 r={r}")


def gamma_k2_remark(n: int) -> FormulaResult:
    """Size of the alternate 8-column k=2 pattern, n >= 8.

    Exact except when n mod 8 is 1 or 4, where it exceeds gamma_k2 by one;
    reported as an upper bound for that reason.
    """
    if n < 8:
        raise OutOfRange(f"gamma_k2_remark needs n >= 8, got {n}")
    m, r = divmod(n, 8)
    return FormulaResult(6 * m + _K1_EXTRA[r], UPPER_BOUND, f"k2-8col r={r}")


def upper_bound_general(n: int, k: int) -> FormulaResult:
    """Upper bound for P(n,k), k >= 3, from the width-(4k'+1) block pattern.

    With k' = k//2, T = 4k'+1, m = n//T and r = n%T the bound is
    (3k'+1)m + r for even r and (3k'+1)m + k' + (r+1)/2 for odd r.
    """
    if k < 3:
        raise OutOfRange(f"upper_bound_general needs k >= 3, got {k}")
    if 2 * k >= n:
        raise OutOfRange(f"need k < n/2, got n={n}, k={k}")
    kp = k // 2
    T = 4 * kp + 1
    m, r = divmod(n, T)
    if r % 2 == 0:
        return FormulaResult((3 * kp + 1) * m + r, UPPER_BOUND, f"k{k} even-r={r}")
    return FormulaResult((3 * kp + 1) * m + kp + (r + 1) // 2, UPPER_BOUND, f"k{k} odd-r={r}")


def formula_for(n: int, k: int, remark: bool = False) -> FormulaResult:
    """Dispatch to the right formula for (n, k)."""
    if k == 1:
        return gamma_k1(n)
    if k == 2:
        return gamma_k2_remark(n) if remark else gamma_k2(n)
    return upper_bound_general(n, k)

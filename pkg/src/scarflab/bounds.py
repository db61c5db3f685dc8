"""Closed-form face counts and betti bounds for powers of E_q.

All values are exact Python ints. ``i`` is the homological degree, which
equals face dimension (degree 0 counts generators).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, UnsupportedError


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _check(q, i):
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    if i < 0:
        raise DomainError(f"i must be nonnegative, got {i}")


def sharp_r3(q: int, i: int) -> int:
    """The seven-term count of i-faces of the Scarf complex of E_q^3 (i >= 1)."""
    c2, c3 = binom(q - 1, 2), binom(q, 3)
    total = binom(c3, i + 1)
    total += q * binom(q - 1, i)
    total += binom(q, 2) * binom(q - 2, i - 1)
    for s in range(2, q - 2):
        total += q * binom(q - 1, s - 1) * binom(binom(q - s, 3) + c2, i - s + 2)
    total += q * c2 * binom(c2, i - q + 4)
    total += q * (q - 1) * binom(c2, i - q + 3)
    total += q * binom(c2, i - q + 2)
    return total


def sharp_r3_unsimplified(q: int, i: int) -> int:
    """The same count before the Chu-Vandermonde step.

    Each family contributes the faces it adds on top of the earlier ones:
    U_q, then U_{e_a} minus what U_q already covers, then U_{2e_a},
    U_{e_a+e_b} and the W_{P,a} blocks.
    """
    c2, c3 = binom(q - 1, 2), binom(q, 3)
    total = binom(c3, i + 1)
    total += q * (binom(binom(q, 2), i + 1) - binom(c2, i + 1))
    total += q * binom(q - 1, i)
    total += binom(q, 2) * binom(q - 2, i - 1)
    for s in range(2, q - 2):
        total += q * binom(q - 1, s - 1) * (
            binom(binom(q - s, 3) + c2, i - s + 2) - binom(c2, i - s + 2)
        )
    return total


def beta_bound(q: int, r: int, i: int) -> int:
    """Upper bound for beta_i(I^r), I square-free with q generators.

    It is the number of i-faces of the Scarf complex of E_q^r (r <= 3).
    """
    _check(q, i)
    if r == 1:
        return binom(q, i + 1)
    if r == 2:
        return binom(binom(q, 2), i + 1) + q * binom(q - 1, i)
    if r == 3:
        if i == 0:
            # the seven-term form is only claimed for i >= 1; at q = 3 it gives 13
            return binom(q + 2, 3)
        return sharp_r3(q, i)
    raise UnsupportedError(f"no closed form for r = {r}")


def taylor_bound(q: int, r: int, i: int) -> int:
    """Number of i-faces of the Taylor complex of E_q^r."""
    _check(q, i)
    return binom(binom(q + r - 1, r), i + 1)


def l_bound(q: int, r: int, i: int) -> int:
    """Number of i-faces of the L-complex of E_q^3."""
    _check(q, i)
    if r != 3:
        raise UnsupportedError("l_bound is implemented for r = 3 only")
    return q * binom(q - 1, i) + binom(binom(q, 3) + 2 * binom(q, 2), i + 1)


def pd_bound(q: int, r: int) -> int:
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    if r == 1:
        return q - 1
    if r == 2:
        return binom(q, 2) - 1 if q >= 3 else q - 1
    if r == 3:
        if q >= 5:
            return binom(q, 3) - 1
        if q >= 3:
            return binom(q, 2) - 1
        return q - 1
    raise UnsupportedError(f"no projective dimension formula for r = {r}")


def is_log_concave(values) -> bool:
    v = [x for x in values if x > 0]
    return all(v[k] ** 2 >= v[k - 1] * v[k + 1] for k in range(1, len(v) - 1))


def is_unimodal(values) -> bool:
    v = list(values)
    k = 0
    while k + 1 < len(v) and v[k + 1] >= v[k]:
        k += 1
    while k + 1 < len(v) and v[k + 1] <= v[k]:
        k += 1
    return k == len(v) - 1


@dataclass(frozen=True)
class BettiVector:
    q: int
    r: int
    values: tuple
    log_concave: bool
    unimodal: bool
    top_value: int


def betti_vector(q: int, r: int) -> BettiVector:
    """beta_0 .. beta_pd of the bound, with shape diagnostics."""
    pd = pd_bound(q, r)
    values = tuple(beta_bound(q, r, i) for i in range(pd + 1))
    return BettiVector(q, r, values, is_log_concave(values), is_unimodal(values), values[-1])


@dataclass(frozen=True)
class BoundRow:
    i: int
    scarf: int
    l: int  # noqa: E741
    taylor: int


def bound_table(q: int, r: int, degrees) -> list:
    rows = []
    for i in degrees:
        lval = l_bound(q, r, i) if r == 3 else beta_bound(q, r, i)
        rows.append(BoundRow(i, beta_bound(q, r, i), lval, taylor_bound(q, r, i)))
    return rows


def ratio_diagnostics(q: int, r: int = 3) -> dict:
    """Exact Taylor/Scarf and L/Scarf ratios degree by degree.

    Degrees where the Scarf count vanishes are listed under ``skipped``.
    """
    if r != 3:
        raise UnsupportedError("ratio diagnostics are for r = 3")
    if q > 10:
        raise DomainError("ratio diagnostics are tabulated for q <= 10")
    rows, skipped = [], []
    top = binom(q + 2, 3) - 1
    for i in range(top + 1):
        s = beta_bound(q, 3, i)
        if s == 0:
            skipped.append(i)
            continue
        rows.append((i, Fraction(taylor_bound(q, 3, i), s), Fraction(l_bound(q, 3, i), s)))
    return {
        "rows": rows,
        "skipped": skipped,
        "max_taylor_ratio": max(t for _, t, _ in rows),
        "max_l_ratio": max(x for _, _, x in rows),
    }

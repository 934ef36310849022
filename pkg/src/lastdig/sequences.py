"""The index sequences of n escaping divisibility by 5.

a_k enumerates, in increasing order, the n >= 1 for which 5 does not
divide C(2n,n): exactly the n whose base-5 digits are all at most 2, so
a_k is the base-3 numeral of k reinterpreted as a base-5 numeral. b_k
enumerates the n >= 1 for which 5 does not divide g_n; those are the odd
members of the first sequence, and b_k = a_(2k-1).

Each sequence is computable by three independent routes, all exposed:

* closed form:   a_k = k + 2 * sum(floor(k / 3**i) * 5**(i-1), i >= 1)
* differences:   a_k - a_(k-1) = (5**mu(k) + 1) / 2  (nu and +3 for b)
* recurrence:    a_k = 5 * a_(k/3) when 3 | k, else a_(k-1) + 1

The streaming generators seed with the closed form and advance by the
difference formulas, so each term costs one valuation and one addition.
"""

from collections.abc import Iterator
from typing import NamedTuple

from lastdig.digits import mu, nu


class BFileRecord(NamedTuple):
    """One OEIS-style b-file line: 1-based index and term value."""

    k: int
    value: int


def _require_index(k: int) -> None:
    if k < 1:
        raise ValueError(f"sequence index must be >= 1, got {k}")


def a_closed(k: int) -> int:
    """k-th n with 5 not dividing C(2n,n), by the floor-sum closed form."""
    _require_index(k)
    total = k
    power = 1
    q = k // 3
    while q:
        total += 2 * q * power
        power *= 5
        q //= 3
    return total


def a_diff(k: int) -> int:
    """First difference a_k - a_(k-1) = (5**mu(k) + 1) / 2, for k >= 2."""
    if k < 2:
        raise ValueError(f"difference needs k >= 2, got {k}")
    return (5 ** mu(k) + 1) // 2


def a_rec(k: int) -> int:
    """a_k by the divide-by-3 recurrence, evaluated iteratively.

    Walking k down by at most two decrements between divisions keeps the
    loop at O(log k) steps with no recursion.
    """
    _require_index(k)
    coeff = 1
    offset = 0
    while k > 1:
        if k % 3 == 0:
            coeff *= 5
            k //= 3
        else:
            offset += coeff
            k -= 1
    return coeff + offset


def b_closed(k: int) -> int:
    """k-th n with 5 not dividing g_n; equals a_(2k-1)."""
    _require_index(k)
    return a_closed(2 * k - 1)


def b_diff(k: int) -> int:
    """First difference b_k - b_(k-1) = (5**nu(k) + 3) / 2, for k >= 2."""
    if k < 2:
        raise ValueError(f"difference needs k >= 2, got {k}")
    return (5 ** nu(k) + 3) // 2


_B_BASE = {1: 1, 2: 5}


def b_rec(k: int) -> int:
    """b_k by the four-branch recurrence, evaluated iteratively.

    For m = 3j, 3j+1, 3j+2 (j >= 1):
        b_(3j)   = b_(3j-1) + 2
        b_(3j+1) = 5*b_(j+1) - 4   if j % 3 == 0, else b_(3j) + 4
        b_(3j+2) = 5*b_(j+1)
    with base cases b_1 = 1 and b_2 = 5, which the recurrence alone does
    not reach.
    """
    _require_index(k)
    coeff = 1
    offset = 0
    while k > 2:
        r = k % 3
        if r == 0:
            offset += 2 * coeff
            k -= 1
        elif r == 2:
            coeff *= 5
            k = (k - 2) // 3 + 1
        else:
            j = (k - 1) // 3
            if j % 3 == 0:
                offset -= 4 * coeff
                coeff *= 5
                k = j + 1
            else:
                offset += 4 * coeff
                k -= 1
    return coeff * _B_BASE[k] + offset


def stream_a(start: int, count: int) -> Iterator[BFileRecord]:
    """Yield (k, a_k) for k = start .. start+count-1.

    Seeded by the closed form and advanced by first differences, so the
    amortized cost per term is one valuation plus one big-int addition.
    """
    _require_index(start)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    return _stream(start, count, a_closed, a_diff)


def stream_b(start: int, count: int) -> Iterator[BFileRecord]:
    """Yield (k, b_k) for k = start .. start+count-1, like stream_a."""
    _require_index(start)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    return _stream(start, count, b_closed, b_diff)


def _stream(start, count, closed, diff):
    if count == 0:
        return
    value = closed(start)
    yield BFileRecord(start, value)
    for k in range(start + 1, start + count):
        value += diff(k)
        yield BFileRecord(k, value)


def a_inverse(n: int) -> int | None:
    """Index k with a_k = n, or None when n is not in the sequence.

    Reads the base-5 digits of n as a base-3 numeral; any digit above 2
    signals non-membership.
    """
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")
    k = 0
    power = 1
    while n:
        n, d = divmod(n, 5)
        if d > 2:
            return None
        k += d * power
        power *= 3
    return k

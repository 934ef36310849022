"""Last decimal digits of C(2n,n) and of its convolution companions.

For f_n = sum(C(n,i) * C(2n-2i, n-i) for i in 0..n) and g_n (the same sum
starting at i=1, so f_n = C(2n,n) + g_n), the last decimal digit of each
of C(2n,n), f_n and g_n is a function of two base-5 digit statistics of n
alone: whether any digit exceeds 2, and the count u of digits equal to 1,
mod 4. Every function here therefore costs one pass over the base-5
digits of n and handles n far beyond machine-word size.

The digit tables:

    C(2n,n) mod 10:  0 when some digit of n exceeds 2, else
                     6, 2, 4, 8  for u mod 4 = 0, 1, 2, 3
    g_n mod 10:      5 when n is even or some digit exceeds 2, else
                     1, 9         for u mod 4 = 1, 3  (u is odd here)
    f_n mod 10:      5 when some digit exceeds 2, else
                     1, 3, 9, 7  for u mod 4 = 0, 1, 2, 3
"""

from dataclasses import dataclass

from lastdig.digits import classify_a

# Keyed by u mod 4, valid only when every base-5 digit of n is <= 2.
# A member n >= 1 with u = 0 must contain a digit 2, whose Lucas factor 6
# keeps the product congruent to 6 rather than 2**0 = 1 mod 10.
_BINOM_DIGIT = {0: 6, 1: 2, 2: 4, 3: 8}
_F_DIGIT = {0: 1, 1: 3, 2: 9, 3: 7}
_G_DIGIT = {1: 1, 3: 9}


@dataclass(frozen=True)
class LastDigitReport:
    """All three last digits for one n, plus the statistics behind them."""

    n: int
    in_a: bool        # 5 does not divide C(2n,n)
    in_b: bool        # 5 does not divide g_n; equals in_a and n odd
    u_mod4: int       # count of base-5 digits of n equal to 1, mod 4
    binom_mod10: int  # in {0, 2, 4, 6, 8}
    f_mod10: int      # in {1, 3, 5, 7, 9}
    g_mod10: int      # in {1, 5, 9}


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"defined for n >= 1, got {n}")


def central_binom_mod10(n: int) -> int:
    """Last decimal digit of C(2n,n), for n >= 1, via the base-5 digits of n."""
    _require_positive(n)
    m = classify_a(n)
    return _BINOM_DIGIT[m.u_mod4] if m.member else 0


def g_mod10(n: int) -> int:
    """Last decimal digit of g_n = sum(C(n,i)*C(2n-2i,n-i), i=1..n), n >= 1.

    Always 1, 5 or 9; the only escape from 5 is odd n with all base-5
    digits at most 2, and then u is odd.
    """
    _require_positive(n)
    m = classify_a(n)
    if n % 2 == 0 or not m.member:
        return 5
    return _G_DIGIT[m.u_mod4]


def f_mod10(n: int) -> int:
    """Last decimal digit of f_n = sum(C(n,i)*C(2n-2i,n-i), i=0..n), n >= 1."""
    _require_positive(n)
    m = classify_a(n)
    return _F_DIGIT[m.u_mod4] if m.member else 5


def report(n: int) -> LastDigitReport:
    """All three last digits from a single scan of the base-5 digits of n."""
    _require_positive(n)
    m = classify_a(n)
    in_b = m.member and n % 2 == 1
    return LastDigitReport(
        n=n,
        in_a=m.member,
        in_b=in_b,
        u_mod4=m.u_mod4,
        binom_mod10=_BINOM_DIGIT[m.u_mod4] if m.member else 0,
        f_mod10=_F_DIGIT[m.u_mod4] if m.member else 5,
        g_mod10=_G_DIGIT[m.u_mod4] if in_b else 5,
    )

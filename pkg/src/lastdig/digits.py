"""Base-5 and base-3 digit machinery behind the last-digit classifiers.

Everything downstream rests on how n and n interact when added in base 5:
the sum 2n carries nowhere exactly when every base-5 digit of n is at most
2, and by Lucas' theorem that is precisely when C(2n,n) is coprime to 5.
Two digit statistics therefore decide every result in this package:

* whether any base-5 digit of n exceeds 2 (the membership test), and
* u = the count of base-5 digits of n equal to 1, taken mod 4.

Also here are the 3-adic valuations mu(k) and nu(k) that govern the first
differences of the index sequences in :mod:`lastdig.sequences`.

All functions are pure, accept integers of any size, and run in time
linear in the number of digits they touch.
"""

from dataclasses import dataclass

SUPPORTED_RADICES = (3, 5)


@dataclass(frozen=True)
class DigitVec:
    """Little-endian digits of a nonnegative integer in a fixed radix.

    Zero is the empty digit tuple, and the most significant digit (the
    last entry) is never 0, so every value has exactly one representation.
    """

    radix: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.radix not in SUPPORTED_RADICES:
            raise ValueError(f"radix must be one of {SUPPORTED_RADICES}, got {self.radix}")
        for d in self.digits:
            if not 0 <= d < self.radix:
                raise ValueError(f"digit {d} out of range for radix {self.radix}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("most significant digit must be nonzero")

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class AMembership:
    """Outcome of the base-5 digit test on n.

    ``member`` is true iff every base-5 digit of n is at most 2, i.e. iff
    5 does not divide C(2n,n). ``u`` counts the base-5 digits equal to 1;
    ``u_mod4`` is that count mod 4. The counts are well defined for any n,
    but only drive the last-digit tables when ``member`` is true.
    """

    member: bool
    u: int
    u_mod4: int


def to_digits(n: int, radix: int) -> DigitVec:
    """Decompose n >= 0 into little-endian digits in the given radix (3 or 5)."""
    if radix not in SUPPORTED_RADICES:
        raise ValueError(f"radix must be one of {SUPPORTED_RADICES}, got {radix}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    digits = []
    while n:
        n, d = divmod(n, radix)
        digits.append(d)
    return DigitVec(radix, tuple(digits))


def from_digits(vec: DigitVec) -> int:
    """Reassemble the integer a DigitVec represents; inverse of to_digits."""
    value = 0
    for d in reversed(vec.digits):
        value = value * vec.radix + d
    return value


def classify_a(n: int) -> AMembership:
    """Scan the base-5 digits of n once, collecting membership and u.

    classify_a(0) reports member=True with u=0; callers that need the
    n >= 1 domain of the divisibility statements gate separately.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    member = True
    u = 0
    while n:
        n, d = divmod(n, 5)
        if d == 1:
            u += 1
        elif d > 2:
            member = False
    return AMembership(member, u, u & 3)


def is_b_member(n: int) -> bool:
    """True iff n is odd and no base-5 digit of n exceeds 2.

    These are exactly the n for which 5 does not divide
    g_n = sum(C(n,i) * C(2n-2i, n-i) for i in 1..n).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return n % 2 == 1 and classify_a(n).member


def mu(k: int) -> int:
    """3-adic valuation of k: the largest t with 3**t dividing k. Needs k >= 1."""
    if k < 1:
        raise ValueError(f"3-adic valuation requires k >= 1, got {k}")
    v = 0
    while k % 3 == 0:
        v += 1
        k //= 3
    return v


def nu(k: int) -> int:
    """Largest t with 3**t dividing (k-1)*(2k-1). Needs k >= 2.

    (k-1) and (2k-1) are coprime, so this equals mu(k-1) + mu(2k-1) with
    at most one nonzero addend.
    """
    if k < 2:
        raise ValueError(f"nu is defined for k >= 2, got {k}")
    return mu(k - 1) + mu(2 * k - 1)

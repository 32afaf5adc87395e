"""White's characterization of empty and clean lattice tetrahedra.

The standard form T(a, b, c) has vertices 0, e1, e2 and (a, b, c) with
c >= 1 and 0 <= a, b < c, plus a derived fourth parameter
d = (1 - a - b) mod c.  Writing <x> for the fractional part of x:

* T(a, b, c) is clean iff gcd(a, c) = gcd(b, c) = gcd(d, c) = 1; the three
  gcds are exactly the primitivity defects of the three non-coordinate
  faces.
* A clean T(a, b, c) with c > 1 is empty iff
  <k*a/c> + <k*b/c> + <k*d/c> - k/c == 1 for every k = 1..c-1.
* White's criterion: T(a, b, c) is empty iff it is clean and one of
  a, b, c, d equals 1.

The equation system can be rewritten with the 0/1 staircase increments
floor_step below, which is cheaper and is checked against both the
fraction form and the brute-force oracle by the verification suites.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CanonicalForm:
    """Parameters (a, b, c) of the standard tetrahedron T(a, b, c)."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError(f"c must be >= 1, got {self.c}")
        if not (0 <= self.a < self.c and 0 <= self.b < self.c):
            raise ValueError(
                f"need 0 <= a, b < c, got a={self.a}, b={self.b}, c={self.c}"
            )

    @property
    def d(self) -> int:
        """Fourth parameter (1 - a - b) mod c, reduced to 0 <= d < c."""
        return (1 - self.a - self.b) % self.c

    def sort_key(self) -> tuple[int, int, int]:
        """(c, a, b), the order used to pick canonical representatives."""
        return (self.c, self.a, self.b)


def d_of(a: int, b: int, c: int) -> int:
    """Fourth parameter of the form (a, b, c); validates the parameter ranges."""
    return CanonicalForm(a, b, c).d


def frac_multiple(k: int, n: int, c: int) -> Fraction:
    """Exact fractional part <k*n/c> as a Fraction with denominator dividing c."""
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    return Fraction(k * n % c, c)


def is_clean_form(form: CanonicalForm) -> bool:
    """gcd test for cleanliness: gcd(a, c) = gcd(b, c) = gcd(d, c) = 1."""
    c = form.c
    return (
        math.gcd(form.a, c) == 1
        and math.gcd(form.b, c) == 1
        and math.gcd(form.d, c) == 1
    )


def white_empty(form: CanonicalForm) -> bool:
    """White's criterion: clean and at least one of a, b, c, d equals 1."""
    return is_clean_form(form) and (
        form.a == 1 or form.b == 1 or form.c == 1 or form.d == 1
    )


def _require_clean_with_height(form: CanonicalForm) -> None:
    if form.c <= 1:
        raise ValueError(f"system is only defined for c > 1, got c = {form.c}")
    if not is_clean_form(form):
        raise ValueError(f"system is only defined for clean forms, got {form}")


def satisfies_fraction_system(form: CanonicalForm) -> bool:
    """Exact emptiness system for a clean form with c > 1.

    Checks <k*a/c> + <k*b/c> + <k*d/c> - k/c == 1 for every k = 1..c-1,
    in Fraction arithmetic.
    """
    _require_clean_with_height(form)
    a, b, c, d = form.a, form.b, form.c, form.d
    return all(
        frac_multiple(k, a, c)
        + frac_multiple(k, b, c)
        + frac_multiple(k, d, c)
        - Fraction(k, c)
        == 1
        for k in range(1, c)
    )


def floor_step(n: int, c: int, k: int) -> int:
    """Increment floor((k+1)*n/c) - floor(k*n/c) of the staircase; always 0 or 1.

    Defined for 0 < n < c with gcd(n, c) = 1 and 1 <= k <= c - 2 (so the
    staircase never lands exactly on an integer inside the range).
    """
    if not 0 < n < c:
        raise ValueError(f"need 0 < n < c, got n={n}, c={c}")
    if math.gcd(n, c) != 1:
        raise ValueError(f"need gcd(n, c) = 1, got n={n}, c={c}")
    if not 1 <= k <= c - 2:
        raise ValueError(f"need 1 <= k <= c - 2, got k={k}, c={c}")
    return (k + 1) * n // c - k * n // c


def floor_step_support(n: int, c: int) -> set[int]:
    """The set of k in 1..c-2 where floor_step(n, c, k) is 1.

    Computed from the definition; the closed form {floor(k*c/n) : k=1..n-1}
    is a theorem the verification suites check against, not the
    implementation.
    """
    if not 0 < n < c:
        raise ValueError(f"need 0 < n < c, got n={n}, c={c}")
    if math.gcd(n, c) != 1:
        raise ValueError(f"need gcd(n, c) = 1, got n={n}, c={c}")
    return {k for k in range(1, c - 1) if (k + 1) * n // c - k * n // c == 1}


def satisfies_step_system(form: CanonicalForm) -> bool:
    """Staircase form of the emptiness system for a clean form with c > 1.

    Equivalent to satisfies_fraction_system: requires a + b + d == c + 1
    and floor_step(a,.,k) + floor_step(b,.,k) + floor_step(d,.,k) == 1 for
    every k = 1..c-2.  At c = 2 the k-range is vacuous and the verdict
    rests on the sum condition alone.
    """
    _require_clean_with_height(form)
    a, b, c, d = form.a, form.b, form.c, form.d
    if a + b + d != c + 1:
        return False
    return all(
        floor_step(a, c, k) + floor_step(b, c, k) + floor_step(d, c, k) == 1
        for k in range(1, c - 1)
    )


def satisfied_clause(form: CanonicalForm) -> str:
    """Which unit-parameter clause makes an empty form empty.

    Returns the first of "c=1", "a=1", "b=1", "d=1" that holds (several
    can hold at once; the order fixes a deterministic tag).  Raises on
    forms that are not empty.
    """
    if not white_empty(form):
        raise ValueError(f"form is not empty: {form}")
    if form.c == 1:
        return "c=1"
    if form.a == 1:
        return "a=1"
    if form.b == 1:
        return "b=1"
    return "d=1"


def clean_forms(c: int) -> list[CanonicalForm]:
    """All clean forms with third parameter c, in lexicographic (a, b) order."""
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    return [
        form
        for a in range(c)
        for b in range(c)
        if is_clean_form(form := CanonicalForm(a, b, c))
    ]


def empty_forms(c: int) -> list[CanonicalForm]:
    """All empty forms with third parameter c, in lexicographic (a, b) order."""
    if c < 1:
        raise ValueError(f"c must be >= 1, got {c}")
    return [form for form in clean_forms(c) if white_empty(form)]

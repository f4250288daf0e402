"""Parameter validation and exponent structure for the two code families.

Both families live in GF(q^2), q = p^m, and use zero exponents congruent to
delta mod q-1 (with gcd(delta, q-1) = 1), so each exponent is determined by
a residue s mod q+1 through d = s(q-1) + delta mod q^2-1.

family "f1" (binary only):  s_j = j*h + delta/2 mod q+1 for j = 0..t, where
1/2 is the inverse of 2 mod the odd number q+1.

family "f2" (any prime p):  s_j = j*h + (delta-h)/2 mod q+1 for j = 1..t.
For p = 2 the halving is again division by 2 mod q+1; for odd p it is exact
integer halving, which forces delta and h to be odd.

The resulting cyclic codes have length q^2-1 and dimension (2t+1)m ("f1")
or 2tm ("f2"), provided the exponents land in pairwise distinct p-cyclotomic
cosets; validate_spec checks that explicitly instead of trusting the count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .galois import is_prime

FAMILIES = ("f1", "f2")


class SpecValidationError(ValueError):
    """A code-parameter constraint is violated.

    The `code` attribute names the violated constraint so callers can react
    without parsing the message.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CodeSpec:
    """Raw user parameters, unvalidated."""

    family: str
    p: int
    m: int
    h: int
    delta: int
    t: int


@dataclass(frozen=True)
class ValidatedSpec:
    """A CodeSpec together with everything derived from it."""

    family: str
    p: int
    m: int
    h: int
    delta: int
    t: int
    q: int
    e: int
    s_values: tuple[int, ...]
    exponents: tuple[int, ...]
    coset_sizes: tuple[int, ...]
    length: int
    dimension: int

    @property
    def moment_size(self) -> int:
        """Number of possible nonzero weights: 2t+1 for f1, 2t for f2."""
        return 2 * self.t + 1 if self.family == "f1" else 2 * self.t

    @property
    def codeword_count(self) -> int:
        return self.p**self.dimension

    @property
    def key(self) -> str:
        return f"{self.family}:{self.p}:{self.m}:{self.h}:{self.delta}:{self.t}"


def half_mod(x: int, modulus: int, p: int) -> int:
    """x/2 mod modulus: multiplicative inverse of 2 when p = 2 (modulus is
    then odd), exact integer halving of an even x when p is odd."""
    if p == 2:
        return (x * pow(2, -1, modulus)) % modulus
    if x % 2:
        raise SpecValidationError("parity", f"cannot halve odd value {x} exactly")
    return (x // 2) % modulus


def exponents_f1(m: int, h: int, delta: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(s_0..s_t, d_0..d_t) for the binary family, canonical residues."""
    q = 2**m
    n = q * q - 1
    half = half_mod(delta % (q + 1), q + 1, 2)
    s_values = tuple((j * h + half) % (q + 1) for j in range(t + 1))
    exponents = tuple((s * (q - 1) + delta) % n for s in s_values)
    return s_values, exponents


def exponents_f2(p: int, m: int, h: int, delta: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(s_1..s_t, d_1..d_t) for the p-ary family, canonical residues."""
    q = p**m
    n = q * q - 1
    if p == 2:
        half = half_mod((delta - h) % (q + 1), q + 1, 2)
    else:
        if delta % 2 == 0:
            raise SpecValidationError("parity", f"delta must be odd for odd p, got {delta}")
        if h % 2 == 0:
            raise SpecValidationError("parity", f"h must be odd for odd p, got {h}")
        half = half_mod(delta - h, q + 1, p)
    s_values = tuple((j * h + half) % (q + 1) for j in range(1, t + 1))
    exponents = tuple((s * (q - 1) + delta) % n for s in s_values)
    return s_values, exponents


def cyclotomic_coset(modulus: int, p: int, exponent: int) -> frozenset[int]:
    """Orbit of exponent under multiplication by p mod modulus."""
    if math.gcd(p, modulus) != 1:
        raise ValueError(f"p = {p} shares a factor with modulus {modulus}")
    exponent %= modulus
    coset = {exponent}
    x = exponent * p % modulus
    while x != exponent:
        coset.add(x)
        x = x * p % modulus
    return frozenset(coset)


def _s_of(d: int, delta: int, q: int) -> int:
    """Recover s with d = s(q-1) + delta mod q^2-1, or fail if d is not of
    that shape."""
    n = q * q - 1
    dd = (d - delta) % n
    if dd % (q - 1):
        raise ValueError(f"exponent {d} is not congruent to {delta} mod {q - 1}")
    return (dd // (q - 1)) % (q + 1)


def minpoly_degree(d: int, delta: int, q: int, m: int) -> int:
    """Degree of the minimal polynomial attached to exponent d: m exactly
    when delta = 2s mod q+1, else 2m."""
    s = _s_of(d, delta, q)
    return m if (2 * s - delta) % (q + 1) == 0 else 2 * m


def minpoly_same(d: int, d_prime: int, delta: int, q: int) -> bool:
    """Whether two exponents of the same delta shape share a minimal
    polynomial: s = s' or s = delta - s' mod q+1."""
    s = _s_of(d, delta, q)
    s_prime = _s_of(d_prime, delta, q)
    return (s - s_prime) % (q + 1) == 0 or (s + s_prime - delta) % (q + 1) == 0


def validate_spec(raw: CodeSpec) -> ValidatedSpec:
    """Check every parameter constraint and derive the validated spec.

    Raises SpecValidationError naming the first violated constraint.  The
    dimension is always cross-checked against the actual cyclotomic cosets;
    a collision is rejected as a degenerate zero set rather than silently
    producing a smaller code.
    """
    if raw.family not in FAMILIES:
        raise SpecValidationError("bad_family", f"family must be one of {FAMILIES}, got {raw.family!r}")
    if not is_prime(raw.p):
        raise SpecValidationError("p_not_prime", f"p must be prime, got {raw.p}")
    if raw.m < 1:
        raise SpecValidationError("bad_m", f"m must be >= 1, got {raw.m}")
    if raw.h < 1:
        raise SpecValidationError("bad_h", f"h must be >= 1, got {raw.h}")
    if raw.delta < 1:
        raise SpecValidationError("bad_delta", f"delta must be >= 1, got {raw.delta}")

    q = raw.p**raw.m
    if math.gcd(raw.delta, q - 1) != 1:
        raise SpecValidationError(
            "delta_not_coprime", f"gcd(delta, q-1) = gcd({raw.delta}, {q - 1}) != 1")
    if raw.h % (q + 1) == 0:
        raise SpecValidationError("h_zero_mod", f"h = {raw.h} is 0 mod q+1 = {q + 1}")
    e = math.gcd(raw.h, q + 1)

    if raw.family == "f1":
        if raw.p != 2:
            raise SpecValidationError("f1_needs_p2", "family f1 requires p = 2")
        if raw.t < 0:
            raise SpecValidationError("t_out_of_range", f"t must be >= 0, got {raw.t}")
    else:
        if raw.t < 1:
            raise SpecValidationError("t_out_of_range", f"family f2 requires t >= 1, got {raw.t}")
        if raw.p != 2 and (raw.delta % 2 == 0 or raw.h % 2 == 0):
            raise SpecValidationError(
                "parity", f"odd p requires odd delta and h, got delta={raw.delta}, h={raw.h}")
    if 2 * e * raw.t > q + 1:
        raise SpecValidationError(
            "t_out_of_range",
            f"t = {raw.t} exceeds (q+1)/(2e) = {(q + 1)}/{2 * e}")

    if raw.family == "f1":
        s_values, exponents = exponents_f1(raw.m, raw.h, raw.delta, raw.t)
        dim_formula = (2 * raw.t + 1) * raw.m
    else:
        s_values, exponents = exponents_f2(raw.p, raw.m, raw.h, raw.delta, raw.t)
        dim_formula = 2 * raw.t * raw.m

    n = q * q - 1
    cosets = [cyclotomic_coset(n, raw.p, d) for d in exponents]
    for i in range(len(cosets)):
        for j in range(i + 1, len(cosets)):
            if cosets[i] == cosets[j]:
                raise SpecValidationError(
                    "degenerate_zero_set",
                    f"exponents {exponents[i]} and {exponents[j]} share a cyclotomic coset")
    coset_sizes = tuple(len(c) for c in cosets)
    if sum(coset_sizes) != dim_formula:
        raise SpecValidationError(
            "degenerate_zero_set",
            f"coset sizes {coset_sizes} sum to {sum(coset_sizes)}, expected {dim_formula}")

    return ValidatedSpec(
        family=raw.family, p=raw.p, m=raw.m, h=raw.h, delta=raw.delta, t=raw.t,
        q=q, e=e, s_values=s_values, exponents=exponents,
        coset_sizes=coset_sizes, length=n, dimension=dim_formula,
    )

"""Exact moment system and weight distribution.

The weight frequencies mu_j solve M mu = b where M is the Vandermonde-type
matrix with entries (j*e*q - q - 1)^i and b_i = scale * N_i - (q^2-1)^i,
scale = q^(2t+1) for family f1 and q^(2t) for f2.  Two independent exact
solvers are run on every call: fraction-free Gaussian elimination and the
Lagrange-coefficient closed form for transposed Vandermonde systems.  Their
agreement, an exact residual check, and integrality of the result guard the
published tables against arithmetic bugs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .codespec import ValidatedSpec
from .moments import n_r


class ModelViolationError(ArithmeticError):
    """The exact solution is not a vector of non-negative integers.

    Carries the full rational solution; this signals parameters outside the
    validity of the frequency model, or a bug.
    """

    def __init__(self, message: str, solution: tuple[Fraction, ...]):
        super().__init__(message)
        self.solution = solution


def theoretical_weights(family: str, p: int, q: int, e: int, t: int) -> tuple[int, ...]:
    """Possible nonzero weights w_j, j ascending (weights descending).

    f1: (q^2 - (je-1)q)/2 for j = 0..2t.
    f2: (p-1)/p * (q^2 - (je-1)q) for j = 0..2t-1.
    """
    if family == "f1":
        return tuple((q * q - (j * e - 1) * q) // 2 for j in range(2 * t + 1))
    return tuple((p - 1) * (q * q - (j * e - 1) * q) // p for j in range(2 * t))


def moment_nodes(size: int, q: int, e: int) -> tuple[int, ...]:
    return tuple(j * e * q - q - 1 for j in range(size))


@dataclass(frozen=True)
class MomentMatrix:
    """Square matrix with rows (node_j)^i, recorded with its provenance."""

    rows: tuple[tuple[int, ...], ...]
    family: str
    t: int
    q: int
    e: int

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def nodes(self) -> tuple[int, ...]:
        return moment_nodes(self.size, self.q, self.e)


def moment_matrix(family: str, t: int, q: int, e: int) -> MomentMatrix:
    size = 2 * t + 1 if family == "f1" else 2 * t
    if size < 1:
        raise ValueError(f"empty moment system for family {family}, t = {t}")
    nodes = moment_nodes(size, q, e)
    rows = tuple(tuple(x**i for x in nodes) for i in range(size))
    return MomentMatrix(rows=rows, family=family, t=t, q=q, e=e)


def b_vector(family: str, t: int, q: int, e: int) -> tuple[int, ...]:
    size = 2 * t + 1 if family == "f1" else 2 * t
    scale = q ** (2 * t + 1) if family == "f1" else q ** (2 * t)
    return tuple(scale * n_r(i, q, e) - (q * q - 1) ** i for i in range(size))


def solve_bareiss(rows, rhs) -> tuple[Fraction, ...]:
    """Exact solve of a square integer system by fraction-free elimination
    (Bareiss) followed by rational back-substitution."""
    n = len(rows)
    aug = [list(map(int, rows[i])) + [int(rhs[i])] for i in range(n)]
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot_row is None:
            raise ZeroDivisionError("singular matrix")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        for r in range(col + 1, n):
            factor = aug[r][col]
            for c in range(col + 1, n + 1):
                aug[r][c] = (aug[r][c] * piv - factor * aug[col][c]) // prev
            aug[r][col] = 0
        prev = piv
    sol = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        if aug[r][r] == 0:
            raise ZeroDivisionError("singular matrix")
        acc = Fraction(aug[r][n])
        for c in range(r + 1, n):
            acc -= aug[r][c] * sol[c]
        sol[r] = acc / aug[r][r]
    return tuple(sol)


def _lagrange_numerators(nodes) -> list[tuple[list[int], int]]:
    """For each node x_j: coefficients of prod_{k != j}(x - x_k) and the
    denominator prod_{k != j}(x_j - x_k)."""
    out = []
    for j, xj in enumerate(nodes):
        num = [1]
        den = 1
        for k, xk in enumerate(nodes):
            if k == j:
                continue
            num = [0] + num
            for i in range(len(num) - 1):
                num[i] -= xk * num[i + 1]
            den *= xj - xk
        out.append((num, den))
    return out


def solve_lagrange(nodes, rhs) -> tuple[Fraction, ...]:
    """Exact solve of sum_j x_j^i mu_j = b_i via Lagrange coefficients: the
    inverse matrix row for node x_j is the coefficient vector of its basis
    polynomial."""
    if len(set(nodes)) != len(nodes):
        raise ZeroDivisionError("repeated interpolation nodes")
    sol = []
    for num, den in _lagrange_numerators(nodes):
        acc = sum(c * b for c, b in zip(num, rhs))
        sol.append(Fraction(acc, den))
    return tuple(sol)


def invert_exact(rows) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse by Gauss-Jordan on rationals."""
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot_row is None:
            raise ZeroDivisionError("singular matrix")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def invert_lagrange(nodes) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the matrix [node_j^i] from Lagrange basis coefficients."""
    n = len(nodes)
    out = []
    for num, den in _lagrange_numerators(nodes):
        row = [Fraction(num[i] if i < len(num) else 0, den) for i in range(n)]
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class WeightDistribution:
    """Sorted (weight, frequency) pairs for the nonzero codewords.

    `entries` lists only weights with nonzero frequency, ascending; the full
    frequency vector indexed by j (including zero entries) is kept as
    diagnostics and excluded from equality.
    """

    family: str
    length: int
    dimension: int
    entries: tuple[tuple[int, int], ...]
    weights_by_j: tuple[int, ...] = field(compare=False)
    freq_by_j: tuple[int, ...] | None = field(compare=False)

    @property
    def zero_frequency_weights(self) -> tuple[int, ...]:
        if self.freq_by_j is None:
            return ()
        return tuple(w for w, f in zip(self.weights_by_j, self.freq_by_j) if f == 0)

    @classmethod
    def from_freq_by_j(cls, vspec: ValidatedSpec, weights_by_j, freq_by_j) -> "WeightDistribution":
        freq_by_j = tuple(int(f) for f in freq_by_j)
        if any(f < 0 for f in freq_by_j):
            raise ValueError(f"negative frequency in {freq_by_j}")
        total = sum(freq_by_j)
        expected = vspec.codeword_count - 1
        if total != expected:
            raise ValueError(f"frequencies sum to {total}, expected {expected}")
        entries = tuple(sorted((w, f) for w, f in zip(weights_by_j, freq_by_j) if f))
        return cls(family=vspec.family, length=vspec.length, dimension=vspec.dimension,
                   entries=entries, weights_by_j=tuple(weights_by_j), freq_by_j=freq_by_j)


def weight_distribution(vspec: ValidatedSpec) -> WeightDistribution:
    """Solve the moment system exactly and return the distribution.

    Runs both exact solvers, re-verifies M mu = b by multiplication, and
    rejects any non-integral or negative frequency.
    """
    mm = moment_matrix(vspec.family, vspec.t, vspec.q, vspec.e)
    b = b_vector(vspec.family, vspec.t, vspec.q, vspec.e)
    mu = solve_bareiss(mm.rows, b)
    mu_cross = solve_lagrange(mm.nodes, b)
    if mu != mu_cross:
        raise AssertionError("elimination and Lagrange solves disagree")
    for i, row in enumerate(mm.rows):
        if sum(r * x for r, x in zip(row, mu)) != b[i]:
            raise AssertionError(f"residual nonzero in row {i}")
    if any(f.denominator != 1 or f < 0 for f in mu):
        raise ModelViolationError(
            f"frequencies are not non-negative integers for {vspec.key}", mu)
    freq_by_j = tuple(int(f) for f in mu)
    weights = theoretical_weights(vspec.family, vspec.p, vspec.q, vspec.e, vspec.t)
    return WeightDistribution.from_freq_by_j(vspec, weights, freq_by_j)


def enumerator_string(dist: WeightDistribution) -> str:
    """Canonical weight enumerator text: 1 + sum of {freq}Y^{weight},
    ascending weights."""
    return "1" + "".join(f"+{f}Y^{w}" for w, f in dist.entries)


def parse_enumerator(text: str) -> tuple[tuple[int, int], ...]:
    """Inverse of enumerator_string: (weight, frequency) pairs, ascending."""
    terms = text.split("+")
    if terms[0] != "1":
        raise ValueError(f"enumerator must start with 1, got {text!r}")
    out = []
    for term in terms[1:]:
        freq, _, weight = term.partition("Y^")
        if not weight:
            raise ValueError(f"malformed enumerator term {term!r}")
        out.append((int(weight), int(freq)))
    if out != sorted(out):
        raise ValueError("enumerator weights are not ascending")
    return tuple(out)

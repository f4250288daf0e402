"""Independent ground truth by direct enumeration.

Two weight paths are kept deliberately separate:

  * the positionwise path evaluates the defining trace expression of a
    codeword symbol by symbol over all q^2-1 coordinates;
  * the root-counting path evaluates a degree <= 2t polynomial over the
    small subgroup W of the unit circle (order (q+1)/e) and converts the
    number of roots into a character-sum value and hence a weight.

Full-space sweeps (brute_distribution, power_moment_check) and the tuple
counter n_r_brute run under an operation budget; an over-budget request is
refused outright, never truncated.  The stated cost model charges
p^dimension * (q^2-1) for a distribution sweep regardless of path, and
(q^2-1)^r for counting r-tuples.

Sweeps iterate the coefficient space in a fixed deterministic order
(a_0 outermost for family f1, then a_1..a_t, each coefficient running
through zero followed by ascending generator exponents).  The outer index
range can be partitioned into shards whose partial histograms merge by
exact addition, so results are identical for any shard count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .codespec import ValidatedSpec
from .galois import FieldContext, build_field
from .moments import n_r
from .solver import WeightDistribution, moment_nodes, theoretical_weights

DEFAULT_BUDGET = 10**10
_FAST_BLOCK_CAP = 1 << 18
_SLOW_BLOCK_ROWS = 1 << 19


class BudgetExceeded(RuntimeError):
    """The requested sweep is larger than the operation budget allows."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"operation requires a budget of {required}, only {budget} allowed")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class UnitCircle:
    """The order-(q+1) subgroup U of GF(q^2)* and its index-e subgroup W."""

    u: tuple[int, ...]
    w: tuple[int, ...]


def unit_circle(ctx: FieldContext, q: int, e: int) -> UnitCircle:
    n = ctx.order - 1
    if n != q * q - 1:
        raise ValueError(f"context of order {ctx.order} does not match q = {q}")
    u = tuple(ctx.exp_table[(i * (q - 1)) % n] for i in range(q + 1))
    w = tuple(ctx.exp_table[(i * (q - 1) * e) % n] for i in range((q + 1) // e))
    return UnitCircle(u=u, w=w)


def _context_for(vspec: ValidatedSpec, ctx: FieldContext | None) -> FieldContext:
    if ctx is None:
        return build_field(vspec.p, 2 * vspec.m)
    if ctx.p != vspec.p or ctx.order != vspec.q * vspec.q:
        raise ValueError(f"context {ctx!r} does not match spec {vspec.key}")
    return ctx


def coefficient_domains(vspec: ValidatedSpec, ctx: FieldContext) -> list[list[int]]:
    """Per-coefficient code lists in sweep order: zero first, then ascending
    generator exponents.  Family f1 restricts the leading coefficient to the
    subfield GF(q), reached as zero plus powers of gamma^(q+1)."""
    full = [0] + list(ctx.exp_table)
    if vspec.family == "f1":
        return [ctx.subfield_elements(vspec.m)] + [full] * vspec.t
    return [full] * vspec.t


def _slot_terms(vspec: ValidatedSpec) -> list[list[tuple[bool, int]]]:
    """Per coefficient: the (conjugate?, W-point exponent) pairs that build
    the root-counting polynomial."""
    t = vspec.t
    if vspec.family == "f1":
        return [[(False, t)]] + [[(False, t - j), (True, t + j)] for j in range(1, t + 1)]
    return [[(False, t + j - 1), (True, t - j)] for j in range(1, t + 1)]


def validate_tuple(vspec: ValidatedSpec, a: tuple[int, ...], ctx: FieldContext) -> None:
    if len(a) != len(vspec.exponents):
        raise ValueError(
            f"coefficient tuple has length {len(a)}, expected {len(vspec.exponents)}")
    if vspec.family == "f1" and not ctx.is_subfield_element(a[0], vspec.m):
        raise ValueError(f"leading coefficient {a[0]} is not in GF({vspec.q})")


# -- scalar paths ---------------------------------------------------------

def codeword_weight(vspec: ValidatedSpec, a: tuple[int, ...], ctx: FieldContext) -> int:
    """Hamming weight by direct positionwise evaluation of the defining
    trace expression; independent of the root-counting shortcut."""
    validate_tuple(vspec, a, ctx)
    n = vspec.length
    weight = 0
    for i in range(n):
        if _symbol_at(vspec, a, ctx, i):
            weight += 1
    return weight


def _symbol_at(vspec: ValidatedSpec, a: tuple[int, ...], ctx: FieldContext, i: int) -> int:
    n = vspec.length
    if vspec.family == "f1":
        head = ctx.mul(a[0], ctx.exp_table[(vspec.exponents[0] * i) % n])
        sym = ctx.trace_to_prime(head, vspec.m)
        rest_exps = vspec.exponents[1:]
        rest = a[1:]
    else:
        sym = 0
        rest_exps = vspec.exponents
        rest = a
    acc = 0
    for coeff, d in zip(rest, rest_exps):
        acc = ctx.add(acc, ctx.mul(coeff, ctx.exp_table[(d * i) % n]))
    return (sym + ctx.trace_to_prime(acc)) % vspec.p


def char_sum(vspec: ValidatedSpec, a: tuple[int, ...], ctx: FieldContext) -> int:
    """Character sum via root counting over W.

    Evaluates the coefficient polynomial at every point of W; each root
    accounts for e unit-circle solutions, giving N = e * roots and the sum
    q(N-1) for family f1 or (p-1)q(N-1) for f2.  The zero tuple makes the
    polynomial vanish identically, which yields q^2 resp. (p-1)q^2.
    """
    validate_tuple(vspec, a, ctx)
    q, e = vspec.q, vspec.e
    w_points = unit_circle(ctx, q, e).w
    terms = _slot_terms(vspec)
    roots = 0
    for u in w_points:
        acc = 0
        for coeff, slot in zip(a, terms):
            for conjugate, uexp in slot:
                c = ctx.pow(coeff, q) if conjugate else coeff
                acc = ctx.add(acc, ctx.mul(c, ctx.pow(u, uexp)))
        if acc == 0:
            roots += 1
    n_sol = e * roots
    if vspec.family == "f1":
        return q * (n_sol - 1)
    return (vspec.p - 1) * q * (n_sol - 1)


def char_sum_direct(vspec: ValidatedSpec, a: tuple[int, ...], ctx: FieldContext) -> int:
    """Character sum by positionwise summation over all of GF(q^2): counts
    zero symbols Z (the origin included) and returns p*Z - q^2.  Slow; used
    to spot-check char_sum."""
    validate_tuple(vspec, a, ctx)
    zeros = 1  # the x = 0 term
    for i in range(vspec.length):
        if _symbol_at(vspec, a, ctx, i) == 0:
            zeros += 1
    return vspec.p * zeros - vspec.q * vspec.q


def weight_from_char_sum(vspec: ValidatedSpec, s: int) -> int:
    q, p = vspec.q, vspec.p
    num = q * q * (p - 1) - s
    if num % p:
        raise ValueError(f"character sum {s} is not a valid value for {vspec.key}")
    return num // p


def _weight_for_count(vspec: ValidatedSpec, roots: int) -> int:
    q, e, p = vspec.q, vspec.e, vspec.p
    if vspec.family == "f1":
        return (q * q - (roots * e - 1) * q) // 2
    return (p - 1) * (q * q - (roots * e - 1) * q) // p


# -- vectorized sweeps ----------------------------------------------------

def _shard_bounds(total: int, shards: int) -> list[tuple[int, int]]:
    if shards < 1:
        raise ValueError(f"shards must be >= 1, got {shards}")
    base, extra = divmod(total, shards)
    bounds = []
    start = 0
    for i in range(shards):
        stop = start + base + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def _split_for_block(domains: list[list[int]], cap: int) -> int:
    """Index of the first slot included in the trailing vectorized block."""
    size = 1
    split = len(domains)
    while split > 0 and size * len(domains[split - 1]) <= cap:
        size *= len(domains[split - 1])
        split -= 1
    if split == len(domains):
        split -= 1  # always vectorize at least the last slot
    return split


def _decode_outer(flat: int, sizes: list[int]) -> list[int]:
    idx = [0] * len(sizes)
    for pos in range(len(sizes) - 1, -1, -1):
        flat, idx[pos] = divmod(flat, sizes[pos])
    return idx


def _add_table(ctx: FieldContext) -> np.ndarray:
    table = np.zeros((ctx.order, ctx.order), dtype=np.int64)
    for x in range(ctx.order):
        for y in range(x, ctx.order):
            v = ctx.add(x, y)
            table[x, y] = v
            table[y, x] = v
    return table


def _fast_root_histogram(vspec: ValidatedSpec, ctx: FieldContext, shards: int) -> list[int]:
    """Histogram of W-root counts over all coefficient tuples (the zero
    tuple removed)."""
    q, e, p = vspec.q, vspec.e, vspec.p
    w_points = unit_circle(ctx, q, e).w
    k_count = len(w_points)
    domains = coefficient_domains(vspec, ctx)
    terms = _slot_terms(vspec)

    contrib = []
    for slot, domain in zip(terms, domains):
        arr = np.zeros((k_count, len(domain)), dtype=np.int64)
        for ki, u in enumerate(w_points):
            upows = {uexp: ctx.pow(u, uexp) for _, uexp in slot}
            for zi, z in enumerate(domain):
                acc = 0
                for conjugate, uexp in slot:
                    c = ctx.pow(z, q) if conjugate else z
                    acc = ctx.add(acc, ctx.mul(c, upows[uexp]))
                arr[ki, zi] = acc
        contrib.append(arr)

    add_tab = _add_table(ctx) if p != 2 else None
    split = _split_for_block(domains, _FAST_BLOCK_CAP)
    blocks = []
    for ki in range(k_count):
        t = contrib[split][ki]
        for s in range(split + 1, len(domains)):
            nxt = contrib[s][ki]
            if p == 2:
                t = (t[:, None] ^ nxt[None, :]).ravel()
            else:
                t = add_tab[t[:, None], nxt[None, :]].ravel()
        blocks.append(t)

    outer_sizes = [len(d) for d in domains[:split]]
    n_outer = 1
    for s in outer_sizes:
        n_outer *= s

    hist = [0] * (k_count + 1)
    for start, stop in _shard_bounds(n_outer, shards):
        shard_hist = np.zeros(k_count + 1, dtype=np.int64)
        counts = np.zeros(blocks[0].shape[0], dtype=np.uint16)  # root counts reach q+1
        for flat in range(start, stop):
            idx = _decode_outer(flat, outer_sizes)
            counts[:] = 0
            for ki in range(k_count):
                partial = 0
                for s, zi in enumerate(idx):
                    partial = ctx.add(partial, int(contrib[s][ki, zi]))
                counts += blocks[ki] == ctx.neg(partial)
            shard_hist += np.bincount(counts, minlength=k_count + 1)
            if flat == 0:
                shard_hist[int(counts[0])] -= 1  # remove the all-zero tuple
        for i in range(k_count + 1):
            hist[i] += int(shard_hist[i])
    return hist


def _trace_code_arrays(vspec: ValidatedSpec, ctx: FieldContext) -> tuple[np.ndarray, np.ndarray]:
    """Trace lookups by element code: full-field trace and, for family f1,
    the subfield trace (defined on GF(q) codes only)."""
    tr_full = np.zeros(ctx.order, dtype=np.uint8)
    for x in range(1, ctx.order):
        tr_full[x] = ctx.trace_to_prime(x)
    tr_sub = np.zeros(ctx.order, dtype=np.uint8)
    if vspec.family == "f1":
        for x in ctx.subfield_elements(vspec.m):
            if x:
                tr_sub[x] = ctx.trace_to_prime(x, vspec.m)
    return tr_full, tr_sub


def _slow_weight_histogram(vspec: ValidatedSpec, ctx: FieldContext, shards: int) -> Counter:
    """Weight counts over all coefficient tuples by positionwise symbol
    evaluation (the zero tuple removed)."""
    n = vspec.length
    p = vspec.p
    domains = coefficient_domains(vspec, ctx)
    tr_full, tr_sub = _trace_code_arrays(vspec, ctx)
    exp_arr = np.array(ctx.exp_table, dtype=np.int64)
    log_arr = np.array(ctx.log_table, dtype=np.int64)

    rows = []
    for s, (domain, d) in enumerate(zip(domains, vspec.exponents)):
        tr = tr_sub if vspec.family == "f1" and s == 0 else tr_full
        dlog = (d * np.arange(n, dtype=np.int64)) % n
        table = np.zeros((len(domain), n), dtype=np.uint8)
        for zi, z in enumerate(domain):
            if z:
                table[zi] = tr[exp_arr[(log_arr[z] + dlog) % n]]
        rows.append(table)

    split = _split_for_block(domains, _SLOW_BLOCK_ROWS)
    block = rows[split]
    for s in range(split + 1, len(domains)):
        nxt = rows[s]
        if p == 2:
            block = (block[:, None, :] ^ nxt[None, :, :]).reshape(-1, n)
        else:
            block = ((block[:, None, :] + nxt[None, :, :]) % p).reshape(-1, n)

    outer_sizes = [len(d) for d in domains[:split]]
    n_outer = 1
    for s in outer_sizes:
        n_outer *= s

    whist: Counter = Counter()
    for start, stop in _shard_bounds(n_outer, shards):
        shard_hist = np.zeros(n + 1, dtype=np.int64)
        for flat in range(start, stop):
            idx = _decode_outer(flat, outer_sizes)
            partial = np.zeros(n, dtype=np.uint8)
            for s, zi in enumerate(idx):
                if p == 2:
                    partial ^= rows[s][zi]
                else:
                    partial = (partial + rows[s][zi]) % p
            if p == 2:
                arr = block ^ partial[None, :]
                zeros = (arr == 0).sum(axis=1)
            else:
                arr = block + partial[None, :]
                zeros = (arr == 0).sum(axis=1) + (arr == p).sum(axis=1)
            shard_hist += np.bincount(n - zeros, minlength=n + 1)
            if flat == 0:
                shard_hist[0] -= 1  # remove the all-zero tuple
        for w in np.nonzero(shard_hist)[0]:
            whist[int(w)] += int(shard_hist[w])
    return whist


def brute_distribution(vspec: ValidatedSpec, ctx: FieldContext | None = None,
                       budget: int = DEFAULT_BUDGET, path: str = "fast",
                       shards: int = 1) -> WeightDistribution:
    """Exact weight distribution over all nonzero coefficient tuples.

    path "fast" counts W-roots per tuple; path "slow" evaluates every
    codeword position.  Both are charged p^dimension * (q^2-1) against the
    budget and refused, not truncated, when it does not fit.
    """
    required = vspec.codeword_count * vspec.length
    if required > budget:
        raise BudgetExceeded(required, budget)
    ctx = _context_for(vspec, ctx)
    bound = vspec.moment_size - 1
    weights = theoretical_weights(vspec.family, vspec.p, vspec.q, vspec.e, vspec.t)

    if path == "fast":
        hist = _fast_root_histogram(vspec, ctx, shards)
        counts_by_weight = Counter()
        for roots, f in enumerate(hist):
            if f:
                counts_by_weight[_weight_for_count(vspec, roots)] += f
        freq_by_j = tuple(hist[j] for j in range(bound + 1))
        stray = any(hist[j] for j in range(bound + 1, len(hist)))
    elif path == "slow":
        counts_by_weight = _slow_weight_histogram(vspec, ctx, shards)
        weight_to_j = {w: j for j, w in enumerate(weights)}
        freq_by_j = tuple(counts_by_weight.get(w, 0) for w in weights)
        stray = any(w not in weight_to_j for w in counts_by_weight)
    else:
        raise ValueError(f"path must be 'fast' or 'slow', got {path!r}")

    total = sum(counts_by_weight.values())
    expected = vspec.codeword_count - 1
    if total != expected:
        raise AssertionError(f"swept {total} tuples, expected {expected}")
    entries = tuple(sorted((w, f) for w, f in counts_by_weight.items() if f))
    return WeightDistribution(
        family=vspec.family, length=vspec.length, dimension=vspec.dimension,
        entries=entries, weights_by_j=weights,
        freq_by_j=None if stray else freq_by_j)


# -- tuple counting and power moments --------------------------------------

def n_r_brute(vspec: ValidatedSpec, r: int, ctx: FieldContext | None = None,
              budget: int = DEFAULT_BUDGET, shards: int = 1) -> int:
    """Number of r-tuples of nonzero GF(q^2) elements that satisfy every
    defining power-sum equation, by exhaustive iteration.

    Per-coordinate signature tables (the exponent powers of each element)
    are precomputed; the last coordinate is resolved by an exact count of
    matching signatures.  Charged (q^2-1)^r against the budget.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    n = vspec.length
    required = n**r
    if required > budget:
        raise BudgetExceeded(required, budget)
    ctx = _context_for(vspec, ctx)
    p = vspec.p

    exps = vspec.exponents
    sigs = [tuple(ctx.exp_table[(d * i) % n] for d in exps) for i in range(n)]
    sig_counts = Counter(sigs)

    if p == 2:
        def add_sig(u, v):
            return tuple(a ^ b for a, b in zip(u, v))

        def neg_sig(u):
            return u
    else:
        add_code = [[ctx.add(x, y) for y in range(ctx.order)] for x in range(ctx.order)]
        neg_code = [ctx.neg(x) for x in range(ctx.order)]

        def add_sig(u, v):
            return tuple(add_code[a][b] for a, b in zip(u, v))

        def neg_sig(u):
            return tuple(neg_code[a] for a in u)

    if r == 1:
        return sig_counts.get((0,) * len(exps), 0)

    get = sig_counts.get

    def count_below(partial, depth):
        if depth == 0:
            return get(neg_sig(partial), 0)
        if depth == 1:
            return sum(get(neg_sig(add_sig(partial, s)), 0) for s in sigs)
        return sum(count_below(add_sig(partial, s), depth - 1) for s in sigs)

    total = 0
    for start, stop in _shard_bounds(n, shards):
        for i in range(start, stop):
            total += count_below(sigs[i], r - 2)
    return total


@dataclass(frozen=True)
class PowerMomentReport:
    r: int
    ok: bool
    lhs: int
    rhs: int


def power_moment_check(vspec: ValidatedSpec, r: int, ctx: FieldContext | None = None,
                       budget: int = DEFAULT_BUDGET,
                       dist: WeightDistribution | None = None) -> PowerMomentReport:
    """Compare the r-th power moment of the character sums, aggregated from
    a swept distribution, with its predicted value from N_r.

    f1:  sum over all tuples of (S(a)-1)^r        = q^(2t+1) N_r
    f2:  sum over all tuples of (S(a)-(p-1))^r    = (p-1)^r q^(2t) N_r
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if dist is None:
        dist = brute_distribution(vspec, ctx=ctx, budget=budget, path="fast")
    if dist.freq_by_j is None:
        raise ValueError("distribution carries weights outside the model; "
                         "cannot aggregate power moments")
    q, e, p, t = vspec.q, vspec.e, vspec.p, vspec.t
    nodes = moment_nodes(vspec.moment_size, q, e)
    core = (q * q - 1) ** r
    for node, f in zip(nodes, dist.freq_by_j):
        core += f * node**r
    if vspec.family == "f1":
        lhs = core
        rhs = q ** (2 * t + 1) * n_r(r, q, e)
    else:
        lhs = (p - 1) ** r * core
        rhs = (p - 1) ** r * q ** (2 * t) * n_r(r, q, e)
    return PowerMomentReport(r=r, ok=lhs == rhs, lhs=lhs, rhs=rhs)

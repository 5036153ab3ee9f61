"""Whole-field polynomial sweeps and the tables behind them.

Everything here is a vectorized view of the scalar arithmetic in field.py:
exp/log tables for extension fields (built once per context by repeated
block doubling, exp[s:2s] = exp[:s] * exp[s]), Horner evaluation over the
entire domain, and fiber tallies.  Results are exact integers, so thread
count and chunking never change any output.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from .field import FieldCtx, factorize


def resolve_threads(threads: Optional[int]) -> int:
    if threads is None:
        try:
            threads = int(os.environ.get("LRCFORGE_THREADS", "1"))
        except ValueError:
            threads = 1
    return max(1, int(threads))


# ---------------- table construction ----------------


def build_tables(ctx: FieldCtx) -> None:
    """Fill exp/log/padded-exp tables on an extension context (idempotent)."""
    if ctx.m == 1 or ctx._log is not None:
        return
    q, p, m = ctx.q, ctx.p, ctx.m
    q1 = q - 1
    primes = list(factorize(q1))
    gen = None
    for cand in range(2, q):
        if all(ctx._pow(cand, q1 // r) != 1 for r in primes):
            gen = cand
            break
    assert gen is not None, "no multiplicative generator found"

    exp = np.zeros(q1, dtype=np.int64)
    exp[0] = 1
    size = 1
    if p == 2:
        while size < q1:
            c = ctx._mul(int(exp[size - 1]), gen)  # gen^size
            take = min(size, q1 - size)
            rows = [ctx._mul(c, 1 << j) for j in range(m)]
            block = exp[:take]
            out = np.zeros(take, dtype=np.int64)
            for j, rv in enumerate(rows):
                if rv:
                    out ^= ((block >> j) & 1) * rv
            exp[size : size + take] = out
            size += take
    else:
        pows = p ** np.arange(m, dtype=np.int64)
        while size < q1:
            c = ctx._mul(int(exp[size - 1]), gen)
            take = min(size, q1 - size)
            rows = [ctx._digits_of(ctx._mul(c, p ** j)) for j in range(m)]
            block = exp[:take]
            acc = np.zeros((take, m), dtype=np.int64)
            for j in range(m):
                dj = (block // p ** j) % p
                row = rows[j]
                for i in range(m):
                    if row[i]:
                        acc[:, i] += dj * row[i]
            exp[size : size + take] = (acc % p) @ pows
            size += take

    log = np.full(q, 2 * q1, dtype=np.int64)  # log[0] stays at the sentinel
    log[exp] = np.arange(q1, dtype=np.int64)
    # padded antilog: valid for any index log[a]+log[b]; sentinel sums land on 0
    ex2 = np.zeros(4 * q1 + 1, dtype=np.int64)
    ex2[:q1] = exp
    ex2[q1 : 2 * q1] = exp
    ctx._gen = gen
    ctx._exp = exp
    ctx._log = log
    ctx._exp2 = ex2


def add_const_vector(ctx: FieldCtx, arr: np.ndarray, c: int) -> np.ndarray:
    """Elementwise field addition of the constant c, digit by digit."""
    if ctx.m == 1:
        return (arr + c) % ctx.p
    if ctx.p == 2:
        return arr ^ c
    p = ctx.p
    out = np.zeros_like(arr)
    mul = 1
    for _ in range(ctx.m):
        d = (arr // mul) % p + (c % p)
        c //= p
        d -= p * (d >= p)
        out += d * mul
        mul *= p
    return out


def add_table(ctx: FieldCtx) -> np.ndarray:
    """Full q-by-q addition table (packed); only sensible for small odd q."""
    key = "add_matrix"
    cached = ctx._add_tables.get(key)
    if cached is not None:
        return cached
    q, p, m = ctx.q, ctx.p, ctx.m
    arr = np.arange(q, dtype=np.int64)
    tab = np.zeros((q, q), dtype=np.int64)
    mul = 1
    for _ in range(m):
        d = (arr // mul) % p
        s = d[:, None] + d[None, :]
        s -= p * (s >= p)
        tab += s * mul
        mul *= p
    ctx._add_tables[key] = tab
    return tab


# ---------------- full-domain evaluation ----------------


def evaluate_all(f, threads: Optional[int] = None) -> np.ndarray:
    """f(x) for every x of the field, as packed values indexed by packed x."""
    ctx = f.ctx
    q = ctx.q
    nthreads = resolve_threads(threads)
    if ctx.m > 1:
        ctx.ensure_tables()
    if nthreads == 1 or q < (1 << 16):
        return _eval_range(ctx, f.coeffs, 0, q)
    bounds = np.linspace(0, q, nthreads + 1).astype(np.int64)
    spans = [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:])]
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        parts = list(pool.map(lambda ab: _eval_range(ctx, f.coeffs, ab[0], ab[1]), spans))
    return np.concatenate(parts)


def _eval_range(ctx, coeffs, lo, hi):
    count = hi - lo
    if not coeffs:
        return np.zeros(count, dtype=np.int64)
    if ctx.m == 1:
        p = ctx.p
        xs = np.arange(lo, hi, dtype=np.int64)
        acc = np.full(count, coeffs[-1], dtype=np.int64)
        for c in coeffs[-2::-1]:
            acc *= xs
            if c:
                acc += c
            acc %= p
        return acc
    lg = ctx._log
    ex2 = ctx._exp2
    lgx = lg[lo:hi]
    acc = np.full(count, coeffs[-1], dtype=np.int64)
    for c in coeffs[-2::-1]:
        acc = ex2[lg[acc] + lgx]
        if c:
            acc = add_const_vector(ctx, acc, c)
    return acc


def fiber_tally(f, threads: Optional[int] = None) -> np.ndarray:
    """Histogram of f over the field: tally[t] = #{x : f(x) = t}."""
    vals = evaluate_all(f, threads)
    return np.bincount(vals, minlength=f.ctx.q)

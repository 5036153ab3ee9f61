"""Locally recoverable codes driven by good polynomials.

A degree-(r+1) polynomial f that is constant on ell disjoint fibers of
size r+1 yields an (n, k) = ((r+1)*ell, r*t) code: the encoding polynomial

    f_a(X) = sum_{i<r} sum_{j<t} a[i*t + j] * f(X)^j * X^i

has degree at most i + j*(r+1) <= (t-1)*(r+1) + r - 1 < n - (r+1) + r,
restricts to a degree <= r-1 polynomial on every fiber (f is constant
there), and is evaluated at the union of the fibers.  Any single erased
coordinate is recovered by interpolating the r intact points of its group;
the minimum distance meets n - k - ceil(k/r) + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import bulk
from .errors import (
    BadMessageParam,
    EmptyCensus,
    NotLocallyRepairable,
    SearchSpaceTooLarge,
    WrongDegree,
    WrongMessageLength,
)
from .field import FieldCtx, FieldElement
from .poly import Poly

DISTANCE_CAP = 10_000_000
_SUFFIX_CAP = 65_536


@dataclass(frozen=True)
class LrcCode:
    """One built code: the polynomial, its groups, and the parameter t."""

    f: Poly
    t: int
    group_values: Tuple[int, ...]  # f-value per group, packed, ascending
    groups: Tuple[Tuple[int, ...], ...]  # evaluation points, packed, ascending

    @property
    def ctx(self) -> FieldCtx:
        return self.f.ctx

    @property
    def r(self) -> int:
        return self.f.degree - 1

    @property
    def ell(self) -> int:
        return len(self.groups)

    @property
    def n(self) -> int:
        return (self.r + 1) * self.ell

    @property
    def k(self) -> int:
        return self.r * self.t

    @property
    def d_designed(self) -> int:
        k, r = self.k, self.r
        return self.n - k - (k + r - 1) // r + 2

    def points(self) -> Tuple[int, ...]:
        return tuple(x for g in self.groups for x in g)


def build_code(f: Poly, t: int, max_groups: Optional[int] = None) -> LrcCode:
    """Assemble the code on the totally split fibers of f (ascending t0).

    Requires deg f >= 2 (locality r = deg f - 1 >= 1) and 1 <= t <= ell.
    """
    if f.degree < 2:
        raise WrongDegree("need deg f >= 2 so that locality r >= 1")
    if t < 1:
        raise BadMessageParam(f"t must be >= 1, got {t}")
    if max_groups is not None and max_groups < 1:
        raise BadMessageParam(f"max_groups must be >= 1, got {max_groups}")
    vals = bulk.evaluate_all(f)
    tally = np.bincount(vals, minlength=f.ctx.q)
    split = np.nonzero(tally == f.degree)[0]
    if max_groups is not None:
        split = split[:max_groups]
    if split.size == 0:
        raise EmptyCensus("no totally split fibers to build groups from")
    if t > split.size:
        raise BadMessageParam(f"t={t} exceeds the {split.size} available groups")
    order = np.argsort(vals, kind="stable")
    ordered_vals = vals[order]
    groups = []
    for tv in split:
        lo = int(np.searchsorted(ordered_vals, tv, side="left"))
        hi = int(np.searchsorted(ordered_vals, tv, side="right"))
        pts = np.sort(order[lo:hi])
        groups.append(tuple(int(x) for x in pts))
    return LrcCode(
        f=f,
        t=int(t),
        group_values=tuple(int(v) for v in split),
        groups=tuple(groups),
    )


def encode(code: LrcCode, message: Sequence[Union[int, FieldElement]]) -> List[FieldElement]:
    """Evaluate the encoding polynomial of `message` at every code point."""
    ctx = code.ctx
    r, t = code.r, code.t
    if len(message) != code.k:
        raise WrongMessageLength(f"expected k={code.k} symbols, got {len(message)}")
    msg = [ctx.element(a).val for a in message]
    mul, add = ctx._mul, ctx._add
    out: List[FieldElement] = []
    for yval, group in zip(code.group_values, code.groups):
        ypow = [1]
        for _ in range(t - 1):
            ypow.append(mul(ypow[-1], yval))
        cs = []
        for i in range(r):
            acc = 0
            for j in range(t):
                a = msg[i * t + j]
                if a:
                    acc = add(acc, mul(a, ypow[j]))
            cs.append(acc)
        for x in group:
            acc = 0
            for c in reversed(cs):
                acc = add(mul(acc, x), c)
            out.append(FieldElement(ctx, acc))
    return out


def repair(
    code: LrcCode,
    word: Sequence[Union[int, FieldElement, None]],
    erased_index: int,
) -> FieldElement:
    """Recover one erased coordinate from the r intact points of its group.

    `word` entries are symbols or None for erasures; only the group of
    erased_index is read.  A second erasure in that group is not locally
    repairable.
    """
    ctx = code.ctx
    r = code.r
    if len(word) != code.n:
        raise WrongMessageLength(f"expected n={code.n} symbols, got {len(word)}")
    if not 0 <= erased_index < code.n:
        raise BadMessageParam(f"erased index {erased_index} outside 0..{code.n - 1}")
    gi, off = divmod(erased_index, r + 1)
    group = code.groups[gi]
    xe = group[off]
    pts: List[Tuple[int, int]] = []
    for u in range(r + 1):
        if u == off:
            continue
        w = word[gi * (r + 1) + u]
        if w is None:
            raise NotLocallyRepairable(f"second erasure in group {gi}")
        pts.append((group[u], ctx.element(w).val))
    mul, add, sub, inv = ctx._mul, ctx._add, ctx._sub, ctx._inv
    acc = 0
    for u, (xu, wu) in enumerate(pts):
        if not wu:
            continue
        term = wu
        for v, (xv, _) in enumerate(pts):
            if v == u:
                continue
            term = mul(term, mul(sub(xe, xv), inv(sub(xu, xv))))
        acc = add(acc, term)
    return FieldElement(ctx, acc)


def generator_matrix(code: LrcCode) -> List[List[int]]:
    """k x n matrix of packed values; row i encodes the i-th unit message."""
    rows = []
    for i in range(code.k):
        msg = [0] * code.k
        msg[i] = 1
        rows.append([e.val for e in encode(code, msg)])
    return rows


def min_distance_bruteforce(code: LrcCode, cap: int = DISTANCE_CAP) -> int:
    """Exact minimum weight over all q^k nonzero messages.

    Messages are split into a prefix (looped in Python) and a suffix whose
    q^s <= 65536 codewords are tabulated once; each prefix then costs one
    vectorized combine + weight count.  Raises SearchSpaceTooLarge when
    q^k exceeds the cap.
    """
    ctx = code.ctx
    q, k, n = ctx.q, code.k, code.n
    total = q ** k
    if total > cap:
        raise SearchSpaceTooLarge(f"q^k = {total} exceeds cap {cap}")
    rows = generator_matrix(code)

    p, m = ctx.p, ctx.m
    if m == 1:
        combine = lambda a, b: (a + b) % p
    elif p == 2:
        combine = lambda a, b: a ^ b
    else:
        tab = bulk.add_table(ctx)
        combine = lambda a, b: tab[a, b]

    def scaled(row: List[int], d: int) -> np.ndarray:
        mul = ctx._mul
        return np.array([mul(d, v) for v in row], dtype=np.int64)

    s = 1
    while s < k and q ** (s + 1) <= _SUFFIX_CAP:
        s += 1
    table = np.zeros((1, n), dtype=np.int64)
    for i in range(s):
        row = rows[k - 1 - i]
        blocks = [combine(table, scaled(row, d)[None, :]) for d in range(q)]
        table = np.concatenate(blocks, axis=0)

    best = n + 1
    prefix_rows = rows[: k - s]
    for pi in range(q ** (k - s)):
        base = np.zeros(n, dtype=np.int64)
        v = pi
        for row in prefix_rows:
            v, d = divmod(v, q)
            if d:
                base = combine(base, scaled(row, d))
        block = combine(table, base[None, :])
        w = np.count_nonzero(block, axis=1)
        if pi == 0:
            w[0] = n + 1  # the all-zero message is not a codeword candidate
        wmin = int(w.min())
        if wmin < best:
            best = wmin
    return best


def designed_distance(code: LrcCode) -> int:
    return code.d_designed

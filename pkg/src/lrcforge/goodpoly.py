"""Good polynomials: group classification, witnesses, split-place counts.

A monic separable f of degree n is "good" at t0 when f - t0 splits into n
distinct linear factors over F_q; each such fiber is a repair group for the
code construction in lrc.py.  The generic Galois group of f - t controls
how many good t0 exist, and for n = 2..5 the smallest achievable group has
a closed-form case table plus an explicit witness polynomial per case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from . import bulk
from .errors import ConstantInput, UnsupportedDegree, WildRamificationUnsupported
from .field import FieldCtx, make_field, prime_power_split
from .poly import Poly, is_irreducible_raw

GROUP_ORDERS = {
    "C2": 2,
    "C3": 3,
    "S3": 6,
    "C4": 4,
    "C2xC2": 4,
    "D4": 8,
    "A4": 12,
    "S4": 24,
    "C5": 5,
    "D5": 10,
    "AGL1F5": 20,
    "A5": 60,
    "S5": 120,
}


@dataclass(frozen=True)
class GroupInfo:
    name: str
    order: int


def classify_generic_group(q: int, n: int) -> GroupInfo:
    """Smallest achievable monodromy group for separable degree-n f over F_q.

    Case table in n and q mod small primes; q is validated as a prime power.
    """
    p, _m = prime_power_split(q)
    if n < 2 or n > 5:
        raise UnsupportedDegree(f"degree {n} outside 2..5")
    if n == 2:
        return GroupInfo("C2", 2)
    if n == 3:
        # cyclic when 3 | q(q-1) (Kummer X^3 or Artin-Schreier X^3 - X)
        if q % 3 in (0, 1):
            return GroupInfo("C3", 3)
        return GroupInfo("S3", 6)
    if n == 4:
        if q == 2:
            return GroupInfo("S4", 24)
        if p == 2:
            return GroupInfo("C2xC2", 4)  # additive 2-dimensional subgroup
        if q % 4 == 1:
            return GroupInfo("C4", 4)
        return GroupInfo("D4", 8)
    if q % 5 in (0, 1):
        return GroupInfo("C5", 5)
    if q % 5 == 4:
        return GroupInfo("D5", 10)
    return GroupInfo("S5", 120)


def _smallest_irreducible(ctx: FieldCtx, d: int) -> Poly:
    """Smallest monic degree-d irreducible over the prime subfield, c0 != 0.

    "Smallest" reads the coefficient vector (c0, ..., c_{d-1}) as a base-p
    integer; the result is embedded into ctx coefficientwise.
    """
    p = ctx.p
    prime = make_field(p)
    for tail in range(1, p ** d):
        if tail % p == 0:
            continue
        coeffs = []
        v = tail
        for _ in range(d):
            v, digit = divmod(v, p)
            coeffs.append(digit)
        cand = coeffs + [1]
        if is_irreducible_raw(prime, list(cand)):
            return Poly(ctx, [ctx.scalar(c) for c in cand])
    raise AssertionError("no irreducible polynomial found (unreachable)")


def construct_witness(ctx: FieldCtx, n: int) -> Poly:
    """A separable degree-n polynomial realizing classify_generic_group.

    Kummer X^n when n | q-1, Artin-Schreier X^n - X when p = n, the
    degree-4 additive-subgroup product and biquadratic X^4 + X^2 for the
    two quartic middle cases, the degree-5 Dickson polynomial when
    5 | q+1, and X^2 * g (g the smallest irreducible of degree n-2 with
    nonzero constant term) in the symmetric-group cases.
    """
    if n < 2 or n > 5:
        raise UnsupportedDegree(f"degree {n} outside 2..5")
    q, p = ctx.q, ctx.p
    x = Poly.x(ctx)
    if q % n == 1:
        return x ** n
    if p == n:
        return x ** n - x
    if n == 4 and p == 2 and ctx.m > 1:
        # product over the first 2-dimensional additive subgroup {0,1,2,3}
        f = x
        for c in (1, 2, 3):
            f = f * (x + Poly.constant(ctx, c))
        return f
    if n == 4 and q % 4 == 3:
        return x ** 4 + x ** 2
    if n == 5 and q % 5 == 4:
        five = ctx.scalar(5).val
        return Poly._raw(ctx, [0, five, 0, ctx._neg(five), 0, 1])
    g = _smallest_irreducible(ctx, n - 2)
    return x * x * g


def count_split_places(f: Poly, threads: Optional[int] = None) -> int:
    """#{t0 : f - t0 splits into deg f distinct linear factors}.

    One full-domain sweep: the fiber over t0 has size deg f exactly when
    f - t0 has deg f distinct roots, which for a degree-matched polynomial
    forces a complete split.  See tests for the per-t0 gcd cross-check.
    """
    if f.degree < 1:
        raise ConstantInput("split counting needs deg f >= 1")
    tally = bulk.fiber_tally(f, threads)
    return int(np.count_nonzero(tally == f.degree))


def is_good_at(f: Poly, t0) -> bool:
    """True when the fiber of f over t0 is a full set of deg f points."""
    from .poly import splits_completely

    return splits_completely(f.minus_const(t0))


def genus_upper(n: int, group_order: int, q: int) -> int:
    """Upper bound for the genus of the splitting cover, tame cases only.

    Riemann-Hurwitz gives ((n-2)|G| + 2) / 2 when every ramification point
    is tame; the degree-5 cyclic and dihedral covers are rational (genus 0)
    and the tame S5 quintic cover refines to 36.  Wild characteristics
    (p dividing |G|) are rejected: the bound is not valid there.
    """
    p, _ = prime_power_split(q)
    if group_order % p == 0:
        raise WildRamificationUnsupported(
            f"characteristic {p} divides group order {group_order}"
        )
    if n == 5 and group_order in (5, 10):
        return 0
    if n == 5 and group_order == 120:
        return 36
    return ((n - 2) * group_order + 2) // 2


def split_bounds(q: int, group_order: int, genus: int, n: int) -> Tuple[int, int]:
    """Weil-style window for count_split_places: (q+1 +- 2g*sqrt(q))/|G| -+ n/2.

    sqrt(q) is rounded up, so the window only widens; returns (lower, upper)
    with lower clamped at 0.
    """
    s = math.isqrt(q)
    if s * s < q:
        s += 1
    lower = Fraction(q + 1 - 2 * genus * s, group_order) - Fraction(n, 2)
    upper = Fraction(q + 1 + 2 * genus * s, group_order)
    return max(0, math.ceil(lower)), math.floor(upper)


def witness_bounds(ctx: FieldCtx, n: int) -> Optional[Tuple[int, int]]:
    """split_bounds for the classified group at (q, n), or None when wild."""
    info = classify_generic_group(ctx.q, n)
    try:
        g = genus_upper(n, info.order, ctx.q)
    except WildRamificationUnsupported:
        return None
    return split_bounds(ctx.q, info.order, g, n)

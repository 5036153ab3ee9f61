"""Cycle-type census across the pencil f - t and group identification.

For squarefree f - t0 the factor-degree partition equals the cycle type of
the Frobenius conjugacy class in the monodromy group, so the empirical
partition distribution converges to the group's cycle-type distribution.
Reference distributions for the transitive groups of degree 2..5 are
generated once from explicit permutation generators and kept as exact
fractions; identification picks the candidate at minimum total-variation
distance.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    EmptyCensus,
    InseparableInput,
    NotSquarefree,
    UnknownGroup,
    UnsupportedDegree,
)
from .poly import (
    Poly,
    discriminant_pencil,
    factor_shape,
    is_square_polynomial,
    raw_distinct_roots,
    raw_resultant_pencil,
)

# ---------------- reference cycle-type distributions ----------------

_GENERATORS: Dict[str, Tuple[Tuple[int, ...], ...]] = {
    "C2": ((1, 0),),
    "C3": ((1, 2, 0),),
    "S3": ((1, 2, 0), (1, 0, 2)),
    "C4": ((1, 2, 3, 0),),
    "C2xC2": ((1, 0, 3, 2), (2, 3, 0, 1)),
    "D4": ((1, 2, 3, 0), (0, 3, 2, 1)),
    "A4": ((1, 2, 0, 3), (0, 2, 3, 1)),
    "S4": ((1, 2, 3, 0), (1, 0, 2, 3)),
    "C5": ((1, 2, 3, 4, 0),),
    "D5": ((1, 2, 3, 4, 0), (0, 4, 3, 2, 1)),
    "AGL1F5": ((1, 2, 3, 4, 0), (0, 2, 4, 1, 3)),
    "A5": ((1, 2, 3, 4, 0), (1, 2, 0, 3, 4)),
    "S5": ((1, 2, 3, 4, 0), (1, 0, 2, 3, 4)),
}

CANDIDATES_BY_DEGREE: Dict[int, Tuple[str, ...]] = {
    2: ("C2",),
    3: ("C3", "S3"),
    4: ("C4", "C2xC2", "D4", "A4", "S4"),
    5: ("C5", "D5", "AGL1F5", "A5", "S5"),
}

_group_cache: Dict[str, Tuple[Tuple[int, ...], ...]] = {}
_dist_cache: Dict[str, Dict[Tuple[int, ...], Fraction]] = {}


def _closure(gens: Sequence[Tuple[int, ...]]) -> Tuple[Tuple[int, ...], ...]:
    deg = len(gens[0])
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = tuple(g[h[i]] for i in range(deg))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(seen))


def _cycle_type(perm: Tuple[int, ...]) -> Tuple[int, ...]:
    seen = [False] * len(perm)
    lens = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def group_elements(name: str) -> Tuple[Tuple[int, ...], ...]:
    if name not in _GENERATORS:
        raise UnknownGroup(f"no reference group named {name!r}")
    if name not in _group_cache:
        _group_cache[name] = _closure(_GENERATORS[name])
    return _group_cache[name]


def group_order(name: str) -> int:
    return len(group_elements(name))


def reference_distribution(name: str) -> Dict[Tuple[int, ...], Fraction]:
    """Cycle-type distribution of a uniform element, as exact fractions."""
    if name not in _dist_cache:
        elems = group_elements(name)
        tally = Counter(_cycle_type(g) for g in elems)
        _dist_cache[name] = {
            ct: Fraction(c, len(elems)) for ct, c in sorted(tally.items())
        }
    return _dist_cache[name]


# ---------------- empirical census ----------------


@dataclass(frozen=True)
class CensusResult:
    """Partition tallies for f - t0 over the sampled (or full) domain."""

    f: Poly
    counts: Tuple[Tuple[Tuple[int, ...], int], ...]  # (partition, count), sorted
    skipped: Tuple[int, ...]  # critical values t0 (packed), excluded
    total: int  # number of tallied specializations
    sample: Optional[int]  # None for the full sweep

    def frequencies(self) -> Dict[Tuple[int, ...], Fraction]:
        return {part: Fraction(c, self.total) for part, c in self.counts}


def census(
    f: Poly,
    sample: Optional[int] = None,
    seed: int = 0,
) -> CensusResult:
    """Tally factor-degree partitions of f - t0 across t0 in F_q.

    Critical values (t0 where f - t0 has a repeated root, located as the
    F_q-roots of Res_X(f - t, f')) are skipped and reported.  sample=None
    sweeps every t0 in order; sample=N draws N values uniformly with
    replacement from a generator seeded by `seed`.
    """
    if f.degree < 1:
        raise InseparableInput("census needs a nonconstant polynomial")
    ctx = f.ctx
    if f.derivative().is_zero():
        raise InseparableInput("derivative vanishes identically")
    pencil = raw_resultant_pencil(ctx, list(f.coeffs))
    skip = set(raw_distinct_roots(ctx, pencil)) if len(pencil) > 1 else set()
    if sample is None:
        ts: Iterable[int] = range(ctx.q)
    else:
        if sample < 1:
            raise EmptyCensus("sample size must be positive")
        rng = random.Random(seed)
        ts = [rng.randrange(ctx.q) for _ in range(sample)]
    tally: Counter = Counter()
    total = 0
    for t0 in ts:
        if t0 in skip:
            continue
        shape = factor_shape(f.minus_const(t0))
        if not shape.is_squarefree():
            raise NotSquarefree(f"unexpected repeated factor at t0={t0}")
        tally[shape.partition()] += 1
        total += 1
    if total == 0:
        raise EmptyCensus("no specializations left after skipping critical values")
    counts = tuple(sorted(tally.items()))
    return CensusResult(f=f, counts=counts, skipped=tuple(sorted(skip)), total=total, sample=sample)


# ---------------- identification ----------------


@dataclass(frozen=True)
class Identification:
    name: str
    order: int
    distance: Fraction  # total variation to the best reference
    margin: Fraction  # runner-up distance minus best distance
    ranking: Tuple[Tuple[str, Fraction], ...]


def total_variation(
    emp: Mapping[Tuple[int, ...], Fraction],
    ref: Mapping[Tuple[int, ...], Fraction],
) -> Fraction:
    keys = set(emp) | set(ref)
    z = Fraction(0)
    acc = Fraction(0)
    for k in keys:
        acc += abs(emp.get(k, z) - ref.get(k, z))
    return acc / 2


def identify_group(
    source,
    candidates: Optional[Sequence[str]] = None,
) -> Identification:
    """Best-matching reference group for a census (minimum TV distance).

    `source` is a CensusResult or a mapping partition -> count.  Candidates
    default to the transitive groups of the observed degree.  Ties keep the
    earlier candidate; margin is 0 when only one candidate exists.
    """
    if isinstance(source, CensusResult):
        counts = dict(source.counts)
    else:
        counts = dict(source)
    total = sum(counts.values())
    if total == 0:
        raise EmptyCensus("cannot identify a group from an empty census")
    degree = sum(next(iter(counts)))
    if candidates is None:
        if degree not in CANDIDATES_BY_DEGREE:
            raise UnsupportedDegree(f"no reference groups for degree {degree}")
        candidates = CANDIDATES_BY_DEGREE[degree]
    if not candidates:
        raise UnknownGroup("empty candidate list")
    emp = {part: Fraction(c, total) for part, c in counts.items()}
    scored: List[Tuple[Fraction, int, str]] = []
    for pos, name in enumerate(candidates):
        scored.append((total_variation(emp, reference_distribution(name)), pos, name))
    scored.sort()
    best_tv, _, best_name = scored[0]
    margin = (scored[1][0] - best_tv) if len(scored) > 1 else Fraction(0)
    ranking = tuple((name, tv) for tv, _, name in scored)
    return Identification(
        name=best_name,
        order=group_order(best_name),
        distance=best_tv,
        margin=margin,
        ranking=ranking,
    )


def even_subgroup_test(f: Poly) -> bool:
    """True iff the splitting group sits inside A5: square discriminant pencil.

    Takes a monic quintic over odd characteristic; disc_X(f - t) is a square
    in F_q[t] (up to a square constant) exactly when every Frobenius acts by
    an even permutation of the roots.
    """
    return is_square_polynomial(discriminant_pencil(f))

"""Group classification, witness construction, and split-place counting."""

import pytest

import lrcforge as L
from lrcforge import (
    GROUP_ORDERS,
    Poly,
    classify_generic_group,
    construct_witness,
    count_split_places,
    genus_upper,
    is_good_at,
    parse_poly,
    split_bounds,
    witness_bounds,
)
from lrcforge.errors import (
    ConstantInput,
    UnsupportedDegree,
    WildRamificationUnsupported,
)
from lrcforge.goodpoly import _smallest_irreducible
from lrcforge.poly import is_separable


# (q, n) -> expected group name, covering every branch of the case table
CLASSIFICATION_TABLE = {
    (2, 2): "C2",
    (9, 2): "C2",
    (19997, 2): "C2",
    (3, 3): "C3",
    (7, 3): "C3",
    (9, 3): "C3",
    (13, 3): "C3",
    (2, 3): "S3",
    (5, 3): "S3",
    (8, 3): "S3",
    (11, 3): "S3",
    (2, 4): "S4",
    (4, 4): "C2xC2",
    (8, 4): "C2xC2",
    (16, 4): "C2xC2",
    (5, 4): "C4",
    (9, 4): "C4",
    (13, 4): "C4",
    (3, 4): "D4",
    (7, 4): "D4",
    (11, 4): "D4",
    (5, 5): "C5",
    (11, 5): "C5",
    (25, 5): "C5",
    (31, 5): "C5",
    (81, 5): "C5",
    (9, 5): "D5",
    (19, 5): "D5",
    (29, 5): "D5",
    (49, 5): "D5",
    (2, 5): "S5",
    (3, 5): "S5",
    (7, 5): "S5",
    (8, 5): "S5",
    (13, 5): "S5",
}


def test_classification_table():
    for (q, n), name in CLASSIFICATION_TABLE.items():
        info = classify_generic_group(q, n)
        assert info.name == name, (q, n)
        assert info.order == GROUP_ORDERS[name]


def test_classification_rejects_bad_degree():
    with pytest.raises(UnsupportedDegree):
        classify_generic_group(7, 1)
    with pytest.raises(UnsupportedDegree):
        classify_generic_group(7, 6)


def test_smallest_irreducible_frozen():
    assert _smallest_irreducible(L.make_field(2), 3).elements() == tuple(
        parse_poly(L.make_field(2), "x^3+x+1").elements()
    )
    g = _smallest_irreducible(L.make_field(3), 3)
    assert [c.val for c in g.elements()] == [1, 2, 0, 1]  # x^3 + 2x + 1
    g7 = _smallest_irreducible(L.make_field(7), 3)
    assert [c.val for c in g7.elements()] == [2, 0, 0, 1]  # x^3 + 2


def test_witness_frozen_forms():
    # Kummer
    ctx = L.make_field(11)
    assert construct_witness(ctx, 5) == Poly.x(ctx) ** 5
    # Artin-Schreier
    ctx = L.make_field(5, 2)
    x = Poly.x(ctx)
    assert construct_witness(ctx, 5) == x ** 5 - x
    # Dickson: X^5 - 5X^3 + 5X
    ctx = L.make_field(19)
    w = construct_witness(ctx, 5)
    assert [c.val for c in w.elements()] == [0, 5, 0, 14, 0, 1]
    # biquadratic for q = 3 mod 4
    ctx = L.make_field(7)
    assert construct_witness(ctx, 4) == parse_poly(ctx, "x^4+x^2")
    # symmetric case: X^2 * (smallest irreducible cubic)
    ctx = L.make_field(2, 3)
    assert construct_witness(ctx, 5) == parse_poly(ctx, "x^5+x^3+x^2")
    ctx = L.make_field(3, 3)
    assert construct_witness(ctx, 5) == parse_poly(ctx, "x^5+2*x^3+x^2")


def test_witness_basic_properties():
    qs = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49]
    for q in qs:
        p, m = L.prime_power_split(q)
        ctx = L.make_field(p, m)
        for n in range(2, 6):
            w = construct_witness(ctx, n)
            assert w.degree == n
            assert w.is_monic()
            assert is_separable(w), (q, n)


def test_count_split_places_matches_per_point_route():
    # dual route: full sweep vs splits_completely on every shifted poly
    for p, m in [(7, 1), (3, 2), (13, 1), (2, 4), (5, 2)]:
        ctx = L.make_field(p, m)
        for n in range(2, 6):
            f = construct_witness(ctx, n)
            slow = sum(1 for t0 in ctx.elements() if is_good_at(f, t0))
            assert count_split_places(f) == slow, (p, m, n)


def test_count_split_places_rejects_constant():
    ctx = L.make_field(7)
    with pytest.raises(ConstantInput):
        count_split_places(Poly.constant(ctx, 3))


def test_kummer_and_artin_schreier_exact_counts():
    # X^n with n | q-1 splits exactly on the index-n multiplicative subgroup
    for q, n in [(13, 2), (13, 3), (11, 5), (31, 5), (16, 5), (41, 5)]:
        p, m = L.prime_power_split(q)
        ctx = L.make_field(p, m)
        assert count_split_places(Poly.x(ctx) ** n) == (q - 1) // n
    # X^p - X splits exactly on the image of the additive map, size q/p
    ctx = L.make_field(5, 2)
    x = Poly.x(ctx)
    assert count_split_places(x ** 5 - x) == 5
    ctx = L.make_field(3, 3)
    x = Poly.x(ctx)
    assert count_split_places(x ** 3 - x) == 9


def test_threads_agree():
    ctx = L.make_field(2, 15)
    f = construct_witness(ctx, 5)
    assert count_split_places(f, threads=1) == count_split_places(f, threads=4) == 278


def test_genus_upper_values():
    assert genus_upper(5, 5, 11) == 0
    assert genus_upper(5, 10, 19) == 0
    assert genus_upper(5, 120, 13) == 36
    assert genus_upper(3, 6, 5) == 4
    assert genus_upper(4, 8, 3) == 9
    assert genus_upper(4, 4, 5) == 5
    assert genus_upper(2, 2, 5) == 1


def test_genus_upper_rejects_wild():
    with pytest.raises(WildRamificationUnsupported):
        genus_upper(5, 120, 25)  # 5 | 120
    with pytest.raises(WildRamificationUnsupported):
        genus_upper(3, 6, 9)
    with pytest.raises(WildRamificationUnsupported):
        genus_upper(2, 2, 4)


def test_split_bounds_frozen():
    assert split_bounds(8192, 120, 36, 5) == (12, 122)
    # genus 0: window collapses to (q+1)/|G| minus the n/2 slack
    assert split_bounds(11, 5, 0, 5) == (0, 2)
    assert split_bounds(2003, 5, 0, 5) == (399, 400)


def test_witness_bounds_none_when_wild():
    assert witness_bounds(L.make_field(2), 2) is None  # p = 2 | |C2|
    assert witness_bounds(L.make_field(5, 2), 5) is None  # p = 5 | |C5|
    assert witness_bounds(L.make_field(3, 2), 3) is None


def test_witness_counts_inside_bounds():
    for q in [11, 13, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]:
        ctx = L.make_field(q)
        for n in range(2, 6):
            bounds = witness_bounds(ctx, n)
            if bounds is None:
                continue
            lo, hi = bounds
            c = count_split_places(construct_witness(ctx, n))
            assert lo <= c <= hi, (q, n, c, bounds)

"""Dense univariate polynomial arithmetic over a FieldCtx.

Coefficients are stored low degree first as packed integer values (see
field.py); the zero polynomial is the empty list.  The raw_* kernels work
on plain lists for speed and are shared by the higher level Poly wrapper,
the irreducibility tests used during field construction, and the pencil
resultants (a polynomial in t over F_q is just another raw list).

Prime fields get inlined integer arithmetic in the hot kernels; extension
fields go through the context's scalar ops (table backed once built).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import (
    ConstantInput,
    ConstantModulus,
    DivisionByZeroPoly,
    EvenCharacteristic,
    InseparableInput,
    MixedFields,
    WrongDegree,
    ZeroInput,
)
from .field import FieldCtx, FieldElement

_SWEEP_LIMIT = 10_000  # largest q for which root finding sweeps all elements


# ---------------- raw kernels (lists of packed ints, low first) ----------------


def raw_trim(c: List[int]) -> List[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def raw_deg(c) -> int:
    return len(c) - 1


def raw_add(ctx, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = ctx._add
    for i, v in enumerate(b):
        out[i] = add(out[i], v)
    return raw_trim(out)


def raw_neg(ctx, a):
    neg = ctx._neg
    return [neg(v) for v in a]


def raw_sub(ctx, a, b):
    return raw_add(ctx, a, raw_neg(ctx, b))


def raw_scale(ctx, a, c):
    if c == 0:
        return []
    mul = ctx._mul
    return raw_trim([mul(v, c) for v in a])


def raw_mul(ctx, a, b):
    if not a or not b:
        return []
    if ctx.m == 1:
        p = ctx.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return raw_trim([v % p for v in out])
    mul, add = ctx._mul, ctx._add
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return raw_trim(out)


def raw_divmod(ctx, num, den):
    if not den:
        raise DivisionByZeroPoly("polynomial division by zero")
    if not num:
        return [], []
    dn, dd = len(num) - 1, len(den) - 1
    if dn < dd:
        return [], list(num)
    if ctx.m == 1:
        p = ctx.p
        inv_lc = pow(den[-1], p - 2, p)
        rem = list(num)
        quo = [0] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] * inv_lc % p
            if c:
                quo[k] = c
                for j in range(dd):
                    rem[k + j] = (rem[k + j] - c * den[j]) % p
            rem[k + dd] = 0
        return raw_trim(quo), raw_trim(rem)
    inv_lc = ctx._inv(den[-1])
    mul, sub = ctx._mul, ctx._sub
    rem = list(num)
    quo = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = mul(rem[k + dd], inv_lc)
        if c:
            quo[k] = c
            for j in range(dd):
                rem[k + j] = sub(rem[k + j], mul(c, den[j]))
        rem[k + dd] = 0
    return raw_trim(quo), raw_trim(rem)


def raw_mod(ctx, num, den):
    return raw_divmod(ctx, num, den)[1]


def raw_monic(ctx, a):
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return raw_scale(ctx, a, ctx._inv(a[-1]))


def raw_gcd(ctx, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, raw_mod(ctx, a, b)
    return raw_monic(ctx, a)


def raw_eval(ctx, f, x):
    if not f:
        return 0
    if ctx.m == 1:
        p = ctx.p
        acc = 0
        for c in reversed(f):
            acc = (acc * x + c) % p
        return acc
    mul, add = ctx._mul, ctx._add
    acc = 0
    for c in reversed(f):
        acc = add(mul(acc, x), c)
    return acc


def raw_deriv(ctx, f):
    if len(f) < 2:
        return []
    if ctx.m == 1:
        p = ctx.p
        return raw_trim([(i * c) % p for i, c in enumerate(f)][1:])
    p = ctx.p
    out = []
    for i in range(1, len(f)):
        out.append(ctx._mul(f[i], i % p) if i % p else 0)
    return raw_trim(out)


def raw_mulmod(ctx, a, b, mod):
    """a*b reduced by a monic modulus."""
    if not a or not b:
        return []
    dm = len(mod) - 1
    if ctx.m == 1:
        p = ctx.p
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        for k in range(len(conv) - 1, dm - 1, -1):
            c = conv[k] % p
            if c:
                off = k - dm
                for j in range(dm):
                    if mod[j]:
                        conv[off + j] -= c * mod[j]
        return raw_trim([conv[i] % p for i in range(min(len(conv), dm))])
    mul, sub, add = ctx._mul, ctx._sub, ctx._add
    conv = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] = add(conv[i + j], mul(x, y))
    for k in range(len(conv) - 1, dm - 1, -1):
        c = conv[k]
        if c:
            off = k - dm
            for j in range(dm):
                if mod[j]:
                    conv[off + j] = sub(conv[off + j], mul(c, mod[j]))
    return raw_trim(conv[: min(len(conv), dm)])


def raw_sqrmod(ctx, a, mod):
    if ctx.p == 2 and ctx.m > 1:
        # char-2 squaring is coefficient-wise: (sum a_i X^i)^2 = sum a_i^2 X^(2i)
        conv = [0] * (2 * len(a) - 1) if a else []
        mul = ctx._mul
        for i, x in enumerate(a):
            if x:
                conv[2 * i] = mul(x, x)
        dm = len(mod) - 1
        sub = ctx._sub
        for k in range(len(conv) - 1, dm - 1, -1):
            c = conv[k]
            if c:
                off = k - dm
                for j in range(dm):
                    if mod[j]:
                        conv[off + j] = sub(conv[off + j], mul(c, mod[j]))
        return raw_trim(conv[: min(len(conv), dm)])
    return raw_mulmod(ctx, a, a, mod)


def raw_powmod(ctx, base, e, mod):
    """base^e reduced by a monic modulus, square and multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    result = [1]
    b = raw_mod(ctx, base, mod)
    while e:
        if e & 1:
            result = raw_mulmod(ctx, result, b, mod)
        e >>= 1
        if e:
            b = raw_sqrmod(ctx, b, mod)
    return result


def raw_compose_mod(ctx, h, g, mod):
    """h(g) reduced by a monic modulus (Horner in g)."""
    acc = []
    for c in reversed(h):
        acc = raw_mulmod(ctx, acc, g, mod)
        if c:
            acc = raw_add(ctx, acc, [c])
    return acc


def raw_xq_mod(ctx, f):
    """X^q mod f for monic f."""
    return raw_powmod(ctx, [0, 1], ctx.q, f)


def is_irreducible_raw(ctx, f) -> bool:
    """Distinct-degree test: no factor of degree <= deg(f)/2 means irreducible."""
    f = raw_monic(ctx, raw_trim(list(f)))
    d = raw_deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    h = [0, 1]
    for _ in range(d // 2):
        h = raw_powmod(ctx, h, ctx.q, f)
        if raw_deg(raw_gcd(ctx, f, raw_sub(ctx, h, [0, 1]))) > 0:
            return False
    return True


# ---------------- factorization-shape kernels ----------------


def raw_pth_root(ctx, f):
    """p-th root of a polynomial in X^p (coefficientwise a -> a^(q/p))."""
    p = ctx.p
    e = ctx.q // p
    assert all(c == 0 for i, c in enumerate(f) if i % p), "not a p-th power"
    return raw_trim([ctx._pow(c, e) for c in f[::p]])


def raw_sff(ctx, f):
    """Squarefree decomposition of monic f: list of (factor, multiplicity).

    Factors are monic, squarefree, pairwise coprime; the characteristic-p
    branches take p-th roots where the derivative vanishes.
    """
    p = ctx.p
    out = []
    e0 = 1
    while raw_deg(f) > 0:
        fp = raw_deriv(ctx, f)
        if not fp:
            f = raw_pth_root(ctx, f)
            e0 *= p
            continue
        g = raw_gcd(ctx, f, fp)
        w, _ = raw_divmod(ctx, f, g)
        i = 1
        while raw_deg(w) > 0:
            y = raw_gcd(ctx, w, g)
            z, _ = raw_divmod(ctx, w, y)
            if raw_deg(z) > 0:
                out.append((z, e0 * i))
            w = y
            g, _ = raw_divmod(ctx, g, y)
            i += 1
        if raw_deg(g) == 0:
            break
        f = raw_pth_root(ctx, g)
        e0 *= p
    return out


def raw_ddf_degrees(ctx, f):
    """Irreducible factor degrees (with repetition) of monic squarefree f."""
    parts = []
    cur = list(f)
    if raw_deg(cur) < 1:
        return parts
    h1 = raw_xq_mod(ctx, cur)
    h = h1
    d = 1
    while raw_deg(cur) >= 2 * d:
        g = raw_gcd(ctx, cur, raw_sub(ctx, h, [0, 1]))
        dg = raw_deg(g)
        if dg > 0:
            parts.extend([d] * (dg // d))
            cur, _ = raw_divmod(ctx, cur, g)
            if raw_deg(cur) < 1:
                break
            h = raw_mod(ctx, h, cur)
            h1 = raw_mod(ctx, h1, cur)
        d += 1
        if raw_deg(cur) >= 2 * d:
            h = raw_compose_mod(ctx, h, h1, cur)
    if raw_deg(cur) > 0:
        parts.append(raw_deg(cur))
    return parts


def _rng_for(ctx, coeffs) -> random.Random:
    seed = ctx.q
    for c in coeffs:
        seed = (seed * 1_000_003 + c + 1) % (1 << 61)
    return random.Random(seed)


def raw_distinct_roots(ctx, f):
    """Distinct roots in F_q, ascending packed order."""
    if not f:
        raise ZeroInput("zero polynomial has every element as a root")
    if raw_deg(f) == 0:
        return []
    if ctx.q <= _SWEEP_LIMIT:
        ev = raw_eval
        return [x for x in range(ctx.q) if ev(ctx, f, x) == 0]
    mon = raw_monic(ctx, f)
    h = raw_xq_mod(ctx, mon)
    lin = raw_gcd(ctx, mon, raw_sub(ctx, h, [0, 1]))
    rng = _rng_for(ctx, f)
    return sorted(_edf_linear(ctx, lin, rng))


def _edf_linear(ctx, s, rng):
    """Split a monic product of distinct linear factors into its roots."""
    d = raw_deg(s)
    if d <= 0:
        return []
    if d == 1:
        return [ctx._neg(s[0])]
    q = ctx.q
    while True:
        if ctx.p == 2:
            a = rng.randrange(1, q)
            term = raw_mod(ctx, [0, a], s)
            tr = list(term)
            for _ in range(ctx.m - 1):
                term = raw_sqrmod(ctx, term, s)
                tr = raw_add(ctx, tr, term)
            g = raw_gcd(ctx, s, tr)
        else:
            a = rng.randrange(q)
            w = raw_powmod(ctx, [a, 1], (q - 1) // 2, s)
            g = raw_gcd(ctx, s, raw_sub(ctx, w, [1]))
        if 0 < raw_deg(g) < d:
            rest, _ = raw_divmod(ctx, s, g)
            return _edf_linear(ctx, g, rng) + _edf_linear(ctx, rest, rng)


def raw_resultant_pencil(ctx, f):
    """Res_X(f(X) - t, f'(X)) as a raw polynomial in t over F_q.

    Entries of the Sylvester matrix live in F_q[t]; the determinant is taken
    fraction-free (Bareiss), so no evaluation points are needed and small
    fields work directly.
    """
    fp = raw_deriv(ctx, f)
    n = raw_deg(f)
    if n < 1:
        raise ConstantInput("pencil resultant needs deg f >= 1")
    if not fp:
        raise InseparableInput("derivative is identically zero")
    dv = raw_deg(fp)
    if dv == 0:
        return [ctx._pow(fp[0], n)]
    N = n + dv
    zero: List[int] = []
    M = [[zero for _ in range(N)] for _ in range(N)]
    ucoef = [([c] if c else []) for c in f]
    ucoef[0] = raw_trim([f[0], ctx._neg(1)])  # constant X-coefficient is c0 - t
    vcoef = [([c] if c else []) for c in fp]
    for i in range(dv):
        for k in range(n + 1):
            M[i][i + k] = ucoef[n - k]
    for j in range(n):
        for k in range(dv + 1):
            M[dv + j][j + k] = vcoef[dv - k]
    return raw_det_bareiss(ctx, M)


def raw_det_bareiss(ctx, M):
    """Fraction-free determinant of a matrix of raw polynomials."""
    n = len(M)
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = raw_sub(
                    ctx,
                    raw_mul(ctx, M[k][k], M[i][j]),
                    raw_mul(ctx, M[i][k], M[k][j]),
                )
                quo, rem = raw_divmod(ctx, num, prev)
                assert not rem, "Bareiss division must be exact"
                M[i][j] = quo
            M[i][k] = []
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else raw_neg(ctx, det)


# ---------------- Poly wrapper ----------------


class Poly:
    """Immutable dense polynomial over one field context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Sequence[Union[int, FieldElement]] = ()):
        vals = []
        if ctx.m == 1:
            p = ctx.p
            for c in coeffs:
                vals.append(c % p if type(c) is int else ctx.element(c).val)
        else:
            q = ctx.q
            for c in coeffs:
                if type(c) is int:
                    if not 0 <= c < q:
                        raise ValueError(f"packed value {c} outside [0, {q})")
                    vals.append(c)
                else:
                    vals.append(ctx.element(c).val)
        self.ctx = ctx
        self.coeffs = tuple(raw_trim(vals))

    @classmethod
    def _raw(cls, ctx, vals) -> "Poly":
        self = object.__new__(cls)
        self.ctx = ctx
        self.coeffs = tuple(raw_trim(list(vals)))
        return self

    @classmethod
    def x(cls, ctx) -> "Poly":
        return cls._raw(ctx, [0, 1])

    @classmethod
    def constant(cls, ctx, c) -> "Poly":
        return cls._raw(ctx, [ctx.element(c).val])

    # -- structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coefficient(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return FieldElement(self.ctx, self.coeffs[-1])

    def coefficient(self, i: int) -> FieldElement:
        v = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.ctx, v)

    def elements(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(self.ctx, v) for v in self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.ctx != self.ctx:
            raise MixedFields("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return Poly._raw(self.ctx, raw_add(self.ctx, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Poly._raw(self.ctx, raw_sub(self.ctx, list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return Poly._raw(self.ctx, raw_neg(self.ctx, list(self.coeffs)))

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return Poly._raw(
                self.ctx, raw_scale(self.ctx, list(self.coeffs), self.ctx.element(other).val)
            )
        self._check(other)
        return Poly._raw(self.ctx, raw_mul(self.ctx, list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        q, r = raw_divmod(self.ctx, list(self.coeffs), list(other.coeffs))
        return Poly._raw(self.ctx, q), Poly._raw(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Union[int, FieldElement]) -> FieldElement:
        xv = self.ctx.element(x).val
        return FieldElement(self.ctx, raw_eval(self.ctx, list(self.coeffs), xv))

    def derivative(self) -> "Poly":
        return Poly._raw(self.ctx, raw_deriv(self.ctx, list(self.coeffs)))

    def monic(self) -> "Poly":
        return Poly._raw(self.ctx, raw_monic(self.ctx, list(self.coeffs)))

    def minus_const(self, c: Union[int, FieldElement]) -> "Poly":
        cv = self.ctx.element(c).val
        vals = list(self.coeffs) or [0]
        vals[0] = self.ctx._sub(vals[0], cv)
        return Poly._raw(self.ctx, vals)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.ctx == other.ctx and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.m, self.coeffs))

    def __repr__(self):
        return format_poly(self)


# ---------------- spec-level operations ----------------


def is_separable(f: Poly) -> bool:
    """Nonzero formal derivative (equivalently, no repeated root anywhere)."""
    if f.degree < 1:
        raise ConstantInput("separability is about nonconstant polynomials")
    return not f.derivative().is_zero()


def poly_gcd(f: Poly, g: Poly) -> Poly:
    f._check(g)
    return Poly._raw(f.ctx, raw_gcd(f.ctx, list(f.coeffs), list(g.coeffs)))


def powmod(f: Poly, e: int, mod: Poly) -> Poly:
    f._check(mod)
    if mod.degree < 1:
        raise ConstantModulus("modulus must have degree >= 1")
    mon = raw_monic(mod.ctx, list(mod.coeffs))
    return Poly._raw(f.ctx, raw_powmod(f.ctx, list(f.coeffs), e, mon))


def count_distinct_roots(f: Poly) -> int:
    """deg gcd(f, X^q - X), computed as deg gcd(f, powmod(X, q, f) - X)."""
    if f.degree < 1:
        raise ConstantInput("root counting needs deg f >= 1")
    ctx = f.ctx
    mon = raw_monic(ctx, list(f.coeffs))
    h = raw_xq_mod(ctx, mon)
    return raw_deg(raw_gcd(ctx, mon, raw_sub(ctx, h, [0, 1])))


def splits_completely(f: Poly) -> bool:
    """True iff f is a product of deg f distinct linear factors over F_q."""
    return count_distinct_roots(f) == f.degree


def roots_of(f: Poly) -> List[FieldElement]:
    """Distinct roots in canonical element order.

    Sweeps the field for q <= 10^4; otherwise extracts the linear part with
    one modular exponentiation and splits it (deterministically seeded).
    """
    vals = raw_distinct_roots(f.ctx, list(f.coeffs))
    return [FieldElement(f.ctx, v) for v in vals]


@dataclass(frozen=True)
class FactorShape:
    """Multiset of (degree, multiplicity) pairs of the irreducible factors."""

    pairs: Tuple[Tuple[int, int], ...]

    @property
    def total_degree(self) -> int:
        return sum(d * e for d, e in self.pairs)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def partition(self) -> Tuple[int, ...]:
        out: List[int] = []
        for d, e in self.pairs:
            out.extend([d] * e)
        return tuple(sorted(out, reverse=True))

    def __str__(self):
        return "(" + ",".join(str(d) for d in self.partition()) + ")"


def factor_shape(f: Poly) -> FactorShape:
    """Factor degrees and multiplicities via squarefree split plus DDF.

    For deg f <= 5 the DDF slices pin every factor degree without any
    equal-degree splitting (two factors of degree >= 3 cannot fit).
    """
    if f.is_zero():
        raise ZeroInput("zero polynomial has no factor shape")
    if f.degree < 1:
        raise ConstantInput("factor shape needs deg f >= 1")
    ctx = f.ctx
    pairs: List[Tuple[int, int]] = []
    for part, mult in raw_sff(ctx, raw_monic(ctx, list(f.coeffs))):
        for d in raw_ddf_degrees(ctx, part):
            pairs.append((d, mult))
    return FactorShape(tuple(sorted(pairs)))


def discriminant_pencil(f: Poly) -> Poly:
    """disc_X(f - t) as a polynomial in t, for monic quintic f, odd char.

    Computed as Res_X(f - t, f') with a fraction-free Sylvester determinant;
    the result has degree 4 in t with leading coefficient 5^5 when 5 does
    not divide q.
    """
    if f.ctx.p == 2:
        raise EvenCharacteristic("discriminants need odd characteristic")
    if f.degree != 5 or not f.is_monic():
        raise WrongDegree("discriminant pencil is defined for monic degree-5 input")
    det = raw_resultant_pencil(f.ctx, list(f.coeffs))
    return Poly._raw(f.ctx, det)


def is_square_polynomial(D: Poly) -> bool:
    """True iff D = c * E^2 with E over F_q and c a square in F_q.

    Checked as: even degree, leading coefficient a square (Euler criterion),
    and all multiplicities in the squarefree decomposition even.
    """
    if D.is_zero():
        raise ZeroInput("zero polynomial is not classified")
    ctx = D.ctx
    if ctx.p == 2:
        raise EvenCharacteristic("square testing needs odd characteristic")
    if D.degree % 2:
        return False
    if not ctx._is_square(D.coeffs[-1]):
        return False
    if D.degree == 0:
        return True
    mon = raw_monic(ctx, list(D.coeffs))
    return all(e % 2 == 0 for _, e in raw_sff(ctx, mon))


# ---------------- text formats ----------------

_TERM_RE = re.compile(
    r"^(?:\(?(?P<coef>-?\d+(?::\d+)*)\)?\*?)?(?P<var>[xX])?(?:\^(?P<exp>\d+))?$"
)


def _parse_entry(ctx: FieldCtx, text: str) -> int:
    text = text.strip()
    if ":" in text:
        return ctx.from_coords([int(t) for t in text.split(":")]).val
    return ctx.scalar(int(text)).val


def parse_element(ctx: FieldCtx, text: str) -> FieldElement:
    """Parse one element: plain integer or colon coordinate vector c0:c1:..."""
    return FieldElement(ctx, _parse_entry(ctx, text))


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Parse 'c0,c1,...,cn' (low first) or an expression like 'x^5+3*x^2+1'.

    Comma entries are integers for prime fields or colon coordinate vectors
    (c0:c1:...) for extension fields; bare integers embed through F_p.
    """
    text = text.strip()
    if "x" not in text and "X" not in text:
        return Poly._raw(ctx, [_parse_entry(ctx, part) for part in text.split(",")])
    cleaned = text.replace(" ", "").replace("-", "+-")
    coeffs: dict = {}
    for term in cleaned.split("+"):
        if not term:
            continue
        neg = term.startswith("-") and not term[1:2].isdigit()
        if neg:
            term = term[1:]
        mt = _TERM_RE.match(term)
        if not mt:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coef_text, var, exp = mt.group("coef"), mt.group("var"), mt.group("exp")
        if coef_text is None and var is None:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        cval = _parse_entry(ctx, coef_text) if coef_text is not None else 1
        if neg:
            cval = ctx._neg(cval)
        k = (int(exp) if exp else 1) if var else 0
        coeffs[k] = ctx._add(coeffs.get(k, 0), cval)
    vals = [0] * (max(coeffs) + 1 if coeffs else 0)
    for k, v in coeffs.items():
        vals[k] = v
    return Poly._raw(ctx, vals)


def format_poly(f: Poly) -> str:
    """Human form, highest degree first: x^5+2*x^3+x^2, constant '0' if zero."""
    if f.is_zero():
        return "0"
    ctx = f.ctx
    parts = []
    for k in range(f.degree, -1, -1):
        v = f.coeffs[k]
        if not v:
            continue
        if ctx.m == 1 or v < ctx.p:
            ctext = str(v)
        else:
            ctext = "(" + ":".join(str(d) for d in ctx._digits_of(v)) + ")"
        if k == 0:
            parts.append(ctext)
        else:
            xpow = "x" if k == 1 else f"x^{k}"
            parts.append(xpow if ctext == "1" else f"{ctext}*{xpow}")
    return "+".join(parts)

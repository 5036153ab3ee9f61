"""Finite field contexts F_{p^m} with integer-packed elements.

An element is stored as an integer in [0, q): the base-p digits of that
integer are its coordinates in the polynomial basis 1, x, ..., x^(m-1),
low digit = constant coordinate.  Enumeration order, root ordering and
every "smallest" selection (default modulus, witness factors) use this
integer encoding, i.e. coefficient vectors compared from the highest
degree coordinate down.

Extension fields lazily build discrete log / antilog tables (a pure
optimization) the first time a bulk sweep or a table-backed scalar
operation needs them; see bulk.py.
"""

from __future__ import annotations

import functools
from typing import Iterator, Optional, Sequence, Tuple, Union

from .errors import MixedFields, NonPrimeCharacteristic, ReducibleModulus, ZeroInverse


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization by trial division (inputs stay well under 2^40)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_split(q: int) -> Tuple[int, int]:
    """Return (p, m) with q = p^m, or raise NonPrimeCharacteristic."""
    if not isinstance(q, int) or q < 2:
        raise NonPrimeCharacteristic(f"{q!r} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    ((p, m),) = fac.items()
    return p, m


class FieldCtx:
    """Arithmetic for one field F_{p^m}.

    Raw arithmetic works on packed integer values; the FieldElement wrapper
    carries the context so mixed-field operands are rejected.  Two contexts
    compare equal iff they have the same (p, m, modulus).
    """

    def __init__(self, p: int, m: int, modulus: Optional[Tuple[int, ...]]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus  # tuple of m+1 coefficients, low first; None for m == 1
        self._q1 = self.q - 1
        # lazy table slots filled by bulk.build_tables
        self._exp = None
        self._exp2 = None
        self._log = None
        self._gen = None
        self._digits = None
        self._add_tables = {}
        if m > 1:
            if p == 2:
                self._modpacked = sum(bit << i for i, bit in enumerate(modulus))
            self._red_rows = self._make_red_rows()

    # -- construction helpers -------------------------------------------

    def _make_red_rows(self):
        """digits of x^(m+j) mod modulus for j = 0 .. m-2."""
        p, m = self.p, self.m
        row = [(-c) % p for c in self.modulus[:m]]  # x^m mod modulus
        rows = [tuple(row)]
        for _ in range(m - 2):
            top = row[m - 1]
            row = [0] + row[: m - 1]
            if top:
                base = rows[0]
                row = [(row[i] + top * base[i]) % p for i in range(m)]
            rows.append(tuple(row))
        return tuple(rows)

    # -- packed-integer helpers -----------------------------------------

    def _digits_of(self, v: int):
        p = self.p
        out = []
        for _ in range(self.m):
            v, d = divmod(v, p)
            out.append(d)
        return out

    def _pack(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    # -- raw scalar arithmetic on packed values -------------------------

    def _add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mul = 0, 1
        while a or b:
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def _neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out, mul = 0, 1
        while a:
            a, d = divmod(a, p)
            out += ((-d) % p) * mul
            mul *= p
        return out

    def _sub(self, a: int, b: int) -> int:
        return self._add(a, self._neg(b))

    def _mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        lg = self._log
        if lg is not None:
            if a == 0 or b == 0:
                return 0
            return int(self._exp[(int(lg[a]) + int(lg[b])) % self._q1])
        if self.p == 2:
            return self._mul2(a, b)
        return self._mul_generic(a, b)

    def _mul2(self, a: int, b: int) -> int:
        m, mod = self.m, self._modpacked
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> m) & 1:
                a ^= mod
        return r

    def _mul_generic(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = self._digits_of(a)
        db = self._digits_of(b)
        acc = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    acc[i + j] += x * y
        for k in range(2 * m - 2, m - 1, -1):
            c = acc[k] % p
            if c:
                row = self._red_rows[k - m]
                for t in range(m):
                    acc[t] += c * row[t]
        return self._pack([acc[i] % p for i in range(m)])

    def _mul_by_x(self, v: int) -> int:
        """v times the basis generator x (packed); used by table builders."""
        if self.m == 1:
            raise ValueError("prime field has no basis generator")
        p, m = self.p, self.m
        top = (v // p ** (m - 1)) % p
        shifted = (v % p ** (m - 1)) * p
        if not top:
            return shifted
        red = self._red_rows[0]
        digs = self._digits_of(shifted)
        return self._pack([(digs[i] + top * red[i]) % p for i in range(m)])

    def _pow(self, a: int, e: int) -> int:
        if e < 0:
            return self._pow(self._inv(a), -e)
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        lg = self._log
        if lg is not None:
            return int(self._exp[int(lg[a]) * e % self._q1])
        r = 1
        while e:
            if e & 1:
                r = self._mul(r, a)
            a = self._mul(a, a)
            e >>= 1
        return r

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        lg = self._log
        if lg is not None:
            return int(self._exp[(self._q1 - int(lg[a])) % self._q1])
        return self._pow(a, self.q - 2)

    def _is_square(self, a: int) -> bool:
        """Euler criterion; odd q only (every element is a square for p = 2)."""
        if self.p == 2:
            return True
        if a == 0:
            return True
        return self._pow(a, self._q1 // 2) == 1

    # -- tables ----------------------------------------------------------

    def ensure_tables(self):
        if self.m > 1 and self._log is None:
            from . import bulk

            bulk.build_tables(self)
        return self

    def multiplicative_generator(self) -> "FieldElement":
        if self.m > 1:
            self.ensure_tables()
            return FieldElement(self, self._gen)
        for cand in range(2, self.q):
            if _has_full_order(self, cand):
                return FieldElement(self, cand)
        return FieldElement(self, 1)  # q == 2

    # -- element construction / iteration -------------------------------

    def element(self, x: Union[int, "FieldElement"]) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.ctx != self:
                raise MixedFields("element belongs to a different field")
            return x
        if isinstance(x, int):
            if self.m == 1:
                return FieldElement(self, x % self.p)
            if 0 <= x < self.q:
                return FieldElement(self, x)
            raise ValueError(f"packed value {x} outside [0, {self.q})")
        raise TypeError(f"cannot make a field element from {type(x).__name__}")

    def scalar(self, n: int) -> "FieldElement":
        """Embed an integer through the prime subfield (n mod p)."""
        return FieldElement(self, n % self.p)

    def from_coords(self, coords: Sequence[int]) -> "FieldElement":
        if len(coords) > self.m:
            raise ValueError(f"at most {self.m} coordinates expected")
        digs = [c % self.p for c in coords] + [0] * (self.m - len(coords))
        return FieldElement(self, self._pack(digs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(self, v)

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.m}; modulus={mod})"


class FieldElement:
    """One element of a FieldCtx; immutable, hashable, operator-complete."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val: int):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise MixedFields("operands from different fields")
            return other.val
        if isinstance(other, int):
            return self.ctx.element(other).val
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.val, self.ctx._inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(v, self.ctx._inv(self.val)))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx._pow(self.val, e))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.val))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._inv(self.val))

    def is_square(self) -> bool:
        return self.ctx._is_square(self.val)

    @property
    def coords(self) -> Tuple[int, ...]:
        return tuple(self.ctx._digits_of(self.val))

    def __bool__(self):
        return self.val != 0

    def __int__(self):
        return self.val

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.val == other.val
        if isinstance(other, int):
            try:
                return self.val == self.ctx.element(other).val
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.m, self.val))

    def __str__(self):
        if self.ctx.m == 1:
            return str(self.val)
        return ":".join(str(d) for d in self.coords)

    __repr__ = __str__


def _has_full_order(ctx: FieldCtx, v: int) -> bool:
    q1 = ctx.q - 1
    return all(ctx._pow(v, q1 // r) != 1 for r in factorize(q1))


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, m: int, modulus: Optional[Tuple[int, ...]]) -> FieldCtx:
    ctx = FieldCtx(p, m, modulus)
    if m > 1:
        _check_modulus(p, m, modulus)
    return ctx


def make_field(p: int, m: int = 1, modulus=None) -> FieldCtx:
    """Build (or fetch the cached) F_{p^m}.

    For m > 1 and no modulus, the default is the irreducible monic degree-m
    polynomial over F_p whose coefficient vector, read as a base-p integer
    (low coefficient = low digit), is smallest.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeCharacteristic(f"{p!r} is not prime")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"extension degree must be a positive integer, got {m!r}")
    if modulus is not None:
        if m == 1:
            raise ValueError("prime fields take no modulus")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[m] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {m}")
    elif m > 1:
        # resolve before the cache lookup so explicit and default spellings
        # of the same modulus share one context
        modulus = default_modulus(p, m)
    return _make_field_cached(p, m, modulus)


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> Tuple[int, ...]:
    """Smallest (base-p integer order) monic irreducible of degree m over F_p."""
    prime = make_field(p)
    for tail in range(p ** m):
        coeffs = []
        v = tail
        for _ in range(m):
            v, d = divmod(v, p)
            coeffs.append(d)
        cand = coeffs + [1]
        from . import poly as _poly

        if _poly.is_irreducible_raw(prime, cand):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found (unreachable)")


def _check_modulus(p: int, m: int, modulus: Tuple[int, ...]):
    from . import poly as _poly

    prime = make_field(p)
    if not _poly.is_irreducible_raw(prime, list(modulus)):
        mod = ",".join(str(c) for c in modulus)
        raise ReducibleModulus(f"{mod} is reducible over GF({p})")


def enumerate_elements(ctx: FieldCtx) -> Iterator[FieldElement]:
    """All field elements in canonical (packed integer) order."""
    return ctx.elements()


def parse_field_spec(spec: Union[str, int]) -> Tuple[int, int]:
    """Parse 'p^m' or a plain prime power q into (p, m)."""
    if isinstance(spec, int):
        return prime_power_split(spec)
    text = spec.strip()
    if "^" in text:
        base, _, exp = text.partition("^")
        p, m = int(base), int(exp)
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if m < 1:
            raise ValueError("exponent must be positive")
        return p, m
    return prime_power_split(int(text))

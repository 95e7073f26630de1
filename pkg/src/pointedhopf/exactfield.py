"""Exact arithmetic in cyclotomic fields Q(zeta_L) and exact linear algebra over them.

Elements are stored in the power basis of Q[x]/(Phi_L) with ``Fraction``
coefficients, so every rank computed here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction, "CycloNum"]


class ConductorMismatch(ValueError):
    """A root of unity does not live in the requested cyclotomic field."""


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# ---------------------------------------------------------------------------
# roots of unity


@dataclass(frozen=True, eq=False)
class RootOfUnity:
    """``zeta_modulus ** exponent``; equality is on the reduced form."""

    modulus: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @property
    def canonical(self) -> tuple[int, int]:
        g = gcd(self.exponent, self.modulus)
        return self.modulus // g, self.exponent // g

    @property
    def order(self) -> int:
        return self.canonical[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RootOfUnity):
            return self.canonical == other.canonical
        if isinstance(other, int) and other == 1:
            return self.exponent == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical)

    def is_one(self) -> bool:
        return self.exponent == 0

    def exponent_in(self, L: int) -> int:
        """k such that self == zeta_L^k."""
        n, k = self.canonical
        if L % n:
            raise ConductorMismatch(f"order {n} does not divide {L}")
        return k * (L // n) % L

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        L = lcm(self.modulus, other.modulus)
        return RootOfUnity(L, self.exponent_in(L) + other.exponent_in(L))

    def __pow__(self, n: int) -> RootOfUnity:
        return RootOfUnity(self.modulus, self.exponent * n)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(self.modulus, -self.exponent)

    def __truediv__(self, other: RootOfUnity) -> RootOfUnity:
        return self * other.inverse()

    def odd_sqrt(self) -> RootOfUnity:
        """The unique square root of odd order (requires odd order)."""
        m = self.order
        if m % 2 == 0:
            raise ValueError(f"root of unity of even order {m} has no odd-order square root")
        return self ** ((m + 1) // 2)

    def __repr__(self) -> str:
        n, k = self.canonical
        if k == 0:
            return "1"
        return f"z{n}^{k}"


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // lead
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(L: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_L, lowest degree first."""
    num = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(L: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_L for 0 <= k < L."""
    phi = euler_phi(L)
    poly = cyclotomic_poly(L)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(L):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


# ---------------------------------------------------------------------------
# field elements


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _poly_trim(a)
    return q, a


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim([Fraction(v) for v in out])


class CycloNum:
    """An element of Q(zeta_L) in the power basis of Q[x]/(Phi_L).

    Instances are immutable.  Mixed-conductor arithmetic lifts both operands to
    the lcm of the conductors.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable[Union[int, Fraction]] = ()) -> None:
        phi = euler_phi(conductor)
        c = [Fraction(v) for v in coeffs]
        if len(c) > phi:
            c = _reduce_long(conductor, c)
        c.extend([Fraction(0)] * (phi - len(c)))
        self.conductor = conductor
        self.coeffs = tuple(c)

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, L: int = 1) -> CycloNum:
        return cls(L)

    @classmethod
    def one(cls, L: int = 1) -> CycloNum:
        return cls(L, [1])

    @classmethod
    def rational(cls, value: Union[int, Fraction], L: int = 1) -> CycloNum:
        return cls(L, [value])

    @classmethod
    def root(cls, L: int, k: int) -> CycloNum:
        return cls(L, _power_table(L)[k % L])

    @classmethod
    def from_group_ring(cls, L: int, counts: Sequence[int]) -> CycloNum:
        """Image of sum_k counts[k] * zeta_L^k."""
        table = _power_table(L)
        phi = euler_phi(L)
        acc = [0] * phi
        for k, n in enumerate(counts):
            if n:
                row = table[k % L]
                for j in range(phi):
                    if row[j]:
                        acc[j] += n * row[j]
        return cls(L, acc)

    # basic protocol -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def lift(self, M: int) -> CycloNum:
        """Embed into Q(zeta_M) for a multiple M of the conductor."""
        L = self.conductor
        if M == L:
            return self
        if M % L:
            raise ConductorMismatch(f"conductor {L} does not divide {M}")
        step = M // L
        table = _power_table(M)
        phi = euler_phi(M)
        acc = [Fraction(0)] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(i * step) % M]
                for j in range(phi):
                    if row[j]:
                        acc[j] += c * row[j]
        return CycloNum(M, acc)

    def _coerce(self, other: Scalar) -> tuple[CycloNum, CycloNum]:
        if isinstance(other, CycloNum):
            if other.conductor == self.conductor:
                return self, other
            M = lcm(self.conductor, other.conductor)
            return self.lift(M), other.lift(M)
        if isinstance(other, (int, Fraction)):
            return self, CycloNum(self.conductor, [other])
        raise TypeError(f"cannot combine CycloNum with {type(other).__name__}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (CycloNum, int, Fraction)):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # equal values may carry different conductors; only the rational
        # coordinate is conductor independent
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash("irrational-cyclo")

    def __add__(self, other: Scalar) -> CycloNum:
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycloNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other: Scalar) -> CycloNum:
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycloNum(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other: Scalar) -> CycloNum:
        return (-self) + other

    def __mul__(self, other: Scalar) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.conductor, [x * other for x in self.coeffs])
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        L = a.conductor
        prod: list[Fraction] = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNum(L, _reduce_long(L, prod))

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        L = self.conductor
        # extended Euclid: s * a + t * Phi = 1
        a = _poly_trim(list(self.coeffs))
        m = [Fraction(v) for v in cyclotomic_poly(L)]
        r0, r1 = m, a
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant since Phi_L is irreducible
        c = r0[0]
        return CycloNum(L, _reduce_long(L, [x / c for x in s0]))

    def __truediv__(self, other: Scalar) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.conductor, [x / other for x in self.coeffs])
        a, b = self._coerce(other)
        return a * b.inverse()

    def __rtruediv__(self, other: Scalar) -> CycloNum:
        return self.inverse() * other

    def __pow__(self, n: int) -> CycloNum:
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNum.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __repr__(self) -> str:
        return f"CycloNum({self.conductor}, {format_cyclo(self)!r})"

    def __str__(self) -> str:
        return format_cyclo(self)


def _reduce_long(L: int, coeffs: Sequence[Fraction]) -> list[Fraction]:
    phi = euler_phi(L)
    if len(coeffs) <= phi:
        return list(coeffs)
    table = _power_table(L)
    out = [Fraction(0)] * phi
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < phi:
            out[k] += c
        else:
            row = table[k % L]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return out


def format_cyclo(x: CycloNum) -> str:
    """Exact textual form, a sum of rational multiples of ``z^k`` (z = zeta_L)."""
    terms = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        sign = "-" if c < 0 else "+"
        if k == 0:
            body = str(mag)
        elif mag == 1:
            body = f"z^{k}"
        else:
            body = f"{mag}*z^{k}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def embed_root(r: RootOfUnity, L: int) -> CycloNum:
    """Power-basis image of ``r`` in Q(zeta_L)."""
    return CycloNum.root(L, r.exponent_in(L))


# ---------------------------------------------------------------------------
# matrices and elimination


class ExactMatrix:
    """Dense matrix of CycloNum entries sharing one conductor."""

    def __init__(self, entries: Sequence[Sequence[Scalar]], conductor: int | None = None) -> None:
        rows = [list(r) for r in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")
        L = conductor or 1
        for r in rows:
            for v in r:
                if isinstance(v, CycloNum):
                    L = lcm(L, v.conductor)
        self.conductor = L
        self.entries = [[_as_cyclo(v, L) for v in r] for r in rows]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([list(col) for col in zip(*self.entries)] if self.rows else [], self.conductor)

    def __getitem__(self, ij: tuple[int, int]) -> CycloNum:
        i, j = ij
        return self.entries[i][j]


def _as_cyclo(v: Scalar, L: int) -> CycloNum:
    if isinstance(v, CycloNum):
        return v.lift(L)
    return CycloNum(L, [v])


class RowReducer:
    """Incremental row reduction over Q(zeta_L).

    Rows are sparse dicts ``column -> CycloNum``; columns are eliminated in
    increasing index order, so callers choose the order by how they number
    columns.  ``pivots`` maps pivot column -> normalized row.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, CycloNum]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping[int, CycloNum]) -> int | None:
        """Reduce ``row`` into the basis; return its new pivot column, or None."""
        r = {c: v for c, v in row.items() if not v.is_zero()}
        pivots = self.pivots
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                inv = r[c].inverse()
                r = {k: v * inv for k, v in r.items()}
                pivots[c] = r
                return c
            f = r[c]
            for k, v in pr.items():
                nv = r.get(k)
                nv = -(f * v) if nv is None else nv - f * v
                if nv.is_zero():
                    r.pop(k, None)
                else:
                    r[k] = nv
        return None


def rank(m: ExactMatrix) -> int:
    """Exact rank over Q(zeta_L)."""
    red = RowReducer()
    for row in m.entries:
        red.add({j: v for j, v in enumerate(row) if not v.is_zero()})
    return red.rank


def row_space_dim(vectors: Sequence[Sequence[Scalar]]) -> int:
    """Dimension of the span of equal-length coefficient vectors."""
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors have different lengths")
    L = 1
    for v in vectors:
        for x in v:
            if isinstance(x, CycloNum):
                L = lcm(L, x.conductor)
    red = RowReducer()
    for v in vectors:
        red.add({j: _as_cyclo(x, L) for j, x in enumerate(v) if x != 0})
    return red.rank

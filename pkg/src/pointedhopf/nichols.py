"""Quantum-symmetrizer oracle for Nichols algebras of diagonal type.

``B(V)_n`` is the image of ``S_n = sum_{w in S_n} T_w`` on ``V^{(x) n}``.  The
operator preserves letter multisets, so it is computed block by block.

Words are tuples of 0-based letters.  Coefficients are kept as integer count
vectors in the group ring ``Z[C_L]`` while expanding (every ``T_w`` maps a word
to a root of unity times a word) and only converted to ``Q(zeta_L)`` for rank.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .abelian import BudgetExceeded
from .braiding import BraidingMatrix
from .exactfield import CycloNum, ExactMatrix, RowReducer, lcm

Word = tuple[int, ...]
DEFAULT_BUDGET = 1 << 16


def multidegree(word: Word, theta: int) -> tuple[int, ...]:
    m = [0] * theta
    for i in word:
        m[i] += 1
    return tuple(m)


def words_of_multidegree(m: Sequence[int]) -> list[Word]:
    """All words with letter multiplicities ``m``, lexicographically sorted."""
    out: list[Word] = []
    rest = list(m)
    total = sum(m)
    prefix: list[int] = []

    def rec() -> None:
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, k in enumerate(rest):
            if k:
                rest[i] -= 1
                prefix.append(i)
                rec()
                prefix.pop()
                rest[i] += 1

    rec()
    return out


def multidegrees(theta: int, n: int) -> list[tuple[int, ...]]:
    """Compositions of n into theta parts, lexicographically descending."""
    if theta == 0:
        return [()] if n == 0 else []
    out = []
    for first in range(n, -1, -1):
        for rest in multidegrees(theta - 1, n - first):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------------------
# tensor elements


@dataclass
class TensorElem:
    """Sparse element of ``T(V)_n`` with coefficients in ``Q(zeta_L)``."""

    degree: int
    conductor: int
    coeffs: dict[Word, CycloNum] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for w, c in self.coeffs.items():
            if len(w) != self.degree:
                raise ValueError(f"word {w} has length {len(w)}, expected {self.degree}")
            if not isinstance(c, CycloNum):
                c = CycloNum.rational(c, self.conductor)
            if not c.is_zero():
                clean[tuple(w)] = c
        self.coeffs = clean

    @classmethod
    def word(cls, w: Sequence[int], L: int = 1) -> TensorElem:
        return cls(len(w), L, {tuple(w): CycloNum.one(L)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: TensorElem) -> TensorElem:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return TensorElem(self.degree, lcm(self.conductor, other.conductor), out)

    def scale(self, c: CycloNum) -> TensorElem:
        return TensorElem(self.degree, lcm(self.conductor, c.conductor), {w: v * c for w, v in self.coeffs.items()})

    def multidegrees(self, theta: int) -> set[tuple[int, ...]]:
        return {multidegree(w, theta) for w in self.coeffs}


# ---------------------------------------------------------------------------
# braid operators


@dataclass(frozen=True)
class BraidOperator:
    """``c_k`` on ``T(V)_n``: swaps letters k, k+1 (1-based k) with factor ``b_{i_k i_{k+1}}``."""

    b: BraidingMatrix
    n: int
    k: int

    def on_word(self, w: Word) -> tuple[int, Word]:
        """(exponent in zeta_L, image word) with L = conductor of b."""
        L = self.b.conductor
        i, j = w[self.k - 1], w[self.k]
        e = self.b[i, j].exponent_in(L)
        return e, w[: self.k - 1] + (j, i) + w[self.k + 1:]

    def __call__(self, x: TensorElem) -> TensorElem:
        if x.degree != self.n:
            raise ValueError("degree mismatch")
        L = lcm(self.b.conductor, x.conductor)
        out: dict[Word, CycloNum] = {}
        for w, c in x.coeffs.items():
            e, w2 = self.on_word(w)
            v = c * CycloNum.root(self.b.conductor, e)
            out[w2] = out[w2] + v if w2 in out else v
        return TensorElem(self.n, L, out)


def braid_operator(b: BraidingMatrix, n: int, k: int) -> BraidOperator:
    if not 1 <= k < n:
        raise IndexError(f"braid index k={k} out of range for degree {n}")
    return BraidOperator(b, n, k)


# ---------------------------------------------------------------------------
# symmetrizer via the coset recursion
#
# S_n = (S_{n-1} (x) id) (1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1);
# c_{n-1}...c_k moves letter k to the end past letters k+1..n.


class SymmetrizerCache:
    """Memoized ``S(w)`` as ``{word: count vector of length L}``."""

    def __init__(self, b: BraidingMatrix) -> None:
        self.b = b
        self.L = b.conductor
        self.exp = b.exponent_matrix(self.L)
        self.memo: dict[Word, dict[Word, list[int]]] = {(): {(): _unit(self.L)}}

    def image(self, w: Word) -> dict[Word, list[int]]:
        hit = self.memo.get(w)
        if hit is not None:
            return hit
        L, exp = self.L, self.exp
        out: dict[Word, list[int]] = {}
        n = len(w)
        for k in range(n):
            letter = w[k]
            shift = sum(exp[letter][w[l]] for l in range(k + 1, n)) % L
            rest = w[:k] + w[k + 1:]
            for u, vec in self.image(rest).items():
                key = u + (letter,)
                acc = out.get(key)
                if acc is None:
                    acc = out[key] = [0] * L
                for e, cnt in enumerate(vec):
                    if cnt:
                        acc[(e + shift) % L] += cnt
        self.memo[w] = out
        return out


def _unit(L: int) -> list[int]:
    v = [0] * L
    v[0] = 1
    return v


def _to_cyclo(L: int, vec: Sequence[int]) -> CycloNum:
    return CycloNum.from_group_ring(L, vec)


def symmetrizer_block(b: BraidingMatrix, m: Sequence[int], cache: SymmetrizerCache | None = None) -> ExactMatrix:
    """Matrix of ``S_n`` on the block of multidegree ``m``; row r is ``S(word_r)``."""
    cache = cache or SymmetrizerCache(b)
    words = words_of_multidegree(m)
    index = {w: c for c, w in enumerate(words)}
    L = cache.L
    zero = CycloNum.zero(L)
    rows = []
    for w in words:
        row = [zero] * len(words)
        for u, vec in cache.image(w).items():
            row[index[u]] = _to_cyclo(L, vec)
        rows.append(row)
    return ExactMatrix(rows, L)


def quantum_symmetrizer(b: BraidingMatrix, n: int, budget: int = DEFAULT_BUDGET) -> dict[tuple[int, ...], ExactMatrix]:
    """``S_n`` as a block-diagonal matrix keyed by multidegree."""
    _check_budget(b.theta, n, budget)
    cache = SymmetrizerCache(b)
    return {m: symmetrizer_block(b, m, cache) for m in multidegrees(b.theta, n)}


def _check_budget(theta: int, n: int, budget: int) -> None:
    if theta ** n > budget:
        raise BudgetExceeded(f"theta^n = {theta}^{n} = {theta ** n} exceeds budget {budget}")


def block_rank(b: BraidingMatrix, m: Sequence[int], cache: SymmetrizerCache) -> int:
    L = cache.L
    red = RowReducer()
    words = words_of_multidegree(m)
    index = {w: c for c, w in enumerate(words)}
    for w in words:
        row = {}
        for u, vec in cache.image(w).items():
            x = _to_cyclo(L, vec)
            if not x.is_zero():
                row[index[u]] = x
        red.add(row)
        if red.rank == len(words):
            break
    return red.rank


# ---------------------------------------------------------------------------
# direct T_w construction (independent cross-check of the recursion)


def reduced_word(perm: Sequence[int]) -> list[int]:
    """A reduced word (1-based simple transpositions, applied left to right) for ``perm``.

    Bubble sort of the one-line notation: each swap removes one inversion, so
    the word has length equal to the inversion count.
    """
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(len(p) - 1):
            if p[k] > p[k + 1]:
                p[k], p[k + 1] = p[k + 1], p[k]
                word.append(k + 1)
                changed = True
    return word


def apply_T(b: BraidingMatrix, perm: Sequence[int], w: Word) -> tuple[int, Word]:
    """``T_perm(w)`` as (exponent of zeta_L, word), applying the reduced word's c_k in turn."""
    L = b.conductor
    e = 0
    for k in reversed(reduced_word(perm)):
        i, j = w[k - 1], w[k]
        e += b[i, j].exponent_in(L)
        w = w[: k - 1] + (j, i) + w[k + 1:]
    return e % L, w


def symmetrizer_direct(b: BraidingMatrix, w: Word) -> dict[Word, list[int]]:
    """``S_n(w)`` summed over all n! permutations."""
    L = b.conductor
    out: dict[Word, list[int]] = {}
    for perm in itertools.permutations(range(len(w))):
        e, u = apply_T(b, perm, w)
        out.setdefault(u, [0] * L)[e] += 1
    return out


# ---------------------------------------------------------------------------
# graded dimensions


@dataclass(frozen=True)
class GradedDims:
    dims: tuple[int, ...]
    truncated: bool = False

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def is_palindromic(self) -> bool:
        return self.dims == self.dims[::-1]

    def padded(self, n: int) -> tuple[int, ...]:
        return self.dims + (0,) * max(0, n - len(self.dims))


def _ordered_map(fn: Callable, items: Iterable, threads: int) -> list:
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def nichols_dims(b: BraidingMatrix, n_max: int | None = None, budget: int = DEFAULT_BUDGET,
                 threads: int = 1, strict: bool = False) -> GradedDims:
    """Ranks of ``S_n`` for n = 0.. until the first zero degree (or ``n_max``).

    On budget overflow returns the dimensions computed so far flagged
    ``truncated`` unless ``strict``, in which case BudgetExceeded propagates.
    """
    cache = SymmetrizerCache(b)
    dims = [1]
    n = 1
    while n_max is None or n <= n_max:
        try:
            _check_budget(b.theta, n, budget)
        except BudgetExceeded:
            if strict:
                raise
            return GradedDims(tuple(dims), truncated=True)
        # prime the memo serially so worker threads only read it
        for m in multidegrees(b.theta, n):
            for w in words_of_multidegree(m):
                cache.image(w)
        d = sum(_ordered_map(lambda m: block_rank(b, m, cache), multidegrees(b.theta, n), threads))
        if d == 0:
            break
        dims.append(d)
        n += 1
    return GradedDims(tuple(dims))


def pbw_hilbert_series(rs, N: Sequence[int] | Mapping[int, int], t_max: int | None = None) -> GradedDims:
    """Coefficients of ``prod_alpha (1 - t^(N ht)) / (1 - t^ht)``.

    ``N`` gives N_I per component of ``rs.classification`` (by component index).
    """
    poly = [1]
    for beta in rs.positive_roots:
        h = sum(beta)
        n_i = N[rs.component_index(beta)]
        # multiply by 1 + t^h + ... + t^((n_i - 1) h)
        new = [0] * (len(poly) + (n_i - 1) * h)
        for e, c in enumerate(poly):
            if c:
                for k in range(n_i):
                    new[e + k * h] += c
        poly = new
    if t_max is not None:
        poly = poly[: t_max + 1]
    return GradedDims(tuple(poly))


def pbw_total(rs, N: Sequence[int] | Mapping[int, int]) -> int:
    out = 1
    for beta in rs.positive_roots:
        out *= N[rs.component_index(beta)]
    return out


def apply_symmetrizer(e: TensorElem, b: BraidingMatrix, budget: int = DEFAULT_BUDGET,
                      cache: SymmetrizerCache | None = None) -> TensorElem:
    _check_budget(b.theta, e.degree, budget)
    cache = cache or SymmetrizerCache(b)
    L = lcm(cache.L, e.conductor)
    out: dict[Word, CycloNum] = {}
    for w, c in e.coeffs.items():
        for u, vec in cache.image(w).items():
            v = c * _to_cyclo(cache.L, vec)
            out[u] = out[u] + v if u in out else v
    return TensorElem(e.degree, L, out)


def vanishes_in_nichols(e: TensorElem, b: BraidingMatrix, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff ``S_n(e) = 0``, i.e. e lies in the defining ideal of B(V)."""
    return apply_symmetrizer(e, b, budget).is_zero()

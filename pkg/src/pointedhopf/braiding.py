"""Diagonal braidings: Cartan-type detection, components, twisting, FL normal form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import pair
from .exactfield import RootOfUnity
from .rootsys import Classification, Matrix, check_gcm, classify, components, symmetrizer


class InconsistentDatum(ValueError):
    pass


class UnsupportedBraiding(ValueError):
    pass


@dataclass(frozen=True)
class BraidingMatrix:
    """``b[i][j] = <chi_j, g_i>``, so that ``c(x_i (x) x_j) = b_ij x_j (x) x_i``."""

    b: tuple[tuple[RootOfUnity, ...], ...]

    @property
    def theta(self) -> int:
        return len(self.b)

    def __getitem__(self, ij: tuple[int, int]) -> RootOfUnity:
        i, j = ij
        return self.b[i][j]

    @property
    def conductor(self) -> int:
        from .exactfield import lcm

        return lcm(*(x.order for row in self.b for x in row)) if self.b else 1

    def exponent_matrix(self, L: int) -> list[list[int]]:
        return [[x.exponent_in(L) for x in row] for row in self.b]

    def restrict(self, verts: Sequence[int]) -> BraidingMatrix:
        return BraidingMatrix(tuple(tuple(self.b[i][j] for j in verts) for i in verts))

    def is_symmetric(self) -> bool:
        n = self.theta
        return all(self.b[i][j] == self.b[j][i] for i in range(n) for j in range(n))

    @classmethod
    def from_exponents(cls, L: int, exps: Sequence[Sequence[int]]) -> BraidingMatrix:
        return cls(tuple(tuple(RootOfUnity(L, k) for k in row) for row in exps))


def braiding_from_datum(d) -> BraidingMatrix:
    """Braiding of a datum exposing ``g`` and ``chi`` sequences."""
    return BraidingMatrix(tuple(tuple(pair(chi_j, g_i) for chi_j in d.chi) for g_i in d.g))


@dataclass(frozen=True)
class CartanTypeResult:
    is_cartan: bool
    cartan: Matrix | None
    witness: tuple[int, int] | None = None
    reason: str = ""
    diag_orders: tuple[int, ...] = ()


def detect_cartan(b: BraidingMatrix) -> CartanTypeResult:
    """Select ``a_ij`` in ``(-ord b_ii, 0]`` with ``b_ij b_ji = b_ii^a_ij``; a_ii = 2."""
    n = b.theta
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        q = b[i, i]
        if q.is_one():
            return CartanTypeResult(False, None, (i, i), "b_ii = 1")
        a[i][i] = 2
        N = q.order
        for j in range(n):
            if j == i:
                continue
            target = b[i, j] * b[j, i]
            for cand in range(0, -N, -1):
                if q ** cand == target:
                    a[i][j] = cand
                    break
            else:
                return CartanTypeResult(False, None, (i, j), "b_ij b_ji is not a power of b_ii")
    return CartanTypeResult(True, tuple(tuple(r) for r in a), diag_orders=tuple(b[i, i].order for i in range(n)))


@dataclass(frozen=True)
class ComponentStructure:
    blocks: tuple[tuple[int, ...], ...]
    N: tuple[int, ...]
    classification: Classification

    def block_of(self, v: int) -> int:
        return next(k for k, blk in enumerate(self.blocks) if v in blk)

    def same(self, i: int, j: int) -> bool:
        return self.block_of(i) == self.block_of(j)

    @property
    def permutation(self) -> tuple[int, ...]:
        """Vertex order making components index-contiguous (block by block)."""
        return tuple(v for blk in self.blocks for v in blk)

    def N_of(self, v: int) -> int:
        return self.N[self.block_of(v)]


def components_of(c: CartanTypeResult, b: BraidingMatrix | None = None) -> ComponentStructure:
    if not c.is_cartan or c.cartan is None:
        raise ValueError("braiding is not of Cartan type")
    m = check_gcm(c.cartan)
    cls = classify(m)
    blocks = tuple(tuple(comp) for comp in components(m))
    Ns = []
    for blk in blocks:
        orders = {b[i, i].order if b is not None else c.diag_orders[i] for i in blk}
        if len(orders) != 1:
            raise InconsistentDatum(
                f"component {[v + 1 for v in blk]}: orders of q_i differ {sorted(orders)}, N_I not well defined")
        Ns.append(orders.pop())
    return ComponentStructure(blocks, tuple(Ns), cls)


def twist_braiding(b: BraidingMatrix, omega: Sequence[Sequence[RootOfUnity]]) -> BraidingMatrix:
    """``b^F_ij = omega_ij omega_ji^{-1} b_ij`` off the diagonal; diagonal unchanged."""
    n = b.theta
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(b[i, j] if i == j else omega[i][j] * omega[j][i].inverse() * b[i, j])
        rows.append(tuple(row))
    return BraidingMatrix(tuple(rows))


def symmetrize(b: BraidingMatrix) -> tuple[BraidingMatrix, list[list[RootOfUnity]]]:
    """Symmetric twist-equivalent braiding and the bicharacter realizing it."""
    n = b.theta
    for i in range(n):
        for j in range(n):
            if b[i, j].order % 2 == 0:
                raise UnsupportedBraiding(f"b[{i + 1}][{j + 1}] has even order {b[i, j].order}")
    one = RootOfUnity(1, 0)
    omega = [[one] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            root = (b[i, j] * b[j, i]).odd_sqrt()
            omega[i][j] = root / b[i, j]
    twisted = twist_braiding(b, omega)
    assert twisted.is_symmetric()
    return twisted, omega


@dataclass(frozen=True)
class FLForm:
    """``b_ij = q^(d_i a_ij)`` on a connected component."""

    q: RootOfUnity
    d: tuple[int, ...]


def fl_normal_form(b: BraidingMatrix, cartan: Sequence[Sequence[int]]) -> FLForm | None:
    """Solve ``b_ij = q^(d_i a_ij)`` on a connected component; None if impossible.

    ``d`` is normalized so that ``min d_i = 1``; ``q`` is taken of odd order.
    """
    m = check_gcm(cartan)
    n = len(m)
    if n != b.theta:
        raise ValueError("braiding and Cartan matrix sizes differ")
    if len(components(m)) != 1:
        raise ValueError("fl_normal_form expects a connected component")
    if not b.is_symmetric():
        return None
    d = symmetrizer(m, list(range(n)))
    if d is None or any(v not in (1, 2, 3) for v in d.values()):
        return None
    i0 = next(i for i in range(n) if d[i] == 1)
    try:
        q0 = b[i0, i0].odd_sqrt()
    except ValueError:
        return None
    # the other square root -q0 only matters when some d_i a_ij is odd
    for q in (q0, q0 * RootOfUnity(2, 1)):
        if all(q ** (d[i] * m[i][j]) == b[i, j] for i in range(n) for j in range(n)):
            return FLForm(q, tuple(d[i] for i in range(n)))
    return None


def fl_braiding(q: RootOfUnity, d: Sequence[int], cartan: Sequence[Sequence[int]]) -> BraidingMatrix:
    n = len(cartan)
    return BraidingMatrix(tuple(tuple(q ** (d[i] * cartan[i][j]) for j in range(n)) for i in range(n)))

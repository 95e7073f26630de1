from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pointedhopf.exactfield import (CycloNum, ExactMatrix, RootOfUnity, RowReducer, cyclotomic_poly, embed_root,
                                    euler_phi, format_cyclo, lcm, rank, row_space_dim)

CONDUCTORS = [1, 2, 3, 4, 5, 6, 7, 9, 12, 15]


def to_complex(x: CycloNum) -> complex:
    z = cmath.exp(2j * cmath.pi / x.conductor)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclo(draw, L=None):
    L = L if L is not None else draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(fractions, min_size=0, max_size=L))
    return CycloNum(L, coeffs)


@st.composite
def cyclo_pair(draw):
    L = draw(st.sampled_from(CONDUCTORS))
    return draw(cyclo(L)), draw(cyclo(L))


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_poly_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in expected]
    assert euler_phi(n) == sympy.totient(n)


@given(cyclo_pair())
def test_ring_operations_match_complex_embedding(xy):
    x, y = xy
    assert abs(to_complex(x + y) - (to_complex(x) + to_complex(y))) < 1e-9
    assert abs(to_complex(x * y) - to_complex(x) * to_complex(y)) < 1e-6
    assert abs(to_complex(x - y) - (to_complex(x) - to_complex(y))) < 1e-9


@given(cyclo())
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
        return
    assert x * x.inverse() == CycloNum.one(x.conductor)


@given(cyclo_pair(), cyclo())
def test_mixed_conductor_lifts(xy, z):
    x, _ = xy
    M = lcm(x.conductor, z.conductor)
    assert (x + z).conductor == M
    assert x + z == x.lift(M) + z.lift(M)
    assert abs(to_complex(x.lift(M)) - to_complex(x)) < 1e-9


@given(st.sampled_from(CONDUCTORS), st.integers(-50, 50), st.integers(-50, 50))
def test_roots_multiply(L, a, b):
    assert CycloNum.root(L, a) * CycloNum.root(L, b) == CycloNum.root(L, a + b)
    assert CycloNum.root(L, a) ** L == CycloNum.one(L)


@given(st.sampled_from(CONDUCTORS), st.lists(st.integers(-3, 3), max_size=30))
def test_group_ring_image(L, counts):
    expected = CycloNum.zero(L)
    for k, n in enumerate(counts):
        expected = expected + CycloNum.root(L, k) * n
    assert CycloNum.from_group_ring(L, counts) == expected


def test_sum_of_all_roots_is_zero():
    for L in (2, 3, 5, 7, 9, 15):
        assert CycloNum.from_group_ring(L, [1] * L).is_zero()


@given(st.integers(1, 60), st.integers(-200, 200))
def test_root_of_unity_canonical_equality(n, k):
    r = RootOfUnity(n, k)
    assert r == RootOfUnity(3 * n, 3 * k)
    assert hash(r) == hash(RootOfUnity(2 * n, 2 * k))
    assert r.order == n // sympy.gcd(n, k % n)
    assert (r * r.inverse()).is_one()
    assert r ** r.order == RootOfUnity(1, 0)


@given(st.sampled_from([1, 3, 5, 7, 9, 15, 21]), st.integers(0, 100))
def test_odd_sqrt(n, k):
    r = RootOfUnity(n, k)
    s = r.odd_sqrt()
    assert s * s == r
    assert s.order % 2 == 1


def test_odd_sqrt_rejects_even_order():
    with pytest.raises(ValueError):
        RootOfUnity(4, 1).odd_sqrt()


@given(st.sampled_from(CONDUCTORS), st.integers(0, 100))
def test_embed_root_matches_complex(L, k):
    r = RootOfUnity(L, k)
    assert abs(to_complex(embed_root(r, 2 * L)) - cmath.exp(2j * cmath.pi * k / L)) < 1e-9


def test_format_cyclo():
    assert format_cyclo(CycloNum.zero(3)) == "0"
    assert format_cyclo(CycloNum.root(3, 1)) == "z^1"
    # z^2 = -1 - z in Q(zeta_3)
    assert format_cyclo(CycloNum.root(3, 2)) == "-1 - z^1"
    assert format_cyclo(CycloNum(5, [Fraction(1, 2), 0, -3])) == "1/2 - 3*z^2"


@st.composite
def rational_matrix(draw):
    r = draw(st.integers(1, 5))
    c = draw(st.integers(1, 5))
    base = draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    # append random combinations so rank deficiency is common
    k = draw(st.integers(0, 3))
    for _ in range(k):
        coefs = draw(st.lists(st.integers(-2, 2), min_size=r, max_size=r))
        base.append([sum(a * row[j] for a, row in zip(coefs, base)) for j in range(c)])
    return base


@given(rational_matrix())
def test_rank_matches_sympy(m):
    assert rank(ExactMatrix(m)) == sympy.Matrix(m).rank()
    assert rank(ExactMatrix(m).transpose()) == sympy.Matrix(m).rank()


@settings(max_examples=40)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_cyclotomic_rank_matches_numeric(L, data):
    r = data.draw(st.integers(1, 4))
    c = data.draw(st.integers(1, 4))
    rows = [[data.draw(cyclo(L)) for _ in range(c)] for _ in range(r)]
    rows.append([x * CycloNum.root(L, 1) + y for x, y in zip(rows[0], rows[-1])])
    num = np.array([[to_complex(x) for x in row] for row in rows])
    assert rank(ExactMatrix(rows)) == np.linalg.matrix_rank(num, tol=1e-8)


def test_row_reducer_reports_pivots():
    red = RowReducer()
    one = CycloNum.one(3)
    assert red.add({0: one, 1: one}) == 0
    assert red.add({0: one * 2, 1: one * 2}) is None
    assert red.add({1: one}) == 1
    assert red.rank == 2


def test_row_space_dim():
    assert row_space_dim([]) == 0
    assert row_space_dim([[1, 2], [2, 4]]) == 1
    z = CycloNum.root(3, 1)
    assert row_space_dim([[1, z], [z, z * z]]) == 1
    with pytest.raises(ValueError):
        row_space_dim([[1], [1, 2]])

from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from pointedhopf.braiding import (BraidingMatrix, InconsistentDatum, UnsupportedBraiding, components_of,
                                  detect_cartan, fl_braiding, fl_normal_form, symmetrize, twist_braiding)
from pointedhopf.exactfield import RootOfUnity
from pointedhopf.rootsys import block_diagonal, cartan_of_type, symmetrizer

CONNECTED = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
ODD_N = [3, 5, 7, 9, 11, 13, 15]


def _d(cartan):
    sym = symmetrizer(cartan, list(range(len(cartan))))
    return [sym[i] for i in range(len(cartan))]


@st.composite
def fl_data(draw):
    label = draw(st.sampled_from(CONNECTED))
    N = draw(st.sampled_from([n for n in ODD_N if not (label == "G2" and n % 3 == 0)]))
    # q must have order N for the Cartan entries to be recoverable
    q = RootOfUnity(N, draw(st.sampled_from([k for k in range(1, N) if gcd(k, N) == 1])))
    cartan = cartan_of_type(label)
    return cartan, q, _d(cartan)


@st.composite
def omegas(draw, n, N):
    return [[RootOfUnity(N, draw(st.integers(0, N - 1))) for _ in range(n)] for _ in range(n)]


@given(fl_data())
def test_detect_cartan_recovers_fl(data):
    cartan, q, d = data
    res = detect_cartan(fl_braiding(q, d, cartan))
    assert res.is_cartan and res.cartan == cartan


@given(fl_data(), st.data())
def test_twist_preserves_cartan_type(data, draw):
    cartan, q, d = data
    b = fl_braiding(q, d, cartan)
    om = draw.draw(omegas(len(cartan), q.order))
    tw = twist_braiding(b, om)
    n = len(cartan)
    for i in range(n):
        assert tw[i, i] == b[i, i]
        for j in range(n):
            assert tw[i, j] * tw[j, i] == b[i, j] * b[j, i]
    assert detect_cartan(tw).cartan == cartan


@given(fl_data(), st.data())
def test_symmetrize_undoes_twist(data, draw):
    cartan, q, d = data
    b = fl_braiding(q, d, cartan)
    tw = twist_braiding(b, draw.draw(omegas(len(cartan), q.order)))
    sym, omega = symmetrize(tw)
    assert sym.is_symmetric()
    assert twist_braiding(tw, omega) == sym
    # on a connected component the symmetric form is the FL form itself
    fl = fl_normal_form(sym, cartan)
    assert fl is not None
    assert fl_braiding(fl.q, fl.d, cartan) == sym
    assert min(fl.d) == 1 and fl.q.order % 2 == 1


def test_fl_normal_form_frozen():
    b2 = cartan_of_type("B2")
    q = RootOfUnity(5, 1)
    fl = fl_normal_form(fl_braiding(q, (2, 1), b2), b2)
    assert fl.q == q and fl.d == (2, 1)
    assert fl_normal_form(BraidingMatrix.from_exponents(5, [[2, 1], [0, 2]]), cartan_of_type("A2")) is None


def test_detect_rejects_trivial_diagonal_and_non_powers():
    res = detect_cartan(BraidingMatrix.from_exponents(3, [[0]]))
    assert not res.is_cartan and res.witness == (0, 0)
    # q_1 = -1 has order 2 and b12 b21 = zeta_3 is not a power of it
    b = BraidingMatrix((
        (RootOfUnity(2, 1), RootOfUnity(3, 1)),
        (RootOfUnity(1, 0), RootOfUnity(3, 1)),
    ))
    res = detect_cartan(b)
    assert not res.is_cartan and res.witness == (0, 1)


def test_braiding_exponents_and_restrict():
    b = BraidingMatrix.from_exponents(15, [[3, 5], [10, 6]])
    assert b.conductor == 15
    assert b.exponent_matrix(15) == [[3, 5], [10, 6]]
    assert b.restrict([1]).b == ((RootOfUnity(15, 6),),)


def test_components_and_inconsistent_orders():
    a = block_diagonal(cartan_of_type("A2"), cartan_of_type("A1"))
    b = BraidingMatrix.from_exponents(15, [[10, 5, 0], [0, 10, 0], [0, 0, 3]])
    comp = components_of(detect_cartan(b), b)
    assert comp.blocks == ((0, 1), (2,))
    assert comp.N == (3, 5)
    assert comp.same(0, 1) and not comp.same(1, 2)
    assert detect_cartan(b).cartan == a
    # a G2 pattern whose diagonal entries have orders 3 and 9
    bad = BraidingMatrix.from_exponents(9, [[3, 6], [0, 1]])
    res = detect_cartan(bad)
    assert res.cartan == ((2, -1), (-3, 2))
    with pytest.raises(InconsistentDatum):
        components_of(res, bad)


def test_symmetrize_rejects_even_orders():
    with pytest.raises(UnsupportedBraiding):
        symmetrize(BraidingMatrix.from_exponents(4, [[2]]))

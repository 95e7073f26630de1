from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from pointedhopf.exactfield import CycloNum
from pointedhopf.freealg import (AlgElem, InvalidLinking, NotBihomogeneous, SmashContext, _grading_map,
                                 _inhomogeneous_pairs, braided_commutator, format_elem, group_relations,
                                 lifted_dimension_formula, lifted_relations, linking_relations, nichols_relations,
                                 root_power_relations, root_vector_table, serre_element, serre_relations,
                                 top_pbw_degree, truncated_quotient_dim, truncated_quotient_series)
from pointedhopf.linking import fl_datum, make_datum
from pointedhopf.nichols import vanishes_in_nichols
from pointedhopf.rootsys import block_diagonal, cartan_of_type

A1A1 = make_datum([3, 3], [[1, 0], [0, 1]], [[1, 1], [2, 2]])
A2 = fl_datum(cartan_of_type("A2"), 3)


@st.composite
def elems(draw, ctx):
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        g = tuple(draw(st.integers(0, m - 1)) for m in ctx.group.orders)
        w = tuple(draw(st.lists(st.integers(0, ctx.theta - 1), max_size=3)))
        terms[(g, w)] = CycloNum.root(ctx.L, draw(st.integers(0, ctx.L - 1))) * draw(st.integers(-2, 2))
    return AlgElem(ctx, terms)


CTX = SmashContext.of(A1A1)


@settings(max_examples=60)
@given(elems(CTX), elems(CTX), elems(CTX))
def test_smash_product_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(st.integers(0, 1), st.integers(0, 2), st.integers(0, 2))
def test_smash_commutation(i, e0, e1):
    g = A1A1.group.element([e0, e1])
    a, y = AlgElem.a(CTX, i), AlgElem.y(CTX, g)
    # a_i y_g = chi_i(g)^-1 y_g a_i
    coeff = CycloNum.root(CTX.L, A1A1.chi[i](g).inverse().exponent_in(CTX.L))
    assert a * y == (y * a).scale(coeff)


def test_group_relations_are_identities_in_normal_form():
    rels = group_relations(A1A1)
    assert rels.of_kind("group-order") and rels.of_kind("smash")
    assert rels.effective() == []


@given(st.integers(0, 1), st.integers(0, 1))
def test_braided_commutator_bidegree(i, j):
    ctx = SmashContext.of(A2)
    u, v = AlgElem.a(ctx, i), AlgElem.a(ctx, j)
    c = braided_commutator(u, v)
    if c.is_zero():
        return
    bd = c.bidegree()
    assert bd.grp == A2.g[i] * A2.g[j]
    assert bd.chr == A2.chi[i] * A2.chi[j]


def test_not_bihomogeneous():
    ctx = SmashContext.of(A2)
    with pytest.raises(NotBihomogeneous):
        (AlgElem.a(ctx, 0) + AlgElem.a(ctx, 1)).bidegree()


def test_root_vectors_frozen_a2():
    table = dict(root_vector_table(SmashContext.of(A2), A2.root_data))
    assert format_elem(table[(1, 1)]) == "a1*a2 + (1 + z^1)*a2*a1"
    assert format_elem(table[(1, 0)]) == "a1"


@pytest.mark.parametrize("label,N", [("B2", 5), ("G2", 5), ("A3", 3), ("B2", 3)])
def test_serre_elements_vanish(label, N):
    d = fl_datum(cartan_of_type(label), N)
    ctx = SmashContext.of(d)
    for i in range(d.theta):
        for j in range(d.theta):
            if i != j:
                x = serre_element(ctx, d.cartan, i, j)
                assert vanishes_in_nichols(x.to_tensor(), d.braiding)


@pytest.mark.parametrize("label,N", [("B2", 3), ("A3", 3)])
def test_root_vector_powers(label, N):
    d = fl_datum(cartan_of_type(label), N)
    for beta, x in root_vector_table(SmashContext.of(d), d.root_data):
        assert vanishes_in_nichols((x ** N).to_tensor(), d.braiding)
        assert not vanishes_in_nichols((x ** (N - 1)).to_tensor(), d.braiding)


def test_relation_sets():
    rs = A2.root_data
    serre = serre_relations(A2)
    assert len(serre) == 2
    pw = root_power_relations(A2, rs)
    assert len(pw) == 3
    assert all(r.element.max_degree() == 3 * sum(beta) for r, beta in zip(pw, rs.convex_order))
    assert len(nichols_relations(A2, rs)) == 5
    assert "a1" in str(serre.relations[0])


def test_linking_relations():
    lam = {(0, 1): CycloNum.rational(1, 3)}
    rels = linking_relations(A1A1, lam)
    (r,) = rels.relations
    assert r.kind == "linking"
    # inhomogeneous: a-degrees 2 and 0
    assert {len(w) for _, w in r.element.terms} == {0, 2}
    assert _inhomogeneous_pairs(CTX, [r.element]) == [(0, 1)]
    with pytest.raises(InvalidLinking):
        linking_relations(A1A1, lam, is_linkable=lambda i, j: False)


def test_grading_map_respects_lifted_relations():
    rels = lifted_relations(A1A1, A1A1.root_data, {(0, 1): CycloNum.rational(1, 3)})
    grade = _grading_map(2, [(0, 1)])
    for r in rels.effective():
        assert len({grade(w) for _, w in r.terms}) == 1
    # odd cycle collapses to parity
    g3 = _grading_map(3, [(0, 1), (1, 2), (0, 2)])
    assert g3((0, 1)) == g3(()) and g3((0,)) != g3(())


def test_nichols_quotient_is_group_times_nichols():
    d = fl_datum(cartan_of_type("A1"), 5)
    res = truncated_quotient_dim(nichols_relations(d, d.root_data), d, 6, top_pbw_degree=4)
    assert res.dims == (5, 5, 5, 5, 5, 0, 0)
    assert res.stabilized and res.total == 25


def test_quotient_series_and_formula():
    rs = A1A1.root_data
    assert lifted_dimension_formula(9, rs, [3, 3]) == 81
    assert top_pbw_degree(rs, [3, 3]) == 4
    rels = lifted_relations(A1A1, rs, {(0, 1): CycloNum.one(3)})
    series = truncated_quotient_series(rels, A1A1, 3, 5, top_pbw_degree=4)
    assert [r.D for r in series] == [3, 4, 5]
    assert [r.stabilized for r in series] == [False, False, True]
    assert series[-1].dims == (9, 18, 27, 18, 9, 0)
    assert series[-1].previous == (9, 18, 27, 18, 9)


def test_a2_lift_frozen():
    rels = lifted_relations(A2, A2.root_data)
    res = truncated_quotient_dim(rels, A2, 9, top_pbw_degree=top_pbw_degree(A2.root_data, [3]))
    assert res.total == 243 == lifted_dimension_formula(9, A2.root_data, [3])
    assert res.stabilized

from __future__ import annotations

import random

import pytest

from pointedhopf import cli
from pointedhopf.braiding import BraidingMatrix, detect_cartan, twist_braiding
from pointedhopf.exactfield import RootOfUnity
from pointedhopf.freealg import (AlgElem, SmashContext, lifted_dimension_formula, lifted_relations,
                                 root_vectors, serre_element, top_pbw_degree, truncated_quotient_series)
from pointedhopf.linking import (LinkingDatum, check_hypotheses, enumerate_data, fl_datum, linkable,
                                 linkable_pairs, make_datum, remark_bound, vertices_linkable_to_two)
from pointedhopf.nichols import nichols_dims, pbw_hilbert_series, vanishes_in_nichols
from pointedhopf.rootsys import block_diagonal, cartan_of_type

A1 = cartan_of_type("A1")
A2 = cartan_of_type("A2")


def _nichols_vs_pbw(d):
    dims = nichols_dims(d.braiding)
    pbw = pbw_hilbert_series(d.root_data, list(d.components.N))
    return dims, pbw


# 1 -------------------------------------------------------------------------

C1 = "Nichols dimensions equal PBW series"


@pytest.mark.criterion(1, C1)
@pytest.mark.parametrize("N", [3, 5, 7])
def test_criterion1_a1(N):
    dims, pbw = _nichols_vs_pbw(fl_datum(A1, N))
    assert not dims.truncated
    assert dims.dims == pbw.dims == (1,) * N
    assert dims.total == N


@pytest.mark.criterion(1, C1)
def test_criterion1_a1xa1():
    dims, pbw = _nichols_vs_pbw(fl_datum(block_diagonal(A1, A1), 3))
    assert dims.dims == pbw.dims == (1, 2, 3, 2, 1)
    assert dims.total == 9


@pytest.mark.criterion(1, C1)
def test_criterion1_a2():
    d = fl_datum(A2, 3, d=(1, 1))
    dims, pbw = _nichols_vs_pbw(d)
    assert dims.dims == pbw.dims == (1, 2, 4, 4, 5, 4, 4, 2, 1)
    assert dims.total == 27 == 3 ** 3


# 2 -------------------------------------------------------------------------

C2 = "defining relations vanish under the quantum symmetrizer"


@pytest.mark.criterion(2, C2)
def test_criterion2_a2_serre_and_root_power():
    d = fl_datum(A2, 3)
    ctx = SmashContext.of(d)
    b = d.braiding
    for i, j in ((0, 1), (1, 0)):
        assert vanishes_in_nichols(serre_element(ctx, d.cartan, i, j).to_tensor(), b)
    xs = dict(zip(d.root_data.convex_order, root_vectors(d, d.root_data)))
    x12 = xs[(1, 1)]
    assert vanishes_in_nichols((x12 ** 3).to_tensor(), b)
    assert not vanishes_in_nichols((x12 ** 2).to_tensor(), b)


@pytest.mark.criterion(2, C2)
@pytest.mark.parametrize("N", [3, 5, 7])
def test_criterion2_a1_powers(N):
    d = fl_datum(A1, N)
    x = AlgElem.a(SmashContext.of(d), 0)
    assert vanishes_in_nichols((x ** N).to_tensor(), d.braiding)
    assert not vanishes_in_nichols((x ** (N - 1)).to_tensor(), d.braiding)


# 3 -------------------------------------------------------------------------

C3 = "truncated quotient stabilizes at the lifted dimension"

TAFT = make_datum([3], [[1]], [[1]])
A1A1 = make_datum([3, 3], [[1, 0], [0, 1]], [[1, 1], [2, 2]])


def _lift(d, lam, D_max):
    rs = d.root_data
    N = list(d.components.N)
    rels = lifted_relations(d, rs, lam.as_dict(), is_linkable=lambda i, j: bool(linkable(d, i, j)))
    series = truncated_quotient_series(rels, d, 1, D_max, top_pbw_degree(rs, N))
    return series[-1], lifted_dimension_formula(d.group.size, rs, N)


@pytest.mark.criterion(3, C3)
def test_criterion3_taft():
    res, formula = _lift(TAFT, LinkingDatum(), 4)
    assert formula == 9
    assert res.stabilized and res.total == 9


@pytest.mark.criterion(3, C3)
def test_criterion3_a1xa1_linked_and_unlinked():
    assert linkable_pairs(A1A1) == [(0, 1)]
    totals = []
    for lam in (LinkingDatum(), LinkingDatum.of({(0, 1): 1})):
        res, formula = _lift(A1A1, lam, 6)
        assert formula == 81
        assert res.stabilized and res.total == 81
        totals.append(res.dims)
    assert totals[0] == totals[1]


# 4 -------------------------------------------------------------------------

C4 = "Cartan detection recovers FL data and is twist invariant"

_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1+A1", "A1+A2", "A1+B2", "A1+A1+A1"]


def _random_fl(rng: random.Random):
    label = rng.choice(_TYPES)
    cartan = block_diagonal(*(cartan_of_type(x) for x in label.split("+")))
    Ns = [N for N in range(3, 16, 2) if not ("G2" in label and N % 3 == 0)]
    N = rng.choice(Ns)
    perm = list(range(len(cartan)))
    rng.shuffle(perm)
    cartan = tuple(tuple(cartan[perm[i]][perm[j]] for j in range(len(perm))) for i in range(len(perm)))
    return cartan, N


@pytest.mark.criterion(4, C4)
def test_criterion4_detection_and_twists():
    rng = random.Random(20240611)
    for _ in range(200):
        cartan, N = _random_fl(rng)
        d = fl_datum(cartan, N)
        det = detect_cartan(d.braiding)
        assert det.is_cartan and det.cartan == cartan
        n = len(cartan)
        for _ in range(50):
            omega = [[RootOfUnity(N, rng.randrange(N)) for _ in range(n)] for _ in range(n)]
            tw = detect_cartan(twist_braiding(d.braiding, omega))
            assert tw.is_cartan and tw.cartan == cartan


# 5 -------------------------------------------------------------------------

C5 = "linking combinatorics at p = 3"


@pytest.fixture(scope="module")
def enumerated_p3():
    return {s: list(enumerate_data(3, s, 6 if s == 1 else 4)) for s in (1, 2)}


@pytest.mark.criterion(5, C5)
def test_criterion5_bound_never_violated(enumerated_p3):
    # the bound is asserted inside enumerate_data; reaching here means it held
    for s, data in enumerated_p3.items():
        assert data
        assert max(d.theta for d in data) <= remark_bound(3, s)


@pytest.mark.criterion(5, C5)
def test_criterion5_linkable_pairs_have_inverse_q(enumerated_p3):
    for data in enumerated_p3.values():
        for d in data:
            for i, j in linkable_pairs(d):
                assert d.q[j] == d.q[i].inverse()


@pytest.mark.criterion(5, C5)
def test_criterion5_no_vertex_linkable_to_two(enumerated_p3):
    bad = [(d, vertices_linkable_to_two(d)) for data in enumerated_p3.values() for d in data
           if vertices_linkable_to_two(d)]
    if bad:
        d, where = bad[0]
        pytest.fail(f"{len(bad)} data have a vertex linkable to two vertices; first: "
                    f"g={[x.exponents for x in d.g]} chi={[x.exponents for x in d.chi]} "
                    f"types={d.components.classification.labels()} vertex {where[0][0] + 1} -> "
                    f"{[v + 1 for v in where[0][1]]}")


# 6 -------------------------------------------------------------------------

C6 = "hypothesis checker flags"


@pytest.mark.criterion(6, C6)
def test_criterion6_a2_n3():
    h = check_hypotheses(fl_datum(A2, 3))
    assert not h.serre_lift_ok.ok
    assert any("N_I ≠ 3" in r for r in h.serre_lift_ok.reasons)


@pytest.mark.criterion(6, C6)
def test_criterion6_b2_n5():
    h = check_hypotheses(fl_datum(cartan_of_type("B2"), 5))
    assert not h.serre_lift_ok.ok
    assert any("N_I ≠ 5" in r for r in h.serre_lift_ok.reasons)


@pytest.mark.criterion(6, C6)
def test_criterion6_z19_applicable():
    h = check_hypotheses(fl_datum(A2, 19))
    assert h.thm_main_applicable.ok


# 7 -------------------------------------------------------------------------

C7 = "reports identical across thread counts"


@pytest.mark.criterion(7, C7)
@pytest.mark.parametrize("cmd,name", [("nichols", "a2_fl_z3.toml"), ("lift", "a1xa1_linked.toml"),
                                      ("lift", "taft.toml")])
@pytest.mark.parametrize("fmt", ["kv", "json"])
def test_criterion7_determinism(data_dir, cmd, name, fmt):
    outs = []
    for threads in (1, 4):
        outcome, f = cli.run([cmd, str(data_dir / name), "--threads", str(threads), "--format", fmt])
        outs.append((outcome.code, outcome.report.render(f)))
    assert outs[0] == outs[1]
    assert outs[0][0] == cli.EXIT_OK

from math import comb

import pytest
from hypothesis import given

from aqjl.aq_catalog import (
    AqModule,
    cohomology_dims,
    enumerate_coh,
    is_tempered,
    langlands_data,
    module_from_row,
    module_to_row,
    poincare,
)
from aqjl.errors import AqjlError, UnsupportedSplitPartition
from aqjl.partitions import OrderedPartition, enumerate_partitions, equivalent_partition
from aqjl.polynomial import IntPolynomial
from aqjl.reps import D, F, normalize_quaternionic
from aqjl.roots import Quaternionic, SplitReal, dim_u_cap_p
from aqjl.weights import SelfDualData, ell_vector, is_admissible, selfdual_data
from strategies import selfdual_mu

P = OrderedPartition
ZERO4 = (0, 0, 0, 0)


def H(parts, lam=None, w=0):
    p = P(parts)
    return AqModule(Quaternionic(p.total), p, SelfDualData(w, lam or (0,) * p.total))


def R(parts, eps=0, lam=None, w=0):
    p = P(parts)
    return AqModule(SplitReal(p.total), p, SelfDualData(w, lam or (0,) * (p.total // 2)), eps)


def poly(d):
    return IntPolynomial(d)


def test_quaternionic_catalog_k2():
    rows = enumerate_coh(Quaternionic(2), ZERO4, canonical=False)
    assert [str(m.partition) for m in rows] == ["[0,1,1]", "[1,1]", "[0,2]", "[2]"]
    assert len(set(rows)) == 3
    assert rows[0] == rows[1]
    canon = enumerate_coh(Quaternionic(2), ZERO4)
    assert [str(m.partition) for m in canon] == ["[0,1,1]", "[0,2]", "[2]"]


def test_split_catalog_k2():
    rows = enumerate_coh(SplitReal(4), ZERO4)
    got = [(str(m.partition), m.eps) for m in rows]
    assert got == [("[0,2,2]", 0), ("[2,2]", 0), ("[2,2]", 1), ("[0,4]", 0), ("[4]", 0), ("[4]", 1)]
    assert len(set(rows)) == 6


def test_regular_weight_catalog():
    rows = enumerate_coh(Quaternionic(2), (3, 1, -1, -3), canonical=False)
    assert [str(m.partition) for m in rows] == ["[0,1,1]"]
    # brute-force admissibility: [1,1] fails since lambda_2 = 2 sits in the zero block
    lam = selfdual_data((3, 1, -1, -3))
    assert {p for p in enumerate_partitions(2) if is_admissible(lam, p)} == {P((0, 1, 1))}


def test_non_selfdual_weight_gives_empty_catalog(caplog):
    caplog.set_level("INFO")
    assert enumerate_coh(Quaternionic(2), (2, 1, 0, 0)) == []
    assert "not essentially self-dual" in caplog.text


def test_sign_collapse():
    assert R((0, 2, 2), eps=1) == R((0, 2, 2), eps=0)
    assert R((2, 2), eps=1) != R((2, 2), eps=0)


def test_equivalent_rows_compare_equal():
    assert H((1, 1)) == H((0, 1, 1))
    assert hash(H((1, 1))) == hash(H((0, 1, 1)))
    assert H((1, 1)).canonical().partition == P((0, 1, 1))


def test_invalid_modules():
    with pytest.raises(AqjlError):
        H((0, 2), lam=(6, 2))
    with pytest.raises(AqjlError):
        AqModule(Quaternionic(2), P((0, 1, 1)), SelfDualData.zero(2), 1)
    with pytest.raises(AqjlError):
        R((1, 3))


def test_tempered_flags():
    assert is_tempered(H((0, 1, 1)))
    assert not is_tempered(R((0, 4)))
    assert not is_tempered(H((2,)))
    assert is_tempered(R((0, 2, 2)))


def test_poincare_examples():
    assert poincare(H((0, 1, 1))) == poly({2: 1, 3: 1})
    assert poincare(H((2,))) == poly({0: 1, 5: 1})
    assert poincare(R((0, 4))) == poly({3: 1, 6: 1})
    assert poincare(R((0, 2, 2))) == poly({4: 2, 5: 2})
    with pytest.raises(UnsupportedSplitPartition):
        poincare(R((2, 2)))


def test_cohomology_dims():
    k = 3
    m = H((0, 1, 1, 1))
    assert cohomology_dims(m, (0,) * 6) == {q: comb(2, q - 6) for q in (6, 7, 8)}
    assert cohomology_dims(R((0, 2, 2)), ZERO4) == {4: 2, 5: 2}
    assert cohomology_dims(H((k,)), (0,) * 6)[0] == 1
    with pytest.raises(AqjlError):
        cohomology_dims(m, (3, 2, 1, -1, -2, -3))


def test_langlands_examples():
    assert langlands_data(H((0, 2))).basic_reps() == (F(-1, 2), F(1, 2))
    assert langlands_data(R((0, 4))).basic_reps() == (D(-1, 2), D(1, 2))
    assert langlands_data(R((0, 2, 2))).basic_reps() == (D(0, 3), D(0, 1))


@given(selfdual_mu(max_k=8))
def test_tempered_langlands_is_ell(mu):
    data = selfdual_data(mu)
    m = AqModule(Quaternionic(data.k), P((0,) + (1,) * data.k), data)
    w, ell = ell_vector(mu)
    assert langlands_data(m).basic_reps() == tuple(F(w, l) for l in ell)


@given(selfdual_mu(max_k=5))
def test_equivalent_pairs_agree(mu):
    data = selfdual_data(mu)
    for p in enumerate_partitions(data.k):
        q = equivalent_partition(p)
        if q is None or p.parts[0] != 1 or not is_admissible(data, p):
            continue
        a, b = AqModule(Quaternionic(data.k), p, data), AqModule(Quaternionic(data.k), q, data)
        assert poincare(a) == poincare(b)
        ra = [normalize_quaternionic(x) for x in langlands_data(a).basic_reps()]
        rb = [normalize_quaternionic(x) for x in langlands_data(b).basic_reps()]
        assert ra == rb


@pytest.mark.parametrize("k", range(1, 6))
def test_poincare_degree_bounds(k):
    for p in enumerate_partitions(k):
        m = H(p.parts)
        P_ = poincare(m)
        assert P_.min_degree() == dim_u_cap_p(p, Quaternionic(k))
        if is_tempered(m):
            assert P_.degree() - P_.min_degree() == k - 1


@pytest.mark.parametrize("k", range(1, 5))
def test_catalog_size_against_fingerprints(k):
    rows = enumerate_coh(Quaternionic(k), (0,) * (2 * k), canonical=False)
    assert len(rows) == 2**k
    prints = set()
    for m in rows:
        reps = tuple(sorted(str(normalize_quaternionic(x)) for x in langlands_data(m).basic_reps()))
        prints.add((poincare(m), reps))
    # [1, ...] rows pair off with [0, 1, ...] rows: 2^(k-2) pairs, one for k = 1
    pairs = 2 ** (k - 2) if k >= 2 else 1
    assert len(prints) == len(set(rows)) == 2**k - pairs


def test_parallel_enumeration_is_deterministic():
    mu = (0,) * 12
    assert enumerate_coh(SplitReal(12), mu) == enumerate_coh(SplitReal(12), mu, workers=4)


def test_row_round_trip():
    for m in enumerate_coh(SplitReal(6), (0,) * 6) + enumerate_coh(Quaternionic(3), (1, 1, 0, 0, -1, -1)):
        row = module_to_row(m)
        assert module_from_row(row) == m
    row = module_to_row(H((0, 1, 1)))
    assert row == {
        "kind": "H",
        "partition": [0, 1, 1],
        "lambda": [0, 0],
        "w": 0,
        "eps": 0,
        "tempered": True,
        "poincare": {"2": 1, "3": 1},
        "langlands": [{"l": 3, "u": 0}, {"l": 1, "u": 0}],
    }


def test_row_with_mu():
    m = module_from_row({"kind": "H", "partition": [0, 1, 1], "mu": [3, 1, -1, -3]})
    assert m.lam == SelfDualData(0, (6, 2))
    with pytest.raises(AqjlError):
        module_from_row({"kind": "H"})

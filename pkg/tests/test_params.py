from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from aqjl.aq_catalog import AqModule, enumerate_coh
from aqjl.errors import AqjlError, NotAlgebraic
from aqjl.langlands_params import (
    WeilParameter,
    example_nontempered_parameter,
    is_algebraic,
    is_regular,
    parameter_of,
    purity_weight,
)
from aqjl.partitions import OrderedPartition
from aqjl.roots import SplitReal
from aqjl.weights import ell_vector, selfdual_data
from strategies import selfdual_mu

P = OrderedPartition
h = Fraction


def pairs(*xs):
    return sorted((h(p), h(q)) for p, q in xs)


def split(parts, mu):
    p = P(parts)
    return AqModule(SplitReal(p.total), p, selfdual_data(mu))


def test_zero_four_parameter():
    t = parameter_of(split((0, 4), (0, 0, 0, 0)))
    assert list(t.exponents) == pairs(("3/2", "-1/2"), ("-1/2", "3/2"), ("1/2", "-3/2"), ("-3/2", "1/2"))
    assert sorted(t.p_values) == [h(-3, 2), h(-1, 2), h(1, 2), h(3, 2)]
    assert is_algebraic(t) and is_regular(t)


def test_tempered_parameter():
    t = parameter_of(split((0, 2, 2), (0, 0, 0, 0)))
    assert list(t.exponents) == pairs(("3/2", "-3/2"), ("-3/2", "3/2"), ("1/2", "-1/2"), ("-1/2", "1/2"))
    assert purity_weight([t]) == 0


@given(selfdual_mu(min_k=2, max_k=6))
def test_two_two_parameter(mu):
    data = selfdual_data(mu)
    assume(data.lam[-1] == 0)
    k = data.k
    w, ell = ell_vector(mu)
    t = parameter_of(split((2,) * k, mu))
    want = []
    for l in ell[:-1]:
        want += [(h(l - w, 2), h(-l - w, 2)), (h(-l - w, 2), h(l - w, 2))]
    assert ell[-1] == 1
    want += [(h(ell[-1] - w, 2),) * 2, (h(-ell[-1] - w, 2),) * 2]
    assert list(t.exponents) == sorted(want)
    # the remark's parity argument: l_i - w odd, hence algebraic
    assert all((l - w) % 2 == 1 for l in ell)
    assert is_algebraic(t) and is_regular(t)


@pytest.mark.parametrize("k", range(0, 11))
def test_nontempered_example(k):
    t = example_nontempered_parameter(k)
    assert t.p_values == sorted([h(k + 3, 2), h(-(k + 1), 2), h(k + 1, 2), h(-(k + 3), 2)])
    assert is_algebraic(t) == (k % 2 == 0)
    if k % 2 == 0:
        assert is_regular(t)
        assert purity_weight([t]) is None
    else:
        with pytest.raises(NotAlgebraic):
            is_regular(t)
        with pytest.raises(NotAlgebraic):
            purity_weight([t])
    assert {p + q for p, q in t.exponents} == {1, -1}
    assert purity_weight([t], strict=False) is None


@pytest.mark.parametrize("k", [0, 2, 4, 6])
def test_nontempered_example_from_catalog(k):
    mu = (k // 2, k // 2, -k // 2, -k // 2)
    assert parameter_of(split((0, 4), mu)) == example_nontempered_parameter(k)


def test_algebraic_rejects_integers():
    assert not is_algebraic(WeilParameter.of([(0, 0), (1, -1), (2, 2), (0, 3)]))


def test_regular_repeated_p():
    assert not is_regular(WeilParameter.of([("1/2", "1/2"), ("1/2", "1/2")]))


def test_single_place_single_pair_is_pure():
    assert purity_weight([WeilParameter.of([(2, 3)])]) == 5
    assert purity_weight([WeilParameter.of([(2, 3)])], normalize=True) == 5


@given(selfdual_mu(max_k=7))
def test_tempered_invariants(mu):
    data = selfdual_data(mu)
    k = data.k
    w, ell = ell_vector(mu)
    t = parameter_of(split((0,) + (2,) * k, mu))
    assert is_algebraic(t) == all((l - w) % 2 == 1 for l in ell)
    assert is_algebraic(t)
    assert is_regular(t)
    assert purity_weight([t]) == -w
    assert purity_weight([t], normalize=True) == -w + 1 - 2 * k
    s = t.swapped()
    assert is_algebraic(s) == is_algebraic(t)
    assert purity_weight([s]) == purity_weight([t])


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=6))
def test_swap_invariance(raw):
    t = WeilParameter.of([(h(p, 2), h(q, 2)) for p, q in raw])
    s = t.swapped()
    assert is_algebraic(s) == is_algebraic(t)
    assert purity_weight([s], strict=False) == purity_weight([t], strict=False)


def test_json_round_trip():
    t = parameter_of(split((0, 4), (0, 0, 0, 0)))
    data = t.to_json()
    assert [3, 2, -1, 2] in data
    assert WeilParameter.from_json(data) == t


def test_extra_twist():
    t = parameter_of(split((0, 2, 2), (0, 0, 0, 0)), extra_twist=h(1, 2))
    assert {p + q for p, q in t.exponents} == {1}


def test_rejects_non_half_integers():
    with pytest.raises(AqjlError):
        WeilParameter.of([(h(1, 3), 0)])
    with pytest.raises(AqjlError):
        WeilParameter(((h(0), h(0)),), 2)


def test_every_split_module_has_a_parameter():
    for m in enumerate_coh(SplitReal(8), (0,) * 8):
        assert parameter_of(m).n == 8

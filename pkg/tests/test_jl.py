import pytest
from hypothesis import given

from aqjl.aq_catalog import AqModule, enumerate_coh, is_tempered, langlands_data
from aqjl.errors import InvalidDirection, OddPart
from aqjl.jl_transfer import fiber, lj_basic, transfer
from aqjl.partitions import OrderedPartition
from aqjl.reps import D, DetPrime, F, SgnDet, normalize_quaternionic
from aqjl.roots import Quaternionic, SplitReal
from aqjl.weights import SelfDualData, selfdual_data
from strategies import selfdual_mu

P = OrderedPartition
ZERO4 = (0, 0, 0, 0)


def mod(tag, parts, eps=0, lam=None):
    p = P(parts)
    k = p.total // 2 if tag == "R" else p.total
    kind = SplitReal(p.total) if tag == "R" else Quaternionic(p.total)
    return AqModule(kind, p, SelfDualData(0, lam or (0,) * k), eps)


def test_lj_basic_examples():
    assert lj_basic(D(0, 3)) == F(0, 3)
    assert lj_basic(SgnDet(1, "1/2")) == DetPrime("1/2")
    assert lj_basic(D(-1, 2)) == F(-1, 2)
    with pytest.raises(InvalidDirection):
        lj_basic(F(0, 3))
    with pytest.raises(InvalidDirection):
        lj_basic(DetPrime(0))


def test_transfer_examples():
    assert transfer(mod("R", (0, 2, 2), 0)).partition == P((0, 1, 1))
    for eps in (0, 1):
        t = transfer(mod("R", (2, 2), eps))
        assert t.partition == P((0, 1, 1)) and t == mod("H", (1, 1))
        assert transfer(mod("R", (4,), eps)).partition == P((2,))
    with pytest.raises(OddPart):
        transfer(AqModule(SplitReal(4), P((1, 3)), SelfDualData.zero(2)))
    with pytest.raises(InvalidDirection):
        transfer(mod("H", (2,)))


def _key(m):
    return (str(m.partition), m.eps)


def test_fiber_examples():
    assert sorted(map(_key, fiber(mod("H", (0, 1, 1)), ZERO4))) == [("[0,2,2]", 0), ("[2,2]", 0), ("[2,2]", 1)]
    assert sorted(map(_key, fiber(mod("H", (2,)), ZERO4))) == [("[4]", 0), ("[4]", 1)]
    assert list(map(_key, fiber(mod("H", (0, 2)), ZERO4))) == [("[0,4]", 0)]
    # the [1,1] row has the same fiber as its partner
    assert fiber(mod("H", (1, 1)), ZERO4) == fiber(mod("H", (0, 1, 1)), ZERO4)


def test_fiber_oracle_k2():
    # brute force: transfer every split module and bucket by image
    split = enumerate_coh(SplitReal(4), ZERO4)
    buckets = {}
    for s in split:
        buckets.setdefault(transfer(s), []).append(s)
    for m in enumerate_coh(Quaternionic(2), ZERO4):
        assert fiber(m, ZERO4) == buckets[m]


def _blockwise(m):
    return tuple(normalize_quaternionic(lj_basic(r)) for r in langlands_data(m).basic_reps())


@given(selfdual_mu(max_k=5))
def test_jl_properties(mu):
    data = selfdual_data(mu)
    k = data.k
    split = enumerate_coh(SplitReal(2 * k), mu)
    quat = enumerate_coh(Quaternionic(k), mu)
    covered = []
    for m in quat:
        f = fiber(m, mu)
        assert f, m
        covered += f
        if is_tempered(m):
            assert any(is_tempered(s) for s in f)
    assert sorted(covered, key=_key) == sorted(split, key=_key)
    assert len(set(covered)) == len(covered)
    for s in split:
        t = transfer(s)
        assert t in quat
        if is_tempered(s):
            assert is_tempered(t)
        ours = _blockwise(s)
        theirs = tuple(normalize_quaternionic(r) for r in langlands_data(t).basic_reps())
        assert ours == theirs

import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from aqjl.cyclotomic import CyclotomicNumber, CyclotomicSubfield, euler_phi, units, zeta
from aqjl.hecke import (
    SatakeParams,
    hecke_eigenvalues,
    is_sigma_invariant,
    local_rationality_field,
    rationality_compositum,
    sigma_twist_satake,
)
from oracles import complex_value, elementary_from_roots, newton_power_sums

Q = CyclotomicSubfield.rationals()


def test_eigenvalue_examples():
    z3 = zeta(3)
    assert hecke_eigenvalues(SatakeParams((z3, z3**2, 1))) == [0, 0, 1]
    for n in range(1, 6):
        assert hecke_eigenvalues(SatakeParams((1,) * n)) == [comb(n, j) for j in range(1, n + 1)]
    z5 = zeta(5)
    assert hecke_eigenvalues(SatakeParams((z5, 1))) == [1 + z5, z5]


def test_field_examples():
    z3 = zeta(3)
    assert local_rationality_field(SatakeParams((z3, z3**2, 1))) == Q
    assert local_rationality_field(SatakeParams((zeta(5), 1))) == CyclotomicSubfield.full(5)
    assert local_rationality_field(SatakeParams((Fraction(1, 2), 3, -1))) == Q


def test_twist_examples():
    z3, z5 = zeta(3), zeta(5)
    s = SatakeParams((z3, z3**2, 1))
    assert sigma_twist_satake(s, 1).same_multiset(s)
    assert is_sigma_invariant(s, 2)
    t = SatakeParams((z5, 1))
    assert sigma_twist_satake(t, 2).same_multiset(SatakeParams((z5**2, 1)))
    assert not is_sigma_invariant(t, 2)


def _random_alpha(rng, N, n):
    out = []
    for _ in range(n):
        coords = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(euler_phi(N))]
        out.append(CyclotomicNumber(N, coords))
    return SatakeParams(tuple(out))


def test_newton_identities_random():
    rng = random.Random(2024)
    for _ in range(40):
        N = rng.randint(1, 24)
        s = _random_alpha(rng, N, rng.randint(1, 4))
        e = hecke_eigenvalues(s)
        direct = []
        for j in range(1, s.n + 1):
            acc = CyclotomicNumber.rational(0, N)
            for a in s.alphas:
                acc = acc + a**j
            direct.append(acc)
        assert newton_power_sums(e) == direct
        # complex cross-check through numpy's polynomial expansion
        vals = [complex_value(N, a.lift(N).coords) for a in s.alphas]
        for ours, ref in zip(e, elementary_from_roots(vals)):
            assert abs(complex_value(N, ours.lift(N).coords) - ref) < 1e-6 * (1 + abs(ref))


@given(st.permutations(range(4)), st.integers(0, 10**6))
def test_symmetric_in_alphas(perm, seed):
    s = _random_alpha(random.Random(seed), 12, 4)
    t = SatakeParams(tuple(s.alphas[i] for i in perm))
    assert hecke_eigenvalues(s) == hecke_eigenvalues(t)


@pytest.mark.parametrize("N", [5, 7, 8, 12])
def test_field_fixed_iff_twist_invariant(N):
    rng = random.Random(N)
    for _ in range(5):
        # mix Galois orbits and free values so both outcomes occur
        base = zeta(N) if rng.random() < 0.5 else zeta(N) + zeta(N, N - 1)
        alphas = [base.galois(a) for a in units(N) if rng.random() < 0.5] or [base]
        s = SatakeParams(tuple(alphas))
        F = local_rationality_field(s)
        for a in units(N):
            fixed = all(f.galois(a) == f for f in [x.lift(N) for x in hecke_eigenvalues(s)])
            assert fixed == (a in F.lift(N).H)
            assert fixed == (hecke_eigenvalues(sigma_twist_satake(s, a, N)) == hecke_eigenvalues(s))


def test_field_of_full_orbit_is_rational():
    s = SatakeParams(tuple(zeta(7, a) for a in units(7)))
    assert local_rationality_field(s) == Q


def test_compositum_of_locals():
    fields = [SatakeParams((zeta(3), 1)), SatakeParams((zeta(5), 1))]
    assert rationality_compositum(fields) == CyclotomicSubfield.full(15)


def test_json_round_trip():
    s = SatakeParams((zeta(5), Fraction(1, 2)))
    assert SatakeParams.from_json(s.to_json()).same_multiset(s)

from fractions import Fraction

import pytest

from genusone import fixtures
from genusone.counting import (
    CountingProblem,
    counts_by_psi,
    enumerate_models,
    local_count,
    table1,
)
from genusone.equations import weierstrass
from genusone.fiberdata import fiber
from genusone.localred import I, Istar, II, III, IV, IVstar, IIIstar, IIstar, PhiGroup
from genusone.cli import _table_rows


def _count(kod, cp, n, psi_value=None, orientation=False):
    f = fiber(kod, cp, orientation)
    psi = f.phi.zero() if psi_value is None else f.phi.element(psi_value)
    return enumerate_models(CountingProblem(f, n, psi))


def test_iistar_breakdown():
    br = _count(IIstar, 1, 4)
    assert br.total == 10
    assert br.per_shape == {"1+1+1+1": 1, "2+1+1": 2, "2+2": 3, "3+1": 2, "4": 2}


def test_unique_for_good_and_i1():
    for kod in (I(0), I(1)):
        f = fiber(kod, 1)
        for n in (2, 3, 4):
            assert enumerate_models(CountingProblem(f, n, f.phi.zero())).total == 1


def test_i0star_counts():
    assert _count(Istar(0), 1, 2).total == 2
    assert _count(Istar(0), 1, 3).total == 3
    assert _count(Istar(0), 1, 4).total == 4


def test_table1_examples():
    z2 = PhiGroup("cyclic", 2)
    assert table1(IIIstar, 2, 3, z2.zero()) == 6
    assert table1(IIIstar, 2, 3, z2.element(1)) == 6
    assert table1(I(2), 2, 3, z2.zero()) == 2
    z4 = PhiGroup("cyclic", 4)
    assert table1(I(4), 4, 2, z4.element(1)) == 2
    assert table1(I(4), 4, 2, z4.element(2)) == 3


def test_table1_not_tabulated():
    with pytest.raises(LookupError, match="not tabulated"):
        table1(Istar(0), 4, 3, PhiGroup("klein", 4).zero())
    with pytest.raises(LookupError, match="not tabulated"):
        table1(Istar(0), 2, 2, PhiGroup("klein", 4).zero())


def test_psi_must_be_fixed():
    f = fiber(I(4), 2)
    with pytest.raises(ValueError, match="Galois-fixed"):
        CountingProblem(f, 2, f.phi.element(1))


def test_oracle_agreement_small():
    for kod, cp, m, fib in _table_rows(4):
        for n in (2, 3, 4):
            buckets = counts_by_psi(fib, n)
            for psi in fib.fixed_psis():
                assert buckets[psi.value].total == table1(kod, cp, n, psi), (
                    str(kod), cp, n, str(psi))


def test_psi_independence_where_table_shows_none():
    f = fiber(IIIstar, 2)
    totals = {enumerate_models(CountingProblem(f, 3, e)).total for e in f.phi.elements()}
    assert totals == {6}
    f = fiber(I(6), 2)
    totals = {
        enumerate_models(CountingProblem(f, 3, e)).total for e in f.fixed_psis()
    }
    assert totals == {4}  # m + 1 with m = 3


def test_orientation_invariance():
    for n in (3, 4, 5, 6):
        plain = fiber(I(n), n)
        flipped = fiber(I(n), n, orientation=True)
        for deg in (2, 3, 4):
            a = counts_by_psi(plain, deg)
            b = counts_by_psi(flipped, deg)
            for e in plain.phi.elements():
                assert a[e.value].total == b[(-e).value].total == b[e.value].total


def test_counts_positive_iff_attainable():
    # the identity class is always attainable (take the identity component
    # n times), so every fiber admits at least one model
    for kod, cp, _, fib in _table_rows(3):
        for n in (2, 3, 4):
            assert counts_by_psi(fib, n)[fib.phi.zero().value].total >= 1


def test_local_count_examples():
    E1 = fixtures.EXAMPLE1_CURVE
    assert local_count(E1, 5, 3).total == 6
    assert local_count(E1, 19, 3).total == 2
    assert local_count(fixtures.EXAMPLE2_CURVE, 5, 4).total == 1


def test_local_count_via_point():
    E = weierstrass(1, 0, 0, 0, 5**6)  # split I6
    P = (Fraction(75), Fraction(625))
    psi_direct = local_count(E, 5, 2, P)
    from genusone.localred import component_of_point

    elt = component_of_point(E, 5, P)
    assert psi_direct.total == local_count(E, 5, 2, elt).total
    assert psi_direct.total == table1(I(6), 6, 2, elt)


def test_residue_characteristic_restriction():
    # additive reduction at 3 is out of scope for degrees 3 and 4
    E = weierstrass(0, 0, 0, 0, 9)  # Delta = -16*27*81, additive at 3
    with pytest.raises(ValueError, match="residue characteristic"):
        local_count(E, 3, 3)
    E2 = weierstrass(0, 0, 0, -4, 0)  # additive at 2
    with pytest.raises(ValueError, match="residue characteristic"):
        local_count(E2, 2, 2)
    # multiplicative reduction is allowed at any p
    E3 = weierstrass(1, 0, 0, 0, 8)  # I3 at 2
    assert local_count(E3, 2, 3).total >= 1


def test_breakdown_serialization():
    br = _count(IIstar, 1, 4)
    js = br.to_json()
    assert js["total"] == 10 and js["perShape"]["2+2"] == 3

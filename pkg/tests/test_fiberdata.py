import json
from pathlib import Path

import pytest

from genusone.fiberdata import fiber
from genusone.localred import I, Istar, II, III, IV, IVstar, IIIstar, IIstar

GOLDEN = json.loads((Path(__file__).parent / "data" / "fiber_deltas.json").read_text())


@pytest.mark.parametrize(
    "key,kod,cp",
    [
        ("I1*", Istar(1), 4),
        ("I2*", Istar(2), 4),
        ("I3*", Istar(3), 4),
        ("I4*", Istar(4), 4),
        ("IV*", IVstar, 3),
        ("III*", IIIstar, 2),
        ("II*", IIstar, 1),
    ],
)
def test_delta_tables_match_golden_file(key, kod, cp):
    assert fiber(kod, cp).to_json() == GOLDEN[key]


def test_iistar_example():
    f = fiber(IIstar, 1)
    assert len(f.components) == 9
    assert all(c.delta.is_zero() for c in f.components)
    assert all(a == b for a, b in f.galois)


def test_istar1_example():
    f = fiber(Istar(1), 4)
    assert f.phi.to_json() == {"cyclic": 4}
    chain = f.of_multiplicity(2)
    assert [(c.id, c.delta.value) for c in chain] == [("V-1", 0), ("V0", 2)]
    assert len(f.of_multiplicity(1)) == 4


def test_nonsplit_gon_action():
    f = fiber(I(4), 2)
    assert f.phi.to_json() == {"cyclic": 4}
    fixed = [c.id for c in f.components if f.act(c.id) == c.id]
    assert fixed == ["C0", "C2"]
    assert f.act("C1") == "C3"
    assert f.act_phi(f.phi.element(1)) == f.phi.element(3)
    assert sorted(str(e) for e in f.fixed_psis()) == ["0", "2"]


def test_orientation_relabel():
    f = fiber(I(5), 5, orientation=True)
    assert f.component("C2").delta == f.phi.element(3)


def test_all_supported_fibers_validate():
    # the constructor asserts delta_1 bijectivity, Galois/delta equivariance,
    # the fixed-component count and the multiplicity multiset
    for n in range(1, 9):
        fiber(I(n), n)
        fiber(I(n), 2 if n % 2 == 0 else 1)
    fiber(I(0), 1)
    for n in range(0, 9):
        for cp in (2, 4):
            fiber(Istar(n), cp)
    fiber(Istar(0), 1)
    for kod, cps in ((II, (1,)), (III, (2,)), (IV, (1, 3)),
                     (IVstar, (1, 3)), (IIIstar, (2,)), (IIstar, (1,))):
        for cp in cps:
            fiber(kod, cp)


def test_fixed_components_have_fixed_deltas():
    for f in (fiber(Istar(0), 1), fiber(Istar(3), 2), fiber(IVstar, 1), fiber(I(6), 2)):
        for c in f.components:
            if f.act(c.id) == c.id:
                assert f.act_phi(c.delta) == c.delta


def test_inconsistent_pairs_rejected():
    for kod, cp in [(III, 1), (IIIstar, 1), (IV, 2), (Istar(1), 3), (I(4), 3),
                    (II, 2), (IIstar, 3), (Istar(2), 1)]:
        with pytest.raises(ValueError, match="inconsistent"):
            fiber(kod, cp)


def test_istar_chain_structure():
    # the chain alternates: delta_2 vanishes on V_l for odd l and is the
    # order-2 class for even l, for every chain length
    for n in range(0, 7):
        f = fiber(Istar(n), 4)
        order2 = f.phi.element((1, 1)) if n % 2 == 0 else f.phi.element(2)
        for c in f.of_multiplicity(2):
            l = int(c.id[1:])
            assert c.delta == (f.phi.zero() if l % 2 else order2)

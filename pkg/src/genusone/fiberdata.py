"""Static combinatorial model of the special fiber for each Kodaira type.

For every type the fiber is a list of components with multiplicities, each
carrying its class in the component group: delta_1 labels the multiplicity-1
components bijectively, and delta_m for m >= 2 records where the Galois-orbit
sum of a degree-m point over that component lands.  The Galois action is
stored as a permutation of component ids together with the automorphism it
induces on the component group.

Values for the multiplicity >= 2 components:

  I_n* chain V_-1..V_{n-1}:  delta_2(V_l) = 0 for odd l, and the order-2
      element (2 in Z/4, (1,1) in the Klein group) for even l;
  IV*:  delta_2(T0,T1,T2) = 0,2,1 and delta_3(L0) = 0;
  III*: delta_2(T0,T1,T2) = 0,0,1, delta_3(L0,L1) = 0,1, delta_4 = 0;
  II*:  every delta vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from genusone.localred import KodairaType, PhiElement, PhiGroup


@dataclass(frozen=True)
class Component:
    id: str
    multiplicity: int
    delta: PhiElement


@dataclass(frozen=True)
class SpecialFiber:
    kodaira: KodairaType
    cp: int
    phi: PhiGroup
    components: tuple[Component, ...]
    galois: tuple[tuple[str, str], ...]  # permutation of component ids
    galois_phi: tuple[tuple[object, object], ...]  # induced map on Phi values

    def __post_init__(self):
        self._validate()

    # -- structure ---------------------------------------------------------

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def of_multiplicity(self, m: int) -> list[Component]:
        return [c for c in self.components if c.multiplicity == m]

    def act(self, cid: str) -> str:
        return dict(self.galois)[cid]

    def act_phi(self, e: PhiElement) -> PhiElement:
        table = dict(self.galois_phi)
        return PhiElement(self.phi, table[e.value])

    def fixed_psis(self) -> list[PhiElement]:
        return [e for e in self.phi.elements() if self.act_phi(e) == e]

    def is_fixed_tuple(self, ids: tuple[str, ...]) -> bool:
        act = dict(self.galois)
        return tuple(sorted(act[c] for c in ids)) == tuple(sorted(ids))

    # -- checks ------------------------------------------------------------

    def _validate(self):
        act = dict(self.galois)
        assert sorted(act) == sorted(act.values()) == sorted(c.id for c in self.components)
        mult1 = self.of_multiplicity(1)
        # delta_1 is a bijection onto Phi
        assert sorted(str(c.delta) for c in mult1) == sorted(
            str(e) for e in self.phi.elements()
        )
        # Galois preserves multiplicity and commutes with delta
        for c in self.components:
            img = self.component(act[c.id])
            assert img.multiplicity == c.multiplicity
            assert img.delta == self.act_phi(c.delta)
        # the Tamagawa number counts Galois-fixed multiplicity-1 components
        assert sum(1 for c in mult1 if act[c.id] == c.id) == self.cp
        # multiplicity multiset of the Kodaira fiber
        assert self._mult_multiset() == _expected_multiplicities(self.kodaira)

    def _mult_multiset(self):
        out: dict[int, int] = {}
        for c in self.components:
            out[c.multiplicity] = out.get(c.multiplicity, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "kodaira": str(self.kodaira),
            "cp": self.cp,
            "phi": self.phi.to_json(),
            "components": [
                {"id": c.id, "mult": c.multiplicity, "delta": c.delta.to_json()}
                for c in self.components
            ],
            "galois": {a: b for a, b in self.galois},
        }


def _expected_multiplicities(k: KodairaType) -> dict[int, int]:
    if k.kind == "I":
        return {1: max(k.n, 1)}
    if k.kind == "I*":
        return {1: 4, 2: k.n + 1}
    return {
        "II": {1: 1},
        "III": {1: 2},
        "IV": {1: 3},
        "IV*": {1: 3, 2: 3, 3: 1},
        "III*": {1: 2, 2: 3, 3: 2, 4: 1},
        "II*": {1: 1, 2: 2, 3: 2, 4: 2, 5: 1, 6: 1},
    }[k.kind]


def _id_perm(ids):
    return tuple((i, i) for i in ids)


def _phi_id(phi: PhiGroup):
    return tuple((e.value, e.value) for e in phi.elements())


def _phi_neg(phi: PhiGroup):
    return tuple((e.value, (-e).value) for e in phi.elements())


def fiber(kodaira: KodairaType, cp: int, orientation: bool = False) -> SpecialFiber:
    """The special fiber for a (type, Tamagawa number) pair.

    `orientation` relabels a cyclic gon by i -> -i; counting results are
    invariant under it.
    """
    kind, n = kodaira.kind, kodaira.n
    if kind == "I":
        return _fiber_gon(kodaira, cp, orientation)
    if kind == "I*":
        return _fiber_star(kodaira, cp)
    if kind == "II" or kind == "II*":
        if cp != 1:
            raise ValueError(f"inconsistent (type, c_p): ({kodaira}, {cp})")
        return _fiber_simple(kodaira, PhiGroup("cyclic", 1), cp)
    if kind == "III" or kind == "III*":
        # only the trivial action commutes with delta_1 on a group of order 2
        if cp != 2:
            raise ValueError(f"inconsistent (type, c_p): ({kodaira}, {cp})")
        return _fiber_simple(kodaira, PhiGroup("cyclic", 2), cp)
    if kind == "IV" or kind == "IV*":
        if cp not in (1, 3):
            raise ValueError(f"inconsistent (type, c_p): ({kodaira}, {cp})")
        return _fiber_simple(kodaira, PhiGroup("cyclic", 3), cp)
    raise ValueError(f"unknown type {kodaira}")


def _fiber_gon(kodaira: KodairaType, cp: int, orientation: bool) -> SpecialFiber:
    n = max(kodaira.n, 1)
    phi = PhiGroup("cyclic", n)
    label = (lambda i: (-i) % n) if orientation else (lambda i: i)
    comps = tuple(Component(f"C{i}", 1, phi.element(label(i))) for i in range(n))
    split_cp = n
    nonsplit_cp = 2 if n % 2 == 0 else 1
    if cp == split_cp:
        return SpecialFiber(kodaira, cp, phi, comps, _id_perm([c.id for c in comps]), _phi_id(phi))
    if cp == nonsplit_cp:
        perm = tuple((f"C{i}", f"C{(-i) % n}") for i in range(n))
        return SpecialFiber(kodaira, cp, phi, comps, perm, _phi_neg(phi))
    raise ValueError(f"inconsistent (type, c_p): ({kodaira}, {cp})")


def _fiber_simple(kodaira: KodairaType, phi: PhiGroup, cp: int) -> SpecialFiber:
    """Types whose components are forced once (type, c_p) is known."""
    kind = kodaira.kind
    if kind in ("II", "III", "IV"):
        comps = tuple(
            Component(f"C{i}", 1, phi.element(i)) for i in range(phi.order)
        )
    elif kind == "IV*":
        comps = (
            Component("G0", 1, phi.element(0)),
            Component("G1", 1, phi.element(1)),
            Component("G2", 1, phi.element(2)),
            Component("T0", 2, phi.element(0)),
            Component("T1", 2, phi.element(2)),
            Component("T2", 2, phi.element(1)),
            Component("L0", 3, phi.element(0)),
        )
    elif kind == "III*":
        comps = (
            Component("G0", 1, phi.element(0)),
            Component("G1", 1, phi.element(1)),
            Component("T0", 2, phi.element(0)),
            Component("T1", 2, phi.element(0)),
            Component("T2", 2, phi.element(1)),
            Component("L0", 3, phi.element(0)),
            Component("L1", 3, phi.element(1)),
            Component("U0", 4, phi.element(0)),
        )
    else:  # II*
        multiplicities = {"G0": 1, "T0": 2, "T1": 2, "L0": 3, "L1": 3,
                          "U0": 4, "U1": 4, "F0": 5, "S0": 6}
        comps = tuple(
            Component(cid, m, phi.element(0)) for cid, m in multiplicities.items()
        )
    ids = [c.id for c in comps]
    if kind in ("IV", "IV*") and cp == 1:
        # conjugate pair of non-identity components; i -> -i on Z/3
        swap = {"C1": "C2", "C2": "C1"} if kind == "IV" else {
            "G1": "G2", "G2": "G1", "T1": "T2", "T2": "T1"}
        perm = tuple((i, swap.get(i, i)) for i in ids)
        return SpecialFiber(kodaira, cp, phi, comps, perm, _phi_neg(phi))
    return SpecialFiber(kodaira, cp, phi, comps, _id_perm(ids), _phi_id(phi))


def _fiber_star(kodaira: KodairaType, cp: int) -> SpecialFiber:
    n = kodaira.n
    klein = n % 2 == 0
    phi = PhiGroup("klein", 4) if klein else PhiGroup("cyclic", 4)
    order2 = phi.element((1, 1)) if klein else phi.element(2)
    far = [phi.element((1, 0)), phi.element((0, 1))] if klein else [
        phi.element(1), phi.element(3)]
    mult1 = (
        Component("G0", 1, phi.zero()),
        Component("G1", 1, order2),
        Component("G2", 1, far[0]),
        Component("G3", 1, far[1]),
    )
    chain = tuple(
        Component(f"V{l}", 2, phi.zero() if l % 2 else order2)
        for l in range(-1, n)
    )
    comps = mult1 + chain
    ids = [c.id for c in comps]
    if n == 0 and cp == 1:
        # non-identity components cycled by a cubic Frobenius orbit
        perm = {"G1": "G2", "G2": "G3", "G3": "G1"}
        vals = {(0, 0): (0, 0), (1, 1): (1, 0), (1, 0): (0, 1), (0, 1): (1, 1)}
        return SpecialFiber(
            kodaira, cp, phi, comps,
            tuple((i, perm.get(i, i)) for i in ids),
            tuple(vals.items()),
        )
    if cp == 2:
        perm = {"G2": "G3", "G3": "G2"}
        if klein:
            phimap = (((0, 0), (0, 0)), ((1, 1), (1, 1)), ((1, 0), (0, 1)), ((0, 1), (1, 0)))
        else:
            phimap = _phi_neg(phi)
        return SpecialFiber(
            kodaira, cp, phi, comps,
            tuple((i, perm.get(i, i)) for i in ids),
            phimap,
        )
    if cp == 4:
        return SpecialFiber(kodaira, cp, phi, comps, _id_perm(ids), _phi_id(phi))
    raise ValueError(f"inconsistent (type, c_p): ({kodaira}, {cp})")

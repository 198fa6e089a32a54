"""Conjugation by right translations: orbits, stabilizers, partitions."""

import pytest

from hgslab import (
    build_group,
    enumerate_hgs,
    lambda_structure,
    opposite,
    opposite_conjugate_commute,
    rho_conjugate,
    rho_orbit,
    rho_partition,
    rho_structure,
    same_conjugate,
)
from hgslab.verify import metacyclic_base_structure


def test_identity_conjugation_is_trivial(m733):
    N = metacyclic_base_structure(m733)
    assert rho_conjugate(N, 0).perms.element_set == N.perms.element_set


def test_conjugation_composes(m733, d4):
    for G, N in [(m733, metacyclic_base_structure(m733)),
                 (d4, lambda_structure(d4))]:
        for g in range(G.order):
            for h in range(G.order):
                two_step = rho_conjugate(rho_conjugate(N, g), h)
                direct = rho_conjugate(N, G.table[h][g])
                assert two_step.perms.element_set == direct.perms.element_set


def test_lambda_structure_is_always_fixed(d4, s3):
    for G in (d4, s3):
        assert rho_orbit(lambda_structure(G)).size == 1
        assert rho_orbit(rho_structure(G)).size == 1


def test_orbit_size_divides_group_order(d4_inventory, d4):
    for N in d4_inventory:
        orb = rho_orbit(N)
        assert d4.order % orb.size == 0
        assert orb.size * len(orb.stabilizer.elements) == d4.order


def test_center_lies_in_every_stabilizer(d4, d4_inventory):
    center = set(d4.center())
    for N in d4_inventory:
        assert center <= set(rho_orbit(N).stabilizer.elements)


def test_orbit_carrier_reproduces_members(m733):
    orb = rho_orbit(metacyclic_base_structure(m733))
    for g, member in zip(orb.carrier, orb.members):
        assert rho_conjugate(orb.base, g).perms.element_set == \
            member.perms.element_set


def test_same_conjugate(m733):
    orb = rho_orbit(metacyclic_base_structure(m733))
    a, b = orb.members[0], orb.members[1]
    g = same_conjugate(a, b)
    assert g is not None
    assert rho_conjugate(a, g).perms.element_set == b.perms.element_set
    lam = lambda_structure(m733)
    assert same_conjugate(a, lam) is None  # different types, never conjugate


def test_partition_covers_inventory(s3_inventory):
    orbits = rho_partition(s3_inventory)
    assert sorted(len(o) for o in orbits) == [1, 1, 3]
    assert sum(len(o) for o in orbits) == len(s3_inventory)


def test_partition_rejects_unclosed_collection(s3_inventory):
    moving = [N for N in s3_inventory if rho_orbit(N).size > 1]
    with pytest.raises(ValueError):
        rho_partition(moving[:1])


def test_metacyclic_partition_frozen(m733):
    orbits = rho_partition(enumerate_hgs(m733))
    assert sorted(len(o) for o in orbits) == [1, 1, 7, 7, 7]


def test_opposite_commutes_with_conjugation_sample(m733):
    N = metacyclic_base_structure(m733)
    for g in range(m733.order):
        assert opposite_conjugate_commute(N, g)
        lhs = opposite(rho_conjugate(N, g))
        rhs = rho_conjugate(opposite(N), g)
        assert lhs.perms.element_set == rhs.perms.element_set

import random

import pytest

from pezzo.errors import (
    DomainError,
    ParityError,
    RankMismatchError,
    UnsupportedLatticeError,
)
from pezzo.lattice import (
    DEG6,
    DEG6T,
    DEG7,
    DEG8,
    FAMILIES,
    SURFACES,
    Q,
    QX2,
    ThreefoldFamily,
    constraint_count,
    fiber,
    genus,
    monodromy,
    pair,
    push_forward,
    quadric_to_plane,
    singular_fiber_count,
)


def test_pair_examples():
    assert pair(Q, (1, 0), (0, 1)) == 1
    assert pair(Q, (1, -1), (1, -1)) == -2
    assert pair(QX2, (3, 3, 1, 2), (3, 3, 1, 2)) == 13


def test_pair_symmetric_and_rank_checked():
    assert pair(QX2, (1, 2, 0, 1), (3, 1, 1, 0)) == pair(QX2, (3, 1, 1, 0), (1, 2, 0, 1))
    with pytest.raises(RankMismatchError):
        pair(Q, (1, 0, 0), (0, 1))


def test_lattice_degrees_and_cycles():
    for surface in SURFACES.values():
        base = 9 if surface.side == "p2" else 8
        assert surface.degree == base - surface.blowups
        s = surface.vanishing_cycle
        if s is not None:
            assert pair(surface, s, s) == -2
            assert pair(surface, surface.canonical, s) == 0
            assert pair(surface, surface.ref_class, s) == -1


def test_constraint_count():
    assert constraint_count(DEG8, (1,)) == 2
    assert constraint_count(Q, (1, 0)) == 1
    assert constraint_count(DEG6, (3, 3, 3)) == 9
    assert constraint_count(QX2, (3, 3, 1, 2)) == 8


def test_constraint_count_parity_error():
    odd = ThreefoldFamily("odd", 1, Q, ((1, 1),), 1, (1,))
    with pytest.raises(ParityError):
        constraint_count(odd, (1,))


def test_genus_examples():
    assert genus(Q, (1, 0)) == 0
    assert genus(Q, (2, 2)) == 1
    assert genus(QX2, (3, 3, 1, 2)) == 3


def test_monodromy_examples():
    assert monodromy(Q, (3, 1)) == (1, 3)
    assert monodromy(Q, (1, -1)) == (-1, 1)
    assert monodromy(QX2, (3, 3, 1, 2)) == (3, 3, 2, 1)
    with pytest.raises(UnsupportedLatticeError):
        monodromy(SURFACES["p2"], (3,))


def test_monodromy_involution_and_invariants():
    rng = random.Random(7)
    for _ in range(200):
        surface = rng.choice([SURFACES["q"], SURFACES["qx1"], SURFACES["qx2"]])
        d = tuple(rng.randrange(-4, 7) for _ in range(surface.rank))
        t = monodromy(surface, d)
        s = surface.vanishing_cycle
        assert monodromy(surface, t) == d
        assert pair(surface, t, s) == -pair(surface, d, s)
        assert genus(surface, t) == genus(surface, d)
        assert constraint_count(surface, t) == constraint_count(surface, d)


def test_push_forward_examples():
    assert push_forward(DEG8, (2, 3)) == (5,)
    assert push_forward(DEG7, (2, 1, 1)) == (3, 1)
    assert push_forward(DEG6, (3, 3, 1, 2)) == (3, 3, 3)
    assert push_forward(DEG6T, (3, 3, 1, 2)) == (3, 3)


def test_push_forward_kills_vanishing_cycle():
    for family in FAMILIES.values():
        image = push_forward(family, family.surface.vanishing_cycle)
        assert all(x == 0 for x in image)


def test_push_forward_monodromy_compatible():
    rng = random.Random(11)
    for _ in range(200):
        family = rng.choice(list(FAMILIES.values()))
        d = tuple(rng.randrange(-4, 7) for _ in range(family.surface.rank))
        assert push_forward(family, monodromy(family.surface, d)) == push_forward(family, d)


def test_fiber_examples():
    assert set(fiber(DEG8, (1,))) == {(1, 0), (0, 1)}
    assert set(fiber(DEG6, (2, 2, 1))) == {
        (2, 2, 0, 3), (2, 2, 1, 2), (2, 2, 2, 1), (2, 2, 3, 0)
    }
    # effectivity cutoffs leave only classes with vanishing invariants here
    members = fiber(DEG6, (3, 1, 1))
    assert {(3, 1, 2, 1), (3, 1, 1, 2)} <= set(members)
    assert fiber(DEG6, (1, 1, 5)) == []
    assert fiber(DEG8, (-1,)) == []


def test_fiber_members_push_and_count():
    rng = random.Random(3)
    checked = 0
    while checked < 200:
        family = rng.choice(list(FAMILIES.values()))
        if family.id == "deg8":
            d = (rng.randrange(1, 8),)
        elif family.id == "deg7":
            d = (rng.randrange(1, 8), rng.randrange(0, 6))
        elif family.id == "deg6":
            d = tuple(rng.randrange(0, 6) for _ in range(3))
        else:
            d = (rng.randrange(0, 5), rng.randrange(0, 7))
        members = fiber(family, d)
        k_d = constraint_count(family, d)
        for member in members:
            assert push_forward(family, member) == d
            assert constraint_count(family.surface, member) == k_d - 1
            checked += 1
        # closed under monodromy; even size unless a member is fixed
        as_set = set(members)
        assert {monodromy(family.surface, m) for m in members} == as_set
        s = family.surface.vanishing_cycle
        if all(pair(family.surface, m, s) != 0 for m in members):
            assert len(members) % 2 == 0


def test_quadric_to_plane_examples():
    assert quadric_to_plane((3, 3, 1, 2)) == (5, 2, 2, 2)
    assert quadric_to_plane((1, 2, 0, 0)) == (3, 1, 2, 0)
    assert quadric_to_plane((2, 2, 1, 2)) == (3, 1, 1, 2)


def test_quadric_to_plane_preserves_counts():
    plane = SURFACES["p2x3"]
    rng = random.Random(23)
    for _ in range(200):
        d = tuple(rng.randrange(-5, 9) for _ in range(4))
        image = quadric_to_plane(d)
        assert constraint_count(plane, image) == constraint_count(QX2, d)
        assert genus(plane, image) == genus(QX2, d)
        assert pair(plane, image, image) == pair(QX2, d, d)


def test_quadric_to_plane_injective_on_sample():
    seen = {}
    for a in range(4):
        for b in range(4):
            for al in range(-2, 3):
                for be in range(-2, 3):
                    image = quadric_to_plane((a, b, al, be))
                    assert image not in seen
                    seen[image] = (a, b, al, be)


def test_singular_fiber_count():
    for degree in (5, 6, 7, 8):
        assert singular_fiber_count(degree) == 4
    with pytest.raises(DomainError):
        singular_fiber_count(4)
    with pytest.raises(DomainError):
        singular_fiber_count(9)

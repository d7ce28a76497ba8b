"""Integer homology lattices of the supported surfaces and threefolds.

Class vectors are plain tuples of ints.  Two coordinate families are used:

* plane side ``(d; a1, .., ak)`` for the plane and its blow-ups at up to
  three points, meaning ``d*L - sum(ai * Fi)``;
* quadric side ``(a, b)``, ``(a, b; k)``, ``(a, b; alpha, beta)`` for the
  product of two lines and its blow-ups at one or two points, meaning
  ``a*L1 + b*L2 - k*E`` (resp. ``- alpha*E1 - beta*E2``).

Exceptional multiplicities are stored positively: the tuple entry ``alpha``
stands for the coefficient of ``-E1``.  The Gram matrices below carry the
corresponding signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError, ParityError, RankMismatchError, UnsupportedLatticeError

ClassVector = tuple  # tuple of ints, length = lattice rank


def _vec(v: Sequence[int]) -> ClassVector:
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class SurfaceLattice:
    """Intersection lattice of one of the seven supported surfaces."""

    id: str
    rank: int
    gram: tuple            # rank x rank, tuple of tuples
    canonical: ClassVector
    vanishing_cycle: Optional[ClassVector] = None
    ref_class: Optional[ClassVector] = None
    blowups: int = 0
    side: str = "p2"       # "p2" or "q": which minimal model the basis refines

    def check(self, d: Sequence[int]) -> ClassVector:
        d = _vec(d)
        if len(d) != self.rank:
            raise RankMismatchError(
                f"{self.id}: expected rank {self.rank}, got vector of length {len(d)}"
            )
        return d

    @property
    def anticanonical(self) -> ClassVector:
        return tuple(-x for x in self.canonical)

    @property
    def degree(self) -> int:
        return pair(self, self.canonical, self.canonical)


@dataclass(frozen=True)
class ThreefoldFamily:
    """One of the four (real) threefold settings handled by the engine."""

    id: str
    h2_rank: int
    surface: SurfaceLattice
    psi_matrix: tuple        # h2_rank x surface.rank
    anti_invariant_rank: int
    c1_row: tuple            # pairing of c1 with a class tuple

    def check(self, d: Sequence[int]) -> ClassVector:
        d = _vec(d)
        if len(d) != self.h2_rank:
            raise RankMismatchError(
                f"{self.id}: expected rank {self.h2_rank}, got vector of length {len(d)}"
            )
        return d


def _diag_gram(rank: int) -> tuple:
    # plane side: L^2 = 1, Fi^2 = -1, stored multiplicities positive
    return tuple(
        tuple((1 if i == j == 0 else -1 if i == j else 0) for j in range(rank))
        for i in range(rank)
    )


def _q_gram(rank: int) -> tuple:
    # quadric side: L1.L2 = 1, Ei^2 = -1, stored multiplicities positive
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            if {i, j} == {0, 1}:
                row.append(1)
            elif i == j and i >= 2:
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


P2 = SurfaceLattice("p2", 1, ((1,),), (-3,), side="p2")
P2X1 = SurfaceLattice("p2x1", 2, _diag_gram(2), (-3, -1), blowups=1, side="p2")
P2X2 = SurfaceLattice("p2x2", 3, _diag_gram(3), (-3, -1, -1), blowups=2, side="p2")
P2X3 = SurfaceLattice("p2x3", 4, _diag_gram(4), (-3, -1, -1, -1), blowups=3, side="p2")
Q = SurfaceLattice(
    "q", 2, _q_gram(2), (-2, -2),
    vanishing_cycle=(1, -1), ref_class=(1, 0), side="q",
)
QX1 = SurfaceLattice(
    "qx1", 3, _q_gram(3), (-2, -2, -1),
    vanishing_cycle=(1, -1, 0), ref_class=(1, 0, 0), blowups=1, side="q",
)
QX2 = SurfaceLattice(
    "qx2", 4, _q_gram(4), (-2, -2, -1, -1),
    vanishing_cycle=(0, 0, 1, -1), ref_class=(0, 0, 0, -1), blowups=2, side="q",
)

SURFACES = {s.id: s for s in (P2, P2X1, P2X2, P2X3, Q, QX1, QX2)}

DEG8 = ThreefoldFamily(
    "deg8", 1, Q, ((1, 1),), 1, (4,),
)
DEG7 = ThreefoldFamily(
    "deg7", 2, QX1, ((1, 1, 0), (0, 0, 1)), 2, (4, -2),
)
DEG6 = ThreefoldFamily(
    "deg6", 3, QX2, ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, -1, -1)), 3, (2, 2, 2),
)
DEG6T = ThreefoldFamily(
    "deg6t", 2, QX2, ((1, 0, 0, 0), (1, 1, -1, -1)), 2, (4, 2),
)

FAMILIES = {f.id: f for f in (DEG8, DEG7, DEG6, DEG6T)}


def pair(lattice: SurfaceLattice, d1: Sequence[int], d2: Sequence[int]) -> int:
    """Intersection number of two classes, via the lattice Gram matrix."""
    d1 = lattice.check(d1)
    d2 = lattice.check(d2)
    g = lattice.gram
    return sum(d1[i] * g[i][j] * d2[j] for i in range(lattice.rank) for j in range(lattice.rank))


def constraint_count(space, d: Sequence[int]) -> int:
    """Number of point constraints fixing rational curves in the class.

    Surfaces: c1.D - 1.  Threefolds: c1.d / 2 (raises ParityError if odd).
    """
    if isinstance(space, SurfaceLattice):
        d = space.check(d)
        return pair(space, space.anticanonical, d) - 1
    if isinstance(space, ThreefoldFamily):
        d = space.check(d)
        c1d = sum(c * x for c, x in zip(space.c1_row, d))
        if c1d % 2:
            raise ParityError(f"{space.id}: c1.d = {c1d} is odd")
        return c1d // 2
    raise DomainError(f"unsupported space {space!r}")


def genus(lattice: SurfaceLattice, d: Sequence[int]) -> int:
    """Arithmetic genus (K.D + D^2 + 2) / 2 of the class."""
    d = lattice.check(d)
    val = pair(lattice, lattice.canonical, d) + pair(lattice, d, d) + 2
    if val % 2:
        raise ParityError(f"{lattice.id}: K.D + D^2 + 2 = {val} is odd")
    return val // 2


def monodromy(lattice: SurfaceLattice, d: Sequence[int]) -> ClassVector:
    """Reflection T(D) = D + (D.S) S in the vanishing cycle; an involution."""
    if lattice.vanishing_cycle is None:
        raise UnsupportedLatticeError(f"{lattice.id} carries no vanishing cycle")
    d = lattice.check(d)
    s = lattice.vanishing_cycle
    ds = pair(lattice, d, s)
    return tuple(x + ds * y for x, y in zip(d, s))


def push_forward(family: ThreefoldFamily, d: Sequence[int]) -> ClassVector:
    """Image of a surface class in the threefold (inclusion pushforward)."""
    d = family.surface.check(d)
    return tuple(sum(row[j] * d[j] for j in range(len(d))) for row in family.psi_matrix)


def fiber(family: ThreefoldFamily, d: Sequence[int]) -> list:
    """Surface classes over a threefold class with possibly nonzero invariants.

    The list is closed under the monodromy involution; classes that are not
    effective at all yield the empty list.
    """
    d = family.check(d)
    if family.id == "deg8":
        (deg,) = d
        if deg < 1:
            return []
        return [(a, deg - a) for a in range(deg + 1)]
    if family.id == "deg7":
        deg, k = d
        if deg < 1 or k < 0:
            return []
        return [(a, deg - a, k) for a in range(deg + 1)]
    if family.id == "deg6":
        a, b, c = d
        if a < 0 or b < 0 or c < 0:
            return []
        if a == 0 and b == 0:
            # only multiples of the two exceptional classes push to (0, 0, c)
            return [(0, 0, -t, t - c) for t in range(c + 1)] if c >= 1 else []
        s = a + b - c
        if s < 0:
            return []
        return [(a, b, alpha, s - alpha) for alpha in range(s + 1)]
    if family.id == "deg6t":
        a, c = d
        if a < 0:
            return []
        if a == 0:
            return [(0, 0, -t, t - c) for t in range(c + 1)] if c >= 1 else []
        s = 2 * a - c
        if s < 0:
            return []
        return [(a, a, alpha, s - alpha) for alpha in range(s + 1)]
    raise DomainError(f"unknown family {family.id}")


def quadric_to_plane(d: Sequence[int]) -> ClassVector:
    """Rewrite a class on the twice-blown quadric in the thrice-blown plane basis.

    (a, b; alpha, beta) -> (a + b - alpha; a - alpha, b - alpha, beta).
    Injective; preserves intersection numbers, genus and constraint counts.
    """
    d = QX2.check(d)
    a, b, alpha, beta = d
    return (a + b - alpha, a - alpha, b - alpha, beta)


# Euler characteristics of the ambient threefolds, by surface degree.
_CHI_X = {5: 10, 6: 8, 7: 6, 8: 4}


def singular_fiber_count(degree: int) -> int:
    """Number of singular members of a generic half-anticanonical pencil."""
    if degree not in _CHI_X:
        raise DomainError(f"degree {degree} outside supported range 5..8")
    return 24 - 2 * degree - _CHI_X[degree]

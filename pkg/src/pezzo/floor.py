"""Tropical floor-diagram enumeration over h-transverse Newton polygons.

A polygon is sliced into lattice-height-1 slabs; a diagram has one floor per
slab, a tree of weighted bounded elevators between floors, and weight-1
unbounded elevators below / above.  Writing ``l_j`` and ``r_j`` for the
horizontal displacement of the left and right boundary across slab j (going
down), each floor must satisfy

    (weight hanging below floor j) - (weight above floor j) = r_j - l_j.

Markings are total orders of the floors, bounded elevators and unbounded
elevators compatible with vertical position; a diagram contributes its
marking count times a per-edge multiplicity: w(e)^2 for the complex count.
For totally real configurations the multiplicity is 0 on any even weight and
+1 otherwise (the two endpoint signs of a bounded elevator cancel); this
convention is pinned by the plane values 8, 240, 18264 in the tests.
"""

from __future__ import annotations

import heapq
import itertools
from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .errors import DegeneratePolygonError, DomainError
from .lattice import SURFACES


@dataclass(frozen=True)
class PolygonClass:
    """Newton polygon of a surface class, with its slab data."""

    surface_id: str
    class_vec: tuple
    vertices: tuple          # lattice points, counterclockwise
    slabs: tuple             # (left_step, right_step) per slab, bottom to top
    d_b: int                 # bottom edge length: unbounded weight below
    d_t: int                 # top edge length: unbounded weight above

    @property
    def height(self) -> int:
        return len(self.slabs)


@dataclass(frozen=True)
class FloorDiagram:
    floors: int
    divergences: tuple       # required below-minus-above weight per floor
    edges: tuple             # (lower, upper, weight)
    down: tuple              # unbounded weight-1 ends below each floor
    up: tuple                # unbounded weight-1 ends above each floor
    markings: int
    decorations: int = 1     # boundary-slant assignments sharing this shape

    def complex_multiplicity(self) -> int:
        out = 1
        for _, _, w in self.edges:
            out *= w * w
        return out

    def real_multiplicity(self) -> int:
        for _, _, w in self.edges:
            if w % 2 == 0:
                return 0
        return 1

    def dump_line(self) -> str:
        edges = ",".join(f"{i}-{j}:{w}" for i, j, w in self.edges) or "-"
        down = ",".join(map(str, self.down))
        up = ",".join(map(str, self.up))
        divs = ",".join(map(str, self.divergences))
        return (
            f"floors={self.floors} div={divs} edges={edges} down={down} up={up} "
            f"decorations={self.decorations} markings={self.markings}"
        )


def _truncated_rectangle(surface_id, class_vec, a, b, alpha, beta) -> PolygonClass:
    """a x b rectangle with bottom-left cut alpha and top-right cut beta."""
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise DegeneratePolygonError(f"{surface_id}{class_vec}: empty rectangle")
    if alpha < 0 or beta < 0 or alpha > min(a, b) or beta > min(a, b):
        raise DegeneratePolygonError(
            f"{surface_id}{class_vec}: corner cuts ({alpha},{beta}) overflow {a}x{b}"
        )
    if b == 0 or (a >= 1 and b > a):
        # transpose so the slab direction is the short one (counts agree)
        a, b = b, a
    slabs = tuple(
        (1 if j + 1 <= alpha else 0, 1 if b - j <= beta else 0) for j in range(b)
    )
    verts = [(alpha, 0), (a, 0), (a, b - beta), (a - beta, b), (0, b), (0, alpha)]
    dedup = tuple(v for i, v in enumerate(verts) if v != verts[(i + 1) % len(verts)])
    return PolygonClass(surface_id, tuple(class_vec), dedup, slabs, a - alpha, a - beta)


def polygon_of(lattice, d: Sequence[int]) -> PolygonClass:
    """Newton polygon dual to a class on one of the toric surfaces."""
    if isinstance(lattice, str):
        lattice = SURFACES[lattice]
    d = lattice.check(d)
    if lattice.id == "p2":
        (deg,) = d
        if deg < 1:
            raise DegeneratePolygonError(f"p2({deg}): degree must be positive")
        slabs = tuple((0, 1) for _ in range(deg))
        return PolygonClass("p2", d, ((0, 0), (deg, 0), (0, deg)), slabs, deg, 0)
    if lattice.id == "q":
        a, b = d
        return _truncated_rectangle("q", d, a, b, 0, 0)
    if lattice.id == "qx1":
        a, b, k = d
        return _truncated_rectangle("qx1", d, a, b, 0, k)
    if lattice.id == "qx2":
        a, b, alpha, beta = d
        return _truncated_rectangle("qx2", d, a, b, alpha, beta)
    raise DomainError(f"no Newton polygon for surface {lattice.id!r}")


# -- diagram enumeration -------------------------------------------------------

def _prufer_tree(code, n):
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return tuple(sorted(edges))


def _spanning_trees(n: int) -> Iterator[tuple]:
    if n == 1:
        yield ()
    elif n == 2:
        yield ((0, 1),)
    else:
        for code in itertools.product(range(n), repeat=n - 2):
            yield _prufer_tree(code, n)


def _weightings(tree, divs, d_b, d_t) -> Iterator[tuple]:
    """Assign edge weights; yield (weights, t) with t_j = dn_j - up_j required."""
    n = len(divs)
    below = defaultdict(list)   # upper floor -> edge indices
    above = defaultdict(list)   # lower floor -> edge indices
    for idx, (i, j) in enumerate(tree):
        below[j].append(idx)
        above[i].append(idx)
    wmax = d_b + d_t + sum(abs(v) for v in divs)
    weights = [0] * len(tree)
    t = [0] * n

    def walk(floor, need_dn, need_up):
        if floor < 0:
            yield tuple(weights), tuple(t)
            return
        todo = below[floor]

        def assign(pos):
            if pos == len(todo):
                tj = divs[floor]
                tj -= sum(weights[idx] for idx in below[floor])
                tj += sum(weights[idx] for idx in above[floor])
                t[floor] = tj
                nd = need_dn + max(tj, 0)
                nu = need_up + max(-tj, 0)
                if nd <= d_b and nu <= d_t:
                    yield from walk(floor - 1, nd, nu)
                return
            for w in range(1, wmax + 1):
                weights[todo[pos]] = w
                yield from assign(pos + 1)

        yield from assign(0)

    yield from walk(n - 1, 0, 0)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _marking_count(n_floors: int, items) -> int:
    """Count admissible total orders of marked objects around the floor chain.

    items: (lo, hi, count) groups of identical objects, each to be placed in
    one of the gaps lo..hi between consecutive floors (gap g precedes floor
    g; gap n_floors is above every floor).
    """
    arrivals = defaultdict(lambda: defaultdict(int))
    denom = 1
    for lo, hi, c in items:
        if c:
            arrivals[lo][hi] += c
            denom *= factorial(c)
    states = {(): 1}
    for g in range(n_floors + 1):
        incoming = arrivals.get(g, {})
        nxt = defaultdict(int)
        for state, ways in states.items():
            pool = dict(state)
            for hi, c in incoming.items():
                pool[hi] = pool.get(hi, 0) + c
            must = pool.pop(g, 0)
            hs = sorted(pool)

            def place(idx, taken, chosen, rem):
                if idx == len(hs):
                    nxt[tuple(sorted(rem.items()))] += ways * chosen * factorial(taken)
                    return
                h = hs[idx]
                avail = pool[h]
                for take in range(avail + 1):
                    if take:
                        rem[h] = avail - take
                        if rem[h] == 0:
                            del rem[h]
                    else:
                        rem[h] = avail
                    place(idx + 1, taken + take, chosen * _choose(avail, take), rem)
                rem[h] = avail

            place(0, must, 1, dict(pool))
        states = nxt
    total = states.get((), 0)
    assert total % denom == 0
    return total // denom


def _choose(n, k):
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def _unit_step_orders(steps: Sequence[int]) -> Iterator[tuple]:
    """Distinct orderings of a multiset of 0/1 boundary steps."""
    n = len(steps)
    ones = sum(steps)
    if any(s not in (0, 1) for s in steps):
        # not expected for the supported polygons; fall back to brute force
        yield from sorted(set(itertools.permutations(steps)))
        return
    for pos in itertools.combinations(range(n), ones):
        out = [0] * n
        for p in pos:
            out[p] = 1
        yield tuple(out)


def _divergence_patterns(pc: PolygonClass):
    """Required per-floor divergences, with decoration multiplicities.

    The left and right boundary steps of the polygon are distributed over the
    floors by independent bijections (a slanted end may climb past other
    floors); patterns that differ only in the pairing are grouped.
    """
    lefts = [l for l, _ in pc.slabs]
    rights = [r for _, r in pc.slabs]
    patterns = defaultdict(int)
    for lseq in _unit_step_orders(lefts):
        for rseq in _unit_step_orders(rights):
            patterns[tuple(r - l for l, r in zip(lseq, rseq))] += 1
    return sorted(patterns.items())


def enumerate_diagrams(pc: PolygonClass) -> Iterator[FloorDiagram]:
    """All connected genus-0 marked floor diagrams of the polygon."""
    n = pc.height
    if n == 0:
        raise DegeneratePolygonError(f"{pc.surface_id}{pc.class_vec}: zero height")
    for divs, deco in _divergence_patterns(pc):
        for tree in _spanning_trees(n):
            for weights, t in _weightings(tree, divs, pc.d_b, pc.d_t):
                need_dn = sum(max(v, 0) for v in t)
                need_up = sum(max(-v, 0) for v in t)
                slack = pc.d_b - need_dn
                if slack < 0 or pc.d_t - need_up != slack:
                    continue
                for extra in _compositions(slack, n):
                    down = tuple(max(v, 0) + x for v, x in zip(t, extra))
                    up = tuple(max(-v, 0) + x for v, x in zip(t, extra))
                    edges = tuple((i, j, w) for (i, j), w in zip(tree, weights))
                    items = [(i + 1, j, 1) for i, j, _ in edges]
                    items += [(0, f, down[f]) for f in range(n)]
                    items += [(f + 1, n, up[f]) for f in range(n)]
                    nu = _marking_count(n, items)
                    if nu:
                        yield FloorDiagram(n, divs, edges, down, up, nu, deco)


_COUNTS_MEMO: dict = {}


def _fd_counts(pc: PolygonClass) -> tuple:
    key = (pc.surface_id, pc.class_vec)
    known = _COUNTS_MEMO.get(key)
    if known is not None:
        return known
    cplx = 0
    real = 0
    for diag in enumerate_diagrams(pc):
        cplx += diag.decorations * diag.markings * diag.complex_multiplicity()
        real += diag.decorations * diag.markings * diag.real_multiplicity()
    _COUNTS_MEMO[key] = (cplx, real)
    return cplx, real


def fd_count_complex(pc: PolygonClass) -> int:
    """Sum of w^2-weighted marked diagrams; equals the surface count."""
    return _fd_counts(pc)[0]


def fd_count_real_l0(pc: PolygonClass) -> int:
    """Signed diagram count for a totally real point configuration."""
    return _fd_counts(pc)[1]

"""Finite topological spaces represented by their specialization preorder.

On a finite carrier, topologies and preorders are the same data: writing
``x <= y`` for ``x in closure({y})``, the open sets are exactly the
up-closed sets, and ``min_open(x) = {y : x <= y}`` is the smallest open
set containing x.  This module stores the preorder rows as bit masks and
derives everything else from them; the full open-set family is only
materialized on demand (and memoized), because it can be exponentially
larger than the O(n^2) relation.

Subset arguments accept either a bit mask (int) or an iterable of point
indices; subset results are always bit masks.

Every finite space is compact; the fact is recorded as a constant rather
than an operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from finitop import _kernel
from finitop.bits import bits, full_mask, mask_of, points_of
from finitop.errors import (
    CarrierTooLarge,
    CarrierTooLargeForSearch,
    InvalidPartition,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
)

#: Hard bound for spaces built through the public constructors.
MAX_POINTS = 16

#: Bound for internal analysis products (pair spaces of groups of order <= 16).
WIDE_MAX_POINTS = 256

#: Compactness never needs checking on a finite carrier.
EVERY_FINITE_SPACE_IS_COMPACT = True

HOMOGENEITY_SEARCH_MAX = 7


def _as_mask(subset, n: int) -> int:
    if isinstance(subset, int):
        mask = subset
    else:
        mask = mask_of(subset)
    if mask & ~full_mask(n):
        raise ValueError(f"subset {points_of(mask)} is not within the {n}-point carrier")
    return mask


def _check_rows(size: int, rows: Sequence[int]) -> tuple[int, ...]:
    rows = tuple(rows)
    if len(rows) != size:
        raise ValueError(f"expected {size} relation rows, got {len(rows)}")
    full = full_mask(size)
    for x, row in enumerate(rows):
        if row & ~full:
            raise ValueError(f"row {x} leaves the carrier")
        if not (row >> x) & 1:
            raise NotReflexive(x)
    for x in range(size):
        rx = rows[x]
        for y in bits(rx):
            if rows[y] & ~rx:
                z = next(bits(rows[y] & ~rx))
                raise NotTransitive(x, y, z)
    return rows


class Preorder:
    """Reflexive transitive relation on 0..size-1, one bit row per point."""

    __slots__ = ("size", "rows")

    def __init__(self, size: int, rows: Sequence[int]):
        self.size = size
        self.rows = _check_rows(size, rows)

    def holds(self, x: int, y: int) -> bool:
        return bool((self.rows[x] >> y) & 1)

    def is_symmetric(self) -> bool:
        return all(
            (self.rows[y] >> x) & 1
            for x in range(self.size)
            for y in bits(self.rows[x])
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Preorder)
            and self.size == other.size
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.size, self.rows))

    def __repr__(self) -> str:
        return f"Preorder({self.size}, {list(self.rows)})"


class FiniteSpace:
    """A finite space; ``min_open(x)`` rows are the source of truth.

    Instances are immutable after construction and safe to share between
    workers; the derived open-set family is memoized (idempotent, so a
    benign race at worst recomputes it).
    """

    __slots__ = ("point_count", "_up", "_down", "_opens")

    def __init__(self, point_count: int, up_rows: Sequence[int]):
        if not 1 <= point_count <= WIDE_MAX_POINTS:
            raise CarrierTooLarge(
                f"carrier size {point_count} outside 1..{WIDE_MAX_POINTS}"
            )
        self.point_count = point_count
        self._up = _check_rows(point_count, up_rows)
        self._down: tuple[int, ...] | None = None
        self._opens: tuple[int, ...] | None = None

    # -- basic relation access ------------------------------------------

    def min_open(self, x: int) -> int:
        """Smallest open set containing x, as a mask."""
        return self._up[x]

    @property
    def up_rows(self) -> tuple[int, ...]:
        return self._up

    @property
    def down_rows(self) -> tuple[int, ...]:
        if self._down is None:
            n = self.point_count
            self._down = tuple(
                sum(((self._up[y] >> x) & 1) << y for y in range(n)) for x in range(n)
            )
        return self._down

    def leq(self, x: int, y: int) -> bool:
        """x <= y in the specialization preorder, i.e. x in closure({y})."""
        return bool((self._up[x] >> y) & 1)

    @property
    def full(self) -> int:
        return full_mask(self.point_count)

    # -- open/closed structure -------------------------------------------

    def closure(self, subset) -> int:
        """Smallest closed superset (the down-closure of the subset)."""
        s = _as_mask(subset, self.point_count)
        out = 0
        for x in range(self.point_count):
            if self._up[x] & s:
                out |= 1 << x
        return out

    def interior(self, subset) -> int:
        """Largest open subset: the points whose minimal open fits inside."""
        s = _as_mask(subset, self.point_count)
        out = 0
        for x in bits(s):
            if not self._up[x] & ~s:
                out |= 1 << x
        return out

    def is_open(self, subset) -> bool:
        s = _as_mask(subset, self.point_count)
        return all(not self._up[x] & ~s for x in bits(s))

    def is_closed(self, subset) -> bool:
        s = _as_mask(subset, self.point_count)
        return self.is_open(self.full & ~s)

    @property
    def opens(self) -> tuple[int, ...]:
        """All open masks, ordered by (size, mask value).

        Only available on carriers within MAX_POINTS; analysis spaces keep
        working through closure/interior, which never need the family.
        """
        if self._opens is None:
            if self.point_count > MAX_POINTS:
                raise CarrierTooLarge(
                    f"refusing to list opens of a {self.point_count}-point space"
                )
            found = [
                m for m in range(1 << self.point_count) if self.is_open(m)
            ]
            found.sort(key=lambda m: (m.bit_count(), m))
            self._opens = tuple(found)
        return self._opens

    def opens_as_points(self) -> list[list[int]]:
        return [points_of(m) for m in self.opens]

    # -- canonical identity ------------------------------------------------

    @property
    def preorder(self) -> Preorder:
        return Preorder(self.point_count, self._up)

    def matrix_string(self) -> str:
        """Row-major '0'/'1' string of the relation matrix (the dump format)."""
        n = self.point_count
        return "".join(
            "1" if (self._up[x] >> y) & 1 else "0" for x in range(n) for y in range(n)
        )

    def key(self) -> tuple[int, str]:
        return (self.point_count, self.matrix_string())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteSpace)
            and self.point_count == other.point_count
            and self._up == other._up
        )

    def __hash__(self) -> int:
        return hash((self.point_count, self._up))

    def __repr__(self) -> str:
        return f"FiniteSpace({self.point_count}, {list(self._up)})"

    # -- separation --------------------------------------------------------

    def separation_profile(self) -> "SeparationProfile":
        n = self.point_count
        up = self._up
        t0 = all(up[x] != up[y] for x in range(n) for y in range(x + 1, n))
        t1 = all(up[x] == 1 << x for x in range(n))
        r0 = self.preorder.is_symmetric()
        hausdorff = all(
            not up[x] & up[y]
            for x in range(n)
            for y in range(x + 1, n)
        )
        antidiscrete = all(up[x] == self.full for x in range(n))
        discrete = t1
        return SeparationProfile(
            t0=t0,
            t1=t1,
            r0=r0,
            hausdorff=hausdorff,
            antidiscrete=antidiscrete,
            discrete=discrete,
        )


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    r0: bool
    hausdorff: bool
    antidiscrete: bool
    discrete: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "t0": self.t0,
            "t1": self.t1,
            "r0": self.r0,
            "hausdorff": self.hausdorff,
            "antidiscrete": self.antidiscrete,
            "discrete": self.discrete,
        }


# -- constructors ------------------------------------------------------------


def validate_topology(point_count: int, opens: Iterable) -> FiniteSpace:
    """Check the topology axioms on a subset family and build the space.

    The family must contain the empty and the full subset and be closed
    under pairwise union and intersection; on a finite carrier that is a
    complete axiom check, and the derived preorder regenerates exactly the
    given family.
    """
    if not 1 <= point_count <= MAX_POINTS:
        raise CarrierTooLarge(f"carrier size {point_count} outside 1..{MAX_POINTS}")
    family = sorted({_as_mask(s, point_count) for s in opens})
    full = full_mask(point_count)
    if 0 not in family or full not in family:
        raise MissingEmptyOrFull(
            "a topology must contain the empty set and the full carrier"
        )
    members = set(family)
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            if a | b not in members:
                raise NotClosedUnderUnion(points_of(a), points_of(b))
            if a & b not in members:
                raise NotClosedUnderIntersection(points_of(a), points_of(b))
    up = []
    for x in range(point_count):
        m = full
        for s in family:
            if (s >> x) & 1:
                m &= s
        up.append(m)
    return FiniteSpace(point_count, up)


def space_from_preorder(p: Preorder) -> FiniteSpace:
    """Space whose opens are the up-closed sets of the relation."""
    if p.size > MAX_POINTS:
        raise CarrierTooLarge(f"carrier size {p.size} outside 1..{MAX_POINTS}")
    return FiniteSpace(p.size, p.rows)


def specialization_preorder(space: FiniteSpace) -> Preorder:
    return space.preorder


def antidiscrete_space(n: int) -> FiniteSpace:
    return FiniteSpace(n, [full_mask(n)] * n)


def discrete_space(n: int) -> FiniteSpace:
    return FiniteSpace(n, [1 << x for x in range(n)])


def sierpinski_space() -> FiniteSpace:
    """Two points with opens {}, {1}, {0,1}: the point 0 specializes to 1."""
    return FiniteSpace(2, [0b11, 0b10])


# -- constructions -----------------------------------------------------------


def product(x: FiniteSpace, y: FiniteSpace, *, _limit: int = MAX_POINTS) -> FiniteSpace:
    """Product space on pairs indexed row-major: (a, b) -> a * |Y| + b.

    The product preorder is the componentwise conjunction, which on finite
    carriers generates exactly the product topology.
    """
    n = x.point_count * y.point_count
    if n > _limit:
        raise CarrierTooLarge(
            f"product carrier {n} exceeds the bound {_limit}"
        )
    ny = y.point_count
    rows = []
    for a in range(x.point_count):
        for b in range(y.point_count):
            m = 0
            for a2 in bits(x.min_open(a)):
                m |= y.min_open(b) << (a2 * ny)
            rows.append(m)
    return FiniteSpace(n, rows)


def product_wide(x: FiniteSpace, y: FiniteSpace) -> FiniteSpace:
    """Product with the widened analysis bound (pair spaces up to 256 points)."""
    return product(x, y, _limit=WIDE_MAX_POINTS)


def subspace(x: FiniteSpace, subset) -> FiniteSpace:
    """Trace topology on the subset, re-indexed along its sorted points."""
    space, _ = subspace_with_points(x, subset)
    return space


def subspace_with_points(x: FiniteSpace, subset) -> tuple[FiniteSpace, list[int]]:
    s = _as_mask(subset, x.point_count)
    pts = points_of(s)
    if not pts:
        raise ValueError("subspace carrier must be nonempty")
    index = {p: i for i, p in enumerate(pts)}
    rows = []
    for p in pts:
        m = 0
        for q in bits(x.min_open(p) & s):
            m |= 1 << index[q]
        rows.append(m)
    return FiniteSpace(len(pts), rows), pts


def _blocks_of(partition, n: int) -> list[int]:
    blocks = [_as_mask(b, n) for b in partition]
    if any(b == 0 for b in blocks):
        raise InvalidPartition("empty block")
    seen = 0
    for b in blocks:
        if b & seen:
            raise InvalidPartition("blocks overlap")
        seen |= b
    if seen != full_mask(n):
        raise InvalidPartition("blocks do not cover the carrier")
    blocks.sort(key=lambda b: (b & -b).bit_length())
    return blocks


def quotient_by_partition(x: FiniteSpace, partition):
    """Quotient space and projection; blocks are ordered by least member.

    The minimal open of a block is computed by iterating up-closure and
    saturation to a fixed point, which yields the smallest saturated open
    superset; its image is the block's minimal open in the quotient
    topology.
    """
    from finitop.maps import SpaceMap

    n = x.point_count
    blocks = _blocks_of(partition, n)
    k = len(blocks)
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for p in bits(b):
            block_of[p] = i
    rows = []
    for b in blocks:
        s = b
        while True:
            up = 0
            for p in bits(s):
                up |= x.min_open(p)
            sat = 0
            for i in range(k):
                if blocks[i] & up:
                    sat |= blocks[i]
            if sat == s:
                break
            s = sat
        rows.append(sum(1 << i for i in range(k) if blocks[i] & s))
    quotient = FiniteSpace(k, rows)
    projection = SpaceMap(x, quotient, [block_of[p] for p in range(n)])
    return quotient, projection


def t0_quotient(x: FiniteSpace):
    """Collapse topologically indistinguishable points.

    Returns the quotient space together with the projection map; the
    projection always preserves the topology, and it is a homeomorphism
    exactly when the input was already T0.
    """
    n = x.point_count
    seen: dict[int, int] = {}
    blocks = []
    down = x.down_rows
    for p in range(n):
        cls = x.min_open(p) & down[p]
        if cls not in seen:
            seen[cls] = len(blocks)
            blocks.append(cls)
    return quotient_by_partition(x, blocks)


# -- homogeneity -------------------------------------------------------------


def self_homeomorphisms(x: FiniteSpace) -> list[tuple[int, ...]]:
    """All self-homeomorphisms, i.e. automorphisms of the preorder.

    This is the witness table behind ``is_homogeneous``; the backtracking
    search prunes on (up-set size, down-set size) profiles.
    """
    if x.point_count > HOMOGENEITY_SEARCH_MAX:
        raise CarrierTooLargeForSearch(
            f"automorphism search is bounded at {HOMOGENEITY_SEARCH_MAX} points"
        )
    return _kernel.automorphisms(x.point_count, x.up_rows)


def is_homogeneous(x: FiniteSpace) -> bool:
    """True iff the self-homeomorphism group acts transitively on points."""
    orbit = {p[0] for p in self_homeomorphisms(x)}
    return len(orbit) == x.point_count


# -- reduced edge relation (for DOT export) ----------------------------------


def reduction_edges(x: FiniteSpace) -> list[tuple[int, int]]:
    """Edges of a transitive reduction of the strict relation x <= y, x != y.

    Indistinguishability classes contribute one directed cycle through
    their sorted members; between classes the Hasse edges of the quotient
    order connect the least members.  The transitive closure of these
    edges (plus reflexivity) is exactly the preorder.
    """
    n = x.point_count
    down = x.down_rows
    classes: list[int] = []
    seen = 0
    for p in range(n):
        if not (seen >> p) & 1:
            cls = x.min_open(p) & down[p]
            classes.append(cls)
            seen |= cls
    edges: list[tuple[int, int]] = []
    for cls in classes:
        pts = points_of(cls)
        if len(pts) > 1:
            for i, p in enumerate(pts):
                edges.append((p, pts[(i + 1) % len(pts)]))
    reps = [(cls & -cls).bit_length() - 1 for cls in classes]
    k = len(classes)

    def below(i: int, j: int) -> bool:
        return i != j and x.leq(reps[i], reps[j])

    for i in range(k):
        for j in range(k):
            if below(i, j) and not any(
                below(i, m) and below(m, j) for m in range(k)
            ):
                edges.append((reps[i], reps[j]))
    edges.sort()
    return edges

"""Total maps between finite spaces and their structural predicates.

``map_profile`` evaluates the five classical flags; ``preserves_topology``
adds the defining subset sweep of a topology-preserving map:

    U open  <=>  U = f^-1(f(U)) and f(U) open,  for every subset U,

quantified over all 2^n subsets of the domain on purpose, since the
definition ranges over arbitrary subsets.  ``preservation_equivalence``
computes the three equivalent characterizations of such maps (the sweep,
the pullback bijection between the topologies, and quotient-with-
antidiscrete-fibers) independently of each other so their agreement is a
checkable fact, not a shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from finitop import _kernel
from finitop.bits import bits, full_mask, points_of
from finitop.errors import NotSurjective
from finitop.spaces import FiniteSpace, subspace


class SpaceMap:
    """Total function between two finite spaces, stored as a table."""

    __slots__ = ("domain", "codomain", "table")

    def __init__(self, domain: FiniteSpace, codomain: FiniteSpace, table: Sequence[int]):
        table = tuple(table)
        if len(table) != domain.point_count:
            raise ValueError(
                f"table length {len(table)} != domain size {domain.point_count}"
            )
        for v in table:
            if not 0 <= v < codomain.point_count:
                raise ValueError(f"image point {v} outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = table

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image_mask(self, subset: int) -> int:
        out = 0
        for x in bits(subset):
            out |= 1 << self.table[x]
        return out

    def preimage_mask(self, subset: int) -> int:
        out = 0
        for x in range(self.domain.point_count):
            if (subset >> self.table[x]) & 1:
                out |= 1 << x
        return out

    def fiber(self, y: int) -> int:
        return self.preimage_mask(1 << y)

    def is_surjective(self) -> bool:
        return self.image_mask(self.domain.full) == self.codomain.full

    def is_bijective(self) -> bool:
        return (
            self.domain.point_count == self.codomain.point_count
            and len(set(self.table)) == self.domain.point_count
        )

    def compose(self, other: "SpaceMap") -> "SpaceMap":
        """self after other (other's codomain must be self's domain)."""
        if other.codomain != self.domain:
            raise ValueError("maps do not compose")
        return SpaceMap(
            other.domain, self.codomain, [self.table[v] for v in other.table]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpaceMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.table))

    def __repr__(self) -> str:
        return f"SpaceMap({self.table!r})"


@dataclass(frozen=True)
class MapProfile:
    surjective: bool
    continuous: bool
    open_map: bool
    closed_map: bool
    quotient_map: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "surjective": self.surjective,
            "continuous": self.continuous,
            "open_map": self.open_map,
            "closed_map": self.closed_map,
            "quotient_map": self.quotient_map,
        }


def is_continuous(f: SpaceMap) -> bool:
    """Monotonicity for the specialization preorders.

    Equivalent to "the preimage of every open is open" on finite spaces.
    """
    dom, cod = f.domain, f.codomain
    for x in range(dom.point_count):
        fx = f.table[x]
        for y in bits(dom.min_open(x)):
            if not cod.leq(fx, f.table[y]):
                return False
    return True


def is_open_map(f: SpaceMap) -> bool:
    # Images of minimal opens suffice: any open is a union of them.
    dom, cod = f.domain, f.codomain
    return all(
        cod.is_open(f.image_mask(dom.min_open(x))) for x in range(dom.point_count)
    )


def is_closed_map(f: SpaceMap) -> bool:
    # Dually, any closed set is a union of point closures.
    dom, cod = f.domain, f.codomain
    down = dom.down_rows
    return all(cod.is_closed(f.image_mask(down[x])) for x in range(dom.point_count))


def is_quotient_map(f: SpaceMap) -> bool:
    if not f.is_surjective() or not is_continuous(f):
        return False
    return _kernel.quotient_condition(
        f.domain.point_count,
        f.domain.up_rows,
        f.codomain.point_count,
        f.codomain.up_rows,
        f.table,
    )


def map_profile(f: SpaceMap) -> MapProfile:
    return MapProfile(
        surjective=f.is_surjective(),
        continuous=is_continuous(f),
        open_map=is_open_map(f),
        closed_map=is_closed_map(f),
        quotient_map=is_quotient_map(f),
    )


def is_homeomorphism(f: SpaceMap) -> bool:
    if not f.is_bijective():
        return False
    inverse = [0] * f.codomain.point_count
    for x, y in enumerate(f.table):
        inverse[y] = x
    return is_continuous(f) and is_continuous(
        SpaceMap(f.codomain, f.domain, inverse)
    )


def preserves_topology(f: SpaceMap) -> bool:
    """Surjective, continuous, open, closed, plus the full subset sweep."""
    if not (
        f.is_surjective() and is_continuous(f) and is_open_map(f) and is_closed_map(f)
    ):
        return False
    return _kernel.star_condition(
        f.domain.point_count,
        f.domain.up_rows,
        f.codomain.point_count,
        f.codomain.up_rows,
        f.table,
    )


@dataclass(frozen=True)
class PreservationEquivalence:
    """The three characterizations of a topology-preserving surjection."""

    preserving: bool
    pullback_bijection: bool
    quotient_antidiscrete_fibers: bool

    @property
    def all_agree(self) -> bool:
        return self.preserving == self.pullback_bijection == (
            self.quotient_antidiscrete_fibers
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "preserving": self.preserving,
            "pullback_bijection": self.pullback_bijection,
            "quotient_antidiscrete_fibers": self.quotient_antidiscrete_fibers,
            "all_agree": self.all_agree,
        }


def _fiber_antidiscrete(dom: FiniteSpace, fiber: int) -> bool:
    sub = subspace(dom, fiber)
    return all(row == sub.full for row in sub.up_rows)


def preservation_equivalence(f: SpaceMap) -> PreservationEquivalence:
    if not f.is_surjective():
        raise NotSurjective(f"map table {list(f.table)} misses codomain points")
    preserving = preserves_topology(f)
    preimages = {f.preimage_mask(u) for u in f.codomain.opens}
    pullback = (
        preimages == set(f.domain.opens)
        and len(preimages) == len(f.codomain.opens)
    )
    quotient = is_quotient_map(f) and all(
        _fiber_antidiscrete(f.domain, f.fiber(y))
        for y in range(f.codomain.point_count)
    )
    return PreservationEquivalence(preserving, pullback, quotient)


def identity_map(space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, range(space.point_count))


def all_tables(domain_size: int, codomain_size: int):
    """Every function table, in lexicographic order."""
    table = [0] * domain_size

    def rec(i: int):
        if i == domain_size:
            yield tuple(table)
            return
        for v in range(codomain_size):
            table[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def surjective_tables(domain_size: int, codomain_size: int):
    target = full_mask(codomain_size)
    for table in all_tables(domain_size, codomain_size):
        covered = 0
        for v in table:
            covered |= 1 << v
        if covered == target:
            yield table

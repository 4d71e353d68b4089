"""Exhaustive generation of finite topologies and group topologies.

Topologies on n labeled points are enumerated through their preorders
(backtracking over relation rows with transitivity propagation), in the
canonical order of the matrix bit string read row-major; the dump format
is one such string per line.

The independent ground-truth oracle filters raw subset families by the
topology axioms; it shares no code with the preorder path and is feasible
up to four points.

Group topologies are enumerated at the preorder level as well: a topology
makes every left and right shift continuous exactly when its relation is
invariant under both translations, and such a relation is determined by
the up-set of the identity, which must contain the identity, be closed
under products, and be invariant under conjugation.  The candidates are
the subsets of the carrier, so exhaustive mode is bounded by group order
eight.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Optional

from finitop import _kernel
from finitop.bits import bits, full_mask, mask_of, points_of
from finitop.errors import OrderTooLarge, SizeTooLarge, UnknownTarget
from finitop.groups import FiniteGroup, builtin_group
from finitop.grouptop import GroupWithTopology
from finitop.spaces import FiniteSpace, is_homogeneous

MAX_ENUM_POINTS = 5
MAX_GROUP_ORDER = 8
ORACLE_MAX_POINTS = 4

CLASS_FILTERS = (
    "semitopological",
    "quasitopological",
    "paratopological",
    "topological",
    "almost_paratopological",
)

#: The desk-scale group universe used by default in sweeps and mining.
DEFAULT_GROUP_SPECS = (
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(6)",
    "cyclic(8)",
    "klein4",
    "symmetric(3)",
    "dihedral(4)",
    "quaternion(8)",
)


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every topology on n labeled points, exactly once, canonical order."""
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise SizeTooLarge(f"topology enumeration is bounded at {MAX_ENUM_POINTS} points")
    for rows in _kernel.preorders(n):
        yield FiniteSpace(n, rows)


def topology_families_oracle(n: int) -> Iterator[tuple[int, ...]]:
    """Brute-force oracle: all subset families that satisfy the topology
    axioms, as sorted tuples of masks.  Scans all 2^(2^n) families."""
    if not 1 <= n <= ORACLE_MAX_POINTS:
        raise SizeTooLarge(f"family oracle is bounded at {ORACLE_MAX_POINTS} points")
    nsub = 1 << n
    required = 1 | (1 << (nsub - 1))
    for fam in range(1 << nsub):
        if fam & required != required:
            continue
        members = [m for m in range(nsub) if (fam >> m) & 1]
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                if not (fam >> (a | b)) & 1 or not (fam >> (a & b)) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(members)


def topology_count_oracle(n: int) -> int:
    return sum(1 for _ in topology_families_oracle(n))


def enumerate_group_topologies(
    group: FiniteGroup,
    required: Iterable[str] = ("semitopological",),
) -> Iterator[GroupWithTopology]:
    """Topologies on the group carrier satisfying the class filter.

    Every name in ``required`` must be one of the class flags; all of them
    imply semitopological, so the candidates are the translation-invariant
    preorders.  An empty filter falls back to plain topology enumeration
    and is bounded accordingly.
    """
    required = frozenset(required)
    unknown = required - set(CLASS_FILTERS)
    if unknown:
        raise UnknownTarget(f"unknown class filter {sorted(unknown)}")
    if not required:
        if group.order > MAX_ENUM_POINTS:
            raise OrderTooLarge(
                f"unfiltered enumeration is bounded at order {MAX_ENUM_POINTS}"
            )
        for space in enumerate_topologies(group.order):
            yield GroupWithTopology(group, space)
        return
    if group.order > MAX_GROUP_ORDER:
        raise OrderTooLarge(f"exhaustive mode is bounded at order {MAX_GROUP_ORDER}")

    n = group.order
    found = []
    for up_of_identity in range(1, 1 << n, 2):
        if group.set_product(up_of_identity, up_of_identity) & ~up_of_identity:
            continue
        if any(
            group.conjugate(t, up_of_identity) != up_of_identity for t in range(n)
        ):
            continue
        rows = [group.left_translate(x, up_of_identity) for x in range(n)]
        found.append(FiniteSpace(n, rows))
    found.sort(key=FiniteSpace.matrix_string)
    for space in found:
        gwt = GroupWithTopology(group, space)
        flags = gwt.profile().as_dict()
        if all(flags[name] for name in required):
            yield gwt


def canonical_form(space: FiniteSpace) -> FiniteSpace:
    """Lexicographically least relabeling of the space's matrix string."""
    n = space.point_count
    best: Optional[tuple[int, ...]] = None
    best_string = None
    for perm in permutations(range(n)):
        rows = [0] * n
        for x in range(n):
            rows[perm[x]] = mask_of(perm[y] for y in bits(space.min_open(x)))
        candidate = FiniteSpace(n, rows)
        s = candidate.matrix_string()
        if best_string is None or s < best_string:
            best_string = s
            best = tuple(rows)
    return FiniteSpace(n, best)


def canonical_up_to_homeomorphism(
    stream: Iterable[FiniteSpace],
) -> Iterator[FiniteSpace]:
    """One representative per homeomorphism class: the canonical form."""
    seen: set[tuple[int, str]] = set()
    for space in stream:
        rep = canonical_form(space)
        key = rep.key()
        if key not in seen:
            seen.add(key)
            yield rep


# -- counterexample mining -----------------------------------------------------


@dataclass(frozen=True)
class MiningTarget:
    name: str
    description: str
    kind: str  # "spaces" | "groups"
    expect_none: bool


@dataclass(frozen=True)
class MiningResult:
    target: MiningTarget
    universe: str
    population: int
    witnesses: tuple[dict, ...]

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def certificate(self) -> Optional[str]:
        if self.found:
            return None
        return (
            f"NONE up to {self.universe}; scanned {self.population} structures"
        )

    @property
    def violates_expectation(self) -> bool:
        return self.target.expect_none and self.found


def _space_witness(space: FiniteSpace) -> dict:
    return {
        "points": space.point_count,
        "matrix": space.matrix_string(),
        "opens": space.opens_as_points(),
    }


def _group_witness(gwt: GroupWithTopology) -> dict:
    return {
        "group": gwt.name,
        "order": gwt.order,
        "matrix": gwt.space.matrix_string(),
        "opens": gwt.space.opens_as_points(),
    }


def _space_predicates():
    return {
        "homogeneous-not-r0": lambda sp: is_homogeneous(sp)
        and not sp.separation_profile().r0,
        "r0-not-t1": lambda sp: sp.separation_profile().r0
        and not sp.separation_profile().t1,
        "hausdorff-not-discrete": lambda sp: sp.separation_profile().hausdorff
        and not sp.separation_profile().discrete,
    }


def _group_predicates():
    return {
        "semitopological-not-topological": lambda g: g.profile().semitopological
        and not g.profile().topological,
        "almost-paratopological-not-topological": lambda g: (
            g.profile().almost_paratopological and not g.profile().topological
        ),
        "paratopological-not-topological": lambda g: g.profile().paratopological
        and not g.profile().topological,
    }


MINING_TARGETS = {
    "homogeneous-not-r0": MiningTarget(
        "homogeneous-not-r0",
        "a homogeneous space that is not symmetric (R0)",
        "spaces",
        expect_none=True,
    ),
    "r0-not-t1": MiningTarget(
        "r0-not-t1",
        "a symmetric (R0) space that is not T1",
        "spaces",
        expect_none=False,
    ),
    "hausdorff-not-discrete": MiningTarget(
        "hausdorff-not-discrete",
        "a Hausdorff finite space that is not discrete",
        "spaces",
        expect_none=True,
    ),
    "semitopological-not-topological": MiningTarget(
        "semitopological-not-topological",
        "a semitopological group topology that is not a group topology",
        "groups",
        expect_none=True,
    ),
    "almost-paratopological-not-topological": MiningTarget(
        "almost-paratopological-not-topological",
        "an almost paratopological group that is not a topological group",
        "groups",
        expect_none=True,
    ),
    "paratopological-not-topological": MiningTarget(
        "paratopological-not-topological",
        "a paratopological group that is not a topological group",
        "groups",
        expect_none=True,
    ),
}


def mine(
    target_name: str,
    *,
    max_points: int = MAX_ENUM_POINTS,
    max_order: int = MAX_GROUP_ORDER,
    groups: Iterable[str] = DEFAULT_GROUP_SPECS,
) -> MiningResult:
    """Scan the bounded universe for witnesses of the named target.

    Returns every witness found, or an exhaustion certificate recording
    the exact universe size scanned.
    """
    if target_name not in MINING_TARGETS:
        raise UnknownTarget(
            f"unknown target {target_name!r}; known: {sorted(MINING_TARGETS)}"
        )
    target = MINING_TARGETS[target_name]
    witnesses = []
    population = 0
    if target.kind == "spaces":
        if not 1 <= max_points <= MAX_ENUM_POINTS:
            raise SizeTooLarge(f"space mining is bounded at {MAX_ENUM_POINTS} points")
        predicate = _space_predicates()[target_name]
        for n in range(1, max_points + 1):
            for space in enumerate_topologies(n):
                population += 1
                if predicate(space):
                    witnesses.append(_space_witness(space))
        universe = f"all labeled topologies on up to {max_points} points"
    else:
        if max_order > MAX_GROUP_ORDER:
            raise OrderTooLarge(f"group mining is bounded at order {MAX_GROUP_ORDER}")
        predicate = _group_predicates()[target_name]
        names = []
        for spec in groups:
            grp = builtin_group(spec)
            if grp.order > max_order:
                continue
            names.append(grp.name)
            for gwt in enumerate_group_topologies(grp):
                population += 1
                if predicate(gwt):
                    witnesses.append(_group_witness(gwt))
        universe = (
            "all semitopological topologies on "
            + ", ".join(names)
            + f" (order <= {max_order})"
        )
    return MiningResult(target, universe, population, tuple(witnesses))

"""Theorem-suite runner over the enumerated desk-scale universes.

Every registered check scans a bounded universe (labeled topologies,
surjective maps between small spaces, semitopological group topologies on
the builtin groups), evaluates one fact, and reports pass/fail/vacuous
with the population scanned; a failure always carries the minimal witness
in canonical order.  Checks marked shardable partition their universe on
the first matrix row of the structure, so a K-way parallel run merges to
the same report as a serial one; timings are the only nondeterministic
fields and are excluded from report comparisons.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from finitop.bits import bit_reversed, full_mask
from finitop.enumeration import (
    DEFAULT_GROUP_SPECS,
    MAX_ENUM_POINTS,
    MAX_GROUP_ORDER,
    enumerate_group_topologies,
    enumerate_topologies,
    topology_families_oracle,
)
from finitop.errors import BoundsTooLarge, UnknownSuite
from finitop.groups import builtin_group
from finitop.grouptop import (
    GroupWithTopology,
    _almost_paratopological_raw,
    _shifts_continuous,
    class_preservation_check,
    closure_formula_check,
    core_criterion_check,
    identity_core,
    inversion_graph_analysis,
    maltsev_check,
    product_group,
    quotient_homomorphism_check,
    subgroup_with_subspace,
    symmetrization_check,
    symmetrize,
    t0_quotient_group,
    t1_equivalence_check,
    t1_quotient_check,
)
from finitop.maps import (
    SpaceMap,
    is_homeomorphism,
    map_profile,
    preservation_equivalence,
    preserves_topology,
    surjective_tables,
)
from finitop.spaces import (
    FiniteSpace,
    is_homogeneous,
    t0_quotient,
    validate_topology,
)

MAPS_UNIVERSE_MAX_POINTS = 3
CLOSURE_FORMULA_MAX_ORDER = 6


@dataclass(frozen=True)
class Bounds:
    max_points: int = 4
    max_order: int = MAX_GROUP_ORDER
    groups: tuple[str, ...] = DEFAULT_GROUP_SPECS
    jobs: int = 1
    inject_failure: bool = False

    def validate(self) -> None:
        if not 1 <= self.max_points <= MAX_ENUM_POINTS:
            raise BoundsTooLarge(
                f"max_points {self.max_points} outside 1..{MAX_ENUM_POINTS}"
            )
        if not 1 <= self.max_order <= MAX_GROUP_ORDER:
            raise BoundsTooLarge(
                f"max_order {self.max_order} outside 1..{MAX_GROUP_ORDER}"
            )
        if self.jobs < 1:
            raise BoundsTooLarge("jobs must be at least 1")
        for spec in self.groups:
            builtin_group(spec)  # raises UnknownSpec on bad input


@dataclass
class CheckPartial:
    """One shard's contribution to a check."""

    population: int = 0
    applied: int = 0
    witnesses: list[tuple[str, dict]] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    def add_witness(self, key: str, data: dict) -> None:
        self.witnesses.append((key, data))

    def bump(self, counter: str, amount: int = 1) -> None:
        self.counts[counter] = self.counts.get(counter, 0) + amount


@dataclass(frozen=True)
class CheckOutcome:
    check_id: str
    status: str  # pass | fail | vacuous
    population: int
    witness: Optional[dict]
    elapsed_ms: float

    def as_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "population": self.population,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class VerificationReport:
    suite_id: str
    bounds: Bounds
    checks: tuple[CheckOutcome, ...]
    counts: dict[str, int]

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "bounds": {
                "max_points": self.bounds.max_points,
                "max_order": self.bounds.max_order,
                "groups": list(self.bounds.groups),
            },
            "all_passed": self.all_passed,
            "checks": [c.as_dict() for c in self.checks],
            "counts": {k: self.counts[k] for k in sorted(self.counts)},
        }

    def comparable_dict(self) -> dict:
        """The report with the timing fields removed."""
        data = self.as_dict()
        for check in data["checks"]:
            check.pop("elapsed_ms")
        return data

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


# -- universes -----------------------------------------------------------------


def _space_shard_key(space: FiniteSpace) -> int:
    return bit_reversed(space.min_open(0), space.point_count)


def _iter_spaces(max_points: int, shard: int, nshards: int) -> Iterator[FiniteSpace]:
    for n in range(1, max_points + 1):
        for space in enumerate_topologies(n):
            if _space_shard_key(space) % nshards == shard:
                yield space


def _iter_group_topologies(
    bounds: Bounds, shard: int, nshards: int
) -> Iterator[GroupWithTopology]:
    for spec in bounds.groups:
        group = builtin_group(spec)
        if group.order > bounds.max_order:
            continue
        for gwt in enumerate_group_topologies(group):
            if _space_shard_key(gwt.space) % nshards == shard:
                yield gwt


def _space_key(space: FiniteSpace) -> str:
    return f"{space.point_count}:{space.matrix_string()}"


def _gwt_key(gwt: GroupWithTopology) -> str:
    return f"{gwt.name}:{gwt.space.matrix_string()}"


def _space_witness(space: FiniteSpace, **extra) -> dict:
    data = {"points": space.point_count, "matrix": space.matrix_string()}
    data.update(extra)
    return data


def _gwt_witness(gwt: GroupWithTopology, **extra) -> dict:
    data = {
        "group": gwt.name,
        "order": gwt.order,
        "matrix": gwt.space.matrix_string(),
    }
    data.update(extra)
    return data


# -- space checks ----------------------------------------------------------------


def check_labeled_count_oracle(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    """Topology counts and open-set families against the family-filter oracle."""
    out = CheckPartial()
    for n in range(1, min(bounds.max_points, 4) + 1):
        enumerated = {frozenset(sp.opens) for sp in enumerate_topologies(n)}
        oracle = {frozenset(fam) for fam in topology_families_oracle(n)}
        out.population += len(oracle)
        out.applied += len(oracle)
        out.bump(f"labeled_topologies[n={n}]", len(enumerated))
        if len(enumerated) != len(oracle) or enumerated != oracle:
            out.add_witness(
                f"count:{n}",
                {
                    "points": n,
                    "enumerated": len(enumerated),
                    "oracle": len(oracle),
                },
            )
    return out


def check_preorder_roundtrip(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    from finitop.spaces import space_from_preorder, specialization_preorder

    out = CheckPartial()
    for space in _iter_spaces(bounds.max_points, shard, nshards):
        out.population += 1
        out.applied += 1
        if space_from_preorder(specialization_preorder(space)) != space:
            out.add_witness(_space_key(space), _space_witness(space))
    return out


def check_closure_interior_duality(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for space in _iter_spaces(bounds.max_points, shard, nshards):
        out.population += 1
        out.applied += 1
        full = space.full
        for subset in range(full + 1):
            dual = full & ~space.closure(full & ~subset)
            if space.interior(subset) != dual:
                out.add_witness(
                    _space_key(space),
                    _space_witness(space, subset=subset),
                )
                break
    return out


def check_r0_iff_t1_quotient(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for space in _iter_spaces(bounds.max_points, shard, nshards):
        out.population += 1
        out.applied += 1
        quotient, _ = t0_quotient(space)
        if space.separation_profile().r0 != quotient.separation_profile().t1:
            out.add_witness(_space_key(space), _space_witness(space))
    return out


def check_t0_projection_preserving(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for space in _iter_spaces(bounds.max_points, shard, nshards):
        out.population += 1
        out.applied += 1
        quotient, projection = t0_quotient(space)
        ok = (
            preserves_topology(projection)
            and quotient.separation_profile().t0
            and (not space.separation_profile().t0 or is_homeomorphism(projection))
        )
        if not ok:
            out.add_witness(_space_key(space), _space_witness(space))
    return out


def check_t0_idempotent(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for space in _iter_spaces(bounds.max_points, shard, nshards):
        out.population += 1
        out.applied += 1
        quotient, _ = t0_quotient(space)
        _, second = t0_quotient(quotient)
        if not is_homeomorphism(second):
            out.add_witness(_space_key(space), _space_witness(space))
    return out


def check_homogeneous_implies_r0(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for space in _iter_spaces(bounds.max_points, shard, nshards):
        out.population += 1
        if space.separation_profile().r0:
            out.applied += 1
            continue
        if is_homogeneous(space):
            out.add_witness(_space_key(space), _space_witness(space))
        else:
            out.applied += 1
    return out


def check_emissions_validate(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    """Determinism and validity of the enumeration stream itself."""
    out = CheckPartial()
    for n in range(1, bounds.max_points + 1):
        first = [sp.matrix_string() for sp in enumerate_topologies(n)]
        second = [sp.matrix_string() for sp in enumerate_topologies(n)]
        out.population += len(first)
        out.applied += len(first)
        if first != second:
            out.add_witness(f"rerun:{n}", {"points": n, "reason": "nondeterministic"})
        if any(a >= b for a, b in zip(first, first[1:])):
            out.add_witness(f"order:{n}", {"points": n, "reason": "not increasing"})
        for space in enumerate_topologies(n):
            rebuilt = validate_topology(n, space.opens)
            if rebuilt != space:
                out.add_witness(_space_key(space), _space_witness(space))
                break
    return out


# -- map checks -------------------------------------------------------------------


def _iter_surjections(max_points: int, shard: int, nshards: int):
    limit = min(max_points, MAPS_UNIVERSE_MAX_POINTS)
    domains = [sp for n in range(1, limit + 1) for sp in enumerate_topologies(n)]
    codomains = list(domains)
    for dom in domains:
        if _space_shard_key(dom) % nshards != shard:
            continue
        for cod in codomains:
            if cod.point_count > dom.point_count:
                continue
            for table in surjective_tables(dom.point_count, cod.point_count):
                yield SpaceMap(dom, cod, table)


def check_preservation_equivalence(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for f in _iter_surjections(bounds.max_points, shard, nshards):
        out.population += 1
        out.applied += 1
        eq = preservation_equivalence(f)
        if not eq.all_agree:
            out.add_witness(
                f"{_space_key(f.domain)}|{_space_key(f.codomain)}|{f.table}",
                {
                    "domain": f.domain.matrix_string(),
                    "codomain": f.codomain.matrix_string(),
                    "table": list(f.table),
                    "conditions": eq.as_dict(),
                },
            )
    return out


def check_star_implies_profile_flags(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for f in _iter_surjections(bounds.max_points, shard, nshards):
        out.population += 1
        if not preserves_topology(f):
            continue
        out.applied += 1
        profile = map_profile(f)
        if not all(profile.as_dict().values()):
            out.add_witness(
                f"{_space_key(f.domain)}|{_space_key(f.codomain)}|{f.table}",
                {
                    "domain": f.domain.matrix_string(),
                    "codomain": f.codomain.matrix_string(),
                    "table": list(f.table),
                    "profile": profile.as_dict(),
                },
            )
    return out


def check_star_composition(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    """Composable pairs of topology-preserving maps stay topology-preserving."""
    out = CheckPartial()
    preserving = [
        f for f in _iter_surjections(bounds.max_points, 0, 1) if preserves_topology(f)
    ]
    by_domain: dict[tuple[int, str], list[SpaceMap]] = {}
    for f in preserving:
        by_domain.setdefault(f.domain.key(), []).append(f)
    for f in preserving:
        for g in by_domain.get(f.codomain.key(), ()):
            out.population += 1
            out.applied += 1
            if not preserves_topology(g.compose(f)):
                out.add_witness(
                    f"{_space_key(f.domain)}|{f.table}|{g.table}",
                    {
                        "first": list(f.table),
                        "second": list(g.table),
                        "domain": f.domain.matrix_string(),
                    },
                )
    return out


# -- group checks -------------------------------------------------------------------


def check_semitopological_count_oracle(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    """Translation-invariant enumeration against definitional filtering.

    For groups small enough, filter every labeled topology by the shift
    continuity definition and compare the resulting set of topologies with
    the dedicated enumerator's output.
    """
    out = CheckPartial()
    for spec in bounds.groups:
        group = builtin_group(spec)
        if group.order > bounds.max_order:
            continue
        enumerated = [g.space for g in enumerate_group_topologies(group)]
        out.bump(f"semitopological_topologies[{group.name}]", len(enumerated))
        out.population += len(enumerated)
        out.applied += len(enumerated)
        if group.order <= 4:
            filtered = [
                space
                for space in enumerate_topologies(group.order)
                if _shifts_continuous(GroupWithTopology(group, space))
            ]
            if sorted(s.matrix_string() for s in enumerated) != sorted(
                s.matrix_string() for s in filtered
            ):
                out.add_witness(
                    f"oracle:{group.name}",
                    {
                        "group": group.name,
                        "enumerated": len(enumerated),
                        "filtered": len(filtered),
                    },
                )
    return out


def check_profile_census(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        for name, value in gwt.profile().as_dict().items():
            if value:
                out.bump(f"class[{name}]")
    return out


def check_core_formulas_agree(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        core = identity_core(gwt)
        closure_e = gwt.identity_closure()
        ok = core.by_closures == core.by_squares and not (
            closure_e & ~core.by_closures
        )
        if not ok:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_core_naive_matches_reduced(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        reduced = identity_core(gwt, all_opens=False)
        naive = identity_core(gwt, all_opens=True)
        raw_reduced = _almost_paratopological_raw(gwt, all_opens=False)
        raw_naive = _almost_paratopological_raw(gwt, all_opens=True)
        if reduced != naive or raw_reduced != raw_naive:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_core_criterion(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        if not core_criterion_check(gwt).agree:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_inversion_graph_closure(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        if not inversion_graph_analysis(gwt).match:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_t1_equivalence(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        if not t1_equivalence_check(gwt).pairwise_agree:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_symmetrization(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        if not symmetrization_check(gwt).passed:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_symmetrized_refines(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        sym = symmetrize(gwt).sym
        refines = all(
            not sym.space.min_open(x) & ~gwt.space.min_open(x)
            for x in range(gwt.order)
        ) and set(gwt.space.opens) <= set(sym.space.opens)
        if not refines:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def _implication_check(bounds, shard, nshards, hypothesis, conclusion, out):
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        if not hypothesis(gwt):
            continue
        out.applied += 1
        if not conclusion(gwt):
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_ap_implies_topological(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    return _implication_check(
        bounds,
        shard,
        nshards,
        lambda g: g.profile().almost_paratopological,
        lambda g: g.profile().topological,
        CheckPartial(),
    )


def check_paratopological_implies_topological(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    return _implication_check(
        bounds,
        shard,
        nshards,
        lambda g: g.profile().paratopological,
        lambda g: g.profile().topological,
        CheckPartial(),
    )


def check_paratopological_implies_ap(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    return _implication_check(
        bounds,
        shard,
        nshards,
        lambda g: g.profile().paratopological,
        lambda g: g.profile().almost_paratopological,
        CheckPartial(),
    )


def check_hausdorff_quasi_implies_ap(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    return _implication_check(
        bounds,
        shard,
        nshards,
        lambda g: g.space.separation_profile().hausdorff
        and g.profile().quasitopological,
        lambda g: g.profile().almost_paratopological,
        CheckPartial(),
    )


def check_hausdorff_semitopological_topological(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    # Finite Hausdorff means discrete, so this is a consistency smoke test.
    return _implication_check(
        bounds,
        shard,
        nshards,
        lambda g: g.space.separation_profile().hausdorff,
        lambda g: g.profile().topological and g.space.separation_profile().discrete,
        CheckPartial(),
    )


def check_t0_quotient_structure(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        if not t0_quotient_group(gwt).report.passed:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_t1_reflection(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        if not t1_quotient_check(gwt).passed:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_projection_homomorphism(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        result = t0_quotient_group(gwt)
        if result.projection is None:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
            continue
        out.applied += 1
        if not quotient_homomorphism_check(result.projection).passed:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_projection_class_preservation(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        result = t0_quotient_group(gwt)
        if result.projection is None:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
            continue
        out.applied += 1
        if not class_preservation_check(result.projection).all_preserved:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
    return out


def check_subgroup_closure(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    """Subgroups of almost paratopological fixtures stay in the class."""
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        if not gwt.profile().almost_paratopological:
            continue
        out.applied += 1
        for mask in gwt.group.subgroup_masks():
            sub = subgroup_with_subspace(gwt, mask)
            if not sub.profile().almost_paratopological:
                out.add_witness(
                    f"{_gwt_key(gwt)}|{mask}",
                    _gwt_witness(gwt, subgroup=mask),
                )
                break
    return out


def _is_almost_paratopological_fast(gwt: GroupWithTopology) -> bool:
    return _shifts_continuous(gwt) and _almost_paratopological_raw(gwt)


def check_product_closure(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    """Binary products of almost paratopological fixtures stay in the class.

    Avoids the full profile on the 16-point products; the class label only
    needs shift continuity plus the raw squares condition.
    """
    out = CheckPartial()
    fixtures: list[GroupWithTopology] = []
    for spec in bounds.groups:
        group = builtin_group(spec)
        if group.order > bounds.max_order:
            continue
        fixtures.extend(enumerate_group_topologies(group))
    for i, a in enumerate(fixtures):
        for b in fixtures[i:]:
            if a.order * b.order > 16:
                continue
            out.population += 1
            if not (
                a.profile().almost_paratopological
                and b.profile().almost_paratopological
            ):
                continue
            out.applied += 1
            prod = product_group(a, b)
            if not _is_almost_paratopological_fast(prod):
                out.add_witness(
                    f"{_gwt_key(a)}|{_gwt_key(b)}",
                    {"left": _gwt_witness(a), "right": _gwt_witness(b)},
                )
    return out


def check_continuous_iso_transfer(
    bounds: Bounds, shard: int, nshards: int
) -> CheckPartial:
    """Continuous isomorphism onto a T1 almost paratopological group pulls
    the class back; checked along identity tables between topologies on
    the same group (continuity = the codomain opens are among the domain
    opens)."""
    out = CheckPartial()
    for spec in bounds.groups:
        group = builtin_group(spec)
        if group.order > bounds.max_order:
            continue
        fixtures = list(enumerate_group_topologies(group))
        for dom in fixtures:
            dom_opens = set(dom.space.opens)
            for cod in fixtures:
                out.population += 1
                if not set(cod.space.opens) <= dom_opens:
                    continue
                sep = cod.space.separation_profile()
                if not (sep.t1 and cod.profile().almost_paratopological):
                    continue
                out.applied += 1
                if not dom.profile().almost_paratopological:
                    out.add_witness(
                        f"{_gwt_key(dom)}|{_gwt_key(cod)}",
                        {"domain": _gwt_witness(dom), "codomain": _gwt_witness(cod)},
                    )
    return out


def check_closure_formula(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    """Closure of every subset against both translate-intersection formulas,
    on fixtures of small order (exhaustive over all subsets)."""
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        if gwt.order > CLOSURE_FORMULA_MAX_ORDER:
            continue
        out.applied += 1
        for subset in range(full_mask(gwt.order) + 1):
            if not closure_formula_check(gwt, subset).all_equal:
                out.add_witness(
                    f"{_gwt_key(gwt)}|{subset}",
                    _gwt_witness(gwt, subset=subset),
                )
                break
    return out


def check_maltsev(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    for gwt in _iter_group_topologies(bounds, shard, nshards):
        out.population += 1
        out.applied += 1
        report = maltsev_check(gwt)
        if not report.passed:
            out.add_witness(_gwt_key(gwt), _gwt_witness(gwt))
        if report.separate_continuity is not None:
            out.bump("maltsev_continuity_checked")
    return out


def check_injected_failure(bounds: Bounds, shard: int, nshards: int) -> CheckPartial:
    out = CheckPartial()
    out.population = 1
    out.applied = 1
    out.add_witness("injected", {"reason": "deliberately corrupted check"})
    return out


# -- registry and runner -----------------------------------------------------------


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    fn: Callable[[Bounds, int, int], CheckPartial]
    sharded: bool
    suites: tuple[str, ...]


CHECKS: tuple[CheckDef, ...] = (
    CheckDef("spaces.labeled_count_oracle", check_labeled_count_oracle, False, ("spaces",)),
    CheckDef("spaces.preorder_roundtrip", check_preorder_roundtrip, True, ("spaces",)),
    CheckDef("spaces.closure_interior_duality", check_closure_interior_duality, True, ("spaces",)),
    CheckDef("spaces.r0_iff_t1_quotient", check_r0_iff_t1_quotient, True, ("spaces",)),
    CheckDef("spaces.t0_projection_preserves_topology", check_t0_projection_preserving, True, ("spaces",)),
    CheckDef("spaces.t0_idempotent", check_t0_idempotent, True, ("spaces",)),
    CheckDef("spaces.homogeneous_implies_r0", check_homogeneous_implies_r0, True, ("spaces",)),
    CheckDef("spaces.emissions_validate", check_emissions_validate, False, ("spaces",)),
    CheckDef("maps.preservation_equivalence", check_preservation_equivalence, True, ("maps",)),
    CheckDef("maps.star_implies_profile_flags", check_star_implies_profile_flags, True, ("maps",)),
    CheckDef("maps.star_composition", check_star_composition, False, ("maps",)),
    CheckDef("groups.semitopological_count_oracle", check_semitopological_count_oracle, False, ("groups",)),
    CheckDef("groups.profile_census", check_profile_census, True, ("groups",)),
    CheckDef("groups.core_formulas_agree", check_core_formulas_agree, True, ("groups",)),
    CheckDef("groups.core_naive_matches_reduced", check_core_naive_matches_reduced, True, ("groups",)),
    CheckDef("groups.almost_paratopological_core_criterion", check_core_criterion, True, ("groups",)),
    CheckDef("groups.inversion_graph_closure_matches_core", check_inversion_graph_closure, True, ("groups",)),
    CheckDef("groups.t1_equivalence", check_t1_equivalence, True, ("groups",)),
    CheckDef("groups.symmetrization_properties", check_symmetrization, True, ("groups",)),
    CheckDef("groups.symmetrized_topology_refines", check_symmetrized_refines, True, ("groups",)),
    CheckDef("groups.almost_paratopological_implies_topological", check_ap_implies_topological, True, ("groups",)),
    CheckDef("groups.paratopological_implies_topological", check_paratopological_implies_topological, True, ("groups",)),
    CheckDef("groups.paratopological_implies_almost_paratopological", check_paratopological_implies_ap, True, ("groups",)),
    CheckDef("groups.hausdorff_quasitopological_implies_almost_paratopological", check_hausdorff_quasi_implies_ap, True, ("groups",)),
    CheckDef("groups.hausdorff_semitopological_is_topological", check_hausdorff_semitopological_topological, True, ("groups",)),
    CheckDef("groups.t0_quotient_structure", check_t0_quotient_structure, True, ("groups",)),
    CheckDef("groups.t1_reflection", check_t1_reflection, True, ("groups",)),
    CheckDef("groups.projection_homomorphism_properties", check_projection_homomorphism, True, ("groups",)),
    CheckDef("groups.projection_preserves_classes", check_projection_class_preservation, True, ("groups",)),
    CheckDef("groups.subgroup_closure", check_subgroup_closure, True, ("groups",)),
    CheckDef("groups.product_closure", check_product_closure, False, ("groups",)),
    CheckDef("groups.continuous_iso_transfer", check_continuous_iso_transfer, False, ("groups",)),
    CheckDef("groups.closure_intersection_formula", check_closure_formula, True, ("groups",)),
    CheckDef("groups.maltsev_identities_and_continuity", check_maltsev, True, ("groups",)),
)

CHECKS_BY_ID = {c.check_id: c for c in CHECKS}

SUITE_IDS = ("spaces", "maps", "groups", "all")

_INJECTED = CheckDef(
    "diagnostics.injected_failure", check_injected_failure, False, SUITE_IDS
)


def _run_check_shard(check_id: str, bounds: Bounds, shard: int, nshards: int):
    check = _INJECTED if check_id == _INJECTED.check_id else CHECKS_BY_ID[check_id]
    start = time.perf_counter()
    partial = check.fn(bounds, shard, nshards)
    elapsed = (time.perf_counter() - start) * 1000.0
    return partial, elapsed


def _merge(check_id: str, partials: list[tuple[CheckPartial, float]]) -> CheckOutcome:
    population = sum(p.population for p, _ in partials)
    applied = sum(p.applied for p, _ in partials)
    elapsed = sum(ms for _, ms in partials)
    witnesses = sorted(
        (w for p, _ in partials for w in p.witnesses), key=lambda kv: kv[0]
    )
    if witnesses:
        status = "fail"
        witness = witnesses[0][1]
    elif applied == 0:
        status = "vacuous"
        witness = None
    else:
        status = "pass"
        witness = None
    return CheckOutcome(check_id, status, population, witness, elapsed)


def run_suite(suite_id: str, bounds: Bounds | None = None) -> VerificationReport:
    """Run every registered check of the suite within the given bounds."""
    if suite_id not in SUITE_IDS:
        raise UnknownSuite(f"unknown suite {suite_id!r}; known: {SUITE_IDS}")
    bounds = bounds or Bounds()
    bounds.validate()
    selected = [
        c for c in CHECKS if suite_id == "all" or suite_id in c.suites
    ]
    if bounds.inject_failure:
        selected.append(_INJECTED)

    tasks: list[tuple[str, int, int]] = []
    for check in selected:
        nshards = bounds.jobs if (check.sharded and bounds.jobs > 1) else 1
        for shard in range(nshards):
            tasks.append((check.check_id, shard, nshards))

    results: dict[str, list[tuple[CheckPartial, float]]] = {
        c.check_id: [] for c in selected
    }
    if bounds.jobs > 1:
        with ProcessPoolExecutor(max_workers=bounds.jobs) as pool:
            futures = [
                (check_id, pool.submit(_run_check_shard, check_id, bounds, shard, nshards))
                for check_id, shard, nshards in tasks
            ]
            for check_id, future in futures:
                results[check_id].append(future.result())
    else:
        for check_id, shard, nshards in tasks:
            results[check_id].append(_run_check_shard(check_id, bounds, shard, nshards))

    outcomes = sorted(
        (_merge(check_id, partials) for check_id, partials in results.items()),
        key=lambda c: c.check_id,
    )
    counts: dict[str, int] = {}
    for partials in results.values():
        for partial, _ in partials:
            for key, value in partial.counts.items():
                counts[key] = counts.get(key, 0) + value
    return VerificationReport(suite_id, bounds, tuple(outcomes), counts)

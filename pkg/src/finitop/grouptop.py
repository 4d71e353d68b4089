"""Finite groups carrying a topology: class checkers and constructions.

A ``GroupWithTopology`` pairs a Cayley table with a finite space on the
same carrier; nothing about continuity is assumed at construction, the
class flags (semitopological, quasitopological, paratopological,
topological, almost paratopological) are computed on demand.

The neighborhood filter of the identity is realized as the open sets
containing the identity.  Because the minimal open set around the
identity is contained in every one of them, the intersection formulas for
the identity core and the almost-paratopological test reduce to that
single set; the reduction is an implementation theorem, so the naive
all-opens path is kept behind the ``all_opens`` flag and the verification
suite cross-checks the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from finitop.bits import bits, full_mask, points_of
from finitop.errors import (
    CarrierMismatch,
    DomainNotSemitopological,
    InvalidHomomorphism,
    NotASubgroup,
    NotSemitopological,
    NotSurjective,
    NotTopologyPreserving,
)
from finitop.groups import FiniteGroup, direct_product
from finitop.maps import (
    SpaceMap,
    is_continuous,
    is_homeomorphism,
    is_open_map,
    is_quotient_map,
    preserves_topology,
)
from finitop.spaces import (
    FiniteSpace,
    product,
    product_wide,
    quotient_by_partition,
    subspace_with_points,
    t0_quotient,
)


class GroupWithTopology:
    """A finite group and a finite space over the same carrier."""

    __slots__ = ("group", "space", "_profile", "_pair_space")

    def __init__(self, group: FiniteGroup, space: FiniteSpace):
        if group.order != space.point_count:
            raise CarrierMismatch(
                f"group order {group.order} != carrier size {space.point_count}"
            )
        self.group = group
        self.space = space
        self._profile: Optional[ClassProfile] = None
        self._pair_space: Optional[FiniteSpace] = None

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def name(self) -> str:
        return self.group.name

    def min_open(self, x: int) -> int:
        return self.space.min_open(x)

    def identity_closure(self) -> int:
        return self.space.closure(1)

    def opens_containing_identity(self) -> list[int]:
        return [u for u in self.space.opens if u & 1]

    def pair_space(self) -> FiniteSpace:
        """Product of the space with itself on the widened analysis carrier."""
        if self._pair_space is None:
            self._pair_space = product_wide(self.space, self.space)
        return self._pair_space

    def profile(self) -> "ClassProfile":
        if self._profile is None:
            self._profile = class_profile(self)
        return self._profile

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupWithTopology)
            and self.group == other.group
            and self.space == other.space
        )

    def __hash__(self) -> int:
        return hash((self.group, self.space))

    def __repr__(self) -> str:
        return f"GroupWithTopology({self.name!r}, {self.space.matrix_string()!r})"


@dataclass(frozen=True)
class ClassProfile:
    semitopological: bool
    quasitopological: bool
    paratopological: bool
    topological: bool
    almost_paratopological_raw: bool
    almost_paratopological: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "semitopological": self.semitopological,
            "quasitopological": self.quasitopological,
            "paratopological": self.paratopological,
            "topological": self.topological,
            "almost_paratopological_raw": self.almost_paratopological_raw,
            "almost_paratopological": self.almost_paratopological,
        }


def _shifts_continuous(g: GroupWithTopology) -> bool:
    grp, sp = g.group, g.space
    n = grp.order
    for t in range(n):
        for x in range(n):
            up = sp.min_open(x)
            if grp.left_translate(t, up) & ~sp.min_open(grp.mul(t, x)):
                return False
            if grp.right_translate(up, t) & ~sp.min_open(grp.mul(x, t)):
                return False
    return True


def _inversion_continuous(g: GroupWithTopology) -> bool:
    grp, sp = g.group, g.space
    return all(
        not grp.set_inverse(sp.min_open(x)) & ~sp.min_open(grp.inv(x))
        for x in range(grp.order)
    )


def _multiplication_jointly_continuous(g: GroupWithTopology) -> bool:
    grp, sp = g.group, g.space
    n = grp.order
    for x in range(n):
        ux = sp.min_open(x)
        for y in range(n):
            if grp.set_product(ux, sp.min_open(y)) & ~sp.min_open(grp.mul(x, y)):
                return False
    return True


def _almost_paratopological_raw(g: GroupWithTopology, all_opens: bool = False) -> bool:
    grp, sp = g.group, g.space
    candidates = g.opens_containing_identity() if all_opens else [sp.min_open(0)]
    for t in range(grp.order):
        if (sp.min_open(0) >> t) & 1:
            continue  # identity lies in the closure of {t}
        if not any(
            not (grp.set_product(u, u) >> t) & 1 for u in candidates
        ):
            return False
    return True


def class_profile(g: GroupWithTopology) -> ClassProfile:
    """Evaluate the five class flags from their definitions.

    Continuity checks are preorder monotonicity; joint continuity of the
    multiplication is min_open(x) * min_open(y) inside min_open(x*y).
    The almost-paratopological class label additionally requires the
    group to be semitopological; the raw defining condition is reported
    on its own as well.
    """
    semi = _shifts_continuous(g)
    inv_cont = _inversion_continuous(g)
    para = _multiplication_jointly_continuous(g)
    raw = _almost_paratopological_raw(g)
    return ClassProfile(
        semitopological=semi,
        quasitopological=semi and inv_cont,
        paratopological=para,
        topological=para and inv_cont,
        almost_paratopological_raw=raw,
        almost_paratopological=raw and semi,
    )


# -- identity core ------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCore:
    """The two intersection formulas around the identity.

    ``by_closures`` intersects closure(U^-1) over open U containing the
    identity; ``by_squares`` intersects (U^-1)^2.  For semitopological
    groups the two agree and contain the closure of the identity.
    """

    by_closures: int
    by_squares: int


def identity_core(g: GroupWithTopology, all_opens: bool = False) -> IdentityCore:
    grp, sp = g.group, g.space
    if all_opens:
        by_closures = sp.full
        by_squares = sp.full
        for u in g.opens_containing_identity():
            ui = grp.set_inverse(u)
            by_closures &= sp.closure(ui)
            by_squares &= grp.set_product(ui, ui)
    else:
        ui = grp.set_inverse(sp.min_open(0))
        by_closures = sp.closure(ui)
        by_squares = grp.set_product(ui, ui)
    return IdentityCore(by_closures=by_closures, by_squares=by_squares)


@dataclass(frozen=True)
class CoreCriterion:
    definition_holds: bool
    core_equals_identity_closure: bool

    @property
    def agree(self) -> bool:
        return self.definition_holds == self.core_equals_identity_closure


def core_criterion_check(g: GroupWithTopology) -> CoreCriterion:
    """Almost paratopological iff the identity core collapses to cl{e}."""
    if not g.profile().semitopological:
        raise NotSemitopological(f"{g.name} is not semitopological")
    core = identity_core(g).by_closures
    return CoreCriterion(
        definition_holds=g.profile().almost_paratopological,
        core_equals_identity_closure=core == g.identity_closure(),
    )


# -- closure via translates ----------------------------------------------------


@dataclass(frozen=True)
class ClosureFormula:
    by_topology: int
    right_translates: int
    left_translates: int

    @property
    def all_equal(self) -> bool:
        return self.by_topology == self.right_translates == self.left_translates


def closure_formula_check(g: GroupWithTopology, subset) -> ClosureFormula:
    """closure(M) against the intersections of M U^-1 and U^-1 M."""
    if not g.profile().semitopological:
        raise NotSemitopological(f"{g.name} is not semitopological")
    grp, sp = g.group, g.space
    m = subset if isinstance(subset, int) else sum(1 << p for p in subset)
    right = sp.full
    left = sp.full
    for u in g.opens_containing_identity():
        ui = grp.set_inverse(u)
        right &= grp.set_product(m, ui)
        left &= grp.set_product(ui, m)
    return ClosureFormula(
        by_topology=sp.closure(m), right_translates=right, left_translates=left
    )


# -- the inversion graph -------------------------------------------------------


@dataclass(frozen=True)
class InversionGraphReport:
    """The pair set {(x, y) : x*y = e} inside the square of the space.

    Masks index pairs row-major ((x, y) -> x*order + y).  ``core_preimage``
    is the multiplication preimage of the identity core; for
    semitopological groups it equals the closure of the graph.
    """

    pairs: int
    closure_pairs: int
    core_preimage: int
    match: bool
    graph_closed: bool


def inversion_graph_analysis(g: GroupWithTopology) -> InversionGraphReport:
    grp = g.group
    n = grp.order
    square = g.pair_space()
    pairs = 0
    for x in range(n):
        for y in range(n):
            if grp.mul(x, y) == 0:
                pairs |= 1 << (x * n + y)
    closure_pairs = square.closure(pairs)
    core = identity_core(g).by_closures
    preimage = 0
    for x in range(n):
        row = grp.table[x]
        for y in range(n):
            if (core >> row[y]) & 1:
                preimage |= 1 << (x * n + y)
    return InversionGraphReport(
        pairs=pairs,
        closure_pairs=closure_pairs,
        core_preimage=preimage,
        match=closure_pairs == preimage,
        graph_closed=closure_pairs == pairs,
    )


@dataclass(frozen=True)
class T1Equivalence:
    """Three conditions that coincide for semitopological groups:
    T1 + almost paratopological, core = {e}, inversion graph closed."""

    t1_and_almost_paratopological: bool
    core_is_identity: bool
    graph_closed: bool

    @property
    def pairwise_agree(self) -> bool:
        return (
            self.t1_and_almost_paratopological
            == self.core_is_identity
            == self.graph_closed
        )


def t1_equivalence_check(g: GroupWithTopology) -> T1Equivalence:
    if not g.profile().semitopological:
        raise NotSemitopological(f"{g.name} is not semitopological")
    sep = g.space.separation_profile()
    return T1Equivalence(
        t1_and_almost_paratopological=sep.t1 and g.profile().almost_paratopological,
        core_is_identity=identity_core(g).by_closures == 1,
        graph_closed=inversion_graph_analysis(g).graph_closed,
    )


# -- symmetrized topology -------------------------------------------------------


@dataclass(frozen=True)
class SymmetrizationResult:
    """Retopologization by the base {U cap V^-1 : U, V open}.

    The base is intersection-closed, so it generates a topology by taking
    unions; ``family_already_topology`` records whether the raw family was
    union-closed on its own (a diagnostic, not an assumption).  The result
    always refines the original topology.
    """

    sym: GroupWithTopology
    base_family: tuple[int, ...]
    family_already_topology: bool


def symmetrize(g: GroupWithTopology) -> SymmetrizationResult:
    grp, sp = g.group, g.space
    n = grp.order
    rows = [
        sp.min_open(x) & grp.set_inverse(sp.min_open(grp.inv(x))) for x in range(n)
    ]
    sym_space = FiniteSpace(n, rows)
    inverted = sorted({grp.set_inverse(v) for v in sp.opens})
    base = sorted(
        {u & vi for u in sp.opens for vi in inverted},
        key=lambda m: (m.bit_count(), m),
    )
    return SymmetrizationResult(
        sym=GroupWithTopology(grp, sym_space),
        base_family=tuple(base),
        family_already_topology=set(base) == set(sym_space.opens),
    )


@dataclass(frozen=True)
class SymmetrizationReport:
    """Hypothesis-gated properties of the symmetrized group; None marks a
    vacuous item (its hypothesis did not hold)."""

    quasitopological_when_semitopological: Optional[bool]
    topological_when_paratopological: Optional[bool]
    graph_homeomorphism: bool
    graph_closed_in_t1_case: Optional[bool]
    hausdorff_quasitopological_in_t1_case: Optional[bool]

    @property
    def passed(self) -> bool:
        return all(
            item is not False
            for item in (
                self.quasitopological_when_semitopological,
                self.topological_when_paratopological,
                self.graph_homeomorphism,
                self.graph_closed_in_t1_case,
                self.hausdorff_quasitopological_in_t1_case,
            )
        )


def symmetrization_check(g: GroupWithTopology) -> SymmetrizationReport:
    """Check the symmetrization facts, each under its own hypothesis.

    The homeomorphism item needs no continuity of the group operations:
    x -> (x, x^-1) must carry the symmetrized topology onto the subspace
    topology that the inversion graph inherits from the square.
    """
    result = symmetrize(g)
    profile = g.profile()
    sym_profile = result.sym.profile()

    quasi = sym_profile.quasitopological if profile.semitopological else None
    topo = sym_profile.topological if profile.paratopological else None

    graph = inversion_graph_analysis(g)
    square = g.pair_space()
    sub, pts = subspace_with_points(square, graph.pairs)
    index = {p: i for i, p in enumerate(pts)}
    n = g.order
    table = [index[x * n + g.group.inv(x)] for x in range(n)]
    embed = SpaceMap(result.sym.space, sub, table)
    homeo = is_homeomorphism(embed)

    t1_ap = g.space.separation_profile().t1 and profile.almost_paratopological
    if t1_ap:
        closed = graph.graph_closed
        sym_sep = result.sym.space.separation_profile()
        hausdorff_quasi = sym_sep.hausdorff and sym_profile.quasitopological
    else:
        closed = None
        hausdorff_quasi = None
    return SymmetrizationReport(
        quasitopological_when_semitopological=quasi,
        topological_when_paratopological=topo,
        graph_homeomorphism=homeo,
        graph_closed_in_t1_case=closed,
        hausdorff_quasitopological_in_t1_case=hausdorff_quasi,
    )


# -- homomorphisms ---------------------------------------------------------------


class GroupHomomorphism:
    """Multiplicative map between groups-with-topology.

    Wraps the SpaceMap between the underlying spaces; the table must send
    products to products (the identity then goes to the identity).
    """

    __slots__ = ("domain", "codomain", "table")

    def __init__(
        self,
        domain: GroupWithTopology,
        codomain: GroupWithTopology,
        table: Sequence[int],
    ):
        table = tuple(table)
        if len(table) != domain.order:
            raise InvalidHomomorphism("table length does not match the domain")
        for v in table:
            if not 0 <= v < codomain.order:
                raise InvalidHomomorphism(f"image {v} outside the codomain")
        dg, cg = domain.group, codomain.group
        for a in range(dg.order):
            for b in range(dg.order):
                if table[dg.mul(a, b)] != cg.mul(table[a], table[b]):
                    raise InvalidHomomorphism(
                        f"multiplicativity fails on ({a},{b})"
                    )
        self.domain = domain
        self.codomain = codomain
        self.table = table

    @property
    def space_map(self) -> SpaceMap:
        return SpaceMap(self.domain.space, self.codomain.space, self.table)

    def kernel_mask(self) -> int:
        return sum(1 << a for a, v in enumerate(self.table) if v == 0)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.codomain.order

    def __repr__(self) -> str:
        return f"GroupHomomorphism({self.table!r})"


def identity_homomorphism(g: GroupWithTopology) -> GroupHomomorphism:
    return GroupHomomorphism(g, g, range(g.order))


# -- T0/T1 reflection --------------------------------------------------------------


@dataclass(frozen=True)
class T0QuotientReport:
    kernel_is_subgroup: bool
    kernel_is_normal: bool
    kernel_antidiscrete: bool
    projection_preserves_topology: bool
    quotient_t0: bool
    quotient_semitopological: bool
    matches_space_quotient: bool

    @property
    def passed(self) -> bool:
        return all(
            (
                self.kernel_is_subgroup,
                self.kernel_is_normal,
                self.kernel_antidiscrete,
                self.projection_preserves_topology,
                self.quotient_t0,
                self.quotient_semitopological,
                self.matches_space_quotient,
            )
        )


@dataclass(frozen=True)
class T0QuotientResult:
    kernel: int
    quotient: Optional[GroupWithTopology]
    projection: Optional[GroupHomomorphism]
    report: T0QuotientReport


def _antidiscrete_subset(space: FiniteSpace, mask: int) -> bool:
    return all(space.min_open(x) & mask == mask for x in bits(mask))


def t0_quotient_group(g: GroupWithTopology) -> T0QuotientResult:
    """Quotient by cl{e} intersected with its inverse set.

    That subset is a normal antidiscrete subgroup whose cosets are exactly
    the indistinguishability classes, so the coset group with the quotient
    topology realizes the T0 reflection and the projection preserves the
    topology.
    """
    if not g.profile().semitopological:
        raise NotSemitopological(f"{g.name} is not semitopological")
    grp, sp = g.group, g.space
    kernel = sp.closure(1) & grp.set_inverse(sp.closure(1))
    subgroup = grp.is_subgroup_mask(kernel)
    normal = subgroup and grp.is_normal_mask(kernel)
    antidiscrete = _antidiscrete_subset(sp, kernel)
    if not (subgroup and normal):
        report = T0QuotientReport(
            subgroup, normal, antidiscrete, False, False, False, False
        )
        return T0QuotientResult(kernel, None, None, report)

    blocks = []
    seen = 0
    for x in range(grp.order):
        if not (seen >> x) & 1:
            coset = grp.left_translate(x, kernel)
            blocks.append(coset)
            seen |= coset
    blocks.sort(key=lambda b: (b & -b).bit_length())
    reps = [(b & -b).bit_length() - 1 for b in blocks]
    block_of = [0] * grp.order
    for i, b in enumerate(blocks):
        for p in bits(b):
            block_of[p] = i
    q_table = [
        [block_of[grp.mul(ra, rb)] for rb in reps] for ra in reps
    ]
    q_group = FiniteGroup(q_table, name=f"{grp.name}/kernel")
    q_space, q_projection = quotient_by_partition(sp, blocks)
    quotient = GroupWithTopology(q_group, q_space)
    projection = GroupHomomorphism(g, quotient, q_projection.table)

    space_quotient, space_projection = t0_quotient(sp)
    report = T0QuotientReport(
        kernel_is_subgroup=subgroup,
        kernel_is_normal=normal,
        kernel_antidiscrete=antidiscrete,
        projection_preserves_topology=preserves_topology(projection.space_map),
        quotient_t0=q_space.separation_profile().t0,
        quotient_semitopological=quotient.profile().semitopological,
        matches_space_quotient=(
            space_quotient == q_space
            and space_projection.table == q_projection.table
        ),
    )
    return T0QuotientResult(kernel, quotient, projection, report)


@dataclass(frozen=True)
class T1QuotientReport:
    r0: bool
    identity_closure_is_kernel: bool
    kernel_closed: bool
    kernel_normal: bool
    kernel_antidiscrete: bool
    quotient_t1: bool
    projection_preserves_topology: bool

    @property
    def passed(self) -> bool:
        return all(
            (
                self.r0,
                self.identity_closure_is_kernel,
                self.kernel_closed,
                self.kernel_normal,
                self.kernel_antidiscrete,
                self.quotient_t1,
                self.projection_preserves_topology,
            )
        )


def t1_quotient_check(g: GroupWithTopology) -> T1QuotientReport:
    """On a finite carrier cl{e} is compact for free, so the quotient by it
    must be a T1 semitopological group and the space must be symmetric."""
    if not g.profile().semitopological:
        raise NotSemitopological(f"{g.name} is not semitopological")
    sp = g.space
    closure_e = sp.closure(1)
    result = t0_quotient_group(g)
    quotient_t1 = (
        result.quotient is not None
        and result.quotient.space.separation_profile().t1
    )
    return T1QuotientReport(
        r0=sp.separation_profile().r0,
        identity_closure_is_kernel=closure_e == result.kernel,
        kernel_closed=sp.is_closed(closure_e),
        kernel_normal=result.report.kernel_is_normal,
        kernel_antidiscrete=result.report.kernel_antidiscrete,
        quotient_t1=quotient_t1,
        projection_preserves_topology=result.report.projection_preserves_topology,
    )


# -- homomorphism checks -------------------------------------------------------------


@dataclass(frozen=True)
class QuotientHomReport:
    is_quotient: bool
    open_when_quotient: Optional[bool]
    codomain_semitopological_when_quotient: Optional[bool]
    preserving: bool
    kernel_antidiscrete: bool
    codomain_semitopological_when_preserving: Optional[bool]

    @property
    def equivalence_holds(self) -> bool:
        return self.preserving == (self.is_quotient and self.kernel_antidiscrete)

    @property
    def passed(self) -> bool:
        return self.equivalence_holds and all(
            item is not False
            for item in (
                self.open_when_quotient,
                self.codomain_semitopological_when_quotient,
                self.codomain_semitopological_when_preserving,
            )
        )


def quotient_homomorphism_check(phi: GroupHomomorphism) -> QuotientHomReport:
    """Surjective homomorphisms from a semitopological group: a quotient
    homomorphism is open and pushes semitopologicality down, and it
    preserves the topology exactly when its kernel is antidiscrete."""
    if not phi.is_surjective():
        raise NotSurjective("homomorphism is not surjective")
    if not phi.domain.profile().semitopological:
        raise DomainNotSemitopological(f"{phi.domain.name} is not semitopological")
    f = phi.space_map
    quotient = is_quotient_map(f)
    preserving = preserves_topology(f)
    kernel_anti = _antidiscrete_subset(phi.domain.space, phi.kernel_mask())
    cod_semi = phi.codomain.profile().semitopological
    return QuotientHomReport(
        is_quotient=quotient,
        open_when_quotient=is_open_map(f) if quotient else None,
        codomain_semitopological_when_quotient=cod_semi if quotient else None,
        preserving=preserving,
        kernel_antidiscrete=kernel_anti,
        codomain_semitopological_when_preserving=cod_semi if preserving else None,
    )


PRESERVED_CLASSES = (
    "semitopological",
    "quasitopological",
    "paratopological",
    "almost_paratopological",
    "compact",
)


@dataclass(frozen=True)
class ClassPreservation:
    flags: dict[str, tuple[bool, bool]]

    @property
    def preserved(self) -> dict[str, bool]:
        return {name: a == b for name, (a, b) in self.flags.items()}

    @property
    def all_preserved(self) -> bool:
        return all(self.preserved.values())


def class_preservation_check(phi: GroupHomomorphism) -> ClassPreservation:
    """Along a topology-preserving homomorphism, membership in each class
    must transfer both ways; compactness is constant-true on finite
    carriers and recorded as trivially preserved."""
    if not preserves_topology(phi.space_map):
        raise NotTopologyPreserving("homomorphism does not preserve the topology")
    dom = phi.domain.profile().as_dict()
    cod = phi.codomain.profile().as_dict()
    flags = {}
    for name in PRESERVED_CLASSES:
        if name == "compact":
            flags[name] = (True, True)
        else:
            flags[name] = (dom[name], cod[name])
    return ClassPreservation(flags)


# -- subgroups and products ------------------------------------------------------------


def subgroup_with_subspace(g: GroupWithTopology, subset) -> GroupWithTopology:
    """Subgroup on the given subset with the trace topology, re-indexed
    along the sorted member list (the identity stays at index 0)."""
    mask = subset if isinstance(subset, int) else sum(1 << p for p in subset)
    if not g.group.is_subgroup_mask(mask):
        raise NotASubgroup(f"{points_of(mask)} is not a subgroup of {g.name}")
    pts = points_of(mask)
    index = {p: i for i, p in enumerate(pts)}
    table = [[index[g.group.mul(a, b)] for b in pts] for a in pts]
    sub_group = FiniteGroup(table, name=f"{g.name}|{pts}")
    sub_space, _ = subspace_with_points(g.space, mask)
    return GroupWithTopology(sub_group, sub_space)


def product_group(a: GroupWithTopology, b: GroupWithTopology) -> GroupWithTopology:
    """Direct product with the product topology; pairs indexed row-major,
    matching the group and space product conventions."""
    grp = direct_product(a.group, b.group)
    space = product(a.space, b.space)
    return GroupWithTopology(grp, space)


# -- the ternary heteroassociative operation ------------------------------------------


@dataclass(frozen=True)
class MaltsevReport:
    identities_hold: bool
    separate_continuity: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.identities_hold and self.separate_continuity is not False


def maltsev_check(g: GroupWithTopology) -> MaltsevReport:
    """Check M(x,y,z) = x*y^-1*z: the two identities M(x,y,y)=x=M(y,y,x)
    over all pairs, and, on quasitopological fixtures, continuity of every
    one-variable slice."""
    grp, sp = g.group, g.space
    n = grp.order

    def m(x, y, z):
        return grp.mul(grp.mul(x, grp.inv(y)), z)

    identities = all(
        m(x, y, y) == x and m(y, y, x) == x for x in range(n) for y in range(n)
    )
    if not g.profile().quasitopological:
        return MaltsevReport(identities, None)
    continuous = True
    for a in range(n):
        for b in range(n):
            slices = (
                [m(x, a, b) for x in range(n)],
                [m(a, y, b) for y in range(n)],
                [m(a, b, z) for z in range(n)],
            )
            if not all(
                is_continuous(SpaceMap(sp, sp, tbl)) for tbl in slices
            ):
                continuous = False
                break
        if not continuous:
            break
    return MaltsevReport(identities, continuous)

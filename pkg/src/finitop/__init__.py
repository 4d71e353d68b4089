"""finitop: finite topological spaces, groups with topology, and
exhaustive verification of their structure theory at desk scale."""

from finitop._kernel import BACKEND
from finitop.enumeration import (
    DEFAULT_GROUP_SPECS,
    MINING_TARGETS,
    canonical_up_to_homeomorphism,
    enumerate_group_topologies,
    enumerate_topologies,
    mine,
    topology_count_oracle,
    topology_families_oracle,
)
from finitop.groups import FiniteGroup, builtin_group, direct_product
from finitop.grouptop import (
    ClassProfile,
    GroupHomomorphism,
    GroupWithTopology,
    class_preservation_check,
    class_profile,
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
    MapProfile,
    SpaceMap,
    map_profile,
    preservation_equivalence,
    preserves_topology,
)
from finitop.spaces import (
    EVERY_FINITE_SPACE_IS_COMPACT,
    FiniteSpace,
    Preorder,
    SeparationProfile,
    antidiscrete_space,
    discrete_space,
    is_homogeneous,
    product,
    quotient_by_partition,
    self_homeomorphisms,
    sierpinski_space,
    space_from_preorder,
    specialization_preorder,
    subspace,
    t0_quotient,
    validate_topology,
)
from finitop.suite import Bounds, VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bounds",
    "ClassProfile",
    "DEFAULT_GROUP_SPECS",
    "EVERY_FINITE_SPACE_IS_COMPACT",
    "FiniteGroup",
    "FiniteSpace",
    "GroupHomomorphism",
    "GroupWithTopology",
    "MapProfile",
    "MINING_TARGETS",
    "Preorder",
    "SeparationProfile",
    "SpaceMap",
    "VerificationReport",
    "antidiscrete_space",
    "builtin_group",
    "canonical_up_to_homeomorphism",
    "class_preservation_check",
    "class_profile",
    "closure_formula_check",
    "core_criterion_check",
    "direct_product",
    "discrete_space",
    "enumerate_group_topologies",
    "enumerate_topologies",
    "identity_core",
    "inversion_graph_analysis",
    "is_homogeneous",
    "maltsev_check",
    "map_profile",
    "mine",
    "preservation_equivalence",
    "preserves_topology",
    "product",
    "product_group",
    "quotient_by_partition",
    "quotient_homomorphism_check",
    "run_suite",
    "self_homeomorphisms",
    "sierpinski_space",
    "space_from_preorder",
    "specialization_preorder",
    "subgroup_with_subspace",
    "subspace",
    "symmetrization_check",
    "symmetrize",
    "t0_quotient",
    "t0_quotient_group",
    "t1_equivalence_check",
    "t1_quotient_check",
    "topology_count_oracle",
    "topology_families_oracle",
    "validate_topology",
]

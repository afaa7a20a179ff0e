"""Toolkit for congruence-uniform lattices and their core label orders."""

from .biclosed import (
    ClosureOperator,
    biclosed_family,
    biclosed_poset,
    canonical_family_key,
    closed_family,
    closed_sets_lattice,
    is_single_step,
    moore_families,
    operator_from_family,
    read_closure_text,
    search_problem_6_1,
    validate,
    write_closure_text,
)
from .canon import are_isomorphic, canonical_key, canonical_key_poset
from .congruence import (
    Congruence,
    CongruenceLattice,
    cg,
    cg_join_irreducible,
    congruence_lattice,
    identity_congruence,
    is_congruence_uniform,
    kernel_irreducibles,
    quotient,
)
from .core_label import (
    CoreLabelOrder,
    CoverLabeling,
    boolean_defect,
    boolean_nexus,
    check_swap_lemma,
    core_label_order,
    crosscut_complex,
    gamma,
    has_intersection_property,
    is_clo_lattice,
    is_clo_meet_semilattice,
    label_covers,
    nucleus,
    psi,
)
from .doubling import (
    DoublingScript,
    double,
    double_interval,
    generate_cu,
    irreducible_count_delta,
    read_script,
    run_intervals,
    run_script,
    singleton_lattice,
    write_script,
)
from .enumeration import (
    CountsRow,
    ScanFailure,
    ScanReport,
    enumerate_lattices,
    smallest_counterexample_scan,
    table1,
)
from .lattice import (
    JoinIrreducibleIndex,
    Lattice,
    NotALattice,
    Verdict,
    as_lattice,
    atoms,
    canonical_join_representation,
    coatoms,
    crosscut_mobius,
    is_atomic,
    is_crosscut,
    is_join_semidistributive,
    is_meet_semidistributive,
    is_semidistributive,
    is_spherical,
    join_irreducibles,
    meet_irreducibles,
)
from .poset import (
    CycleError,
    FormatError,
    Poset,
    from_covers,
    read_poset_json,
    read_poset_text,
    write_poset_json,
    write_poset_text,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureOperator",
    "Congruence",
    "CongruenceLattice",
    "CoreLabelOrder",
    "CountsRow",
    "CoverLabeling",
    "CycleError",
    "DoublingScript",
    "FormatError",
    "JoinIrreducibleIndex",
    "Lattice",
    "NotALattice",
    "Poset",
    "ScanFailure",
    "ScanReport",
    "Verdict",
    "are_isomorphic",
    "as_lattice",
    "atoms",
    "biclosed_family",
    "biclosed_poset",
    "boolean_defect",
    "boolean_nexus",
    "canonical_family_key",
    "canonical_join_representation",
    "canonical_key",
    "canonical_key_poset",
    "cg",
    "cg_join_irreducible",
    "check_swap_lemma",
    "closed_family",
    "closed_sets_lattice",
    "coatoms",
    "congruence_lattice",
    "core_label_order",
    "crosscut_complex",
    "crosscut_mobius",
    "double",
    "double_interval",
    "enumerate_lattices",
    "from_covers",
    "gamma",
    "generate_cu",
    "has_intersection_property",
    "identity_congruence",
    "irreducible_count_delta",
    "is_atomic",
    "is_clo_lattice",
    "is_clo_meet_semilattice",
    "is_congruence_uniform",
    "is_crosscut",
    "is_join_semidistributive",
    "is_meet_semidistributive",
    "is_semidistributive",
    "is_single_step",
    "is_spherical",
    "join_irreducibles",
    "kernel_irreducibles",
    "label_covers",
    "meet_irreducibles",
    "moore_families",
    "nucleus",
    "operator_from_family",
    "psi",
    "quotient",
    "read_closure_text",
    "read_poset_json",
    "read_poset_text",
    "read_script",
    "run_intervals",
    "run_script",
    "search_problem_6_1",
    "singleton_lattice",
    "smallest_counterexample_scan",
    "table1",
    "validate",
    "write_closure_text",
    "write_poset_json",
    "write_poset_text",
    "write_script",
]

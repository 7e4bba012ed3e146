"""domlab: a desk-scale laboratory for domination structure in small graphs.

Exact domination and independent-domination solvers, a bit-exact graph6
codec, domination-preserving graph surgery, seamlessly linked families of
0-mod-3 cycles, and a sweep harness that audits the package's structural
claims over graph corpora.
"""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    components,
    delete_edges,
    delete_vertices,
    gnp_random,
    is_connected,
    is_cubic,
    named_graph,
    random_cubic,
    vertex_connectivity,
)
from .graph6 import Graph6ParseError, encode_graph6, parse_graph6, read_graph6_lines
from .domination import (
    DominationCertificate,
    SolverTimeout,
    enumerate_min_dsets,
    gamma_bruteforce,
    gamma_exact,
    gamma_min_edges,
    idom_exact,
    is_dominating,
)
from .reduction import (
    AuditVerdict,
    check_detach_fact,
    check_excess_gamma,
    check_pair_separation,
    check_removal_fact,
    check_third_bound,
    detach_transform,
    detachable_vertices,
    find_forbidden_core,
    find_induced_claw,
    greedy_removable_subset,
    removable_edges,
)
from .cycles import (
    BudgetExceeded,
    Cycle,
    EarDecomposition,
    ear_decomposition,
    fan_paths,
    first_mod3_cycle,
    mod3_cycles,
    path_with_residue,
)
from .seams import (
    CycleCollection,
    EarLink,
    assign_marks,
    audit_leftover_single,
    audit_mod3_nonempty,
    audit_two_spaced_paths,
    classify_attachments,
    family_dset_audit,
    find_seam_extension,
    has_mark_every_third,
    prune_nonexclusive,
    seamless_families,
    spaced_assignments,
)

__all__ = [
    "__version__",
    "Graph",
    "components",
    "delete_edges",
    "delete_vertices",
    "gnp_random",
    "is_connected",
    "is_cubic",
    "named_graph",
    "random_cubic",
    "vertex_connectivity",
    "Graph6ParseError",
    "encode_graph6",
    "parse_graph6",
    "read_graph6_lines",
    "DominationCertificate",
    "SolverTimeout",
    "enumerate_min_dsets",
    "gamma_bruteforce",
    "gamma_exact",
    "gamma_min_edges",
    "idom_exact",
    "is_dominating",
    "AuditVerdict",
    "check_detach_fact",
    "check_excess_gamma",
    "check_pair_separation",
    "check_removal_fact",
    "check_third_bound",
    "detach_transform",
    "detachable_vertices",
    "find_forbidden_core",
    "find_induced_claw",
    "greedy_removable_subset",
    "removable_edges",
    "BudgetExceeded",
    "Cycle",
    "EarDecomposition",
    "ear_decomposition",
    "fan_paths",
    "first_mod3_cycle",
    "mod3_cycles",
    "path_with_residue",
    "CycleCollection",
    "EarLink",
    "assign_marks",
    "audit_leftover_single",
    "audit_mod3_nonempty",
    "audit_two_spaced_paths",
    "classify_attachments",
    "family_dset_audit",
    "find_seam_extension",
    "has_mark_every_third",
    "prune_nonexclusive",
    "seamless_families",
    "spaced_assignments",
]

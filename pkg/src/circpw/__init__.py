"""Certified pathwidth bounds for graphs of bounded circumference, with
exact exponential-time oracles to check them at small sizes."""
from .bounds import (
    Thm1Certificate,
    block_decompositions,
    lemma2_bound,
    lemma2_compose,
    lemma2_decompose,
    thm1_bound,
    thm1_decompose,
)
from .decomposition import (
    PathDecomposition,
    ValidationReport,
    forest_closure_decomposition,
    is_normalised,
    normalise,
    validate,
    width,
)
from .errors import (
    BudgetError,
    CircpwError,
    ParseError,
    PreconditionError,
    ProofAssertionError,
    VerificationError,
)
from .gadgets import (
    cbt_plus_dominants,
    disjoint_cycles,
    hub_forest,
    named,
    outerplanar_family,
    proposition1_certificate,
)
from .graph import (
    BlockCutForest,
    Graph,
    RootedForest,
    block_cut_forest,
    dfs_tree,
    is_k_connected,
    vertex_connectivity,
)
from .io import format_graph, parse_graph
from .oracles import (
    OracleBudget,
    circumference,
    exact_pathwidth,
    exact_treedepth,
    longest_path_edges,
    max_long_cycle_packing,
    minor_contains,
    transversal_number,
)
from .packing import (
    CyclePacking,
    HittingSet,
    PipelineOutcome,
    PipelineParams,
    TreeCycle,
    bbr_bound,
    min_hitting_set,
    pipeline_params,
    reroute_cycles,
    thm2_pipeline,
)
from .trees import (
    LabeledCBT,
    MinorModel,
    RootedPwMap,
    Subdivision,
    cbt,
    extract_cbt_minor,
    leaf_distance,
    minor_to_subdivision,
    rooted_decomposition,
    rooted_pw_map,
)

__version__ = "0.1.0"

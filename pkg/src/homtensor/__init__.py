"""Exact evaluation of graph homomorphism functions, Holant problems and
connection tensors over QQ and GF(p)."""

from .field import GF, QQ, GFElement, field_of, parse_field
from .linalg import matrix_rank, solve_linear, solve_vandermonde
from .graphs import (
    LabeledGraph,
    MultiGraph,
    disjoint_union,
    glue,
    glue_all,
    incidence_graph,
    make_K,
    make_P,
    make_U,
    make_cycle,
    make_path,
    make_star,
)
from .hom import WeightedGraph, hom, hom_phi
from .symtensor import (
    SymTensor,
    WaringDecomposition,
    decompose_M,
    eval_power_sum,
    make_M,
    power_independence_check,
    sym_rank_bruteforce_dim2,
)
from .holant import (
    HolantInstance,
    bipartite_holant,
    ec,
    holant,
    holographic_move,
    partial_param,
    pm,
    vdcc,
    wm,
)
from .connection import (
    build_N_restricted,
    build_W,
    connection_slice,
    hom_decomposition_check,
    multiplicativity_test,
    parameter,
    pm_rank_experiment,
    pset,
)
from .express import build_wm_target, lower_bound_witness, verify_expressibility
from .partitions import (
    enumerate_partitions,
    hardcore_matrix,
    hardcore_parameter,
    hardcore_rank_experiment,
    join,
)

__version__ = "0.1.0"

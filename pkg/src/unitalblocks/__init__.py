"""K_{s+2}-free graphs from random blocks on the Hermitian unital, with verifiers."""
from .blocks import BlockGraph, BlockPartition, C4Violation, block_graph, build_H, random_blocks, verify_ks2_free
from .containers import (
    ContainerFamily,
    ContainerParams,
    UniformHypergraph,
    check_codegree,
    container_family,
    container_step,
    count_ksfree_bound,
    delta_ell,
    iterate_containers,
    niceness_check,
    select_scale,
)
from .field import FieldCtx, UnsupportedOrder, build_field
from .graph import DenseGraph, alpha_s_exact, alpha_s_greedy, count_triangles, enumerate_ks, has_clique
from .harness import ExperimentRecord, PipelineConfig, pipeline_theorem, scaling_experiment, sparsify
from .lemma22 import lemma22_exhaustive, lemma22_witness
from .unital import UnitalIncidence, build_incidence, verify_unital

__version__ = "0.1.0"

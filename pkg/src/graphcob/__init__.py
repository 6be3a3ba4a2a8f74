"""Graph cobordisms between finite sets, at the combinatorial level.

Gafs (graphs attached to finite sets) are the 1-morphisms, tree collapses
between them the 2-morphisms. The subpackages cover validation, the three
compositions, canonical generators, gradings, normalization, realization as
cospans and bounded enumeration.
"""

from graphcob.catalog import (
    Move,
    NerveData,
    canonical_key,
    enumerate_gafs,
    expansions,
    nerve_export,
    zigzag_connected,
)
from graphcob.cospan import (
    CospanNF,
    NFComponent,
    compose_nf,
    identity_nf,
    realize_nf,
    tensor_nf,
    verify_re_functorial,
)
from graphcob.errors import GafError
from graphcob.gaf import (
    FinMap,
    Gaf,
    components,
    edges,
    empty_gaf,
    is_based_tree,
    is_nonbased_tree,
    is_tree,
    realization_invariants,
    sub_gaf,
    validate_gaf,
    valence,
)
from graphcob.generators import (
    GENERATORS,
    gen_beta,
    gen_tbeta,
    is_c2_equivariant,
    verify_graphlike_axioms,
)
from graphcob.grading import (
    ColoredMorphism,
    Coloring,
    ce,
    grade,
    grade_s,
    is_leaf,
    is_leaf_like,
    spine,
    ve,
)
from graphcob.iso import automorphisms, canonical_form, is_isomorphic
from graphcob.monoidal import compose_h, compose_h_m, embed_finmap, identity_gaf, tensor, tensor_m
from graphcob.morphism import (
    GafMorphism,
    collapse_edges,
    compose_v,
    identity_morphism,
    is_valid_morphism,
    morphisms_between,
    validate_morphism,
)
from graphcob.normalize import collapse_bridges, collapse_unmarked_leaves, reduce

__version__ = "0.1.0"

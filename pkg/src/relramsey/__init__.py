"""Finite structural Ramsey toolkit.

Relational structures and classes of them, canonical expansions, partition
arrow relations, relative Ramsey checks for expansion pairs, bounded
class-level scans, and certificates that replay independently.
"""

from .canonical import canonical_form, canonical_key, canonical_labeling
from .certificates import EXHAUSTED, FAILS, HOLDS, Certificate, Coloring
from .checks import (
    arrow_check,
    classwise_mono_check,
    rel_arrow_emb_check,
    rel_arrow_emb_strong_check,
    rel_arrow_struct_check,
)
from .classes import (
    Axiom,
    ClassError,
    ClassSpec,
    ExpansionPair,
    builtin_class,
    check_ap,
    check_hp,
    check_jep,
    check_membership,
    load_user_class,
    pair_from_string,
    resolve_class,
)
from .cnf import encode as encode_cnf
from .expansions import (
    canonical_expansion,
    copy_equivalent,
    emb_equivalent,
    enumerate_expansions,
    equivalence_classes_copy,
    equivalence_classes_emb,
    precompactness_count,
)
from .scans import (
    DegreeBounds,
    expansion_property_check,
    find_ramsey_witness,
    find_rel_witness,
    ramsey_degree_bounds,
    rigidity_scan,
)
from .structures import (
    Copy,
    Embedding,
    Signature,
    Structure,
    StructureError,
    automorphisms,
    enumerate_copies,
    enumerate_embeddings,
    graph,
    is_isomorphic,
    is_rigid,
    linear_order,
    ordered_graph,
    pure_set,
    reduct,
)
from .verify import verify_certificate

__all__ = [name for name in dir() if not name.startswith("_")]

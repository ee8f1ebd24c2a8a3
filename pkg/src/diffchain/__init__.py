"""Difference chains over finite posets, Birkhoff duality for their upset
lattices, and closures of regular languages under bounded universal
quantification."""

from .errors import (
    AlphabetMismatchError,
    CapacityError,
    CycleError,
    DiffChainError,
    NotDecreasingError,
    NotSublatticeError,
    NotUpsetError,
    RangeError,
    TargetMismatchError,
)
from .poset import ElemSet, FinPoset, poset_from_json, poset_to_dot, poset_to_json
from .lattice import (
    UpsetLattice,
    ceiling,
    coheyting_minus,
    is_isomorphic,
    join_irreducibles,
    upsets_of,
)
from .chains import (
    DiffChain,
    MinimalityReport,
    canonical_chain,
    closure_in_sublattice,
    coheyting_chain,
    degree,
    degrees,
    evaluate,
    verify_minimality,
)
from .automata import (
    Dfa,
    FinMonoid,
    Hom,
    LpHom,
    Marked,
    TransitionMonoid,
    complement,
    dfa_all_words,
    dfa_from_json,
    dfa_no_words,
    dfa_nonempty_words,
    dfa_to_dot,
    dfa_to_json,
    difference,
    equivalent,
    erasing_hom,
    exists_adjoint,
    forall_adjoint,
    forward_lp_image,
    intersect,
    inverse_hom_image,
    is_empty_lang,
    marked_alphabet,
    minimize,
    projection_hom,
    shortest_word,
    structures_dfa,
    subset_of,
    tensor,
    transition_monoid,
    union,
    variables,
)
from .closure import (
    ChainTrace,
    chain_trace,
    closure_chain_terms,
    decompose_bpi1,
    family_monotonicity,
    is_pi1_k,
    pi1_closure,
    trace_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError",
    "CapacityError",
    "ChainTrace",
    "CycleError",
    "Dfa",
    "DiffChain",
    "DiffChainError",
    "ElemSet",
    "FinMonoid",
    "FinPoset",
    "Hom",
    "LpHom",
    "Marked",
    "MinimalityReport",
    "NotDecreasingError",
    "NotSublatticeError",
    "NotUpsetError",
    "RangeError",
    "TargetMismatchError",
    "TransitionMonoid",
    "UpsetLattice",
    "canonical_chain",
    "ceiling",
    "chain_trace",
    "closure_chain_terms",
    "closure_in_sublattice",
    "coheyting_chain",
    "coheyting_minus",
    "complement",
    "decompose_bpi1",
    "degree",
    "degrees",
    "dfa_all_words",
    "dfa_from_json",
    "dfa_no_words",
    "dfa_nonempty_words",
    "dfa_to_dot",
    "dfa_to_json",
    "difference",
    "equivalent",
    "erasing_hom",
    "evaluate",
    "exists_adjoint",
    "family_monotonicity",
    "forall_adjoint",
    "forward_lp_image",
    "intersect",
    "inverse_hom_image",
    "is_empty_lang",
    "is_isomorphic",
    "is_pi1_k",
    "join_irreducibles",
    "marked_alphabet",
    "minimize",
    "pi1_closure",
    "poset_from_json",
    "poset_to_dot",
    "poset_to_json",
    "projection_hom",
    "shortest_word",
    "structures_dfa",
    "subset_of",
    "tensor",
    "trace_to_json",
    "transition_monoid",
    "union",
    "upsets_of",
    "variables",
    "verify_minimality",
]

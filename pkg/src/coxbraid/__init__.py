"""Word and root-sequence combinatorics of simply laced Coxeter groups.

Exact-arithmetic machinery for reduced words, braid moves, commutation
classes, inversion triples, freely braided elements and the projection
onto fully commutative elements, plus an exhaustive verification suite
and a command-line front end (``coxeter``).
"""

from .core import (
    BudgetExceededError,
    Columns,
    CoxeterGraph,
    DEFAULT_ELEMENT_BUDGET,
    DuplicateVertexError,
    GraphError,
    GroupElement,
    Letter,
    MalformedGraphError,
    Root,
    SelfLoopError,
    UnknownVertexError,
    Word,
    coxeter_form,
    element_of,
    element_word,
    enumerate_elements,
    form_value,
    graph_to_json,
    height,
    identity_element,
    is_negative_root,
    is_positive_root,
    multiply_generator,
    parse_graph,
    reflect,
    roots_orthogonal,
    simple_root,
    validate_root,
    word_root_entries,
)
from .words import (
    BraidMove,
    CommutationClassSet,
    DEFAULT_WORD_BUDGET,
    InvalidMoveError,
    NotReducedError,
    apply_move,
    braid_moves,
    commutation_classes,
    has_iji_subword,
    is_fully_commutative,
    is_reduced,
    reduced_words,
    word_sort_key,
)
from .inversions import (
    RootSequence,
    Triple,
    contractible_triple_count,
    contractible_triples,
    inversion_set,
    inversion_triples,
    is_contractible,
    is_freely_braided,
    make_triple,
    root_sequence,
    triple_components,
    word_from_root_sequence,
)
from .signature import (
    ClassOrder,
    Precedence,
    TripleSignature,
    class_order,
    class_signature,
    default_precedence,
    separates,
    signature_image,
    signature_injective,
    signature_surjective,
    triple_key,
)
from .contraction import (
    BraidSeq,
    DeletionStep,
    NotContractedError,
    NotFreelyBraidedError,
    WeakOrderStepReport,
    block_positions,
    braid_deletion,
    braid_sequences,
    close_words,
    contracted_reduced_word,
    fc_projection,
    is_contracted,
    max_braid_terms,
    projection_trace,
    weak_order_step,
)
from .analysis import (
    CheckResult,
    Classification,
    ComponentType,
    GrowthRow,
    GrowthTable,
    VerifyReport,
    brute_force_growth,
    classify_graph,
    growth_probe,
    verify_suite,
)

__all__ = [
    "BraidMove",
    "BraidSeq",
    "BudgetExceededError",
    "CheckResult",
    "ClassOrder",
    "Classification",
    "Columns",
    "CommutationClassSet",
    "ComponentType",
    "CoxeterGraph",
    "DEFAULT_ELEMENT_BUDGET",
    "DEFAULT_WORD_BUDGET",
    "DeletionStep",
    "DuplicateVertexError",
    "GraphError",
    "GroupElement",
    "GrowthRow",
    "GrowthTable",
    "InvalidMoveError",
    "Letter",
    "MalformedGraphError",
    "NotContractedError",
    "NotFreelyBraidedError",
    "NotReducedError",
    "Precedence",
    "Root",
    "RootSequence",
    "SelfLoopError",
    "Triple",
    "TripleSignature",
    "UnknownVertexError",
    "VerifyReport",
    "WeakOrderStepReport",
    "Word",
    "apply_move",
    "block_positions",
    "braid_deletion",
    "braid_moves",
    "braid_sequences",
    "brute_force_growth",
    "class_order",
    "class_signature",
    "classify_graph",
    "close_words",
    "commutation_classes",
    "contractible_triple_count",
    "contractible_triples",
    "contracted_reduced_word",
    "coxeter_form",
    "default_precedence",
    "element_of",
    "element_word",
    "enumerate_elements",
    "fc_projection",
    "form_value",
    "graph_to_json",
    "growth_probe",
    "has_iji_subword",
    "height",
    "identity_element",
    "inversion_set",
    "inversion_triples",
    "is_contractible",
    "is_contracted",
    "is_freely_braided",
    "is_fully_commutative",
    "is_negative_root",
    "is_positive_root",
    "is_reduced",
    "make_triple",
    "max_braid_terms",
    "multiply_generator",
    "parse_graph",
    "projection_trace",
    "reduced_words",
    "reflect",
    "root_sequence",
    "roots_orthogonal",
    "separates",
    "signature_image",
    "signature_injective",
    "signature_surjective",
    "simple_root",
    "triple_components",
    "triple_key",
    "validate_root",
    "verify_suite",
    "weak_order_step",
    "word_from_root_sequence",
    "word_root_entries",
    "word_sort_key",
]

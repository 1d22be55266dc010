"""Coherence of associativity via the restricted moves ``a<i>``, and
Thompson's group F as reduced tree pairs."""

from .expr import (
    LEAF,
    CapExceededError,
    CoherenceError,
    Expr,
    InvalidAddressError,
    Leaf,
    Metrics,
    Node,
    ParseError,
    enumerate_exprs,
    is_fully_normalized,
    leaf_count,
    left_comb,
    metrics,
    parse,
    render,
    right_comb,
    subtree_at,
)
from .fgroup import (
    TreePair,
    canonical_word,
    common_refinement,
    equal,
    from_word,
    invert,
    multiply,
    reduce_pair,
)
from .moves import (
    InapplicableMoveError,
    Letter,
    MoveTable,
    apply_alpha,
    apply_alpha_inv,
    can_apply,
    generator_template,
    rotate_at,
)
from .normalize import (
    LeafCountMismatchError,
    apply_word,
    canonical_iso,
    format_word,
    free_reduce,
    is_canonical_word,
    normalize_word,
    parse_word,
    rewrite_positive,
)

__version__ = "0.1.0"

__all__ = [
    "LEAF",
    "CapExceededError",
    "CoherenceError",
    "Expr",
    "InvalidAddressError",
    "Leaf",
    "Metrics",
    "Node",
    "ParseError",
    "enumerate_exprs",
    "is_fully_normalized",
    "leaf_count",
    "left_comb",
    "metrics",
    "parse",
    "render",
    "right_comb",
    "subtree_at",
    "TreePair",
    "canonical_word",
    "common_refinement",
    "equal",
    "from_word",
    "invert",
    "multiply",
    "reduce_pair",
    "InapplicableMoveError",
    "Letter",
    "MoveTable",
    "apply_alpha",
    "apply_alpha_inv",
    "can_apply",
    "generator_template",
    "rotate_at",
    "LeafCountMismatchError",
    "apply_word",
    "canonical_iso",
    "format_word",
    "free_reduce",
    "is_canonical_word",
    "normalize_word",
    "parse_word",
    "rewrite_positive",
]

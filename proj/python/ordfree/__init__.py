"""Exact orderings of free products of ordered groups.

The heavy lifting lives in the compiled extension ``ordfree._core``; this
package re-exports its public surface.
"""

from ordfree._core import (
    BraidWord,
    DegenerateVecLexError,
    Element,
    Group,
    MissingAnswerError,
    Ordering,
    ParseError,
    ShapeMismatchError,
    Verdict,
    alpha,
    alpha_target,
    artin_apply,
    braid_tensor,
    check_order_preserving,
    compare,
    compare_with_certificate,
    element_universe,
    find_distinguishing_witness,
    free_group,
    generator,
    identity,
    inject,
    injectivity_check,
    inverse,
    is_bi_invariant,
    is_identity,
    kernel_membership,
    multiply,
    parse_braid,
    parse_element,
    parse_group,
    parse_order,
    power,
    print_element,
    replay,
    rho_string,
    run_selftest,
    validate,
)

__all__ = [
    "BraidWord",
    "DegenerateVecLexError",
    "Element",
    "Group",
    "MissingAnswerError",
    "Ordering",
    "ParseError",
    "ShapeMismatchError",
    "Verdict",
    "alpha",
    "alpha_target",
    "artin_apply",
    "braid_tensor",
    "check_order_preserving",
    "compare",
    "compare_with_certificate",
    "element_universe",
    "find_distinguishing_witness",
    "free_group",
    "generator",
    "identity",
    "inject",
    "injectivity_check",
    "inverse",
    "is_bi_invariant",
    "is_identity",
    "kernel_membership",
    "multiply",
    "parse_braid",
    "parse_element",
    "parse_group",
    "parse_order",
    "power",
    "print_element",
    "replay",
    "rho_string",
    "run_selftest",
    "validate",
]

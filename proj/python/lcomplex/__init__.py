"""l-complexity of multiples of l: tables, bounds, classification and checks."""

from ._core import (
    ComplexityTable,
    LcxError,
    build_table,
    check_a_set,
    classify,
    defect_histogram,
    digit_expression,
    evaluate,
    leaf_count,
    lower_bound,
    lower_bound_l1,
    reachable_sets_oracle,
    refined_lower_bound_2,
    scan_a_set,
    upper_bound_digits,
    verify_a_set,
    verify_bounds,
    verify_classify2_exhaustive,
    verify_conjecture_l1,
    verify_conjecture_l2,
    verify_oracle_equivalence,
    verify_question2,
    verify_question4,
    verify_question5,
    verify_reduction,
    verify_six_ten,
    verify_witnesses,
)

__all__ = [name for name in dir() if not name.startswith("_")]

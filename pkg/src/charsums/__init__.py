"""Exact character sums, primitive-element scans, and q-order censuses over
small finite fields, with every bound checked against brute-force truth."""

from .arith import Factorization, divisors, euler_phi, factorize, is_prime, moebius
from .fields import (
    BaseField,
    Element,
    FieldDescriptor,
    Poly,
    apply_linearized,
    build_field,
    degree_over_base,
    find_generator,
    frobenius,
    is_irreducible,
    is_primitive,
    minimal_polynomial,
    multiplicative_order,
    poly_gcd,
    squarefree_decomposition,
)
from .characters import Character, CharacterTable, build_table, characters_of_order
from .affine import (
    AffineSpace,
    affine_spaces,
    dichotomy,
    degree_ratio_witness,
    make_affine,
    parse_space_text,
    random_affine,
    subspaces,
)
from .sums import (
    BoundReport,
    affine_main_check,
    char_sum,
    katz_check,
    run_suite,
    translate_double_check,
    trivial_affine_check,
    violations,
    weil_check,
)
from .primitive import (
    count_primitive,
    digit_search,
    grassmann_threshold,
    primitive_indicator,
    primitive_space_scan,
    primitive_weight,
    translate_check,
)
from .knormal import (
    ArtinSchreierReport,
    CensusRow,
    KNormalSearchResult,
    NoDivisorError,
    artin_schreier_check,
    census_rows,
    divides_proper_binomial,
    factor_xn_minus_1,
    fq_order,
    fqp_knormal_scan,
    is_knormal,
    kernel_space,
    knormal_index,
    phi_q,
    primitive_knormal_search,
    smallest_primitive_root,
    xn1_divisors,
)
from .util import CapExceeded, derive_int, derive_rng

__version__ = "0.1.0"

__all__ = [
    "AffineSpace",
    "ArtinSchreierReport",
    "BaseField",
    "BoundReport",
    "CapExceeded",
    "CensusRow",
    "Character",
    "CharacterTable",
    "Element",
    "Factorization",
    "FieldDescriptor",
    "KNormalSearchResult",
    "NoDivisorError",
    "Poly",
    "affine_main_check",
    "affine_spaces",
    "apply_linearized",
    "artin_schreier_check",
    "build_field",
    "build_table",
    "census_rows",
    "char_sum",
    "characters_of_order",
    "count_primitive",
    "degree_over_base",
    "degree_ratio_witness",
    "derive_int",
    "derive_rng",
    "dichotomy",
    "digit_search",
    "divides_proper_binomial",
    "divisors",
    "euler_phi",
    "factor_xn_minus_1",
    "factorize",
    "find_generator",
    "fq_order",
    "fqp_knormal_scan",
    "frobenius",
    "grassmann_threshold",
    "is_irreducible",
    "is_knormal",
    "is_prime",
    "is_primitive",
    "katz_check",
    "kernel_space",
    "knormal_index",
    "make_affine",
    "minimal_polynomial",
    "moebius",
    "multiplicative_order",
    "parse_space_text",
    "phi_q",
    "poly_gcd",
    "primitive_indicator",
    "primitive_knormal_search",
    "primitive_space_scan",
    "primitive_weight",
    "random_affine",
    "run_suite",
    "smallest_primitive_root",
    "squarefree_decomposition",
    "subspaces",
    "translate_check",
    "translate_double_check",
    "trivial_affine_check",
    "violations",
    "weil_check",
    "xn1_divisors",
]

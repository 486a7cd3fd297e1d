"""Z2Z4-linear codes: Gray map, standard form, systematic encoding and permutation decoding."""

from .code import CodeType, StandardForm, Z2Z4Code, contains, dual, dual_type, is_binary_linear, min_distance, standard_form
from .core import (
    BinaryVector,
    CoordSet,
    MixedVector,
    gray,
    gray_inverse,
    hamming_distance,
    hamming_weight,
    inner_product,
    lee_distance,
    lee_weight,
    restrict,
)
from .decode import (
    DecodeOutcome,
    PDSet,
    decode_alternative,
    decode_syndrome,
    find_eq10_counterexample,
    info_correct,
    search_pd_set,
    syndrome,
    verify_pd_set,
)
from .encode import encode, eta, standard_info_set
from .perm import Permutation, apply, compose, format_cycles, generate_group, inverse, is_automorphism, parse_cycles

__version__ = "0.1.0"

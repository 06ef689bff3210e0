"""Error-detecting 3-symbol codes built from finite-field latin squares."""

from .analysis import ErrorReport, count_errors, count_phonetic, find_error_pairs, is_check_table
from .catalog import builtin, builtin_names, ean3, luhn3, small_code
from .codegen import (
    CodeError,
    CodeParams,
    CodeTable,
    WordCode,
    alpha_params,
    base_code,
    cyclic_safe,
    enumerate_BE,
    insert_extend,
    solve_missing,
    validate_params,
)
from .composite import base26_family, crt36, family_seq, grouped, grouped_preset, mod37_code, product
from .galois import FieldSpec, build_field

__version__ = "0.1.0"

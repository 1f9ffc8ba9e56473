"""Primitive elements and palindromes in free groups of small rank."""
from .construction import (
    CircleDiagram,
    build_diagram,
    conjugacy_class,
    construct,
    is_primitive,
    is_primitive_fast,
    oz_word,
)
from .decomposition import (
    PingPongCase,
    PingPongResult,
    Side,
    WidthDecomposition,
    WidthTag,
    all_splits,
    classify_primitive_form,
    easy_case_extract,
    palindromic_width_leq2,
    pingpong_decompose,
    split_concat_two_palindromes,
)
from .errors import *  # noqa: F401,F403
from .oracle import (
    enumerate_palindromes,
    enumerate_words,
    product_two_palindromes_oracle,
    whitehead_primitive,
)
from .palindromic import (
    FirstPointSolution,
    NearPalindromicPair,
    is_basis,
    near_palindromic_pair,
    palindrome_first_point,
    palindromic_basis,
    palindromic_primitive,
)
from .words import (
    ExponentPair,
    Letter,
    Word,
    concat_group,
    concat_wc,
    cyclic_reduce,
    exponent_sums,
    format_word,
    invert,
    is_palindrome,
    parse_word,
    reduce,
    reverse,
    rotations,
)

__version__ = "0.1.0"

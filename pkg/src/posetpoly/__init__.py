"""Finite posets, polynomial domination, and maximal small ideals.

The package carries a finite poset of variables into the polynomial ring
over those variables, classifies polynomials as small (dominated by some
variable) or big, builds the maximal small ideals, and extracts maximal
poset elements through that machinery, with every step independently
verifiable.
"""

from .errors import (
    CycleError,
    EmptyPosetError,
    InternalError,
    ParseError,
    PosetPolyError,
    PreconditionError,
    SizeLimitError,
    UnknownNodeError,
    UnknownVariableError,
)
from .ideals import (
    CertificateReport,
    ProbeResult,
    VarIdeal,
    big_witness,
    certify_maximality,
    is_small_var_ideal,
    maximal_small_ideals,
    var_ideal_decomposition,
    var_ideal_member,
)
from .polyring import (
    Monomial,
    Polynomial,
    add,
    degree,
    format_poly,
    mul,
    parse_poly,
)
from .poset import (
    Poset,
    build_poset,
    induced_subposet,
    maximal_compatible_subsets_bruteforce,
    parse_poset,
    verify_axioms,
)
from .smallness import (
    degree_shift,
    dominated_by,
    dominating_witness,
    is_big,
    is_small,
    split_at,
)
from .testkit import (
    DEFAULT_SEED,
    GenConfig,
    all_posets_up_to,
    derive_seed,
    random_polynomial,
    random_poset,
)
from .zorn import (
    ChoiceFamily,
    PartialChoice,
    PipelineTrace,
    chain_poset,
    choice_poset,
    decode_chain,
    decode_partial_choice,
    encode_chain,
    encode_partial_choice,
    extract_choice,
    extract_maximal_via_chains,
    parse_family,
    wzl_pipeline,
)

__all__ = [
    "CertificateReport",
    "ChoiceFamily",
    "CycleError",
    "DEFAULT_SEED",
    "EmptyPosetError",
    "GenConfig",
    "InternalError",
    "Monomial",
    "ParseError",
    "PartialChoice",
    "PipelineTrace",
    "Polynomial",
    "Poset",
    "PosetPolyError",
    "PreconditionError",
    "ProbeResult",
    "SizeLimitError",
    "UnknownNodeError",
    "UnknownVariableError",
    "VarIdeal",
    "add",
    "all_posets_up_to",
    "big_witness",
    "build_poset",
    "certify_maximality",
    "chain_poset",
    "choice_poset",
    "decode_chain",
    "decode_partial_choice",
    "degree",
    "degree_shift",
    "derive_seed",
    "dominated_by",
    "dominating_witness",
    "encode_chain",
    "encode_partial_choice",
    "extract_choice",
    "extract_maximal_via_chains",
    "format_poly",
    "induced_subposet",
    "is_big",
    "is_small",
    "is_small_var_ideal",
    "maximal_compatible_subsets_bruteforce",
    "maximal_small_ideals",
    "mul",
    "parse_family",
    "parse_poly",
    "parse_poset",
    "random_polynomial",
    "random_poset",
    "split_at",
    "var_ideal_decomposition",
    "var_ideal_member",
    "verify_axioms",
    "wzl_pipeline",
]

"""codekraft: exact Kraft sums, unique decipherability, and the refinement
order on variable-length codes.

All arithmetic is exact rational; all decision procedures emit
independently checkable certificates.
"""

from .core import (
    Alphabet,
    Code,
    Factorization,
    KraftValue,
    Word,
    concat,
    make_code,
    parse_word,
)
from .decipher import UdVerdict, is_ud, is_ud_bruteforce
from .errors import (
    ChainViolationError,
    CodeError,
    CodeFileError,
    EmptyCodeError,
    EmptyWordError,
    MissingAlphabetError,
    MixedAlphabetsError,
    NotRefinementError,
    ResourceLimitError,
    UnknownSymbolError,
)
from .kraft import approx_str, exact_str, kraft_power, kraft_sum
from .power import PowerChain, code_power, power_chain, word_tuples
from .props import (
    PropositionId,
    PropositionReport,
    check_chain,
    check_equal_kraft_finiteness,
    check_mcmillan,
    check_monotonicity,
    check_power_law,
    equal_kraft_refinements,
)
from .refine import (
    RefinementVerdict,
    cover_exponent_bound,
    factorizations,
    first_factorization,
    irredundant_refinements,
    is_irredundant_refinement,
    is_refinement,
)
from .cli import CodeFile, emit_code_file, export_hasse, parse_code_file, run_command

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ChainViolationError",
    "Code",
    "CodeError",
    "CodeFile",
    "CodeFileError",
    "EmptyCodeError",
    "EmptyWordError",
    "Factorization",
    "KraftValue",
    "MissingAlphabetError",
    "MixedAlphabetsError",
    "NotRefinementError",
    "PowerChain",
    "PropositionId",
    "PropositionReport",
    "RefinementVerdict",
    "ResourceLimitError",
    "UdVerdict",
    "UnknownSymbolError",
    "Word",
    "approx_str",
    "check_chain",
    "check_equal_kraft_finiteness",
    "check_mcmillan",
    "check_monotonicity",
    "check_power_law",
    "code_power",
    "concat",
    "cover_exponent_bound",
    "emit_code_file",
    "equal_kraft_refinements",
    "exact_str",
    "export_hasse",
    "factorizations",
    "first_factorization",
    "irredundant_refinements",
    "is_irredundant_refinement",
    "is_refinement",
    "is_ud",
    "is_ud_bruteforce",
    "kraft_power",
    "kraft_sum",
    "make_code",
    "parse_code_file",
    "parse_word",
    "power_chain",
    "run_command",
    "word_tuples",
]

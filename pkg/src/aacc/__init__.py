"""Anti-averaging-collusion fingerprinting codes.

Exact averaging attacks, descendant codes, soft / multiset / two-stage
tracing, brute-force code-class verifiers, concatenation, and a
spread-spectrum embedding simulator.
"""

__version__ = "0.1.0"

from .attack import AttackError, averaging_attack, multiset_averaging_attack, residual_word
from .code import (
    Code,
    CodeError,
    CodewordMultiset,
    GeneratedWord,
    PositionSets,
    index_set,
    parse_code,
    serialize_code,
)
from .concat import ConcatSpec, concatenate, decompose, window
from .descend import (
    EnumerationCapExceeded,
    desc_from_word,
    descendant,
    parent_intersection,
    parent_sets,
    suspects,
)
from .props import (
    Budget,
    BudgetExceeded,
    PropertyVerdict,
    code_rate,
    has_udc,
    is_frameproof,
    is_scld,
    is_separable,
    is_smippc,
    is_strongly_separable,
)
from .trace import (
    TraceOutcome,
    TraceStatus,
    colluder_count_lcm,
    colluder_count_max,
    find_inter,
    multiset_soft_trace,
    soft_trace,
    two_stage_trace,
)

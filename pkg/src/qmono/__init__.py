"""Exact symbolic engine for q-specializations of monomial symmetric
functions on the two-letter geometric alphabet (a - b)/(1 - q), the
symmetrized rational identities they are equivalent to, the positivity
polynomial attached to each partition, and the basis expansions of the
one-row Macdonald polynomial g_n(X; q, t)."""

from .algebra import (
    FactoredFraction,
    Polynomial,
    TruncatedSeries,
    frac_eq,
    poly_mul,
    series_expand,
    substitute,
)
from .errors import (
    InternalConsistencyError,
    InvalidValueError,
    NotApplicableError,
    NotInvertibleError,
    PoleError,
    QmonoError,
    ResourceLimitError,
    UsageError,
)
from .partitions import (
    Derangement,
    Partition,
    PermutationWithCycles,
    derangements,
    partitions_of,
    partitions_up_to,
    permutations_with_cycles,
    z_of,
)
from .specialize import SpecResult, generator_spec, monomial_spec, spec_oracle

__version__ = "0.1.0"

__all__ = [
    "FactoredFraction",
    "Polynomial",
    "TruncatedSeries",
    "frac_eq",
    "poly_mul",
    "series_expand",
    "substitute",
    "QmonoError",
    "UsageError",
    "InvalidValueError",
    "PoleError",
    "NotInvertibleError",
    "ResourceLimitError",
    "InternalConsistencyError",
    "NotApplicableError",
    "Partition",
    "Derangement",
    "PermutationWithCycles",
    "partitions_of",
    "partitions_up_to",
    "derangements",
    "permutations_with_cycles",
    "z_of",
    "SpecResult",
    "monomial_spec",
    "generator_spec",
    "spec_oracle",
    "__version__",
]

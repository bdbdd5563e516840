"""Arndt, De Morgan and parity-restricted integer compositions: generation, bijections, exact counts."""

from .core import (
    ALL,
    TERMINAL_ONE,
    U_FIXED,
    V_FIXED,
    Composition,
    CompositionError,
    FamilyId,
    FamilyKind,
    PairView,
    PreconditionError,
    RunBlock,
    arndt,
    even_restricted,
    h_statistic,
    is_member,
    make_composition,
    odd_restricted,
    pair_view,
    parse_composition,
    run_decompose,
    to_text,
)
from .count import (
    count,
    count_arndt,
    count_fixed,
    count_restricted_dp,
    count_split,
    fibonacci,
    sequence,
)
from .generate import GeneratorSpec, compositions, count_by_generation, enumerate_compositions

__version__ = "0.1.0"

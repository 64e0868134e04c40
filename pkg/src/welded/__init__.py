"""Welded string links as Gauss diagrams: moves, normal forms, and invariants
in the reduced free group."""

from .freegroup import (
    MalformedInput,
    RankMismatch,
    TruncatedSeries,
    Word,
    commutator,
    conjugate,
    exponent_sum,
    invert,
    lcs_equal,
    magnus,
    multiply,
    power,
    word_from_series,
)
from .reduced import (
    ConjAut,
    InternalError,
    MultilinearPoly,
    ReducedElement,
    aut_equal,
    compose,
    elementary,
    invert_aut,
    reduced_magnus,
    rf_equal,
    rho,
)
from .gauss import (
    Arrow,
    GaussDiagram,
    Move,
    MoveError,
    NotSelfArrow,
    PatternNotFound,
    R3ConditionViolated,
    applicable_moves,
    apply_move,
    apply_script,
    delete_strand,
    emit,
    expand,
    is_ascending,
    is_horizontal,
    parse,
    random_diagram,
    stack,
    validate,
)
from .coloring import (
    color,
    phi_a_to_g,
    phi_g_to_a,
    pi1_presentation,
    tail_intervals,
)
from .normalize import ascending_form, horizontal_form
from .milnor import (
    Longitude,
    longitudes,
    milnor_filtration_order,
    milnor_mu,
    universal_milnor,
)

__version__ = "0.1.0"

"""Exact computations for braided surfaces given by braid monodromy
factorizations: complement fundamental groups, double branched covers of the
4-disk, and invariants of the boundary braid closure."""

from .braid import (
    ArtinKey,
    BraidWord,
    artin_key,
    braids_equal,
    compose,
    exponent_sum,
    invert,
    parse_braid,
    permutation,
)
from .burau import alexander_of_closure, burau_at_minus_one, knot_determinant, reduced_burau
from .cover import (
    CoverHomology,
    FiberData,
    cover_form,
    cycle_classes,
    fiber_data,
    forms_equivalent_certificate,
)
from .factorization import (
    ClosureInvariants,
    Factorization,
    HalfTwist,
    as_braid,
    beta_family,
    closure_invariants,
    format_factorization,
    hurwitz_move,
    hurwitz_search,
    parse_factorization,
    product,
    twist_arc_action,
)
from .fixtures import Fixtures, default_fixtures, load_fixtures
from .freegroup import FreeWord
from .kernel import BACKEND
from .presentation import (
    GroupPresentation,
    abelianization,
    find_arc_word,
    tietze_simplify,
    vk_presentation,
)
from .qform import IntersectionForm, definiteness, equivalent, gauss_reduce_binary, represents

__version__ = "0.1.0"

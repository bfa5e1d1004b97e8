"""Exact calculus for the operator algebra of almost-complex geometry.

The algebra A on the four odd generators mubar, delbar, del, mu (bidegrees
(-1,2), (0,1), (1,0), (2,-1)) modulo the relations that make their sum d
square to zero, together with:

* canonical normal forms, graded products and commutators (:mod:`.algebra`),
* the primitive graded Lie algebra, its delbar/del subalgebra, derivations
  and the abelian quotient (:mod:`.lie`),
* exact cohomology of the inner differentials, the mapping-cone long exact
  sequence and the two-step page (:mod:`.cohomology`),
* the Maurer-Cartan locus, its twisted-cubic chart and the rescaling
  conjugation (:mod:`.mc`),
* a verifier for finite bigraded representations (:mod:`.reps`),
* an expression parser and a CLI (:mod:`.exprs`, :mod:`.cli`).

All coefficients are exact Gaussian rationals; nothing floats.
"""

__version__ = "0.1.0"

from .algebra import (
    BIDEGREE,
    DEL,
    DELBAR,
    GENERATORS,
    MU,
    MUBAR,
    AlgebraElement,
    NormalMonomial,
    basis_A,
    d_element,
    dim_A,
    generator_element,
    graded_commutator,
    product,
    restrict_to_B,
    rewrite_word,
    word_bidegree,
)
from .cohomology import (
    GradedMap,
    ad_matrix,
    cohomology,
    cohomology_dims,
    frolicher_E1,
    les_check,
    split_B,
)
from .errors import EngineError
from .exprs import parse, parse_element, render
from .lie import (
    HolElement,
    LieElement,
    bracket,
    d_lie,
    derivation_apply,
    dim_g,
    dim_h,
    h_basis,
    lie_basis,
    lie_generator,
    project_hol,
)
from .linalg import ExactMatrix
from .mc import (
    MCPoint,
    d_st,
    dJ_st,
    is_mc,
    phi_conjugation_check,
    strata_nullity,
    tangent_basis,
)
from .reps import (
    BigradedRep,
    act,
    build_example_rep,
    direct_sum,
    load_rep,
    quotient_faithfulness,
    save_rep,
    verify_relations,
)
from .scalars import GaussianRational, Scalar, scalar_from_text

__all__ = [
    "AlgebraElement",
    "BigradedRep",
    "EngineError",
    "ExactMatrix",
    "GaussianRational",
    "GradedMap",
    "HolElement",
    "LieElement",
    "MCPoint",
    "NormalMonomial",
    "Scalar",
    "act",
    "ad_matrix",
    "basis_A",
    "bracket",
    "build_example_rep",
    "cohomology",
    "cohomology_dims",
    "d_element",
    "d_lie",
    "d_st",
    "dJ_st",
    "derivation_apply",
    "dim_A",
    "dim_g",
    "dim_h",
    "direct_sum",
    "frolicher_E1",
    "generator_element",
    "graded_commutator",
    "h_basis",
    "is_mc",
    "les_check",
    "lie_basis",
    "lie_generator",
    "load_rep",
    "parse",
    "parse_element",
    "phi_conjugation_check",
    "product",
    "project_hol",
    "quotient_faithfulness",
    "render",
    "restrict_to_B",
    "rewrite_word",
    "save_rep",
    "scalar_from_text",
    "split_B",
    "strata_nullity",
    "tangent_basis",
    "verify_relations",
    "word_bidegree",
]

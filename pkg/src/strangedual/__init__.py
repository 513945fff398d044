"""Exact-arithmetic toolkit for the strange duality between the
quadrangle complete intersection singularities.

The package mechanizes the computations behind the duality: exact sparse
polynomial arithmetic, Berglund-Huebsch transposition of exponent
matrices, size-two matrix factorizations and their reduction, weighted
C*-action orbit analysis (Dolgachev numbers), Poincare series and
monodromy frame products, Coxeter-element characteristic polynomials,
and a fully verified catalog of the eight series.
"""

from .polyring import (
    Monomial,
    Polynomial,
    Substitution,
    QuasiFailure,
    arith,
    format_poly,
    parse_poly,
    quasi_degree,
    substitute,
)
from .invertible import (
    DiagonalGroup,
    ExponentMatrix,
    GradingOperator,
    WeightSolution,
    bh_transpose,
    canonical_weights,
    from_polynomial,
    grading_operator,
    smith_normal_form,
    symmetry_group,
)
from .matfac import (
    CompleteIntersectionPair,
    FactorizationTriple,
    factor_poly,
    lift,
    lift_raw,
    reduce,
    verify_factorization,
)
from .series import (
    FrameProduct,
    IntPolynomial,
    WeightSystem,
    format_frame,
    frame_expand,
    frame_mul,
    frame_to_polynomial,
    or_polynomial,
    parse_frame,
    parse_weight_system,
    poincare,
    saito_dual,
)
from .coxeter import GabrielovQuadruple, charpoly_Pi, charpoly_S, emit_graph
from .orbits import (
    CStarAction,
    NewtonSplit,
    OrbitRep,
    classify_case,
    dolgachev_pair,
    exceptional_orbits,
    isotropy_order,
    split_newton,
)
from .catalog import (
    Catalog,
    SeriesEntry,
    load_catalog,
    verify_all,
    verify_entry,
)

__version__ = "1.0.0"

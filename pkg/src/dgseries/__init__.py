"""Discrete generating series for linear difference equations, computed exactly."""

from .dfinite import (
    dfinite_operator,
    lemma3_prefactor,
    operator_relation,
    operator_to_recurrence,
    recurrence_to_annihilator,
)
from .exact import (
    Poly,
    falling_factorial,
    ff_to_monomial,
    format_rational,
    parse_rational,
    poly_substitute_shift,
)
from .funceq import (
    VerificationReport,
    rhs_theorem1,
    rhs_theorem3,
    rhs_theorem5,
    theorem4_check,
    verify_functional_equation,
)
from .kernels import BACKEND
from .operators import (
    Operator,
    OperatorTerm,
    analytic_op_eval,
    op_apply,
    op_apply_counted,
    op_compose,
    shift_weight_apply,
    theta_apply,
)
from .recurrence import (
    CauchyProblem,
    DifferenceEquation,
    InitialData,
    SolvabilityError,
    convert_form,
    in_initial_set,
    solve_cauchy,
)
from .series import Series, combined_projection, eval_series, make_series, project, truncate

__version__ = "0.1.0"

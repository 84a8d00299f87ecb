"""Finite involutive non-degenerate set-theoretic Yang-Baxter solutions,
the power construction, and finite left braces."""

from .errors import AxiomError, ParseError, SizeCapExceeded, YbeError
from .perm import (
    GeneratedGroup,
    Perm,
    close_group,
    compose,
    groups_isomorphic,
    identity,
    inverse,
)
from .solution import (
    Solution,
    VerifyReport,
    adjoin_fixed_point,
    disjoint_union,
    enumerate_solutions,
    from_sigma,
    permutation_group,
    r_apply,
    solutions_isomorphic,
    trivial,
    verify_tables,
)
from .power import (
    IsoCondition,
    PowerSolution,
    TupleCodec,
    f_map,
    iso_condition,
    power_perm_group,
    power_solution,
    power_solution_n2_direct,
    psi_apply,
    psi_inverse_apply,
    psi_perm,
)
from .brace import (
    Brace,
    LambdaTable,
    associated_solution,
    brace_from_tables,
    check_eq_3_1,
    check_lambda_properties,
    find_braces,
    lambda_table,
    trivial_brace,
)

__all__ = [
    "AxiomError",
    "Brace",
    "GeneratedGroup",
    "IsoCondition",
    "LambdaTable",
    "ParseError",
    "Perm",
    "PowerSolution",
    "SizeCapExceeded",
    "Solution",
    "TupleCodec",
    "VerifyReport",
    "YbeError",
    "adjoin_fixed_point",
    "associated_solution",
    "brace_from_tables",
    "check_eq_3_1",
    "check_lambda_properties",
    "close_group",
    "compose",
    "disjoint_union",
    "enumerate_solutions",
    "f_map",
    "find_braces",
    "from_sigma",
    "groups_isomorphic",
    "identity",
    "inverse",
    "iso_condition",
    "lambda_table",
    "permutation_group",
    "power_perm_group",
    "power_solution",
    "power_solution_n2_direct",
    "psi_apply",
    "psi_inverse_apply",
    "psi_perm",
    "r_apply",
    "solutions_isomorphic",
    "trivial",
    "trivial_brace",
    "verify_tables",
]

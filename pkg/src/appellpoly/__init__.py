"""Exact Appell polynomial sequences driven by moment data.

A random variable Y, known through its exact rational moments, determines
the polynomial family generated by e^{xz} / (E e^{zY})^t.  This package
constructs those families, the probabilistic Stirling numbers S_Y(n, m)
behind them, and generalized finite differences, each quantity by several
independent routes whose exact agreement is machine-checked.  Everything is
computed over fractions.Fraction; floating point exists only in explicit
evaluate_float calls.
"""

from fractions import Fraction

from .combinatorics import (
    compositions,
    format_rational,
    gen_binomial,
    multinomial,
    parse_rational,
)
from .differences import (
    delta_derivative_form,
    delta_steps,
    delta_steps_subset_sum,
    difference_poly,
    expected_delta_monomial,
)
from .egf import (
    TruncatedEGF,
    egf_add,
    egf_exp,
    egf_from_moments,
    egf_log,
    egf_mul,
    egf_one,
    egf_pow,
    egf_scale,
)
from .errors import DomainError, MomentFileError
from .families import (
    FamilySpec,
    apostol_euler_constants,
    bernoulli_order_constants,
    bstar_constants,
    c_mnk,
    gen_bernoulli_constants,
    parse_family,
)
from .moments import (
    MomentSequence,
    SumMomentTable,
    bernoulli_moments,
    bernoulli_times_uniform_moments,
    beta_moments,
    load_custom_moments,
    make_named,
    point_mass_one,
    sum_moment_enumerated,
    sum_moment_table,
    uniform01,
)
from .polynomials import Polynomial
from .sequences import (
    AppellSequence,
    appell_sequence,
    build_polynomials,
    constants_binomial_route,
    constants_moment_form,
    constants_stirling_form,
    evaluate,
    evaluate_float,
    oracle_constants,
)
from .stirling import (
    StirlingTable,
    stirling_classical,
    stirling_prob_defsum,
    stirling_prob_gf,
    stirling_prob_lemma2,
    stirling_table,
)

Rational = Fraction

__version__ = "0.1.0"

__all__ = [
    "AppellSequence",
    "DomainError",
    "FamilySpec",
    "MomentFileError",
    "MomentSequence",
    "Polynomial",
    "Rational",
    "StirlingTable",
    "SumMomentTable",
    "TruncatedEGF",
    "apostol_euler_constants",
    "appell_sequence",
    "bernoulli_moments",
    "bernoulli_order_constants",
    "bernoulli_times_uniform_moments",
    "beta_moments",
    "bstar_constants",
    "build_polynomials",
    "c_mnk",
    "compositions",
    "constants_binomial_route",
    "constants_moment_form",
    "constants_stirling_form",
    "delta_derivative_form",
    "delta_steps",
    "delta_steps_subset_sum",
    "difference_poly",
    "egf_add",
    "egf_exp",
    "egf_from_moments",
    "egf_log",
    "egf_mul",
    "egf_one",
    "egf_pow",
    "egf_scale",
    "evaluate",
    "evaluate_float",
    "expected_delta_monomial",
    "format_rational",
    "gen_bernoulli_constants",
    "gen_binomial",
    "load_custom_moments",
    "make_named",
    "multinomial",
    "oracle_constants",
    "parse_family",
    "parse_rational",
    "point_mass_one",
    "stirling_classical",
    "stirling_prob_defsum",
    "stirling_prob_gf",
    "stirling_prob_lemma2",
    "stirling_table",
    "sum_moment_enumerated",
    "sum_moment_table",
    "uniform01",
]

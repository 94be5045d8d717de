"""hyperseq: exact harmonic-family sequences, operator calculus, and a
machine-audited registry of the identities relating them."""

from .analytic import (
    CertifiedReal,
    delta_hyperbolic_closed_form,
    digamma,
    euler_gamma,
    hyperharmonic_real,
    log_gamma,
    sum_series,
)
from .errors import (
    ComputationIntegrityError,
    ConfigError,
    ConvergenceError,
    DomainError,
)
from .exactnum import (
    ExactRational,
    binomial_general,
    binomial_int,
    factorial,
    falling_factorial,
    format_rational,
    make_rational,
    parse_rational,
    rising_factorial,
)
from .identities import AuditReport, Identity, SequenceValue, get_identity
from .identities import list_identities, run_suite, verify
from .opcalc import (
    PowerSeries,
    binomial_transform,
    derivative_at_zero_linear_factors,
    derivative_at_zero_reciprocal,
    dx_reciprocal_rising,
    forward_difference,
    gf_alpha,
    gf_beta,
    gf_harmonic,
    gf_hyperharmonic,
    hypergeometric_terminating,
    inverse_binomial_transform,
    leaping_binomial,
)
from .sequences import (
    HyperharmonicMethod,
    alpha,
    beta,
    fibonacci,
    gen_harmonic,
    harmonic,
    hyperharmonic,
    hyperharmonic_half_integer_alt,
    hyperharmonic_neg,
    hyperharmonic_rational_order,
)

__version__ = "0.1.0"

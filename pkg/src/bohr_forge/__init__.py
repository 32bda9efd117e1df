"""Bohr-lift toolkit for Dirichlet polynomials.

Exact sparse polynomial algebra, the Bohr correspondence n = prod p_j^{a_j}
<-> z^alpha, Walsh-matrix flat-polynomial generators, certified sup-norm
bounds on the polytorus, and Sidon-constant lower-bound certificates.
"""

from .bohr import lift, unlift
from .coeffs import MINUS_ONE, ONE, ZERO, Coefficient
from .constructions import (
    FlatOutput,
    dirichlet_rudin_shapiro,
    flat_polynomial,
    flat_pullback,
    flat_tuple,
    rudin_shapiro,
    rudin_shapiro_sup_bound,
)
from .errors import (
    BohrForgeError,
    ConfigError,
    DimensionError,
    DomainError,
    FrequencyOverflowError,
    ResourceBudgetError,
)
from .norms import (
    NormCertificate,
    declared_certificate,
    sup_flow,
    sup_lower_grid,
    sup_upper_lipschitz,
    tuple_identity_check,
)
from .numtheory import (
    Factorization,
    PrimeTable,
    factorize,
    first_primes,
    is_squarefree,
    omega,
    p_plus,
    primes_up_to,
)
from .polys import FREQ_LIMIT, DirichletPolynomial, MultiPolynomial
from .walsh import WalshMatrix, WalshVerification, hadamard, schur, verify_walsh

__version__ = "0.1.0"

__all__ = [
    "BohrForgeError",
    "Coefficient",
    "ConfigError",
    "DimensionError",
    "DirichletPolynomial",
    "DomainError",
    "Factorization",
    "FlatOutput",
    "FREQ_LIMIT",
    "FrequencyOverflowError",
    "MINUS_ONE",
    "MultiPolynomial",
    "NormCertificate",
    "ONE",
    "PrimeTable",
    "ResourceBudgetError",
    "WalshMatrix",
    "WalshVerification",
    "ZERO",
    "declared_certificate",
    "dirichlet_rudin_shapiro",
    "factorize",
    "first_primes",
    "flat_polynomial",
    "flat_pullback",
    "flat_tuple",
    "hadamard",
    "is_squarefree",
    "lift",
    "omega",
    "p_plus",
    "primes_up_to",
    "rudin_shapiro",
    "rudin_shapiro_sup_bound",
    "schur",
    "sup_flow",
    "sup_lower_grid",
    "sup_upper_lipschitz",
    "tuple_identity_check",
    "unlift",
    "verify_walsh",
]

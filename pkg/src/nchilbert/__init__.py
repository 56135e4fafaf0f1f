"""Conjugation operator and Riesz projection on finite subdiagonal matrix algebras."""

from .algebra import (
    Operator, SubspaceTag, TracedAlgebra, abs_value, expectation, hermitian_calculus,
    inverse, membership, trace,
)
from .ensemble import EnsembleConfig, random_operator
from .errors import (
    BadExponent, BadExponents, NotHermitian, NotPositive, ParseError, PartitionMismatch,
    Singular, UnknownCheck,
)
from .hardy import decompose, exp_series, hilbert, moebius, regularize, riesz
from .spectral import (
    SingularValueProfile, distribution, dyadic_decompose, llogl_functional, lp_norm, mu,
    op_norm, submajorizes, weak_l1_quasinorm,
)

__version__ = "0.1.0"

__all__ = [
    "Operator", "SubspaceTag", "TracedAlgebra", "abs_value", "expectation",
    "hermitian_calculus", "inverse", "membership", "trace",
    "EnsembleConfig", "random_operator",
    "BadExponent", "BadExponents", "NotHermitian", "NotPositive", "ParseError",
    "PartitionMismatch", "Singular", "UnknownCheck",
    "decompose", "exp_series", "hilbert", "moebius", "regularize", "riesz",
    "SingularValueProfile", "distribution", "dyadic_decompose", "llogl_functional",
    "lp_norm", "mu", "op_norm", "submajorizes", "weak_l1_quasinorm",
]

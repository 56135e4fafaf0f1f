"""
Hardy decomposition, conjugation operator and the Riesz projection for the
block upper-triangular subdiagonal algebra, together with the regularized
analytic operator ``f_eps`` and the Moebius map used in the weak-type (1,1)
argument.

In the block model the conjugate of ``a`` is an entrywise multiplier:
strictly upper blocks are multiplied by ``-i``, strictly lower blocks by
``+i`` and diagonal blocks are killed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .algebra import (
    Operator, SubspaceTag, TracedAlgebra, expectation, inverse, min_eigenvalue,
    real_part, support_residual,
)
from .spectral import check_positive, lp_norm, op_norm


@dataclass(frozen=True)
class HardyDecomposition:
    """``source = a1 + a2^* + d`` with ``a1, a2`` in ``H^inf_0`` and ``d`` in ``D``."""

    a1: Operator
    a2: Operator
    d: Operator
    source: Operator

    def reconstruct(self) -> Operator:
        return self.a1 + self.a2.adj + self.d

    def conjugate(self) -> Operator:
        """``i a2^* - i a1``, the conjugate built from the pieces."""
        return self.a2.adj * 1j - self.a1 * 1j


def decompose(a: Operator) -> HardyDecomposition:
    alg = a.algebra
    x = a.entries
    a1 = np.where(alg.mask(SubspaceTag.HINF0), x, 0)
    lower = np.where(alg.mask(SubspaceTag.HINF0_STAR), x, 0)
    d = np.where(alg.mask(SubspaceTag.DIAG), x, 0)
    return HardyDecomposition(
        a1=Operator(alg, a1),
        a2=Operator(alg, lower.conj().T),
        d=Operator(alg, d),
        source=a,
    )


def hilbert_multiplier(algebra: TracedAlgebra) -> np.ndarray:
    """Entrywise symbol of the conjugation operator, values in ``{-i, 0, i}``."""
    m = np.zeros((algebra.n, algebra.n), dtype=np.complex128)
    m[algebra.mask(SubspaceTag.HINF0)] = -1j
    m[algebra.mask(SubspaceTag.HINF0_STAR)] = 1j
    m.setflags(write=False)
    return m


def riesz_multiplier(algebra: TracedAlgebra) -> np.ndarray:
    return algebra.mask(SubspaceTag.HINF).astype(np.complex128)


def hilbert(a: Operator) -> Operator:
    """The conjugate ``a~`` of ``a``.

    Multiplying by ``+-i`` is exact in floating point, so the result agrees
    bit for bit with ``decompose(a).conjugate()`` and ``hilbert(1j * a)`` is
    exactly ``1j * hilbert(a)``.
    """
    return Operator(a.algebra, a.entries * hilbert_multiplier(a.algebra))


def riesz(a: Operator) -> Operator:
    """Riesz projection ``(a + i a~ + Phi(a)) / 2`` onto ``H^inf``."""
    return (a + hilbert(a) * 1j + expectation(a)) * 0.5


def analytic_completion(u: Operator) -> Operator:
    """``f = u + i u~``, which lies in ``H^inf``."""
    return u + hilbert(u) * 1j


def moebius_scalar(f: Operator, eps: float) -> Operator:
    """``(eps I + f)(I + eps f)^{-1}`` for an arbitrary operator ``f``."""
    one = f.algebra.identity
    return (one * eps + f) @ inverse(one + f * eps)


def regularize(u: Operator, eps: float) -> Operator:
    """Regularized analytic operator ``f_eps`` of a positive ``u``.

    Builds ``f = u + i u~`` and returns ``(eps I + f)(I + eps f)^{-1}``, which
    stays in ``H^inf`` and has real part at least ``eps I``.

    Raises
    ------
    NotPositive
        If ``u`` is not positive semidefinite.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    check_positive(u)
    return moebius_scalar(analytic_completion(u), eps)


def moebius(f_eps: Operator, s: float) -> Operator:
    """``A_s(f_eps) = I + (f_eps - s I)(f_eps + s I)^{-1}``."""
    if not s > 0:
        raise ValueError("s must be positive")
    one = f_eps.algebra.identity
    return one + (f_eps - one * s) @ inverse(f_eps + one * s)


def kolmogorov_weight(t, s: float):
    """``psi_s(t) = 2 t^2 / (t + s)^2``; increasing on ``[s, inf)`` with ``psi_s(s) = 1/2``."""
    t = np.asarray(t, dtype=float)
    return 2.0 * t * t / (t * t + 2.0 * s * t + s * s)


def exp_series_terms(f: Operator, t: float, eps: float, tol: float) -> int:
    """Smallest ``K`` with ``sum_{k>K} x^k / k! <= tol`` for ``x = t eps ||f||``."""
    x = t * eps * op_norm(f)
    if x == 0.0:
        return 0
    K = 0
    term = x  # x^(K+1) / (K+1)!
    while True:
        # geometric majorant of the tail once K + 2 > x
        if K + 2 > x and term / (1.0 - x / (K + 2)) <= tol:
            return K
        K += 1
        term *= x / (K + 1)


def exp_series(f: Operator, t: float, eps: float, tol: float = 1e-12) -> Operator:
    """Truncated ``sum_k (t eps)^k f^k / k!`` with tail below ``tol``."""
    if not t > 0:
        raise ValueError("t must be positive")
    K = exp_series_terms(f, t, eps, tol)
    te = t * eps
    total = f.algebra.identity
    power = f.algebra.identity
    for k in range(1, K + 1):
        power = power @ f
        total = total + power * (te ** k / factorial(k))
    return total


@dataclass(frozen=True)
class RegularizationDiagnostics:
    """The quantities controlled by the regularization lemma for one ``(u, eps)``."""

    eps: float
    resolvent_norm: float          # ||(I + eps f)^{-1}||, at most 1
    hinf_residual: float           # largest entry of f_eps below the diagonal blocks
    expectation_residual: float    # ||Phi(f_eps) - Phi(u)_eps||_max
    real_part_min: float           # min eigenvalue of Re f_eps, at least eps
    approx_error: dict             # p -> ||f_eps - f||_p
    approx_bound: dict             # p -> eps ||I + f^2||_p


def regularization_diagnostics(u: Operator, eps: float, ps=(1.0, 2.0, 4.0)) -> RegularizationDiagnostics:
    f = analytic_completion(u)
    one = u.algebra.identity
    resolvent = inverse(one + f * eps)
    f_eps = regularize(u, eps)
    phi_u_eps = moebius_scalar(expectation(u), eps)
    diff = f_eps - f
    sq = one + f @ f
    return RegularizationDiagnostics(
        eps=eps,
        resolvent_norm=op_norm(resolvent),
        hinf_residual=support_residual(f_eps, SubspaceTag.HINF),
        expectation_residual=(expectation(f_eps) - phi_u_eps).max_abs(),
        real_part_min=min_eigenvalue(real_part(f_eps)),
        approx_error={p: lp_norm(diff, p) for p in ps},
        approx_bound={p: eps * lp_norm(sq, p) for p in ps},
    )


__all__ = [
    "HardyDecomposition", "decompose", "hilbert", "riesz", "regularize", "moebius",
    "exp_series", "analytic_completion", "hilbert_multiplier", "riesz_multiplier",
    "kolmogorov_weight", "regularization_diagnostics", "RegularizationDiagnostics",
    "moebius_scalar",
]

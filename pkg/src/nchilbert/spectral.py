"""
Singular value function, distribution function and the (quasi)norms built
on them.

With the normalized trace on M_n, the generalized singular value function of
``a`` is the step function ``mu_t(a) = sigma_k`` for ``t`` in
``[(k-1)/n, k/n)``, and the distribution function is
``lambda_s(a) = #{k : sigma_k > s} / n``.  Everything here works with the
breakpoint values only, so integrals and suprema are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Operator, eigh, hermitian_calculus, trace
from .errors import NotPositive

POSITIVE_TOL = 1e-10


@dataclass(frozen=True)
class SingularValueProfile:
    """Descending singular values realizing ``mu_t`` on ``(0, 1]``."""

    sigma: np.ndarray

    def __post_init__(self):
        s = np.clip(np.sort(np.asarray(self.sigma, dtype=float))[::-1], 0.0, None)
        s.setflags(write=False)
        object.__setattr__(self, "sigma", s)

    @property
    def n(self) -> int:
        return len(self.sigma)

    def at(self, t: float) -> float:
        """``mu_t``; zero for ``t >= 1``."""
        if t < 0:
            raise ValueError("t must be non-negative")
        k = int(np.floor(t * self.n))
        return float(self.sigma[k]) if k < self.n else 0.0

    def partial_integrals(self) -> np.ndarray:
        """``int_0^{k/n} mu_t dt`` for ``k = 1..n``."""
        return np.cumsum(self.sigma) / self.n

    def __mul__(self, other: SingularValueProfile) -> SingularValueProfile:
        """Pointwise product ``t -> mu_t(a) mu_t(b)``."""
        if other.n != self.n:
            raise ValueError("profiles have different dimensions")
        return SingularValueProfile(self.sigma * other.sigma)

    def to_dict(self) -> dict:
        return {"n": self.n, "sigma": [float(x) for x in self.sigma]}


def mu(a: Operator) -> SingularValueProfile:
    return SingularValueProfile(np.linalg.svd(a.entries, compute_uv=False))


def _profile(x) -> SingularValueProfile:
    return x if isinstance(x, SingularValueProfile) else mu(x)


def distribution(a, s: float) -> float:
    """``lambda_s(a) = tau(chi_(s, inf)(|a|))``."""
    if s < 0:
        raise ValueError("s must be non-negative")
    sig = _profile(a).sigma
    return float(np.count_nonzero(sig > s)) / len(sig)


def lp_norm(a, p: float) -> float:
    """``(tau |a|^p)^(1/p)``; a quasinorm for ``0 < p < 1``, ``p=inf`` gives the operator norm."""
    if not p > 0:
        raise ValueError("p must be positive")
    sig = _profile(a).sigma
    if np.isinf(p):
        return float(sig[0])
    return float(np.mean(sig ** p) ** (1.0 / p))


def op_norm(a) -> float:
    return float(_profile(a).sigma[0])


def weak_l1_quasinorm(a) -> float:
    """``sup_t t mu_t(a)``, attained as the left limit ``(k/n) sigma_k``."""
    sig = _profile(a).sigma
    n = len(sig)
    return float(np.max(np.arange(1, n + 1) * sig) / n)


def submajorizes(b, a, tol: float = 1e-10) -> bool:
    """True when ``a`` is submajorized by ``b``: every partial integral of
    ``mu(a)`` is dominated by that of ``mu(b)`` (up to ``tol``)."""
    pa = _profile(a).partial_integrals()
    pb = _profile(b).partial_integrals()
    if len(pa) != len(pb):
        raise ValueError("profiles have different dimensions")
    return bool(np.all(pa <= pb + tol))


def check_positive(a: Operator, tol: float = POSITIVE_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of ``a``; raises :class:`NotPositive` on a negative eigenvalue."""
    w, q = eigh(a)
    if w[0] < -tol * (1.0 + abs(w[-1])):
        raise NotPositive(f"operator has eigenvalue {w[0]:.3e} < 0")
    return w, q


def _xlogx_plus(s: np.ndarray) -> np.ndarray:
    out = np.zeros_like(s)
    big = s > 1.0
    out[big] = s[big] * np.log(s[big])
    return out


def llogl_functional(a: Operator) -> float:
    """``tau(a log+ a)`` for positive ``a`` (natural logarithm)."""
    check_positive(a)
    return float(trace(hermitian_calculus(a, _xlogx_plus)).real)


@dataclass(frozen=True)
class DyadicPart:
    k: int
    part: Operator
    projection: Operator

    @property
    def weight(self) -> float:
        """``tau(P_k)``."""
        return float(trace(self.projection).real)


@dataclass(frozen=True)
class DyadicDecomposition:
    parts: tuple[DyadicPart, ...]

    def reconstruct(self) -> Operator:
        total = self.parts[0].part
        for p in self.parts[1:]:
            total = total + p.part
        return total

    def by_k(self) -> dict[int, DyadicPart]:
        return {p.k: p for p in self.parts}


def dyadic_level(w: np.ndarray) -> np.ndarray:
    """Level ``k`` of each eigenvalue: 0 on ``[0, 1)``, ``k`` on ``[2^(k-1), 2^k)``."""
    _, e = np.frexp(w)
    return np.where(w < 1.0, 0, e).astype(int)


def dyadic_decompose(a: Operator) -> DyadicDecomposition:
    """Split a positive operator along the spectral intervals ``[2^(k-1), 2^k)``.

    Non-empty levels only are returned; the projections sum to the identity
    and the parts sum to ``a``.  An eigenvalue equal to ``2^(k-1)`` belongs
    to level ``k``.
    """
    w, q = check_positive(a)
    levels = dyadic_level(w)
    parts = []
    for k in np.unique(levels):
        sel = levels == k
        qk = q[:, sel]
        proj = qk @ qk.conj().T
        part = (qk * w[sel]) @ qk.conj().T
        parts.append(DyadicPart(int(k), Operator(a.algebra, part), Operator(a.algebra, proj)))
    return DyadicDecomposition(tuple(parts))

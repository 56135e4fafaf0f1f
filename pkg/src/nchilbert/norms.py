"""
Operator norms of the conjugation operator and the Riesz projection.

* :func:`k2k_constant` -- the even-exponent constants ``K_2k``, the largest
  root of ``X^2k - C(2k,2) X^(2k-2) - ... - C(2k,2k-2) X^2 - 2``.
* :func:`exact_l2_norm` -- spectral norm of the superoperator on ``L^2``.
* :func:`estimate_lp_norm` -- certified lower bounds on ``L^p`` norms by
  projected gradient ascent over the unit sphere.
* :func:`classical_conjugate` -- the conjugate-function multiplier on
  trigonometric polynomials, kept as a commutative reference.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .algebra import Operator, TracedAlgebra
from .ensemble import complex_gaussian, trial_rng
from .hardy import hilbert, hilbert_multiplier, riesz_multiplier
from .spectral import lp_norm

MAPS = ("hilbert", "riesz")


# --------------------------------------------------------------------------
# even-exponent root constants


def k2k_coefficients(k: int) -> list[int]:
    """Coefficients of ``q_k`` from the leading term down to the constant."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    coeffs = [0] * (2 * k + 1)
    coeffs[0] = 1
    for j in range(1, k):
        coeffs[2 * j] = -comb(2 * k, 2 * j)
    coeffs[2 * k] = -2
    return coeffs


def _horner(coeffs: Sequence[int], x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def sign_changes(coeffs: Sequence[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class RootConstant:
    """``K_2k`` with its certificate.

    ``exact`` is the dyadic rational produced by the bisection and
    ``residual = |q_k(exact)|`` is evaluated in exact arithmetic; ``value`` is
    the nearest double.  ``bracket`` is the final bisection interval, which
    contains the true root.
    """

    k: int
    value: float
    residual: float
    exact: Fraction = field(repr=False)
    bracket: tuple[Fraction, Fraction] = field(repr=False)
    sign_changes: int = 1

    def polynomial(self, x):
        return _horner(k2k_coefficients(self.k), x)


def k2k_constant(k: int, xtol: float = 1e-15, residual_tol: float = 1e-10) -> RootConstant:
    """Unique positive root of ``q_k`` by exact bisection.

    The bracket ``[1, 2k 4^k]`` has ``q_k(1) < 0 < q_k(2k 4^k)``.  Bisection
    runs in exact rational arithmetic until the interval is shorter than
    ``xtol`` *and* the residual at the midpoint is below ``residual_tol``; the
    second condition matters for large ``k`` where ``q_k'`` at the root exceeds
    ``1e16`` and a 1e-12 interval alone leaves a large residual.
    """
    coeffs = k2k_coefficients(k)
    q = lambda x: _horner(coeffs, x)  # noqa: E731
    lo, hi = Fraction(1), Fraction(2 * k * 4 ** k)
    if not (q(lo) < 0 < q(hi)):
        raise AssertionError("bisection bracket lost its sign change")
    xtol_f = Fraction(xtol)
    rtol_f = Fraction(residual_tol)
    while True:
        mid = (lo + hi) / 2
        qm = q(mid)
        if hi - lo < xtol_f and abs(qm) <= rtol_f:
            break
        if qm == 0:
            lo = hi = mid
            break
        if qm < 0:
            lo = mid
        else:
            hi = mid
    return RootConstant(k=k, value=float(mid), residual=float(abs(qm)), exact=mid,
                        bracket=(lo, hi), sign_changes=sign_changes(coeffs))


# --------------------------------------------------------------------------
# L^2 norms


def map_multiplier(algebra: TracedAlgebra, which: str) -> np.ndarray:
    if which == "hilbert":
        return hilbert_multiplier(algebra)
    if which == "riesz":
        return riesz_multiplier(algebra)
    raise ValueError(f"unknown map {which!r}; expected one of {MAPS}")


def apply_map(a: Operator, which: str) -> Operator:
    return Operator(a.algebra, a.entries * map_multiplier(a.algebra, which))


@dataclass(frozen=True)
class NormEstimate:
    p: float
    value: float
    witness: Operator = field(repr=False)
    method: str
    restarts: int = 0
    iterations: int = 0
    history: tuple = field(default=(), repr=False)


def superoperator(algebra: TracedAlgebra, which: str) -> np.ndarray:
    """Matrix of the map on ``M_n`` in the orthonormal basis ``sqrt(n) E_ij``.

    The normalized trace scales every basis vector by the same factor, so the
    matrix coincides with the one in the standard basis.
    """
    n = algebra.n
    cols = []
    for idx in range(n * n):
        e = np.zeros(n * n, dtype=np.complex128)
        e[idx] = 1.0
        img = apply_map(Operator(algebra, e.reshape(n, n)), which)
        cols.append(img.entries.reshape(-1))
    return np.stack(cols, axis=1)


def exact_l2_norm(algebra: TracedAlgebra, which: str = "hilbert") -> NormEstimate:
    s = superoperator(algebra, which)
    u, sv, vh = np.linalg.svd(s)
    n = algebra.n
    witness = Operator(algebra, vh[0].conj().reshape(n, n))
    return NormEstimate(p=2.0, value=float(sv[0]), witness=witness, method="exact_l2")


# --------------------------------------------------------------------------
# L^p lower bounds by projected ascent


def _power_sum_and_grad(x: np.ndarray, p: float, delta: float):
    """``S(x) = sum (sigma^2 + delta^2)^(p/2)`` and its gradient in the real
    inner product ``Re tr(G^* dX)``."""
    u, s, vh = np.linalg.svd(x)
    if delta > 0:
        w = s * s + delta * delta
        total = float(np.sum(w ** (p / 2)))
        scale = p * s * w ** (p / 2 - 1)
    else:
        total = float(np.sum(s ** p))
        scale = p * s ** (p - 1)
    return total, (u * scale) @ vh


def _log_ratio(a: np.ndarray, mult: np.ndarray, p: float, delta: float) -> float:
    sa = np.linalg.svd(a, compute_uv=False)
    st = np.linalg.svd(a * mult, compute_uv=False)
    if delta > 0:
        num = np.sum((st * st + delta * delta) ** (p / 2))
        den = np.sum((sa * sa + delta * delta) ** (p / 2))
    else:
        num = np.sum(st ** p)
        den = np.sum(sa ** p)
    if num <= 0.0:
        return -np.inf
    return float((np.log(num) - np.log(den)) / p)


def _ascend(a, mult, p, delta, iterations, step0, min_step=1e-12):
    a = a / np.linalg.norm(a)
    obj = _log_ratio(a, mult, p, delta)
    history = [obj]
    step = step0
    for _ in range(iterations):
        sn, gn_ = _power_sum_and_grad(a * mult, p, delta)
        sd, gd = _power_sum_and_grad(a, p, delta)
        g = (np.conj(mult) * gn_ / sn - gd / sd) / p
        g = g - np.real(np.vdot(a, g)) * a
        gnorm = np.linalg.norm(g)
        if gnorm < 1e-15:
            break
        direction = g / gnorm
        while step >= min_step:
            cand = a + step * direction
            cand = cand / np.linalg.norm(cand)
            cobj = _log_ratio(cand, mult, p, delta)
            if cobj > obj:
                a, obj = cand, cobj
                step = min(2.0 * step, step0)
                break
            step *= 0.5
        else:
            break
        history.append(obj)
    return a, history


def estimate_lp_norm(algebra: TracedAlgebra, which: str = "hilbert", p: float = 4.0,
                     restarts: int = 64, iterations: int = 500, seed: int = 0,
                     step: float = 0.1, delta: float = 1e-8) -> NormEstimate:
    """Lower bound for ``sup ||T a||_p / ||a||_p`` with ``T`` the chosen map.

    Each restart starts from a seeded complex Gaussian matrix and runs
    normalized gradient ascent on the unit Frobenius sphere with backtracking
    (step halving); steps are only taken when the objective increases, so the
    recorded history is non-decreasing.  For ``p < 2`` the singular values are
    smoothed by ``delta``.  The returned value is recomputed exactly from the
    witness.  The best restart wins; ties go to the lower restart index.
    """
    if not p > 0:
        raise ValueError("p must be positive")
    mult = map_multiplier(algebra, which)
    n = algebra.n
    if not np.any(mult):
        return NormEstimate(p=p, value=0.0, witness=algebra.identity, method="closed_form",
                            restarts=0, iterations=0)
    smoothing = delta if p < 2 else 0.0
    best = None
    for r in range(restarts):
        rng = trial_rng(seed, r, slot=0x1F)
        a0 = complex_gaussian(rng, (n, n))
        a, hist = _ascend(a0, mult, p, smoothing, iterations, step)
        witness = Operator(algebra, a)
        value = lp_norm(apply_map(witness, which), p) / lp_norm(witness, p)
        if best is None or value > best[0]:
            best = (value, witness, hist)
    value, witness, hist = best
    return NormEstimate(p=p, value=float(value), witness=witness, method="ascent",
                        restarts=restarts, iterations=iterations, history=tuple(hist))


def conjugate_exponent(p: float) -> float:
    if not p > 1:
        raise ValueError("conjugate exponent needs p > 1")
    return p / (p - 1.0)


@dataclass(frozen=True)
class ScanRow:
    p: float
    estimate: float
    pq_ratio: float
    restarts: int
    iterations: int
    seed: int


SCAN_HEADER = ("p", "estimate", "pq_ratio", "restarts", "iterations", "seed")


def cp_growth_scan(algebra: TracedAlgebra, p_list: Sequence[float], restarts: int = 64,
                   iterations: int = 500, seed: int = 0, m_ceiling: float = 1.0,
                   which: str = "hilbert") -> list[ScanRow]:
    """Estimate ``C_p`` along ``p_list`` and its ratio to ``p q``.

    Raises ``AssertionError`` if some ratio exceeds ``m_ceiling``.
    """
    rows = []
    for p in p_list:
        q = conjugate_exponent(p)
        est = estimate_lp_norm(algebra, which, p, restarts=restarts, iterations=iterations,
                               seed=seed)
        rows.append(ScanRow(float(p), est.value, est.value / (p * q), restarts, iterations, seed))
    worst = max(r.pq_ratio for r in rows)
    if worst > m_ceiling:
        raise AssertionError(f"C_p/(pq) reached {worst:.6g} > ceiling {m_ceiling}")
    return rows


def _g17(x) -> str:
    return format(float(x), ".17g") if isinstance(x, float) else str(x)


def scan_to_csv(rows: Sequence[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    for r in rows:
        w.writerow([_g17(r.p), _g17(r.estimate), _g17(r.pq_ratio), r.restarts,
                    r.iterations, r.seed])
    return buf.getvalue()


# --------------------------------------------------------------------------
# commutative reference and the growth witness


def classical_conjugate(coefficients) -> np.ndarray:
    """Reference conjugate function on trigonometric polynomials.

    ``coefficients`` has odd length ``2N + 1`` and lists the Fourier
    coefficients of frequencies ``-N .. N``; each is multiplied by
    ``-i sgn(m)``.
    """
    c = np.asarray(coefficients, dtype=np.complex128)
    if c.ndim != 1 or len(c) % 2 != 1:
        raise ValueError("expected 2N+1 coefficients for frequencies -N..N")
    N = len(c) // 2
    freqs = np.arange(-N, N + 1)
    return -1j * np.sign(freqs) * c


def trig_values(coefficients, samples: int | None = None) -> np.ndarray:
    """Values of ``sum_m c_m e^{i m theta}`` on a uniform grid of the circle."""
    c = np.asarray(coefficients, dtype=np.complex128)
    N = len(c) // 2
    M = samples or 8 * (2 * N + 1)
    theta = 2 * np.pi * np.arange(M) / M
    return np.exp(1j * np.outer(theta, np.arange(-N, N + 1))) @ c


def circle_lp_norm(coefficients, p: float, samples: int | None = None) -> float:
    """``L^p`` norm on the circle with normalized Lebesgue measure (grid average)."""
    vals = np.abs(trig_values(coefficients, samples))
    return float(np.mean(vals ** p) ** (1.0 / p))


@dataclass(frozen=True)
class GrowthTable:
    rows: tuple[tuple[int, float], ...]

    @property
    def strictly_increasing(self) -> bool:
        vals = [r for _, r in self.rows]
        return all(b > a for a, b in zip(vals, vals[1:]))


def truncation_growth_witness(n_list: Sequence[int]) -> GrowthTable:
    """``||u~||_1`` for the all-ones ``u`` (``||u||_1 = 1``) on the full flag."""
    rows = []
    for n in n_list:
        alg = TracedAlgebra.flag(int(n))
        u = Operator(alg, np.ones((n, n)))
        rows.append((int(n), lp_norm(hilbert(u), 1.0)))
    return GrowthTable(tuple(rows))

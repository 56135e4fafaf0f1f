"""
Seeded property checks for the inequalities satisfied by the conjugation
operator, each producing an :class:`InequalityReport`.

Every check evaluates a list of :class:`Condition` objects per trial.  A
condition states ``lhs <= bound * scale``; identities are written as
``residual <= 0``.  A condition is violated when
``lhs > rhs * (1 + rel) + abs`` for its tolerance.  The report keeps
per-condition statistics; its ``worst_ratio`` is the largest ``lhs / scale``
of the primary condition, i.e. the empirical constant (for identities: the
largest residual).

All checks accept ``samples`` to replace the random ensemble with explicit
inputs, which is how the degenerate cases are exercised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .algebra import (
    Operator, SubspaceTag, abs_value, eigh, expectation, hermitian_calculus,
    inverse, min_eigenvalue, real_part, spectral_projection, support_residual, trace,
)
from .ensemble import EnsembleConfig, random_operator, trial_rng
from .errors import BadExponents, UnknownCheck
from .hardy import (
    analytic_completion, decompose, hilbert, kolmogorov_weight, moebius,
    moebius_scalar, regularization_diagnostics, regularize,
)
from .norms import k2k_constant
from .spectral import (
    distribution, dyadic_decompose, llogl_functional, lp_norm, mu, op_norm,
    weak_l1_quasinorm,
)

DEFAULT_S_GRID = tuple(float(s) for s in np.logspace(-2, 2, 41))
DEFAULT_EPS_GRID = (0.1, 0.01, 0.001)
DEFAULT_LLOGL_SCALES = tuple(0.5 * 2.0 ** j for j in range(10))  # 0.5 .. 256


@dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-9
    rel: float = 1e-7

    def violated(self, lhs: float, rhs: float) -> bool:
        return lhs > rhs * (1.0 + self.rel) + self.abs

    def to_dict(self) -> dict:
        return {"abs": self.abs, "rel": self.rel}


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Condition:
    name: str
    lhs: float
    bound: float = 0.0
    scale: float = 1.0
    tol: Tolerance | None = None

    @property
    def rhs(self) -> float:
        if math.isinf(self.bound):
            return math.inf
        return self.bound * self.scale

    @property
    def ratio(self) -> float:
        if self.scale > 0:
            return self.lhs / self.scale
        return 0.0 if self.lhs <= 0 else math.inf


def identity(name: str, residual: float, tol: Tolerance | None = None) -> Condition:
    return Condition(name, float(residual), 0.0, 1.0, tol)


@dataclass
class ConditionStats:
    bound: float
    violations: int = 0
    worst_ratio: float = 0.0
    worst_trial: int = -1

    def to_dict(self) -> dict:
        return {"bound": _jsonable(self.bound), "violations": self.violations,
                "worst_ratio": _jsonable(self.worst_ratio), "worst_trial": self.worst_trial}


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None if math.isnan(x) else ("inf" if x > 0 else "-inf")
    return x


@dataclass
class InequalityReport:
    check_name: str
    trials: int
    violations: int
    worst_ratio: float
    witness: tuple[Operator, ...]
    tolerances: dict
    primary: str
    conditions: dict[str, ConditionStats]
    config: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def condition(self, name: str) -> ConditionStats:
        return self.conditions[name]

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bound = self.conditions[self.primary].bound
        return (f"{status} {self.check_name}: trials={self.trials} violations={self.violations} "
                f"worst_ratio={self.worst_ratio:.6g} bound={bound:.6g}")

    def to_dict(self, witness_files: Sequence[str] = ()) -> dict:
        return {
            "check": self.check_name,
            "config": self.config,
            "trials": self.trials,
            "violations": self.violations,
            "worst_ratio": _jsonable(self.worst_ratio),
            "primary": self.primary,
            "witness_file": witness_files[0] if witness_files else None,
            "witness_files": list(witness_files),
            "tolerances": self.tolerances,
            "conditions": {k: v.to_dict() for k, v in self.conditions.items()},
            "details": self.details,
        }


def _run(name: str, cfg: EnsembleConfig, tol: Tolerance, samples: Iterable[tuple],
         evaluate: Callable[..., list[Condition]], primary: str, params: dict) -> InequalityReport:
    stats: dict[str, ConditionStats] = {}
    violations = 0
    trials = 0
    witness: tuple = ()
    for t, sample in enumerate(samples):
        trials += 1
        bad = False
        for c in evaluate(*sample):
            st = stats.setdefault(c.name, ConditionStats(bound=c.bound))
            if (c.tol or tol).violated(c.lhs, c.rhs):
                st.violations += 1
                bad = True
            r = c.ratio
            if r > st.worst_ratio or st.worst_trial < 0:
                st.worst_ratio = max(r, st.worst_ratio)
                st.worst_trial = t
                if c.name == primary:
                    witness = tuple(x for x in sample if isinstance(x, Operator))
        violations += bad
    config = cfg.to_dict()
    config.update(params)
    return InequalityReport(
        check_name=name, trials=trials, violations=violations,
        worst_ratio=stats[primary].worst_ratio if primary in stats else 0.0,
        witness=witness, tolerances=tol.to_dict(), primary=primary,
        conditions=stats, config=config,
    )


def _draws(cfg: EnsembleConfig, *kinds: str):
    for t in range(cfg.trials):
        yield tuple(random_operator(cfg, kind, t, slot) for slot, kind in enumerate(kinds))


# --------------------------------------------------------------------------
# L^2 theory


def check_h2_contraction(cfg: EnsembleConfig, tol: Tolerance = DEFAULT_TOL,
                         samples=None) -> InequalityReport:
    """``||a~||_2 <= ||a||_2`` together with the decomposition identities."""

    def evaluate(a):
        dec = decompose(a)
        ta = hilbert(a)
        n2 = lp_norm(a, 2) ** 2
        pieces = lp_norm(dec.a1, 2) ** 2 + lp_norm(dec.a2.adj, 2) ** 2 + lp_norm(dec.d, 2) ** 2
        a1s, a2s = dec.a1.adj, dec.a2
        ortho = max(abs(trace(a1s @ dec.a2.adj)), abs(trace(a1s @ dec.d)),
                    abs(trace(a2s @ dec.d)))
        return [
            Condition("contraction", lp_norm(ta, 2), 1.0, math.sqrt(n2)),
            identity("pythagoras", abs(n2 - pieces)),
            identity("reconstruction", (dec.reconstruct() - a).max_abs()),
            identity("conjugate_route", (dec.conjugate() - ta).max_abs()),
            identity("orthogonality", ortho),
            identity("analytic", support_residual(a + ta * 1j, SubspaceTag.HINF)),
        ]

    samples = samples if samples is not None else _draws(cfg, cfg.kind or "general")
    return _run("h2_contraction", cfg, tol, samples, evaluate, "contraction", {})


def check_hoelder(cfg: EnsembleConfig, exponents: Sequence[float] = (8, 8, 4, 2),
                  tol: Tolerance = DEFAULT_TOL, samples=None) -> InequalityReport:
    """``|tau(a_1 ... a_m)| <= prod ||a_j||_{p_j}`` for ``sum 1/p_j = 1``."""
    exponents = tuple(float(p) for p in exponents)
    if not exponents or any(not p >= 1 for p in exponents) \
            or abs(sum(1.0 / p for p in exponents) - 1.0) > 1e-12:
        raise BadExponents(f"reciprocals of {exponents} must sum to 1")

    def evaluate(*ops):
        prod = ops[0]
        for x in ops[1:]:
            prod = prod @ x
        rhs = math.prod(lp_norm(x, p) for x, p in zip(ops, exponents))
        return [Condition("hoelder", abs(trace(prod)), 1.0, rhs)]

    kinds = (cfg.kind or "general",) * len(exponents)
    samples = samples if samples is not None else _draws(cfg, *kinds)
    return _run("hoelder", cfg, tol, samples, evaluate, "hoelder",
                {"exponents": list(exponents)})


def check_phi_power_identity(cfg: EnsembleConfig, k: int = 2, tol: Tolerance = DEFAULT_TOL,
                             samples=None) -> InequalityReport:
    """``Phi((u + i u~)^2k) = Phi(u)^2k`` for self-adjoint ``u``, and the summed form."""

    def evaluate(u):
        tu = hilbert(u)
        d = expectation(u)
        g = u + tu * 1j
        gbar = u - tu * 1j
        target = d ** (2 * k)
        lhs = expectation(g ** (2 * k))
        both = expectation(g ** (2 * k) + gbar ** (2 * k))
        return [
            identity("phi_power", (lhs - target).max_abs()),
            identity("phi_power_sum", (both - target * 2).max_abs()),
        ]

    samples = samples if samples is not None else _draws(cfg, "selfadjoint")
    return _run("phi_power_identity", cfg, tol, samples, evaluate, "phi_power", {"k": k})


def check_even_p_bound(cfg: EnsembleConfig, k: int = 2, tol: Tolerance = DEFAULT_TOL,
                       samples=None) -> InequalityReport:
    """``||u~||_2k <= K_2k ||u||_2k`` (self-adjoint) and ``<= 2 K_2k`` in general."""
    K = k2k_constant(k).value
    p = 2.0 * k

    def evaluate(u, f):
        return [
            Condition("selfadjoint", lp_norm(hilbert(u), p), K, lp_norm(u, p)),
            Condition("general", lp_norm(hilbert(f), p), 2.0 * K, lp_norm(f, p)),
        ]

    samples = samples if samples is not None else _draws(cfg, "selfadjoint", "general")
    rep = _run("even_p_bound", cfg, tol, samples, evaluate, "selfadjoint", {"k": k})
    rep.details["K_2k"] = K
    return rep


def check_duality(cfg: EnsembleConfig, tol: Tolerance = DEFAULT_TOL,
                  samples=None) -> InequalityReport:
    """``tau(u v~) = -tau(u~ v)`` for self-adjoint ``u, v``."""

    def evaluate(u, v):
        tu, tv = hilbert(u), hilbert(v)
        return [
            identity("antisymmetry", abs(trace(u @ tv) + trace(tu @ v))),
            identity("sum_trace", abs(trace(u @ tv + tu @ v))),
            identity("real_part_identity",
                     abs(trace(u @ v - tu @ tv) - trace(expectation(u) @ expectation(v)))),
        ]

    samples = samples if samples is not None else _draws(cfg, "selfadjoint", "selfadjoint")
    return _run("duality", cfg, tol, samples, evaluate, "antisymmetry", {})


# --------------------------------------------------------------------------
# weak type (1,1) and its ingredients


def check_kolmogorov(cfg: EnsembleConfig, s_grid: Sequence[float] = DEFAULT_S_GRID,
                     tol: Tolerance = DEFAULT_TOL, samples=None) -> InequalityReport:
    """``s lambda_s(u + i u~) <= 4 ||u||_1`` for positive ``u``, for every ``s``.

    ``details["per_s_max_ratio"]`` holds ``max s lambda_s / ||u||_1`` per grid
    point over all trials.
    """
    s_grid = np.asarray(s_grid, dtype=float)
    if np.any(s_grid <= 0):
        raise ValueError("s grid must be positive")
    per_s = np.zeros(len(s_grid))

    def evaluate(u):
        f = analytic_completion(u)
        prof = mu(f)
        norm1 = lp_norm(u, 1)
        vals = np.array([s * distribution(prof, s) for s in s_grid])
        if norm1 > 0:
            np.maximum(per_s, vals / norm1, out=per_s)
        return [
            Condition("distribution", float(vals.max()), 4.0, norm1),
            Condition("weak_norm", weak_l1_quasinorm(prof), 4.0, norm1),
        ]

    samples = samples if samples is not None else _draws(cfg, "positive")
    rep = _run("kolmogorov", cfg, tol, samples, evaluate, "distribution",
               {"s_grid": [float(s) for s in s_grid]})
    rep.details["per_s_max_ratio"] = [float(x) for x in per_s]
    return rep


def _spectral_cut(a: Operator, rng: np.random.Generator) -> Operator:
    """``chi_(c, inf)(a)`` with ``c`` placed in a random spectral gap."""
    w, _ = eigh(a)
    j = int(rng.integers(0, len(w) + 1))
    if j == 0:
        c = w[0] - 1.0
    elif j == len(w):
        c = w[-1] + 1.0
    else:
        c = 0.5 * (w[j - 1] + w[j])
    return spectral_projection(a, lambda s: s > c)


def check_commuting_projection(cfg: EnsembleConfig, tol: Tolerance = DEFAULT_TOL,
                               samples=None) -> InequalityReport:
    """``tau(P a b P) <= tau(a b)`` for positive ``a, b`` and ``P`` commuting with ``a``."""

    def evaluate(a, b, P):
        ab = a @ b
        return [
            Condition("compression", trace(P @ ab @ P).real, 1.0, trace(ab).real),
            identity("commutation", (P @ a - a @ P).max_abs()),
        ]

    def draws():
        for t in range(cfg.trials):
            a = random_operator(cfg, "positive", t, 0)
            b = random_operator(cfg, "positive", t, 1)
            yield a, b, _spectral_cut(a, trial_rng(cfg.master_seed, t, 2))

    samples = samples if samples is not None else draws()
    return _run("commuting_projection", cfg, tol, samples, evaluate, "compression", {})


def _poly_of(x: Operator, coeffs: Sequence[float]) -> Operator:
    coeffs = np.asarray(coeffs, dtype=float)
    return hermitian_calculus(x, lambda w: np.polyval(coeffs[::-1], w))


def _random_coeffs(cfg: EnsembleConfig, trial: int, slot: int, degree: int = 3) -> tuple:
    rng = trial_rng(cfg.master_seed, trial, slot)
    return tuple(float(c) for c in rng.uniform(0.0, 1.0, degree + 1))


def check_re_vs_abs(cfg: EnsembleConfig, eps: float = 0.1, tol: Tolerance = DEFAULT_TOL,
                    samples=None) -> InequalityReport:
    """``tau(S Re f_eps) <= tau(S |f_eps|)`` for ``S`` a non-negative polynomial
    in ``|f_eps|``.  Samples are ``(u, coefficients)``."""

    def evaluate(u, coeffs):
        f_eps = regularize(u, eps)
        mod = abs_value(f_eps)
        S = _poly_of(mod, coeffs)
        return [Condition("trace", trace(S @ real_part(f_eps)).real, 1.0, trace(S @ mod).real)]

    def draws():
        for t in range(cfg.trials):
            yield random_operator(cfg, "positive", t, 0), _random_coeffs(cfg, t, 3)

    samples = samples if samples is not None else draws()
    return _run("re_vs_abs", cfg, tol, samples, evaluate, "trace", {"eps": eps})


def check_inverse_monotone(cfg: EnsembleConfig, eps: float = 0.1, s: float = 1.0,
                           tol: Tolerance = DEFAULT_TOL, samples=None) -> InequalityReport:
    """With ``A = |f|^2 + 2s Re f + s^2``, ``B = |f|^2 + 2s|f| + s^2`` (``f = f_eps``)
    and ``C`` a non-negative polynomial in ``|f|``: ``tau(CA) <= tau(CB)`` and
    ``tau(C B^-1) <= tau(C A^-1)``.  Samples are ``(u, coefficients)``."""

    def evaluate(u, coeffs):
        f_eps = regularize(u, eps)
        mod = abs_value(f_eps)
        one = u.algebra.identity
        sq = f_eps.adj @ f_eps
        A = sq + real_part(f_eps) * (2 * s) + one * (s * s)
        B = sq + mod * (2 * s) + one * (s * s)
        C = _poly_of(mod, coeffs)
        return [
            Condition("hypothesis", trace(C @ A).real, 1.0, trace(C @ B).real),
            Condition("conclusion", trace(C @ inverse(B)).real, 1.0, trace(C @ inverse(A)).real),
        ]

    def draws():
        for t in range(cfg.trials):
            yield random_operator(cfg, "positive", t, 0), _random_coeffs(cfg, t, 4)

    samples = samples if samples is not None else draws()
    return _run("inverse_monotone", cfg, tol, samples, evaluate, "conclusion",
                {"eps": eps, "s": s})


def check_weak_type(cfg: EnsembleConfig, ceiling: float = 40.0, tol: Tolerance = DEFAULT_TOL,
                    samples=None) -> InequalityReport:
    """Empirical ``||a~||_{1,inf} / ||a||_1`` against ``ceiling`` over general
    inputs, plus the sharp ``||u + i u~||_{1,inf} <= 4 ||u||_1`` for positive ``u``."""

    def evaluate(a, u):
        return [
            Condition("general", weak_l1_quasinorm(hilbert(a)), ceiling, lp_norm(a, 1)),
            Condition("positive_sharp", weak_l1_quasinorm(analytic_completion(u)), 4.0,
                      lp_norm(u, 1)),
            Condition("positive_conjugate", weak_l1_quasinorm(hilbert(u)), math.inf,
                      lp_norm(u, 1)),
        ]

    samples = samples if samples is not None else _draws(cfg, "general", "positive")
    return _run("weak_type", cfg, tol, samples, evaluate, "general", {"ceiling": ceiling})


def weak_lp_bound(p: float) -> float:
    """``5 + 4p / (1 - p)``: the integrated tail estimate for ``||u + i u~||_p^p``."""
    return 5.0 + 4.0 * p / (1.0 - p)


def check_weak_lp(cfg: EnsembleConfig, p: float = 0.5, tol: Tolerance = DEFAULT_TOL,
                  samples=None) -> InequalityReport:
    """``||u + i u~||_p^p <= 5 + 4p/(1-p)`` for positive ``u`` with ``||u||_1 = 1``.

    Inputs are rescaled to unit trace norm; ``||u~||_p / ||u||_1`` is only
    recorded (condition ``conjugate`` has an infinite bound).
    """
    if not 0.0 < p < 1.0:
        raise BadExponents(f"p must lie in (0, 1), got {p}")

    def evaluate(u):
        n1 = lp_norm(u, 1)
        if n1 > 0:
            u = u / n1
        scale = 1.0 if n1 > 0 else 0.0
        f = analytic_completion(u)
        return [
            Condition("derived", lp_norm(f, p) ** p, weak_lp_bound(p), scale),
            Condition("conjugate", lp_norm(hilbert(u), p), math.inf, scale),
        ]

    samples = samples if samples is not None else _draws(cfg, "positive")
    return _run("weak_lp", cfg, tol, samples, evaluate, "derived", {"p": p})


# --------------------------------------------------------------------------
# L log L


def check_llogl(cfg: EnsembleConfig, ceiling: float = 10.0,
                scales: Sequence[float] = DEFAULT_LLOGL_SCALES, tol: Tolerance = DEFAULT_TOL,
                samples=None) -> InequalityReport:
    """``||a~||_1 <= K (1 + tau(a log+ a))`` with empirical ``K`` below ``ceiling``,
    plus the dyadic chain used to prove it.

    Trial ``t`` rescales a positive draw to operator norm
    ``scales[t % len(scales)]``.  Chain conditions per dyadic part ``a_k``:
    ``a_k <= 2^k P_k`` (``k >= 1``), ``||a_k||_p <= 2^k tau(P_k)^(1/p)`` and
    ``||a_k~||_1 <= ||a_k~||_p`` for ``p = 1 + 1/(k+1)``.
    """

    def evaluate(a):
        dec = dyadic_decompose(a)
        ta = hilbert(a)
        dominated = 0.0
        part_norm = 0.0
        monotone = 0.0
        conj_sum = a.algebra.zero
        for part in dec.parts:
            k = part.k
            p = 1.0 + 1.0 / (k + 1)
            tk = hilbert(part.part)
            conj_sum = conj_sum + tk
            if k >= 1:
                w, _ = eigh(part.part - part.projection * 2.0 ** k)
                dominated = max(dominated, float(w[-1]))
            cap = 2.0 ** k * part.weight ** (1.0 / p)
            part_norm = max(part_norm, lp_norm(part.part, p) - cap)
            lpk = lp_norm(tk, p)
            monotone = max(monotone, lp_norm(tk, 1) - lpk)
        return [
            Condition("llogl", lp_norm(ta, 1), ceiling, 1.0 + llogl_functional(a)),
            identity("reconstruction", (dec.reconstruct() - a).max_abs()),
            identity("dyadic_domination", dominated),
            identity("part_norm", part_norm),
            identity("lp_monotone", monotone),
            identity("conjugate_linearity", (conj_sum - ta).max_abs()),
        ]

    def draws():
        for t in range(cfg.trials):
            u = random_operator(cfg, "positive", t, 0)
            yield (u * (scales[t % len(scales)] / op_norm(u)),)

    samples = samples if samples is not None else draws()
    rep = _run("llogl", cfg, tol, samples, evaluate, "llogl",
               {"ceiling": ceiling, "scales": [float(s) for s in scales]})
    rep.details["empirical_K"] = rep.worst_ratio
    return rep


# --------------------------------------------------------------------------
# regularization lemma


def check_regularization_suite(cfg: EnsembleConfig, eps_grid: Sequence[float] = DEFAULT_EPS_GRID,
                               s_values: Sequence[float] = (0.5, 1.0, 2.0),
                               tol: Tolerance = DEFAULT_TOL, samples=None) -> InequalityReport:
    """All six conclusions of the regularization lemma plus the Moebius-map facts.

    The approximation bound ``||f_eps - f||_p <= eps ||I + f^2||_p`` is checked
    for ``p`` in ``{1, 2, 4}``; ``||f_eps - f||_2`` must decrease along
    decreasing ``eps``.
    """
    eps_grid = sorted((float(e) for e in eps_grid), reverse=True)
    tight = Tolerance(1e-10, 0.0)
    loose = Tolerance(1e-9, 0.0)

    def evaluate(u):
        resolvent = hinf = expect = realp = 0.0
        mpos = mhinf = mexp = 0.0
        approx2 = approx_other = 0.0
        errors = []
        for eps in eps_grid:
            dg = regularization_diagnostics(u, eps)
            resolvent = max(resolvent, dg.resolvent_norm)
            hinf = max(hinf, dg.hinf_residual)
            expect = max(expect, dg.expectation_residual)
            realp = max(realp, eps - dg.real_part_min)
            bound2 = dg.approx_bound[2.0]
            approx2 = max(approx2, dg.approx_error[2.0] / bound2 if bound2 > 0 else 0.0)
            for p in (1.0, 4.0):
                b = dg.approx_bound[p]
                approx_other = max(approx_other, dg.approx_error[p] / b if b > 0 else 0.0)
            errors.append(dg.approx_error[2.0])
            f_eps = regularize(u, eps)
            phi_eps = moebius_scalar(expectation(u), eps)
            for s in s_values:
                A = moebius(f_eps, s)
                mpos = max(mpos, -min_eigenvalue(real_part(A)))
                mhinf = max(mhinf, support_residual(A, SubspaceTag.HINF))
                mexp = max(mexp, (expectation(A) - moebius(phi_eps, s)).max_abs())
        increase = max([b - a for a, b in zip(errors, errors[1:])] + [0.0])
        return [
            Condition("approximation", approx2, 1.0, 1.0),
            Condition("approximation_p", approx_other, 1.0, 1.0),
            Condition("resolvent", resolvent, 1.0, 1.0, tight),
            identity("hinf", hinf, loose),
            identity("expectation", expect, loose),
            identity("real_part", realp, loose),
            identity("moebius_positive", mpos, tight),
            identity("moebius_hinf", mhinf, loose),
            identity("moebius_expectation", mexp, loose),
            identity("convergence", increase),
        ]

    samples = samples if samples is not None else _draws(cfg, "positive")
    rep = _run("regularization", cfg, tol, samples, evaluate, "approximation",
               {"eps_grid": eps_grid, "s_values": [float(s) for s in s_values]})
    grid = np.linspace(1.0, 50.0, 200)
    w = kolmogorov_weight(grid, 1.0)
    rep.details["psi_at_s"] = float(kolmogorov_weight(1.0, 1.0))
    rep.details["psi_increasing_on_grid"] = bool(np.all(np.diff(w) > 0))
    return rep


# --------------------------------------------------------------------------
# registry


CHECKS: dict[str, Callable[..., InequalityReport]] = {
    "h2_contraction": check_h2_contraction,
    "hoelder": check_hoelder,
    "phi_power_identity": check_phi_power_identity,
    "even_p_bound": check_even_p_bound,
    "duality": check_duality,
    "kolmogorov": check_kolmogorov,
    "commuting_projection": check_commuting_projection,
    "re_vs_abs": check_re_vs_abs,
    "inverse_monotone": check_inverse_monotone,
    "weak_type": check_weak_type,
    "weak_lp": check_weak_lp,
    "llogl": check_llogl,
    "regularization": check_regularization_suite,
}


def run_check(name: str, cfg: EnsembleConfig, tol: Tolerance = DEFAULT_TOL,
              **params) -> InequalityReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECKS)}") from None
    return fn(cfg, tol=tol, **params)

"""
Finite traced matrix algebras with a block subdiagonal structure.

The algebra is M_n(C) with the normalized trace ``tau(a) = Tr(a) / n``.  An
ordered partition ``(b_1, ..., b_m)`` of ``n`` cuts every matrix into blocks;
the block upper-triangular matrices form the analytic subalgebra ``H^inf``,
the block-diagonal matrices form the diagonal ``D`` and the conditional
expectation ``Phi`` is the compression onto the diagonal blocks.

Two partitions are degenerate extremes: the full flag ``(1, ..., 1)``
(triangular matrices over the diagonal) and the single block ``(n,)`` where
``D`` is everything and ``Phi`` is the identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from .errors import NotHermitian, PartitionMismatch, Singular

HERMITIAN_RTOL = 1e-10
SINGULAR_RTOL = 1e-12


class SubspaceTag(enum.Enum):
    FULL = "full"
    HINF = "hinf"
    HINF0 = "hinf0"
    HINF_STAR = "hinf_star"
    HINF0_STAR = "hinf0_star"
    DIAG = "diag"


@dataclass(frozen=True)
class TracedAlgebra:
    """M_n(C) with normalized trace and the block structure of ``partition``."""

    n: int
    partition: tuple[int, ...]

    def __post_init__(self):
        part = tuple(int(b) for b in self.partition)
        object.__setattr__(self, "partition", part)
        if self.n < 1:
            raise PartitionMismatch(f"dimension must be positive, got {self.n}")
        if not part or any(b < 1 for b in part):
            raise PartitionMismatch(f"block sizes must be positive, got {part}")
        if sum(part) != self.n:
            raise PartitionMismatch(
                f"partition {part} sums to {sum(part)}, expected n={self.n}")

    @classmethod
    def from_partition(cls, partition: Sequence[int]) -> TracedAlgebra:
        partition = tuple(int(b) for b in partition)
        return cls(sum(partition), partition)

    @classmethod
    def flag(cls, n: int) -> TracedAlgebra:
        return cls(n, (1,) * n)

    @classmethod
    def single(cls, n: int) -> TracedAlgebra:
        return cls(n, (n,))

    @classmethod
    def halves(cls, n: int) -> TracedAlgebra:
        if n < 2:
            return cls.single(n)
        return cls(n, (n // 2, n - n // 2))

    @classmethod
    def parse(cls, n: int, text: str) -> TracedAlgebra:
        """Build from a partition keyword (``flag``, ``halves``, ``single``/``n``)
        or a comma-separated list of block sizes."""
        key = text.strip().lower()
        if key == "flag":
            return cls.flag(n)
        if key in ("single", "n", "trivial"):
            return cls.single(n)
        if key == "halves":
            return cls.halves(n)
        try:
            blocks = tuple(int(tok) for tok in key.split(",") if tok.strip())
        except ValueError:
            raise PartitionMismatch(f"cannot parse partition {text!r}") from None
        return cls(n, blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.partition)

    @cached_property
    def block_of(self) -> np.ndarray:
        """Block index of every row/column."""
        return np.repeat(np.arange(len(self.partition)), self.partition)

    @cached_property
    def _masks(self) -> dict[SubspaceTag, np.ndarray]:
        row = self.block_of[:, None]
        col = self.block_of[None, :]
        masks = {
            SubspaceTag.FULL: np.ones((self.n, self.n), dtype=bool),
            SubspaceTag.HINF: row <= col,
            SubspaceTag.HINF0: row < col,
            SubspaceTag.HINF_STAR: row >= col,
            SubspaceTag.HINF0_STAR: row > col,
            SubspaceTag.DIAG: row == col,
        }
        for m in masks.values():
            m.setflags(write=False)
        return masks

    def mask(self, tag: SubspaceTag) -> np.ndarray:
        """Boolean support pattern of the subspace ``tag``."""
        return self._masks[tag]

    def pattern_dimension(self, tag: SubspaceTag) -> int:
        return int(self._masks[tag].sum())

    # constructors bound to this algebra

    def operator(self, entries) -> Operator:
        return Operator(self, entries)

    @cached_property
    def identity(self) -> Operator:
        return Operator(self, np.eye(self.n))

    @cached_property
    def zero(self) -> Operator:
        return Operator(self, np.zeros((self.n, self.n)))

    def diag(self, values) -> Operator:
        return Operator(self, np.diag(np.asarray(values, dtype=np.complex128)))


class Operator:
    """An immutable n x n complex matrix belonging to a :class:`TracedAlgebra`.

    Supports ``+``, ``-``, scalar ``*`` and ``/``, ``@`` for the algebra
    product, ``**`` for non-negative integer powers and ``.adj`` for the
    adjoint.
    """

    __slots__ = ("algebra", "entries")

    def __init__(self, algebra: TracedAlgebra, entries):
        arr = np.array(entries, dtype=np.complex128)
        if arr.shape != (algebra.n, algebra.n):
            raise PartitionMismatch(
                f"entries have shape {arr.shape}, algebra needs {(algebra.n, algebra.n)}")
        if not np.isfinite(arr).all():
            raise ValueError("operator entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Operator is immutable")

    def __repr__(self):
        return f"Operator(partition={self.algebra.partition}, entries=\n{self.entries!r})"

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def adj(self) -> Operator:
        return Operator(self.algebra, self.entries.conj().T)

    def max_abs(self) -> float:
        return float(np.abs(self.entries).max(initial=0.0))

    def _new(self, entries) -> Operator:
        return Operator(self.algebra, entries)

    def _other(self, other) -> np.ndarray:
        if isinstance(other, Operator):
            if other.algebra != self.algebra:
                raise PartitionMismatch("operators belong to different algebras")
            return other.entries
        return NotImplemented

    def __add__(self, other):
        rhs = self._other(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._new(self.entries + rhs)

    def __sub__(self, other):
        rhs = self._other(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._new(self.entries - rhs)

    def __neg__(self):
        return self._new(-self.entries)

    def __mul__(self, scalar):
        if isinstance(scalar, Operator) or not np.isscalar(scalar):
            return NotImplemented
        return self._new(self.entries * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Operator) or not np.isscalar(scalar):
            return NotImplemented
        return self._new(self.entries / scalar)

    def __matmul__(self, other):
        rhs = self._other(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._new(self.entries @ rhs)

    def __pow__(self, k: int):
        if int(k) != k or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        return self._new(np.linalg.matrix_power(self.entries, int(k)))


def trace(a: Operator) -> complex:
    """Normalized trace, ``tau(I) = 1``."""
    return complex(np.trace(a.entries) / a.n)


def expectation(a: Operator) -> Operator:
    """Conditional expectation onto the block diagonal."""
    return Operator(a.algebra, np.where(a.algebra.mask(SubspaceTag.DIAG), a.entries, 0))


def support_residual(a: Operator, tag: SubspaceTag) -> float:
    """Largest modulus of an entry outside the support pattern of ``tag``."""
    outside = ~a.algebra.mask(tag)
    return float(np.abs(a.entries[outside]).max(initial=0.0))


def membership(a: Operator, tag: SubspaceTag, tol: float = 0.0) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return support_residual(a, tag) <= tol


def hermitian_defect(a: Operator) -> float:
    return float(np.abs(a.entries - a.entries.conj().T).max(initial=0.0))


def is_hermitian(a: Operator) -> bool:
    return hermitian_defect(a) <= HERMITIAN_RTOL * (1.0 + a.max_abs())


def eigh(a: Operator) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian operator (ascending eigenvalues)."""
    if not is_hermitian(a):
        raise NotHermitian(
            f"operator is not Hermitian (defect {hermitian_defect(a):.3e})")
    h = 0.5 * (a.entries + a.entries.conj().T)
    return np.linalg.eigh(h)


def hermitian_calculus(a: Operator, func: Callable[[np.ndarray], np.ndarray]) -> Operator:
    """Apply the scalar function ``func`` to a Hermitian operator.

    ``func`` receives the array of eigenvalues and must return an array of the
    same length; the result is ``sum_i func(s_i) P_i``.

    Raises
    ------
    NotHermitian
        If ``a`` differs from its adjoint by more than
        ``1e-10 * (1 + max|a_ij|)``.
    """
    w, q = eigh(a)
    fw = np.asarray(func(w), dtype=np.complex128)
    return Operator(a.algebra, (q * fw) @ q.conj().T)


def spectral_projection(a: Operator, indicator: Callable[[np.ndarray], np.ndarray]) -> Operator:
    """Spectral projection of a Hermitian operator onto ``{s : indicator(s)}``."""
    return hermitian_calculus(a, lambda w: np.asarray(indicator(w), dtype=float))


def abs_value(a: Operator) -> Operator:
    """``|a| = (a* a)^(1/2)``; tiny negative eigenvalues of ``a* a`` are clamped."""
    g = a.adj @ a
    return hermitian_calculus(g, lambda w: np.sqrt(np.clip(w, 0.0, None)))


def real_part(a: Operator) -> Operator:
    return (a + a.adj) * 0.5


def min_eigenvalue(a: Operator) -> float:
    return float(eigh(a)[0][0])


def inverse(a: Operator) -> Operator:
    """Matrix inverse guarded by ``sigma_min > 1e-12 * sigma_max``."""
    sv = np.linalg.svd(a.entries, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] <= SINGULAR_RTOL * sv[0]:
        raise Singular(f"operator is numerically singular (sigma_min={sv[-1]:.3e})")
    return Operator(a.algebra, np.linalg.inv(a.entries))

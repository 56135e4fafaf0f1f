"""Seeded random-operator ensembles.

Every draw is a pure function of ``(master_seed, trial, slot)``: the triple is
hashed by :class:`numpy.random.SeedSequence` and fed to the counter-based
Philox generator, so trials can be evaluated in any order (or in parallel)
and still reproduce bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .algebra import Operator, SubspaceTag, TracedAlgebra
from .errors import PartitionMismatch

Kind = Literal["general", "selfadjoint", "positive", "block_upper"]
KINDS = ("general", "selfadjoint", "positive", "block_upper")


@dataclass(frozen=True)
class EnsembleConfig:
    """Dimension, block structure, trial count and seed of a random ensemble.

    ``partition`` is a sequence of block sizes or a keyword accepted by
    :meth:`TracedAlgebra.parse` (``flag``, ``halves``, ``single``, ``"1,2,3"``).
    """

    n: int
    partition: tuple[int, ...]
    trials: int = 100
    master_seed: int = 0
    kind: str | None = None
    algebra: TracedAlgebra = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.partition, str):
            part = TracedAlgebra.parse(self.n, self.partition).partition
        else:
            part = tuple(int(b) for b in self.partition)
        object.__setattr__(self, "partition", part)
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must fit in an unsigned 64-bit integer")
        object.__setattr__(self, "algebra", TracedAlgebra(self.n, self.partition))

    @classmethod
    def for_algebra(cls, algebra: TracedAlgebra, **kw) -> EnsembleConfig:
        return cls(algebra.n, algebra.partition, **kw)

    def with_(self, **changes) -> EnsembleConfig:
        fields = dict(n=self.n, partition=self.partition, trials=self.trials,
                      master_seed=self.master_seed, kind=self.kind)
        fields.update(changes)
        if "n" in changes and "partition" not in changes:
            raise PartitionMismatch("changing n requires a new partition")
        return EnsembleConfig(**fields)

    def to_dict(self) -> dict:
        return {"n": self.n, "partition": list(self.partition), "trials": self.trials,
                "master_seed": self.master_seed, "kind": self.kind}


def trial_rng(master_seed: int, trial: int, slot: int = 0) -> np.random.Generator:
    """Independent generator for one ``(trial, slot)`` pair."""
    seq = np.random.SeedSequence([int(master_seed), int(trial), int(slot)])
    return np.random.Generator(np.random.Philox(seq))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian entries, ``E|z|^2 = 1``."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar unitary via QR with the phase correction of Mezzadri."""
    q, r = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def draw(algebra: TracedAlgebra, kind: str, rng: np.random.Generator) -> Operator:
    n = algebra.n
    g = complex_gaussian(rng, (n, n))
    if kind == "general":
        m = g
    elif kind == "selfadjoint":
        m = 0.5 * (g + g.conj().T)
    elif kind == "positive":
        m = g.conj().T @ g / n
        m = 0.5 * (m + m.conj().T)
    elif kind == "block_upper":
        m = np.where(algebra.mask(SubspaceTag.HINF), g, 0)
    else:
        raise ValueError(f"unknown ensemble kind {kind!r}")
    return Operator(algebra, m)


def random_operator(cfg: EnsembleConfig, kind: str | None, trial: int, slot: int = 0) -> Operator:
    """Deterministic draw for ``trial`` (and ``slot`` when a trial needs several).

    ``kind`` falls back to ``cfg.kind`` and then to ``"general"``.
    """
    kind = kind or cfg.kind or "general"
    return draw(cfg.algebra, kind, trial_rng(cfg.master_seed, trial, slot))

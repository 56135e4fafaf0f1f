"""Read and write the shared matrix file format.

A matrix file is a JSON document::

    {"n": 2, "partition": [1, 1],
     "entries": [[[1.0, 0.0], [2.0, 0.0]], [[3.0, 0.0], [4.0, 0.0]]]}

Entries are row-major ``[re, im]`` pairs written with 17 significant digits,
so a write/read round trip is bit-exact.
"""

from __future__ import annotations

import json
import os
from typing import Sequence

import numpy as np

from .algebra import Operator, TracedAlgebra
from .errors import ParseError, PartitionMismatch


def _fmt(x: float) -> str:
    s = format(float(x), ".17g")
    # keep JSON readers from seeing a bare integer where a real is expected
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def dumps_matrix(a: Operator) -> str:
    rows = []
    for row in a.entries:
        cells = ", ".join(f"[{_fmt(z.real)}, {_fmt(z.imag)}]" for z in row)
        rows.append(f"    [{cells}]")
    partition = ", ".join(str(b) for b in a.algebra.partition)
    return (f'{{\n  "n": {a.n},\n  "partition": [{partition}],\n'
            f'  "entries": [\n' + ",\n".join(rows) + "\n  ]\n}\n")


def loads_matrix(text: str, partition: Sequence[int] | str | None = None) -> Operator:
    """Parse a matrix document.

    ``partition`` overrides the partition stored in the file; it may be a
    sequence of block sizes or a keyword accepted by
    :meth:`TracedAlgebra.parse`.
    """
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        stored = [int(b) for b in doc["partition"]]
        raw = np.asarray(doc["entries"], dtype=float)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed matrix document: {exc}") from None
    if raw.shape != (n, n, 2):
        raise ParseError(f"entries must have shape ({n}, {n}, 2), got {raw.shape}")
    if not np.isfinite(raw).all():
        raise ParseError("entries must be finite")
    if partition is None:
        algebra = TracedAlgebra(n, tuple(stored))
    elif isinstance(partition, str):
        algebra = TracedAlgebra.parse(n, partition)
    else:
        algebra = TracedAlgebra(n, tuple(partition))
    if algebra.n != n:
        raise PartitionMismatch(f"partition is for n={algebra.n}, file has n={n}")
    return Operator(algebra, raw[..., 0] + 1j * raw[..., 1])


def write_matrix(a: Operator, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(a))


def read_matrix(path: str | os.PathLike, partition=None) -> Operator:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads_matrix(text, partition)

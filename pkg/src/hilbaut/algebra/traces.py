"""Graded eigenvalue data and the trace series of tensor, symmetric and
exterior algebras.

For a diagonalizable graded endomorphism with eigenvalue ``lam`` in degree
``i``, the weight-n part of each algebra has a graded trace in which every
eigenvector contributes ``lam * t^i``.  The three generating functions are

    tensor:    1 / (1 - tr * q),        tr = sum lam * t^i
    symmetric: prod (1 - lam t^i q)^-1
    exterior:  prod (1 + lam t^i q)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .series import TruncatedSeries, join_kinds, scalar_kind

__all__ = [
    "GradedEigenvalues",
    "tensor_trace_series",
    "sym_trace_series",
    "ext_trace_series",
    "eigenvalues",
]


@dataclass(frozen=True)
class GradedEigenvalues:
    """Eigenvalue multisets per cohomological degree; ``levels[i]`` holds the
    eigenvalues on the degree-i piece, so ``len(levels[i])`` is its dimension."""

    levels: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(tuple(lv) for lv in self.levels))
        kind = None
        for lv in self.levels:
            for lam in lv:
                kind = join_kinds(kind, scalar_kind(lam))
        object.__setattr__(self, "_kind", kind)

    @classmethod
    def from_mapping(cls, by_degree: Mapping[int, Sequence], top: int | None = None):
        top = max(by_degree, default=-1) if top is None else top
        return cls(tuple(tuple(by_degree.get(i, ())) for i in range(top + 1)))

    @property
    def kind(self) -> str | None:
        return self._kind

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(lv) for lv in self.levels)

    @property
    def max_degree(self) -> int:
        nonempty = [i for i, lv in enumerate(self.levels) if lv]
        return max(nonempty, default=0)

    def __iter__(self) -> Iterator[tuple[int, object]]:
        """(degree, eigenvalue) pairs, one per basis vector."""
        for i, lv in enumerate(self.levels):
            for lam in lv:
                yield i, lam

    def __len__(self):
        return sum(self.dims)

    def grouped(self) -> list[tuple[int, object, int]]:
        """(degree, eigenvalue, multiplicity), in first-seen order."""
        counts = Counter(self)
        return [(i, lam, k) for (i, lam), k in counts.items()]

    def graded_trace(self) -> dict[int, object]:
        out: dict[int, object] = {}
        for i, lam in self:
            out[i] = out.get(i, 0) + lam
        return out

    def direct_sum(self, other: "GradedEigenvalues") -> "GradedEigenvalues":
        n = max(len(self.levels), len(other.levels))
        pad = lambda lv, i: lv[i] if i < len(lv) else ()  # noqa: E731
        return GradedEigenvalues(tuple(pad(self.levels, i) + pad(other.levels, i) for i in range(n)))


def _bounds(e: GradedEigenvalues, nmax: int, tmax: int | None) -> dict[str, int]:
    return {"q": nmax, "t": nmax * e.max_degree if tmax is None else tmax}


def tensor_trace_series(e: GradedEigenvalues, nmax: int, tmax: int | None = None) -> TruncatedSeries:
    b = _bounds(e, nmax, tmax)
    tr = {(1, i): c for i, c in e.graded_trace().items()}
    trq = TruncatedSeries(("q", "t"), b, tr)
    # 1/(1 - trq) as a finite geometric sum: trq has no constant term
    acc = TruncatedSeries.one(("q", "t"), b)
    power = acc
    for _ in range(nmax):
        power = power * trq
        acc = acc + power
    return acc


def _product(e: GradedEigenvalues, nmax: int, tmax, sign: int, power: int) -> TruncatedSeries:
    b = _bounds(e, nmax, tmax)
    acc = TruncatedSeries.one(("q", "t"), b)
    for i, lam, mult in e.grouped():
        acc = acc * TruncatedSeries.binomial_factor(sign * lam, {"q": 1, "t": i}, power * mult,
                                                    ("q", "t"), b)
    return acc


def sym_trace_series(e: GradedEigenvalues, nmax: int, tmax: int | None = None) -> TruncatedSeries:
    return _product(e, nmax, tmax, -1, -1)


def ext_trace_series(e: GradedEigenvalues, nmax: int, tmax: int | None = None) -> TruncatedSeries:
    return _product(e, nmax, tmax, 1, 1)


def eigenvalues(values: Iterable, degree: int = 0) -> GradedEigenvalues:
    """Shorthand: all values in a single degree."""
    return GradedEigenvalues.from_mapping({degree: list(values)})

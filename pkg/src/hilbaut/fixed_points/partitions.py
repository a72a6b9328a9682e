"""Partitions, Young diagrams and the monomial ideals they cut out.

Convention: λ = (λ_1 >= λ_2 >= ...) has diagram D(λ) = {(i, j) : i < λ_{j+1}},
so row j holds the monomials x^i y^j with i < λ_{j+1}.  The ideal I_λ is
spanned by the monomials outside D(λ); its minimal generators G(λ) are the
outer corners of the staircase, listed with decreasing x-exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import InputError

__all__ = ["PartitionDiagram", "diagram", "partitions", "monomial_fixed_points", "transpose"]


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order: (n), (n-1, 1), ..."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def transpose(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


@dataclass(frozen=True)
class PartitionDiagram:
    parts: tuple[int, ...]
    cells: frozenset[tuple[int, int]]
    generators: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.cells)

    def transpose(self) -> "PartitionDiagram":
        return diagram(transpose(self.parts))

    def contains(self, i: int, j: int) -> bool:
        return i >= 0 and j >= 0 and j < len(self.parts) and i < self.parts[j]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@lru_cache(maxsize=None)
def _diagram(parts: tuple[int, ...]) -> PartitionDiagram:
    cells = frozenset((i, j) for j, p in enumerate(parts) for i in range(p))
    padded = parts + (0,)
    gens = [(parts[0], 0)]
    for j in range(1, len(padded)):
        if padded[j] < padded[j - 1]:
            gens.append((padded[j], j))
    return PartitionDiagram(parts, cells, tuple(gens))


def diagram(parts: Sequence[int]) -> PartitionDiagram:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise InputError(f"a partition needs positive parts, got {parts}", field="partition")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InputError(f"partition parts must be non-increasing, got {parts}", field="partition")
    return _diagram(parts)


def monomial_fixed_points(n: int) -> list[PartitionDiagram]:
    """Every partition of n: each I_λ is fixed by any diagonal action."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}", field="n")
    return [diagram(p) for p in partitions(n)]

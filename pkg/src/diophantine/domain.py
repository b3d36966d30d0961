# -*- coding: utf-8 -*-
"""
Finite search domains {0..c-1}^n in graded-lexicographic order.

Points are ordered by coordinate sum, then lexicographically, so (0, 5)
precedes (1, 4) and every point of sum s precedes every point of sum s + 1.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterator, List, Tuple

Point = Tuple[int, ...]


def _with_sum(arity: int, total: int, cutoff: int) -> Iterator[Point]:
    if arity == 1:
        if total < cutoff:
            yield (total,)
        return
    low = max(0, total - (arity - 1) * (cutoff - 1))
    for first in range(low, min(cutoff - 1, total) + 1):
        for rest in _with_sum(arity - 1, total - first, cutoff):
            yield (first,) + rest


def graded_lex(arity: int, cutoff: int) -> Iterator[Point]:
    """Every point of {0..cutoff-1}^arity, graded-lex ascending."""
    for total in range(arity * (cutoff - 1) + 1):
        yield from _with_sum(arity, total, cutoff)


@dataclass(frozen=True)
class SearchDomain:
    arity: int
    cutoff: int

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be positive, got {self.arity}")
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be positive, got {self.cutoff}")

    @property
    def size(self) -> int:
        return self.cutoff ** self.arity

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Point]:
        return graded_lex(self.arity, self.cutoff)

    @cached_property
    def points(self) -> List[Point]:
        return list(graded_lex(self.arity, self.cutoff))

    @cached_property
    def _index(self) -> Dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    def point(self, index: int) -> Point:
        if not 0 <= index < self.size:
            raise IndexError(f"index {index} outside domain of size {self.size}")
        return self.points[index]

    def index_of(self, x: Tuple[int, ...]) -> int:
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise ValueError(f"{tuple(x)} is not in {{0..{self.cutoff - 1}}}^{self.arity}") from None

    def to_dict(self) -> Dict[str, Any]:
        return {"arity": self.arity, "cutoff": self.cutoff, "size": self.size}

"""Integer partitions, (k, l)-hooks and cycle-type helpers."""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .limits import check


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions are plain tuples underneath, so they hash, compare and
    serialize like tuples. The empty partition is the unique partition of 0.
    The same type is used for cycle types of permutations.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"partition parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def num_parts(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part access; parts past the end are 0."""
        if i < 1:
            raise IndexError("parts are indexed from 1")
        return self[i - 1] if i <= len(self) else 0

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, row in enumerate(self) for c in range(row)]

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(json.loads(text))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(parts: Sequence[int] | Partition) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    ``(n)`` comes first and ``(1^n)`` last.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    check("max_n", n, "n")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def in_hook(lam: Sequence[int], k: int, l: int) -> bool:
    """True iff the (k+1)-th part of ``lam`` is at most ``l``."""
    lam = as_partition(lam)
    return lam.part(k + 1) <= l


def in_strict_hook(lam: Sequence[int], k: int, l: int) -> bool:
    """Hook membership plus containment of the k x l rectangle.

    The k-th part of a partition with fewer than k parts counts as 0; for
    ``k == 0`` the rectangle is empty and the condition is vacuous.
    """
    lam = as_partition(lam)
    if not in_hook(lam, k, l):
        return False
    return k == 0 or lam.part(k) >= l


def hook_partitions(k: int, l: int, n: int) -> list[Partition]:
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    return [lam for lam in partitions_of(n) if in_hook(lam, k, l)]


def strict_hook_partitions(k: int, l: int, n: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if in_strict_hook(lam, k, l)]


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    lam = as_partition(lam)
    cols = conjugate(lam)
    return [[lam[r] - c + cols[c] - r - 1 for c in range(lam[r])] for r in range(len(lam))]


def z_factor(mu: Sequence[int]) -> int:
    """Centralizer order of a permutation of cycle type ``mu``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def canonical_permutation(mu: Sequence[int]) -> tuple[int, ...]:
    """The permutation (1,...,mu_1)(mu_1+1,...,mu_1+mu_2)... in 0-based one-line form.

    Entry ``i`` of the result is the image of point ``i``.
    """
    mu = as_partition(mu)
    image = []
    start = 0
    for m in mu:
        image.extend(range(start + 1, start + m))
        image.append(start)
        start += m
    return tuple(image)


def cycle_type(sigma: Sequence[int]) -> Partition:
    n = len(sigma)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def parse_shape(text: str) -> Partition:
    """Parse ``"3,1,1"`` into a partition; non-decreasing input is rejected, not sorted."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"shape must be comma-separated integers, got {text!r}") from None
    return Partition(parts)

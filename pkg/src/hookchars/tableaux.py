"""Semistandard and (k, l)-semistandard tableaux.

Letters are integers ``0 .. k+l-1`` ordered t_1 < ... < t_k < u_1 < ... < u_l;
letter ``a`` is even (a t) when ``a < k`` and odd (a u) otherwise. A filling is
(k, l)-semistandard when it weakly increases along rows and down columns, no
even letter repeats in a column and no odd letter repeats in a row. With
``l = 0`` this is the usual semistandard rule over ``k`` letters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .limits import ResourceLimitError, ceiling
from .partitions import Partition, as_partition, hook_lengths


@dataclass(frozen=True)
class GradedAlphabet:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("alphabet sizes must be non-negative")

    def __len__(self) -> int:
        return self.k + self.l

    def is_odd(self, letter: int) -> bool:
        return letter >= self.k

    def name(self, letter: int) -> str:
        if not 0 <= letter < len(self):
            raise ValueError(f"letter {letter} outside alphabet ({self.k}, {self.l})")
        return f"t{letter + 1}" if letter < self.k else f"u{letter - self.k + 1}"

    def parse(self, name: str) -> int:
        kind, idx = name[0], int(name[1:])
        if kind == "t" and 1 <= idx <= self.k:
            return idx - 1
        if kind == "u" and 1 <= idx <= self.l:
            return self.k + idx - 1
        raise ValueError(f"{name!r} is not a letter of alphabet ({self.k}, {self.l})")


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    alphabet: GradedAlphabet

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("rows do not match shape")

    def __getitem__(self, cell: tuple[int, int]) -> int:
        r, c = cell
        return self.rows[r][c]

    @property
    def filling(self) -> dict[tuple[int, int], int]:
        return {(r, c): v for r, row in enumerate(self.rows) for c, v in enumerate(row)}

    def is_valid(self) -> bool:
        odd = self.alphabet.is_odd
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if not 0 <= v < len(self.alphabet):
                    return False
                if c and not _row_ok(row[c - 1], v, odd):
                    return False
                if r and not _col_ok(self.rows[r - 1][c], v, odd):
                    return False
        return True

    def to_names(self) -> list[list[str]]:
        return [[self.alphabet.name(v) for v in row] for row in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_names())

    @classmethod
    def from_names(cls, rows: Sequence[Sequence[str]], k: int, l: int) -> "Tableau":
        alpha = GradedAlphabet(k, l)
        parsed = tuple(tuple(alpha.parse(x) for x in row) for row in rows)
        return cls(Partition(len(r) for r in parsed), parsed, alpha)

    def __str__(self) -> str:
        return "\n".join(" ".join(row) for row in self.to_names())


def _row_ok(left: int, v: int, odd) -> bool:
    return v > left or (v == left and not odd(v))


def _col_ok(above: int, v: int, odd) -> bool:
    return v > above or (v == above and odd(v))


def _candidates(left: int | None, above: int | None, k: int, n_letters: int) -> range:
    lo = 0
    if left is not None:
        lo = left if left < k else left + 1
    if above is not None:
        lo = max(lo, above + 1 if above < k else above)
    return range(lo, n_letters)


def enumerate_super_ssyt(lam: Sequence[int], k: int, l: int, limit: int | None = None) -> list[Tableau]:
    """Every (k, l)-semistandard tableau of shape ``lam``, in cell-major backtracking order.

    Cells are filled row by row, left to right, trying letters in increasing
    order. Raises ResourceLimitError once more than ``limit`` tableaux
    (default: the ``max_tableaux`` ceiling) have been produced.
    """
    if limit is None:
        limit = ceiling("max_tableaux")
    out = []
    for t in iter_super_ssyt(lam, k, l):
        if len(out) >= limit:
            raise ResourceLimitError(f"more than {limit} tableaux of shape {list(lam)}")
        out.append(t)
    return out


def iter_super_ssyt(lam: Sequence[int], k: int, l: int) -> Iterator[Tableau]:
    lam = as_partition(lam)
    alpha = GradedAlphabet(k, l)
    n_letters = k + l
    cells = lam.cells()
    grid = [[0] * row for row in lam]

    def fill(i: int) -> Iterator[Tableau]:
        if i == len(cells):
            yield Tableau(lam, tuple(tuple(row) for row in grid), alpha)
            return
        r, c = cells[i]
        left = grid[r][c - 1] if c else None
        above = grid[r - 1][c] if r else None
        for v in _candidates(left, above, k, n_letters):
            grid[r][c] = v
            yield from fill(i + 1)

    yield from fill(0)


def _rows_under(above: tuple[int, ...] | None, length: int, k: int, n_letters: int) -> list[tuple[int, ...]]:
    out = []
    row = [0] * length

    def go(c: int):
        if c == length:
            out.append(tuple(row))
            return
        left = row[c - 1] if c else None
        up = above[c] if above is not None else None
        for v in _candidates(left, up, k, n_letters):
            row[c] = v
            go(c + 1)

    go(0)
    return out


def count_super_ssyt(lam: Sequence[int], k: int, l: int) -> int:
    """Number of (k, l)-semistandard tableaux of shape ``lam``.

    Uses the same cell rules as the enumerator but walks one row at a time,
    caching the number of completions below each possible row.
    """
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    lam = tuple(as_partition(lam))
    if not lam:
        return 1
    n_letters = k + l

    @lru_cache(maxsize=None)
    def below(r: int, above: tuple[int, ...] | None) -> int:
        if r == len(lam):
            return 1
        # only the first lam[r+1] entries of a row constrain the next one
        width = lam[r + 1] if r + 1 < len(lam) else 0
        return sum(below(r + 1, row[:width]) for row in _rows_under(above, lam[r], k, n_letters))

    return below(0, None)


def count_ssyt(lam: Sequence[int], k: int) -> int:
    """Number of semistandard tableaux of shape ``lam`` with entries in 1..k.

    Counted by the tableau rules and checked against the hook-content formula.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    counted = count_super_ssyt(lam, k, 0)
    formula = hook_content_count(lam, k)
    if counted != formula:
        raise ArithmeticError(f"s_{k}({list(lam)}): counted {counted}, hook-content gives {formula}")
    return counted


def hook_content_count(lam: Sequence[int], k: int) -> int:
    """Product over cells of (k + content) / hook length."""
    lam = as_partition(lam)
    hooks = hook_lengths(lam)
    value = Fraction(1)
    for r, row in enumerate(lam):
        for c in range(row):
            value *= Fraction(k + c - r, hooks[r][c])
    if value.denominator != 1:
        raise ArithmeticError(f"hook-content product for {list(lam)} is not integral")
    return int(value)

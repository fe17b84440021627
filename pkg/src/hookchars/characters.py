"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule. Border strips are removed via
beta-sets: a strip of length r starting in row i corresponds to sliding the
bead at position b_i down to b_i - r, and its height equals the number of
beads jumped over.
"""

from __future__ import annotations

import csv
import io
import json
import os
import threading
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Sequence

from .limits import check
from .partitions import Partition, as_partition, hook_lengths, partitions_of, z_factor

CACHE_VERSION = 1

# (remaining shape, remaining cycle lengths) -> value. Writes are idempotent,
# so concurrent inserts of the same key are harmless.
_memo: dict[tuple[Partition, tuple[int, ...]], int] = {}


def _beta(lam: Sequence[int]) -> list[int]:
    L = len(lam)
    return [lam[i] + (L - 1 - i) for i in range(L)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    return Partition(p for p in (beta[i] - (L - 1 - i) for i in range(L)) if p > 0)


def remove_border_strips(lam: Sequence[int], r: int) -> list[tuple[Partition, int]]:
    """All ways to strip a border strip of size ``r`` off ``lam``.

    Returns ``(remaining shape, height)`` pairs ordered by the strip's top
    row, top first.
    """
    beta = _beta(lam)
    occupied = set(beta)
    out = []
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        out.append((_from_beta(beta[:idx] + [target] + beta[idx + 1:]), height))
    return out


def _mn(lam: Partition, mu: tuple[int, ...], memo: dict | None) -> int:
    if not mu:
        return 1 if not lam else 0
    if memo is not None:
        key = (lam, mu)
        hit = memo.get(key)
        if hit is not None:
            return hit
    total = 0
    for rest, height in remove_border_strips(lam, mu[0]):
        sub = _mn(rest, mu[1:], memo)
        total += -sub if height % 2 else sub
    if memo is not None:
        memo[key] = total
    return total


def character(lam: Sequence[int], mu: Sequence[int], memo: bool = True) -> int:
    """The value of the irreducible character indexed by ``lam`` on cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{list(lam)}| = {lam.n} but |{list(mu)}| = {mu.n}")
    check("max_n", lam.n, "n")
    # parts in decreasing order: larger strips prune the search first
    return _mn(lam, tuple(mu), _memo if memo else None)


def clear_memo() -> None:
    _memo.clear()


def dimension(lam: Sequence[int]) -> int:
    """Degree of the irreducible representation by the hook-length formula."""
    lam = as_partition(lam)
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    return factorial(lam.n) // hooks


@dataclass(frozen=True)
class ClassSize:
    mu: Partition
    size: int


def class_size(mu: Sequence[int]) -> ClassSize:
    mu = as_partition(mu)
    return ClassSize(mu, factorial(mu.n) // z_factor(mu))


@dataclass
class CharacterTable:
    """Full character table of S_n, rows and columns in canonical partition order."""

    n: int
    lambdas: list[Partition]
    mus: list[Partition]
    values: list[list[int]]
    _row: dict = field(init=False, repr=False, compare=False)
    _col: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._row = {lam: i for i, lam in enumerate(self.lambdas)}
        self._col = {mu: j for j, mu in enumerate(self.mus)}

    def __getitem__(self, key: tuple[Sequence[int], Sequence[int]]) -> int:
        lam, mu = key
        return self.values[self._row[tuple(lam)]][self._col[tuple(mu)]]

    @property
    def entries(self) -> dict[tuple[Partition, Partition], int]:
        return {(lam, mu): self.values[i][j]
                for i, lam in enumerate(self.lambdas) for j, mu in enumerate(self.mus)}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambdas": [list(p) for p in self.lambdas],
            "mus": [list(p) for p in self.mus],
            "values": self.values,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "CharacterTable":
        return cls(
            n=int(data["n"]),
            lambdas=[Partition(p) for p in data["lambdas"]],
            mus=[Partition(p) for p in data["mus"]],
            values=[[int(v) for v in row] for row in data["values"]],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda\\mu"] + [_label(mu) for mu in self.mus])
        for lam, row in zip(self.lambdas, self.values):
            w.writerow([_label(lam)] + row)
        return buf.getvalue()

    def to_plain(self) -> str:
        labels = [_label(mu) for mu in self.mus]
        rows = [[_label(lam)] + [str(v) for v in row] for lam, row in zip(self.lambdas, self.values)]
        header = ["lambda\\mu"] + labels
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
        fmt = lambda r: "  ".join(s.rjust(w) for s, w in zip(r, widths))
        return "\n".join([fmt(header)] + [fmt(r) for r in rows]) + "\n"

    def to_latex(self) -> str:
        cols = "l" + "r" * len(self.mus)
        lines = [f"\\begin{{tabular}}{{{cols}}}", "\\hline",
                 " & ".join(["$\\lambda\\backslash\\mu$"] + [f"$({_label(mu)})$" for mu in self.mus]) + " \\\\",
                 "\\hline"]
        for lam, row in zip(self.lambdas, self.values):
            lines.append(" & ".join([f"$({_label(lam)})$"] + [str(v) for v in row]) + " \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n"


def _label(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def character_table(n: int, cache: "CharacterCache | None" = None, jobs: int = 1) -> CharacterTable:
    check("max_table_n", n, "table n")
    if cache is not None:
        hit = cache.get(n)
        if hit is not None:
            return hit
    parts = partitions_of(n)
    if jobs > 1 and len(parts) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(lambda lam: [character(lam, mu) for mu in parts], parts))
    else:
        values = [[character(lam, mu) for mu in parts] for lam in parts]
    table = CharacterTable(n, list(parts), list(parts), values)
    if cache is not None:
        cache.put(table)
    return table


class CharacterCache:
    """Persistent JSON store of character tables keyed by n.

    File layout::

        {"version": 1, "tables": {"<n>": {"n":..., "lambdas":..., "mus":..., "values":...}}}

    Unknown top-level or per-table keys are ignored on load, so newer writers
    may add fields. A file with a higher version than ours is treated as empty
    and left untouched.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self._tables: dict[int, CharacterTable] = {}
        self._lock = threading.Lock()
        self.readonly = False
        self.load()

    def load(self) -> None:
        if not os.path.exists(self.path):
            return
        with open(self.path) as fh:
            data = json.load(fh)
        if int(data.get("version", 0)) > CACHE_VERSION:
            self.readonly = True
            return
        for key, raw in data.get("tables", {}).items():
            table = CharacterTable.from_dict(raw)
            if table.n == int(key):
                self._tables[table.n] = table

    def get(self, n: int) -> CharacterTable | None:
        return self._tables.get(n)

    def put(self, table: CharacterTable) -> None:
        with self._lock:
            self._tables[table.n] = table

    def save(self) -> None:
        if self.readonly:
            return
        data = {"version": CACHE_VERSION,
                "tables": {str(n): t.to_dict() for n, t in sorted(self._tables.items())}}
        tmp = self.path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, self.path)

    def clear(self) -> None:
        self._tables.clear()
        if os.path.exists(self.path) and not self.readonly:
            os.remove(self.path)

    def __contains__(self, n: int) -> bool:
        return n in self._tables

    def __len__(self) -> int:
        return len(self._tables)

"""Brute-force traces of the signed place-permutation action on (V0 + V1)^{(x)n}.

A basis word is a length-n sequence of letters ``0 .. k+l-1``; letters ``>= k``
span the odd part V1. A permutation ``sigma`` (0-based one-line form, entry
``p`` is the image of ``p``) moves the letter at position ``p`` to position
``sigma[p]``. Every time two odd letters pass each other the result picks up
a factor -1; even letters commute freely.

Only the diagonal of the action matrix is ever needed, so traces are sums
over fixed words; the (k+l)^n x (k+l)^n matrix itself is never built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Sequence

import numpy as np

from .limits import check
from .partitions import as_partition, canonical_permutation

@dataclass(frozen=True)
class SignedWord:
    sign: int
    word: tuple[int, ...]


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for p, q in enumerate(sigma):
        inv[q] = p
    return tuple(inv)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``sigma`` after ``tau``."""
    return tuple(sigma[t] for t in tau)


def _check_perm(sigma: Sequence[int]) -> None:
    if sorted(sigma) != list(range(len(sigma))):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 0..{len(sigma) - 1}")


def apply_permutation(sigma: Sequence[int], word: Sequence[int], k: int, l: int) -> SignedWord:
    """Act by ``sigma`` on a basis word over the alphabet with ``k`` even and ``l`` odd letters.

    The output has ``word[sigma^-1(i)]`` at position ``i``; the sign is -1 to
    the number of odd-odd pairs whose relative order ``sigma`` reverses.
    """
    n = len(word)
    if len(sigma) != n:
        raise ValueError(f"permutation has {len(sigma)} points but word has length {n}")
    _check_perm(sigma)
    if any(not 0 <= a < k + l for a in word):
        raise ValueError(f"word {tuple(word)} is not over alphabet ({k}, {l})")
    out = [0] * n
    for p, a in enumerate(word):
        out[sigma[p]] = a
    odd = [p for p in range(n) if word[p] >= k]
    flips = sum(1 for i, p in enumerate(odd) for q in odd[i + 1:] if sigma[p] > sigma[q])
    return SignedWord(-1 if flips % 2 else 1, tuple(out))


def cycles(sigma: Sequence[int]) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(len(sigma)):
        if start in seen:
            continue
        cyc = []
        p = start
        while p not in seen:
            seen.add(p)
            cyc.append(p)
            p = sigma[p]
        out.append(cyc)
    return out


def fixed_word_sign_by_cycles(sigma: Sequence[int], word: Sequence[int], k: int) -> int:
    """Sign of ``sigma`` on a word it fixes, from cycle lengths alone.

    A fixed word is constant on each cycle; a cycle of length m on an odd
    letter contributes (-1)^(m+1), on an even letter +1.
    """
    sign = 1
    for cyc in cycles(sigma):
        letters = {word[p] for p in cyc}
        if len(letters) != 1:
            raise ValueError("word is not fixed by the permutation")
        if letters.pop() >= k and len(cyc) % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=1)
def _word_columns(n: int, base: int) -> np.ndarray:
    """All base^n words as an (n, base^n) array, column j being word j in lexicographic order."""
    cols = np.empty((n, base**n), dtype=np.int8)
    idx = np.arange(base**n, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        cols[i] = idx % base
        idx //= base
    return cols


def trace_permutation(sigma: Sequence[int], k: int, l: int) -> int:
    """Trace of the action of ``sigma`` by summing over every basis word.

    Each word is tested for being fixed (letter at ``sigma[p]`` equals letter
    at ``p`` for every moved point) and fixed words contribute their sign.
    """
    _check_perm(sigma)
    n = len(sigma)
    base = k + l
    check("max_oracle_words", base**n, "(k+l)^n")
    if n == 0:
        return 1
    if base == 0:
        return 0
    words = _word_columns(n, base)
    fixed = np.ones(words.shape[1], dtype=bool)
    for p in range(n):
        if sigma[p] != p:
            fixed &= words[sigma[p]] == words[p]
    w = words[:, fixed]
    odd = w >= k
    flips = np.zeros(w.shape[1], dtype=np.int64)
    for p in range(n):
        for q in range(p + 1, n):
            if sigma[p] > sigma[q]:
                flips += odd[p] & odd[q]
    return int(w.shape[1] - 2 * np.count_nonzero(flips & 1))


def trace_permutation_naive(sigma: Sequence[int], k: int, l: int) -> int:
    """Same trace, one word at a time through :func:`apply_permutation`."""
    from itertools import product

    n = len(sigma)
    check("max_oracle_words", (k + l) ** n, "(k+l)^n")
    total = 0
    for word in product(range(k + l), repeat=n):
        res = apply_permutation(sigma, word, k, l)
        if res.word == word:
            total += res.sign
    return total


def trace_super(mu: Sequence[int], k: int, l: int) -> int:
    """Character of the graded tensor space at cycle type ``mu``, by brute force."""
    return trace_permutation(canonical_permutation(as_partition(mu)), k, l)


def rhs_product(mu: Sequence[int], k: int, l: int) -> int:
    """Product over the parts m of ``mu`` of k + (-1)^(m+1) l."""
    return prod(k + l if m % 2 else k - l for m in as_partition(mu))

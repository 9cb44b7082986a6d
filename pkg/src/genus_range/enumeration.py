"""Enumeration of canonical double-occurrence words.

A word on 2n letters in ascending-first-occurrence form is the same thing as
a perfect matching of the positions 0..2n-1 (each symbol pairs its two
positions).  We generate all (2n-1)!! matchings as numpy partner arrays in
blocks, compare every matching against the relabeled words of its 4n
rotations/reversals, and keep the matchings that are their own minimum.
Each class has exactly one such representative: its canonical form.

``enumerate_canonical_slow`` is an independent pure-Python route used as a
test oracle for small n.
"""

from __future__ import annotations

import bisect
from functools import lru_cache
from typing import Iterator

import numpy as np
from numba import njit

from .words import Dow, canonicalize, relabel

__all__ = [
    "enumerate_canonical",
    "canonical_words",
    "count_canonical",
    "enumerate_canonical_slow",
]

# rows per vectorized block stay near 13!! = 135135
_BLOCK_PAIRS = 7


@lru_cache(maxsize=None)
def _matchings(k: int) -> np.ndarray:
    """All perfect matchings of 0..2k-1 as an int8 array of partner indices."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int8)
    m = 2 * k
    sub = _matchings(k - 1)
    blocks = []
    for j in range(1, m):
        rest = np.array([p for p in range(1, m) if p != j], dtype=np.int8)
        block = np.empty((sub.shape[0], m), dtype=np.int8)
        block[:, 0] = j
        block[:, j] = 0
        if len(rest):
            block[:, rest] = rest[sub]
        blocks.append(block)
    out = np.concatenate(blocks)
    out.setflags(write=False)
    return out


def _matching_blocks(n: int) -> Iterator[np.ndarray]:
    """Yield all matchings of 0..2n-1 in bounded-size blocks."""
    m = 2 * n

    def rec(prefix, remaining):
        k = len(remaining) // 2
        if k <= _BLOCK_PAIRS:
            base = _matchings(k)
            block = np.empty((base.shape[0], m), dtype=np.int8)
            for a, b in prefix:
                block[:, a] = b
                block[:, b] = a
            if k:
                rem = np.array(remaining, dtype=np.int8)
                block[:, rem] = rem[base]
            yield block
            return
        first = remaining[0]
        for j in remaining[1:]:
            rest = [p for p in remaining[1:] if p != j]
            yield from rec(prefix + [(first, j)], rest)

    yield from rec([], list(range(m)))


@njit(cache=True, nogil=True)
def _canonical_rows(P, n):
    """Mark rows whose ascending word is least among all dihedral images."""
    rows, m = P.shape
    keep = np.zeros(rows, dtype=np.bool_)
    own = np.empty(m, dtype=np.int16)
    lab = np.empty(m, dtype=np.int16)
    for i in range(rows):
        nxt = 0
        for j in range(m):
            if P[i, j] > j:
                nxt += 1
                own[j] = nxt
            else:
                own[j] = own[P[i, j]]
        ok = True
        for t in range(1, 2 * m):
            rev = t >= m
            r = t % m
            nxt = 0
            for j in range(m):
                src = (j + r) % m
                if rev:
                    q = m - 1 - P[i, m - 1 - src]
                else:
                    q = P[i, src]
                q = (q - r) % m
                if q > j:
                    nxt += 1
                    lab[j] = nxt
                else:
                    lab[j] = lab[q]
                if lab[j] != own[j]:
                    if lab[j] < own[j]:
                        ok = False
                    break
            if not ok:
                break
        keep[i] = ok
    return keep


def _keys(P, n):
    m = 2 * n
    idx = np.arange(m)
    first = P > idx
    labels = np.cumsum(first, axis=1)
    word = np.where(first, labels, np.take_along_axis(labels, P.astype(np.intp), axis=1))
    powers = (n + 1) ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return word.astype(np.int64) @ powers


def _decode(key: int, n: int) -> Dow:
    m = 2 * n
    digits = []
    for _ in range(m):
        key, d = divmod(key, n + 1)
        digits.append(d)
    return Dow(tuple(reversed(digits)))


def _encode(w: Dow) -> int:
    key = 0
    for a in w.letters:
        key = key * (w.n + 1) + a
    return key


@lru_cache(maxsize=12)
def _canonical_keys(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    if n > 9:
        raise ValueError("canonical enumeration is limited to n <= 9 (int64 keys)")
    found = [_keys(block[_canonical_rows(block, n)], n) for block in _matching_blocks(n)]
    keys = np.sort(np.concatenate(found))
    keys.setflags(write=False)
    return keys


def count_canonical(n: int) -> int:
    return len(_canonical_keys(n))


def enumerate_canonical(n: int, after: Dow | None = None, stop: Dow | None = None) -> Iterator[Dow]:
    """Yield every equivalence class of n-letter words once, as canonical forms.

    Words come out in increasing lexicographic order.  ``after`` resumes
    strictly after a previously emitted canonical word; ``stop`` ends with the
    given word (inclusive), so consecutive ``(after, stop]`` ranges partition
    the stream.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        if after is None and stop is None:
            yield Dow()
        return
    keys = _canonical_keys(n)
    lo = 0 if after is None else bisect.bisect_right(keys, _encode(after))
    hi = len(keys) if stop is None else bisect.bisect_right(keys, _encode(stop))
    for key in keys[lo:hi]:
        yield _decode(int(key), n)


def canonical_words(n: int) -> list[Dow]:
    return list(enumerate_canonical(n))


def _raw_words(n: int) -> Iterator[tuple[int, ...]]:
    """All ascending-first-occurrence words on n symbols (backtracking)."""
    m = 2 * n
    word = [0] * m

    def rec(pos, opened, used_second):
        if pos == m:
            yield tuple(word)
            return
        # either open a new symbol or close one that is open
        if opened < n:
            word[pos] = opened + 1
            yield from rec(pos + 1, opened + 1, used_second)
        for s in range(1, opened + 1):
            if not used_second >> s & 1:
                word[pos] = s
                yield from rec(pos + 1, opened, used_second | 1 << s)

    yield from rec(0, 0, 0)


def enumerate_canonical_slow(n: int) -> list[Dow]:
    """Pure-Python reference: canonicalize every raw word, dedupe, sort."""
    found = {canonicalize(Dow(relabel(w))).letters for w in _raw_words(n)}
    return [Dow(w) for w in sorted(found)]

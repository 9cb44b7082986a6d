"""Double-occurrence words and the word-level graph operations.

A double-occurrence word (DOW) lists the vertices of a 4-regular rigid-vertex
graph in the order an Eulerian transversal meets them, so every symbol occurs
exactly twice.  Two words describe isomorphic graphs iff they are related by
renaming symbols, cyclic rotation and reversal.

All operations here are pure functions on immutable :class:`Dow` values.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DowError, EmptyToken, NonPositiveSymbol, NotDoubleOccurrence

__all__ = [
    "Dow",
    "parse",
    "relabel",
    "canonicalize",
    "equivalent",
    "is_canonical",
    "is_reducible",
    "is_loop_nested",
    "loop_core",
    "insert_loop",
    "cross_sum",
    "insert_pretzel",
    "insert_vertex",
    "remove_vertex",
]


@dataclass(frozen=True)
class Dow:
    """An immutable double-occurrence word over positive integer symbols."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            if a < 1:
                raise NonPositiveSymbol(f"symbol {a} is not a positive integer")
        bad = sorted(a for a, k in Counter(letters).items() if k != 2)
        if bad:
            raise NotDoubleOccurrence(
                f"symbols must occur exactly twice; offending symbols: {bad}"
            )

    @classmethod
    def of(cls, letters: Iterable[int]) -> Dow:
        return cls(tuple(letters))

    @property
    def n(self) -> int:
        """Number of distinct symbols (vertices of the graph)."""
        return len(self.letters) // 2

    @property
    def symbols(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.letters)))

    def max_symbol(self) -> int:
        return max(self.letters, default=0)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return " ".join(map(str, self.letters))

    def compact(self) -> str:
        """Digit-string form, e.g. ``"1212"``; only valid when all symbols <= 9."""
        if self.max_symbol() > 9:
            raise ValueError("compact form needs every symbol <= 9")
        return "".join(map(str, self.letters))

    def __repr__(self):
        return f"Dow({str(self)!r})"


_TOKEN = re.compile(r"[+-]?\d+")


def parse(text: str) -> Dow:
    """Parse a word from text.

    Accepts whitespace/comma separated decimal tokens (``"1 2 1 2"``,
    ``"1,2,1,2"``) or, when there is no separator at all, a compact string of
    single digits (``"1212"``).  The empty string is the empty word.
    """
    text = text.strip()
    if not text:
        return Dow()
    if re.fullmatch(r"\d+", text):
        return Dow(tuple(int(ch) for ch in text))
    tokens = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            raise EmptyToken(f"empty token in {text!r}")
        tokens.extend(piece.split())
    letters = []
    for tok in tokens:
        if not _TOKEN.fullmatch(tok):
            raise DowError(f"token {tok!r} is not a decimal integer")
        letters.append(int(tok))
    return Dow(tuple(letters))


def relabel(letters: Sequence[int]) -> tuple[int, ...]:
    """Rename symbols so that first occurrences read 1, 2, 3, ..."""
    names: dict[int, int] = {}
    out = []
    for a in letters:
        if a not in names:
            names[a] = len(names) + 1
        out.append(names[a])
    return tuple(out)


def _transforms(letters: tuple[int, ...]):
    m = len(letters)
    for seq in (letters, letters[::-1]):
        for r in range(m):
            yield seq[r:] + seq[:r]


def canonicalize(w: Dow) -> Dow:
    """Lexicographically least relabeled rotation/reversal of ``w``."""
    if not w.letters:
        return w
    return Dow(min(relabel(t) for t in _transforms(w.letters)))


def equivalent(w1: Dow, w2: Dow) -> bool:
    return len(w1) == len(w2) and canonicalize(w1) == canonicalize(w2)


def is_canonical(w: Dow) -> bool:
    return canonicalize(w) == w


def _has_dow_prefix(letters: tuple[int, ...]) -> bool:
    open_ = set()
    for i, a in enumerate(letters[:-1]):
        if a in open_:
            open_.remove(a)
        else:
            open_.add(a)
        if not open_:
            return True
    return False


def is_reducible(w: Dow) -> bool:
    """True iff some equivalent word splits as ``uv`` with u, v non-empty DOWs.

    Reversal and renaming preserve the property, so checking every rotation
    for a proper prefix that is itself a DOW is enough.
    """
    m = len(w)
    return any(_has_dow_prefix(w.letters[r:] + w.letters[:r]) for r in range(m))


def loop_core(w: Dow) -> tuple[int, ...]:
    """Remove cyclically adjacent equal pairs until none remain.

    The result is the word read from some rotation; it is unique up to
    rotation because distinct adjacent pairs never overlap.
    """
    stack: list[int] = []
    for a in w.letters:
        if stack and stack[-1] == a:
            stack.pop()
        else:
            stack.append(a)
    # the linear pass leaves adjacencies only across the wrap point
    lo, hi = 0, len(stack) - 1
    while lo < hi and stack[lo] == stack[hi]:
        lo += 1
        hi -= 1
    return tuple(stack[lo : hi + 1])


def is_loop_nested(w: Dow) -> bool:
    """True iff ``w`` reduces to the empty word by removing loops ``aa``."""
    return not loop_core(w)


def _fresh(w: Dow) -> int:
    return w.max_symbol() + 1


def _check_slot(w: Dow, pos: int, what: str = "position"):
    if not 0 <= pos <= len(w):
        raise IndexError(f"{what} {pos} outside 0..{len(w)}")


def insert_loop(w: Dow, position: int | None = None) -> Dow:
    """Insert a fresh adjacent pair ``aa`` at ``position`` (default: the end)."""
    if position is None:
        position = len(w)
    _check_slot(w, position)
    a = _fresh(w)
    L = w.letters
    return Dow(L[:position] + (a, a) + L[position:])


def _rotate(letters: tuple[int, ...], cut: int) -> tuple[int, ...]:
    if not letters:
        if cut != 0:
            raise IndexError(f"cut {cut} out of range for the empty word")
        return letters
    if not 0 <= cut < len(letters):
        raise IndexError(f"cut {cut} outside 0..{len(letters) - 1}")
    return letters[cut:] + letters[:cut]


def cross_sum(w1: Dow, w2: Dow, cut1: int = 0, cut2: int = 0) -> Dow:
    """Join two graphs through a figure-eight vertex: ``u c v c``.

    ``u`` is ``w1`` rotated to start at ``cut1``; ``v`` is ``w2`` rotated at
    ``cut2`` and shifted above the symbols of ``w1``; ``c`` is fresh.
    """
    u = _rotate(w1.letters, cut1)
    shift = w1.max_symbol()
    v = tuple(a + shift for a in _rotate(w2.letters, cut2))
    c = max(shift, max(v, default=0)) + 1
    return Dow(u + (c,) + v + (c,))


def insert_pretzel(w: Dow, edge_position: int) -> Dow:
    """Insert the block ``a b a b`` (a copy of 1212) at a slot of ``w``."""
    if not w.letters:
        raise ValueError("pretzel insertion needs a non-empty word")
    _check_slot(w, edge_position, "edge position")
    a = _fresh(w)
    L = w.letters
    return Dow(L[:edge_position] + (a, a + 1, a, a + 1) + L[edge_position:])


def insert_vertex(w: Dow, pos1: int, pos2: int) -> Dow:
    """Add a vertex crossing the edges at slots ``pos1`` and ``pos2``.

    Slot p sits between letters p-1 and p; slots 0 and 2n both lie on the
    closing edge.  Equal slots cross an edge with itself (a new loop).
    """
    if pos1 > pos2:
        pos1, pos2 = pos2, pos1
    _check_slot(w, pos1)
    _check_slot(w, pos2)
    s = _fresh(w)
    L = w.letters
    return Dow(L[:pos1] + (s,) + L[pos1:pos2] + (s,) + L[pos2:])


def remove_vertex(w: Dow, s: int) -> Dow:
    if s not in w.letters:
        raise KeyError(f"symbol {s} does not occur in {w}")
    return Dow(tuple(a for a in w.letters if a != s))

"""Ribbon graphs (orientable rigid-vertex embeddings) and genus ranges.

An embedding choice is an integer bitmask with bit i set when the rotation at
vertex i (0-based, vertices ordered by symbol) is reversed.  Every one of the
2^n choices is a cellular embedding in a closed orientable surface; its
boundary components are the orbits of the face permutation

    succ(d) = rotation-next of twin(d) at the vertex of twin(d),

and Euler's formula (n vertices, 2n edges, b faces) gives genus (n - b + 2)/2.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import CapExceeded, TracingError
from .graph import AssemblyGraph

__all__ = [
    "DEFAULT_CAP",
    "GenusRange",
    "BoundaryDecomposition",
    "compare_ranges",
    "trace",
    "face_permutation",
    "genus",
    "genus_from_boundaries",
    "boundary_histogram",
    "genus_range",
    "range_from_histogram",
    "edge_trace_components",
    "construct_multiboundary",
    "flip_vertex",
]

DEFAULT_CAP = 26


@functools.total_ordering
@dataclass(frozen=True)
class GenusRange:
    """The closed interval [min, max] of genera.

    Ranges are ordered by their maximum, then by their minimum.
    """

    min: int
    max: int

    def __post_init__(self):
        if not 0 <= self.min <= self.max:
            raise ValueError(f"not a genus range: [{self.min},{self.max}]")

    def __lt__(self, other):
        if not isinstance(other, GenusRange):
            return NotImplemented
        return (self.max, self.min) < (other.max, other.min)

    def __contains__(self, g):
        return self.min <= g <= self.max

    def __iter__(self):
        return iter(range(self.min, self.max + 1))

    def as_list(self):
        return [self.min, self.max]

    def __str__(self):
        return f"[{self.min},{self.max}]"


def compare_ranges(r1: GenusRange, r2: GenusRange) -> int:
    """-1, 0 or 1 as ``r1`` is before, equal to, or after ``r2``."""
    k1, k2 = (r1.max, r1.min), (r2.max, r2.min)
    return (k1 > k2) - (k1 < k2)


@dataclass(frozen=True)
class BoundaryDecomposition:
    orbit_of: tuple[int, ...]
    b: int

    def components(self):
        comps = [[] for _ in range(self.b)]
        for d, c in enumerate(self.orbit_of):
            comps[c].append(d)
        return comps


def _check_choice(g: AssemblyGraph, choice: int):
    if not 0 <= choice < (1 << g.n):
        raise ValueError(f"choice {choice:#b} does not fit a graph with {g.n} vertices")


def face_permutation(g: AssemblyGraph, choice: int) -> list[int]:
    _check_choice(g, choice)
    succ = []
    for d in range(g.num_darts):
        t = d ^ 1
        flipped = bool(choice >> g.dart_vertex[t] & 1)
        succ.append(g.rotation_next(t, flipped))
    return succ


def trace(g: AssemblyGraph, choice: int = 0) -> BoundaryDecomposition:
    """Boundary components of the ribbon graph selected by ``choice``."""
    if g.is_trivial:
        # a free circle: an annulus with two boundary curves
        _check_choice(g, choice)
        return BoundaryDecomposition(orbit_of=(), b=2)
    succ = face_permutation(g, choice)
    orbit_of = [-1] * len(succ)
    b = 0
    for start in range(len(succ)):
        if orbit_of[start] >= 0:
            continue
        d = start
        while orbit_of[d] < 0:
            orbit_of[d] = b
            d = succ[d]
        if d != start:
            raise TracingError(f"face map is not a permutation for {g.word}, choice {choice:#b}")
        b += 1
    if (b - g.n) % 2:
        raise TracingError(
            f"parity violated: b={b}, n={g.n} for word {g.word} choice {choice:#b}"
        )
    return BoundaryDecomposition(orbit_of=tuple(orbit_of), b=b)


def genus_from_boundaries(n: int, b: int) -> int:
    twice = n - b + 2
    if twice % 2 or twice < 0:
        raise TracingError(f"non-integral genus from n={n}, b={b}")
    return twice // 2


def genus(g: AssemblyGraph, choice: int = 0) -> int:
    return genus_from_boundaries(g.n, trace(g, choice).b)


def flip_vertex(choice: int, v: int, n: int | None = None) -> int:
    """Toggle the connection at vertex ``v`` (1-based, ordered by symbol)."""
    if v < 1 or (n is not None and v > n):
        raise IndexError(f"vertex {v} out of range")
    return choice ^ (1 << (v - 1))


@njit(cache=True, nogil=True)
def _histogram_kernel(fwd, rev, vert, n, lo, hi, early_exit):
    m = fwd.shape[0]
    hist = np.zeros(m + 1, dtype=np.int64)
    succ = np.empty(m, dtype=np.int32)
    seen = np.zeros(m, dtype=np.uint8)
    b_low = 2 - (n % 2)
    b_high = n + 2
    for mask in range(lo, hi):
        for d in range(m):
            t = d ^ 1
            if (mask >> vert[t]) & 1:
                succ[d] = rev[t]
            else:
                succ[d] = fwd[t]
        seen[:] = 0
        b = 0
        for d in range(m):
            if seen[d] == 0:
                b += 1
                x = d
                while seen[x] == 0:
                    seen[x] = 1
                    x = succ[x]
        hist[b] += 1
        if early_exit and hist[b_low] > 0 and hist[b_high] > 0:
            break
    return hist


def _dense_histogram(g: AssemblyGraph, cap: int, early_exit: bool = False, lo=0, hi=None):
    if g.n > cap:
        raise CapExceeded(
            f"exhaustive search over 2^{g.n} embeddings refused (cap n <= {cap})"
        )
    fwd, rev, vert = g.arrays()
    hi = (1 << g.n) if hi is None else hi
    return _histogram_kernel(fwd, rev, vert, g.n, lo, hi, early_exit)


def boundary_histogram(g: AssemblyGraph, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Number of embedding choices giving each boundary count b."""
    if g.is_trivial:
        return {2: 1}
    hist = _dense_histogram(g, cap)
    out = {b: int(k) for b, k in enumerate(hist) if k}
    for b in out:
        if b > g.n + 2 or (b - g.n) % 2:
            raise TracingError(f"impossible boundary count b={b}, n={g.n} for word {g.word}")
    if sum(out.values()) != 1 << g.n:
        raise TracingError(f"histogram for {g.word} does not cover all choices")
    return out


def range_from_histogram(n: int, hist: dict[int, int], check_consecutive=True) -> GenusRange:
    genera = sorted({genus_from_boundaries(n, b) for b in hist})
    r = GenusRange(genera[0], genera[-1])
    if check_consecutive and genera != list(range(r.min, r.max + 1)):
        raise TracingError(f"achieved genera {genera} are not consecutive")
    return r


def genus_range(
    g: AssemblyGraph, cap: int = DEFAULT_CAP, verify_consecutive: bool = True
) -> GenusRange:
    """Exact genus range by enumerating all 2^n embedding choices.

    With ``verify_consecutive=False`` the search may stop as soon as both
    extreme boundary counts (the full range [0, ceil(n/2)]) have been seen.
    """
    if g.is_trivial:
        return GenusRange(0, 0)
    if verify_consecutive:
        return range_from_histogram(g.n, boundary_histogram(g, cap))
    hist = _dense_histogram(g, cap, early_exit=True)
    return range_from_histogram(g.n, {b: int(k) for b, k in enumerate(hist) if k}, False)


def edge_trace_components(g: AssemblyGraph, choice: int, e: int) -> frozenset[int]:
    """Ids of the boundary components running along edge ``e`` (1-based)."""
    if not 1 <= e <= g.num_edges:
        raise IndexError(f"edge {e} outside 1..{g.num_edges}")
    dec = trace(g, choice)
    d0, d1 = g.edge_darts(e)
    return frozenset((dec.orbit_of[d0], dec.orbit_of[d1]))


def construct_multiboundary(g: AssemblyGraph) -> int:
    """A choice with at least two boundary components, built directly.

    Odd-numbered edges form a 2-regular subgraph, and at every vertex its two
    odd edge-ends are rotation neighbours.  Walking one cycle of that subgraph
    and fixing each vertex's connection so the face keeps turning onto the
    next odd edge yields a face that closes on odd edges only; the even edges
    then need another face.
    """
    if g.is_trivial:
        raise ValueError("the trivial graph has no vertices to connect")
    odd = lambda d: (g.edge_of(d) % 2) == 1  # noqa: E731
    choice = 0
    v1 = 0
    a, b = [d for d in g.rotation[v1] if odd(d)]
    # orient the start so the face arriving at v1 on one odd end leaves on the other
    start = b if g.rotation_next(a) == b else a
    fixed = {v1}
    d = start
    while True:
        t = d ^ 1
        v = g.dart_vertex[t]
        if v in fixed:
            break
        fixed.add(v)
        if not odd(g.rotation_next(t)):
            choice |= 1 << v
        d = g.rotation_next(t, bool(choice >> v & 1))
    dec = trace(g, choice)
    if dec.b < 2:
        raise TracingError(f"odd-cycle construction failed on {g.word}")
    return choice

"""Named graph families and constructive realization of genus ranges."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotKnownRealizable, TracingError, UnrealizableByTheorem
from .graph import build
from .ribbon import DEFAULT_CAP, GenusRange, edge_trace_components, genus, genus_range
from .words import Dow, cross_sum, insert_loop, insert_pretzel, parse

__all__ = [
    "PRETZEL",
    "GAMMA_HAT",
    "FULL_RANGE_WITNESSES",
    "PsiRecord",
    "tangled_cord",
    "tangled_cord_range",
    "repeat_word",
    "gamma_chain",
    "gamma_hat",
    "phi",
    "psi",
    "realize_singleton",
    "realize_range",
    "FAMILIES",
]

PRETZEL = parse("1212")
# the unique 6-vertex graph with genus range [3, 3]
GAMMA_HAT = parse("123245153646")

# graphs on 2n vertices with genus range [0, n]
FULL_RANGE_WITNESSES = {
    4: parse("12314324"),
    6: parse("123451256346"),
    # least canonical word with range [0, 4] found by the n=8 survey
    8: parse("1231432456758768"),
}


def tangled_cord(n: int) -> Dow:
    """T_n = 1 2 1 3 2 4 3 ... (n-1)(n-2) n (n-1) n; T_1 = 11."""
    if n < 1:
        raise ValueError("tangled cord needs n >= 1")
    letters = [1, 1]
    for k in range(2, n + 1):
        # replace the final letter k-1 by k (k-1) k
        letters[-1:] = [k, k - 1, k]
    return Dow(tuple(letters))


def tangled_cord_range(n: int) -> GenusRange:
    """Closed form of gr(T_n); proved for n >= 3."""
    if n < 2:
        raise ValueError("formula applies to n >= 2")
    if n % 2 == 0:
        return GenusRange((n - 2) // 2, n // 2)
    return GenusRange((n - 1) // 2, (n + 1) // 2)


def repeat_word(n: int) -> Dow:
    """The word 1 2 ... n 1 2 ... n for odd n (genus range [0, 1])."""
    if n < 1 or n % 2 == 0:
        raise ValueError("repeat words are defined here for odd n only")
    return Dow(tuple(range(1, n + 1)) * 2)


def _chain(blocks: list[Dow]) -> Dow:
    if not blocks:
        return Dow()
    out = blocks[0]
    for blk in blocks[1:]:
        out = cross_sum(out, blk, 0, 0)
    return out


def gamma_chain(m: int) -> Dow:
    """Cross sum of m copies of 1212: 3m-1 vertices, genus range [m, m]."""
    if m < 1:
        raise ValueError("gamma_chain needs m >= 1")
    return _chain([PRETZEL] * m)


def gamma_hat() -> Dow:
    return GAMMA_HAT


def phi(k: int, l: int) -> int:
    """Vertices of a cross-sum chain of k copies of GAMMA_HAT and l pretzels."""
    return 7 * k + 3 * l - 1


@dataclass(frozen=True)
class PsiRecord:
    n: int
    K: int
    L: int
    psi: int


def psi(n: int) -> PsiRecord:
    """Largest h for which the chain construction gives [h, h] on <= n vertices."""
    if n < 1:
        raise ValueError("psi is defined for n >= 1")
    K = (n + 1) // 7
    L = (n + 1 - 7 * K) // 3
    return PsiRecord(n=n, K=K, L=L, psi=3 * K + L)


def _pad(w: Dow, vertices: int) -> Dow:
    while w.n < vertices:
        w = insert_loop(w, 0)
    return w


def _verified(w: Dow, expected: GenusRange, cap: int) -> Dow:
    if w.n <= cap:
        got = genus_range(build(w), cap=cap)
        if got != expected:
            raise TracingError(f"construction produced {got}, expected {expected}: {w}")
    return w


def _max_genus(vertices: int) -> int:
    return (vertices + 1) // 2


def _check_odd_exclusions(a: int, b: int, vertices: int):
    top = _max_genus(vertices)
    if b > top:
        raise UnrealizableByTheorem(
            f"genus {b} exceeds the maximum {top} possible on {vertices} vertices "
            "(a ribbon graph has at least one boundary component)",
            "above-max-genus",
        )
    if vertices % 2 == 1 and (a, b) == (0, top):
        raise UnrealizableByTheorem(
            f"no graph on {vertices} = 2n-1 vertices has genus range [0,{top}]: "
            "a graph with genus 0 is planar, so every ribbon graph has two distinct "
            "boundary components on each edge and genus n is out of reach",
            "full-range-odd",
        )
    if vertices % 2 == 1 and a == b == top:
        raise UnrealizableByTheorem(
            f"no graph on {vertices} = 2n-1 vertices has genus range [{top},{top}]: "
            "every graph has a ribbon graph with at least two boundary components",
            "top-singleton-odd",
        )


def realize_singleton(h: int, n: int, cap: int = DEFAULT_CAP) -> Dow:
    """A word on exactly n vertices with genus range [h, h].

    Chains copies of GAMMA_HAT (genus 3) and 1212 (genus 1) by cross sums and
    pads with loops.
    """
    if h < 0 or n < 0:
        raise ValueError("h and n must be non-negative")
    if n == 0:
        if h:
            raise UnrealizableByTheorem("the trivial graph has genus 0", "above-max-genus")
        return Dow()
    _check_odd_exclusions(h, h, n)
    rec = psi(n)
    if h > rec.psi:
        raise NotKnownRealizable(
            f"[{h},{h}] on {n} vertices: no construction known beyond h <= psi_{n} = {rec.psi}"
        )
    K = min(h // 3, rec.K)
    L = h - 3 * K
    word = _chain([GAMMA_HAT] * K + [PRETZEL] * L)
    return _verified(_pad(word, n), GenusRange(h, h), cap)


def _lift(w: Dow) -> Dow:
    """Insert a pretzel so the top genus rises by one and the bottom stays.

    An embedding whose boundary runs along the chosen edge with a single
    component keeps its genus after the insertion; every other embedding
    gains one.  So the edge must be single-traced in some embedding of
    minimum genus, not merely in some embedding.
    """
    g = build(w)
    genera = [genus(g, c) for c in range(1 << g.n)]
    low = min(genera)
    minimal = [c for c, x in enumerate(genera) if x == low]
    for slot in range(len(w)):
        e = slot if slot else g.num_edges
        if any(len(edge_trace_components(g, c, e)) == 1 for c in minimal):
            return insert_pretzel(w, slot)
    raise NotKnownRealizable(
        f"no edge of {w} is single-traced in a minimum-genus embedding"
    )


def _realize(a: int, b: int, vertices: int, cap: int) -> Dow:
    _check_odd_exclusions(a, b, vertices)
    top = _max_genus(vertices)
    if a == b:
        return realize_singleton(a, vertices, cap)
    if vertices % 2 == 0:
        # 2n and 2n-1 vertices share the same genus bound n
        if (a, b) != (0, top):
            return _pad(_realize(a, b, vertices - 1, cap), vertices)
        if vertices in FULL_RANGE_WITNESSES:
            return FULL_RANGE_WITNESSES[vertices]
        if vertices == 2:
            raise UnrealizableByTheorem(
                "no graph on 2 vertices has genus range [0,1] (both 2-vertex graphs checked)",
                "exhaustive",
            )
        raise NotKnownRealizable(f"no built-in witness for [0,{top}] on {vertices} vertices")
    if (a, b) == (0, 1):
        return _pad(repeat_word(3), vertices)
    if b < top:
        return _pad(_realize(a, b, vertices - 1, cap), vertices)
    if a == top - 1:
        return tangled_cord(vertices)
    return _lift(_realize(a, b - 1, vertices - 2, cap))


def realize_range(a: int, b: int, vertices: int, cap: int = DEFAULT_CAP) -> Dow:
    """A word on exactly ``vertices`` vertices with genus range [a, b].

    Raises UnrealizableByTheorem for provably absent ranges and
    NotKnownRealizable outside the constructible family.
    """
    if not 0 <= a <= b:
        raise ValueError(f"[{a},{b}] is not a genus range")
    if vertices < 1:
        raise ValueError("vertices must be >= 1")
    w = _realize(a, b, vertices, cap)
    if w.n != vertices:
        raise TracingError(f"construction has {w.n} vertices, expected {vertices}")
    return _verified(w, GenusRange(a, b), cap)


FAMILIES = {
    "tangled-cord": tangled_cord,
    "repeat": repeat_word,
    "gamma-chain": gamma_chain,
    "gamma-hat": gamma_hat,
}

"""Exhaustive and randomized checks of the structural facts about genus ranges.

Each check returns a :class:`CheckResult`; ``run_all`` drives the ``verify``
subcommand.  Sizes are kept small enough that the whole suite runs in seconds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .enumeration import canonical_words
from .families import tangled_cord, tangled_cord_range
from .graph import build
from .ribbon import (
    GenusRange,
    boundary_histogram,
    construct_multiboundary,
    edge_trace_components,
    flip_vertex,
    genus_from_boundaries,
    genus_range,
    trace,
)
from .words import cross_sum, insert_loop, insert_vertex, is_loop_nested

__all__ = ["CheckResult", "CHECKS", "run_all"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" - {self.detail}" if self.detail else ""
        return f"{status} {self.name} ({self.cases} cases, {self.seconds:.2f}s){extra}"


def _words(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from canonical_words(n)


def check_consecutive(max_n: int = 6) -> CheckResult:
    cases = 0
    for w in _words(1, max_n):
        g = build(w)
        genera = sorted({genus_from_boundaries(g.n, b) for b in boundary_histogram(g)})
        cases += 1
        if genera != list(range(genera[0], genera[-1] + 1)):
            return CheckResult("consecutive genus range", False, cases, f"{w}: {genera}")
    return CheckResult("consecutive genus range", True, cases)


def check_parity(max_n: int = 6) -> CheckResult:
    cases = 0
    for w in _words(1, max_n):
        hist = boundary_histogram(build(w))
        cases += sum(hist.values())
        bad = [b for b in hist if (b - w.n) % 2]
        if bad:
            return CheckResult("boundary parity b = n mod 2", False, cases, f"{w}: b={bad}")
    return CheckResult("boundary parity b = n mod 2", True, cases)


def check_single_flip(max_n: int = 5) -> CheckResult:
    cases = 0
    for w in _words(1, max_n):
        g = build(w)
        counts = [trace(g, c).b for c in range(1 << g.n)]
        for c in range(1 << g.n):
            for v in range(1, g.n + 1):
                cases += 1
                if abs(counts[flip_vertex(c, v)] - counts[c]) not in (0, 2):
                    return CheckResult("single flip changes b by 0 or 2", False, cases, f"{w} c={c} v={v}")
    return CheckResult("single flip changes b by 0 or 2", True, cases)


def check_loop_invariance(max_n: int = 5) -> CheckResult:
    cases = 0
    for w in _words(0, max_n):
        base = genus_range(build(w))
        for p in range(len(w) + 1):
            cases += 1
            got = genus_range(build(insert_loop(w, p)))
            if got != base:
                return CheckResult("adding a loop keeps the range", False, cases, f"{w} at {p}: {got} != {base}")
    return CheckResult("adding a loop keeps the range", True, cases)


def check_cross_sum(max_n: int = 3) -> CheckResult:
    words = list(_words(0, max_n))
    ranges = {w: genus_range(build(w)) for w in words}
    cases = 0
    for w1 in words:
        for w2 in words:
            r1, r2 = ranges[w1], ranges[w2]
            want = GenusRange(r1.min + r2.min, r1.max + r2.max)
            for c1 in range(max(len(w1), 1)):
                for c2 in range(max(len(w2), 1)):
                    cases += 1
                    got = genus_range(build(cross_sum(w1, w2, c1, c2)))
                    if got != want:
                        return CheckResult(
                            "cross sum adds ranges", False, cases, f"{w1} + {w2} cuts {c1},{c2}: {got}"
                        )
    return CheckResult("cross sum adds ranges", True, cases)


def check_planar_edges(max_n: int = 5) -> CheckResult:
    cases = 0
    for w in _words(1, max_n):
        g = build(w)
        if genus_range(g).min != 0:
            continue
        for c in range(1 << g.n):
            dec = trace(g, c)
            for e in range(1, g.num_edges + 1):
                cases += 1
                d0, d1 = g.edge_darts(e)
                if dec.orbit_of[d0] == dec.orbit_of[d1]:
                    return CheckResult("planar graphs: two faces on every edge", False, cases, f"{w} c={c} e={e}")
    return CheckResult("planar graphs: two faces on every edge", True, cases)


def check_odd_exclusions(max_vertices: int = 7) -> CheckResult:
    cases = 0
    for m in range(1, max_vertices + 1, 2):
        top = (m + 1) // 2
        for w in canonical_words(m):
            cases += 1
            r = genus_range(build(w))
            if r in (GenusRange(0, top), GenusRange(top, top)):
                return CheckResult("no [0,n] or [n,n] on 2n-1 vertices", False, cases, f"{w}: {r}")
    return CheckResult("no [0,n] or [n,n] on 2n-1 vertices", True, cases)


_ALLOWED = {1: (1, 3), 2: (1, -1), 3: (-1,), 4: (-3,)}


def check_vertex_addition(trials: int = 10_000, max_n: int = 5, seed: int = 20140101) -> CheckResult:
    """Boundary count after crossing two distinct edges with a new vertex.

    Let k be the number of distinct components along the two edges.  The new
    count b' minus b must lie in {1,3}, {1,-1}, {-1}, {-3} for k = 1..4.
    """
    rng = random.Random(seed)
    pool = list(_words(1, max_n))
    built = {}
    for t in range(trials):
        w = rng.choice(pool)
        g = built.setdefault(w, build(w))
        m = len(w)
        while True:
            p, q = sorted(rng.sample(range(m + 1), 2))
            ep, eq = (p or m), (q or m)
            if ep != eq:
                break
        c = rng.randrange(1 << g.n)
        dec = trace(g, c)
        k = len(edge_trace_components(g, c, ep) | edge_trace_components(g, c, eq))
        g2 = build(insert_vertex(w, p, q))
        for bit in (0, 1):
            diff = trace(g2, c | bit << g.n).b - dec.b
            if diff not in _ALLOWED[k]:
                return CheckResult(
                    "vertex addition boundary cases", False, t + 1,
                    f"{w} slots {p},{q} c={c} bit={bit}: k={k}, b'-b={diff}",
                )
    return CheckResult("vertex addition boundary cases", True, trials)


def check_loop_nested(max_n: int = 6) -> CheckResult:
    cases = 0
    for w in _words(1, max_n):
        cases += 1
        if is_loop_nested(w) != (genus_range(build(w)) == GenusRange(0, 0)):
            return CheckResult("loop-nested iff range [0,0]", False, cases, str(w))
    return CheckResult("loop-nested iff range [0,0]", True, cases)


def check_multiboundary(max_n: int = 6) -> CheckResult:
    cases = 0
    for w in _words(1, max_n):
        cases += 1
        g = build(w)
        if trace(g, construct_multiboundary(g)).b < 2:
            return CheckResult("odd-cycle construction gives b >= 2", False, cases, str(w))
    return CheckResult("odd-cycle construction gives b >= 2", True, cases)


def check_tangled_cord(max_n: int = 12) -> CheckResult:
    cases = 0
    for n in range(3, max_n + 1):
        g = build(tangled_cord(n))
        hist = boundary_histogram(g)
        allowed = {1, 3} if n % 2 else {2, 4}
        cases += 1
        if not set(hist) <= allowed or genus_range(g) != tangled_cord_range(n):
            return CheckResult("tangled cord range and spectrum", False, cases, f"n={n}: {hist}")
    return CheckResult("tangled cord range and spectrum", True, cases)


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "consecutive": check_consecutive,
    "parity": check_parity,
    "single-flip": check_single_flip,
    "loop": check_loop_invariance,
    "cross-sum": check_cross_sum,
    "planar-edges": check_planar_edges,
    "odd-exclusions": check_odd_exclusions,
    "vertex-addition": check_vertex_addition,
    "loop-nested": check_loop_nested,
    "multiboundary": check_multiboundary,
    "tangled-cord": check_tangled_cord,
}


# checks whose cost explodes with n are never run beyond these sizes
_HEAVY = {"cross-sum": 3, "vertex-addition": 5, "single-flip": 6}


def run_all(max_n: int | None = None) -> list[CheckResult]:
    """Run every check; ``max_n`` caps the word sizes of the exhaustive ones."""
    results = []
    for key, fn in CHECKS.items():
        t0 = time.perf_counter()
        if max_n is None or key == "tangled-cord":
            res = fn()
        elif key == "odd-exclusions":
            res = fn(max_vertices=max_n)
        elif key in _HEAVY:
            res = fn(max_n=min(max_n, _HEAVY[key]))
        else:
            res = fn(max_n=max_n)
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results

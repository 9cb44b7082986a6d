"""Rigid-vertex assembly graphs as dart (half-edge) structures.

For a word of length 2n the edges e_1..e_2n follow the transversal: e_i runs
from the letter at (0-based) position i-1 to the letter at position i, with
e_2n closing the cycle.  Edge e_i owns darts 2(i-1) (its tail end) and
2(i-1)+1 (its head end), so ``twin(d) == d ^ 1``.

Each vertex keeps its four darts in the cyclic order (in1, in2, out1, out2),
where in/out refer to the first and second visit of the transversal.  The
transversal therefore always leaves through the slot opposite to the one it
entered.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .words import Dow

__all__ = ["AssemblyGraph", "build", "transversal_readback"]


@dataclass(frozen=True)
class AssemblyGraph:
    word: Dow
    vertex_ids: tuple[int, ...]
    rotation: tuple[tuple[int, int, int, int], ...]
    dart_vertex: tuple[int, ...]
    dart_slot: tuple[int, ...]
    _arrays: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    @property
    def num_edges(self) -> int:
        return 2 * self.n

    @property
    def num_darts(self) -> int:
        return 4 * self.n

    @property
    def is_trivial(self) -> bool:
        return self.n == 0

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    @staticmethod
    def edge_of(d: int) -> int:
        """1-based transversal index of the edge owning dart ``d``."""
        return d // 2 + 1

    @staticmethod
    def edge_darts(e: int) -> tuple[int, int]:
        return 2 * (e - 1), 2 * (e - 1) + 1

    def vertex_index(self, symbol: int) -> int:
        """0-based index of the vertex labeled ``symbol`` (bit position in choices)."""
        try:
            return self.vertex_ids.index(symbol)
        except ValueError:
            raise KeyError(f"no vertex {symbol}") from None

    def rotation_next(self, d: int, reversed_: bool = False) -> int:
        rot = self.rotation[self.dart_vertex[d]]
        step = -1 if reversed_ else 1
        return rot[(self.dart_slot[d] + step) % 4]

    def arrays(self):
        """(forward-next, reversed-next, dart-vertex) as int32 numpy arrays."""
        if not self._arrays:
            fwd = [self.rotation_next(d) for d in range(self.num_darts)]
            rev = [self.rotation_next(d, True) for d in range(self.num_darts)]
            self._arrays["fwd"] = np.array(fwd, dtype=np.int32)
            self._arrays["rev"] = np.array(rev, dtype=np.int32)
            self._arrays["vert"] = np.array(self.dart_vertex, dtype=np.int32)
        a = self._arrays
        return a["fwd"], a["rev"], a["vert"]

    def incidence(self, symbol: int) -> tuple[int, ...]:
        """Edge indices around vertex ``symbol`` in rotation order."""
        return tuple(self.edge_of(d) for d in self.rotation[self.vertex_index(symbol)])

    def dump(self) -> str:
        lines = []
        for v in self.vertex_ids:
            edges = ", ".join(f"e{e}" for e in self.incidence(v))
            lines.append(f"v{v}: {edges}")
        return "\n".join(lines)


def build(w: Dow) -> AssemblyGraph:
    """Build the rigid-vertex graph read off a word.

    The empty word gives the trivial graph (no vertices, a free circle).
    """
    L = w.letters
    m = len(L)
    vertex_ids = w.symbols
    index = {s: i for i, s in enumerate(vertex_ids)}
    visits: dict[int, list[int]] = {s: [] for s in vertex_ids}
    for pos, s in enumerate(L):
        visits[s].append(pos)

    rotation = []
    dart_vertex = [0] * (2 * m)
    dart_slot = [0] * (2 * m)
    for s in vertex_ids:
        p, q = visits[s]
        in1 = 2 * ((p - 1) % m) + 1
        in2 = 2 * ((q - 1) % m) + 1
        out1 = 2 * p
        out2 = 2 * q
        rot = (in1, in2, out1, out2)
        rotation.append(rot)
        for slot, d in enumerate(rot):
            dart_vertex[d] = index[s]
            dart_slot[d] = slot
    return AssemblyGraph(
        word=w,
        vertex_ids=vertex_ids,
        rotation=tuple(rotation),
        dart_vertex=tuple(dart_vertex),
        dart_slot=tuple(dart_slot),
    )


def transversal_readback(g: AssemblyGraph) -> Dow:
    """Walk the graph straight through every vertex and record the vertices.

    Uses only the rotations and the twin involution, never the source word.
    """
    if g.is_trivial:
        return Dow()
    out = []
    d = 0
    for _ in range(g.num_edges):
        head = g.twin(d)
        v = g.dart_vertex[head]
        out.append(g.vertex_ids[v])
        d = g.rotation[v][(g.dart_slot[head] + 2) % 4]
    # the walk starts on e_1, so the first vertex recorded is the head of e_1
    return Dow(tuple(out[-1:] + out[:-1]))

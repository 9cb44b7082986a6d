import pytest

from genus_range.enumeration import canonical_words
from genus_range.families import tangled_cord
from genus_range.graph import AssemblyGraph, build, transversal_readback
from genus_range.words import Dow, equivalent, parse


def _cyclic_equal(a, b):
    """Equal as cyclic sequences up to rotation and reversal."""
    a, b = list(a), list(b)
    for seq in (b, b[::-1]):
        for r in range(len(seq)):
            if seq[r:] + seq[:r] == a:
                return True
    return False


def test_pretzel_shape():
    g = build(parse("1212"))
    assert g.n == 2 and g.num_edges == 4 and g.num_darts == 8
    for v in range(g.n):
        edges = [AssemblyGraph.edge_of(d) for d in g.rotation[v]]
        assert len(set(edges)) == 4


def test_figure_eight_loops():
    g = build(parse("11"))
    assert g.n == 1 and g.num_edges == 2
    edges = [AssemblyGraph.edge_of(d) for d in g.rotation[0]]
    # each loop edge occupies two rotation slots that are neighbours
    for e in (1, 2):
        i, j = [k for k, x in enumerate(edges) if x == e]
        assert (j - i) % 4 in (1, 3)


def test_trivial():
    g = build(Dow())
    assert g.is_trivial and g.n == 0


@pytest.mark.parametrize("n", range(3, 8))
def test_tangled_cord_first_vertex(n):
    g = build(tangled_cord(n))
    assert _cyclic_equal(g.incidence(1), (1, 3, 2 * n, 2))


def test_dump_format():
    text = build(parse("121323")).dump()
    lines = text.splitlines()
    assert len(lines) == 3 and lines[0].startswith("v1: e")


def test_twin_and_rotation_invariants():
    for w in canonical_words(4):
        g = build(w)
        darts = sorted(d for rot in g.rotation for d in rot)
        assert darts == list(range(g.num_darts))
        for d in range(g.num_darts):
            t = AssemblyGraph.twin(d)
            assert t != d and AssemblyGraph.twin(t) == d
        for v, rot in enumerate(g.rotation):
            in1, in2, out1, out2 = rot
            # straight passage: each visit enters and leaves through opposite slots
            assert AssemblyGraph.edge_of(out1) == AssemblyGraph.edge_of(in1) % g.num_edges + 1
            assert AssemblyGraph.edge_of(out2) == AssemblyGraph.edge_of(in2) % g.num_edges + 1


@pytest.mark.parametrize("n", range(1, 6))
def test_readback_round_trip(n):
    for w in canonical_words(n):
        assert equivalent(transversal_readback(build(w)), w)


def test_readback_examples():
    for text in ("121323", "12314324"):
        w = parse(text)
        assert equivalent(transversal_readback(build(w)), w)

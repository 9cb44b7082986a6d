import pytest

from genus_range.errors import NotKnownRealizable, UnrealizableByTheorem
from genus_range.families import (
    FULL_RANGE_WITNESSES,
    GAMMA_HAT,
    gamma_chain,
    phi,
    psi,
    realize_range,
    realize_singleton,
    repeat_word,
    tangled_cord,
    tangled_cord_range,
)
from genus_range.graph import build
from genus_range.ribbon import GenusRange, boundary_histogram, genus_range
from genus_range.words import cross_sum, insert_pretzel, parse, remove_vertex
from oracles import brute_range

# K, L and psi for n = 1..22
PSI_TABLE = [
    (0, 0, 0), (0, 1, 1), (0, 1, 1), (0, 1, 1), (0, 2, 2), (1, 0, 3), (1, 0, 3), (1, 0, 3),
    (1, 1, 4), (1, 1, 4), (1, 1, 4), (1, 2, 5), (2, 0, 6), (2, 0, 6), (2, 0, 6), (2, 1, 7),
    (2, 1, 7), (2, 1, 7), (2, 2, 8), (3, 0, 9), (3, 0, 9), (3, 0, 9),
]


def gr(w):
    return genus_range(build(w))


class TestTangledCord:
    def test_small_words(self):
        assert tangled_cord(1) == parse("11")
        assert tangled_cord(2) == parse("1212")
        assert tangled_cord(3) == parse("121323")
        assert tangled_cord(4) == parse("12132434")

    @pytest.mark.parametrize("n", range(2, 12))
    def test_recurrence(self, n):
        assert remove_vertex(tangled_cord(n + 1), n + 1) == tangled_cord(n)

    @pytest.mark.parametrize("n", range(3, 11))
    def test_range_formula(self, n):
        assert gr(tangled_cord(n)) == tangled_cord_range(n)

    def test_n2_disagrees_with_formula(self):
        # the closed form is only claimed for n >= 3
        assert gr(tangled_cord(2)) == GenusRange(1, 1) != tangled_cord_range(2)

    def test_invalid(self):
        with pytest.raises(ValueError):
            tangled_cord(0)


class TestRepeat:
    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_range(self, n):
        assert gr(repeat_word(n)) == GenusRange(0, 1)

    def test_even_rejected(self):
        with pytest.raises(ValueError):
            repeat_word(4)


class TestGammaChains:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_chain(self, m):
        w = gamma_chain(m)
        assert w.n == 3 * m - 1 and gr(w) == GenusRange(m, m)

    def test_gamma_hat(self):
        assert gr(GAMMA_HAT) == GenusRange(3, 3)

    def test_cut_independence(self):
        w1, w2 = parse("1212"), parse("121323")
        want = {gr(cross_sum(w1, w2, 0, 0))}
        got = {gr(cross_sum(w1, w2, a, b)) for a in range(4) for b in range(6)}
        assert got == want == {GenusRange(2, 3)}


class TestPsi:
    def test_table(self):
        assert [(r.K, r.L, r.psi) for r in (psi(n) for n in range(1, 23))] == PSI_TABLE

    def test_hundred(self):
        r = psi(100)
        assert (r.K, r.L, r.psi) == (14, 1, 43)

    def test_definition_by_search(self):
        for n in range(1, 200):
            K = max(k for k in range(n + 1) if phi(k, 0) <= n)
            L = max(l for l in range(n + 2) if phi(K, l) <= n)
            assert psi(n).psi == 3 * K + L

    def test_monotone(self):
        vals = [psi(n).psi for n in range(1, 300)]
        assert vals == sorted(vals)


class TestPretzelLift:
    def test_pretzel_on_pretzel(self):
        # 1212 has minimum-genus embeddings with a single face on e_4, so the bottom stays
        w = insert_pretzel(parse("1212"), 0)
        assert w == parse("34341212")
        assert brute_range(w.letters) == (1, 2)
        assert gr(w) == GenusRange(1, 2)

    def test_planar_words_gain_one(self):
        for text in ("1122", "112233", "122331"):
            w = parse(text)
            for slot in range(len(w)):
                r = gr(insert_pretzel(w, slot))
                assert r == GenusRange(1, 1)

    def test_naive_lift_can_raise_bottom(self):
        # a pretzel on the last edge of 121323 raises both ends
        assert gr(insert_pretzel(parse("121323"), 0)) == GenusRange(2, 3)


class TestRealize:
    def test_examples(self):
        assert gr(realize_range(0, 2, 8)) == GenusRange(0, 2)
        assert gr(realize_range(1, 3, 7)) == GenusRange(1, 3)

    @pytest.mark.parametrize("v", [4, 6, 8])
    def test_full_range_witnesses(self, v):
        assert gr(FULL_RANGE_WITNESSES[v]) == GenusRange(0, v // 2)

    @pytest.mark.parametrize(
        "a,b,v,reason",
        [
            (0, 4, 7, "full-range-odd"),
            (0, 2, 3, "full-range-odd"),
            (4, 4, 7, "top-singleton-odd"),
            (2, 2, 3, "top-singleton-odd"),
            (0, 5, 8, "above-max-genus"),
            (0, 1, 2, "exhaustive"),
        ],
    )
    def test_refusals(self, a, b, v, reason):
        with pytest.raises(UnrealizableByTheorem) as info:
            realize_range(a, b, v)
        assert info.value.reason == reason

    def test_unknown(self):
        with pytest.raises(NotKnownRealizable):
            realize_range(0, 5, 10)
        with pytest.raises(NotKnownRealizable):
            realize_singleton(5, 10)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            realize_range(2, 1, 5)
        with pytest.raises(ValueError):
            realize_range(0, 0, 0)

    @pytest.mark.parametrize("h,n", [(0, 1), (1, 2), (2, 5), (3, 6), (3, 8), (4, 9)])
    def test_singletons(self, h, n):
        w = realize_singleton(h, n)
        assert w.n == n and gr(w) == GenusRange(h, h)

    def test_tangled_spectrum_odd(self):
        assert set(boundary_histogram(build(tangled_cord(5)))) <= {1, 3}

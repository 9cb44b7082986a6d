import pytest

from genus_range.errors import EmptyToken, NonPositiveSymbol, NotDoubleOccurrence, DowError
from genus_range.words import (
    Dow,
    canonicalize,
    cross_sum,
    equivalent,
    insert_loop,
    insert_pretzel,
    insert_vertex,
    is_canonical,
    is_loop_nested,
    is_reducible,
    parse,
    remove_vertex,
)
from oracles import brute_canonical, letters


def W(text):
    return parse(text)


class TestParse:
    def test_compact(self):
        assert W("1212").letters == (1, 2, 1, 2)

    def test_empty(self):
        assert len(W("")) == 0 and W("").n == 0

    def test_spaces_and_commas(self):
        assert W("10 3, 3 10").letters == (10, 3, 3, 10)

    def test_symbols_preserved(self):
        assert W("7 9 7 9").letters == (7, 9, 7, 9)

    def test_single_occurrence(self):
        with pytest.raises(NotDoubleOccurrence):
            W("1 2 3")

    def test_triple_occurrence(self):
        with pytest.raises(NotDoubleOccurrence):
            W("1 1 1")

    def test_empty_token(self):
        with pytest.raises(EmptyToken):
            W("1,,1")

    def test_non_positive(self):
        with pytest.raises(NonPositiveSymbol):
            W("0 0")
        with pytest.raises(NonPositiveSymbol):
            W("-1 -1")

    def test_garbage(self):
        with pytest.raises(DowError):
            W("a a")

    def test_text_round_trip(self):
        w = W("1 2 1 3 2 3")
        assert str(w) == "1 2 1 3 2 3"
        assert parse(str(w)) == w


class TestCanonical:
    def test_reverse_equivalence(self):
        assert canonicalize(W("132321")) == canonicalize(W("123231"))

    def test_rename_equivalence(self):
        assert canonicalize(W("213132")) == canonicalize(W("123231"))

    def test_empty(self):
        assert canonicalize(Dow()) == Dow()

    def test_equivalent(self):
        assert equivalent(W("123231"), W("132321"))
        assert not equivalent(W("1122"), W("1212"))

    def test_matches_brute_force(self):
        for text in ["121323", "12314324", "123451256346", "2211", "31312424"]:
            assert canonicalize(W(text)).letters == brute_canonical(letters(text))

    def test_idempotent_and_flag(self):
        c = canonicalize(W("34431221"))
        assert canonicalize(c) == c and is_canonical(c)
        assert not is_canonical(W("2121"))


class TestReducible:
    def test_examples(self):
        assert is_reducible(W("1122"))
        assert not is_reducible(W("1212"))
        assert is_reducible(cross_sum(W("1212"), W("1212")))

    def test_empty_not_reducible(self):
        assert not is_reducible(Dow())


class TestLoops:
    def test_insert_loop_end(self):
        assert insert_loop(W("1212"), 4) == W("121233")

    def test_insert_loop_empty(self):
        assert insert_loop(Dow(), 0) == W("11")

    def test_insert_loop_middle(self):
        out = insert_loop(W("1122"), 2)
        assert out == W("113322")
        assert equivalent(out, W("112233"))

    def test_insert_loop_bad_position(self):
        with pytest.raises(IndexError):
            insert_loop(W("11"), 3)

    @pytest.mark.parametrize(
        "text,expected", [("1122", True), ("1212", False), ("122331", True), ("", True), ("123123", False)]
    )
    def test_loop_nested(self, text, expected):
        assert is_loop_nested(W(text)) is expected


class TestCrossSum:
    def test_pretzel_pair(self):
        assert cross_sum(W("1212"), W("1212"), 0, 0).letters == (1, 2, 1, 2, 5, 3, 4, 3, 4, 5)

    def test_with_empty(self):
        w = W("121323")
        assert cross_sum(w, Dow(), 0, 0) == insert_loop(w, len(w))

    def test_cut(self):
        assert cross_sum(W("1122"), W("11"), 1, 0).letters == (1, 2, 2, 1, 4, 3, 3, 4)

    def test_bad_cut(self):
        with pytest.raises(IndexError):
            cross_sum(W("11"), W("11"), 2, 0)


class TestPretzelAndVertices:
    def test_insert_pretzel(self):
        assert insert_pretzel(W("1212"), 0) == W("34341212")

    def test_insert_pretzel_empty(self):
        with pytest.raises(ValueError):
            insert_pretzel(Dow(), 0)

    def test_insert_vertex_figure_eight(self):
        out = insert_vertex(W("11"), 0, 1)
        assert out == W("2121") and equivalent(out, W("1212"))

    def test_insert_vertex_tangled_step(self):
        assert insert_vertex(W("121323"), 5, 6) == W("12132434")

    def test_insert_vertex_same_slot(self):
        assert insert_vertex(W("11"), 1, 1) == W("1221")

    def test_insert_vertex_bad(self):
        with pytest.raises(IndexError):
            insert_vertex(W("11"), 0, 3)

    def test_remove_vertex(self):
        assert remove_vertex(W("121233"), 3) == W("1212")
        assert remove_vertex(W("11"), 1) == Dow()
        assert remove_vertex(W("12132434"), 4) == W("121323")

    def test_remove_absent(self):
        with pytest.raises(KeyError):
            remove_vertex(W("11"), 2)

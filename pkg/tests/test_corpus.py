import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from svlight.corpus import (CorpusFormatError, TaggedSentence, TaggedToken,
                            format_tagged_corpus, parse_tagged_corpus)


def parse(text, **kw):
    return list(parse_tagged_corpus(io.StringIO(text), **kw))


def test_single_sentence():
    sents = parse("Kim\tNNP\ntook\tVBD\na\tDT\nphotograph\tNN\n\n")
    assert len(sents) == 1
    assert [t.surface for t in sents[0]] == ["Kim", "took", "a", "photograph"]
    assert sents[0][1] == TaggedToken("took", "VBD")
    assert sents[0].source_id == "<stream>:1-4"


def test_blank_line_separates_sentences():
    sents = parse("a\tDT\ncat\tNN\n\nthe\tDT\ndog\tNN\n")
    assert len(sents) == 2
    assert sents[1].tokens == (TaggedToken("the", "DT"), TaggedToken("dog", "NN"))


def test_empty_stream():
    assert parse("") == []
    assert parse("\n\n# just a comment\n") == []


def test_comments_and_repeated_blanks():
    sents = parse("# header\n\n\nKim\tNNP\n# inline\nslept\tVBD\n\n\n")
    assert len(sents) == 1
    assert len(sents[0]) == 2


def test_crlf_line_endings():
    sents = parse("Kim\tNNP\r\nslept\tVBD\r\n")
    assert sents[0][1].pos == "VBD"


def test_missing_tag_raises_with_line_number():
    with pytest.raises(CorpusFormatError) as exc:
        parse("Kim\tNNP\ntook\n")
    assert exc.value.lineno == 2


def test_error_callback_drops_sentence_and_continues():
    errors = []
    text = "a\tDT\ncat\tNN\n\nKim\tNNP\ntook\ndog\tNN\n\nthe\tDT\nend\tNN\n"
    sents = parse(text, on_error=errors.append)
    assert [e.lineno for e in errors] == [5]
    assert [[t.surface for t in s] for s in sents] == [["a", "cat"], ["the", "end"]]


@pytest.mark.parametrize("line", ["a b\tNN", "a\tN N", "\tNN", "a\t", "a\tNN\textra"])
def test_bad_fields(line):
    with pytest.raises(CorpusFormatError):
        parse(line + "\n")


def test_token_invariants():
    with pytest.raises(ValueError):
        TaggedToken("", "NN")
    with pytest.raises(ValueError):
        TaggedToken("a\tb", "NN")
    with pytest.raises(ValueError):
        TaggedToken("a", "")
    with pytest.raises(ValueError):
        TaggedSentence(())


def test_from_slashed():
    s = TaggedSentence.from_slashed("He/PRP made/VBD his/PRP$ offer/NN ./.")
    assert s[2] == TaggedToken("his", "PRP$")
    assert s[4] == TaggedToken(".", ".")


words = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Zs", "Zl", "Zp", "Cc")),
                min_size=1, max_size=8).filter(lambda w: not w.startswith("#"))
tags = st.sampled_from(["NN", "NNS", "VB", "VBD", "DT", "JJ", "IN", ".", "PRP$"])
sentences = st.lists(st.lists(st.tuples(words, tags), min_size=1, max_size=8),
                     max_size=6).map(lambda ss: [TaggedSentence.from_pairs(s) for s in ss])


@given(sentences)
def test_round_trip(sents):
    assert parse(format_tagged_corpus(sents)) == sents


@given(sentences, sentences)
def test_concatenation(a, b):
    text = format_tagged_corpus(a).rstrip("\n") + "\n\n" + format_tagged_corpus(b)
    assert parse(text) == parse(format_tagged_corpus(a)) + parse(format_tagged_corpus(b))


@given(sentences)
def test_deterministic(sents):
    text = format_tagged_corpus(sents)
    first, second = parse(text), parse(text)
    assert first == second
    assert [s.source_id for s in first] == [s.source_id for s in second]

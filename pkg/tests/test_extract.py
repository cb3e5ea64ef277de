import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svlight.cooc import CoocMatrix, merge
from svlight.corpus import TaggedSentence, read_tagged_corpus
from svlight.extract import ExtractionConfig, count_corpus, extract_governance

from conftest import DATA


def events(text, **cfg):
    sent = TaggedSentence.from_slashed(text)
    return [(e.verb_lemma, e.noun_lemma) for e in extract_governance(sent, ExtractionConfig(**cfg))]


@pytest.mark.parametrize("text,expected", [
    ("Kim/NNP took/VBD a/DT photograph/NN of/IN Dale/NNP", [("take", "photograph")]),
    ("He/PRP put/VBD the/DT proposal/NN in/IN the/DT drawer/NN", [("put", "proposal")]),
    ("A/DT decision/NN was/VBD made/VBN ./.", []),
    ("He/PRP made/VBD his/PRP$ formal/JJ proposal/NN to/TO the/DT committee/NN",
     [("make", "proposal")]),
])
def test_worked_examples(text, expected):
    assert events(text) == expected


def test_passive_with_retained_object():
    text = "He/PRP was/VBD given/VBN a/DT gift/NN ./."
    assert events(text) == []
    assert events(text, exclude_passive=False) == [("give", "gift")]


def test_perfect_is_not_passive():
    assert events("They/PRP have/VBP made/VBN a/DT choice/NN") == [("make", "choice")]


def test_copula_has_no_object():
    assert events("She/PRP is/VBZ a/DT member/NN") == []


def test_particle_is_skipped():
    assert events("He/PRP took/VBD up/RP the/DT challenge/NN") == [("take", "challenge")]


def test_head_is_last_noun_of_first_run():
    assert events("They/PRP gave/VBD a/DT free/JJ gift/NN box/NN") == [("give", "box")]
    assert events("He/PRP gave/VBD the/DT door/NN a/DT shove/NN") == [("give", "door")]


def test_conjoined_objects_yield_first_only():
    text = "They/PRP made/VBD a/DT decision/NN and/CC a/DT promise/NN"
    assert events(text) == [("make", "decision")]


@pytest.mark.parametrize("text", [
    "She/PRP made/VBD it/PRP clear/JJ",
    "He/PRP made/VBD a/DT very/RB long/JJ speech/NN",
    "They/PRP made/VBD ./. decisions/NNS",
    "They/PRP looked/VBD at/IN the/DT results/NNS",
])
def test_scan_stops(text):
    assert events(text) == []


def test_window_limit():
    text = "They/PRP built/VBD the/DT big/JJ new/JJ bridge/NN"
    assert events(text, max_np_span=4) == [("build", "bridge")]
    assert events(text, max_np_span=3) == []
    with pytest.raises(ValueError):
        ExtractionConfig(max_np_span=0)


def test_noun_filter_uses_lemmas():
    text = "They/PRP made/VBD decisions/NNS"
    assert events(text, noun_filter={"decision"}) == [("make", "decision")]
    assert events(text, noun_filter={"proposal"}) == []


def test_multiple_verbs_left_to_right():
    text = ("The/DT government/NN has/VBZ made/VBN an/DT attempt/NN to/TO reduce/VB "
            "costs/NNS ./.")
    assert events(text) == [("make", "attempt"), ("reduce", "cost")]


def test_source_id_carried():
    sent = TaggedSentence.from_slashed("Kim/NNP took/VBD a/DT walk/NN", source_id="f:1-4")
    assert extract_governance(sent)[0].source_id == "f:1-4"


def synthetic():
    return list(read_tagged_corpus(DATA / "synthetic.tagged"))


def test_count_two_worked_sentences():
    sents = [TaggedSentence.from_slashed("Kim/NNP took/VBD a/DT photograph/NN of/IN Dale/NNP"),
             TaggedSentence.from_slashed("He/PRP put/VBD the/DT proposal/NN in/IN the/DT drawer/NN")]
    m = count_corpus(sents)
    assert dict(m.entries) == {("take", "photograph"): 1, ("put", "proposal"): 1}
    assert count_corpus(sents + sents) == m.scaled(2)
    assert count_corpus([]).total == 0


def test_additivity_over_splits():
    sents = synthetic()
    whole = count_corpus(sents)
    rng = random.Random(7)
    for _ in range(10):
        k = rng.randrange(len(sents) + 1)
        assert merge(count_corpus(sents[:k]), count_corpus(sents[k:])) == whole


def test_order_independence():
    sents = synthetic()
    whole = count_corpus(sents)
    rng = random.Random(11)
    for _ in range(5):
        shuffled = sents[:]
        rng.shuffle(shuffled)
        assert count_corpus(shuffled) == whole


def test_no_fabrication():
    from svlight.lemma import lemmatize_noun, lemmatize_verb

    for sent in synthetic():
        verbs = {lemmatize_verb(t.surface, t.pos) for t in sent if t.is_verb}
        nouns = {lemmatize_noun(t.surface, t.pos) for t in sent if t.is_noun}
        for ev in extract_governance(sent):
            assert ev.verb_lemma in verbs and ev.noun_lemma in nouns
            assert ev.verb_lemma == ev.verb_lemma.lower() and ev.noun_lemma


_all = count_corpus(synthetic())
_nouns = sorted(_all.col_sums)


@settings(max_examples=50)
@given(st.sets(st.sampled_from(_nouns)), st.sets(st.sampled_from(_nouns)))
def test_filter_monotone(s, extra):
    t = s | extra
    sents = synthetic()
    under_s = count_corpus(sents, ExtractionConfig(noun_filter=s))
    under_t = count_corpus(sents, ExtractionConfig(noun_filter=t))
    for key, count in under_s.entries.items():
        assert under_t[key] == count
    assert under_s == under_t.restricted(s)
    assert under_s == _all.restricted(s)


def test_fingerprint_stable_and_sensitive():
    a = ExtractionConfig()
    assert a.fingerprint() == ExtractionConfig().fingerprint()
    assert a.fingerprint() != ExtractionConfig(exclude_passive=False).fingerprint()
    assert (ExtractionConfig(noun_filter={"a", "b"}).fingerprint()
            == ExtractionConfig(noun_filter=["b", "a"]).fingerprint())

"""Verb/direct-object detection over POS tag sequences.

For each verb the extractor skips one optional particle, then reads a short
noun-phrase window and takes the last noun of the first noun run as the
object head::

    made/VBD his/PRP$ formal/JJ proposal/NN to/TO ...  ->  (make, proposal)

Passive participles after a form of "be" are skipped by default, as is the
copula itself: neither governs a direct object.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .cooc import CoocMatrix
from .corpus import NOUN_TAGS, VERB_TAGS, TaggedSentence
from .lemma import LemmaRules, lemmatize_noun, lemmatize_verb

NP_TAGS = frozenset({"DT", "PDT", "PRP$", "JJ", "JJR", "JJS", "CD"}) | NOUN_TAGS
PARTICLE = "RP"
COPULA = "be"


@dataclass(frozen=True)
class GovernanceEvent:
    verb_lemma: str
    noun_lemma: str
    source_id: str = ""


@dataclass(frozen=True)
class ExtractionConfig:
    noun_filter: Optional[frozenset] = None
    max_np_span: int = 6
    exclude_passive: bool = True

    def __post_init__(self):
        if self.max_np_span < 1:
            raise ValueError("max_np_span must be at least 1")
        if self.noun_filter is not None and not isinstance(self.noun_filter, frozenset):
            object.__setattr__(self, "noun_filter", frozenset(self.noun_filter))

    def fingerprint(self) -> str:
        """Short stable hash of the settings, recorded in count files."""
        nouns = None if self.noun_filter is None else sorted(self.noun_filter)
        blob = json.dumps(
            {"exclude_passive": self.exclude_passive, "max_np_span": self.max_np_span,
             "noun_filter": nouns},
            sort_keys=True, separators=(",", ":"),
        )
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:12]


DEFAULT_CONFIG = ExtractionConfig()


def _is_passive(tokens, k, rules):
    if tokens[k].pos != "VBN":
        return False
    for j in range(k - 1, -1, -1):
        if tokens[j].pos in VERB_TAGS:
            return lemmatize_verb(tokens[j].surface, tokens[j].pos, rules) == COPULA
    return False


def _object_head(tokens, k, span):
    i = k + 1
    if i < len(tokens) and tokens[i].pos == PARTICLE:
        i += 1
    head = None
    for tok in tokens[i:i + span]:
        if tok.pos in NOUN_TAGS:
            head = tok
        elif tok.pos in NP_TAGS and head is None:
            continue
        else:
            # any non-NP tag, or a determiner/adjective after the noun run
            break
    return head


def extract_governance(
    sentence: TaggedSentence,
    config: ExtractionConfig = DEFAULT_CONFIG,
    rules: LemmaRules | None = None,
) -> list[GovernanceEvent]:
    tokens = sentence.tokens
    events = []
    for k, tok in enumerate(tokens):
        if tok.pos not in VERB_TAGS:
            continue
        if config.exclude_passive and _is_passive(tokens, k, rules):
            continue
        verb = lemmatize_verb(tok.surface, tok.pos, rules)
        if verb == COPULA:
            continue
        head = _object_head(tokens, k, config.max_np_span)
        if head is None:
            continue
        noun = lemmatize_noun(head.surface, head.pos, rules)
        if config.noun_filter is not None and noun not in config.noun_filter:
            continue
        events.append(GovernanceEvent(verb, noun, sentence.source_id))
    return events


def count_corpus(
    sentences: Iterable[TaggedSentence],
    config: ExtractionConfig = DEFAULT_CONFIG,
    rules: LemmaRules | None = None,
) -> CoocMatrix:
    return CoocMatrix.from_events(
        (ev.verb_lemma, ev.noun_lemma)
        for sent in sentences
        for ev in extract_governance(sent, config, rules)
    )

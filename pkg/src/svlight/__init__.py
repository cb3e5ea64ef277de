"""Identify support (light) verbs for nominalizations from tagged text."""

from .cooc import CoocMatrix, load, merge, save
from .corpus import TaggedSentence, TaggedToken, parse_tagged_corpus
from .extract import ExtractionConfig, GovernanceEvent, count_corpus, extract_governance
from .lemma import lemmatize_noun, lemmatize_verb
from .models import (NO_DATA, GlobalWeights, Ranking, choice_ratio, global_weights,
                     iterate_global, sv_basic, sv_global)

__version__ = "0.1.0"

__all__ = [
    "CoocMatrix", "ExtractionConfig", "GlobalWeights", "GovernanceEvent", "NO_DATA",
    "Ranking", "TaggedSentence", "TaggedToken", "choice_ratio", "count_corpus",
    "extract_governance", "global_weights", "iterate_global", "lemmatize_noun",
    "lemmatize_verb", "load", "merge", "parse_tagged_corpus", "save", "sv_basic",
    "sv_global",
]

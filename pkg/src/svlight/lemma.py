"""Rule-table lemmatizer for English verbs and nouns.

Lookup order for an inflected form: lowercase, exception table, then the
ordered suffix rules of the tag's class. Base-form tags (VB, NN, NNP) are
returned lowercased and untouched, so every lemma the lemmatizer produces
maps to itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .corpus import NOUN_TAGS, VERB_TAGS

# tag -> suffix-rule class; tags absent here only see the exception table
_VERB_CLASS = {"VBZ": "verb-s", "VBD": "verb-ed", "VBN": "verb-ed", "VBG": "verb-ing"}
_NOUN_CLASS = {"NNS": "noun-pl", "NNPS": "noun-pl"}
_BASE_TAGS = frozenset({"VB", "NN", "NNP"})

SECTIONS = ("verb-exceptions", "noun-exceptions", "suffix-rules")
MIN_LEMMA_LEN = 2


class LemmaRulesError(ValueError):
    pass


@dataclass(frozen=True)
class LemmaRules:
    verb_exceptions: dict = field(default_factory=dict)
    noun_exceptions: dict = field(default_factory=dict)
    # (class, suffix, replacement) in priority order
    suffix_rules: tuple = ()

    def __post_init__(self):
        by_class = {}
        for cls, suf, rep in self.suffix_rules:
            by_class.setdefault(cls, []).append((suf, rep))
        object.__setattr__(self, "_by_class", by_class)

    def rules_for(self, cls):
        return self._by_class.get(cls, [])


def parse_lemma_rules(lines, name="<rules>") -> LemmaRules:
    verb_exc, noun_exc, suffix = {}, {}, []
    section = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            if section not in SECTIONS:
                raise LemmaRulesError(f"{name}:{lineno}: unknown section [{section}]")
            continue
        fields = line.split("\t")
        if section is None:
            raise LemmaRulesError(f"{name}:{lineno}: entry outside any section")
        if section == "suffix-rules":
            if len(fields) != 3:
                raise LemmaRulesError(f"{name}:{lineno}: expected class, suffix, replacement")
            cls, suf, rep = fields
            suffix.append((cls, suf, "" if rep == "-" else rep))
        else:
            if len(fields) != 2:
                raise LemmaRulesError(f"{name}:{lineno}: expected surface, lemma")
            table = verb_exc if section == "verb-exceptions" else noun_exc
            table[fields[0].lower()] = fields[1].lower()
    return LemmaRules(verb_exc, noun_exc, tuple(suffix))


def load_lemma_rules(path=None) -> LemmaRules:
    if path is None:
        return default_rules()
    with open(path, encoding="utf-8") as fh:
        return parse_lemma_rules(fh, str(path))


@lru_cache(maxsize=1)
def default_rules() -> LemmaRules:
    text = resources.files("svlight").joinpath("data/lemma_rules.tsv").read_text("utf-8")
    return parse_lemma_rules(text.splitlines(), "lemma_rules.tsv")


def _apply_suffix(word, rules):
    for suf, rep in rules:
        if word.endswith(suf):
            out = word[: len(word) - len(suf)] + rep
            if len(out) >= MIN_LEMMA_LEN:
                return out
    return word


def _lemmatize(word, exceptions, rules):
    if word in exceptions:
        return exceptions[word]
    return _apply_suffix(word, rules)


def lemmatize_verb(surface: str, pos: str, rules: LemmaRules | None = None) -> str:
    if pos not in VERB_TAGS:
        raise ValueError(f"lemmatize_verb called with non-verb tag {pos!r}")
    rules = rules or default_rules()
    word = surface.lower()
    if pos in _BASE_TAGS:
        return word
    cls = _VERB_CLASS.get(pos)
    return _lemmatize(word, rules.verb_exceptions, rules.rules_for(cls) if cls else [])


def lemmatize_noun(surface: str, pos: str, rules: LemmaRules | None = None) -> str:
    if pos not in NOUN_TAGS:
        raise ValueError(f"lemmatize_noun called with non-noun tag {pos!r}")
    rules = rules or default_rules()
    word = surface.lower()
    if pos in _BASE_TAGS:
        return word
    return _lemmatize(word, rules.noun_exceptions, rules.rules_for(_NOUN_CLASS[pos]))

"""Nominalization lexicon: nouns paired with their stem verbs.

Entries come from three places, in increasing precedence: orthographic
suffix matching against a verb list (``generated``), the shipped table of
pairs no suffix rule can find (``builtin``), and a human accept/reject
pass over generated candidates (``manual``).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping, NamedTuple

BUILTIN = "builtin"
GENERATED = "generated"
MANUAL = "manual"
PROVENANCES = (BUILTIN, GENERATED, MANUAL)
_PRECEDENCE = {GENERATED: 0, BUILTIN: 1, MANUAL: 2}


class LexiconError(ValueError):
    pass


class LexiconWarning(UserWarning):
    pass


@dataclass(frozen=True)
class LexiconEntry:
    noun: str
    stem_verb: str
    provenance: str = GENERATED

    def __post_init__(self):
        if not self.noun or not self.stem_verb:
            raise ValueError("noun and stem verb must be non-empty")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass(frozen=True)
class SuffixRule:
    noun_suffix: str
    verb_replacements: tuple

    def __post_init__(self):
        if not self.noun_suffix:
            raise ValueError("noun suffix must be non-empty")
        if not self.verb_replacements:
            raise ValueError("a suffix rule needs at least one replacement")

    def candidates(self, noun):
        if not noun.endswith(self.noun_suffix) or len(noun) <= len(self.noun_suffix):
            return []
        stem = noun[: -len(self.noun_suffix)]
        return [stem + rep for rep in self.verb_replacements]


DEFAULT_RULES = (
    SuffixRule("ation", ("ate", "e", "")),
    SuffixRule("ition", ("e",)),
    SuffixRule("ssion", ("de", "ss", "t")),
    SuffixRule("sion", ("de", "se", "d", "")),
    SuffixRule("tion", ("te", "t")),
    SuffixRule("ment", ("", "e")),
    SuffixRule("al", ("e", "")),
    SuffixRule("ance", ("", "e")),
    SuffixRule("ence", ("", "e")),
    SuffixRule("ure", ("e", "")),
    SuffixRule("age", ("", "e")),
    SuffixRule("ing", ("",)),
)


def generate_candidates(nouns, verbs, rules=DEFAULT_RULES) -> list[LexiconEntry]:
    """Pair each noun with every listed verb a suffix rule maps it to.

    A noun that is itself in ``verbs`` is paired with itself (zero
    derivation, as in *use* or *demand*).
    """
    verbs = set(verbs)
    out = []
    for noun in sorted(set(nouns)):
        found = []
        if noun in verbs:
            found.append(noun)
        for rule in rules:
            for cand in rule.candidates(noun):
                if cand in verbs and cand not in found:
                    found.append(cand)
        out.extend(LexiconEntry(noun, v, GENERATED) for v in found)
    return out


class FilterResult(NamedTuple):
    lexicon: dict
    pending: list


def apply_manual_filter(candidates: Iterable[LexiconEntry],
                        decisions: Mapping[str, str]) -> FilterResult:
    """Keep accepted nouns, drop rejected ones, set aside the undecided.

    Decisions are per noun, so rejecting a noun drops all its candidates.
    """
    candidates = list(candidates)
    known = {e.noun for e in candidates}
    for noun in sorted(set(decisions) - known):
        warnings.warn(f"decision for unknown noun {noun!r} ignored", LexiconWarning, stacklevel=2)
    accepted: dict[str, LexiconEntry] = {}
    pending = []
    for e in candidates:
        verdict = decisions.get(e.noun)
        if verdict is None:
            pending.append(e)
        elif verdict == "accept":
            prev = accepted.get(e.noun)
            if prev is not None and prev.stem_verb != e.stem_verb:
                raise LexiconError(
                    f"accepted noun {e.noun!r} has several stems "
                    f"({prev.stem_verb}, {e.stem_verb}); edit the candidates first")
            accepted[e.noun] = LexiconEntry(e.noun, e.stem_verb, MANUAL)
        elif verdict != "reject":
            raise LexiconError(f"decision for {e.noun!r} must be accept or reject")
    return FilterResult(dict(sorted(accepted.items())), pending)


def merge_lexicons(builtin=(), generated=(), manual=()) -> dict:
    """Combine entry lists; manual beats builtin beats generated per noun."""
    chosen: dict[str, LexiconEntry] = {}
    conflicts = []
    for source in (generated, builtin, manual):
        entries = source.values() if isinstance(source, Mapping) else source
        layer: dict[str, LexiconEntry] = {}
        for e in entries:
            prev = layer.get(e.noun)
            if prev is not None and prev.stem_verb != e.stem_verb:
                conflicts.append(f"{e.noun}: {prev.stem_verb} / {e.stem_verb}")
                continue
            layer[e.noun] = e
        for noun, e in layer.items():
            old = chosen.get(noun)
            if old is None or _PRECEDENCE[e.provenance] >= _PRECEDENCE[old.provenance]:
                chosen[noun] = e
    if conflicts:
        raise LexiconError("conflicting stem verbs: " + "; ".join(conflicts))
    return dict(sorted(chosen.items()))


def dumps_lexicon(entries) -> str:
    if isinstance(entries, Mapping):
        entries = entries.values()
    rows = sorted(entries, key=lambda e: (e.noun, e.stem_verb))
    return "".join(f"{e.noun}\t{e.stem_verb}\t{e.provenance}\n" for e in rows)


def parse_lexicon(lines, name="<lexicon>") -> list[LexiconEntry]:
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) == 2:
            fields.append(GENERATED)
        if len(fields) != 3:
            raise LexiconError(f"{name}:{lineno}: expected noun, stem_verb, provenance")
        try:
            out.append(LexiconEntry(*fields))
        except ValueError as e:
            raise LexiconError(f"{name}:{lineno}: {e}") from None
    return out


def load_lexicon(path) -> list[LexiconEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh, str(path))


def save_lexicon(entries, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_lexicon(entries))


def parse_decisions(lines, name="<decisions>") -> dict:
    out = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or fields[1] not in ("accept", "reject"):
            raise LexiconError(f"{name}:{lineno}: expected noun<TAB>accept|reject")
        out[fields[0]] = fields[1]
    return out


def _data_lines(filename):
    return resources.files("svlight").joinpath("data", filename).read_text("utf-8").splitlines()


def builtin_lexicon() -> list[LexiconEntry]:
    return parse_lexicon(_data_lines("builtin_lexicon.tsv"), "builtin_lexicon.tsv")


def stem_verbs() -> set:
    """The shipped list of candidate stem verbs."""
    return {w.strip() for w in _data_lines("stem_verbs.txt") if w.strip() and not w.startswith("#")}


def parse_rules(lines, name="<rules>") -> list[SuffixRule]:
    """``suffix<TAB>rep[,rep...]`` rows; ``-`` stands for the empty replacement."""
    rules = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconError(f"{name}:{lineno}: expected suffix<TAB>replacements")
        reps = tuple("" if r == "-" else r for r in fields[1].split(","))
        rules.append(SuffixRule(fields[0], reps))
    return rules

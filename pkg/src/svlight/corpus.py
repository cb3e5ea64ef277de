"""Reading and writing POS-tagged corpora.

The on-disk format is one ``surface<TAB>tag`` pair per line, with a blank
line closing each sentence. Lines starting with ``#`` are comments::

    Kim	NNP
    took	VBD
    a	DT
    photograph	NN

"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

SEPARATOR = "\t"

VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})


class CorpusFormatError(ValueError):
    """A line of a tagged corpus could not be parsed."""

    def __init__(self, message: str, lineno: int, source: str = "<stream>"):
        super().__init__(f"{source}:{lineno}: {message}")
        self.lineno = lineno
        self.source = source


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    pos: str

    def __post_init__(self):
        if not self.surface or any(c.isspace() for c in self.surface):
            raise ValueError(f"invalid token surface {self.surface!r}")
        if not self.pos or any(c.isspace() for c in self.pos):
            raise ValueError(f"invalid POS tag {self.pos!r}")

    @property
    def is_verb(self) -> bool:
        return self.pos in VERB_TAGS

    @property
    def is_noun(self) -> bool:
        return self.pos in NOUN_TAGS


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[TaggedToken, ...]
    # Diagnostics only; two sentences with the same tokens compare equal.
    source_id: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("a sentence needs at least one token")
        if not isinstance(self.tokens, tuple):
            object.__setattr__(self, "tokens", tuple(self.tokens))

    @classmethod
    def from_pairs(cls, pairs, source_id=""):
        return cls(tuple(TaggedToken(s, p) for s, p in pairs), source_id)

    @classmethod
    def from_slashed(cls, text: str, source_id: str = ""):
        """Build a sentence from ``word/TAG word/TAG ...`` notation."""
        pairs = []
        for item in text.split():
            surface, _, pos = item.rpartition("/")
            pairs.append((surface, pos))
        return cls.from_pairs(pairs, source_id)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]


def parse_tagged_corpus(
    stream: Iterable[str],
    name: str = "<stream>",
    on_error: Optional[Callable[[CorpusFormatError], None]] = None,
) -> Iterator[TaggedSentence]:
    """Yield sentences from a tagged corpus, one at a time.

    Without ``on_error`` a malformed line raises :class:`CorpusFormatError`.
    With it, the error is passed to the callback, the sentence containing
    the bad line is dropped and parsing resumes at the next sentence.
    """
    pairs: list[tuple[str, str]] = []
    start = 0
    broken = False

    def close(end):
        sid = f"{name}:{start}-{end}"
        return TaggedSentence.from_pairs(pairs, sid)

    lineno = 0
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            if pairs and not broken:
                yield close(lineno - 1)
            pairs, broken = [], False
            continue
        if line.startswith("#"):
            continue
        if broken:
            continue
        fields = line.split(SEPARATOR)
        err = None
        if len(fields) != 2:
            err = f"expected 2 tab-separated fields, got {len(fields)}"
        elif not fields[0] or any(c.isspace() for c in fields[0]):
            err = f"bad surface form {fields[0]!r}"
        elif not fields[1] or any(c.isspace() for c in fields[1]):
            err = f"bad tag {fields[1]!r}"
        if err is not None:
            exc = CorpusFormatError(err, lineno, name)
            if on_error is None:
                raise exc
            on_error(exc)
            broken = True
            continue
        if not pairs:
            start = lineno
        pairs.append((fields[0], fields[1]))
    if pairs and not broken:
        yield close(lineno)


def read_tagged_corpus(path, on_error=None) -> Iterator[TaggedSentence]:
    with open(path, encoding="utf-8") as fh:
        yield from parse_tagged_corpus(fh, name=str(path), on_error=on_error)


def format_tagged_corpus(sentences: Iterable[TaggedSentence]) -> str:
    """Serialize sentences back to the tagged-corpus format."""
    chunks = []
    for sent in sentences:
        lines = [f"{t.surface}{SEPARATOR}{t.pos}\n" for t in sent.tokens]
        chunks.append("".join(lines) + "\n")
    return "".join(chunks)

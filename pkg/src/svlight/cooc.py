"""Sparse verb x noun count matrix with cached marginals.

Counts files are tab-separated ``verb<TAB>noun<TAB>count`` rows sorted by
(verb, noun), preceded by ``#`` header lines.
"""

from __future__ import annotations

from collections import Counter
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

MAX_COUNT = 2**63 - 1
HEADER = "# svlight counts: verb\tnoun\tcount"


class CountsFormatError(ValueError):
    def __init__(self, message, lineno, source="<counts>"):
        super().__init__(f"{source}:{lineno}: {message}")
        self.lineno = lineno
        self.source = source


def _check(count, key):
    if not isinstance(count, int) or isinstance(count, bool):
        raise TypeError(f"count for {key} must be an int, got {count!r}")
    if count < 0:
        raise ValueError(f"negative count for {key}")
    if count > MAX_COUNT:
        raise OverflowError(f"count for {key} exceeds 64-bit range")


class CoocMatrix:
    """Immutable sparse counts m[verb, noun]; zero cells are not stored."""

    __slots__ = ("_entries", "_rows", "_cols", "_by_noun", "_total")

    def __init__(self, entries: Optional[Mapping[tuple[str, str], int]] = None):
        clean = {}
        rows: Counter = Counter()
        cols: Counter = Counter()
        by_noun: dict[str, dict[str, int]] = {}
        for key, count in (entries or {}).items():
            _check(count, key)
            if count == 0:
                continue
            verb, noun = key
            clean[(verb, noun)] = count
            rows[verb] += count
            cols[noun] += count
            by_noun.setdefault(noun, {})[verb] = count
        total = sum(rows.values())
        for key, value in list(rows.items()) + list(cols.items()):
            if value > MAX_COUNT:
                raise OverflowError(f"marginal for {key!r} exceeds 64-bit range")
        if total > MAX_COUNT:
            raise OverflowError("matrix total exceeds 64-bit range")
        self._entries = MappingProxyType(clean)
        self._rows = MappingProxyType(dict(rows))
        self._cols = MappingProxyType(dict(cols))
        self._by_noun = by_noun
        self._total = total

    @classmethod
    def from_events(cls, pairs: Iterable[tuple[str, str]]) -> "CoocMatrix":
        return cls(Counter(pairs))

    @property
    def entries(self) -> Mapping[tuple[str, str], int]:
        return self._entries

    @property
    def row_sums(self) -> Mapping[str, int]:
        return self._rows

    @property
    def col_sums(self) -> Mapping[str, int]:
        return self._cols

    @property
    def total(self) -> int:
        return self._total

    @property
    def verbs(self):
        return sorted(self._rows)

    @property
    def nouns(self):
        return sorted(self._cols)

    def __getitem__(self, key):
        return self._entries.get(key, 0)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, CoocMatrix):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return f"CoocMatrix({len(self)} cells, total={self.total})"

    def column(self, noun: str) -> dict[str, int]:
        """Verbs governing ``noun`` with their counts."""
        return dict(self._by_noun.get(noun, {}))

    def row(self, verb: str) -> dict[str, int]:
        return {n: c for (v, n), c in self._entries.items() if v == verb}

    def scaled(self, k: int) -> "CoocMatrix":
        return CoocMatrix({key: c * k for key, c in self._entries.items()})

    def restricted(self, nouns) -> "CoocMatrix":
        nouns = set(nouns)
        return CoocMatrix({key: c for key, c in self._entries.items() if key[1] in nouns})

    def verify(self):
        """Recompute marginals from scratch and compare with the caches."""
        rows: Counter = Counter()
        cols: Counter = Counter()
        for (verb, noun), count in self._entries.items():
            assert count > 0, (verb, noun)
            rows[verb] += count
            cols[noun] += count
        assert dict(rows) == dict(self._rows)
        assert dict(cols) == dict(self._cols)
        assert self._total == sum(rows.values()) == sum(cols.values())
        for noun, col in self._by_noun.items():
            assert sum(col.values()) == cols[noun]


EMPTY = CoocMatrix()


def merge(a: CoocMatrix, b: CoocMatrix) -> CoocMatrix:
    entries = dict(a.entries)
    for key, count in b.entries.items():
        entries[key] = entries.get(key, 0) + count
    return CoocMatrix(entries)


def merge_all(matrices: Iterable[CoocMatrix]) -> CoocMatrix:
    entries: Counter = Counter()
    for m in matrices:
        entries.update(m.entries)
    return CoocMatrix(dict(entries))


def column(m: CoocMatrix, noun: str) -> dict[str, int]:
    return m.column(noun)


def dumps(m: CoocMatrix, provenance: Optional[Mapping[str, str]] = None) -> str:
    lines = [HEADER]
    for key, value in (provenance or {}).items():
        lines.append(f"# {key}: {value}")
    for (verb, noun), count in sorted(m.entries.items()):
        lines.append(f"{verb}\t{noun}\t{count}")
    return "\n".join(lines) + "\n"


def save(m: CoocMatrix, sink, provenance: Optional[Mapping[str, str]] = None):
    """Write ``m`` to a path or text file object."""
    text = dumps(m, provenance)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def loads(lines: Iterable[str], name: str = "<counts>") -> CoocMatrix:
    entries = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3 or not fields[0] or not fields[1]:
            raise CountsFormatError("expected verb<TAB>noun<TAB>count", lineno, name)
        verb, noun, raw_count = fields
        try:
            count = int(raw_count)
        except ValueError:
            raise CountsFormatError(f"count {raw_count!r} is not an integer", lineno, name)
        if count < 0:
            raise CountsFormatError(f"negative count {count}", lineno, name)
        if count > MAX_COUNT:
            raise CountsFormatError("count exceeds 64-bit range", lineno, name)
        if (verb, noun) in entries:
            raise CountsFormatError(f"duplicate entry ({verb}, {noun})", lineno, name)
        entries[(verb, noun)] = count
    return CoocMatrix(entries)


def load(source) -> CoocMatrix:
    if hasattr(source, "read"):
        return loads(source.read().splitlines(), getattr(source, "name", "<counts>"))
    with open(source, encoding="utf-8") as fh:
        return loads(fh, str(source))

"""Crude and indirectly standardized event rates.

A population is split into categories (age brackets, say), each with an
exposure n and an event count d. Indirect standardization applies the
category rates of a standard population to the target's exposures to get
the number of events the target would show at standard rates; the SMR is
actual over expected events, and the ISDR rescales the standard's crude
rate by the SMR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class PopulationFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Category:
    label: str
    exposure: float
    events: float


@dataclass(frozen=True)
class PopulationTable:
    categories: tuple

    def __post_init__(self):
        cats = tuple(c if isinstance(c, Category) else Category(*c) for c in self.categories)
        labels = [c.label for c in cats]
        if len(set(labels)) != len(labels):
            raise ValueError("category labels must be unique")
        for c in cats:
            if not (math.isfinite(c.exposure) and math.isfinite(c.events)):
                raise ValueError(f"non-finite value in category {c.label!r}")
            if not c.exposure > 0:
                raise ValueError(f"exposure for {c.label!r} must be positive")
            if c.events < 0:
                raise ValueError(f"events for {c.label!r} must be non-negative")
        object.__setattr__(self, "categories", cats)

    @classmethod
    def from_dict(cls, data: Mapping[str, tuple]):
        """``{label: (exposure, events)}``"""
        return cls(tuple(Category(k, n, d) for k, (n, d) in data.items()))

    @property
    def labels(self):
        return [c.label for c in self.categories]

    @property
    def total_exposure(self):
        return sum(c.exposure for c in self.categories)

    @property
    def total_events(self):
        return sum(c.events for c in self.categories)

    def scaled(self, k):
        return PopulationTable(
            tuple(Category(c.label, c.exposure * k, c.events * k) for c in self.categories))


def union(a: PopulationTable, b: PopulationTable) -> PopulationTable:
    """Category-wise sum of two populations, e.g. to serve as a standard."""
    merged: dict[str, list] = {}
    for c in a.categories + b.categories:
        slot = merged.setdefault(c.label, [0, 0])
        slot[0] += c.exposure
        slot[1] += c.events
    return PopulationTable(tuple(Category(k, n, d) for k, (n, d) in merged.items()))


# Sums and ratios are taken over exact rationals (every float converts to a
# Fraction without loss) and rounded once at the end, so that e.g.
# smr(p, p) is exactly 1.

def _q(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _exact_rates(p):
    return {c.label: _q(c.events) / _q(c.exposure) for c in p.categories}


def _exact_expected(rates, target):
    total = Fraction(0)
    for c in target.categories:
        if c.label not in rates:
            raise KeyError(f"no standard rate for category {c.label!r}")
        total += _q(rates[c.label]) * _q(c.exposure)
    return total


def crude_rate(p: PopulationTable) -> float:
    n = sum(_q(c.exposure) for c in p.categories)
    if n <= 0:
        raise ValueError("total exposure must be positive")
    return float(sum(_q(c.events) for c in p.categories) / n)


def category_rates(p: PopulationTable) -> dict:
    return {k: float(r) for k, r in _exact_rates(p).items()}


def expected_events(standard_rates: Mapping[str, float], target: PopulationTable) -> float:
    """Events the target would show at the standard's category rates."""
    return float(_exact_expected(standard_rates, target))


def _exact_smr(target, standard):
    expected = _exact_expected(_exact_rates(standard), target)
    if expected <= 0:
        raise ValueError("expected events are zero; SMR undefined")
    return sum(_q(c.events) for c in target.categories) / expected


def smr(target: PopulationTable, standard: PopulationTable) -> float:
    return float(_exact_smr(target, standard))


def isdr(target: PopulationTable, standard: PopulationTable) -> float:
    crude = sum(_q(c.events) for c in standard.categories) / \
        sum(_q(c.exposure) for c in standard.categories)
    return float(_exact_smr(target, standard) * crude)


def _number(text):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_population(lines: Iterable[str], name="<population>") -> PopulationTable:
    """Parse ``label<TAB>exposure<TAB>events`` rows; ``#`` lines are comments."""
    cats = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise PopulationFormatError(f"{name}:{lineno}: expected label, exposure, events")
        try:
            n, d = _number(fields[1]), _number(fields[2])
        except ValueError:
            raise PopulationFormatError(f"{name}:{lineno}: non-numeric exposure or events")
        cats.append(Category(fields[0], n, d))
    try:
        return PopulationTable(tuple(cats))
    except ValueError as e:
        raise PopulationFormatError(f"{name}: {e}") from None


def load_population(path) -> PopulationTable:
    with open(path, encoding="utf-8") as fh:
        return parse_population(fh, str(path))

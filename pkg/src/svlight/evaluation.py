"""Scoring support-verb choices against a gold test set."""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .cooc import CoocMatrix
from .models import GLOBAL, NO_DATA, choice_ratio, rank

MATCH = "match"
ALT_MATCH = "alt-match"
MISMATCH = "mismatch"
NO_DATA_OUTCOME = "no-data"

TABLE_HEADER = ("Source Text", "Verb", "Choice C1", "Choice C2", "Ratio (C1/C2)")
TSV_HEADER = ("source_text", "full_verb", "c1", "c2", "ratio", "outcome")


class TestSetError(ValueError):
    __test__ = False


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # not a pytest class

    source_text: str
    full_verb: str
    nominal: str
    gold_svs: tuple

    def __post_init__(self):
        if not self.nominal:
            raise ValueError("test case needs a nominal")
        if not self.gold_svs:
            raise ValueError("test case needs at least one gold support verb")
        object.__setattr__(self, "gold_svs", tuple(self.gold_svs))


@dataclass(frozen=True)
class EvalRow:
    source_text: str
    full_verb: str
    c1: object
    c2: object
    ratio: object
    outcome: str


@dataclass(frozen=True)
class EvalReport:
    model: str
    rows: tuple

    @property
    def successes(self) -> int:
        return sum(r.outcome in (MATCH, ALT_MATCH) for r in self.rows)

    @property
    def evaluable(self) -> int:
        return sum(r.outcome != NO_DATA_OUTCOME for r in self.rows)

    @property
    def accuracy(self) -> float:
        return self.successes / self.evaluable if self.evaluable else 0.0


def outcome_for(c1, gold_svs) -> str:
    if c1 is NO_DATA:
        return NO_DATA_OUTCOME
    if c1 == gold_svs[0]:
        return MATCH
    if c1 in gold_svs[1:]:
        return ALT_MATCH
    return MISMATCH


def evaluate(m: CoocMatrix, cases: Iterable[TestCase], model: str = GLOBAL,
             weights=None) -> EvalReport:
    rows = []
    for case in cases:
        r = rank(m, case.nominal, model, weights)
        rows.append(EvalRow(case.source_text, case.full_verb, r.c1, r.c2,
                            choice_ratio(r), outcome_for(r.c1, case.gold_svs)))
    return EvalReport(model, tuple(rows))


def _normal_sf(z):
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _check_counts(success_a, n_a, success_b, n_b):
    if n_a < 1 or n_b < 1:
        raise ValueError("both groups need at least one case")
    if not (0 <= success_a <= n_a and 0 <= success_b <= n_b):
        raise ValueError("successes must lie between 0 and the group size")


def significance(success_a: int, n_a: int, success_b: int, n_b: int) -> float:
    """One-sided pooled two-proportion z-test of rate_a > rate_b."""
    _check_counts(success_a, n_a, success_b, n_b)
    pooled = (success_a + success_b) / (n_a + n_b)
    diff = success_a / n_a - success_b / n_b
    var = pooled * (1.0 - pooled) * (1.0 / n_a + 1.0 / n_b)
    if var == 0.0:
        # pooled rate of 0 or 1 forces equal rates
        return 0.5
    return _normal_sf(diff / math.sqrt(var))


def fisher_significance(success_a: int, n_a: int, success_b: int, n_b: int) -> float:
    """One-sided Fisher exact test of rate_a > rate_b."""
    from scipy.stats import fisher_exact

    _check_counts(success_a, n_a, success_b, n_b)
    table = [[success_a, n_a - success_a], [success_b, n_b - success_b]]
    return float(fisher_exact(table, alternative="greater").pvalue)


def _cell(value):
    if value is NO_DATA:
        return "N/A"
    if isinstance(value, float):
        return "inf" if math.isinf(value) else f"{value:.2f}"
    return str(value)


def render_report(r: EvalReport, format: str = "table") -> str:
    if format == "table":
        lines = [" | ".join(TABLE_HEADER)]
        for row in r.rows:
            lines.append(" | ".join([row.source_text, row.full_verb, _cell(row.c1),
                                     _cell(row.c2), _cell(row.ratio)]))
    elif format == "tsv":
        lines = ["\t".join(TSV_HEADER)]
        for row in r.rows:
            lines.append("\t".join([row.source_text, row.full_verb, _cell(row.c1),
                                    _cell(row.c2), _cell(row.ratio), row.outcome]))
    else:
        raise ValueError(f"unknown report format {format!r}")
    return "\n".join(lines) + "\n"


def parse_test_set(lines, name="<tests>") -> list[TestCase]:
    cases = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise TestSetError(f"{name}:{lineno}: expected source_text, full_verb, nominal, gold_svs")
        gold = tuple(g for g in fields[3].split("|") if g)
        try:
            cases.append(TestCase(fields[0], fields[1], fields[2], gold))
        except ValueError as e:
            raise TestSetError(f"{name}:{lineno}: {e}") from None
    return cases


def load_test_set(path=None) -> list[TestCase]:
    """Load a test-set file; the shipped 18-case set when ``path`` is None."""
    if path is None:
        text = resources.files("svlight").joinpath("data/testset.tsv").read_text("utf-8")
        return parse_test_set(text.splitlines(), "testset.tsv")
    with open(path, encoding="utf-8") as fh:
        return parse_test_set(fh, str(path))

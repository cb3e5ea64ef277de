"""Support-verb selection from verb/noun governance counts.

Two scorings of the verbs governing a nominal j:

* basic: the raw count m[i, j]
* global: m[i, j] * rowsum(i), i.e. the local count weighted by how often
  verb i governs any nominal at all. Dividing by the matrix total would
  turn this into m[i, j] * p'(i), the number of light uses expected if
  verb i behaved as it does across the whole corpus; the divisor is the
  same for every candidate, so it is dropped and scores stay integral.

The true per-nominal lightness probability is unobservable; p'(i), the
verb's share of all governance events, stands in for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .cooc import CoocMatrix

BASIC = "basic"
GLOBAL = "global"
MODELS = (BASIC, GLOBAL)


class _NoData:
    """Marker for a nominal with too few observations to answer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NO_DATA"

    def __str__(self):
        return "N/A"

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_NoData, ())


NO_DATA = _NoData()

Score = Union[int, Fraction]


@dataclass(frozen=True)
class GlobalWeights:
    p_prime: dict
    total_count: int

    def __getitem__(self, verb):
        return self.p_prime.get(verb, Fraction(0))

    def as_floats(self) -> dict:
        return {v: float(p) for v, p in self.p_prime.items()}


@dataclass(frozen=True)
class RankedCandidate:
    verb: str
    raw_count: int
    score: Score


@dataclass(frozen=True)
class Ranking:
    noun: str
    model: str
    candidates: tuple

    @property
    def no_data(self) -> bool:
        return not self.candidates

    @property
    def c1(self):
        return self.candidates[0].verb if self.candidates else NO_DATA

    @property
    def c2(self):
        return self.candidates[1].verb if len(self.candidates) > 1 else NO_DATA

    def verbs(self):
        return [c.verb for c in self.candidates]


def _sort_key(c: RankedCandidate):
    return (-c.score, -c.raw_count, c.verb)


def _rank(noun, model, scored):
    cands = sorted((RankedCandidate(v, m, s) for v, m, s in scored), key=_sort_key)
    return Ranking(noun, model, tuple(cands))


def sv_basic(m: CoocMatrix, noun: str) -> Ranking:
    col = m.column(noun)
    return _rank(noun, BASIC, ((v, c, c) for v, c in col.items()))


def sv_global(m: CoocMatrix, noun: str, weights: Optional[GlobalWeights] = None) -> Ranking:
    """Rank verbs for ``noun`` by count times global verb weight.

    Without ``weights`` the score is m[i, j] * rowsum(i) in exact integers.
    With weights (e.g. from :func:`iterate_global`) it is m[i, j] * w(i).
    """
    col = m.column(noun)
    if weights is None:
        rows = m.row_sums
        scored = ((v, c, c * rows[v]) for v, c in col.items())
    else:
        scored = ((v, c, c * weights[v]) for v, c in col.items())
    return _rank(noun, GLOBAL, scored)


def rank(m: CoocMatrix, noun: str, model: str = GLOBAL, weights=None) -> Ranking:
    if model == BASIC:
        return sv_basic(m, noun)
    if model == GLOBAL:
        return sv_global(m, noun, weights)
    raise ValueError(f"unknown model {model!r}")


def global_weights(m: CoocMatrix) -> GlobalWeights:
    if m.total <= 0:
        raise ValueError("global weights need a non-empty matrix")
    p = {v: Fraction(s, m.total) for v, s in sorted(m.row_sums.items())}
    return GlobalWeights(p, m.total)


def choice_ratio(r: Ranking):
    """Score of the first choice over the second, or NO_DATA."""
    if len(r.candidates) < 2:
        return NO_DATA
    top, second = r.candidates[0].score, r.candidates[1].score
    if second == 0:
        return float("inf")
    return float(Fraction(top) / Fraction(second))


def iterate_global(m: CoocMatrix, rounds: int) -> GlobalWeights:
    """Re-estimate verb weights from the verbs chosen as light.

    Each round picks the top verb for every nominal under the current
    weights, then recomputes the weights from the chosen cells only; cells
    of verbs that lost are treated as non-light and dropped entirely.
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    weights = global_weights(m)
    for _ in range(rounds):
        chosen = {}
        for noun in m.nouns:
            r = sv_global(m, noun, weights)
            if r.no_data:
                continue
            top = r.candidates[0]
            chosen[(top.verb, noun)] = top.raw_count
        if not chosen:
            raise ValueError("no nominal has data; cannot re-estimate weights")
        weights = global_weights(CoocMatrix(chosen))
    return weights

import random
from pathlib import Path

import pytest

from svlight.cooc import CoocMatrix

FIXTURES = Path(__file__).parent / "fixtures"
DATA = Path(__file__).parent.parent / "src" / "svlight" / "data"


def random_matrix(rng, max_verbs=20, max_nouns=10, max_count=50, density=0.4):
    """Sparse random counts over at most ``max_verbs`` x ``max_nouns``."""
    verbs = [f"v{i:02d}" for i in range(rng.randint(1, max_verbs))]
    nouns = [f"n{j:02d}" for j in range(rng.randint(1, max_nouns))]
    entries = {}
    for v in verbs:
        for n in nouns:
            if rng.random() < density:
                entries[(v, n)] = rng.randint(1, max_count)
    if not entries:
        entries[(verbs[0], nouns[0])] = rng.randint(1, max_count)
    return CoocMatrix(entries)


def demand_entries():
    # demand column {meet: 5, make: 4}; row sums meet = 10, make = 100
    return {
        ("meet", "demand"): 5, ("make", "demand"): 4,
        ("meet", "requirement"): 5,
        ("make", "decision"): 60, ("make", "attempt"): 36,
    }


@pytest.fixture
def demand_matrix():
    return CoocMatrix(demand_entries())


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def fixtures_dir():
    return FIXTURES

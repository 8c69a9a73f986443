import random
from fractions import Fraction
from pathlib import Path

import pytest

from app.models.polynomial import Polynomial

GOLDEN_DIR = Path(__file__).parent / "golden"
REPO_ROOT = Path(__file__).parent.parent


def random_poly(
    rng: random.Random,
    arity: int,
    max_degree: int = 4,
    max_terms: int = 5,
    max_num: int = 10,
    max_den: int = 10,
) -> Polynomial:
    """Bounded random polynomial: |num| <= max_num, 1 <= den <= max_den"""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        total = rng.randint(0, max_degree)
        exps = [0] * arity
        for _ in range(total):
            exps[rng.randrange(arity)] += 1
        terms[tuple(exps)] = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    return Polynomial(arity, terms)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture
def repo_root() -> Path:
    return REPO_ROOT

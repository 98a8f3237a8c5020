import random

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=None,
        help="seed for the randomized partition checks (drawn at random when omitted)",
    )


@pytest.fixture
def rng(request):
    """Random source for the randomized checks, reported so a failure can be replayed"""
    seed = request.config.getoption("--seed")
    if seed is None:
        seed = random.randrange(2**32)
    print(f"randomized checks use --seed {seed}")
    return random.Random(seed)

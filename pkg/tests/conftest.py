import pytest

from satsemi import NumericalSemigroup

EXAMPLE_GENS = (5, 33, 34, 36, 37)


@pytest.fixture(scope="session")
def example():
    """The running example: multiplicity 5, conductor 33."""
    return NumericalSemigroup.from_generators(EXAMPLE_GENS)

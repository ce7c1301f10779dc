from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sclvol.plcircle import PLMap, compose
from sclvol.sampling import generators

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

GENS = generators(5)
GEN_LIST = list(GENS.values()) + [g.inverse for g in GENS.values()]


def word_to_map(indices) -> PLMap:
    x = PLMap.identity()
    for i in indices:
        x = compose(x, GEN_LIST[i])
    return x


t_elements = st.lists(st.integers(0, len(GEN_LIST) - 1), max_size=4).map(word_to_map)
dyadics = st.builds(
    lambda n, k: Fraction(n % (1 << k), 1 << k), st.integers(0, 10**6), st.integers(0, 12)
)


@pytest.fixture
def F():
    return Fraction

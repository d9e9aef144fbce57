import random

import pytest

from support import fig_divisor, fig_graph


@pytest.fixture
def g_ex():
    return fig_graph()


@pytest.fixture
def d_ex(g_ex):
    return fig_divisor(g_ex)


@pytest.fixture
def rng():
    return random.Random(20240817)

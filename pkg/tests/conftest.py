import pytest

import oracles


@pytest.fixture
def rps():
    import distgames as dg

    return dg.new_bimatrix(oracles.RPS_MATRIX, zero_sum=True)


@pytest.fixture
def vector_game_2x2():
    return oracles.two_by_two_vector_game()


@pytest.fixture
def coordination_game():
    return oracles.coordination_vector_game()


@pytest.fixture
def degenerate_game():
    return oracles.degenerate_vector_game()

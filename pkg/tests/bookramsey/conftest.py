import os
import pytest


@pytest.fixture()
def ini_filepath(request):
    return os.path.abspath(
        os.path.join(
            os.path.dirname(__file__), request.param
        )
    )


INI = 'bookramsey.ini'

PROFILE_A = {
    'workers': '1',
    'shard_order': '4',
    'blowup_budget': '100000',
    'epsilon': '0.1',
    'dk_lookahead': '1'
}
PROFILE_B = {
    'workers': '2',
    'shard_order': '3',
    'blowup_budget': '5000',
    'epsilon': '0.25',
    'dk_lookahead': '2'
}

RANDOM_SUITE = [
    (3 + (seed * 7) % 62, 0.1 + (seed % 8) * 0.1, seed)
    for seed in range(200)
]

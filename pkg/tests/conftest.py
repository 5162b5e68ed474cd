import pytest

from nuschroder.paths import rational_base


@pytest.fixture
def nu35():
    return rational_base(3, 5)

import pytest

from flathol.fixtures import nonabelian44, quad22, trivial, wolf42
from flathol.search import sample_valid_specs


@pytest.fixture(scope="session")
def fix_quad22():
    return quad22()


@pytest.fixture(scope="session")
def fix_wolf42():
    return wolf42()


@pytest.fixture(scope="session")
def fix_trivial22():
    return trivial(2, 2)


@pytest.fixture(scope="session")
def fix_nonabelian44():
    return nonabelian44()


@pytest.fixture(scope="session")
def all_fixture_specs(fix_quad22, fix_wolf42, fix_trivial22, fix_nonabelian44):
    return [fix_quad22, fix_wolf42, fix_trivial22, fix_nonabelian44]


@pytest.fixture(scope="session")
def valid_spec_sample():
    """A modest deterministic sample of word-valid specs for property tests."""
    return sample_valid_specs(120, seed=1139)

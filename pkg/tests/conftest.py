import pytest

from shtopo import (
    CorpusConfig,
    enumerate_lattices,
    expand_spec_ranges,
    ideal_lattice_zn,
    named_lattice,
)


@pytest.fixture(scope="session")
def z12():
    return ideal_lattice_zn(12)


@pytest.fixture(scope="session")
def m3():
    return named_lattice("m3")


@pytest.fixture(scope="session")
def n5():
    return named_lattice("n5")


@pytest.fixture(scope="session")
def small_corpus():
    """One representative per isomorphism class, sizes 1..5."""
    return list(enumerate_lattices(5))


def acceptance_config() -> CorpusConfig:
    """The corpus the acceptance criteria run on."""
    specs = tuple(expand_spec_ranges("zn:2..60")) + (
        "m3", "n5", "b2", "chain:1", "chain:6", "prod(zn:4,zn:9)",
    )
    return CorpusConfig(
        exhaustive_max=5,
        specs=specs,
        random_count=8,
        random_size=8,
        seed=7,
    )

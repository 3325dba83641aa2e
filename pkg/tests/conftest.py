import pytest

from charcond.tables import load_corpus, load_manifest


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def manifest():
    return load_manifest()


@pytest.fixture(scope="session")
def group_primes(manifest):
    """All (group name, prime) pairs covered by the shipped corpus."""
    return [(entry["name"], p)
            for entry in manifest["groups"] for p in entry["primes"]]

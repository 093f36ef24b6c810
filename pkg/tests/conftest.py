"""Pytest configuration and fixtures."""

import pytest

from indexdens.characters.group import build_character_group, find_character
from indexdens.core.settings import TEST_TERMS, ComputeSettings
from indexdens.density.model import GENERIC_R1, Q_SQRT5_GOLDEN, Q_SQRT5_SECOND
from indexdens.harness.fields import GroupSpec, QuadraticFieldSpec


@pytest.fixture
def psi():
    """The character mod 5 with psi(2) = i."""
    return find_character(5, "chi(2)=i")


@pytest.fixture
def characters_mod5():
    """All four characters mod 5, principal first."""
    _, characters = build_character_group(5)
    return characters


@pytest.fixture
def generic_model():
    return GENERIC_R1


@pytest.fixture
def golden_model():
    """Q(sqrt5) with G = <(1+sqrt5)/2>."""
    return Q_SQRT5_GOLDEN


@pytest.fixture
def second_model():
    """Q(sqrt5) with G = <-(5+sqrt5)/2>."""
    return Q_SQRT5_SECOND


@pytest.fixture
def rationals():
    return QuadraticFieldSpec.rational()


@pytest.fixture
def sqrt5_field():
    return QuadraticFieldSpec.of(5)


@pytest.fixture
def golden_group(sqrt5_field):
    return GroupSpec.parse(sqrt5_field, ["(1+sqrt5)/2"])


@pytest.fixture
def second_group(sqrt5_field):
    return GroupSpec.parse(sqrt5_field, ["-(5+sqrt5)/2"])


@pytest.fixture
def fast_settings():
    """Settings small enough for the default test run."""
    return ComputeSettings.default().with_overrides(n_terms=TEST_TERMS)


@pytest.fixture
def model_file(tmp_path, golden_model):
    """The golden-ratio model saved as JSON."""
    path = tmp_path / "golden.json"
    golden_model.save(str(path))
    return path

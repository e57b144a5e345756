"""
Shared pytest fixtures - worked-example ideals and a seeded engine
"""
import sys
from pathlib import Path

import pytest

# Add project root to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.ideal_parser import load_ideal, parse_ideal  # noqa: E402

IDEALS = PROJECT_ROOT / "ideals"


@pytest.fixture
def ideals_dir() -> Path:
    return IDEALS


@pytest.fixture
def surprise():
    return load_ideal(IDEALS / "surprise.ideal")


@pytest.fixture
def contraex_i():
    return load_ideal(IDEALS / "contraex-I.ideal")


@pytest.fixture
def contraex_j():
    return load_ideal(IDEALS / "contraex-J.ideal")


@pytest.fixture
def staircase():
    return load_ideal(IDEALS / "staircase.ideal")


@pytest.fixture
def ideal():
    """Parse inline ideal text: ideal("x^2; y^4") or ideal("x; y; z", "x, y, z")."""

    def build(gens: str, variables: str = "x, y"):
        return parse_ideal(f"vars: {variables}\ngens: {gens}\n")

    return build

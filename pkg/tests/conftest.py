"""Pytest configuration for arrangement-lattice tests.

Shared arrangements used across modules live here as fixtures; several
also exist as files under ``tests/data/valid`` for the CLI and parser
tests.
"""

import pytest
from dotenv import load_dotenv

from arrangement_lattice.chambers.complex import build
from arrangement_lattice.chambers.models import ChamberComplex
from arrangement_lattice.geometry.models import Arrangement

# Load .env so settings overrides apply to tests too
load_dotenv()


def tangent_lines(count: int) -> Arrangement:
    """Tangents to y = x^2 at t = 0..count-1; generic (nodal, no parallels)."""
    return Arrangement.from_coefficients([(2 * t, -1, -t * t) for t in range(count)])


@pytest.fixture
def triangle() -> Arrangement:
    """x = 0, y = 0, x + y = 1."""
    return Arrangement.from_coefficients([(1, 0, 0), (0, 1, 0), (1, 1, -1)])


@pytest.fixture
def triangle_complex(triangle: Arrangement) -> ChamberComplex:
    return build(triangle)


@pytest.fixture
def grid() -> Arrangement:
    """x = 0, 1, 2 and y = 0, 1, 2: four unit squares, two parallel classes of three."""
    return Arrangement.from_coefficients(
        [(1, 0, 0), (1, 0, -1), (1, 0, -2), (0, 1, 0), (0, 1, -1), (0, 1, -2)]
    )


@pytest.fixture
def grid_complex(grid: Arrangement) -> ChamberComplex:
    return build(grid)


@pytest.fixture
def five_generic() -> Arrangement:
    return tangent_lines(5)


@pytest.fixture
def six_generic() -> Arrangement:
    return tangent_lines(6)


@pytest.fixture
def six_parallel() -> Arrangement:
    """Three parallel pairs: x = 0, 1; y = 0, 1; x + y = 1/2, 3."""
    return Arrangement.from_coefficients(
        [(1, 0, 0), (1, 0, -1), (0, 1, 0), (0, 1, -1), (1, 1, "-1/2"), (1, 1, -3)]
    )


@pytest.fixture
def not_nodal() -> Arrangement:
    """Three lines through the origin."""
    return Arrangement.from_coefficients([(1, 0, 0), (0, 1, 0), (1, -1, 0)])

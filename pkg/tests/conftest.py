from __future__ import annotations

import pytest
from hypothesis import strategies as st

from z2z4perm import presets
from z2z4perm.code import Z2Z4Code
from z2z4perm.core import MixedVector



@pytest.fixture(scope="session")
def ex3():
    return presets.load_code("example3")


@pytest.fixture(scope="session")
def ex4():
    return presets.load_code("example4")


@pytest.fixture(scope="session")
def sec2():
    return presets.load_code("mixed5")


@pytest.fixture(scope="session")
def nl5():
    return presets.load_code("nonlinear5")


@pytest.fixture(scope="session")
def pd3():
    return presets.load_pdset("example3")


@pytest.fixture(scope="session")
def pd4():
    return presets.load_pdset("example4")


def extra_codes() -> dict[str, Z2Z4Code]:
    """Small hand-picked codes beyond the presets, several not in standard form."""
    mv = MixedVector.parse
    return {
        "binary_only": Z2Z4Code(4, 0, [mv("1 1 0 0 | -"), mv("0 1 1 1 | -")]),
        "order_two_only": Z2Z4Code(1, 3, [mv("1 | 2 0 2"), mv("0 | 0 2 2")]),
        "scrambled": Z2Z4Code(2, 3, [mv("0 1 | 1 1 1"), mv("1 1 | 0 0 2"), mv("0 0 | 0 2 2")]),
        "unit_in_front": Z2Z4Code(1, 3, [mv("1 | 1 2 0"), mv("0 | 3 3 1"), mv("1 | 2 0 0")]),
        "repetition": Z2Z4Code(2, 1, [mv("1 1 | 2")]),
        "nonlinear6": Z2Z4Code(0, 6, [mv("- | 2 2 0 2 0 0"), mv("- | 1 2 2 1 1 0"), mv("- | 3 3 1 0 0 1")]),
    }


def all_test_codes() -> dict[str, Z2Z4Code]:
    codes = {name: presets.load_code(name) for name in presets.names()}
    codes.update(extra_codes())
    return codes


@st.composite
def random_codes(draw, max_alpha=3, max_beta=4, max_rows=4):
    alpha = draw(st.integers(0, max_alpha))
    beta = draw(st.integers(0 if alpha else 1, max_beta))
    k = draw(st.integers(1, max_rows))
    rows = []
    for _ in range(k):
        bits = draw(st.lists(st.integers(0, 1), min_size=alpha, max_size=alpha))
        quats = draw(st.lists(st.integers(0, 3), min_size=beta, max_size=beta))
        rows.append(MixedVector(tuple(bits), tuple(quats)))
    if all(r.is_zero() for r in rows):
        rows[0] = MixedVector(tuple([1] * alpha), tuple([1] * beta))
    return Z2Z4Code(alpha, beta, rows)

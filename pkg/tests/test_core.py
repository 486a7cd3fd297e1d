import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from z2z4perm.core import (
    BinaryVector,
    CoordSet,
    MixedVector,
    gray,
    gray_inverse,
    hamming_distance,
    hamming_weight,
    inner_product,
    lee_distance,
    lee_weight,
    phi1,
    phi2,
    restrict,
)
from z2z4perm.errors import FormatError

bv = BinaryVector.parse
mv = MixedVector.parse


def all_mixed(alpha, beta):
    for bits in itertools.product((0, 1), repeat=alpha):
        for quats in itertools.product(range(4), repeat=beta):
            yield MixedVector(bits, quats)


@st.composite
def mixed_pair(draw, n_extra=0):
    alpha = draw(st.integers(0, 4))
    beta = draw(st.integers(0, 5))
    vecs = []
    for _ in range(2 + n_extra):
        bits = draw(st.lists(st.integers(0, 1), min_size=alpha, max_size=alpha))
        quats = draw(st.lists(st.integers(0, 3), min_size=beta, max_size=beta))
        vecs.append(MixedVector(tuple(bits), tuple(quats)))
    return vecs


class TestGray:
    def test_two_maps_to_one_one(self):
        assert gray(mv("- | 2")) == bv("11")

    def test_zero(self):
        assert gray(MixedVector.zeros(2, 3)) == BinaryVector.zeros(8)

    def test_all_ones_quats(self):
        assert gray(mv("- | 1 1 1 1")) == bv("01010101")

    def test_each_symbol(self):
        assert [str(gray(MixedVector((), (q,)))) for q in range(4)] == ["00", "01", "11", "10"]

    def test_binary_part_copied(self):
        assert gray(mv("1 0 1 | 3")) == bv("10110")

    @pytest.mark.parametrize(
        "word, alpha, expected",
        [("0101", 0, "- | 1 1"), ("01010100", 0, "- | 1 1 1 0"), ("10", 2, "1 0 | -")],
    )
    def test_inverse_examples(self, word, alpha, expected):
        assert gray_inverse(bv(word), alpha) == mv(expected)

    def test_inverse_rejects_odd_tail(self):
        with pytest.raises(ValueError):
            gray_inverse(bv("010"), 0)

    @pytest.mark.parametrize("alpha,beta", [(0, 3), (2, 2), (1, 3)])
    def test_round_trips_exhaustive(self, alpha, beta):
        for v in all_mixed(alpha, beta):
            assert gray_inverse(gray(v), alpha) == v
        for bits in itertools.product((0, 1), repeat=alpha + 2 * beta):
            w = BinaryVector(bits)
            assert gray(gray_inverse(w, alpha)) == w


class TestWeights:
    @pytest.mark.parametrize("text, w", [("- | 2 3", 3), ("- | 0 0", 0), ("- | 3 0", 1), ("1 1 | 2 1", 5)])
    def test_lee_weight(self, text, w):
        assert lee_weight(mv(text)) == w

    def test_hamming(self):
        assert hamming_weight(bv("0110")) == 2
        assert hamming_distance(bv("0110"), bv("1100")) == 2

    @pytest.mark.parametrize("alpha,beta", [(a, b) for a in range(3) for b in range(4)])
    def test_gray_isometry_exhaustive(self, alpha, beta):
        vs = list(all_mixed(alpha, beta))
        for u in vs:
            assert lee_weight(u) == hamming_weight(gray(u))
            for v in vs:
                assert lee_distance(u, v) == hamming_distance(gray(u), gray(v))


class TestInnerProduct:
    def test_generator_against_parity_row(self):
        assert inner_product(mv("- | 3 2 1 0"), mv("- | 1 0 1 2")) == 0

    def test_with_zero(self):
        u = mv("1 0 | 3 1")
        assert inner_product(u, MixedVector.zeros(2, 2)) == 0

    def test_binary_part_counts_double(self):
        # 2*(1*1 + 1*0) + 1*3
        assert inner_product(mv("1 1 | 1"), mv("1 0 | 3")) == 1

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            inner_product(mv("1 | 1"), mv("- | 1 1"))

    @given(mixed_pair(n_extra=1))
    def test_symmetric_and_additive(self, vecs):
        u, v, w = vecs
        assert inner_product(u, v) == inner_product(v, u)
        assert inner_product(u + w, v) == (inner_product(u, v) + inner_product(w, v)) % 4


class TestMixedArithmetic:
    @given(mixed_pair(n_extra=1))
    def test_group_laws(self, vecs):
        u, v, w = vecs
        assert (u + v) + w == u + (v + w)
        assert (u + u + u + u).is_zero()
        assert (u - v) + v == u
        assert 3 * u == -u

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            MixedVector((2,), ())
        with pytest.raises(ValueError):
            MixedVector((), (4,))

    def test_text_form(self):
        assert str(mv("1 0 | 3 2 1 0")) == "1 0 | 3 2 1 0"
        assert str(mv("- | 3 2")) == "- | 3 2"
        assert str(mv("1 | -")) == "1 | -"

    @pytest.mark.parametrize("text", ["1 0 3 2", "1 | 2 | 3", "x | 1", "1 | 5"])
    def test_text_errors(self, text):
        with pytest.raises(FormatError):
            mv(text)

    def test_binary_text_errors(self):
        with pytest.raises(FormatError):
            bv("0120")


class TestRestrict:
    def test_example_positions(self):
        assert restrict(bv("00010101"), CoordSet((5, 6, 7, 8))) == bv("0101")

    def test_identity(self):
        v = bv("1011001")
        assert restrict(v, CoordSet(tuple(range(1, 8)))) == v

    def test_sixteen(self):
        v = bv("1111110001111111")
        assert restrict(v, CoordSet((11, 13, 14, 15, 16))) == bv("11111")

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            restrict(bv("01"), CoordSet((3,)))

    def test_coordset_validation(self):
        with pytest.raises(ValueError):
            CoordSet((2, 1))
        with pytest.raises(ValueError):
            CoordSet((0, 1))
        assert CoordSet.of([3, 1, 2]).positions == (1, 2, 3)
        assert CoordSet((2, 4)).complement(5).positions == (1, 3, 5)


def test_phi_helpers():
    # alpha = 2: quaternary coordinate 3 (the first one) covers binary positions 3 and 4
    assert (phi1(2, 3), phi2(2, 3)) == (3, 4)
    assert (phi1(0, 6), phi2(0, 6)) == (11, 12)

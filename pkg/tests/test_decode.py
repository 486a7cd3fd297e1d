import itertools

import pytest

import oracles
from z2z4perm import presets
from z2z4perm.code import Z2Z4Code, is_binary_linear
from z2z4perm.core import BinaryVector, CoordSet, MixedVector, hamming_weight, lee_weight, restrict
from z2z4perm.decode import (
    PDSet,
    decode_alternative,
    decode_syndrome,
    error_patterns,
    find_eq10_counterexample,
    format_pdset,
    info_correct,
    parse_pdset,
    search_pd_set,
    syndrome,
    verify_pd_set,
)
from z2z4perm.errors import ConfigurationError, FormatError
from z2z4perm.perm import Permutation, apply, generate_group, parse_cycles, power

bv = BinaryVector.parse
Y3 = bv("01010100")
X3 = bv("01010101")
X4 = BinaryVector((1,) * 16)
Y4 = bv("1111111111110100")


def corrupt(x, support):
    bits = list(x.bits)
    for i in support:
        bits[i - 1] ^= 1
    return BinaryVector(tuple(bits))


def codewords(code):
    return [BinaryVector(tuple(int(b) for b in row)) for row in code.codewords()]


class TestSyndrome:
    def test_received_word(self, ex3):
        s = syndrome(ex3, Y3)
        assert s == MixedVector((), (2, 3))
        assert lee_weight(s) == 3

    def test_shifted_word(self, ex3):
        s = syndrome(ex3, apply(presets.theta(), Y3))
        assert s == MixedVector((), (3, 0))
        assert lee_weight(s) == 1

    def test_codewords_have_zero_syndrome(self, ex4):
        for x in codewords(ex4):
            assert not any(syndrome(ex4, x).quats)

    def test_length(self, ex3):
        with pytest.raises(ValueError):
            syndrome(ex3, bv("0101"))


class TestSyndromeDecoder:
    def test_example3_trace(self, ex3, pd3):
        out = decode_syndrome(ex3, pd3, Y3)
        assert out.ok
        assert out.codeword == X3
        assert out.info == bv("0101")
        assert out.perm_used == presets.theta()
        assert out.errors_corrected == 1

    def test_codeword(self, ex3, pd3):
        out = decode_syndrome(ex3, pd3, X3)
        assert out.ok and out.perm_used.is_identity() and out.errors_corrected == 0

    def test_two_errors_match_oracle(self, ex3, pd3):
        # beyond t = 1 the decoder must either fail or return a nearest codeword
        words = oracles.gray_image(ex3.generators, 0, 4)
        y = corrupt(X3, (1, 2))
        out = decode_syndrome(ex3, pd3, y)
        near = oracles.nearest(words, y.bits)
        assert near[0][0] == 2
        assert not out.ok

    def test_gate(self, ex4, pd4, nl5):
        with pytest.raises(ConfigurationError, match="gamma == kappa"):
            decode_syndrome(ex4, pd4, Y4)
        pd = PDSet((Permutation.identity(10),), nl5.info_set, 1)
        with pytest.raises(ConfigurationError):
            decode_syndrome(nl5, pd, BinaryVector.zeros(10))

    def test_wrong_info_set(self, ex3):
        pd = PDSet((Permutation.identity(8),), CoordSet((1, 2, 3, 4)), 1)
        with pytest.raises(ConfigurationError):
            decode_syndrome(ex3, pd, X3)


class TestInfoCorrect:
    def test_example4_received(self, ex4):
        from z2z4perm.encode import encode

        f = encode(restrict(Y4, ex4.info_set), ex4)
        assert restrict(Y4, ex4.info_set) == bv("10100")
        assert hamming_weight(Y4 + f) == 5
        assert not info_correct(ex4, Y4)

    def test_example4_shifted(self, ex4):
        from z2z4perm.encode import encode

        z = apply(presets.thetas()["theta1"], Y4)
        assert restrict(z, ex4.info_set) == bv("11111")
        assert hamming_weight(z + encode(restrict(z, ex4.info_set), ex4)) == 3
        assert info_correct(ex4, z)

    def test_codeword(self, ex4):
        assert info_correct(ex4, X4)


class TestAlternativeDecoder:
    def test_example4_trace(self, ex4, pd4):
        out = decode_alternative(ex4, pd4, Y4)
        assert out.ok
        assert out.codeword == X4
        assert out.info == bv("11111")
        assert out.perm_used == presets.thetas()["theta1"]
        assert out.errors_corrected == 3

    def test_example3_trace(self, ex3, pd3):
        out = decode_alternative(ex3, pd3, Y3)
        assert out.codeword == X3 and out.info == bv("0101")

    def test_codeword(self, ex4, pd4):
        out = decode_alternative(ex4, pd4, X4)
        assert out.ok and out.perm_used.is_identity()

    def test_example3_single_errors(self, ex3, pd3):
        words = oracles.gray_image(ex3.generators, 0, 4)
        for x in codewords(ex3):
            for i in range(1, 9):
                y = corrupt(x, (i,))
                out = decode_alternative(ex3, pd3, y)
                near = oracles.nearest(words, y.bits)
                assert len(near) == 1
                assert out.codeword == x and out.codeword.bits == near[0][1]

    def test_failure_is_a_value(self, ex3, pd3):
        out = decode_alternative(ex3, pd3, corrupt(X3, (1, 2)))
        assert out.status == "failure" and out.codeword is None

    def test_decoders_agree_on_example3(self, ex3, pd3):
        for x in codewords(ex3):
            for sup in error_patterns(8, 1):
                y = corrupt(x, sup)
                assert decode_alternative(ex3, pd3, y) == decode_syndrome(ex3, pd3, y)

    def test_nonstandard_coordinates(self):
        # a code whose standard form needs a column permutation still decodes
        mv = MixedVector.parse
        code = Z2Z4Code(0, 4, [mv("- | 1 0 2 3"), mv("- | 0 1 3 2")])
        assert not code.std.col_perm.is_identity()
        assert code.t >= 1
        group = [p for p in _cyclic_shifts(code)]
        pd = search_pd_set(code, group, code.info_set, code.t)
        assert pd is not None
        for x in codewords(code):
            for sup in error_patterns(code.n, code.t):
                assert decode_alternative(code, pd, corrupt(x, sup)).codeword == x


def _cyclic_shifts(code):
    # every permutation of the 8 positions that is an automorphism, by brute force
    # over the dihedral-like shifts of quaternary coordinate pairs
    from z2z4perm.perm import is_automorphism

    out = []
    for order in itertools.permutations(range(4)):
        image = [0] * 8
        for i, j in enumerate(order):
            image[2 * i] = 2 * j + 1
            image[2 * i + 1] = 2 * j + 2
        p = Permutation(tuple(image))
        if is_automorphism(p, code):
            out.append(p)
    for p in list(out):
        swap = Permutation(tuple(x + (1 if x % 2 else -1) for x in range(1, 9)))
        from z2z4perm.perm import compose

        q = compose(swap, p)
        if is_automorphism(q, code):
            out.append(q)
    return out


def brute_verify(pd):
    """Double loop: for each pattern, scan every permutation."""
    n = pd.n
    for sup in error_patterns(n, pd.radius):
        e = BinaryVector(tuple(1 if i in sup else 0 for i in range(1, n + 1)))
        if not any(not any(restrict(apply(p, e), pd.info_set).bits) for p in pd.perms):
            return False, e
    return True, None


class TestPDSets:
    def test_example3(self, pd3):
        res = verify_pd_set(pd3)
        assert res.ok and res.patterns == 9
        assert (res.ok, res.witness) == brute_verify(pd3)

    def test_example4(self, pd4):
        res = verify_pd_set(pd4)
        assert res.ok and res.patterns == 1 + 16 + 120 + 560
        assert brute_verify(pd4) == (True, None)

    def test_identity_only_fails(self):
        pd = PDSet((Permutation.identity(6),), CoordSet((2, 5)), 1)
        res = verify_pd_set(pd)
        assert not res.ok
        assert res.witness == BinaryVector.unit(6, 2)
        assert (res.ok, res.witness) == brute_verify(pd)

    def test_partial_sets_agree_with_oracle(self, ex4, pd4):
        for k in (1, 2, 3, 5, 8):
            pd = PDSet(pd4.perms[:k], pd4.info_set, 3)
            res = verify_pd_set(pd)
            assert (res.ok, res.witness) == brute_verify(pd)
        th = presets.theta()
        for r in (0, 1, 2):
            pd = PDSet((th, power(th, 2)), CoordSet((5, 6, 7, 8)), r)
            res = verify_pd_set(pd)
            assert (res.ok, res.witness) == brute_verify(pd)

    def test_identity_first(self):
        th = presets.theta()
        pd = PDSet((th, Permutation.identity(8), th), CoordSet((5, 6, 7, 8)), 1)
        assert pd.perms == (Permutation.identity(8), th)

    def test_search_example3(self, ex3):
        cands = generate_group([presets.theta()])
        pd = search_pd_set(ex3, cands, ex3.info_set, 1)
        assert pd is not None and len(pd) <= 4
        assert verify_pd_set(pd).ok
        assert set(p.image for p in pd.perms) <= {p.image for p in cands}

    def test_search_trivial(self, ex3):
        pd = search_pd_set(ex3, [Permutation.identity(8)], ex3.info_set, 0)
        assert pd.perms == (Permutation.identity(8),)

    def test_search_example4(self, ex4, pd4):
        pd = search_pd_set(ex4, pd4.perms, ex4.info_set, 3)
        assert pd is not None and verify_pd_set(pd).ok
        assert len(pd) <= len(pd4)

    def test_search_impossible(self, ex3):
        assert search_pd_set(ex3, [Permutation.identity(8)], ex3.info_set, 1) is None

    def test_search_rejects_non_automorphism(self, ex3):
        with pytest.raises(ConfigurationError, match=r"\(1,2\)"):
            search_pd_set(ex3, [parse_cycles("(1,2)", 8)], ex3.info_set, 1)

    def test_file_round_trip(self, pd4):
        again = parse_pdset(format_pdset(pd4), 16)
        assert again == pd4

    def test_file_errors(self):
        with pytest.raises(FormatError):
            parse_pdset("t: 1\n()\n", 8)
        with pytest.raises(FormatError, match="line 3"):
            parse_pdset("info_set: 5,6,7,8\nt: 1\n(1,2\n", 8)


class TestEq10Counterexample:
    def test_gamma_equals_kappa(self, ex3):
        assert find_eq10_counterexample(ex3) is None

    def test_t_zero(self, sec2):
        assert sec2.t == 0
        assert find_eq10_counterexample(sec2) is None

    def test_nonlinear_code(self, nl5):
        words = oracles.gray_image(nl5.generators, 0, 5)
        assert not oracles.is_closed_under_addition(words)
        assert nl5.ctype.gamma > nl5.ctype.kappa
        e = find_eq10_counterexample(nl5)
        assert e is not None
        assert hamming_weight(e) <= nl5.t
        assert not any(restrict(e, nl5.info_set).bits)
        assert lee_weight(syndrome(nl5, e)) > nl5.t

    def test_nonlinear_six(self):
        from conftest import extra_codes

        code = extra_codes()["nonlinear6"]
        assert not is_binary_linear(code)
        e = find_eq10_counterexample(code)
        assert e is not None and lee_weight(syndrome(code, e)) > code.t

    def test_exhaustive_agreement(self, nl5, ex3):
        # the finder returns None exactly when no violating pattern exists
        for code in (nl5, ex3):
            viol = [
                sup
                for sup in error_patterns(code.n, code.t, avoid=code.info_set)
                if lee_weight(syndrome(code, corrupt(BinaryVector.zeros(code.n), sup))) > code.t
            ]
            assert (find_eq10_counterexample(code) is None) == (not viol)

"""Standard information set and systematic encoding of Z2Z4-linear codes."""

from __future__ import annotations

from collections.abc import Sequence

from .code import CodeType, StandardForm, Z2Z4Code
from .core import BinaryVector, CoordSet, MixedVector, gray, gray_inverse, phi1, phi2
from .perm import apply


def standard_info_set(ct: CodeType) -> CoordSet:
    """J = J1 u J2 u J3 in standard-form Gray coordinates."""
    a, b, g, d, k = ct.alpha, ct.beta, ct.gamma, ct.delta, ct.kappa
    j1 = range(1, k + 1)
    j2 = [phi1(a, a + b + k - g - d + i) for i in range(1, g - k + 1)]
    j3 = []
    for coord in range(a + b - d + 1, a + b + 1):
        j3 += [phi1(a, coord), phi2(a, coord)]
    return CoordSet.of([*j1, *j2, *j3])


def split_info(a: BinaryVector, ct: CodeType) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split an information vector into (b, c, d) of lengths kappa, gamma-kappa, 2*delta."""
    if a.n != ct.dimension:
        raise ValueError(f"information vector has length {a.n}, expected {ct.dimension}")
    k, g = ct.kappa, ct.gamma
    return a.bits[:k], a.bits[k:g], a.bits[g:]


def _combine(coeffs_two: Sequence[int], coeffs_four: Sequence[int], std: StandardForm) -> MixedVector:
    rows = std.rows
    ct = std.ctype
    x = MixedVector.zeros(ct.alpha, ct.beta)
    for c, row in zip(coeffs_two, rows[: ct.gamma]):
        if c:
            x = x + row
    for c, row in zip(coeffs_four, rows[ct.gamma :]):
        if c:
            x = x + c * row
    return x


def _quats_of(d: tuple[int, ...]) -> tuple[int, ...]:
    return gray_inverse(BinaryVector(d), 0).quats


def _j2(ct: CodeType) -> list[int]:
    base = ct.alpha + ct.beta + ct.kappa - ct.gamma - ct.delta
    return [phi1(ct.alpha, base + i) for i in range(1, ct.gamma - ct.kappa + 1)]


def _mismatch(word: BinaryVector, c: tuple[int, ...], ct: CodeType) -> tuple[int, ...]:
    return tuple(int(word.bits[j - 1] != ci) for j, ci in zip(_j2(ct), c))


def eta(a: BinaryVector, std: StandardForm) -> BinaryVector:
    """Correction bits: eta_i = 1 where bit j_i of the first product disagrees with c_i."""
    b, c, d = split_info(a, std.ctype)
    if not c:
        return BinaryVector(())
    word = gray(_combine(b + c, _quats_of(d), std))
    return BinaryVector(_mismatch(word, c, std.ctype))


def encode_standard(a: BinaryVector, std: StandardForm) -> BinaryVector:
    """Systematic encoding in standard-form coordinates.

    One product by the generator matrix, plus a second one only when the
    correction eta is nonzero.
    """
    b, c, d = split_info(a, std.ctype)
    dq = _quats_of(d)
    word = gray(_combine(b + c, dq, std))
    fix = _mismatch(word, c, std.ctype)
    if not any(fix):
        return word
    c2 = tuple(ci ^ e for ci, e in zip(c, fix))
    return gray(_combine(b + c2, dq, std))


def encode(a: BinaryVector, code: Z2Z4Code) -> BinaryVector:
    """Systematic encoding: ``restrict(encode(a, code), code.info_set) == a``."""
    if a.n != code.ctype.dimension:
        raise ValueError(f"information vector has length {a.n}, expected {code.ctype.dimension}")
    hit = code._encode_cache.get(a.bits)
    if hit is not None:
        return hit
    if code.std.col_perm.is_identity():
        word = encode_standard(a, code.std)
    else:
        # a is indexed by the sorted original positions; reorder into J's order.
        j_std = standard_info_set(code.ctype)
        rank = {pos: r for r, pos in enumerate(code.info_set)}
        a_std = BinaryVector(tuple(a.bits[rank[code.from_std(j)]] for j in j_std))
        word = apply(code.from_std, encode_standard(a_std, code.std))
    code._encode_cache[a.bits] = word
    return word


def encoded_bits(code: Z2Z4Code, info: tuple[int, ...]) -> tuple[int, ...]:
    """``encode`` on a raw bit tuple; hits the per-code cache without validation."""
    hit = code._encode_cache.get(info)
    if hit is None:
        hit = encode(BinaryVector(info), code)
    return hit.bits

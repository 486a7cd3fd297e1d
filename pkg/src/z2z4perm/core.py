"""Mixed binary/quaternary vectors, the Gray map, weights and the Z4 inner product.

Coordinates are 1-based everywhere a caller can see them.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import FormatError

# Gray map on Z4 and its inverse.
_PHI = ((0, 0), (0, 1), (1, 1), (1, 0))
_PHI_INV = {(0, 0): 0, (0, 1): 1, (1, 1): 2, (1, 0): 3}
_LEE = (0, 1, 2, 1)


@dataclass(frozen=True)
class BinaryVector:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"binary entries must be 0 or 1: {bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zeros(cls, n: int) -> BinaryVector:
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> BinaryVector:
        """Weight-one vector with its 1 at (1-based) position ``i``."""
        if not 1 <= i <= n:
            raise IndexError(f"position {i} outside 1..{n}")
        return cls(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> BinaryVector:
        s = "".join(text.split())
        if any(ch not in "01" for ch in s):
            raise FormatError(f"not a bit string: {text!r}")
        return cls(tuple(int(ch) for ch in s))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits, 1) if b)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __add__(self, other: BinaryVector) -> BinaryVector:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BinaryVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class MixedVector:
    """Element of Z2^alpha x Z4^beta."""

    bits: tuple[int, ...]
    quats: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        quats = tuple(int(q) for q in self.quats)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"binary entries must be 0 or 1: {bits}")
        if any(q not in (0, 1, 2, 3) for q in quats):
            raise ValueError(f"quaternary entries must lie in 0..3: {quats}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "quats", quats)

    @classmethod
    def zeros(cls, alpha: int, beta: int) -> MixedVector:
        return cls((0,) * alpha, (0,) * beta)

    @classmethod
    def parse(cls, text: str) -> MixedVector:
        """Parse ``"1 0 | 3 2 1 0"``; an empty side is written as ``-``."""
        if text.count("|") != 1:
            raise FormatError(f"expected exactly one '|' in {text!r}")
        left, right = text.split("|")
        try:
            bits = _parse_digits(left)
            quats = _parse_digits(right)
            return cls(bits, quats)
        except ValueError as exc:
            raise FormatError(f"bad mixed vector {text!r}: {exc}") from None

    @property
    def alpha(self) -> int:
        return len(self.bits)

    @property
    def beta(self) -> int:
        return len(self.quats)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.bits), len(self.quats)

    def _check(self, other: MixedVector) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: MixedVector) -> MixedVector:
        self._check(other)
        return MixedVector(
            tuple(a ^ b for a, b in zip(self.bits, other.bits)),
            tuple((a + b) % 4 for a, b in zip(self.quats, other.quats)),
        )

    def __neg__(self) -> MixedVector:
        return MixedVector(self.bits, tuple((-q) % 4 for q in self.quats))

    def __sub__(self, other: MixedVector) -> MixedVector:
        return self + (-other)

    def __rmul__(self, scalar: int) -> MixedVector:
        # Z4 acts on the binary part through reduction mod 2.
        s = int(scalar) % 4
        return MixedVector(
            tuple((s * b) % 2 for b in self.bits),
            tuple((s * q) % 4 for q in self.quats),
        )

    def is_zero(self) -> bool:
        return not any(self.bits) and not any(self.quats)

    def __str__(self) -> str:
        left = " ".join(map(str, self.bits)) or "-"
        right = " ".join(map(str, self.quats)) or "-"
        return f"{left} | {right}"


def _parse_digits(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(int(tok) for tok in text.split())


@dataclass(frozen=True)
class CoordSet:
    """Strictly increasing set of 1-based coordinate positions."""

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        pos = tuple(int(p) for p in self.positions)
        if any(p < 1 for p in pos):
            raise ValueError(f"coordinates are 1-based: {pos}")
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"coordinates must be strictly increasing: {pos}")
        object.__setattr__(self, "positions", pos)

    @classmethod
    def of(cls, positions: Iterable[int]) -> CoordSet:
        """Build from any iterable of distinct positions, sorting them."""
        pos = sorted(int(p) for p in positions)
        if len(set(pos)) != len(pos):
            raise ValueError(f"repeated coordinate in {pos}")
        return cls(tuple(pos))

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __contains__(self, i: object) -> bool:
        return i in self.positions

    def complement(self, n: int) -> CoordSet:
        inside = set(self.positions)
        return CoordSet(tuple(i for i in range(1, n + 1) if i not in inside))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.positions)) + "}"


# -- coordinate helpers ------------------------------------------------------


def phi1(alpha: int, coord: int) -> int:
    """First binary position of quaternary coordinate ``coord`` (1-based, > alpha)."""
    return 2 * coord - alpha - 1


def phi2(alpha: int, coord: int) -> int:
    """Second binary position of quaternary coordinate ``coord``."""
    return 2 * coord - alpha


# -- Gray map ----------------------------------------------------------------


def gray(v: MixedVector) -> BinaryVector:
    out = list(v.bits)
    for q in v.quats:
        out.extend(_PHI[q])
    return BinaryVector(tuple(out))


def gray_inverse(v: BinaryVector, alpha: int) -> MixedVector:
    rest = v.n - alpha
    if alpha < 0 or rest < 0:
        raise ValueError(f"alpha={alpha} does not fit length {v.n}")
    if rest % 2:
        raise ValueError(f"quaternary part has odd length {rest}")
    bits = v.bits[:alpha]
    tail = v.bits[alpha:]
    quats = tuple(_PHI_INV[(tail[2 * i], tail[2 * i + 1])] for i in range(rest // 2))
    return MixedVector(bits, quats)


def gray_array(bits: np.ndarray, quats: np.ndarray) -> np.ndarray:
    """Row-wise Gray map of integer arrays; returns a uint8 array of width alpha+2*beta."""
    bits = np.asarray(bits, dtype=np.uint8)
    quats = np.asarray(quats, dtype=np.uint8)
    m = quats.shape[0]
    out = np.empty((m, bits.shape[1] + 2 * quats.shape[1]), dtype=np.uint8)
    out[:, : bits.shape[1]] = bits
    out[:, bits.shape[1] :: 2] = quats >> 1
    out[:, bits.shape[1] + 1 :: 2] = (quats ^ (quats >> 1)) & 1
    return out


def gray_inverse_array(words: np.ndarray, alpha: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise inverse Gray map: returns (bits, quats) integer arrays."""
    words = np.asarray(words, dtype=np.int64)
    hi = words[:, alpha::2]
    lo = words[:, alpha + 1 :: 2]
    return words[:, :alpha], 2 * hi + (hi ^ lo)


# -- weights, distances, inner product ---------------------------------------


def hamming_weight(v: BinaryVector) -> int:
    return sum(v.bits)


def hamming_distance(u: BinaryVector, v: BinaryVector) -> int:
    return hamming_weight(u + v)


def lee_weight(v: MixedVector) -> int:
    return sum(v.bits) + sum(_LEE[q] for q in v.quats)


def lee_distance(u: MixedVector, v: MixedVector) -> int:
    return lee_weight(u - v)


def inner_product(u: MixedVector, v: MixedVector) -> int:
    """Z4-valued inner product; binary entries count as the quaternary 0 and 1."""
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch: {u.shape} vs {v.shape}")
    s = 2 * sum(a * b for a, b in zip(u.bits, v.bits))
    s += sum(a * b for a, b in zip(u.quats, v.quats))
    return s % 4


def restrict(v: BinaryVector, positions: CoordSet | Sequence[int]) -> BinaryVector:
    """The entries of ``v`` at the given positions, in increasing position order."""
    pos = positions.positions if isinstance(positions, CoordSet) else tuple(sorted(positions))
    for i in pos:
        if not 1 <= i <= v.n:
            raise IndexError(f"coordinate {i} outside 1..{v.n}")
    return BinaryVector(tuple(v.bits[i - 1] for i in pos))

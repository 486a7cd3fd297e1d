"""Permutation decoding: the syndrome-based and the systematic-encoding-based variants,
plus PD-set verification and search.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from .code import Z2Z4Code
from .core import (
    BinaryVector,
    CoordSet,
    MixedVector,
    gray_inverse,
    hamming_distance,
    inner_product,
    lee_weight,
    phi2,
    restrict,
)
from .encode import encode, encoded_bits
from .errors import ConfigurationError, FormatError
from .perm import Permutation, apply, inverse, is_automorphism, parse_cycles

DECODED = "decoded"
FAILURE = "failure"


@dataclass(frozen=True)
class PDSet:
    """Permutations intended to move every error of weight <= radius off ``info_set``.

    The identity is always stored first; scanning follows the stored order.
    """

    perms: tuple[Permutation, ...]
    info_set: CoordSet
    radius: int

    def __post_init__(self) -> None:
        perms = tuple(self.perms)
        if not perms:
            raise ValueError("a PD-set needs at least one permutation")
        n = perms[0].n
        if any(p.n != n for p in perms):
            raise ValueError("permutations of different degrees")
        ident = Permutation.identity(n)
        rest = []
        seen = {ident.image}
        for p in perms:
            if p.image not in seen:
                seen.add(p.image)
                rest.append(p)
        object.__setattr__(self, "perms", (ident, *rest))
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")
        if self.info_set.positions and self.info_set.positions[-1] > n:
            raise ValueError(f"information set {self.info_set} exceeds degree {n}")

    @property
    def n(self) -> int:
        return self.perms[0].n

    def __len__(self) -> int:
        return len(self.perms)


@dataclass(frozen=True)
class DecodeOutcome:
    status: str
    perm_used: Permutation | None = None
    codeword: BinaryVector | None = None
    info: BinaryVector | None = None
    errors_corrected: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == DECODED


@dataclass(frozen=True)
class PDVerification:
    ok: bool
    witness: BinaryVector | None = None
    patterns: int = 0
    uncovered: int = 0

    def __bool__(self) -> bool:
        return self.ok


# -- syndromes ---------------------------------------------------------------


def syndrome(code: Z2Z4Code, y: BinaryVector) -> MixedVector:
    if y.n != code.n:
        raise ValueError(f"received word has length {y.n}, code length is {code.n}")
    v = gray_inverse(y, code.alpha)
    return MixedVector((), tuple(inner_product(h, v) for h in code.parity))


def syndrome_weight(code: Z2Z4Code, y: BinaryVector) -> int:
    return lee_weight(syndrome(code, y))


def info_correct(code: Z2Z4Code, y: BinaryVector) -> bool:
    """True iff re-encoding the information positions of ``y`` lands within distance t."""
    if y.n != code.n:
        raise ValueError(f"received word has length {y.n}, code length is {code.n}")
    return hamming_distance(y, encode(restrict(y, code.info_set), code)) <= code.t


# -- decoders ----------------------------------------------------------------


def _check_pdset(code: Z2Z4Code, pdset: PDSet) -> None:
    if pdset.n != code.n:
        raise ValueError(f"PD-set acts on {pdset.n} points, code length is {code.n}")
    if pdset.info_set != code.info_set:
        raise ConfigurationError(
            f"PD-set information set {pdset.info_set} differs from the standard "
            f"information set {code.info_set}"
        )


def _finish(code: Z2Z4Code, y: BinaryVector, pi: Permutation, z: BinaryVector) -> DecodeOutcome:
    x = apply(inverse(pi), encode(restrict(z, code.info_set), code))
    return DecodeOutcome(
        status=DECODED,
        perm_used=pi,
        codeword=x,
        info=restrict(x, code.info_set),
        errors_corrected=hamming_distance(x, y),
    )


def syndrome_decoding_allowed(code: Z2Z4Code) -> bool:
    # The Lee-weight syndrome test only certifies the information positions
    # when gamma == kappa; binary linearity alone is not enough.
    return code.ctype.gamma == code.ctype.kappa


def decode_syndrome(code: Z2Z4Code, pdset: PDSet, y: BinaryVector) -> DecodeOutcome:
    """Classical permutation decoding with the Lee weight of the syndrome as the test."""
    if not syndrome_decoding_allowed(code):
        raise ConfigurationError(
            f"syndrome test is not valid for type {code.ctype}: it requires gamma == kappa"
        )
    _check_pdset(code, pdset)
    t = code.t
    for pi in pdset.perms:
        z = apply(pi, y)
        if syndrome_weight(code, z) <= t:
            return _finish(code, y, pi, z)
    return DecodeOutcome(status=FAILURE)


def decode_alternative(code: Z2Z4Code, pdset: PDSet, y: BinaryVector) -> DecodeOutcome:
    """Permutation decoding that checks the information positions by re-encoding."""
    _check_pdset(code, pdset)
    if y.n != code.n:
        raise ValueError(f"received word has length {y.n}, code length is {code.n}")
    t = code.t
    info_idx = [i - 1 for i in code.info_set]
    for pi in pdset.perms:
        # same test as info_correct(code, apply(pi, y)), on raw tuples
        z = pi.permute_bits(y.bits)
        f = encoded_bits(code, tuple(z[i] for i in info_idx))
        if sum(a ^ b for a, b in zip(z, f)) <= t:
            return _finish(code, y, pi, BinaryVector(z))
    return DecodeOutcome(status=FAILURE)


# -- PD-sets -----------------------------------------------------------------


def error_patterns(n: int, t: int, avoid: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
    """Supports of all vectors of weight <= t, by weight then lexicographically."""
    allowed = [i for i in range(1, n + 1) if i not in set(avoid)]
    for w in range(t + 1):
        yield from itertools.combinations(allowed, w)


def _masks(n: int, t: int) -> tuple[list[tuple[int, ...]], np.ndarray]:
    supports = list(error_patterns(n, t))
    masks = np.array([sum(1 << (i - 1) for i in s) for s in supports], dtype=np.uint64)
    return supports, masks


def _preimage_mask(p: Permutation, info: CoordSet) -> int:
    # pi(e) avoids I exactly when e avoids pi^{-1}(I)
    inv = inverse(p)
    return sum(1 << (inv(i) - 1) for i in info)


def _covered(perms: Sequence[Permutation], info: CoordSet, masks: np.ndarray) -> np.ndarray:
    cov = np.zeros(masks.shape, dtype=bool)
    for p in perms:
        cov |= (masks & np.uint64(_preimage_mask(p, info))) == 0
    return cov


def verify_pd_set(pdset: PDSet) -> PDVerification:
    """Exhaustive check; the witness is the first uncovered pattern by (weight, positions)."""
    n = pdset.n
    if n > 64:
        raise ValueError("verify_pd_set supports length up to 64")
    supports, masks = _masks(n, pdset.radius)
    cov = _covered(pdset.perms, pdset.info_set, masks)
    bad = np.flatnonzero(~cov)
    witness = None
    if bad.size:
        s = supports[int(bad[0])]
        witness = BinaryVector(tuple(1 if i in s else 0 for i in range(1, n + 1)))
    return PDVerification(ok=not bad.size, witness=witness, patterns=len(supports), uncovered=int(bad.size))


def search_pd_set(
    code: Z2Z4Code, candidates: Sequence[Permutation], info_set: CoordSet, t: int
) -> PDSet | None:
    """Greedy cover: keep adding the candidate that displaces the most uncovered patterns."""
    for p in candidates:
        if not is_automorphism(p, code):
            raise ConfigurationError(f"{p} is not a permutation automorphism of the code")
    n = code.n
    _, masks = _masks(n, t)
    ident = Permutation.identity(n)
    chosen = [ident]
    uncovered = ~_covered(chosen, info_set, masks)
    pool = [p for p in candidates if not p.is_identity()]
    cand_masks = [np.uint64(_preimage_mask(p, info_set)) for p in pool]
    while uncovered.any():
        best, gain = -1, 0
        rest = masks[uncovered]
        for idx, cm in enumerate(cand_masks):
            g = int(np.count_nonzero((rest & cm) == 0))
            if g > gain:
                best, gain = idx, g
        if best < 0:
            return None
        chosen.append(pool[best])
        uncovered &= (masks & cand_masks[best]) != 0
    return PDSet(tuple(chosen), info_set, t)


def find_eq10_counterexample(code: Z2Z4Code) -> BinaryVector | None:
    """An error e of weight <= t avoiding J whose Lee syndrome weight exceeds t.

    Patterns touching the second Gray bits of the 2I block columns are tried
    first, since that is where such errors live when gamma > kappa.
    """
    t = code.t
    if t == 0:
        return None
    ct = code.ctype
    a = ct.alpha
    base = ct.alpha + ct.beta + ct.kappa - ct.gamma - ct.delta
    l3 = {code.from_std(phi2(a, base + i)) for i in range(1, ct.gamma - ct.kappa + 1)}
    pats = list(error_patterns(code.n, t, avoid=code.info_set))
    pats.sort(key=lambda s: not (set(s) & l3))
    for s in pats:
        e = BinaryVector(tuple(1 if i in s else 0 for i in range(1, code.n + 1)))
        if syndrome_weight(code, e) > t:
            return e
    return None


# -- PD-set files ------------------------------------------------------------


def parse_pdset(text: str, n: int) -> PDSet:
    """Header lines ``info_set: i1,i2,...`` and ``t: <t>``, then one permutation per line."""
    info = None
    radius = None
    perms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("info_set:"):
            body = line.split(":", 1)[1].replace("{", "").replace("}", "")
            try:
                info = CoordSet.of(int(x) for x in body.replace(",", " ").split())
            except ValueError as exc:
                raise FormatError(f"bad info_set: {exc}", lineno) from None
        elif line.startswith("t:"):
            try:
                radius = int(line.split(":", 1)[1])
            except ValueError:
                raise FormatError(f"bad radius {line!r}", lineno) from None
        else:
            try:
                perms.append(parse_cycles(line, n))
            except FormatError as exc:
                raise FormatError(str(exc), lineno) from None
    if info is None or radius is None:
        raise FormatError("PD-set file needs 'info_set:' and 't:' header lines")
    if not perms:
        perms = [Permutation.identity(n)]
    return PDSet(tuple(perms), info, radius)


def format_pdset(pdset: PDSet) -> str:
    lines = [
        "info_set: " + ",".join(map(str, pdset.info_set)),
        f"t: {pdset.radius}",
    ]
    lines += [str(p) for p in pdset.perms]
    return "\n".join(lines) + "\n"

"""Z2Z4-additive codes: standard form, parity checks, types, membership, distance.

A code is stored in the coordinates the user gave.  Its standard form lives
in permuted coordinates; ``StandardForm.col_perm`` maps original mixed
coordinates to standard-form ones without crossing the binary/quaternary
boundary.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import BinaryVector, CoordSet, MixedVector, gray_array, gray_inverse_array
from .errors import CapExceededError, EmptyCodeError, FormatError
from .perm import Permutation, inverse

DEFAULT_ENUM_CAP = 1 << 24
_CHUNK = 1 << 16


@dataclass(frozen=True)
class CodeType:
    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma, self.delta, self.kappa) < 0:
            raise ValueError(f"negative entry in type {self}")
        if self.kappa > min(self.alpha, self.gamma):
            raise ValueError(f"kappa exceeds min(alpha, gamma) in {self}")
        if self.gamma + self.delta > self.beta + self.kappa:
            raise ValueError(f"gamma + delta exceeds beta + kappa in {self}")

    @property
    def length(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def dimension(self) -> int:
        """log2 of the code size."""
        return self.gamma + 2 * self.delta

    @property
    def free_quats(self) -> int:
        """Width of the leftmost quaternary block (beta + kappa - gamma - delta)."""
        return self.beta + self.kappa - self.gamma - self.delta

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta};{self.gamma},{self.delta};{self.kappa})"


def dual_type(ct: CodeType) -> CodeType:
    return CodeType(
        ct.alpha,
        ct.beta,
        ct.alpha + ct.gamma - 2 * ct.kappa,
        ct.beta - ct.gamma - ct.delta + ct.kappa,
        ct.alpha - ct.kappa,
    )


# -- mixed-coordinate permutations ------------------------------------------


def permute_mixed(p: Permutation, v: MixedVector) -> MixedVector:
    """Move mixed coordinate i to p(i); ``p`` must preserve the binary block."""
    alpha = v.alpha
    out_b = [0] * alpha
    out_q = [0] * v.beta
    for i, b in enumerate(v.bits):
        out_b[p.image[i] - 1] = b
    for i, q in enumerate(v.quats):
        out_q[p.image[alpha + i] - alpha - 1] = q
    return MixedVector(tuple(out_b), tuple(out_q))


def binary_lift(p: Permutation, alpha: int) -> Permutation:
    """The permutation of Gray-image positions induced by a mixed-coordinate permutation."""
    beta = p.n - alpha
    image = [0] * (alpha + 2 * beta)
    for i in range(1, alpha + 1):
        image[i - 1] = p(i)
    for i in range(1, beta + 1):
        j = p(alpha + i) - alpha
        image[alpha + 2 * i - 2] = alpha + 2 * j - 1
        image[alpha + 2 * i - 1] = alpha + 2 * j
    return Permutation(tuple(image))


# -- standard form -----------------------------------------------------------


def _ro(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class StandardForm:
    """Block decomposition of a generator matrix in standard form.

    Rows are ordered kappa rows ``(I | Tb | 2T2 | 0 | 0)``, then gamma-kappa
    rows ``(0 | 0 | 2T1 | 2I | 0)``, then delta rows ``(0 | Sb | Sq | R | I)``.
    """

    Tb: np.ndarray
    Sb: np.ndarray
    T2: np.ndarray
    T1: np.ndarray
    R: np.ndarray
    Sq: np.ndarray
    col_perm: Permutation
    ctype: CodeType

    @cached_property
    def rows(self) -> tuple[MixedVector, ...]:
        ct = self.ctype
        a, b, g, d, k = ct.alpha, ct.beta, ct.gamma, ct.delta, ct.kappa
        m = ct.free_quats
        out = []
        for i in range(k):
            bits = [0] * a
            bits[i] = 1
            bits[k:] = self.Tb[i]
            quats = [2 * x for x in self.T2[i]] + [0] * (g - k + d)
            out.append(MixedVector(tuple(bits), tuple(quats)))
        for i in range(g - k):
            quats = [2 * x for x in self.T1[i]] + [2 if j == i else 0 for j in range(g - k)] + [0] * d
            out.append(MixedVector((0,) * a, tuple(quats)))
        for i in range(d):
            bits = [0] * k + list(self.Sb[i])
            quats = list(self.Sq[i]) + list(self.R[i]) + [1 if j == i else 0 for j in range(d)]
            out.append(MixedVector(tuple(bits), tuple(quats)))
        assert all(len(r.quats) == b and len(r.bits) == a for r in out)
        assert m + (g - k) + d == b
        return tuple(out)

    @property
    def order_two_rows(self) -> tuple[MixedVector, ...]:
        return self.rows[: self.ctype.gamma]

    @property
    def order_four_rows(self) -> tuple[MixedVector, ...]:
        return self.rows[self.ctype.gamma :]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardForm):
            return NotImplemented
        return (
            self.ctype == other.ctype
            and self.col_perm == other.col_perm
            and self.rows == other.rows
        )

    __hash__ = None  # type: ignore[assignment]


def _row_scale_sub(s, r, lam):
    """s - lam*r in place on [bits, quats] lists."""
    bits, quats = s
    rb, rq = r
    if lam % 2:
        for i, x in enumerate(rb):
            bits[i] ^= x
    for i, x in enumerate(rq):
        quats[i] = (quats[i] - lam * x) % 4


def _is_zero(r) -> bool:
    return not any(r[0]) and not any(r[1])


def standard_form(rows: Sequence[MixedVector]) -> StandardForm:
    """Reduce generator rows to standard form by row operations and column permutations.

    Pivot choices are deterministic: rows are scanned top-down; within a row
    quaternary pivots are taken rightmost-first and binary pivots
    leftmost-first, so a matrix already in standard form is returned with the
    identity column permutation.
    """
    if not rows:
        raise EmptyCodeError("no generator rows")
    alpha, beta = rows[0].shape
    for r in rows:
        if r.shape != (alpha, beta):
            raise ValueError(f"inconsistent row shapes: {r.shape} vs {(alpha, beta)}")

    work: list[list[list[int]]] = []
    seen = set()
    for r in rows:
        key = (r.bits, r.quats)
        if r.is_zero() or key in seen:
            continue
        seen.add(key)
        work.append([list(r.bits), list(r.quats)])
    if not work:
        raise EmptyCodeError("generator rows are all zero")

    # Phase 1: order-four pivots over the quaternary part.
    quad_piv: list[tuple[list, int]] = []
    quad_cols: set[int] = set()
    pending = list(work)
    while True:
        hit = None
        for r in pending:
            for c in range(beta - 1, -1, -1):
                if c not in quad_cols and r[1][c] % 2:
                    hit = (r, c)
                    break
            if hit:
                break
        if hit is None:
            break
        r, c = hit
        if r[1][c] == 3:
            r[1] = [(3 * x) % 4 for x in r[1]]
        for s in work:
            if s is not r and s[1][c]:
                _row_scale_sub(s, r, s[1][c])
        pending = [p for p in pending if p is not r]
        quad_piv.append((r, c))
        quad_cols.add(c)

    # Remaining rows have quaternary entries in {0, 2}: order two.
    pending = [r for r in pending if not _is_zero(r)]
    order_four = [r for r, _ in quad_piv]

    # Phase 2: binary pivots among the order-two rows.
    bin_piv: list[tuple[list, int]] = []
    bin_cols: set[int] = set()
    while True:
        hit = None
        for r in pending:
            for c in range(alpha):
                if c not in bin_cols and r[0][c]:
                    hit = (r, c)
                    break
            if hit:
                break
        if hit is None:
            break
        r, c = hit
        for s in work:
            if s is not r and s[0][c]:
                _row_scale_sub(s, r, 1)
        pending = [p for p in pending if p is not r]
        bin_piv.append((r, c))
        bin_cols.add(c)
    pending = [r for r in pending if not _is_zero(r)]

    # Phase 3: the 2I block among order-two rows with zero binary part.
    two_piv: list[tuple[list, int]] = []
    two_cols: set[int] = set()
    while True:
        hit = None
        for r in pending:
            for c in range(beta - 1, -1, -1):
                if c not in two_cols and c not in quad_cols and r[1][c]:
                    hit = (r, c)
                    break
            if hit:
                break
        if hit is None:
            break
        r, c = hit
        for s in [p for p, _ in bin_piv] + pending:
            if s is not r and s[1][c]:
                _row_scale_sub(s, r, 1)
        # Phase 4: bring order-four entries in this column into {0, 1}.
        for s in order_four:
            if s[1][c] >= 2:
                _row_scale_sub(s, r, 1)
        pending = [p for p in pending if p is not r]
        pending = [p for p in pending if not _is_zero(p)]
        two_piv.append((r, c))
        two_cols.add(c)

    kappa = len(bin_piv)
    gamma = kappa + len(two_piv)
    delta = len(quad_piv)
    ctype = CodeType(alpha, beta, gamma, delta, kappa)

    # Column order: binary pivots first; quaternary free columns, then 2I, then I.
    bin_order = [c for _, c in bin_piv] + [c for c in range(alpha) if c not in bin_cols]
    used = quad_cols | two_cols
    quat_order = (
        [c for c in range(beta) if c not in used]
        + [c for _, c in two_piv]
        + [c for _, c in quad_piv]
    )
    image = [0] * (alpha + beta)
    for new, old in enumerate(bin_order):
        image[old] = new + 1
    for new, old in enumerate(quat_order):
        image[alpha + old] = alpha + new + 1
    col_perm = Permutation(tuple(image))

    def cols_b(r, idx):
        return [r[0][c] for c in idx]

    def cols_q(r, idx):
        return [r[1][c] for c in idx]

    free_b = bin_order[kappa:]
    free_q = quat_order[: ctype.free_quats]
    two_q = [c for _, c in two_piv]
    k_rows = [r for r, _ in bin_piv]
    c_rows = [r for r, _ in two_piv]

    def mat(rs, f, idx, width, half=False):
        out = np.zeros((len(rs), width), dtype=np.int64)
        for i, r in enumerate(rs):
            vals = f(r, idx)
            out[i, :] = [v // 2 for v in vals] if half else vals
        return _ro(out)

    return StandardForm(
        Tb=mat(k_rows, cols_b, free_b, alpha - kappa),
        Sb=mat(order_four, cols_b, free_b, alpha - kappa),
        T2=mat(k_rows, cols_q, free_q, ctype.free_quats, half=True),
        T1=mat(c_rows, cols_q, free_q, ctype.free_quats, half=True),
        R=mat(order_four, cols_q, two_q, gamma - kappa),
        Sq=mat(order_four, cols_q, free_q, ctype.free_quats),
        col_perm=col_perm,
        ctype=ctype,
    )


def dual(std: StandardForm) -> tuple[MixedVector, ...]:
    """Generator rows of the additive dual, in standard-form coordinates.

    Blocks ``(Tb^t | I | 0 | 0 | 2Sb^t)``, ``(0 | 0 | 0 | 2I | 2R^t)`` and
    ``(T2^t | 0 | I | T1^t | -(Sq + R T1)^t)``.
    """
    ct = std.ctype
    a, g, d, k = ct.alpha, ct.gamma, ct.delta, ct.kappa
    m = ct.free_quats
    out = []
    for i in range(a - k):
        bits = list(std.Tb[:, i]) + [1 if j == i else 0 for j in range(a - k)]
        quats = [0] * (m + g - k) + [2 * x for x in std.Sb[:, i]]
        out.append(MixedVector(tuple(bits), tuple(x % 4 for x in quats)))
    for i in range(g - k):
        quats = [0] * m + [2 if j == i else 0 for j in range(g - k)] + [2 * x for x in std.R[:, i]]
        out.append(MixedVector((0,) * a, tuple(x % 4 for x in quats)))
    tail = (-(std.Sq + std.R @ std.T1)) % 4 if d else np.zeros((0, m), dtype=np.int64)
    for i in range(m):
        bits = list(std.T2[:, i]) + [0] * (a - k)
        quats = [1 if j == i else 0 for j in range(m)] + list(std.T1[:, i]) + list(tail[:, i])
        out.append(MixedVector(tuple(bits), tuple(quats)))
    return tuple(out)


# -- the code object ---------------------------------------------------------


def _to_arrays(rows: Sequence[MixedVector], alpha: int, beta: int) -> tuple[np.ndarray, np.ndarray]:
    b = np.array([r.bits for r in rows], dtype=np.int64).reshape(len(rows), alpha)
    q = np.array([r.quats for r in rows], dtype=np.int64).reshape(len(rows), beta)
    return b, q


class Z2Z4Code:
    """A Z2Z4-additive code together with its Gray image.

    The standard form, parity-check rows and standard information set are
    computed once at construction; the minimum distance is computed on first
    use.
    """

    def __init__(
        self,
        alpha: int,
        beta: int,
        generators: Iterable[MixedVector],
        *,
        enum_cap: int = DEFAULT_ENUM_CAP,
        name: str | None = None,
    ) -> None:
        gens = tuple(generators)
        for g in gens:
            if g.shape != (alpha, beta):
                raise ValueError(f"generator {g} does not have shape ({alpha},{beta})")
        if not gens:
            raise EmptyCodeError("no generator rows")
        self.alpha = alpha
        self.beta = beta
        self.generators = gens
        self.enum_cap = enum_cap
        self.name = name
        self.std = standard_form(gens)
        self.ctype = self.std.ctype

        to_orig = inverse(self.std.col_perm)
        self.std_parity = dual(self.std)
        self.parity = tuple(permute_mixed(to_orig, h) for h in self.std_parity)
        # Gray-position maps between original and standard-form coordinates.
        self.to_std = binary_lift(self.std.col_perm, alpha)
        self.from_std = inverse(self.to_std)

        self._hb, self._hq = _to_arrays(self.parity, alpha, beta)
        std_rows_orig = [permute_mixed(to_orig, r) for r in self.std.rows]
        self._gb, self._gq = _to_arrays(std_rows_orig, alpha, beta)
        self._radix = [2] * self.ctype.gamma + [4] * self.ctype.delta
        self._encode_cache: dict[tuple[int, ...], BinaryVector] = {}

    @property
    def n(self) -> int:
        return self.alpha + 2 * self.beta

    @property
    def size(self) -> int:
        return 1 << self.ctype.dimension

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Z2Z4Code{label} type {self.ctype}>"

    # -- vectorised helpers used by the exhaustive tools --

    def syndrome_array(self, words: np.ndarray) -> np.ndarray:
        """Syndromes (rows of Z4 values) of a 2-D array of binary words."""
        b, q = gray_inverse_array(words, self.alpha)
        return (2 * (b @ self._hb.T) + q @ self._hq.T) % 4

    def contains_array(self, words: np.ndarray) -> np.ndarray:
        if words.shape[1] != self.n:
            raise ValueError(f"words have length {words.shape[1]}, code length is {self.n}")
        return ~self.syndrome_array(words).any(axis=1)

    def codeword_chunks(self, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
        """All Gray-image codewords, as uint8 arrays of at most ``chunk`` rows."""
        if self.size > self.enum_cap:
            raise CapExceededError(f"|C| = {self.size} exceeds enumeration cap {self.enum_cap}")
        for start in range(0, self.size, chunk):
            idx = np.arange(start, min(start + chunk, self.size), dtype=np.int64)
            coeffs = np.empty((idx.size, len(self._radix)), dtype=np.int64)
            for j, rad in enumerate(self._radix):
                coeffs[:, j] = idx % rad
                idx = idx // rad
            bits = (coeffs @ self._gb) % 2
            quats = (coeffs @ self._gq) % 4
            yield gray_array(bits, quats)

    def codewords(self) -> np.ndarray:
        return np.concatenate(list(self.codeword_chunks()), axis=0)

    @cached_property
    def min_distance(self) -> int:
        best = self.n + 1
        for words in self.codeword_chunks():
            w = words.sum(axis=1, dtype=np.int64)
            w = w[w > 0]
            if w.size:
                best = min(best, int(w.min()))
        return best

    @property
    def t(self) -> int:
        return (self.min_distance - 1) // 2

    @cached_property
    def info_set(self) -> CoordSet:
        """Standard information set mapped to the original coordinates."""
        from .encode import standard_info_set

        return CoordSet.of(self.from_std(j) for j in standard_info_set(self.ctype))


def contains(code: Z2Z4Code, x: BinaryVector) -> bool:
    if x.n != code.n:
        raise ValueError(f"vector length {x.n} does not match code length {code.n}")
    return bool(code.contains_array(np.array([x.bits], dtype=np.int64))[0])


def min_distance(code: Z2Z4Code) -> int:
    return code.min_distance


def error_capability(code: Z2Z4Code) -> int:
    return code.t


def is_binary_linear(code: Z2Z4Code) -> bool:
    """Check 2(v_j * v_k) in the code for every pair of order-four standard-form rows."""
    vs = code.std.order_four_rows
    ct = code.ctype
    if ct.delta < 2:
        return True
    words = []
    for vj, vk in itertools.combinations(vs, 2):
        prod = MixedVector((0,) * ct.alpha, tuple((2 * a * b) % 4 for a, b in zip(vj.quats, vk.quats)))
        words.append(prod)
    # membership in standard-form coordinates
    hb, hq = _to_arrays(code.std_parity, ct.alpha, ct.beta)
    b, q = _to_arrays(words, ct.alpha, ct.beta)
    synd = (2 * (b @ hb.T) + q @ hq.T) % 4
    return not synd.any()


# -- text format ---------------------------------------------------------------


def parse_code(text: str, *, name: str | None = None) -> Z2Z4Code:
    """Parse the code file format.

    ::

        alpha 2 beta 3
        rows 3
        1 1 | 2 0 0
        0 0 | 2 2 0
        0 1 | 1 1 1
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append((lineno, line))
    if len(entries) < 2:
        raise FormatError("expected 'alpha <a> beta <b>' and 'rows <k>' header lines",
                          entries[-1][0] if entries else None)
    lineno, head = entries[0]
    toks = head.split()
    if len(toks) != 4 or toks[0] != "alpha" or toks[2] != "beta":
        raise FormatError(f"expected 'alpha <a> beta <b>', got {head!r}", lineno)
    try:
        alpha, beta = int(toks[1]), int(toks[3])
    except ValueError:
        raise FormatError(f"non-integer alpha/beta in {head!r}", lineno) from None
    if alpha < 0 or beta < 0 or alpha + beta == 0:
        raise FormatError(f"invalid alpha/beta in {head!r}", lineno)
    lineno, head = entries[1]
    toks = head.split()
    if len(toks) != 2 or toks[0] != "rows" or not toks[1].isdigit():
        raise FormatError(f"expected 'rows <k>', got {head!r}", lineno)
    k = int(toks[1])
    body = entries[2:]
    if len(body) != k:
        where = body[-1][0] if body else lineno
        raise FormatError(f"declared {k} rows, found {len(body)}", where)
    rows = []
    for lineno, line in body:
        try:
            v = MixedVector.parse(line)
        except (FormatError, ValueError) as exc:
            raise FormatError(str(exc), lineno) from None
        if v.shape != (alpha, beta):
            raise FormatError(f"row has shape {v.shape}, expected ({alpha},{beta})", lineno)
        rows.append(v)
    return Z2Z4Code(alpha, beta, rows, name=name)


def format_code(code: Z2Z4Code) -> str:
    lines = [f"alpha {code.alpha} beta {code.beta}", f"rows {len(code.generators)}"]
    lines += [str(g) for g in code.generators]
    return "\n".join(lines) + "\n"


"""Permutations of coordinate positions and their action on binary vectors."""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from .core import BinaryVector
from .errors import CapExceededError, FormatError

if TYPE_CHECKING:
    from .code import Z2Z4Code

DEFAULT_GROUP_CAP = 1 << 20

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; ``image[i-1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"symbol {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"symbol {x} repeated")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                image[a - 1] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest element, sorted."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.image[start - 1]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.image[j - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return format_cycles(self)

    @cached_property
    def source_index(self) -> tuple[int, ...]:
        """0-based ``k`` such that ``apply`` puts input entry ``k`` at output ``i``."""
        src = [0] * self.n
        for i, x in enumerate(self.image):
            src[x - 1] = i
        return tuple(src)

    def permute_bits(self, bits: Sequence[int]) -> tuple[int, ...]:
        """``apply`` on a raw bit sequence, without building a vector."""
        return tuple(bits[k] for k in self.source_index)


def _check_degree(p: Permutation, n: int) -> None:
    if p.n != n:
        raise ValueError(f"degree mismatch: permutation on {p.n} symbols, vector of length {n}")


def apply(p: Permutation, v: BinaryVector) -> BinaryVector:
    """Move the entry at position i to position p(i)."""
    _check_degree(p, v.n)
    return BinaryVector(p.permute_bits(v.bits))


def apply_array(p: Permutation, words: np.ndarray) -> np.ndarray:
    """Row-wise ``apply`` on a 2-D array of words."""
    _check_degree(p, words.shape[1])
    out = np.empty_like(words)
    out[:, np.asarray(p.image) - 1] = words
    return out


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: apply(compose(p, q), v) == apply(p, apply(q, v))."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(p.image[x - 1] for x in q.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.image, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    result = Permutation.identity(p.n)
    base = p if k >= 0 else inverse(p)
    for _ in range(abs(k)):
        result = compose(base, result)
    return result


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1,3,5,7)(2,4,6,8)"``.

    Entries may be separated by commas or whitespace; the empty string (or
    ``"()"``) is the identity.
    """
    stripped = "".join(text.split())
    if stripped in ("", "()", "id"):
        return Permutation.identity(n)
    if _CYCLE_RE.sub("", stripped):
        raise FormatError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        toks = [t for t in re.split(r"[,\s]+", body.strip()) if t]
        try:
            cycles.append([int(t) for t in toks])
        except ValueError:
            raise FormatError(f"non-integer symbol in cycle ({body})") from None
    try:
        return Permutation.from_cycles(cycles, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def generate_group(
    generators: Sequence[Permutation], cap: int = DEFAULT_GROUP_CAP, n: int | None = None
) -> list[Permutation]:
    """Closure of ``generators`` under composition, in breadth-first order.

    The identity comes first, followed by the distinct non-identity
    generators in the order given.
    """
    if not generators and n is None:
        raise ValueError("need at least one generator or an explicit degree")
    degree = generators[0].n if generators else n
    for g in generators:
        if g.n != degree:
            raise ValueError(f"degree mismatch: {g.n} vs {degree}")
    ident = Permutation.identity(degree)
    elements = [ident]
    seen = {ident.image}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = compose(g, s)
            if h.image in seen:
                continue
            if len(elements) >= cap:
                raise CapExceededError(f"group exceeds cap of {cap} elements")
            seen.add(h.image)
            elements.append(h)
            queue.append(h)
    return elements


def is_automorphism(p: Permutation, code: Z2Z4Code) -> bool:
    """True iff ``p`` maps every codeword of the Gray image back into the code."""
    _check_degree(p, code.n)
    if p.is_identity():
        return True
    for chunk in code.codeword_chunks():
        if not code.contains_array(apply_array(p, chunk)).all():
            return False
    return True


def read_permutations(lines: Iterable[str], n: int) -> list[Permutation]:
    """One permutation per line in cycle notation; ``#`` starts a comment."""
    perms = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            perms.append(parse_cycles(line, n))
        except FormatError as exc:
            raise FormatError(str(exc), lineno) from None
    return perms

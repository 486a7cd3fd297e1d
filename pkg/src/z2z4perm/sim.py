"""Monte-Carlo channel simulation around the re-encoding permutation decoder.

Trial ``i`` draws from ``PCG64(SeedSequence(seed, spawn_key=(i,)))``, so a
report depends only on (code, PD-set, error model, trials, seed), never on
how trials are scheduled.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

import numpy as np

from .code import Z2Z4Code
from .core import BinaryVector
from .decode import PDSet, decode_alternative
from .encode import encode


@dataclass(frozen=True)
class SimReport:
    code: str
    trials: int
    error_model: str
    successes: int
    failures: int
    miscorrections: int
    seed: int

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials

    def as_dict(self) -> dict:
        d = asdict(self)
        d["success_rate"] = self.success_rate
        return d

    def format(self) -> str:
        rows = [
            ("code", self.code),
            ("error model", self.error_model),
            ("trials", self.trials),
            ("seed", self.seed),
            ("successes", self.successes),
            ("failures", self.failures),
            ("miscorrections", self.miscorrections),
            ("success rate", f"{self.success_rate:.6f}"),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def trial_rng(seed: int, i: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(i,))))


def _classify(code: Z2Z4Code, pdset: PDSet, x: BinaryVector, y: BinaryVector) -> int:
    """0 success, 1 failure, 2 miscorrection."""
    out = decode_alternative(code, pdset, y)
    if not out.ok:
        return 1
    return 0 if out.codeword == x else 2


def simulate(
    code: Z2Z4Code,
    pdset: PDSet,
    trials: int,
    *,
    weight: int | None = None,
    flip: float | None = None,
    seed: int = 0,
) -> SimReport:
    """Send uniformly random codewords through a fixed-weight or memoryless flip channel."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if (weight is None) == (flip is None):
        raise ValueError("give exactly one of weight or flip")
    n = code.n
    k = code.ctype.dimension
    if weight is not None:
        if not 0 <= weight <= n:
            raise ValueError(f"weight must lie in 0..{n}")
        model = f"weight={weight}"
    else:
        if not 0.0 <= flip <= 1.0:
            raise ValueError("flip probability must lie in [0, 1]")
        model = f"flip={flip:g}"
    tally = [0, 0, 0]
    for i in range(trials):
        rng = trial_rng(seed, i)
        a = BinaryVector(tuple(int(b) for b in rng.integers(0, 2, size=k)))
        x = encode(a, code)
        e = np.zeros(n, dtype=np.int64)
        if weight is not None:
            e[rng.choice(n, size=weight, replace=False)] = 1
        else:
            e[rng.random(n) < flip] = 1
        y = BinaryVector(tuple(int(b) ^ int(f) for b, f in zip(x.bits, e)))
        tally[_classify(code, pdset, x, y)] += 1
    return SimReport(
        code=code.name or "custom",
        trials=trials,
        error_model=model,
        successes=tally[0],
        failures=tally[1],
        miscorrections=tally[2],
        seed=seed,
    )


def exhaustive_outcomes(code: Z2Z4Code, pdset: PDSet, weight: int) -> tuple[int, int, int]:
    """(successes, failures, miscorrections) over every codeword and every weight-``weight`` error."""
    n = code.n
    tally = [0, 0, 0]
    words = [BinaryVector(tuple(int(b) for b in row)) for row in code.codewords()]
    for x in words:
        for support in itertools.combinations(range(n), weight):
            bits = list(x.bits)
            for i in support:
                bits[i] ^= 1
            tally[_classify(code, pdset, x, BinaryVector(tuple(bits)))] += 1
    return tally[0], tally[1], tally[2]

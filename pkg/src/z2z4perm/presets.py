"""Built-in codes and PD-sets.

``example3`` and ``example4`` are the two Hadamard Z4-linear codes of length
8 and 16 with their known PD-sets; ``mixed5`` is a small mixed code with
alpha = 2; ``nonlinear5`` is a nonlinear code of type (0,5;1,2;0) with d = 3,
used to exhibit the failure of the syndrome test when gamma > kappa.
"""

from __future__ import annotations

from .code import Z2Z4Code, parse_code
from .decode import PDSet
from .perm import Permutation, generate_group, parse_cycles, power

CODE_TEXT = {
    "example3": """\
alpha 0 beta 4
rows 2
- | 3 2 1 0
- | 2 3 0 1
""",
    "example4": """\
alpha 0 beta 8
rows 3
- | 2 2 2 0 0 2 0 0
- | 3 2 1 2 3 0 1 0
- | 2 3 0 3 2 1 0 1
""",
    "mixed5": """\
alpha 2 beta 3
rows 3
1 1 | 2 0 0
0 0 | 2 2 0
0 1 | 1 1 1
""",
    "nonlinear5": """\
alpha 0 beta 5
rows 3
- | 2 2 2 0 0
- | 3 2 0 1 0
- | 1 3 0 0 1
""",
}

THETA = "(1,3,5,7)(2,4,6,8)"
THETA_1 = "(1,5)(2,6)(3,11)(4,12)(9,13)(10,14)(7,15)(8,16)"
THETA_2 = "(1,3,5,11)(2,4,6,12)(9,7,13,15)(10,8,14,16)"
THETA_3 = "(9,13)(10,14)(7,15)(8,16)"
THETA_4 = "(1,9)(2,10)(5,13)(6,14)"


def names() -> list[str]:
    return sorted(CODE_TEXT)


def load_code(name: str) -> Z2Z4Code:
    try:
        text = CODE_TEXT[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(names())}") from None
    return parse_code(text, name=name)


def theta() -> Permutation:
    return parse_cycles(THETA, 8)


def thetas() -> dict[str, Permutation]:
    """The four automorphisms listed for ``example4``."""
    return {
        "theta1": parse_cycles(THETA_1, 16),
        "theta2": parse_cycles(THETA_2, 16),
        "theta3": parse_cycles(THETA_3, 16),
        "theta4": parse_cycles(THETA_4, 16),
    }


def load_pdset(name: str) -> PDSet:
    code = load_code(name)
    if name == "example3":
        th = theta()
        perms = [power(th, k) for k in range(3)]
    elif name == "example4":
        th = thetas()
        perms = generate_group([th["theta1"], th["theta2"], th["theta4"]])
    else:
        raise KeyError(f"no built-in PD-set for {name!r}")
    return PDSet(tuple(perms), code.info_set, code.t)

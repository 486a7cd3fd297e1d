"""Command-line interface.

Exit codes: 0 success, 1 decoding failure or failed certification,
2 usage or parse error, 3 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import presets
from .code import Z2Z4Code, dual, dual_type, is_binary_linear, parse_code
from .core import BinaryVector, CoordSet
from .decode import (
    PDSet,
    decode_alternative,
    decode_syndrome,
    format_pdset,
    parse_pdset,
    search_pd_set,
    verify_pd_set,
)
from .encode import encode, standard_info_set
from .errors import CapExceededError, ConfigurationError, EmptyCodeError, FormatError
from .perm import generate_group, is_automorphism, read_permutations
from .sim import simulate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONFIG = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_code(source: str) -> Z2Z4Code:
    if source in presets.CODE_TEXT:
        return presets.load_code(source)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such code file or preset: {source!r} (presets: {', '.join(presets.names())})")
    try:
        return parse_code(path.read_text(), name=path.stem)
    except EmptyCodeError as exc:
        raise FormatError(f"empty code: {exc}") from None


def _load_pdset(source: str, code: Z2Z4Code) -> PDSet:
    if source in ("example3", "example4"):
        return presets.load_pdset(source)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such PD-set file or preset: {source!r}")
    return parse_pdset(path.read_text(), code.n)


def _load_perms(source: str, code: Z2Z4Code):
    if source in ("example3", "example4"):
        return list(presets.load_pdset(source).perms)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no such permutation file or preset: {source!r}")
    return read_permutations(path.read_text().splitlines(), code.n)


def _bits(text: str, n: int, what: str) -> BinaryVector:
    v = BinaryVector.parse(text)
    if v.n != n:
        raise UsageError(f"{what} has length {v.n}, expected {n}")
    return v


def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def _emit(args: argparse.Namespace, data: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _positions(cs: CoordSet) -> list[int]:
    return list(cs.positions)


# -- subcommands -------------------------------------------------------------


def cmd_info(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    ct = code.ctype
    d, t = code.min_distance, code.t
    linear = is_binary_linear(code)
    j = code.info_set
    j_std = standard_info_set(ct)
    data = {
        "type": str(ct),
        "dual_type": str(dual_type(ct)),
        "info_set": _positions(j),
        "info_set_standard": _positions(j_std),
        "size": code.size,
        "length": code.n,
        "min_distance": d,
        "t": t,
        "binary_linear": linear,
    }
    summary = f"type {ct}, J={j}, d={d}, t={t}\n"
    rows = [
        ("type", ct),
        ("dual type", dual_type(ct)),
        ("length", code.n),
        ("size", code.size),
        ("info set", j),
        ("info set (standard form)", j_std),
        ("min distance", d),
        ("t", t),
        ("binary linear", "yes" if linear else "no"),
    ]
    _emit(args, data, summary + _table(rows))
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    a = _bits(args.info, code.ctype.dimension, "information vector")
    x = encode(a, code)
    _emit(args, {"info": str(a), "codeword": str(x)}, f"{x}\n")
    return EXIT_OK


def _certify(code: Z2Z4Code, pdset: PDSet) -> None:
    if pdset.radius < code.t:
        raise ConfigurationError(f"PD-set radius {pdset.radius} is below t={code.t}")
    for p in pdset.perms:
        if not is_automorphism(p, code):
            raise ConfigurationError(f"{p} is not a permutation automorphism of the code")
    res = verify_pd_set(pdset)
    if not res.ok:
        raise ConfigurationError(f"not a PD-set: error pattern {res.witness} is never moved off {pdset.info_set}")


def cmd_decode(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    pdset = _load_pdset(args.pdset, code)
    y = _bits(args.received, code.n, "received word")
    if not args.trust:
        _certify(code, pdset)
    if args.method == "syndrome":
        out = decode_syndrome(code, pdset, y)
    else:
        out = decode_alternative(code, pdset, y)
    if not out.ok:
        _emit(args, {"status": out.status, "received": str(y), "method": args.method},
              "FAIL: more than t errors\n")
        return EXIT_FAIL
    data = {
        "status": out.status,
        "received": str(y),
        "method": args.method,
        "codeword": str(out.codeword),
        "info": str(out.info),
        "perm_used": str(out.perm_used),
        "errors_corrected": out.errors_corrected,
    }
    rows = [
        ("status", out.status),
        ("codeword", out.codeword),
        ("info", out.info),
        ("perm used", out.perm_used),
        ("errors corrected", out.errors_corrected),
    ]
    _emit(args, data, _table(rows))
    return EXIT_OK


def cmd_pdset(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    perms = _load_perms(args.perms, code)
    if args.generate or args.action == "search":
        perms = generate_group(perms, n=code.n)
    for p in perms:
        if not is_automorphism(p, code):
            raise ConfigurationError(f"{p} is not a permutation automorphism of the code")
    t = code.t if args.t is None else args.t
    info = code.info_set
    if args.action == "verify":
        res = verify_pd_set(PDSet(tuple(perms), info, t))
        data = {"action": "verify", "pass": res.ok, "size": len(perms), "t": t,
                "info_set": _positions(info), "patterns": res.patterns,
                "witness": str(res.witness) if res.witness else None}
        if res.ok:
            text = f"PASS: {len(perms)} permutations cover all {res.patterns} patterns of weight <= {t}\n"
        else:
            text = f"FAIL: witness {res.witness} ({res.uncovered} of {res.patterns} patterns uncovered)\n"
        _emit(args, data, text)
        return EXIT_OK if res.ok else EXIT_FAIL
    found = search_pd_set(code, perms, info, t)
    if found is None:
        _emit(args, {"action": "search", "found": False},
              f"FAIL: the {len(perms)} candidates cannot cover all patterns of weight <= {t}\n")
        return EXIT_FAIL
    body = format_pdset(found)
    if args.out:
        Path(args.out).write_text(body)
    data = {"action": "search", "found": True, "size": len(found), "t": t,
            "info_set": _positions(info), "perms": [str(p) for p in found.perms]}
    _emit(args, data, body)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    pdset = _load_pdset(args.pdset, code)
    try:
        rep = simulate(code, pdset, args.trials, weight=args.weight, flip=args.flip, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, rep.as_dict(), rep.format())
    return EXIT_OK


def _matrix_text(name: str, m) -> str:
    if m.size == 0:
        return f"{name}: (empty {m.shape[0]}x{m.shape[1]})\n"
    return f"{name}:\n" + "\n".join("  " + " ".join(map(str, row)) for row in m) + "\n"


def cmd_standard_form(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    std = code.std
    blocks = {k: getattr(std, k) for k in ("Tb", "Sb", "T2", "T1", "R", "Sq")}
    data = {
        "type": str(std.ctype),
        "col_perm": str(std.col_perm),
        "rows": [str(r) for r in std.rows],
        **{k: v.tolist() for k, v in blocks.items()},
    }
    text = f"type {std.ctype}\ncol_perm {std.col_perm}\nrows:\n"
    text += "".join(f"  {r}\n" for r in std.rows)
    text += "".join(_matrix_text(k, v) for k, v in blocks.items())
    _emit(args, data, text)
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    code = _load_code(args.code)
    rows = dual(code.std)
    data = {"dual_type": str(dual_type(code.ctype)), "rows": [str(r) for r in rows],
            "rows_original_coordinates": [str(r) for r in code.parity]}
    text = f"dual type {dual_type(code.ctype)}\n" + "".join(f"  {r}\n" for r in rows)
    _emit(args, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="z2z4perm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    code_help = f"code file or preset ({', '.join(presets.names())})"

    p = sub.add_parser("info", parents=[common], help="type, information set, distance")
    p.add_argument("code", help=code_help)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("encode", parents=[common], help="systematic encoding")
    p.add_argument("code", help=code_help)
    p.add_argument("info", help="information bits, e.g. 0101")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="permutation decoding")
    p.add_argument("code", help=code_help)
    p.add_argument("pdset", help="PD-set file or preset (example3, example4)")
    p.add_argument("received", help="received bit string")
    p.add_argument("--method", choices=("alt", "syndrome"), default="alt")
    p.add_argument("--trust", action="store_true", help="skip PD-set certification")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("pdset", parents=[common], help="verify or search PD-sets")
    p.add_argument("code", help=code_help)
    p.add_argument("perms", help="permutation file (one cycle-notation permutation per line)")
    p.add_argument("action", choices=("verify", "search"))
    p.add_argument("--t", type=int, default=None, help="radius (default: the code's t)")
    p.add_argument("--generate", action="store_true",
                   help="verify the group generated by the permutations (search always does)")
    p.add_argument("--out", help="write the PD-set found by search to this file")
    p.set_defaults(func=cmd_pdset)

    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo channel simulation")
    p.add_argument("code", help=code_help)
    p.add_argument("pdset", help="PD-set file or preset")
    model = p.add_mutually_exclusive_group(required=True)
    model.add_argument("--weight", type=int, help="inject exactly this many bit errors")
    model.add_argument("--flip", type=float, help="flip each bit independently with this probability")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("standard-form", parents=[common], help="standard-form blocks and column permutation")
    p.add_argument("code", help=code_help)
    p.set_defaults(func=cmd_standard_form)

    p = sub.add_parser("dual", parents=[common], help="parity-check rows")
    p.add_argument("code", help=code_help)
    p.set_defaults(func=cmd_dual)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigurationError, CapExceededError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

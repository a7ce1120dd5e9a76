"""Command line surface: one subcommand per library capability.

Exit codes: 0 success, 1 argument problems, 2 domain errors raised by the
library, 3 a verification that ran and failed.  Output is stable
line-oriented text, or one JSON object per invocation with --json.
"""

import argparse
import json
import sys

from .core import NumericalSemigroup
from .factorization import element_catenary, factorizations, semigroup_catenary
from .prime_saturated import closed_form_catenary, construct, verify_range
from .saturation import (enumerate_saturated, is_saturated, minimal_sat_system,
                         sat_closure)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_VERIFICATION = 3

MAX_GENERATOR = 10 ** 6
MAX_ELEMENT = 10 ** 9


class ParseFailure(Exception):
    """Raised instead of argparse's SystemExit so exit codes stay ours."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseFailure(message)


def _ints(text: str, *, cap: int, what: str) -> list[int]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            value = int(piece)
        except ValueError:
            raise ParseFailure(f"{what}: {piece!r} is not an integer") from None
        if value > cap:
            raise ParseFailure(f"{what}: {value} exceeds the input cap {cap}")
        out.append(value)
    return out


def _capped(value: int, *, cap: int, what: str) -> int:
    if value > cap:
        raise ParseFailure(f"{what}: {value} exceeds the input cap {cap}")
    return value


def _semigroup_dict(S: NumericalSemigroup) -> dict:
    return {
        "min_gens": list(S.min_gens),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "small_elements": list(S.small_elements),
    }


def _cmd_info(args):
    gens = _ints(args.gens, cap=MAX_GENERATOR, what="--gens")
    S = NumericalSemigroup.from_generators(gens)
    result = _semigroup_dict(S)
    result["gaps"] = list(S.gaps())
    result["apery_set"] = list(S.apery_set(S.multiplicity))
    result["is_med"] = S.is_med()
    result["is_arf"] = S.is_arf()
    result["is_saturated"] = is_saturated(S)
    return {"gens": gens}, result, EXIT_OK


def _cmd_sat_closure(args):
    values = _ints(args.set, cap=MAX_GENERATOR, what="--set")
    S = sat_closure(values)
    result = _semigroup_dict(S)
    system = minimal_sat_system(S)
    result["sat_system"] = list(system.gens)
    result["gcd_chain"] = list(system.gcd_chain)
    return {"set": values}, result, EXIT_OK


def _cmd_factorizations(args):
    gens = _ints(args.gens, cap=MAX_GENERATOR, what="--gens")
    element = _capped(args.element, cap=MAX_ELEMENT, what="--element")
    S = NumericalSemigroup.from_generators(gens)
    Z = factorizations(S, element)
    result = {
        "element": element,
        "count": len(Z.factorizations),
        "factorizations": [list(f.exps) for f in Z],
        "lengths": list(Z.lengths()),
    }
    return {"gens": gens, "element": element}, result, EXIT_OK


def _cmd_catenary(args):
    gens = _ints(args.gens, cap=MAX_GENERATOR, what="--gens")
    S = NumericalSemigroup.from_generators(gens)
    if args.element is None:
        result = {"scope": "semigroup", "catenary": semigroup_catenary(S)}
    else:
        element = _capped(args.element, cap=MAX_ELEMENT, what="--element")
        result = {"scope": "element", "element": element,
                  "catenary": element_catenary(S, element)}
    return {"gens": gens, "element": args.element}, result, EXIT_OK


def _cmd_prime_sat(args):
    p = _capped(args.p, cap=MAX_GENERATOR, what="--p")
    c = _capped(args.c, cap=MAX_GENERATOR, what="--c")
    S = construct(p, c)
    closed = closed_form_catenary(p, c)
    result = {
        "p": p, "c": c,
        "min_gens": list(S.min_gens),
        "conductor": S.conductor,
        "closed_form": closed,
    }
    code = EXIT_OK
    if args.verify:
        brute = semigroup_catenary(S)
        result["brute_force"] = brute
        result["match"] = closed == brute
        if not result["match"]:
            code = EXIT_VERIFICATION
    return {"p": p, "c": c, "verify": bool(args.verify)}, result, code


def _cmd_enumerate(args):
    found = enumerate_saturated(args.multiplicity, args.conductor)
    result = {
        "multiplicity": args.multiplicity,
        "conductor": args.conductor,
        "count": len(found),
        "semigroups": [_semigroup_dict(S) for S in found],
    }
    return {"multiplicity": args.multiplicity, "conductor": args.conductor}, result, EXIT_OK


def _cmd_verify(args):
    p_list = _ints(args.p_list, cap=MAX_GENERATOR, what="--p-list")
    report = verify_range(p_list, args.h_max)
    payload = report.to_dict()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    code = EXIT_OK if report.passed else EXIT_VERIFICATION
    return {"p_list": p_list, "h_max": args.h_max}, payload, code


def build_parser() -> _Parser:
    parser = _Parser(prog="satsemi",
                     description="factorization invariants of numerical semigroups")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="emit one JSON object instead of text lines")
        p.set_defaults(handler=handler)
        return p

    p = add("info", _cmd_info, "invariants of the semigroup generated by --gens")
    p.add_argument("--gens", required=True, help="comma separated positive integers")

    p = add("sat-closure", _cmd_sat_closure,
            "smallest saturated semigroup containing --set")
    p.add_argument("--set", required=True, help="comma separated positive integers")

    p = add("factorizations", _cmd_factorizations,
            "all factorizations of --element over the minimal generators")
    p.add_argument("--gens", required=True)
    p.add_argument("--element", required=True, type=int)

    p = add("catenary", _cmd_catenary,
            "catenary degree of the semigroup, or of --element if given")
    p.add_argument("--gens", required=True)
    p.add_argument("--element", type=int)

    p = add("prime-sat", _cmd_prime_sat,
            "saturated semigroup with prime multiplicity --p and conductor --c")
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--c", required=True, type=int)
    p.add_argument("--verify", action="store_true",
                   help="cross-check the closed form against brute force")

    p = add("enumerate-saturated", _cmd_enumerate,
            "all saturated semigroups with the given multiplicity and conductor")
    p.add_argument("--multiplicity", required=True, type=int)
    p.add_argument("--conductor", required=True, type=int)

    p = add("verify-theorems", _cmd_verify,
            "sweep the (p, h) grid cross-checking closed forms and uniqueness")
    p.add_argument("--p-list", required=True, help="comma separated primes")
    p.add_argument("--h-max", required=True, type=int)
    p.add_argument("--out", help="also write the JSON report to this path")

    return parser


def _text_lines(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _text_lines(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, (list, tuple)):
        if all(isinstance(x, (int, float)) for x in value):
            out.append(f"{prefix}: {','.join(_scalar(x) for x in value)}")
        else:
            for idx, v in enumerate(value):
                _text_lines(f"{prefix}[{idx}]", v, out)
    else:
        out.append(f"{prefix}: {_scalar(value)}")


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def render(command: str, inputs: dict, result: dict, as_json: bool) -> str:
    envelope = {"command": command, "format": "json" if as_json else "text",
                "input": inputs, "result": result}
    if as_json:
        return json.dumps(envelope, indent=2)
    lines: list[str] = []
    _text_lines("", envelope, lines)
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        inputs, result, code = args.handler(args)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(render(args.command, inputs, result, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())

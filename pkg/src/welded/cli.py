"""``welded`` command line.

Exit status: 0 success, 1 ``equiv`` found the diagrams inequivalent,
2 malformed input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .coloring import phi_g_to_a, pi1_presentation
from .freegroup import MalformedInput, RankMismatch
from .fuzz import run_battery
from .gauss import MoveError, emit, parse, random_diagram, validate
from .milnor import milnor_filtration_order, milnor_mu, milnor_table
from .normalize import ascending_form, horizontal_form
from .reduced import InternalError

EXIT_OK, EXIT_INEQUIVALENT, EXIT_MALFORMED, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise MalformedInput(message)


def _read(path: str, check: bool = True):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}") from exc
    return parse(text, check=check)


def _emit_json(obj, out):
    out.write(json.dumps(obj) + "\n")


def _index(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise MalformedInput(f"bad index {text!r}; expected e.g. 1,2,3") from None


def cmd_validate(args, out):
    errors = validate(_read(args.file, check=False))
    _emit_json({"ok": not errors, "errors": errors}, out)
    return EXIT_OK if not errors else EXIT_MALFORMED


def cmd_normalize(args, out):
    g = _read(args.file)
    fn = ascending_form if args.mode == "ascending" else horizontal_form
    out.write(emit(fn(g, certify=args.certify)))
    return EXIT_OK


def cmd_invariant(args, out):
    _emit_json(phi_g_to_a(_read(args.file)).to_json(), out)
    return EXIT_OK


def cmd_equiv(args, out):
    g1, g2 = _read(args.file1), _read(args.file2)
    if g1.n != g2.n:
        raise RankMismatch(f"{g1.n} strands vs {g2.n}")
    same = phi_g_to_a(g1) == phi_g_to_a(g2)
    out.write(("equivalent" if same else "inequivalent") + "\n")
    return EXIT_OK if same else EXIT_INEQUIVALENT


def cmd_milnor(args, out):
    g = _read(args.file)
    if args.all_upto is not None:
        k = args.all_upto
        if k < 2:
            raise MalformedInput("--all-upto needs K >= 2")
        order = milnor_filtration_order(g, k)
        _emit_json({
            "invariants": milnor_table(g, k),
            "filtration_order": order if order is not None else f"≥{k}",
        }, out)
    else:
        rows = [{"I": I, "mu": milnor_mu(g, I)} for I in map(_index, args.index)]
        _emit_json(rows, out)
    return EXIT_OK


def cmd_pi1(args, out):
    _emit_json(pi1_presentation(_read(args.file)).to_json(), out)
    return EXIT_OK


def cmd_random(args, out):
    if args.n < 1 or args.arrows < 0:
        raise MalformedInput("need --n >= 1 and --arrows >= 0")
    out.write(emit(random_diagram(args.n, args.arrows, args.seed, not args.no_self_arrows)))
    return EXIT_OK


def cmd_fuzz(args, out):
    if args.trials < 0:
        raise MalformedInput("--trials must be non-negative")
    report = run_battery(args.trials, args.seed, args.max_n, args.max_arrows, args.workers)
    _emit_json(report.to_json(), out)
    return EXIT_OK if report.ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="welded", description="Welded string links as Gauss diagrams.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a diagram file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("normalize", help="ascending or horizontal representative")
    s.add_argument("--mode", choices=("ascending", "horizontal"), default="horizontal")
    s.add_argument("--certify", action="store_true", help="re-check the invariant of the result")
    s.add_argument("file")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("invariant", help="conjugating automorphism of RF_n as JSON")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("equiv", help="decide equivalence up to self-arrow moves")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("milnor", help="Milnor invariants as JSON")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--index", action="append", help="comma separated, last entry is the strand")
    grp.add_argument("--all-upto", type=int, metavar="K")
    s.add_argument("file")
    s.set_defaults(func=cmd_milnor)

    s = sub.add_parser("pi1", help="Wirtinger presentation as JSON")
    s.add_argument("file")
    s.set_defaults(func=cmd_pi1)

    s = sub.add_parser("random", help="seeded random diagram")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--arrows", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-self-arrows", action="store_true")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("fuzz", help="move-invariance battery")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--max-arrows", type=int, default=8)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_fuzz)
    return p


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (MalformedInput, RankMismatch, MoveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

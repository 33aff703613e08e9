"""Command-line front end: ``rlcm analyze | msf | germ``."""
from __future__ import annotations

import argparse
import sys

from .boundary import BoundaryPoint, theta_apply
from .errors import ConstructionError, SpecParseError, UsageError
from .germs import Germ, is_unit
from .hull import InverseHull
from .instances import parse_instance
from .instances.free import format_word
from .instances.selfsimilar import ZappaSzepMonoid, msf_enumerate
from .report import DEFAULT_DEPTH, DEFAULT_EP_CAP, analyze, render_report

EXIT_OK = 0
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlcm",
        description="Structural checks for right LCM semigroups and their boundary quotients.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run the full battery and print a report")
    a.add_argument("instance", help="free:<letters>, nat:<k>, odometer, modified-odometer "
                                    "or a spec file path")
    a.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    a.add_argument("--ep-cap", type=int, default=DEFAULT_EP_CAP)
    a.add_argument("--format", choices=("text", "machine"), default="text")

    m = sub.add_parser("msf", help="minimal strongly fixed words of a group element")
    m.add_argument("instance")
    m.add_argument("--element", required=True, help="group word, e.g. z^2")
    m.add_argument("--max-len", type=int, default=8)

    g = sub.add_parser("germ", help="image and triviality of a germ")
    g.add_argument("instance")
    g.add_argument("--s", required=True, help="hull element, [p,q] or (α,g,β)")
    g.add_argument("--point", required=True, help="boundary point u(w) meaning u w w w ...")
    g.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    return parser


def _analyze(args, out):
    P = parse_instance(args.instance)
    out.write(render_report(analyze(P, args.depth, args.ep_cap), args.format))


def _msf(args, out):
    P = parse_instance(args.instance)
    if not isinstance(P, ZappaSzepMonoid):
        raise UsageError(f"{args.instance} has no self-similar group")
    g = P.group.parse(args.element)
    res = msf_enumerate(P, g, args.max_len)
    out.write(f"element: {P.group.format(g)}\n")
    out.write("MSF: {" + ", ".join(format_word(w) for w in res.words) + "}"
              + f" (words of length <= {args.max_len})\n")
    out.write(f"finiteness: {res.finiteness.describe()}\n")


def _germ(args, out):
    P = parse_instance(args.instance)
    H = InverseHull(P)
    s = H.parse(args.s)
    x = BoundaryPoint.parse(args.point)
    img = theta_apply(H, s, x)
    out.write(f"germ: {H.format(s)} at {x}\n")
    if not img.defined:
        out.write("defined: no (point outside the source cylinder)\n")
        return
    out.write(f"image: {img}\n")
    out.write(f"unit germ: {is_unit(H, Germ(s, x), args.depth).describe()}\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = {"analyze": _analyze, "msf": _msf, "germ": _germ}[args.command]
    try:
        handler(args, out)
    except (SpecParseError, ConstructionError, UsageError) as exc:
        print(f"rlcm: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

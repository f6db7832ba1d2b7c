"""Command-line front end: ``mahonian <subcommand> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails
and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import _core, formulas, harness
from .errors import MahonianError
from .maps import fiber, shuffles, shuffles_sb
from .weyl import format_word, parse_word


def _eps(text: str) -> int:
    value = int(text)
    if value not in (1, -1):
        raise argparse.ArgumentTypeError("eps must be +1 or -1")
    return value


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def cmd_poly(args) -> int:
    eps = args.eps if args.eps is not None else harness.identity(args.id).eps[0]
    poly = harness.closed_form(args.id, args.n, eps)
    payload = {"id": args.id, "n": args.n, "eps": eps,
               "poly": poly.render(), **poly.to_json()}
    _emit(args, payload, poly.render())
    return 0


def cmd_brute(args) -> int:
    spec = harness.BruteSpec(args.family, args.restrict, args.stat, args.sign,
                             boundary=args.boundary)
    poly = harness.brute_sum(spec, args.n, args.workers)
    payload = {"family": spec.family.value, "n": args.n, "stat": spec.statistic,
               "sign": spec.sign, "restrict": spec.restriction, "backend": _core.BACKEND,
               "poly": poly.render(), **poly.to_json()}
    _emit(args, payload, poly.render())
    return 0


def cmd_verify(args) -> int:
    report = harness.verify(args.id, args.max_n, quick=args.quick, workers=args.workers)
    _emit(args, report.to_json(), report.render())
    return 0 if report.passed else 1


def cmd_verify_all(args) -> int:
    reports = harness.verify_all(args.budget, quick=args.quick, workers=args.workers)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]}, indent=2))
    else:
        for r in reports:
            c = r.counts()
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark}  {r.id:<20} pass={c['PASS']} fail={c['FAIL']} skip={c['SKIP']}")
            if not r.passed:
                print(r.render())
        print(f"{sum(r.passed for r in reports)}/{len(reports)} identities pass")
    return 0 if ok else 1


_ENUM_FAMILY = {"as": "s", "ab": "b", "ad": "d"}
_ENUM_STAT = {"as": "maj-nat", "ab": "fmaj", "ad": "dmaj"}


def cmd_counts(args) -> int:
    rows = []
    for n in range(1, args.max_n + 1):
        if args.method == "enumerate":
            spec = harness.BruteSpec(_ENUM_FAMILY[args.family], "even", _ENUM_STAT[args.family])
            value = harness.brute_sum(spec, n, args.workers)(1)
        else:
            value = formulas.even_derangement_count(args.family, n, args.method)
        rows.append({"n": n, "count": int(value)})
    _emit(args, {"family": args.family, "method": args.method, "counts": rows},
          "\n".join(f"{r['n']} {r['count']}" for r in rows))
    return 0


def cmd_fiber(args) -> int:
    for w in fiber(args.family, args.n, parse_word(args.sigma)):
        print(format_word(w))
    return 0


def cmd_shuffle(args) -> int:
    left, right = parse_word(args.left), parse_word(args.right)
    words = shuffles_sb(left, right) if args.sb else shuffles(left, right)
    for w in words:
        print(format_word(w))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mahonian",
                                description="Signed Mahonian polynomials on derangements.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, workers=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if workers:
            sp.add_argument("--workers", type=int, default=None,
                            help="split enumeration over this many workers")

    sp = sub.add_parser("poly", help="print a closed form")
    sp.add_argument("--id", required=True, choices=sorted(
        i for i, d in harness.REGISTRY.items() if d.rhs is not None or i.startswith("counts-")))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--eps", type=_eps, default=None)
    common(sp)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("brute", help="enumerate and sum a statistic")
    sp.add_argument("--family", required=True, choices=list(_core.FAMILIES))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--stat", required=True, choices=list(_core.STATS))
    sp.add_argument("--sign", default="none", choices=list(_core.SIGNS))
    sp.add_argument("--restrict", default="all", choices=list(_core.RESTRICTS))
    sp.add_argument("--boundary", default="none", choices=list(_core.BOUNDARIES))
    common(sp, workers=True)
    sp.set_defaults(func=cmd_brute)

    sp = sub.add_parser("verify", help="check one identity")
    sp.add_argument("--id", required=True)
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--quick", action="store_true")
    common(sp, workers=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("verify-all", help="check every identity")
    sp.add_argument("--quick", action="store_true", help="use the reduced n ranges")
    sp.add_argument("--budget", type=float, default=None, help="wall-time cap in seconds")
    common(sp, workers=True)
    sp.set_defaults(func=cmd_verify_all)

    sp = sub.add_parser("counts", help="even-length derangement counts")
    sp.add_argument("--family", required=True, choices=["as", "ab", "ad"])
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--method", default="closed",
                    choices=["closed", "rec1", "rec2", "enumerate"])
    common(sp, workers=True)
    sp.set_defaults(func=cmd_counts)

    sp = sub.add_parser("fiber", help="list {pi : dp(pi) = sigma}")
    sp.add_argument("--family", required=True, choices=["s", "b", "delta-less"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--sigma", required=True, help='one-line word, e.g. "2 -1"')
    sp.set_defaults(func=cmd_fiber)

    sp = sub.add_parser("shuffle", help="list the shuffles of two words")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--sb", action="store_true",
                    help="keep only shuffles ending in the left word's last letter")
    sp.set_defaults(func=cmd_shuffle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MahonianError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

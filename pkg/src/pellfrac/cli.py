"""Command-line interface: expand, solve, family, member, table, verify.

Exit codes: 0 success, 1 domain error (perfect square, bad arguments),
2 verification failure. All integers are printed in full decimal; values
routinely exceed 64 bits.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cf, family, oracle, pell
from .errors import DomainError
from .tables import TABLE_NAMES, render_table

DEFAULT_Y_CUTOFF = 10**6


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad arguments; remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="pellfrac", description=__doc__)
    sub = parser.add_subparsers(required=True, metavar="command")

    p = sub.add_parser("expand", help="periodic continued fraction of sqrt(d)")
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("solve", help="smallest solution of X^2 - d*Y^2 = +-1")
    p.add_argument("d", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--fundamental",
        dest="mode",
        action="store_const",
        const="fundamental",
        help="smallest solution of either sign (default)",
    )
    mode.add_argument(
        "--plus", dest="mode", action="store_const", const="plus",
        help="smallest solution of X^2 - d*Y^2 = +1",
    )
    mode.add_argument(
        "--minus", dest="mode", action="store_const", const="minus",
        help="smallest solution of X^2 - d*Y^2 = -1 (may be unsolvable)",
    )
    p.set_defaults(func=_cmd_solve, mode="fundamental")

    p = sub.add_parser(
        "family", help="members d with sqrt(d) = [e; k,...,k, 2e] of period j"
    )
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--ell-max", type=int, default=10)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("member", help="which family, if any, d belongs to")
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("table", help="print a reference table")
    p.add_argument("name", choices=TABLE_NAMES)
    p.add_argument("--k", type=int, default=None, help="evaluate the fn table at k")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="cross-check closed forms against the oracle")
    p.add_argument("--dmax", type=int, default=10000)
    p.add_argument("--jmax", type=int, default=6)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--ycut",
        type=int,
        default=DEFAULT_Y_CUTOFF,
        help="y cutoff for the brute-force Pell scan",
    )
    p.set_defaults(func=_cmd_verify)
    return parser


def _cmd_expand(args) -> int:
    exp = cf.expand_sqrt(args.d)
    block = ",".join(str(a) for a in exp.period)
    print(f"sqrt({args.d}) = [{exp.e}; ({block})] period={exp.j}")
    return 0


def _cmd_solve(args) -> int:
    if args.mode == "minus":
        sol = pell.solve_pell_minus(args.d)
        if sol is None:
            j = cf.expand_sqrt(args.d).j
            print(f"unsolvable (period {j} is even)")
            return 0
    elif args.mode == "plus":
        sol = pell.solve_pell_plus(args.d)
    else:
        sol = pell.solve_fundamental(args.d)
        print(f"x={sol.x} y={sol.y} sign={'+1' if sol.sign == 1 else '-1'}")
        return 0
    print(f"x={sol.x} y={sol.y}")
    return 0


def entry_record(entry: family.FamilyEntry) -> dict[str, str]:
    """Flat wire record for one family entry; all integers as decimal strings."""
    return {
        "j": str(entry.j),
        "k": str(entry.k),
        "m": str(entry.params.m),
        "ell": str(entry.ell),
        "case": entry.case.value,
        "e": str(entry.e),
        "d": str(entry.d),
        "x": str(entry.x),
        "y": str(entry.y),
        "sign": str(entry.sign),
        "f_m": str(entry.f_m),
        "f_m_minus_1": str(entry.f_m_minus_1),
    }


def _cmd_family(args) -> int:
    result = family.enumerate_family(args.j, args.k, args.ell_max)
    if args.format == "json":
        for entry in result.entries:
            print(json.dumps(entry_record(entry)))
        return 0
    if args.format == "csv":
        print("e,d,x,y")
        for entry in result.entries:
            print(f"{entry.e},{entry.d},{entry.x},{entry.y}")
        return 0
    if result.reason is not None:
        print(f"no solutions: {result.reason}")
        return 0
    widths = None
    rows = [
        (str(e.ell), str(e.e), str(e.d), str(e.x), str(e.y)) for e in result.entries
    ]
    headers = ("ell", "e", "d", "x", "y")
    widths = [
        max(len(headers[c]), max((len(r[c]) for r in rows), default=0))
        for c in range(5)
    ]
    print(" ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for row in rows:
        print(" ".join(v.rjust(w) for v, w in zip(row, widths)))
    return 0


def _cmd_member(args) -> int:
    exp = cf.expand_sqrt(args.d)
    if exp.j == 1:
        print(f"{args.d}: period-1 family d = e^2 + 1, e={exp.e}, (x, y) = ({exp.e}, 1)")
        return 0
    hit = family.membership(args.d)
    if hit is None:
        block = ",".join(str(a) for a in exp.period)
        print(f"{args.d}: not in any uniform family; period block ({block})")
        return 0
    print(f"{args.d}: j={hit.j} k={hit.k} ell={hit.ell} e={hit.e}")
    return 0


def _cmd_table(args) -> int:
    if args.k is not None and args.name != "fn":
        print(f"error: --k only applies to the fn table", file=sys.stderr)
        return 1
    sys.stdout.write(render_table(args.name, k=args.k))
    return 0


def _cmd_verify(args) -> int:
    if args.dmax < 2 or args.jmax < 2 or args.kmax < 1 or args.threads < 1:
        print("error: need --dmax >= 2, --jmax >= 2, --kmax >= 1, --threads >= 1",
              file=sys.stderr)
        return 1
    ok = run_verify(args.dmax, args.jmax, args.kmax, args.threads, args.ycut)
    return 0 if ok else 2


def run_verify(dmax: int, jmax: int, kmax: int, threads: int = 1,
               ycut: int = DEFAULT_Y_CUTOFF) -> bool:
    """Run the three verification sweeps, printing a summary; True iff all pass."""
    checks = (
        ("soundness", lambda: _check_soundness(dmax, jmax, kmax)),
        ("completeness", lambda: _check_completeness(dmax, jmax, kmax, threads)),
        ("pell-agreement", lambda: _check_pell_agreement(min(dmax, 2000), ycut)),
    )
    passed = []
    for name, run in checks:
        counterexample = run()
        if counterexample is not None:
            print(f"FAIL: {name} — counterexample: {counterexample}")
            return False
        passed.append(name)
    print(f"PASS: {', '.join(passed)}")
    return True


def _check_soundness(dmax: int, jmax: int, kmax: int) -> str | None:
    """Every generated entry must expand to its claimed pattern and solve Pell."""
    for j in range(2, jmax + 1):
        for k in range(1, kmax + 1):
            for entry in family.entries_up_to_d(j, k, dmax):
                exp = cf.expand_sqrt(entry.d)
                want = (k,) * (j - 1) + (2 * entry.e,)
                if exp.e != entry.e or exp.period != want:
                    return f"d={entry.d} expands to [{exp.e}; {exp.period}]"
                if entry.x**2 - entry.d * entry.y**2 != entry.sign:
                    return f"d={entry.d}: ({entry.x}, {entry.y}) is not a solution"
    return None


def _check_completeness(dmax: int, jmax: int, kmax: int, threads: int) -> str | None:
    """The oracle's pattern scan and the closed forms must find the same d."""
    grid = [(j, k) for j in range(2, jmax + 1) for k in range(1, kmax + 1)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            scans = list(pool.map(lambda jk: oracle.pattern_scan(dmax, *jk), grid))
    else:
        scans = [oracle.pattern_scan(dmax, j, k) for j, k in grid]
    for (j, k), scanned in zip(grid, scans):
        generated = {entry.d for entry in family.entries_up_to_d(j, k, dmax)}
        if set(scanned) != generated:
            diff = sorted(set(scanned) ^ generated)[0]
            side = "oracle-only" if diff in set(scanned) else "formula-only"
            return f"j={j} k={k}: d={diff} ({side})"
    return None


def _check_pell_agreement(dmax: int, ycut: int) -> str | None:
    """CF fundamental vs brute scan at the y cutoff, plus period-parity of -1.

    A brute miss is only accepted when the CF solution's y exceeds the
    cutoff; a brute hit must match the CF solution exactly.
    """
    for d in range(2, dmax + 1):
        e = cf.integer_sqrt(d)
        if e[1]:
            continue
        fund = pell.solve_fundamental(d)
        if not fund.verify():
            return f"d={d}: CF solution fails its own equation"
        minus = oracle.brute_pell(d, -1, ycut)
        plus = oracle.brute_pell(d, 1, ycut)
        hit = min((s for s in (minus, plus) if s is not None),
                  key=lambda s: s.y, default=None)
        if fund.y <= ycut:
            if hit is None or (hit.x, hit.y, hit.sign) != (fund.x, fund.y, fund.sign):
                return f"d={d}: brute={hit} fundamental={fund}"
        elif hit is not None:
            return f"d={d}: brute found {hit} below CF fundamental"
        period_odd = fund.sign == -1
        if minus is not None and not period_odd:
            return f"d={d}: -1 solution {minus} but period is even"
        if period_odd and fund.y <= ycut and minus is None:
            return f"d={d}: period odd but no -1 solution below cutoff"
    return None


if __name__ == "__main__":
    raise SystemExit(main())

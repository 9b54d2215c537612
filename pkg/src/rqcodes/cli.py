"""Command-line interface.

Exit codes: 0 success, 1 verification or containment failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import (
    DEFAULT_BUDGET,
    CodeSpec,
    SpecError,
    dual_code,
    dual_generator_formula,
    span_basis,
)
from .gf2poly import factor_xn_minus_1, format_poly
from .quantum import DEFAULT_MAX_N, search_quantum
from .results import ResultLine, to_csv, to_jsonl
from .ring import RElem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _spec_from_args(args) -> CodeSpec:
    try:
        return CodeSpec.parse(args.n, args.g1, args.a1, args.g2)
    except (SpecError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise UsageError(f"--n must be an odd positive integer, got {n}")


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def _render(lines, emit: str) -> str:
    return to_csv(lines) if emit == "csv" else to_jsonl(lines)


def cmd_factor(args) -> int:
    _check_odd(args.n)
    print(", ".join(format_poly(f) for f in factor_xn_minus_1(args.n)))
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec_from_args(args)
    line = ResultLine.build(spec, args.budget)
    _write(_render([line], args.emit), args.out)
    return EXIT_OK if line.dual_containing else EXIT_FAIL


def _vec_text(v) -> str:
    return "(" + ", ".join(str(RElem.from_code(x)) for x in v) + ")"


def cmd_dual(args) -> int:
    spec = _spec_from_args(args)
    D = dual_code(span_basis(spec))
    formula = dual_generator_formula(spec)
    record = {
        "n": spec.n,
        "g1": str(spec.g1),
        "a1": str(spec.a1),
        "g2": str(spec.g2),
        "dual_size_log2": len(D),
        "dual_basis": [_vec_text(v) for v in D.vectors()],
        "generator_formula": [
            {"reading": r.name, "generator": str(r.generator), "matches": r.matches}
            for r in formula.readings
        ],
    }
    _write(json.dumps(record, separators=(",", ":")) + "\n", args.out)
    return EXIT_OK


def summary_table(records) -> str:
    best: dict[tuple[int, bool], object] = {}
    for rec in records:
        key = (rec.params.distance, rec.params.exact)
        if key not in best:
            best[key] = rec
    rows = [f"{'distance':>10}  {'best code':<16}  spec"]
    for (d, exact), rec in sorted(best.items(), key=lambda kv: (-kv[0][0], not kv[0][1])):
        label = f"{d}" if exact else f"<={d}"
        rows.append(f"{label:>10}  {str(rec.params):<16}  {rec.spec.text()}")
    return "\n".join(rows) + "\n"


def cmd_search(args) -> int:
    _check_odd(args.n)
    if args.n > args.max_n:
        raise UsageError(f"--n {args.n} exceeds --max-n {args.max_n}")
    records = search_quantum(args.n, budget=args.budget, max_n=args.max_n)
    lines = [ResultLine.build(r.spec, args.budget, r.evidence) for r in records]
    _write(_render(lines, args.emit), args.out)
    table = f"{len(records)} dual-containing codes of length {args.n}\n" + summary_table(records)
    (sys.stdout if args.out else sys.stderr).write(table)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .verify import verify_paper

    ok, checks = verify_paper()
    text = "".join(c.line() + "\n" for c in checks)
    text += ("ALL PASS\n" if ok else "FAILED\n")
    _write(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rqcodes",
        description="Cyclic codes over F2+uF2+u^2F2 (u^3=u) and their CSS quantum codes.",
        allow_abbrev=False,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def spec_flags(sp):
        sp.add_argument("--n", type=int, required=True, help="odd code length")
        sp.add_argument("--g1", required=True, help='e.g. "x+1" or ascending bits "11"')
        sp.add_argument("--a1", required=True)
        sp.add_argument("--g2", required=True)

    def output_flags(sp, emit=True):
        sp.add_argument("--out", default=None, help="write to this file instead of stdout")
        if emit:
            sp.add_argument("--emit", choices=("json", "csv"), default="json")

    sp = sub.add_parser("factor", help="irreducible factors of x^n - 1", allow_abbrev=False)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("construct", help="build a code from a generator triple", allow_abbrev=False)
    spec_flags(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="exact distance up to log2|C| <= budget")
    output_flags(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("dual", help="dual code and closed-form dual generators", allow_abbrev=False)
    spec_flags(sp)
    output_flags(sp, emit=False)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("search", help="all dual-containing codes of length n", allow_abbrev=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    output_flags(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify-paper", help="reproduce the worked examples and run the oracle suite", allow_abbrev=False)
    output_flags(sp, emit=False)
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

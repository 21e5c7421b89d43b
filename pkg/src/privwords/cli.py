"""Command line front end.

    privwords check aabaa
    privwords count -n 12 -q 2 --shards 4
    privwords gp -P aaab -N 20 --mode asymptotic --format csv
    privwords bound -q 2 --n-from 50 --n-to 60

Exit codes: 0 success, 2 usage error, 3 budget refusal, 4 numeric degeneracy.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import asymptotics, enumeration, synccode
from .errors import BudgetExceeded, NumericDegeneracy
from .words import (
    Word,
    as_word,
    autocorrelation,
    border_lengths,
    correlation_polynomial,
    privileged_witness,
)

EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NUMERIC = 4


def real(x: float | None) -> str:
    if x is None:
        return ""
    return format(x, ".17g")


class Table:
    """Rows with a fixed column order, plus the plain-text rendering."""

    def __init__(self, columns: list[str], rows: list[dict], plain: str):
        self.columns = columns
        self.rows = rows
        self.plain = plain

    def render(self, fmt: str) -> str:
        if fmt == "plain":
            return self.plain if self.plain.endswith("\n") else self.plain + "\n"
        if fmt == "json":
            return json.dumps([{c: r[c] for c in self.columns} for r in self.rows], indent=1) + "\n"
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for r in self.rows:
            writer.writerow([_csv_cell(r[c]) for c in self.columns])
        return buf.getvalue()


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return real(v)
    return str(v)


def _word(text: str, q: int) -> Word:
    return as_word(text, q)


def cmd_check(args) -> Table:
    w = _word(args.word, args.q)
    chain = privileged_witness(w)
    if chain is None:
        reason = "no border" if not border_lengths(w) else "no privileged border occurs exactly twice"
        plain = f"not privileged ({reason})"
    elif len(w) == 1:
        plain = "privileged (single letter)"
    else:
        plain = "privileged: " + " ← ".join(str(u) for u in chain)
    row = {
        "word": str(w),
        "q": w.q,
        "privileged": chain is not None,
        "witness": " ".join(str(u) for u in chain) if chain else "",
    }
    return Table(list(row), [row], plain)


def _cache(args):
    return enumeration.CountCache(args.cache_path) if args.cache_path else None


def cmd_count(args) -> Table:
    rec = enumeration.count_privileged(
        args.n, args.q, args.shards, budget=args.budget, cache=_cache(args)
    )
    row = {"n": rec.n, "q": rec.q, "count": rec.count, "method": rec.method}
    return Table(list(row), [row], str(rec.count))


def cmd_list(args) -> Table:
    words = [str(w) for w in enumeration.list_privileged(args.n, args.q, budget=args.budget)]
    rows = [{"n": args.n, "q": args.q, "word": w} for w in words]
    return Table(["n", "q", "word"], rows, "\n".join(words))


def cmd_autocorr(args) -> Table:
    P = _word(args.P, args.q)
    Q = autocorrelation(P)
    f = correlation_polynomial(Q)
    row = {
        "P": str(P),
        "q": P.q,
        "p": len(P),
        "autocorrelation": str(Q),
        "polynomial": str(f),
        "f_q": f.exact(P.q),
        "df_q": f.derivative_exact(P.q),
    }
    plain = f"Q={Q} f(z)={f} f({P.q})={row['f_q']} f'({P.q})={row['df_q']}"
    return Table(list(row), [row], plain)


def cmd_gp(args) -> Table:
    P = _word(args.P, args.q)
    if args.mode == "asymptotic":
        est = asymptotics.gp_asymptotic(P, args.N)
        row = {
            "P": str(P), "N": args.N, "q": P.q,
            "ln_rho": est.ln_rho, "ln_RQ": est.ln_RQ, "ln_estimate": est.ln_estimate,
            "estimate": est.estimate, "method": "asymptotic",
        }
        plain = real(est.estimate) if est.estimate is not None else f"exp({real(est.ln_estimate)})"
        return Table(list(row), [row], plain)
    if args.mode == "brute":
        rec = synccode.brute_force_gp(P, args.N, budget=args.budget)
    else:
        rec = synccode.exact_gp(P, args.N)
    row = {"P": str(P), "N": rec.N, "q": P.q, "count": rec.count, "method": rec.method}
    return Table(list(row), [row], str(rec.count))


def cmd_rho(args) -> Table:
    P = _word(args.P, args.q)
    root = asymptotics.dominant_root(correlation_polynomial(P), P.q)
    row = {
        "P": str(P), "q": P.q, "rho": root.rho, "gap": root.gap,
        "residual": root.residual, "iterations": root.iterations,
        "bracket_lo": root.bracket[0], "bracket_hi": root.bracket[1],
    }
    return Table(list(row), [row], real(root.rho))


def cmd_expansions(args) -> Table:
    rep = asymptotics.expansions(_word(args.P, args.q))
    row = {
        "P": rep.P, "q": rep.q, "p": rep.p,
        "ln_rho": rep.ln_rho, "ln_rho_expansion": rep.ln_rho_expansion,
        "ln_rho_residual": rep.ln_rho_residual,
        "ln_RQ": rep.ln_RQ, "ln_RQ_expansion": rep.ln_RQ_expansion,
        "ln_RQ_residual": rep.ln_RQ_residual,
    }
    plain = "\n".join(f"{k}={real(v) if isinstance(v, float) else v}" for k, v in row.items())
    return Table(list(row), [row], plain)


def cmd_choose_p(args) -> Table:
    p = asymptotics.choose_p(args.N, args.q)
    floor_p, _ = asymptotics.floor_formula_p(args.N, args.q)
    row = {"N": args.N, "q": args.q, "p": p, "floor_formula_p": floor_p}
    return Table(list(row), [row], str(p))


def cmd_bound(args) -> Table:
    if args.n_to < args.n_from:
        raise ValueError("--n-to must be >= --n-from")
    reports = asymptotics.lower_bound_sweep(
        args.n_from, args.n_to, args.q, exact_budget=args.exact_budget
    )
    columns = ["n", "q", "p", "N", "lower_sum", "exact_B", "ratio", "ln_lower_sum", "ln_ratio"]
    rows = [{c: getattr(r, c) for c in columns} for r in reports]
    lines = [" ".join(columns)]
    lines += [" ".join(_csv_cell(r[c]) or "-" for c in columns) for r in rows]
    if rows:
        lines.append(f"min_ratio {real(min(r['ratio'] for r in rows))}")
    return Table(columns, rows, "\n".join(lines))


def cmd_lemma5(args) -> Table:
    p = asymptotics.choose_p(args.N, args.q)
    rows = []
    running = math.inf
    for P, ratio in asymptotics.lemma5_sweep(args.N, args.q):
        running = min(running, ratio)
        rows.append({"N": args.N, "q": args.q, "p": p, "P": P, "ratio": ratio, "running_min": running})
    columns = ["N", "q", "p", "P", "ratio", "running_min"]
    lines = [f"{r['P']} {real(r['ratio'])}" for r in rows]
    lines.append(f"min_ratio {real(running)}")
    return Table(columns, rows, "\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", type=int, default=2, help="alphabet size (default 2)")
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--shards", type=int, default=1)
    common.add_argument("--budget", type=int, default=enumeration.DEFAULT_BUDGET,
                        help="largest number of words an exhaustive search may visit")
    common.add_argument("--cache-path", help="plain-text cache of exact counts")

    parser = argparse.ArgumentParser(prog="privwords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "test whether a word is privileged")
    sp.add_argument("word")
    sp = add("count", cmd_count, "count privileged words of length n")
    sp.add_argument("-n", type=int, required=True)
    sp = add("list", cmd_list, "list privileged words of length n")
    sp.add_argument("-n", type=int, required=True)
    sp = add("autocorr", cmd_autocorr, "autocorrelation and correlation polynomial")
    sp.add_argument("-P", required=True)
    sp = add("gp", cmd_gp, "size of the prefix-synchronized code G_P(N)")
    sp.add_argument("-P", required=True)
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("--mode", choices=["exact", "brute", "asymptotic"], default="exact")
    sp = add("rho", cmd_rho, "dominant root of 1 + (z - q) f(z)")
    sp.add_argument("-P", required=True)
    sp = add("expansions", cmd_expansions, "ln rho and ln R_Q against their expansions")
    sp.add_argument("-P", required=True)
    sp = add("choose-p", cmd_choose_p, "prefix length for block length N")
    sp.add_argument("-N", type=int, required=True)
    sp = add("bound", cmd_bound, "lower-bound sums over a range of n")
    sp.add_argument("--n-from", type=int, required=True)
    sp.add_argument("--n-to", type=int, required=True)
    sp.add_argument("--exact-budget", type=int, default=2**16,
                    help="attach exact B(n, q) when q**n is at most this")
    sp = add("lemma5", cmd_lemma5, "G_P(N) n^2 / q^n over privileged P of length choose_p(N)")
    sp.add_argument("-N", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.q < 2:
            raise ValueError("-q must be >= 2")
        if args.budget < 1 or args.shards < 1:
            raise ValueError("--budget and --shards must be >= 1")
        text = args.func(args).render(args.format)
    except BudgetExceeded as exc:
        print(f"privwords: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NumericDegeneracy as exc:
        print(f"privwords: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"privwords: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

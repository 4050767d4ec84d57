"""Command-line interface exposing all engines with machine-readable output.

Word strings on this CLI read left-to-right in order of application: the
first character is the factor applied first to the vacuum (the rightmost
factor of the written operator product).

Exit codes: 0 success; 1 cross-engine disagreement or failed relation check
(a theorem-check failure, distinct from user error); 2 usage error; 3
enumeration cap exceeded without --force.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analytic, fock, moments, partitions, words
from .partitions import Family, LimitExceededError
from .poly import MultiPoly

# First ten values of the lam = 1 conditionally free sequence, kept as a
# built-in cross-check for the sequence command (OEIS A054391 family).
CFREE_SEQUENCE_REFERENCE = (1, 2, 5, 14, 41, 123, 374, 1147, 3538, 10958)

ENGINE_NAMES = ("nc", "blockwise", "jacobi", "operator")

_ENGINE_FUNCS = {
    "nc": lambda n, force: moments.moment_nc(n, max_n=n if force else None),
    "blockwise": lambda n, force: moments.moment_blockwise(n, max_n=n if force else None),
    "jacobi": lambda n, force: moments.moment_jacobi(n),
    "operator": lambda n, force: fock.vacuum_moment(n),
}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


def _add_st_flags(parser, with_lambda=True):
    if with_lambda:
        parser.add_argument("--lam", type=_fraction, default=Fraction(1),
                            help="rate parameter lambda (rational, default 1)")
    gs = parser.add_mutually_exclusive_group()
    gs.add_argument("--s", type=_fraction, help="deformation parameter s in (0,1]")
    gs.add_argument("--s-one", action="store_true", help="specialize s = 1")
    gs.add_argument("--s-zero", action="store_true", help="take the limit s -> 0")
    gt = parser.add_mutually_exclusive_group()
    gt.add_argument("--t", type=_fraction, help="deformation parameter t in (0,1]")
    gt.add_argument("--t-one", action="store_true", help="specialize t = 1")
    gt.add_argument("--t-zero", action="store_true", help="take the limit t -> 0")


def _specialize(poly: MultiPoly, args) -> MultiPoly:
    """Apply the requested s/t limits to an exact polynomial."""
    if args.s_zero or args.t_zero:
        poly = poly.specialize_zero(kill_s=args.s_zero, kill_t=args.t_zero)
    if args.s_one or args.t_one:
        poly = poly.specialize_one(s=args.s_one, t=args.t_one)
    return poly


def _st_floats(args) -> tuple:
    """(s, t) as floats for the analytic layer, honoring limit flags."""
    if args.s_one:
        s = 1.0
    elif args.s_zero:
        s = 0.0
    elif args.s is not None:
        s = float(args.s)
    else:
        s = 1.0
    if args.t_one:
        t = 1.0
    elif args.t_zero:
        t = 0.0
    elif args.t is not None:
        t = float(args.t)
    else:
        t = 1.0
    return s, t


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockpoisson",
        description="Moments, partitions, operator words, Fock matrices and "
        "Cauchy transforms of the (s,t)-deformed free Poisson distribution.",
        epilog="Word strings read left-to-right as the factors applied first "
        "to the vacuum; the leftmost character is the rightmost factor of the "
        "written product.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mom = sub.add_parser("moments", help="moment table by one engine or all")
    p_mom.add_argument("--nmax", type=int, default=7)
    p_mom.add_argument("--engine", choices=ENGINE_NAMES + ("all",), default="all")
    _add_st_flags(p_mom, with_lambda=False)
    p_mom.add_argument("--at", metavar="L,S,T",
                       help="also evaluate each row at rational lambda,s,t")
    p_mom.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p_mom.add_argument("--force", action="store_true",
                       help="override the enumeration size cap")

    p_seq = sub.add_parser("sequence",
                           help="lam = 1 conditionally free moment sequence")
    p_seq.add_argument("--nmax", type=int, default=10)
    p_seq.add_argument("--format", choices=("plain", "json"), default="plain")
    p_seq.add_argument("--force", action="store_true")

    p_par = sub.add_parser("partitions", help="enumerate or count partition families")
    p_par.add_argument("--n", type=int, required=True)
    p_par.add_argument("--family", choices=[f.name for f in Family], default="NC")
    p_par.add_argument("--list", action="store_true", help="list the members")
    p_par.add_argument("--stats", action="store_true",
                       help="with --list, include depths and weights")
    p_par.add_argument("--count-by-blocks", action="store_true",
                       help="table of counts by number of blocks")
    p_par.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p_par.add_argument("--force", action="store_true")

    p_wrd = sub.add_parser("words", help="admissibility, bijection, card weights")
    src = p_wrd.add_mutually_exclusive_group(required=True)
    src.add_argument("--check", metavar="WORD", help="word over C/A/M/K")
    src.add_argument("--from-partition", metavar="JSON",
                     help="blocks as a JSON array of arrays")
    p_wrd.add_argument("--cards", action="store_true", help="draw the card arrangement")
    p_wrd.add_argument("--degenerate", action="store_true",
                       help="weigh intermediate cards in the degenerate t = 1 mode")
    p_wrd.add_argument("--format", choices=("plain", "json"), default="plain")

    p_fck = sub.add_parser("fock", help="dump operator matrices, check relations")
    p_fck.add_argument("--n", type=int, default=6, help="truncation level")
    p_fck.add_argument("--dump",
                       choices=("poisson", "creation", "annihilation", "scalar",
                                "intermediate"),
                       help="print the matrix as JSON polynomial strings")
    p_fck.add_argument("--relations", action="store_true",
                       help="verify the commutation relations")
    p_fck.add_argument("--format", choices=("plain", "json"), default="plain")

    p_cau = sub.add_parser("cauchy", help="Cauchy transform on a grid (CSV)")
    _add_st_flags(p_cau)
    p_cau.add_argument("--depth", type=int, default=80,
                       help="continued fraction truncation depth")
    p_cau.add_argument("--re", default="-2:4:7", metavar="MIN:MAX:STEPS")
    p_cau.add_argument("--im", default="0.5:3.5:7", metavar="MIN:MAX:STEPS")
    p_cau.add_argument("--closed", action="store_true",
                       help="also evaluate the s=1, t->0 closed form and the difference")
    p_cau.add_argument("--format", choices=("csv", "json"), default="csv")

    return parser


# -- moments -----------------------------------------------------------------


def _cmd_moments(args) -> int:
    if args.nmax < 0:
        print("error: --nmax must be >= 0", file=sys.stderr)
        return 2
    at = None
    if args.at:
        parts = args.at.split(",")
        if len(parts) != 3:
            print("error: --at expects LAMBDA,S,T", file=sys.stderr)
            return 2
        try:
            at = tuple(Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError):
            print(f"error: --at values must be rationals, got {args.at!r}",
                  file=sys.stderr)
            return 2

    engines = ENGINE_NAMES if args.engine == "all" else (args.engine,)
    rows = []
    agree = True
    for n in range(1, args.nmax + 1):
        values = {name: _ENGINE_FUNCS[name](n, args.force) for name in engines}
        first = values[engines[0]]
        if any(v != first for v in values.values()):
            agree = False
        rows.append((n, _specialize(first, args)))

    out = []
    if args.format == "plain":
        for n, poly in rows:
            line = f"m_{n} = {poly}"
            if at is not None:
                line += f" = {poly.eval(*at)}"
            out.append(line)
        if args.engine == "all":
            out.append("ENGINES AGREE" if agree else "ENGINE DISAGREEMENT")
        print("\n".join(out))
    elif args.format == "csv":
        header = "n,moment" + (",value" if at is not None else "")
        out.append(header)
        for n, poly in rows:
            line = f'{n},"{poly}"'
            if at is not None:
                line += f",{poly.eval(*at)}"
            out.append(line)
        print("\n".join(out))
    else:
        payload = {
            "engine": args.engine,
            "rows": [
                {
                    "n": n,
                    "moment": str(poly),
                    "terms": poly.to_json_terms(),
                    **({"value": str(poly.eval(*at))} if at is not None else {}),
                }
                for n, poly in rows
            ],
        }
        if args.engine == "all":
            payload["engines_agree"] = agree
        print(json.dumps(payload, indent=2))
    return 0 if agree else 1


def _cmd_sequence(args) -> int:
    if args.nmax < 1:
        print("error: --nmax must be >= 1", file=sys.stderr)
        return 2
    table = moments.cfree_moments(args.nmax, max_n=args.nmax if args.force else None)
    values = [int(table.m[n].eval(1, 1, 1)) for n in range(1, args.nmax + 1)]
    upto = min(args.nmax, len(CFREE_SEQUENCE_REFERENCE))
    matches = tuple(values[:upto]) == CFREE_SEQUENCE_REFERENCE[:upto]
    if args.format == "plain":
        print(" ".join(str(v) for v in values))
    else:
        print(json.dumps({"values": values, "matches_reference": matches}))
    if not matches:
        print("error: sequence deviates from the built-in reference values",
              file=sys.stderr)
        return 1
    return 0


# -- partitions ----------------------------------------------------------------


def _cmd_partitions(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    family = Family[args.family]
    max_n = args.n if args.force else None

    if args.count_by_blocks:
        counts = partitions.count_by_blocks(args.n, family, max_n=max_n)
        if args.format == "json":
            print(json.dumps({"n": args.n, "family": family.name,
                              "counts_by_blocks": counts, "total": sum(counts)}))
        elif args.format == "csv":
            print("blocks,count")
            for k, c in enumerate(counts, 1):
                print(f"{k},{c}")
        else:
            for k, c in enumerate(counts, 1):
                print(f"{k} {c}")
            print(f"total {sum(counts)}")
        return 0

    if args.list:
        items = []
        for p in partitions.enumerate_family(args.n, family, max_n=max_n):
            blocks = json.dumps(p.to_json_obj(), separators=(",", ":"))
            if args.stats:
                st = p.stats()
                w = moments.weight(p)
                if args.format == "json":
                    items.append({"blocks": p.to_json_obj(),
                                  "depths": list(st.block_depths),
                                  "td1": st.td1, "td2": st.td2,
                                  "weight": str(w)})
                else:
                    print(f"{blocks} depths={list(st.block_depths)} "
                          f"td1={st.td1} td2={st.td2} weight={w}")
            else:
                if args.format == "json":
                    items.append(p.to_json_obj())
                else:
                    print(blocks)
        if args.format == "json":
            print(json.dumps(items))
        return 0

    total = sum(1 for _ in partitions.enumerate_family(args.n, family, max_n=max_n))
    if args.format == "json":
        print(json.dumps({"n": args.n, "family": family.name, "count": total}))
    else:
        print(total)
    return 0


# -- words -----------------------------------------------------------------------


def _cmd_words(args) -> int:
    if args.check is not None:
        try:
            word = words.OperatorWord.parse(args.check)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        try:
            blocks = json.loads(args.from_partition)
            n = sum(len(b) for b in blocks)
            p = partitions.NCPartition(n, blocks)
        except (ValueError, TypeError) as exc:
            print(f"error: invalid partition: {exc}", file=sys.stderr)
            return 2
        word = words.OperatorWord.from_partition(p)

    admissible = word.is_admissible()
    info = {"word": str(word), "levels": word.levels(), "admissible": admissible}
    if admissible:
        part = word.to_partition()
        arr = word.arrangement(degenerate_t=args.degenerate)
        info["partition"] = part.to_json_obj()
        info["cards"] = arr.labels()
        info["weight"] = str(arr.total_weight)
        info["weight_terms"] = arr.total_weight.to_json_terms()
        if args.cards:
            info["drawing"] = arr.render()

    if args.format == "json":
        print(json.dumps(info, indent=2))
        return 0

    print(f"word: {info['word']}")
    print(f"levels: {' '.join(str(v) for v in info['levels'])}")
    print(f"admissible: {'yes' if admissible else 'no'}")
    if admissible:
        print(f"partition: {json.dumps(info['partition'], separators=(',', ':'))}")
        print(f"cards: {' '.join(info['cards'])}")
        print(f"weight: {info['weight']}")
        if args.cards:
            print(info["drawing"])
    return 0


# -- fock ------------------------------------------------------------------------


def _cmd_fock(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    did_something = False
    status = 0
    if args.dump:
        did_something = True
        if args.dump == "poisson":
            matrix = fock.poisson_matrix(args.n)
        else:
            creation, annihilation, scalar, intermediate = fock.build_generators(args.n)
            matrix = {"creation": creation, "annihilation": annihilation,
                      "scalar": scalar, "intermediate": intermediate}[args.dump]
        print(json.dumps({"operator": args.dump, "dim": matrix.dim,
                          "entries": matrix.to_json_obj()}, indent=2))
    if args.relations:
        did_something = True
        if args.n < 2:
            print("error: --relations needs --n >= 2", file=sys.stderr)
            return 2
        report = fock.check_relations(args.n)
        ok = all(report.values())
        if args.format == "json":
            print(json.dumps({"n": args.n, "relations": report, "all_hold": ok}))
        else:
            for name, holds in report.items():
                print(f"{name}: {'ok' if holds else 'FAILED'}")
            print("ALL RELATIONS HOLD" if ok else "RELATION CHECK FAILED")
        if not ok:
            status = 1
    if not did_something:
        print("error: nothing to do; pass --dump and/or --relations", file=sys.stderr)
        return 2
    return status


# -- cauchy -----------------------------------------------------------------------


def _parse_range(text: str):
    try:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError:
        raise ValueError(f"expected MIN:MAX:STEPS, got {text!r}") from None
    if steps < 1:
        raise ValueError("STEPS must be >= 1")
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def _cmd_cauchy(args) -> int:
    try:
        res = _parse_range(args.re)
        ims = _parse_range(args.im)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if any(v <= 0 for v in ims):
        print("error: imaginary parts must be positive", file=sys.stderr)
        return 2
    if args.depth < 1:
        print("error: --depth must be >= 1", file=sys.stderr)
        return 2
    lam = float(args.lam)
    s, t = _st_floats(args)
    if args.closed and not (s == 1.0 and t == 0.0):
        print("error: --closed requires s = 1 and t -> 0 (--s-one --t-zero)",
              file=sys.stderr)
        return 2

    rows = []
    try:
        for im in ims:
            for re in res:
                z = complex(re, im)
                g = analytic.cauchy_cf(z, lam, s, t, args.depth)
                row = [re, im, g.real, g.imag]
                if args.closed:
                    gc = analytic.cauchy_cfree_closed(z, lam)
                    row += [gc.real, gc.imag, abs(g - gc)]
                rows.append(row)
    except analytic.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    header = ["re_z", "im_z", "re_g", "im_g"]
    if args.closed:
        header += ["re_g_closed", "im_g_closed", "abs_diff"]
    if args.format == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows]))
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(_fmt_float(v) for v in row))
    return 0


_COMMANDS = {
    "moments": _cmd_moments,
    "sequence": _cmd_sequence,
    "partitions": _cmd_partitions,
    "words": _cmd_words,
    "fock": _cmd_fock,
    "cauchy": _cmd_cauchy,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("pass --force to override the cap for this run", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

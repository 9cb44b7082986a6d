"""Command-line interface: ``genus-range <command> ...``.

Exit status is 0 on success, 1 when the request violates a precondition or
asks for something provably impossible, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import run_all
from .errors import CapExceeded, DowError, RealizationError, SurveyFileError, UnrealizableByTheorem
from .families import FAMILIES, realize_range
from .graph import build
from .ribbon import GenusRange, boundary_histogram, edge_trace_components, genus_from_boundaries
from .ribbon import range_from_histogram, trace
from .survey import conjecture_probe, emit_histogram, find_with_range, run_survey_file, survey
from .words import Dow, canonicalize, parse

_DOMAIN_ERRORS = (DowError, CapExceeded, RealizationError, SurveyFileError, ValueError, IndexError)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _word_arg(ns) -> Dow:
    return parse(ns.word)


def cmd_canon(ns, out):
    out.write(f"{canonicalize(_word_arg(ns))}\n")


def cmd_genus_range(ns, out):
    w = _word_arg(ns)
    g = build(w)
    hist = boundary_histogram(g)
    r = range_from_histogram(g.n, hist)
    if ns.json:
        payload = {
            "word": str(w),
            "n": w.n,
            "genus_range": r.as_list(),
            "boundary_counts": {str(b): hist[b] for b in sorted(hist)},
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"{r}\n")


def _parse_bits(bits: str, n: int) -> int:
    if len(bits) != n or set(bits) - {"0", "1"}:
        raise ValueError(f"--bits must be a string of {n} characters 0/1 (one per vertex), got {bits!r}")
    choice = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            choice |= 1 << i
    return choice


def cmd_trace(ns, out):
    w = _word_arg(ns)
    g = build(w)
    choice = _parse_bits(ns.bits, g.n)
    dec = trace(g, choice)
    out.write(f"b={dec.b}\n")
    out.write(f"genus={genus_from_boundaries(g.n, dec.b)}\n")
    out.write("edge components\n")
    for e in range(1, g.num_edges + 1):
        comps = sorted(edge_trace_components(g, choice, e))
        out.write(f"e{e} {','.join(str(c + 1) for c in comps)}\n")


def cmd_survey(ns, out):
    if ns.resume and ns.out and ns.resume != ns.out:
        raise ValueError("--out and --resume must name the same file when both are given")
    path = ns.resume or ns.out
    if path:
        fam, complete = run_survey_file(
            ns.n, path, resume=bool(ns.resume), threads=ns.threads, max_records=ns.max_records
        )
        if not complete:
            sys.stderr.write(f"survey stopped early; continue with --resume {path}\n")
    else:
        fam = survey(ns.n, threads=ns.threads)
    emit_histogram(fam, ns.format, out)


def cmd_find(ns, out):
    r = GenusRange(ns.min, ns.max)
    for w in find_with_range(ns.n, r, limit=ns.limit, threads=ns.threads):
        out.write(f"{w}\n")


def cmd_family(ns, out):
    gen = FAMILIES[ns.name]
    params = [int(p) for p in ns.params]
    try:
        w = gen(*params)
    except TypeError:
        arity = gen.__code__.co_argcount
        raise ValueError(f"family {ns.name} takes {arity} integer parameter(s)") from None
    out.write(f"{w}\n")


def cmd_realize(ns, out):
    out.write(f"{realize_range(ns.min, ns.max, ns.vertices)}\n")


def cmd_verify(ns, out):
    results = run_all(ns.max_n)
    for res in results:
        out.write(res.line() + "\n")
    failed = [r for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return 1 if failed else 0


def cmd_probe(ns, out):
    out.write(conjecture_probe(ns.n, ns.kind, threads=ns.threads).render() + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genus-range", description="Genus ranges of assembly graphs given as double-occurrence words.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("canon", help="canonical form of a word")
    s.add_argument("word")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("genus-range", help="genus range of a word")
    s.add_argument("word")
    s.add_argument("--json", action="store_true", help="print word, range and boundary counts as JSON")
    s.set_defaults(func=cmd_genus_range)

    s = sub.add_parser("trace", help="boundary components of one embedding")
    s.add_argument("word")
    s.add_argument("--bits", required=True, help="one 0/1 per vertex; character i flips vertex i+1")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("survey", help="genus-range histogram over all graphs of size N")
    s.add_argument("n", type=_nonneg, metavar="N")
    s.add_argument("--out", help="write a JSONL checkpoint of every record")
    s.add_argument("--resume", help="continue an interrupted JSONL checkpoint")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--threads", type=_positive)
    s.add_argument("--max-records", type=_nonneg, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("find", help="canonical words of size N with genus range [MIN,MAX]")
    s.add_argument("n", type=_nonneg, metavar="N")
    s.add_argument("min", type=_nonneg, metavar="MIN")
    s.add_argument("max", type=_nonneg, metavar="MAX")
    s.add_argument("--limit", type=_nonneg, default=10)
    s.add_argument("--threads", type=_positive)
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("family", help="a member of a named family")
    s.add_argument("name", choices=sorted(FAMILIES))
    s.add_argument("params", nargs="*", type=_nonneg)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("realize", help="a word on VERTICES vertices with genus range [MIN,MAX]")
    s.add_argument("min", type=_nonneg, metavar="MIN")
    s.add_argument("max", type=_nonneg, metavar="MAX")
    s.add_argument("vertices", type=_positive, metavar="VERTICES")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", help="run the structural property checks")
    s.add_argument("--max-n", type=_positive)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("probe", help="search size N for counterexamples to an open claim")
    s.add_argument("n", type=_nonneg, metavar="N")
    s.add_argument("kind", choices=("singleton-gap", "zero-one"))
    s.add_argument("--threads", type=_positive)
    s.set_defaults(func=cmd_probe)
    return p


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        status = ns.func(ns, sys.stdout)
    except UnrealizableByTheorem as exc:
        sys.stderr.write(f"refused ({exc.reason}): {exc}\n")
        return 1
    except _DOMAIN_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    sys.stdout.flush()
    return status or 0


if __name__ == "__main__":
    sys.exit(main())

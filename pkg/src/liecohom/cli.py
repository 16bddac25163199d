"""Command-line front end: ``liecohom compute|grid|check|bench``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time

from .algebra import AlgebraError, AlgebraSpec, HAMILTONIAN, POISSON, load_algebra_file
from .engine import (SPLIT, STRAIGHT, EngineError, algebra_for, compute, grid_document, grid_report,
                     render_grid, render_result, result_document, same_quotient, self_test)
from .linalg import LinalgError, parse_field

_ALGEBRA_RE = re.compile(r"^(H|Po):(\d+)\|(\d+)$")


class UsageError(ValueError):
    pass


def parse_algebra(text: str):
    """``H:2|0`` means H(2|0); the even count must be even.  Anything else is a file path."""
    m = _ALGEBRA_RE.match(text.strip())
    if m:
        kind = HAMILTONIAN if m.group(1) == "H" else POISSON
        even, odd = int(m.group(2)), int(m.group(3))
        if even % 2:
            raise UsageError(f"even dimension must be even in {text!r}")
        if even + odd == 0:
            raise UsageError(f"no variables in {text!r}")
        return AlgebraSpec(kind, even // 2, odd)
    if not os.path.exists(text):
        raise UsageError(f"{text!r} is neither KIND:2n|m nor a readable algebra file")
    try:
        return load_algebra_file(text)
    except OSError as exc:
        raise UsageError(f"cannot read {text}: {exc}") from exc


def parse_range(text: str) -> tuple[int, int]:
    """``5`` or inclusive ``a..b``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use an integer or a..b") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _field(text):
    try:
        return parse_field(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _modes(mode: str) -> list[str]:
    return {"split": [SPLIT], "straight": [STRAIGHT], "both": [SPLIT, STRAIGHT]}[mode]


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False)


def _result_csv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["algebra", "field", "mode", "k", "g", "dim_c", "dim_z", "dim_b", "dim_h",
                "n_subcomplexes", "max_block"])
    for r in results:
        w.writerow([r.algebra, r.field, r.mode, r.k, r.g, r.dim_c[1], r.dim_z, r.dim_b, r.dim_h,
                    r.n_subcomplexes, r.max_block])
    return buf.getvalue()


def _grid_csv(rep) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "g", "dim_c", "n_subcomplexes", "max_block", "dim_z", "dim_b", "dim_h"])
    for (k, g), c in sorted(rep.cells.items()):
        w.writerow([k, g, c.dim_c, "" if c.n_sub is None else c.n_sub,
                    "" if c.max_sub is None else c.max_sub, _blank(c.dim_z), _blank(c.dim_b), _blank(c.dim_h)])
    return buf.getvalue()


def _blank(x):
    return "" if x is None else x


def cmd_compute(args) -> int:
    source = parse_algebra(args.algebra)
    fld = _field(args.field)
    k, g = args.k, args.g
    alg = algebra_for(source, [(k, g)])
    results = [compute(alg, k, g, fld, mode, jobs=args.jobs) for mode in _modes(args.mode)]
    status = 0
    if len(results) == 2:
        a, b = results
        if a.dims != b.dims or not same_quotient(a, b, alg, fld):
            print("error: split and straightforward modes disagree", file=sys.stderr)
            status = 1
    if args.format == "json":
        docs = [result_document(r, alg, timings=args.timings) for r in results]
        _emit(args, _dump(docs[0] if len(docs) == 1 else docs))
    elif args.format == "csv":
        _emit(args, _result_csv(results))
    else:
        _emit(args, "\n".join(render_result(r, alg, show_timings=args.timings) for r in results))
    return status


def cmd_grid(args) -> int:
    source = parse_algebra(args.algebra)
    fld = _field(args.field)
    mode = _modes(args.mode)[0] if args.mode != "both" else SPLIT
    progress = None
    if args.verbose:
        def progress(cell):
            print(f"  ({cell.k},{cell.g}) dimC={cell.dim_c} dimH={cell.dim_h} {cell.seconds:.2f}s", file=sys.stderr)
    rep = grid_report(source, args.k, args.g, fld, mode, max_dim=args.max_dim, jobs=args.jobs,
                      progress=progress)
    if args.format == "json":
        _emit(args, _dump(grid_document(rep)))
    elif args.format == "csv":
        _emit(args, _grid_csv(rep))
    else:
        nontrivial = ", ".join(f"H^{k}_{g}" for k, g in rep.nontrivial()) or "none"
        _emit(args, render_grid(rep) + f"\nnontrivial: {nontrivial}")
    return 0


def cmd_check(args) -> int:
    source = parse_algebra(args.algebra)
    fld = _field(args.field)
    report = self_test(source, args.k[1], args.g, fld, max_dim=args.max_dim)
    if args.format == "json":
        doc = {"algebra": report.algebra, "passed": report.passed,
               "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]}
        _emit(args, _dump(doc))
    else:
        _emit(args, report.render())
    return 0 if report.passed else 1


def cmd_bench(args) -> int:
    source = parse_algebra(args.algebra)
    fld = _field(args.field)
    k, g = args.k, args.g
    alg = algebra_for(source, [(k, g)])
    lines = [f"bench {alg.descriptor} (k,g)=({k},{g}) over {args.field}"]
    walls = {}
    results = {}
    for mode in (SPLIT, STRAIGHT):
        t0 = time.perf_counter()
        res = compute(alg, k, g, fld, mode, jobs=args.jobs)
        walls[mode] = time.perf_counter() - t0
        results[mode] = res
        phases = ", ".join(f"{p} {v:.3f}s" for p, v in res.timings.items())
        lines.append(f"  {mode:16s} wall {walls[mode]:8.3f}s  dimH={res.dim_h}  largest block {res.max_block}"
                     f"  [{phases}]")
    same = results[SPLIT].dims == results[STRAIGHT].dims
    lines.append(f"  dim C^k_g = {results[SPLIT].dim_c[1]}, speedup {walls[STRAIGHT] / walls[SPLIT]:.2f}x,"
                 f" results {'agree' if same else 'DISAGREE'}")
    _emit(args, "\n".join(lines))
    return 0 if same else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liecohom", description="Graded cohomology of Lie superalgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ranges: bool):
        sp.add_argument("--algebra", required=True, help="H:2n|m, Po:2n|m or a JSON algebra file")
        if ranges:
            sp.add_argument("--k", type=parse_range, required=True, help="degree or range a..b")
            sp.add_argument("--g", type=parse_range, required=True, help="grade or range a..b")
        else:
            sp.add_argument("--k", type=int, required=True)
            sp.add_argument("--g", type=int, required=True)
        sp.add_argument("--field", default="Q", help="Q, Fp (prime from LIECOHOM_PRIME) or F<prime>")
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        sp.add_argument("--output", help="write to this file instead of stdout")
        sp.add_argument("--jobs", type=int, default=None, help="worker processes for subcomplexes")

    c = sub.add_parser("compute", help="one cell H^k_g")
    common(c, False)
    c.add_argument("--mode", choices=["split", "straight", "both"], default="split")
    c.add_argument("--timings", action="store_true", help="include phase timings")
    c.set_defaults(func=cmd_compute)

    gr = sub.add_parser("grid", help="table of cells over k and g ranges")
    common(gr, True)
    gr.add_argument("--mode", choices=["split", "straight"], default="split")
    gr.add_argument("--max-dim", type=int, default=None, help="skip cells with larger dim C^k_g")
    gr.add_argument("--verbose", action="store_true")
    gr.set_defaults(func=cmd_grid)

    ch = sub.add_parser("check", help="self-test suites")
    common(ch, True)
    ch.add_argument("--max-dim", type=int, default=300)
    ch.set_defaults(func=cmd_check)

    b = sub.add_parser("bench", help="time split against straightforward")
    common(b, False)
    b.set_defaults(func=cmd_bench)
    return p


def _attach_negative_values(argv):
    # argparse takes "-2..1" for an option; glue it to its flag instead
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--k", "--g"):
            nxt = next(it, None)
            if nxt is not None:
                out.append(f"{tok}={nxt}")
                continue
        out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_negative_values(argv))
    if getattr(args, "jobs", None) is None:
        args.jobs = os.cpu_count() or 1
    try:
        return args.func(args)
    except (UsageError, AlgebraError, EngineError, LinalgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

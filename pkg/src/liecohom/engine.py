"""Graded cohomology H^k_g in the trivial module, straightforward or split."""

from __future__ import annotations

import datetime as _dt
import functools
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from . import __version__
from .algebra import (Algebra, AlgebraSpec, EXPLICIT, WindowError, check_antisymmetry, check_grading,
                      check_jacobi, make_algebra)
from .cochain import (CochainVector, Monomial, _slots, apply_differential, derivation_matrix,
                      differential_matrix, dual_element, evaluate_cochain, family_grade_range,
                      format_cochain, generate_monomials, min_sums, total_dimension, wedge)
from .linalg import QQ, PrimeField, SparseMatrix, block_cohomology, format_exact, span_rank
from .subcomplex import check_block_diagonal, interaction_graph, partition

PARALLEL_MIN_BLOCK = 300
SPLIT = "split"
STRAIGHT = "straightforward"


class EngineError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# algebra windows


def _probe_min_sums(spec: AlgebraSpec, jmax: int) -> list[int | None]:
    probe_alg = make_algebra(spec)
    if spec.kind == EXPLICIT:
        return min_sums(probe_alg, jmax)
    lo, hi = _family_range(spec)
    width = 1
    while True:
        top = lo + width if hi is None else min(lo + width, hi)
        probe_alg = make_algebra(spec.with_window(lo, top))
        sums = min_sums(probe_alg, jmax)
        # sums are final once the last slot used lies strictly below the window top
        if (hi is not None and top >= hi) or (sums[-1] is not None and _last_slot(probe_alg, jmax) < top):
            return sums
        width *= 2


def _last_slot(alg: Algebra, j: int) -> int:
    gen = _slots(alg)
    last = None
    for _ in range(j):
        last = next(gen)
    return last if last is not None else alg.window[0]


def _family_range(spec: AlgebraSpec):
    tmp = Algebra([], {}, spec.with_window(0, 0))
    return family_grade_range(tmp)


def required_window(spec: AlgebraSpec, cells: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Tight basis window covering C^{k-1}_g, C^k_g, C^{k+1}_g for every cell."""
    cells = list(cells)
    lo, hi = _family_range(spec)
    kmax = max(k for k, _ in cells) + 1
    sums = _probe_min_sums(spec.with_window(lo, lo), kmax)
    top = lo
    for k, g in cells:
        for j in (k - 1, k, k + 1):
            if j < 1 or sums[j - 1] is None:
                continue
            top = max(top, g - sums[j - 1])
    if hi is not None:
        top = min(top, hi)
    return lo, max(lo, top)


@functools.lru_cache(maxsize=16)
def _cached_algebra(spec: AlgebraSpec) -> Algebra:
    return make_algebra(spec)


def algebra_for(source, cells: Iterable[tuple[int, int]]) -> Algebra:
    """An algebra whose window covers the given (k, g) cells."""
    if isinstance(source, Algebra):
        if source.spec.kind == EXPLICIT:
            return source
        spec = source.spec
    else:
        spec = source
    if spec.kind == EXPLICIT:
        raise EngineError("explicit algebras must be passed as loaded Algebra objects")
    lo, hi = required_window(spec, cells)
    if isinstance(source, Algebra) and source.window[0] <= lo and source.window[1] >= hi:
        return source
    return _cached_algebra(spec.with_window(lo, hi))


def _check_field(alg: Algebra, k: int, fld):
    if isinstance(fld, PrimeField) and alg.n_odd and fld.p <= k + 1:
        raise EngineError(f"F{fld.p} cannot divide by odd multiplicities up to {k + 1}! ; use p > {k + 1}")


# ---------------------------------------------------------------------------
# results


@dataclass
class StatRow:
    dim_km1: int
    dim_k: int
    dim_kp1: int
    dim_z: int
    dim_b: int
    dim_h: int
    repeat: int = 1

    @property
    def key(self):
        return (self.dim_km1, self.dim_k, self.dim_kp1, self.dim_z, self.dim_b, self.dim_h)


@dataclass
class CohomologyResult:
    algebra: str
    k: int
    g: int
    mode: str
    field: str
    dim_c: tuple[int, int, int]
    dim_z: int
    dim_b: int
    dim_h: int
    representatives: list[CochainVector]
    subcomplex_stats: list[StatRow] = field(default_factory=list)
    n_subcomplexes: int = 1
    max_block: int = 0
    timings: dict[str, float] = field(default_factory=dict)
    hint: bool = False
    coreps: list[CochainVector] | None = field(default=None, repr=False)
    blocks: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.dim_h != self.dim_z - self.dim_b or self.dim_h < 0:
            raise EngineError(f"inconsistent dimensions Z={self.dim_z} B={self.dim_b} H={self.dim_h}")
        if len(self.representatives) != self.dim_h:
            raise EngineError("representative count differs from dim H")

    @property
    def dims(self):
        return (self.dim_z, self.dim_b, self.dim_h)


@dataclass
class _Complex:
    """Bases and both differentials around C^k_g."""

    alg: Algebra
    k: int
    g: int
    bases: tuple[list[Monomial], list[Monomial], list[Monomial]]
    d_in: SparseMatrix
    d_out: SparseMatrix
    timings: dict[str, float]


def _bases(alg, k, g):
    return (
        generate_monomials(alg, k - 1, g) if k >= 1 else [],
        generate_monomials(alg, k, g),
        generate_monomials(alg, k + 1, g),
    )


def build_complex(alg: Algebra, k: int, g: int) -> _Complex:
    t0 = time.perf_counter()
    bases = _bases(alg, k, g)
    t1 = time.perf_counter()
    if k >= 1:
        d_in = differential_matrix(alg, k - 1, g, bases[0], bases[1], complete=True)
    else:
        d_in = SparseMatrix(len(bases[1]), 0)
    d_out = differential_matrix(alg, k, g, bases[1], bases[2], complete=True)
    t2 = time.perf_counter()
    return _Complex(alg, k, g, bases, d_in, d_out, {"basis": t1 - t0, "matrices": t2 - t1})


def _field_name(fld) -> str:
    return "Q" if fld == QQ else f"F{fld.p}"


def _to_cochains(k, g, basis, vectors):
    if vectors is None:
        return None
    return [CochainVector.from_vector(k, g, basis, v) for v in vectors]


def _block_job(args):
    d_in, d_out, fld, want_coreps = args
    return block_cohomology(d_in, d_out, fld, want_reps=True, want_coreps=want_coreps)


def _run_blocks(jobs_args, jobs: int | None):
    jobs = jobs or 1
    # process start-up only pays off for sizeable blocks
    big = sum(1 for a in jobs_args if a[0].nrows > PARALLEL_MIN_BLOCK)
    if jobs <= 1 or big < 2:
        return [_block_job(a) for a in jobs_args]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_block_job, jobs_args))


def compute_straightforward(source, k: int, g: int, fld=QQ, want_coreps: bool = False,
                            complex_: _Complex | None = None) -> CohomologyResult:
    """Full bases, full matrices of d^{k-1} and d^k, one elimination each."""
    alg = algebra_for(source, [(k, g)])
    _check_field(alg, k, fld)
    cx = complex_ or build_complex(alg, k, g)
    t0 = time.perf_counter()
    blk = block_cohomology(cx.d_in, cx.d_out, fld, want_reps=True, want_coreps=want_coreps)
    t1 = time.perf_counter()
    n = len(cx.bases[1])
    timings = dict(cx.timings, elimination=t1 - t0)
    return CohomologyResult(
        alg.descriptor, k, g, STRAIGHT, _field_name(fld), tuple(len(b) for b in cx.bases),
        blk.dim_z, blk.dim_b, blk.dim_h, _to_cochains(k, g, cx.bases[1], blk.reps),
        [], 1 if n else 0, n, timings, fld != QQ,
        _to_cochains(k, g, cx.bases[1], blk.coreps), [blk])


def compute_split(source, k: int, g: int, fld=QQ, want_coreps: bool = False, jobs: int | None = 1,
                  complex_: _Complex | None = None) -> CohomologyResult:
    """Minimal-subcomplex algorithm: cohomology of each connected block, then the union."""
    alg = algebra_for(source, [(k, g)])
    _check_field(alg, k, fld)
    cx = complex_ or build_complex(alg, k, g)
    t0 = time.perf_counter()
    graph = interaction_graph(cx.d_in, cx.d_out, cx.bases)
    parts = partition(graph)
    t1 = time.perf_counter()
    blocks = _run_blocks([(s.d_in, s.d_out, fld, want_coreps) for s in parts], jobs)
    t2 = time.perf_counter()
    basis_index = {m: i for i, m in enumerate(cx.bases[1])}
    reps, coreps = [], [] if want_coreps else None
    stats: list[StatRow] = []
    dim_z = dim_b = 0
    for sub, blk in zip(parts, blocks):
        dim_z += blk.dim_z
        dim_b += blk.dim_b
        local = sub.monomials[1]
        reps.extend(_to_cochains(k, g, local, blk.reps))
        if want_coreps:
            coreps.extend(_to_cochains(k, g, local, blk.coreps))
        stats.append(StatRow(*sub.dims, blk.dim_z, blk.dim_b, blk.dim_h))
    reps.sort(key=lambda c: min(basis_index[m] for m in c.terms))
    grouped = Counter(s.key for s in stats)
    rows = [StatRow(*key, repeat=cnt) for key, cnt in grouped.items()]
    rows.sort(key=lambda r: (r.dim_k, r.key))
    timings = dict(cx.timings, partition=t1 - t0, elimination=t2 - t1)
    return CohomologyResult(
        alg.descriptor, k, g, SPLIT, _field_name(fld), tuple(len(b) for b in cx.bases),
        dim_z, dim_b, dim_z - dim_b, reps, rows, len(parts),
        max((s.dims[1] for s in parts), default=0), timings, fld != QQ, coreps, blocks)


def compute(source, k: int, g: int, fld=QQ, mode: str = SPLIT, **kw) -> CohomologyResult:
    if mode == SPLIT:
        return compute_split(source, k, g, fld, **kw)
    if mode in (STRAIGHT, "straight"):
        kw.pop("jobs", None)
        return compute_straightforward(source, k, g, fld, **kw)
    raise EngineError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# quotient membership


def is_coboundary(result: CohomologyResult, c: CochainVector) -> bool:
    """For a cocycle c at the result's cell: is its class zero?

    Uses the dual representatives: c is a coboundary iff it pairs to zero
    with every dual class.
    """
    if result.coreps is None:
        raise EngineError("result was computed without dual representatives")
    return all(_pair(w, c, result) == 0 for w in result.coreps)


def _modulus(result):
    return 0 if result.field == "Q" else int(result.field[1:])


def _pair(w: CochainVector, c: CochainVector, result):
    total = sum(x * c.terms.get(m, 0) for m, x in w.terms.items())
    p = _modulus(result)
    return total % p if p else total


def is_cocycle(alg: Algebra, c: CochainVector, fld=QQ) -> bool:
    if not c.terms:
        return True
    domain = sorted(c.terms)
    codomain = generate_monomials(alg, c.k + 1, c.g)
    D = differential_matrix(alg, c.k, c.g, domain, codomain, complete=False)
    vec = {j: fld.convert(c.terms[m]) for j, m in enumerate(domain)}
    return not D.to_field(fld).matvec(vec, fld)


def central_wedge_check(source, lower: CohomologyResult, target: tuple[int, int] | None = None,
                        fld=QQ, mode: str = SPLIT) -> bool:
    """Every lower class wedged with the dual of the central element is a nontrivial class."""
    k, g = target or (lower.k + 1, lower.g - 2)
    alg = algebra_for(source, [(k, g), (lower.k, lower.g)])
    if alg.central_index is None:
        raise EngineError("algebra has no central element")
    if lower.dim_h < 1:
        return False
    zdual = dual_element(alg, alg.central_index)
    if (lower.k + 1, lower.g + zdual.g) != (k, g):
        raise EngineError(f"wedge lands in ({lower.k + 1}, {lower.g + zdual.g}), not {(k, g)}")
    res = compute(alg, k, g, fld, mode, want_coreps=True)
    for rep in lower.representatives:
        prod = wedge(alg, rep, zdual)
        if not prod.terms:
            return False
        if not is_cocycle(alg, prod, fld):
            return False
        if all(_pair(w, prod, res) == 0 for w in res.coreps):
            return False
    return True


def same_quotient(a: CohomologyResult, b: CohomologyResult, alg: Algebra, fld=QQ) -> bool:
    """Do two representative sets span the same subspace of H^k_g?"""
    if a.dim_h != b.dim_h:
        return False
    if not a.dim_h:
        return True
    cx = build_complex(alg, a.k, a.g)
    index = {m: i for i, m in enumerate(cx.bases[1])}
    bvecs = [{i: v for i, v in col.items()} for col in _columns(cx.d_in)]
    ra = [r.to_vector(index) for r in a.representatives]
    rb = [r.to_vector(index) for r in b.representatives]
    base = span_rank(bvecs, fld)
    full = span_rank(bvecs + ra + rb, fld)
    return span_rank(bvecs + ra, fld) == full == span_rank(bvecs + rb, fld) == base + a.dim_h


def _columns(M: SparseMatrix):
    return [c for c in M.transpose().rows if c]


# ---------------------------------------------------------------------------
# grids


@dataclass
class GridCell:
    k: int
    g: int
    dim_c: int
    n_sub: int | None
    max_sub: int | None
    dim_h: int | None
    dim_z: int | None = None
    dim_b: int | None = None
    seconds: float = 0.0
    skipped: bool = False


@dataclass
class GridReport:
    algebra: str
    field: str
    mode: str
    k_range: tuple[int, int]
    g_range: tuple[int, int]
    cells: dict[tuple[int, int], GridCell]

    def nontrivial(self) -> list[tuple[int, int]]:
        return sorted((c.k, c.g) for c in self.cells.values() if c.dim_h)

    def render(self) -> str:
        return render_grid(self)


def grid_report(source, k_range: tuple[int, int], g_range: tuple[int, int], fld=QQ,
                mode: str = SPLIT, max_dim: int | None = None, jobs: int | None = 1,
                progress=None) -> GridReport:
    """One cell per (k, g) with dim C^k_g > 0; cells above ``max_dim`` are counted but skipped."""
    k_lo, k_hi = k_range
    g_lo, g_hi = g_range
    cells_wanted = [(k, g) for k in range(k_lo, k_hi + 1) for g in range(g_lo, g_hi + 1)]
    alg = algebra_for(source, cells_wanted)
    cells = {}
    for g in range(g_lo, g_hi + 1):
        for k in range(k_lo, k_hi + 1):
            _check_field(alg, k, fld)
            dim_c = len(generate_monomials(alg, k, g))
            if not dim_c:
                continue
            if max_dim is not None and dim_c > max_dim:
                cells[(k, g)] = GridCell(k, g, dim_c, None, None, None, skipped=True)
                continue
            t0 = time.perf_counter()
            res = compute(alg, k, g, fld, mode, jobs=jobs)
            cell = GridCell(k, g, dim_c, res.n_subcomplexes if mode == SPLIT else None,
                            res.max_block if mode == SPLIT else None, res.dim_h,
                            res.dim_z, res.dim_b, time.perf_counter() - t0)
            cells[(k, g)] = cell
            if progress:
                progress(cell)
    return GridReport(alg.descriptor, _field_name(fld), mode, k_range, g_range, cells)


def render_grid(rep: GridReport) -> str:
    """Aligned table: rows k, columns g, cells dimC/nSub/maxDim, '*' marks dim H > 0."""
    gs = list(range(rep.g_range[0], rep.g_range[1] + 1))
    ks = list(range(rep.k_range[0], rep.k_range[1] + 1))
    text = {}
    for (k, g), c in rep.cells.items():
        if c.skipped:
            s = f"{c.dim_c}/?/?"
        elif c.n_sub is None:
            s = f"{c.dim_c}"
        else:
            s = f"{c.dim_c}/{c.n_sub}/{c.max_sub}"
        if c.dim_h:
            s += "*" if c.dim_h == 1 else f"*{c.dim_h}"
        text[(k, g)] = s
    width = max([len(s) for s in text.values()] + [4]) + 1
    lines = [f"{rep.algebra} over {rep.field}, mode {rep.mode}", "k\\g".rjust(4) + "".join(str(g).rjust(width) for g in gs)]
    for k in ks:
        if not any((k, g) in text for g in gs):
            continue
        lines.append(str(k).rjust(4) + "".join(text.get((k, g), "").rjust(width) for g in gs))
    return "\n".join(lines)


def euler_characteristic(rep: GridReport, g: int) -> tuple[int, int]:
    """(sum (-1)^k dim C^k_g, sum (-1)^k dim H^k_g) over the grid's cells at grade g."""
    chi_c = chi_h = 0
    for (k, gg), c in rep.cells.items():
        if gg == g:
            chi_c += (-1) ** k * c.dim_c
            chi_h += (-1) ** k * (c.dim_h or 0)
    return chi_c, chi_h


# ---------------------------------------------------------------------------
# self test


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SelfTestReport:
    algebra: str
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"self test for {self.algebra}"]
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        lines.append("all checks passed" if self.passed else "SOME CHECKS FAILED")
        return "\n".join(lines)


def self_test(source, k_max: int, g_range: tuple[int, int], fld=QQ, max_dim: int = 300,
              seed: int = 0) -> SelfTestReport:
    cells = [(k, g) for k in range(0, k_max + 1) for g in range(g_range[0], g_range[1] + 1)]
    alg = source if isinstance(source, Algebra) and source.spec.kind == EXPLICIT else algebra_for(source, cells)
    checks = []

    bad = check_antisymmetry(alg)
    checks.append(CheckResult("super antisymmetry", not bad, f"{len(bad)} bad pairs" if bad else ""))
    bad = check_grading(alg)
    checks.append(CheckResult("grade/parity additivity", not bad, f"{len(bad)} bad constants" if bad else ""))
    jac_hi = min(alg.window[1], g_range[1] + 2) if alg.spec.kind != EXPLICIT else None
    bad = check_jacobi(alg, jac_hi)
    checks.append(CheckResult("super Jacobi", not bad, f"fails on {bad[:3]}" if bad else ""))

    dd_fail, route_fail, oracle_fail, part_fail, mode_fail = [], [], [], [], []
    rng = random.Random(seed)
    for k, g in cells:
        try:
            _check_field(alg, k + 1, fld)
        except EngineError:
            continue
        bases = _bases(alg, k, g)
        if not bases[1] or len(bases[1]) > max_dim:
            continue
        d_k = differential_matrix(alg, k, g, bases[1], bases[2], complete=True)
        d_k1 = differential_matrix(alg, k + 1, g, bases[2], generate_monomials(alg, k + 2, g), complete=True)
        if not d_k1.matmul(d_k).to_field(fld).is_zero():
            dd_fail.append((k, g))
        if derivation_matrix(alg, k, g, bases[1], bases[2], complete=True) != d_k:
            route_fail.append((k, g))
        # matrix column vs direct evaluation on random argument tuples
        if bases[1] and k + 1 <= len(alg):
            idx = rng.randrange(len(bases[1]))
            c = CochainVector(k, g, {bases[1][idx]: 1})
            col = {bases[2][i]: v for i, v in d_k.column(idx).items()}
            image = CochainVector(k + 1, g, col)
            pool = sorted({i for m in bases[2] for i in m})
            for _ in range(100 if pool else 0):
                args = [rng.choice(pool) for _ in range(k + 1)]
                if rng.random() < 0.7 and bases[2]:
                    args = list(rng.choice(bases[2]))
                    rng.shuffle(args)
                try:
                    direct = apply_differential(alg, c, args)
                except WindowError:
                    continue
                if evaluate_cochain(alg, image, args) != direct:
                    oracle_fail.append((k, g))
                    break
        cx = build_complex(alg, k, g)
        graph = interaction_graph(cx.d_in, cx.d_out, cx.bases)
        parts = partition(graph)
        if not check_block_diagonal(graph, parts):
            part_fail.append((k, g))
        try:
            a = compute_split(alg, k, g, fld, complex_=cx)
            b = compute_straightforward(alg, k, g, fld, complex_=cx)
        except (EngineError, ArithmeticError):
            mode_fail.append((k, g))
            continue
        if a.dims != b.dims or not same_quotient(a, b, alg, fld):
            mode_fail.append((k, g))
    checks.append(CheckResult("d o d = 0", not dd_fail, str(dd_fail) if dd_fail else ""))
    checks.append(CheckResult("formula and Leibniz routes agree", not route_fail, str(route_fail) if route_fail else ""))
    checks.append(CheckResult("matrix column matches direct evaluation", not oracle_fail, str(oracle_fail) if oracle_fail else ""))
    checks.append(CheckResult("partition is block diagonal", not part_fail, str(part_fail) if part_fail else ""))
    checks.append(CheckResult("split equals straightforward", not mode_fail, str(mode_fail) if mode_fail else ""))

    flo, fhi = family_grade_range(alg)
    if alg.spec.kind == EXPLICIT or (fhi is not None and alg.window[1] >= fhi):
        errs = []
        for k in range(0, k_max + 1):
            lo_sum = (min(alg.grades) if alg.grades else 0) * k
            hi_sum = (max(alg.grades) if alg.grades else 0) * k
            if k == 0:
                lo_sum = hi_sum = 0
            count = sum(len(generate_monomials(alg, k, g, check=False)) for g in range(lo_sum, hi_sum + 1))
            want = total_dimension(alg.n_even, alg.n_odd, 1, k)
            if count != want:
                errs.append((k, count, want))
        checks.append(CheckResult("closed-form dim C^k", not errs, str(errs) if errs else ""))
    return SelfTestReport(alg.descriptor, checks)


# ---------------------------------------------------------------------------
# documents


def result_document(res: CohomologyResult, alg: Algebra, timings: bool = False,
                    timestamp: str | None = None) -> dict:
    doc = {
        "metadata": {
            "algebra": res.algebra,
            "field": res.field,
            "mode": res.mode,
            "version": __version__,
            "hint": res.hint,
            "timestamp": timestamp or _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        },
        "k": res.k,
        "g": res.g,
        "dim_c": list(res.dim_c),
        "dim_z": res.dim_z,
        "dim_b": res.dim_b,
        "dim_h": res.dim_h,
        "n_subcomplexes": res.n_subcomplexes,
        "max_block": res.max_block,
        "representatives": [cochain_document(alg, r) for r in res.representatives],
        "subcomplex_stats": [
            {"dim_km1": s.dim_km1, "dim_k": s.dim_k, "dim_kp1": s.dim_kp1, "dim_z": s.dim_z,
             "dim_b": s.dim_b, "dim_h": s.dim_h, "repeated": s.repeat}
            for s in res.subcomplex_stats
        ],
    }
    if timings:
        doc["timings"] = {k: round(v, 6) for k, v in res.timings.items()}
    return doc


def cochain_document(alg: Algebra, c: CochainVector) -> dict:
    return {
        "k": c.k,
        "g": c.g,
        "text": format_cochain(alg, c),
        "terms": [
            {"indices": list(m), "duals": [alg.basis[i].name for i in m], "coeff": format_exact(v)}
            for m, v in sorted(c.terms.items())
        ],
    }


def grid_document(rep: GridReport, timestamp: str | None = None) -> dict:
    return {
        "metadata": {
            "algebra": rep.algebra,
            "field": rep.field,
            "mode": rep.mode,
            "version": __version__,
            "hint": rep.field != "Q",
            "timestamp": timestamp or _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        },
        "k_range": list(rep.k_range),
        "g_range": list(rep.g_range),
        "cells": [
            {"k": c.k, "g": c.g, "dim_c": c.dim_c, "n_subcomplexes": c.n_sub, "max_block": c.max_sub,
             "dim_z": c.dim_z, "dim_b": c.dim_b, "dim_h": c.dim_h, "skipped": c.skipped}
            for _, c in sorted(rep.cells.items(), key=lambda kv: (kv[0][0], kv[0][1]))
        ],
        "nontrivial": [list(x) for x in rep.nontrivial()],
    }


def render_result(res: CohomologyResult, alg: Algebra, show_timings: bool = True) -> str:
    lines = [
        f"{res.algebra}  H^{res.k}_{res.g}  over {res.field}{' (hint)' if res.hint else ''}  [{res.mode}]",
        f"  dim C^(k-1,k,k+1) = {res.dim_c}",
        f"  dim Z = {res.dim_z}   dim B = {res.dim_b}   dim H = {res.dim_h}",
    ]
    if res.mode == SPLIT:
        lines.append(f"  subcomplexes = {res.n_subcomplexes}   max block = {res.max_block}")
        if res.subcomplex_stats:
            lines.append("   dimC^{k-1}  dimC^k  dimC^{k+1}  dimZ  dimB  dimH  repeated")
            for s in res.subcomplex_stats:
                lines.append(f"   {s.dim_km1:10d} {s.dim_k:7d} {s.dim_kp1:11d} {s.dim_z:5d} {s.dim_b:5d} {s.dim_h:5d} {s.repeat:9d}")
    for i, r in enumerate(res.representatives):
        text = format_cochain(alg, r)
        if len(text) > 400:
            text = text[:400] + f" ... ({len(r.terms)} terms)"
        lines.append(f"  class {i + 1}: {text}")
    if show_timings and res.timings:
        lines.append("  timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in res.timings.items()))
    return "\n".join(lines)

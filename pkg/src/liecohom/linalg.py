"""Exact sparse linear algebra over Q and prime fields.

Vectors are sparse ``dict`` objects ``{index: value}`` without stored zeros.
Two routes compute the cohomology of a three-term block
``C^{k-1} --d_in--> C^k --d_out--> C^{k+1}``:

* a pure-Python sparse Gauss-Jordan elimination with Markowitz pivoting,
  exact in any field;
* a dense route backed by FLINT ``nmod_mat``.  Over a prime field this is the
  whole computation.  Over Q it runs modulo word-size primes and the result
  is then certified exactly (see :func:`certified_block`).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import flint

DEFAULT_PRIME = 2147483647
SPARSE_FILL_LIMIT = 0.2
# beyond this many entries the pure-Python sparse route loses to FLINT even for sparse blocks
SPARSE_SIZE_LIMIT = 40_000


class LinalgError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# fields


class Rationals:
    name = "Q"
    exact = True
    characteristic = 0

    def convert(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(1, x) if isinstance(x, int) else 1 / x

    def normalize(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    exact = False

    def __init__(self, p: int):
        if p < 2 or not flint.fmpz(p).is_prime():
            raise LinalgError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def convert(self, x):
        p = self.p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise LinalgError(f"denominator {x.denominator} vanishes modulo {p}")
            return x.numerator * pow(den, -1, p) % p
        return x % p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return pow(x, -1, self.p)

    def normalize(self, x):
        return x % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = Rationals()


def parse_field(text: str | None):
    """``Q``, ``Fp`` (default prime, overridable by LIECOHOM_PRIME) or ``F<prime>``."""
    if text is None or text.upper() == "Q":
        return QQ
    t = text.strip()
    if t in ("Fp", "FP", "fp"):
        return PrimeField(int(os.environ.get("LIECOHOM_PRIME", DEFAULT_PRIME)))
    for prefix in ("Fp(", "F(", "GF("):
        if t.startswith(prefix) and t.endswith(")"):
            return PrimeField(int(t[len(prefix):-1]))
    if t[:1] in "Ff" and t[1:].isdigit():
        return PrimeField(int(t[1:]))
    raise LinalgError(f"unknown field {text!r}")


def format_exact(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


# ---------------------------------------------------------------------------
# sparse matrices


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    rows: list[dict[int, object]] = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]
        if len(self.rows) != self.nrows:
            raise LinalgError("row count mismatch")

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[object]], ncols: int | None = None):
        data = [list(r) for r in data]
        nc = ncols if ncols is not None else (len(data[0]) if data else 0)
        rows = [{j: v for j, v in enumerate(r) if v} for r in data]
        return cls(len(data), nc, rows)

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out[i][j] = v
        return out

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def fill(self) -> float:
        size = self.nrows * self.ncols
        return self.nnz / size if size else 0.0

    def transpose(self) -> "SparseMatrix":
        cols = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return SparseMatrix(self.ncols, self.nrows, cols)

    def column(self, j: int) -> dict[int, object]:
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def matvec(self, v: dict[int, object], field=QQ) -> dict[int, object]:
        out = {}
        for i, row in enumerate(self.rows):
            acc = 0
            for j, a in row.items():
                x = v.get(j)
                if x is not None:
                    acc += a * x
            acc = field.normalize(acc) if acc else acc
            if acc:
                out[i] = acc
        return out

    def rmatvec(self, w: dict[int, object], field=QQ) -> dict[int, object]:
        """w^T M as a sparse vector over columns."""
        out: dict[int, object] = {}
        for i, x in w.items():
            for j, a in self.rows[i].items():
                out[j] = out.get(j, 0) + a * x
        return {j: field.normalize(v) for j, v in out.items() if v and field.normalize(v)}

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise LinalgError(f"shape mismatch {self.shape} x {other.shape}")
        rows = []
        for row in self.rows:
            acc: dict[int, object] = {}
            for j, a in row.items():
                for k, b in other.rows[j].items():
                    acc[k] = acc.get(k, 0) + a * b
            rows.append({k: v for k, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "SparseMatrix":
        cmap = {c: t for t, c in enumerate(col_idx)}
        rows = []
        for r in row_idx:
            rows.append({cmap[c]: v for c, v in self.rows[r].items() if c in cmap})
        return SparseMatrix(len(row_idx), len(col_idx), rows)

    def to_field(self, field) -> "SparseMatrix":
        rows = []
        for row in self.rows:
            new = {}
            for j, v in row.items():
                x = field.convert(v)
                if x:
                    new[j] = x
            rows.append(new)
        return SparseMatrix(self.nrows, self.ncols, rows)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            {k: v for k, v in a.items() if v} == {k: v for k, v in b.items() if v}
            for a, b in zip(self.rows, other.rows))


# ---------------------------------------------------------------------------
# sparse Gauss-Jordan elimination


@dataclass
class Echelon:
    """Reduced form of a matrix: ``reduced[c]`` is the normalized pivot row of column c."""

    rank: int
    pivots: list[tuple[int, int]]
    reduced: dict[int, dict[int, object]]
    ncols: int
    field: object

    @property
    def pivot_columns(self) -> list[int]:
        return sorted(self.reduced)

    def row_echelon(self) -> SparseMatrix:
        cols = self.pivot_columns
        return SparseMatrix(len(cols), self.ncols, [dict(self.reduced[c]) for c in cols])


def _sub_scaled(target: dict, source: dict, factor, field, col_index, rid, active_counts=None):
    """target -= factor * source, keeping the column index in sync."""
    for j, v in source.items():
        old = target.get(j)
        if old is None:
            new = field.normalize(-factor * v)
            if new:
                target[j] = new
                col_index.setdefault(j, set()).add(rid)
                if active_counts is not None:
                    active_counts[j] = active_counts.get(j, 0) + 1
        else:
            new = field.normalize(old - factor * v)
            if new:
                target[j] = new
            else:
                del target[j]
                col_index[j].discard(rid)
                if active_counts is not None:
                    active_counts[j] -= 1


def eliminate(M: SparseMatrix, field=QQ) -> Echelon:
    """Exact Gauss-Jordan elimination with Markowitz pivot choice.

    The pivot minimizes (row count - 1) * (active column count - 1); ties go to
    the lowest (row, col).  Pivot rows end up normalized and reduced against
    each other, which is all kernel and image extraction need.
    """
    rows = []
    col_index: dict[int, set[int]] = {}
    active_counts: dict[int, int] = {}
    for r, row in enumerate(M.rows):
        new = {}
        for j, v in row.items():
            x = field.convert(v)
            if x:
                new[j] = x
                col_index.setdefault(j, set()).add(r)
                active_counts[j] = active_counts.get(j, 0) + 1
        rows.append(new)
    active = sorted(r for r, row in enumerate(rows) if row)
    active_set = set(active)
    pivots = []
    reduced_rows = {}
    while active_set:
        best = None
        for r in sorted(active_set):
            row = rows[r]
            rc = len(row) - 1
            for j in row:
                key = (rc * (active_counts[j] - 1), r, j)
                if best is None or key < best:
                    best = key
            if best[0] == 0 and best[1] == r:
                break
        _, r, c = best
        prow = rows[r]
        inv = field.inv(prow[c])
        if inv != 1:
            for j in prow:
                prow[j] = field.normalize(prow[j] * inv)
        active_set.discard(r)
        for j in prow:
            active_counts[j] -= 1
        for r2 in list(col_index[c]):
            if r2 == r:
                continue
            factor = rows[r2][c]
            counts = active_counts if r2 in active_set else None
            _sub_scaled(rows[r2], prow, factor, field, col_index, r2, counts)
            if r2 in active_set and not rows[r2]:
                active_set.discard(r2)
        pivots.append((r, c))
        reduced_rows[c] = prow
    return Echelon(len(pivots), pivots, reduced_rows, M.ncols, field)


def rank(M: SparseMatrix, field=QQ) -> int:
    return eliminate(M, field).rank


def kernel_basis(M: SparseMatrix, field=QQ, echelon: Echelon | None = None) -> list[dict[int, object]]:
    """Basis of {x : M x = 0}, one vector per free column."""
    ech = echelon or eliminate(M, field)
    by_col: dict[int, list[int]] = {}
    for pc, row in ech.reduced.items():
        for j in row:
            if j != pc:
                by_col.setdefault(j, []).append(pc)
    out = []
    for f in range(M.ncols):
        if f in ech.reduced:
            continue
        v = {f: 1}
        for pc in by_col.get(f, ()):
            v[pc] = field.normalize(-ech.reduced[pc][f])
        out.append(v)
    return out


def image_basis(M: SparseMatrix, field=QQ, echelon: Echelon | None = None) -> list[dict[int, object]]:
    """Pivot columns of M, a basis of its column space."""
    ech = echelon or eliminate(M, field)
    cols = ech.pivot_columns
    want = set(cols)
    out = {c: {} for c in cols}
    for i, row in enumerate(M.rows):
        for j, v in row.items():
            if j in want:
                x = field.convert(v)
                if x:
                    out[j][i] = x
    return [out[c] for c in cols]


def rref(vectors: Iterable[dict[int, object]], field=QQ, order: Sequence[int] | None = None):
    """Canonical reduced row echelon form of the span of ``vectors``.

    Columns are scanned in ``order`` (natural order when omitted; columns not
    listed are never pivots).  Returns ``[(pivot_col, row), ...]`` sorted by
    the position of the pivot in the scan order.
    """
    rows = []
    col_index: dict[int, set[int]] = {}
    for v in vectors:
        new = {}
        for j, x in v.items():
            y = field.convert(x)
            if y:
                new[j] = y
        if new:
            rid = len(rows)
            rows.append(new)
            for j in new:
                col_index.setdefault(j, set()).add(rid)
    if order is None:
        order = sorted(col_index)
    free = set(range(len(rows)))
    result = []
    for c in order:
        cands = [r for r in col_index.get(c, ()) if r in free]
        if not cands:
            continue
        r = min(cands, key=lambda x: (len(rows[x]), x))
        free.discard(r)
        prow = rows[r]
        inv = field.inv(prow[c])
        if inv != 1:
            for j in prow:
                prow[j] = field.normalize(prow[j] * inv)
        for r2 in list(col_index[c]):
            if r2 != r:
                _sub_scaled(rows[r2], prow, rows[r2][c], field, col_index, r2)
        result.append((c, prow))
        if not free:
            break
    return result


def span_rank(vectors, field=QQ) -> int:
    return len(rref(vectors, field))


def quotient_basis(Z: Sequence[dict], B: Sequence[dict], field=QQ, check: bool = True) -> list[dict]:
    """Canonical representatives of span(Z)/span(B).

    With P the pivot set of rref(B), the representatives are the rows of the
    reduced echelon form of span(Z) ∩ {x : x_P = 0}: zero on P, mutually
    reduced, leading coefficient 1.
    """
    rb = rref(B, field)
    pset = {c for c, _ in rb}
    if check and rb:
        if span_rank(list(Z) + list(B), field) != span_rank(Z, field):
            raise LinalgError("coboundaries are not contained in the cocycle space")
    cols = sorted({j for v in Z for j in v} | pset)
    order = sorted(pset) + [c for c in cols if c not in pset]
    return [row for c, row in rref(Z, field, order) if c not in pset]


def in_span(v: dict, vectors: Sequence[dict], field=QQ) -> bool:
    return span_rank(list(vectors) + [v], field) == span_rank(vectors, field)


# ---------------------------------------------------------------------------
# dense modular route (FLINT)


def _nmod(M: SparseMatrix, p: int, transpose: bool = False, cols: Sequence[int] | None = None):
    """FLINT copy of M (optionally restricted to ``cols``, in that order) modulo p."""
    fld = None
    cmap = None if cols is None else {c: t for t, c in enumerate(cols)}
    nc_src = M.ncols if cols is None else len(cols)
    nr, nc = (nc_src, M.nrows) if transpose else (M.nrows, nc_src)
    A = flint.nmod_mat(nr, nc, p)
    for i, row in enumerate(M.rows):
        for j, v in row.items():
            if cmap is not None:
                j = cmap.get(j)
                if j is None:
                    continue
            if isinstance(v, Fraction):
                fld = fld or PrimeField(p)
                v = fld.convert(v)
            if transpose:
                A[j, i] = v % p
            else:
                A[i, j] = v % p
    return A


def mod_rank(M: SparseMatrix, p: int) -> int:
    return _nmod(M, p).rank()


def _rref_rows(R, r: int, nc: int):
    """Pivot columns and sparse rows of the first r rows of a reduced matrix."""
    pivots, rows = [], []
    j = 0
    for i in range(r):
        while int(R[i, j]) == 0:
            j += 1
        pivots.append(j)
        rows.append(i)
        j += 1
    return pivots, rows


def _sparse_row(R, i: int, nc: int, cols: Sequence[int] | None = None):
    out = []
    for j in range(nc):
        x = int(R[i, j])
        if x:
            out.append((j if cols is None else cols[j], x))
    return out


def modular_block(d_in: SparseMatrix, d_out: SparseMatrix, n: int, p: int, want_reps: bool):
    """Ranks and canonical representatives of the block cohomology modulo p.

    Returns (rank_in, rank_out, reps) with reps as sorted lists of (col, value)
    (None when not requested and h > 0).  Canonical representatives vanish on
    the pivot set P of rref(B); they span the kernel of d_out restricted to
    the columns outside P, which has dimension exactly h.
    """
    A_in = _nmod(d_in, p, transpose=True)      # rows span the coboundaries
    A_out = _nmod(d_out, p)
    rank_out = A_out.rank()
    if not want_reps:
        rank_in = A_in.rank()
        h = n - rank_in - rank_out
        if h < 0:
            raise LinalgError("negative cohomology dimension: d_out * d_in != 0")
        return rank_in, rank_out, ([] if h == 0 else None)
    R, rank_in = A_in.rref()
    h = n - rank_in - rank_out
    if h < 0:
        raise LinalgError("negative cohomology dimension: d_out * d_in != 0")
    if h == 0:
        return rank_in, rank_out, []
    pset = set(_rref_rows(R, rank_in, n)[0])
    free = [j for j in range(n) if j not in pset]
    X, nullity = _nmod(d_out, p, cols=free).nullspace()
    if nullity != h:
        raise LinalgError("modular representative extraction is inconsistent")
    K = flint.nmod_mat(nullity, len(free), p)
    for t in range(nullity):
        for i in range(len(free)):
            x = X[i, t]
            if int(x):
                K[t, i] = x
    RK, r = K.rref()
    reps = [_sparse_row(RK, i, len(free), free) for i in range(r)]
    return rank_in, rank_out, reps


# ---------------------------------------------------------------------------
# block cohomology


@dataclass
class BlockCohomology:
    dim_z: int
    dim_b: int
    dim_h: int
    reps: list[dict[int, object]] | None
    coreps: list[dict[int, object]] | None = None
    method: str = "sparse"
    primes: int = 0


def _prefer_sparse(*mats: SparseMatrix) -> bool:
    for M in mats:
        size = M.nrows * M.ncols
        if size > SPARSE_SIZE_LIMIT or (size and M.fill >= SPARSE_FILL_LIMIT):
            return False
    return True


def _sparse_block(d_in, d_out, n, field, want_reps, want_coreps):
    e_out = eliminate(d_out, field)
    e_in = eliminate(d_in, field)
    dim_z = n - e_out.rank
    dim_b = e_in.rank
    h = dim_z - dim_b
    if h < 0:
        raise LinalgError("negative cohomology dimension: d_out * d_in != 0")
    reps = coreps = None
    if want_reps:
        reps = quotient_basis(kernel_basis(d_out, field, e_out), image_basis(d_in, field, e_in), field) if h else []
    if want_coreps:
        if h:
            tin, tout = d_in.transpose(), d_out.transpose()
            coreps = quotient_basis(kernel_basis(tin, field), image_basis(tout, field), field)
        else:
            coreps = []
    return BlockCohomology(dim_z, dim_b, h, reps, coreps, "sparse")


def block_cohomology(d_in: SparseMatrix, d_out: SparseMatrix, field=QQ, want_reps: bool = True,
                     want_coreps: bool = False, method: str = "auto") -> BlockCohomology:
    """Z, B, H of ``C^{k-1} -> C^k -> C^{k+1}`` with d_in: n x c and d_out: r x n."""
    n = d_in.nrows
    if d_out.ncols != n:
        raise LinalgError(f"incompatible block shapes {d_in.shape} and {d_out.shape}")
    if method == "auto":
        method = "sparse" if _prefer_sparse(d_in, d_out) else "dense"
    if isinstance(field, PrimeField) and field.p >= 2 ** 63:
        method = "sparse"
    if method == "sparse":
        return _sparse_block(d_in, d_out, n, field, want_reps, want_coreps)
    if isinstance(field, PrimeField):
        p = field.p
        rin, rout, reps = modular_block(d_in, d_out, n, p, want_reps)
        coreps = None
        if want_coreps:
            _, _, co = modular_block(d_out.transpose(), d_in.transpose(), n, p, True)
            coreps = [dict(v) for v in co]
        return BlockCohomology(n - rout, rin, n - rin - rout,
                               [dict(v) for v in reps] if reps is not None else None,
                               coreps, "dense-mod-p", 1)
    return certified_block(d_in, d_out, want_reps=want_reps, want_coreps=want_coreps)


# ---------------------------------------------------------------------------
# certified multimodular route over Q


def word_primes(start: int = 2 ** 62):
    """Primes below ``start`` in decreasing order."""
    x = start - 1 if start % 2 == 0 else start - 2
    while x > 2:
        if flint.fmpz(x).is_prime():
            yield x
        x -= 2


def rational_reconstruction(a: int, m: int):
    """r/s ≡ a (mod m) with |r|, s ≤ sqrt(m/2), or None."""
    a %= m
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return Fraction(r1, s1) if s1 != 1 else r1


class _Lifter:
    """CRT accumulator for a list of sparse modular vectors with fixed support pattern."""

    def __init__(self):
        self.modulus = 1
        self.vectors: list[dict[int, int]] | None = None

    def add(self, vectors, p):
        if self.vectors is None:
            self.vectors = [dict(v) for v in vectors]
            self.modulus = p
            return
        m = self.modulus
        inv = pow(m % p, -1, p)
        acc = []
        for old, new in zip(self.vectors, vectors):
            new = dict(new)
            merged = {}
            for c in set(old) | set(new):
                a = old.get(c, 0)
                b = new.get(c, 0)
                t = ((b - a) * inv) % p
                merged[c] = a + m * t
            acc.append(merged)
        self.vectors = acc
        self.modulus = m * p

    def reconstruct(self):
        out = []
        for v in self.vectors:
            w = {}
            for c, a in v.items():
                if a % self.modulus == 0:
                    continue
                x = rational_reconstruction(a, self.modulus)
                if x is None:
                    return None
                w[c] = x
            out.append(w)
        return out


def _exact_det_nonzero(G) -> bool:
    vecs = [{j: x for j, x in enumerate(row) if x} for row in G]
    return span_rank(vecs, QQ) == len(G)


def certified_block(d_in: SparseMatrix, d_out: SparseMatrix, want_reps=True, want_coreps=False,
                    max_primes: int = 400) -> BlockCohomology:
    """Exact cohomology over Q from modular computations plus an exact certificate.

    Ranks modulo p never exceed the rational ranks, so dim H_Q <= dim H_p.
    If h = dim H_p > 0, canonical cocycles z_i and dual cocycles w_j
    (w^T d_in = 0) are lifted by CRT and rational reconstruction, verified
    exactly, and a nonsingular pairing matrix (w_j . z_i) proves dim H_Q >= h.
    d_out * d_in = 0 is checked exactly, which is what makes the upper bound
    on the rank sum valid.
    """
    n = d_in.nrows
    if not d_out.matmul(d_in).is_zero():
        raise LinalgError("d_out * d_in != 0 over Q")
    t_in, t_out = d_out.transpose(), d_in.transpose()
    primes = word_primes()
    best = None
    z_lift = w_lift = None
    used = 0
    for p in primes:
        if used >= max_primes:
            break
        if any(isinstance(v, Fraction) and v.denominator % p == 0
               for M in (d_in, d_out) for row in M.rows for v in row.values()):
            continue
        used += 1
        rin, rout, reps = modular_block(d_in, d_out, n, p, True)
        h = n - rin - rout
        if best is None or rin + rout > best[0] + best[1]:
            if best is not None and rin + rout > best[0] + best[1]:
                z_lift = w_lift = None
            best = (rin, rout)
        elif rin + rout < best[0] + best[1]:
            continue  # unlucky prime
        if h == 0:
            return BlockCohomology(n - rout, rin, 0, [] if want_reps else None,
                                   [] if want_coreps else None, "certified-multimodular", used)
        _, _, coreps = modular_block(t_in, t_out, n, p, True)
        if z_lift is None:
            z_lift, w_lift = _Lifter(), _Lifter()
        if z_lift.vectors is not None and (
                [v[0][0] for v in reps] != [min(v) for v in z_lift.vectors]
                or [v[0][0] for v in coreps] != [min(v) for v in w_lift.vectors]):
            continue  # pivot structure disagrees: unlucky prime
        z_lift.add(reps, p)
        w_lift.add(coreps, p)
        zs = z_lift.reconstruct()
        ws = w_lift.reconstruct() if zs is not None else None
        if zs is None or ws is None:
            continue
        if any(d_out.matvec(z) for z in zs):
            continue
        if any(d_in.rmatvec(w) for w in ws):
            continue
        G = [[sum(x * z.get(c, 0) for c, x in w.items()) for z in zs] for w in ws]
        if not _exact_det_nonzero(G):
            continue
        rin, rout = best
        return BlockCohomology(n - rout, rin, h, zs if want_reps else None,
                               ws if want_coreps else None, "certified-multimodular", used)
    raise LinalgError(f"multimodular certificate did not close after {used} primes")

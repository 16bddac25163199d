"""Super skew-symmetric cochains of the trivial module and their differentials.

A cochain monomial is a non-decreasing tuple of basis indices, the wedge of
the dual elements a'_{i_1} ... a'_{i_k}.  Even indices may not repeat; odd
ones may.  Its value on the sorted argument tuple (a_{i_1}, ..., a_{i_k})
is the product of r! over repeated odd duals (the multiplicity factor), so
monomials are exactly iterated wedge products of 1-cochains.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import Algebra, EXPLICIT, WindowError, bracket
from .linalg import LinalgError, SparseMatrix

Monomial = tuple[int, ...]


@dataclass
class CochainVector:
    """Sparse combination of (k, g) cochain monomials."""

    k: int
    g: int
    terms: dict[Monomial, object] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {m: c for m, c in self.terms.items() if c}
        for m in self.terms:
            if len(m) != self.k:
                raise ValueError(f"monomial {m} is not of degree {self.k}")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, CochainVector):
            return NotImplemented
        return (self.k, self.g, self.terms) == (other.k, other.g, other.terms)

    def scaled(self, factor) -> "CochainVector":
        return CochainVector(self.k, self.g, {m: c * factor for m, c in self.terms.items()})

    def to_vector(self, basis_index: Mapping[Monomial, int]) -> dict[int, object]:
        return {basis_index[m]: c for m, c in self.terms.items()}

    @classmethod
    def from_vector(cls, k: int, g: int, basis: Sequence[Monomial], vec: Mapping[int, object]):
        return cls(k, g, {basis[i]: c for i, c in vec.items()})


# ---------------------------------------------------------------------------
# monomials


def monomial_grade(alg: Algebra, mono: Sequence[int]) -> int:
    return sum(alg.grades[i] for i in mono)


def multiplicity_factor(alg: Algebra, mono: Sequence[int]) -> int:
    out = 1
    run = 1
    for a, b in zip(mono, mono[1:]):
        if a == b:
            run += 1
            out *= run
        else:
            run = 1
    return out


def max_multiplicity(mono: Sequence[int]) -> int:
    best = run = 1 if mono else 0
    for a, b in zip(mono, mono[1:]):
        run = run + 1 if a == b else 1
        best = max(best, run)
    return best


def normalize_arguments(alg: Algebra, raw: Sequence[int]) -> tuple[Monomial, int] | None:
    """Sort duals into canonical order with the super sign; None for the zero cochain.

    Each adjacent transposition contributes -1 unless both entries are odd.
    """
    par = alg.parities
    seq = list(raw)
    sign = 1
    for i in range(1, len(seq)):
        x = seq[i]
        j = i
        while j > 0 and seq[j - 1] > x:
            if not (par[x] and par[seq[j - 1]]):
                sign = -sign
            seq[j] = seq[j - 1]
            j -= 1
        seq[j] = x
    for a, b in zip(seq, seq[1:]):
        if a == b and not par[a]:
            return None
    return tuple(seq), sign


def _slots(alg: Algebra, start: int = 0, reverse: bool = False):
    """Grades available to a non-decreasing selection: evens once, odds unbounded."""
    idx = range(len(alg) - 1, start - 1, -1) if reverse else range(start, len(alg))
    for i in idx:
        if alg.parities[i]:
            while True:
                yield alg.grades[i]
        yield alg.grades[i]


def min_sums(alg: Algebra, jmax: int) -> list[int | None]:
    """Minimal grade of a j-monomial for j = 0..jmax (None if no j-monomial exists)."""
    out = [0]
    acc = 0
    gen = _slots(alg)
    for _ in range(jmax):
        try:
            acc += next(gen)
        except StopIteration:
            out.extend([None] * (jmax + 1 - len(out)))
            break
        out.append(acc)
    return out


def family_grade_range(alg: Algebra) -> tuple[int, int | None]:
    """Grades the whole (possibly infinite) algebra occupies."""
    spec = alg.spec
    if spec.kind == EXPLICIT:
        return alg.window
    n, m = spec.n, spec.m
    w = spec.weights or (1,) * (2 * n + m)
    from .algebra import _grade_offset

    off = _grade_offset(w, n, m)
    lo = -off if spec.kind == "Po" else min(w) - off
    hi = None if n else sum(w) - off
    return lo, hi


def required_max_grade(alg: Algebra, k: int, g: int) -> int | None:
    """Largest element grade occurring in a (k, g) monomial, given alg's low grades."""
    if k <= 0:
        return None
    ms = min_sums(alg, k - 1)[k - 1]
    return None if ms is None else g - ms


def _check_window(alg: Algebra, layers: Iterable[tuple[int, int]]):
    if alg.spec.kind == EXPLICIT:
        return
    flo, fhi = family_grade_range(alg)
    lo, hi = alg.window
    if lo > flo and not (fhi is not None and lo > fhi):
        raise WindowError(f"window {alg.window} omits family grades down to {flo}",
                          required=(flo, hi))
    for k, g in layers:
        need = required_max_grade(alg, k, g)
        if need is None:
            continue
        if fhi is not None:
            need = min(need, fhi)
        if need > hi:
            raise WindowError(
                f"C^{k}_{g} needs basis grades up to {need}; window is {alg.window}",
                required=(flo, need))


def generate_monomials(alg: Algebra, k: int, g: int, check: bool = True) -> list[Monomial]:
    """All (k, g) cochain monomials in lexicographic order of their index tuples."""
    if k < 0:
        raise ValueError("negative cochain degree")
    if k == 0:
        return [()] if g == 0 else []
    if check:
        _check_window(alg, [(k, g)])
    n = len(alg)
    grades, par = alg.grades, alg.parities
    # lo[r][i]: minimal grade sum of r selections from indices >= i; hi likewise
    lo = [[0] * (n + 2) for _ in range(k + 1)]
    hi = [[0] * (n + 2) for _ in range(k + 1)]
    INF = math.inf
    for r in range(1, k + 1):
        lo[r][n] = lo[r][n + 1] = INF
        hi[r][n] = hi[r][n + 1] = -INF
        for i in range(n - 1, -1, -1):
            skip_lo, skip_hi = lo[r][i + 1], hi[r][i + 1]
            nxt = i if par[i] else i + 1
            take_lo = grades[i] + lo[r - 1][nxt]
            take_hi = grades[i] + hi[r - 1][nxt]
            lo[r][i] = min(skip_lo, take_lo)
            hi[r][i] = max(skip_hi, take_hi)
    out: list[Monomial] = []
    prefix: list[int] = []

    def rec(start, r, target):
        if r == 0:
            if target == 0:
                out.append(tuple(prefix))
            return
        for i in range(start, n):
            if lo[r][i] > target:
                break
            if hi[r][i] < target:
                break
            nxt = i if par[i] else i + 1
            rem = target - grades[i]
            if lo[r - 1][nxt] <= rem <= hi[r - 1][nxt]:
                prefix.append(i)
                rec(nxt, r - 1, rem)
                prefix.pop()

    rec(0, k, g)
    return out


def total_dimension(n: int, m: int, p: int, k: int) -> int:
    """dim C^k for an (n|m)-dimensional superalgebra and a p-dimensional module."""
    if min(n, m, p, k) < 0:
        raise ValueError("arguments must be non-negative")
    total = 0
    for i in range(k + 1):
        odd = math.comb(m + i - 1, i) if m else int(i == 0)
        total += math.comb(n, k - i) * odd
    return p * total


# ---------------------------------------------------------------------------
# evaluation


def _terms(c) -> Mapping[Monomial, object]:
    return c.terms if isinstance(c, CochainVector) else c


def evaluate_cochain(alg: Algebra, c, args: Sequence[int]):
    """Value of the cochain on basis elements a_{args[0]}, ..., a_{args[-1]}."""
    terms = _terms(c)
    if isinstance(c, CochainVector) and len(args) != c.k:
        raise ValueError(f"cochain of degree {c.k} evaluated on {len(args)} arguments")
    if not terms:
        return 0
    norm = normalize_arguments(alg, args)
    if norm is None:
        return 0
    mono, sign = norm
    coeff = terms.get(mono)
    if not coeff:
        return 0
    return sign * multiplicity_factor(alg, mono) * coeff


def _s_values(par: Sequence[int], args: Sequence[int]) -> list[int]:
    out = []
    evens = 0
    for i, a in enumerate(args):
        if par[a]:
            out.append(evens)
        else:
            out.append(i)
            evens += 1
    return out


def apply_differential(alg: Algebra, c, args: Sequence[int]):
    """(d c)(a_0, ..., a_k) straight from the defining sum (trivial module).

    (dc)(a_0..a_k) = - sum_{i<j} (-1)^{s(a_i)+s(a_j)+p(a_i)p(a_j)}
                         c([a_i, a_j], a_0, .., ^a_i, .., ^a_j, .., a_k)
    """
    par = alg.parities
    if isinstance(c, CochainVector) and len(args) != c.k + 1:
        raise ValueError(f"d of a degree {c.k} cochain takes {c.k + 1} arguments")
    s = _s_values(par, args)
    total = 0
    for i in range(len(args)):
        for j in range(i + 1, len(args)):
            br = bracket(alg, args[i], args[j])
            if not br:
                continue
            exp = s[i] + s[j] + par[args[i]] * par[args[j]]
            sign = 1 if exp % 2 else -1
            rest = tuple(args[:i]) + tuple(args[i + 1:j]) + tuple(args[j + 1:])
            for l, coeff in br.items():
                v = evaluate_cochain(alg, _terms(c), (l,) + rest)
                if v:
                    total += sign * coeff * v
    return total


# ---------------------------------------------------------------------------
# differential matrices


def _ratio(num: int, den: int):
    if num % den == 0:
        return num // den
    return Fraction(num, den)


def differential_matrix(alg: Algebra, k: int, g: int, domain: Sequence[Monomial] | None = None,
                        codomain: Sequence[Monomial] | None = None, complete: bool | None = None
                        ) -> SparseMatrix:
    """Matrix of d^k : C^k_g -> C^{k+1}_g, rows indexed by ``codomain``.

    Row mu' is the defining sum evaluated on the canonical argument tuple
    of mu', divided by the multiplicity factor of mu'.  With ``complete``
    (the default when the bases are generated here) a term landing outside
    ``domain`` is an internal error; for partial bases it is dropped.
    """
    if complete is None:
        complete = domain is None and codomain is None
    if domain is None:
        domain = generate_monomials(alg, k, g)
    if codomain is None:
        codomain = generate_monomials(alg, k + 1, g)
    col = {m: j for j, m in enumerate(domain)}
    par = alg.parities
    has_odd = any(par)
    table = alg.brackets
    escapes = alg.escapes
    lazy_hi = alg.window[1] if alg._lazy else None
    grades = alg.grades
    rows = []
    for t in codomain:
        row: dict[int, object] = {}
        s = _s_values(par, t) if has_odd else range(len(t))
        tfac = multiplicity_factor(alg, t) if has_odd else 1
        kk = len(t)
        for i in range(kk):
            ai = t[i]
            for j in range(i + 1, kk):
                aj = t[j]
                br = table.get((ai, aj))
                if br is None:
                    if (ai, aj) in escapes or (lazy_hi is not None and grades[ai] + grades[aj] > lazy_hi):
                        bracket(alg, ai, aj)  # raises WindowError unless the bracket vanishes
                    continue
                exp = s[i] + s[j] + (par[ai] & par[aj])
                sign = 1 if exp & 1 else -1
                rest = t[:i] + t[i + 1:j] + t[j + 1:]
                for l, coeff in br:
                    pos = bisect.bisect_left(rest, l)
                    if not par[l]:
                        if pos < len(rest) and rest[pos] == l:
                            continue
                        moves = pos
                    else:
                        moves = pos - sum(par[x] for x in rest[:pos])
                    nu = rest[:pos] + (l,) + rest[pos:]
                    c = col.get(nu)
                    if c is None:
                        if complete:
                            raise LinalgError(f"image of {nu} escapes the declared domain basis")
                        continue
                    val = -sign * coeff if moves & 1 else sign * coeff
                    if has_odd:
                        nfac = multiplicity_factor(alg, nu)
                        if nfac != tfac:
                            val = val * _ratio(nfac, tfac) if nfac % tfac == 0 else val * Fraction(nfac, tfac)
                    row[c] = row.get(c, 0) + val
        rows.append({c: v for c, v in row.items() if v})
    return SparseMatrix(len(codomain), len(domain), rows)


def dual_differential(alg: Algebra) -> dict[int, list[tuple[Monomial, object]]]:
    """d(a'_c) as a combination of 2-monomials, for every basis index c."""
    out: dict[int, dict[Monomial, object]] = {}
    for (a, b), terms in alg.brackets.items():
        fac = 2 if a == b else 1
        for cidx, coeff in terms:
            val = _ratio(coeff, fac) if isinstance(coeff, int) else coeff / fac
            d = out.setdefault(cidx, {})
            d[(a, b)] = d.get((a, b), 0) + val
    return {c: [(m, v) for m, v in sorted(d.items()) if v] for c, d in out.items()}


def derivation_matrix(alg: Algebra, k: int, g: int, domain: Sequence[Monomial] | None = None,
                      codomain: Sequence[Monomial] | None = None, complete: bool | None = None
                      ) -> SparseMatrix:
    """d^k built column-wise from d on 1-cochains and the graded Leibniz rule.

    d(x_1 ... x_k) = sum_r (-1)^{r-1} x_1 .. x_{r-1} d(x_r) x_{r+1} .. x_k.
    An independent route to :func:`differential_matrix`.
    """
    if complete is None:
        complete = domain is None and codomain is None
    if domain is None:
        domain = generate_monomials(alg, k, g)
    if codomain is None:
        codomain = generate_monomials(alg, k + 1, g)
    rindex = {m: i for i, m in enumerate(codomain)}
    dd = dual_differential(alg)
    rows: list[dict[int, object]] = [{} for _ in codomain]
    for col, mono in enumerate(domain):
        image: dict[Monomial, object] = {}
        for r, x in enumerate(mono):
            eps = -1 if r % 2 else 1
            for pair, coeff in dd.get(x, ()):
                norm = normalize_arguments(alg, mono[:r] + pair + mono[r + 1:])
                if norm is None:
                    continue
                nu, sign = norm
                image[nu] = image.get(nu, 0) + eps * sign * coeff
        for nu, v in image.items():
            if not v:
                continue
            i = rindex.get(nu)
            if i is None:
                if complete:
                    raise LinalgError(f"d({mono}) leaves the declared codomain basis")
                continue
            rows[i][col] = v
    return SparseMatrix(len(codomain), len(domain), rows)


def apply_matrix(D: SparseMatrix, domain: Sequence[Monomial], codomain: Sequence[Monomial],
                 c: CochainVector) -> CochainVector:
    index = {m: j for j, m in enumerate(domain)}
    vec = {index[m]: v for m, v in c.terms.items()}
    out = D.matvec(vec)
    return CochainVector(c.k + 1, c.g, {codomain[i]: v for i, v in out.items()})


def wedge(alg: Algebra, c1: CochainVector, c2: CochainVector) -> CochainVector:
    """Wedge product: concatenation of monomials followed by normalization."""
    out: dict[Monomial, object] = {}
    for m1, a in c1.terms.items():
        for m2, b in c2.terms.items():
            norm = normalize_arguments(alg, m1 + m2)
            if norm is None:
                continue
            mono, sign = norm
            out[mono] = out.get(mono, 0) + sign * a * b
    return CochainVector(c1.k + c2.k, c1.g + c2.g, out)


def dual_element(alg: Algebra, i: int) -> CochainVector:
    return CochainVector(1, alg.grades[i], {(i,): 1})


def monomial_name(alg: Algebra, mono: Sequence[int]) -> str:
    if not mono:
        return "1"
    parts = []
    for i in mono:
        name = alg.basis[i].name
        parts.append(f"({name})'" if "*" in name or "^" in name else f"{name}'")
    return "∧".join(parts)


def format_cochain(alg: Algebra, c: CochainVector) -> str:
    from .linalg import format_exact

    if not c.terms:
        return "0"
    pieces = []
    for mono, coeff in sorted(c.terms.items()):
        s = format_exact(coeff)
        name = monomial_name(alg, mono)
        if s == "1":
            pieces.append(f"+ {name}")
        elif s == "-1":
            pieces.append(f"- {name}")
        elif s.startswith("-"):
            pieces.append(f"- {s[1:]} {name}")
        else:
            pieces.append(f"+ {s} {name}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[1:]

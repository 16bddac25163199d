"""Graded Lie (super)algebras: hamiltonian and Poisson families, explicit tables.

Elements of H(2n|m) and Po(2n|m) are represented by their generating
functions, polynomials in the even variables p_1..p_n, q_1..q_n and the odd
variables theta_1..theta_m.  The bracket of two elements is the Poisson
bracket of their generating functions; H drops the constant component and
Po keeps it as a central basis element.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

HAMILTONIAN = "H"
POISSON = "Po"
EXPLICIT = "Explicit"


class AlgebraError(ValueError):
    """Malformed algebra description or an invariant violation."""


class WindowError(AlgebraError):
    """A bracket or cochain needs basis grades outside the materialized window."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


# ---------------------------------------------------------------------------
# generating functions


@dataclass(frozen=True, order=True)
class GeneratorMonomial:
    """Exponent vector p_1..p_n q_1..q_n | theta_1..theta_m."""

    even: tuple[int, ...]
    odd: tuple[int, ...] = ()

    def __post_init__(self):
        if any(e < 0 for e in self.even):
            raise AlgebraError(f"negative exponent in {self.even}")
        if any(e not in (0, 1) for e in self.odd):
            raise AlgebraError(f"odd exponents must be 0 or 1, got {self.odd}")
        if len(self.even) % 2:
            raise AlgebraError("even exponents come in p/q pairs")

    @property
    def n(self) -> int:
        return len(self.even) // 2

    @property
    def m(self) -> int:
        return len(self.odd)

    @property
    def parity(self) -> int:
        return sum(self.odd) % 2

    @property
    def degree(self) -> int:
        return sum(self.even) + sum(self.odd)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(weights, self.even + self.odd))

    def grade(self, weights: Sequence[int] | None = None) -> int:
        if weights is None:
            return self.degree - 2
        return self.weighted_degree(weights) - _grade_offset(weights, self.n, self.m)

    def name(self) -> str:
        return monomial_name(self)


def _variable_names(n: int, m: int) -> list[str]:
    if n == 1:
        evens = ["p", "q"]
    else:
        evens = [f"p{i}" for i in range(1, n + 1)] + [f"q{i}" for i in range(1, n + 1)]
    if m == 1:
        odds = ["t"]
    else:
        odds = [f"t{j}" for j in range(1, m + 1)]
    return evens + odds


def monomial_name(mono: GeneratorMonomial) -> str:
    names = _variable_names(mono.n, mono.m)
    factors = []
    for name, e in zip(names, mono.even + mono.odd):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def _d_even(mono: GeneratorMonomial, i: int) -> tuple[int, GeneratorMonomial | None]:
    e = mono.even[i]
    if e == 0:
        return 0, None
    even = mono.even[:i] + (e - 1,) + mono.even[i + 1:]
    return e, GeneratorMonomial(even, mono.odd)


def _d_odd(mono: GeneratorMonomial, j: int) -> tuple[int, GeneratorMonomial | None]:
    # left derivative: move theta_j to the front first
    if not mono.odd[j]:
        return 0, None
    sign = -1 if sum(mono.odd[:j]) % 2 else 1
    odd = mono.odd[:j] + (0,) + mono.odd[j + 1:]
    return sign, GeneratorMonomial(mono.even, odd)


def _multiply(a: GeneratorMonomial, b: GeneratorMonomial) -> tuple[int, GeneratorMonomial | None]:
    if any(x and y for x, y in zip(a.odd, b.odd)):
        return 0, None
    # sign of reordering theta_A theta_B into increasing index order
    swaps = 0
    seen_b = 0
    for j in range(len(a.odd)):
        if a.odd[j]:
            swaps += seen_b
        if b.odd[j]:
            seen_b += 1
    sign = -1 if swaps % 2 else 1
    even = tuple(x + y for x, y in zip(a.even, b.even))
    odd = tuple(x + y for x, y in zip(a.odd, b.odd))
    return sign, GeneratorMonomial(even, odd)


def poisson_bracket(f: GeneratorMonomial, g: GeneratorMonomial) -> dict[GeneratorMonomial, int]:
    """Poisson bracket of two monomials, as {monomial: integer coefficient}.

    {f, g} = sum_i (f_{p_i} g_{q_i} - f_{q_i} g_{p_i})
             - (-1)^{p(f)} sum_j f_{theta_j} g_{theta_j}
    """
    if (f.n, f.m) != (g.n, g.m):
        raise AlgebraError("monomials live in different variable sets")
    n, m = f.n, f.m
    out: dict[GeneratorMonomial, int] = {}

    def add(coeff, a, b):
        if not coeff:
            return
        s, prod = _multiply(a, b)
        if s:
            out[prod] = out.get(prod, 0) + s * coeff

    for i in range(n):
        cf, fp = _d_even(f, i)
        cg, gq = _d_even(g, n + i)
        if cf and cg:
            add(cf * cg, fp, gq)
        cf, fq = _d_even(f, n + i)
        cg, gp = _d_even(g, i)
        if cf and cg:
            add(-cf * cg, fq, gp)
    outer = 1 if f.parity else -1
    for j in range(m):
        sf, ft = _d_odd(f, j)
        sg, gt = _d_odd(g, j)
        if sf and sg:
            add(outer * sf * sg, ft, gt)
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# algebras


@dataclass(frozen=True)
class AlgebraSpec:
    kind: str
    n: int = 0
    m: int = 0
    window: tuple[int, int] = (-2, 0)
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (HAMILTONIAN, POISSON, EXPLICIT):
            raise AlgebraError(f"unknown algebra kind {self.kind!r}")
        lo, hi = self.window
        if lo > hi:
            raise AlgebraError(f"empty grade window {self.window}")
        if self.weights is not None:
            if len(self.weights) != 2 * self.n + self.m:
                raise AlgebraError("one weight per variable is required")
            if any(w <= 0 for w in self.weights):
                raise AlgebraError("grading weights must be positive")
            _grade_offset(self.weights, self.n, self.m)

    @property
    def descriptor(self) -> str:
        return f"{self.kind}({2 * self.n}|{self.m})"

    def with_window(self, lo: int, hi: int) -> "AlgebraSpec":
        return AlgebraSpec(self.kind, self.n, self.m, (lo, hi), self.weights)


def _grade_offset(weights: Sequence[int], n: int, m: int) -> int:
    # the bracket lowers weighted degree by w(p_i)+w(q_i) = 2 w(theta_j);
    # this common value is the grade offset (2 for the standard grading)
    sums = {weights[i] + weights[n + i] for i in range(n)}
    sums |= {2 * weights[2 * n + j] for j in range(m)}
    if len(sums) > 1:
        raise AlgebraError(f"weights {tuple(weights)} are not compatible with the bracket")
    return sums.pop() if sums else 2


@dataclass(frozen=True)
class BasisElement:
    name: str
    parity: int
    grade: int
    monomial: GeneratorMonomial | None = None


@dataclass
class Algebra:
    """Ordered graded basis plus half-stored structure constants.

    ``brackets[(i, j)]`` (i <= j) is a tuple of ``(k, coeff)`` pairs; the
    other half follows from super-anticommutativity.
    """

    basis: list[BasisElement]
    brackets: dict[tuple[int, int], tuple[tuple[int, object], ...]]
    spec: AlgebraSpec
    central_index: int | None = None
    _lazy: bool = field(default=False, repr=False)

    def __post_init__(self):
        self.parities = [b.parity for b in self.basis]
        self.grades = [b.grade for b in self.basis]
        self.index = {b.name: i for i, b in enumerate(self.basis)}
        self.monomial_index = {b.monomial: i for i, b in enumerate(self.basis) if b.monomial is not None}
        self.escapes: set[tuple[int, int]] = set()

    def __len__(self):
        return len(self.basis)

    @property
    def window(self) -> tuple[int, int]:
        return self.spec.window

    @property
    def descriptor(self) -> str:
        if self.spec.kind == EXPLICIT:
            return f"{EXPLICIT}({self.n_even}|{self.n_odd})"
        return self.spec.descriptor

    @property
    def n_even(self) -> int:
        return self.parities.count(0)

    @property
    def n_odd(self) -> int:
        return self.parities.count(1)

    @property
    def min_grade(self) -> int | None:
        return min(self.grades) if self.basis else None

    def bracket(self, i: int, j: int) -> dict[int, object]:
        return bracket(self, i, j)


def _enumerate_exponents(n: int, m: int, weights: Sequence[int], target: int):
    nv = 2 * n + m

    def rec(pos, remaining):
        if pos == nv:
            if remaining == 0:
                yield ()
            return
        w = weights[pos]
        top = 1 if pos >= 2 * n else remaining // w
        for e in range(min(top, remaining // w) + 1):
            for rest in rec(pos + 1, remaining - e * w):
                yield (e,) + rest

    for exps in rec(0, target):
        yield GeneratorMonomial(exps[:2 * n], exps[2 * n:])


def _family_basis(spec: AlgebraSpec) -> list[BasisElement]:
    n, m = spec.n, spec.m
    weights = spec.weights or (1,) * (2 * n + m)
    offset = _grade_offset(weights, n, m)
    lo, hi = spec.window
    basis = []
    for grade in range(lo, hi + 1):
        wdeg = grade + offset
        if wdeg < 0:
            continue
        monos = list(_enumerate_exponents(n, m, weights, wdeg))
        if spec.kind == HAMILTONIAN:
            monos = [x for x in monos if x.degree > 0]
        monos.sort(key=lambda x: x.even + x.odd, reverse=True)
        basis.extend(BasisElement(monomial_name(x), x.parity, grade, x) for x in monos)
    return basis


def make_algebra(spec: AlgebraSpec) -> Algebra:
    """Materialize the basis of a built-in family within ``spec.window``.

    Basis order is grade-major ascending, then descending lexicographic on
    exponent vectors (so p precedes q).
    """
    if spec.kind == EXPLICIT:
        raise AlgebraError("explicit algebras are loaded with parse_structure_constants")
    if spec.n + spec.m < 1:
        raise AlgebraError("need at least one variable")
    basis = _family_basis(spec)
    central = None
    if spec.kind == POISSON:
        for i, b in enumerate(basis):
            if b.monomial.degree == 0:
                central = i
    alg = Algebra(basis, {}, spec, central, _lazy=True)
    weights = spec.weights or (1,) * (2 * spec.n + spec.m)
    lo, hi = spec.window
    grades = alg.grades
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            gsum = grades[i] + grades[j]
            if gsum > hi:
                break
            try:
                terms = _family_bracket(alg, i, j, weights)
            except WindowError:
                alg.escapes.add((i, j))
                continue
            if terms:
                alg.brackets[(i, j)] = terms
    return alg


def _family_bracket(alg: Algebra, i: int, j: int, weights) -> tuple[tuple[int, int], ...]:
    f = alg.basis[i].monomial
    g = alg.basis[j].monomial
    out = []
    for mono, c in poisson_bracket(f, g).items():
        if mono.degree == 0 and alg.spec.kind == HAMILTONIAN:
            continue
        k = alg.monomial_index.get(mono)
        if k is None:
            grade = mono.grade(weights)
            raise WindowError(
                f"[{alg.basis[i].name}, {alg.basis[j].name}] has a grade {grade} component "
                f"outside the window {alg.window}",
                required=(min(grade, alg.window[0]), max(grade, alg.window[1])),
            )
        out.append((k, c))
    out.sort()
    return tuple(out)


def bracket(alg: Algebra, i: int, j: int) -> dict[int, object]:
    """Structure constants of [a_i, a_j] as {k: coefficient}."""
    n = len(alg.basis)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"basis index out of range: ({i}, {j})")
    a, b = (i, j) if i <= j else (j, i)
    terms = alg.brackets.get((a, b))
    if terms is None:
        if (a, b) in alg.escapes or (alg._lazy and alg.grades[a] + alg.grades[b] > alg.window[1]):
            weights = alg.spec.weights or (1,) * (2 * alg.spec.n + alg.spec.m)
            terms = _family_bracket(alg, a, b, weights)  # raises unless zero
        else:
            return {}
    if i <= j:
        return dict(terms)
    sign = 1 if alg.parities[i] * alg.parities[j] else -1
    return {k: sign * c for k, c in terms}


def bracket_vectors(alg: Algebra, x: Mapping[int, object], y: Mapping[int, object]) -> dict[int, object]:
    out: dict[int, object] = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in bracket(alg, i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# validation


def check_antisymmetry(alg: Algebra) -> list[tuple[int, int]]:
    bad = []
    for i in range(len(alg)):
        for j in range(i, len(alg)):
            try:
                x, y = bracket(alg, i, j), bracket(alg, j, i)
            except WindowError:
                continue
            s = -1 if alg.parities[i] * alg.parities[j] else 1
            keys = set(x) | set(y)
            if any(x.get(k, 0) + s * y.get(k, 0) for k in keys):
                bad.append((i, j))
    return bad


def check_grading(alg: Algebra) -> list[tuple[int, int, int]]:
    """Structure constants violating grade or parity additivity."""
    bad = []
    for (i, j), terms in alg.brackets.items():
        for k, _ in terms:
            if alg.grades[k] != alg.grades[i] + alg.grades[j]:
                bad.append((i, j, k))
            elif alg.parities[k] != (alg.parities[i] + alg.parities[j]) % 2:
                bad.append((i, j, k))
    return bad


def jacobi_defect(alg: Algebra, a: int, b: int, c: int) -> dict[int, object]:
    """[a,[b,c]] - [[a,b],c] - (-1)^{p(a)p(b)} [b,[a,c]]"""
    ea, eb, ec = {a: 1}, {b: 1}, {c: 1}
    lhs = bracket_vectors(alg, ea, bracket_vectors(alg, eb, ec))
    r1 = bracket_vectors(alg, bracket_vectors(alg, ea, eb), ec)
    r2 = bracket_vectors(alg, eb, bracket_vectors(alg, ea, ec))
    sign = -1 if alg.parities[a] * alg.parities[b] else 1
    out = dict(lhs)
    for k, v in r1.items():
        out[k] = out.get(k, 0) - v
    for k, v in r2.items():
        out[k] = out.get(k, 0) - sign * v
    return {k: v for k, v in out.items() if v}


def check_jacobi(alg: Algebra, max_grade: int | None = None) -> list[tuple[int, int, int]]:
    """All basis triples (within the window) on which super Jacobi fails."""
    hi = alg.window[1] if max_grade is None else max_grade
    idx = [i for i, g in enumerate(alg.grades) if g <= hi]
    bad = []
    for a, b, c in itertools.product(idx, repeat=3):
        if alg.grades[a] + alg.grades[b] + alg.grades[c] > hi:
            continue
        try:
            if jacobi_defect(alg, a, b, c):
                bad.append((a, b, c))
        except WindowError:
            continue
    return bad


# ---------------------------------------------------------------------------
# explicit structure-constant tables


def parse_rational(text) -> Fraction | int:
    if isinstance(text, bool):
        raise AlgebraError(f"bad coefficient {text!r}")
    if isinstance(text, int):
        return text
    if not isinstance(text, str):
        raise AlgebraError(f"bad coefficient {text!r}")
    s = text.strip()
    sign = 1
    if s[:1] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    num, _, den = s.partition("/")
    if not num.isdigit() or (_ and not den.isdigit()):
        raise AlgebraError(f"bad rational literal {text!r}")
    if _ and int(den) == 0:
        raise AlgebraError(f"zero denominator in {text!r}")
    value = Fraction(sign * int(num), int(den) if _ else 1)
    return value.numerator if value.denominator == 1 else value


def parse_structure_constants(text: str | Mapping) -> Algebra:
    """Build and validate an explicit algebra from its JSON document."""
    doc = json.loads(text) if isinstance(text, (str, bytes)) else text
    try:
        raw_basis = doc["basis"]
        raw_brackets = doc.get("brackets", [])
    except (TypeError, KeyError) as exc:
        raise AlgebraError(f"malformed algebra document: {exc}") from None
    basis = []
    for pos, item in enumerate(raw_basis):
        try:
            name, parity, grade = str(item["name"]), int(item["parity"]), int(item["grade"])
        except (TypeError, KeyError, ValueError) as exc:
            raise AlgebraError(f"malformed basis entry {pos}: {exc}") from None
        if parity not in (0, 1):
            raise AlgebraError(f"basis entry {name!r}: parity must be 0 or 1")
        basis.append(BasisElement(name, parity, grade))
    if not basis:
        raise AlgebraError("empty basis")
    if len({b.name for b in basis}) != len(basis):
        raise AlgebraError("duplicate basis names")
    n = len(basis)
    given: dict[tuple[int, int], dict[int, object]] = {}
    for entry in raw_brackets:
        try:
            i, j = int(entry["i"]), int(entry["j"])
            terms = {}
            for t in entry.get("terms", []):
                k = int(t["k"])
                if not 0 <= k < n:
                    raise AlgebraError(f"term index {k} out of range")
                terms[k] = terms.get(k, 0) + parse_rational(t["coeff"])
        except (TypeError, KeyError, ValueError) as exc:
            raise AlgebraError(f"malformed bracket entry {entry!r}: {exc}") from None
        if not (0 <= i < n and 0 <= j < n):
            raise AlgebraError(f"bracket index out of range: ({i}, {j})")
        if (i, j) in given:
            raise AlgebraError(f"bracket ({i}, {j}) listed twice")
        given[(i, j)] = {k: v for k, v in terms.items() if v}

    parities = [b.parity for b in basis]
    brackets = {}
    for (i, j), terms in given.items():
        if i == j and parities[i] == 0 and terms:
            raise AlgebraError(f"antisymmetry violated: [{basis[i].name}, {basis[i].name}] must vanish")
        if i > j:
            continue
        other = given.get((j, i))
        if other is not None and i != j:
            s = -1 if parities[i] * parities[j] else 1
            keys = set(terms) | set(other)
            if any(terms.get(k, 0) + s * other.get(k, 0) for k in keys):
                raise AlgebraError(
                    f"antisymmetry violated for pair ({basis[i].name}, {basis[j].name})")
        if terms:
            brackets[(i, j)] = tuple(sorted(terms.items()))
    for (i, j), terms in given.items():
        if i > j and (j, i) not in given and terms:
            s = 1 if parities[i] * parities[j] else -1
            brackets[(j, i)] = tuple(sorted((k, s * v) for k, v in terms.items()))

    grades = [b.grade for b in basis]
    spec = AlgebraSpec(EXPLICIT, window=(min(grades), max(grades)))
    alg = Algebra(basis, brackets, spec)
    bad = check_grading(alg)
    if bad:
        i, j, k = bad[0]
        raise AlgebraError(
            f"grading violated: [{basis[i].name}, {basis[j].name}] has component {basis[k].name}")
    for a, b, c in itertools.product(range(n), repeat=3):
        if jacobi_defect(alg, a, b, c):
            raise AlgebraError(
                f"Jacobi identity fails on ({basis[a].name}, {basis[b].name}, {basis[c].name})")
    return alg


def load_algebra_file(path) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return parse_structure_constants(fh.read())


def algebra_to_document(alg: Algebra) -> dict:
    """Inverse of parse_structure_constants (i < j pairs and odd squares)."""
    from .linalg import format_exact

    brackets = []
    for (i, j), terms in sorted(alg.brackets.items()):
        brackets.append({
            "i": i,
            "j": j,
            "terms": [{"k": k, "coeff": format_exact(c)} for k, c in terms],
        })
    return {
        "basis": [{"name": b.name, "parity": b.parity, "grade": b.grade} for b in alg.basis],
        "brackets": brackets,
    }


def grade_counts(alg: Algebra) -> dict[int, int]:
    out: dict[int, int] = {}
    for g in alg.grades:
        out[g] = out.get(g, 0) + 1
    return out


def elements_of_grade(alg: Algebra, grade: int) -> Iterable[int]:
    return (i for i, g in enumerate(alg.grades) if g == grade)

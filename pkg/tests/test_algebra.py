import json
from fractions import Fraction

import pytest

from liecohom.algebra import (AlgebraError, AlgebraSpec, GeneratorMonomial, WindowError, bracket,
                              check_antisymmetry, check_grading, check_jacobi, grade_counts,
                              jacobi_defect, make_algebra, parse_rational, parse_structure_constants,
                              poisson_bracket)


def names(alg):
    return [b.name for b in alg.basis]


def test_h20_lowest_grade_is_p_q():
    alg = make_algebra(AlgebraSpec("H", 1, 0, window=(-1, -1)))
    assert names(alg) == ["p", "q"]
    assert alg.parities == [0, 0]


def test_h20_grade_counts():
    # grade g holds the g+3 monomials of degree g+2
    alg = make_algebra(AlgebraSpec("H", 1, 0, window=(-1, 4)))
    assert grade_counts(alg) == {g: g + 3 for g in range(-1, 5)}


def test_po_adds_central_element():
    alg = make_algebra(AlgebraSpec("Po", 1, 0, window=(-2, 0)))
    assert names(alg)[0] == "1"
    assert alg.central_index == 0
    for j in range(len(alg)):
        assert not bracket(alg, 0, j)


def test_canonical_bracket_p_q_is_one():
    alg = make_algebra(AlgebraSpec("Po", 1, 0, window=(-2, 0)))
    p, q = alg.index["p"], alg.index["q"]
    assert bracket(alg, p, q) == {alg.central_index: 1}
    assert bracket(alg, q, p) == {alg.central_index: -1}


def test_h02_odd_generators():
    alg = make_algebra(AlgebraSpec("H", 0, 2, window=(-1, 0)))
    assert alg.n_odd == 2 and alg.n_even == 1
    t1, t2, t12 = alg.index["t1"], alg.index["t2"], alg.index["t1*t2"]
    # {t1, t1} is a constant, which H drops
    assert bracket(alg, t1, t1) == {}
    # odd with even: swapping picks up a minus sign
    assert bracket(alg, t12, t1) == {k: -v for k, v in bracket(alg, t1, t12).items()}
    assert set(bracket(alg, t1, t12)) == {t2}


def test_poisson_bracket_of_monomials():
    p = GeneratorMonomial((1, 0), ())
    q = GeneratorMonomial((0, 1), ())
    p2q = GeneratorMonomial((2, 1), ())
    assert poisson_bracket(p, q) == {GeneratorMonomial((0, 0), ()): 1}
    # {p, p^2 q} = ∂p(p)∂q(p^2 q) = p^2
    assert poisson_bracket(p, p2q) == {GeneratorMonomial((2, 0), ()): 1}


@pytest.mark.parametrize("spec,top", [
    (AlgebraSpec("H", 1, 0, window=(-1, 2)), 2),
    (AlgebraSpec("Po", 1, 0, window=(-2, 2)), 2),
    (AlgebraSpec("H", 1, 1, window=(-1, 1)), 1),
    (AlgebraSpec("H", 0, 3, window=(-1, 1)), 1),
    (AlgebraSpec("Po", 0, 2, window=(-2, 0)), 0),
])
def test_family_axioms(spec, top):
    alg = make_algebra(spec)
    assert check_antisymmetry(alg) == []
    assert check_grading(alg) == []
    assert check_jacobi(alg, top) == []


def test_window_escape_raises_at_use():
    alg = make_algebra(AlgebraSpec("H", 1, 0, window=(-1, 1)))
    i, j = alg.index["p^3"], alg.index["q^3"]
    with pytest.raises(WindowError):
        bracket(alg, i, j)


def test_empty_window_rejected():
    with pytest.raises(AlgebraError):
        AlgebraSpec("H", 1, 0, window=(2, 1))


def test_weights_must_fit_the_bracket():
    with pytest.raises(AlgebraError):
        AlgebraSpec("H", 1, 1, weights=(1, 2, 1))
    spec = AlgebraSpec("H", 1, 0, window=(-1, 2), weights=(1, 3))
    alg = make_algebra(spec)
    assert check_jacobi(alg, 2) == []


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_rational(5) == 5
    for bad in ["1/0", "x", "1.5", True]:
        with pytest.raises(AlgebraError):
            parse_rational(bad)


def _doc(basis, brackets):
    return {
        "basis": [{"name": n, "parity": p, "grade": g} for n, p, g in basis],
        "brackets": [{"i": i, "j": j, "terms": [{"k": k, "coeff": c} for k, c in t]} for i, j, t in brackets],
    }


def test_abelian_table():
    alg = parse_structure_constants(_doc([("e1", 0, 0), ("e2", 0, 0)], [(0, 1, [])]))
    assert alg.brackets == {}


def test_sl2_table_is_valid(sl2):
    h, e, f = sl2.index["h"], sl2.index["e"], sl2.index["f"]
    assert bracket(sl2, h, e) == {e: 2}
    assert bracket(sl2, e, f) == {h: 1}
    assert bracket(sl2, f, e) == {h: -1}


def test_osp_table_is_valid(osp12):
    x = osp12.index["x"]
    assert bracket(osp12, x, x) == {osp12.index["e"]: 2}


def test_antisymmetry_error():
    doc = _doc([("e1", 0, 0), ("e2", 0, 0), ("e3", 0, 0)], [(0, 1, [(2, 1)]), (1, 0, [(2, 1)])])
    with pytest.raises(AlgebraError, match="antisymmetry"):
        parse_structure_constants(doc)


def test_odd_pairs_are_symmetric():
    # [x,y] = [y,x] for odd x, y in a consistent table
    doc = _doc([("z", 0, 2), ("x", 1, 1), ("y", 1, 1)], [(1, 2, [(0, 1)]), (2, 1, [(0, 1)])])
    alg = parse_structure_constants(doc)
    assert bracket(alg, 2, 1) == {0: 1}


def test_grading_violation():
    doc = _doc([("a", 0, 0), ("b", 0, 1)], [(0, 1, [(0, 1)])])
    with pytest.raises(AlgebraError, match="grading"):
        parse_structure_constants(doc)


def test_jacobi_violation():
    # [a,b]=a, [a,c]=b, [b,c]=0 breaks Jacobi on (a, b, c)
    doc = _doc([("a", 0, 0), ("b", 0, 0), ("c", 0, 0)], [(0, 1, [(0, 1)]), (0, 2, [(1, 1)])])
    with pytest.raises(AlgebraError, match="Jacobi"):
        parse_structure_constants(doc)


def test_jacobi_defect_zero_on_sl2(sl2):
    for a in range(3):
        for b in range(3):
            for c in range(3):
                assert jacobi_defect(sl2, a, b, c) == {}


def test_malformed_document():
    with pytest.raises(AlgebraError):
        parse_structure_constants(json.dumps({"nobasis": []}))
    with pytest.raises(AlgebraError):
        parse_structure_constants({"basis": [{"name": "a", "parity": 2, "grade": 0}]})


def test_bracket_examples_h20():
    alg = make_algebra(AlgebraSpec("H", 1, 0, window=(-1, 0)))
    p, q, p2 = alg.index["p"], alg.index["q"], alg.index["p^2"]
    # the constant {p,q} = 1 is not an element of H
    assert bracket(alg, p, q) == {}
    assert bracket(alg, p2, q) == {p: 2}
    assert bracket(alg, p, p) == {}


def test_poisson_bracket_examples():
    p2 = GeneratorMonomial((2, 0), ())
    q = GeneratorMonomial((0, 1), ())
    p = GeneratorMonomial((1, 0), ())
    assert poisson_bracket(p2, q) == {p: 2}
    assert poisson_bracket(p, p) == {}


def test_degenerate_windows():
    assert make_algebra(AlgebraSpec("H", 1, 0, window=(-2, -2))).basis == []
    po = make_algebra(AlgebraSpec("Po", 1, 0, window=(-2, -2)))
    assert names(po) == ["1"] and po.central_index == 0

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from twistknot.goeritz import (
    B_BLOCK,
    Inertia,
    SymIntMatrix,
    congruence_diagonalize,
    goeritz_family_matrix,
    inertia,
    make_N,
    make_P,
    pn_reduce,
    signature,
    signature_closed_form,
    signature_gordon_litherland,
    twisted_torus_signature,
)
from twistknot.verify import GOLDEN_G, GOLDEN_GFULL


@st.composite
def sym_matrices(draw, d_max=8, lo=-5, hi=5):
    d = draw(st.integers(1, d_max))
    rows = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            rows[i][j] = rows[j][i] = draw(st.integers(lo, hi))
    return SymIntMatrix(rows)


@st.composite
def unimodular(draw, d):
    # product of elementary integer row operations
    u = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(draw(st.integers(0, 3 * d))):
        if d < 2:
            break
        i = draw(st.integers(0, d - 1))
        j = draw(st.integers(0, d - 1).filter(lambda x: x != i))
        c = draw(st.integers(-2, 2))
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    return u


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


def test_symmetry_enforced():
    with pytest.raises(ValueError):
        SymIntMatrix([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        SymIntMatrix([[1, 2]])


def test_inertia_examples():
    assert inertia([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]) == Inertia(1, 2, 0)
    assert inertia([[0] * 3 for _ in range(3)]) == Inertia(0, 0, 3)
    assert signature(goeritz_family_matrix(2, 2).reduced) == -1
    assert inertia(B_BLOCK) == Inertia(1, 2, 0)


def test_zero_pivot_handling():
    assert inertia([[0, 1], [1, 0]]) == Inertia(1, 1, 0)
    assert inertia([[0, 0, 1], [0, 0, 0], [1, 0, 0]]) == Inertia(1, 1, 1)


def test_goeritz_golden():
    data = goeritz_family_matrix(2, 2)
    assert data.full.to_ints() == GOLDEN_GFULL
    assert data.reduced.to_ints() == GOLDEN_G
    assert data.mu == 11
    assert data.full[0, 0] == 11 and data.full[0, 7] == -5
    assert data.reduced[0, 6] == 1 and data.reduced[6, 6] == 3


def test_dump_parse_roundtrip():
    g = goeritz_family_matrix(2, 2).reduced
    assert SymIntMatrix.parse(g.dump()) == g
    assert g.dump().splitlines()[0] == '-1 1 0 0 0 0 1'
    assert SymIntMatrix([[Fraction(1, 2)]]).dump() == '1/2'


def test_family_shape():
    for k in range(1, 9):
        for m in range(9):
            data = goeritz_family_matrix(k, m)
            q = 3 * k + 1
            assert data.full.dim == q + 1 and data.reduced.dim == q
            assert data.mu == q + 2 * m
            assert all(sum(r) == 0 for r in data.full.rows)
            assert data.reduced == make_P(k, 2 * m - 1)


def test_family_parameter_errors():
    with pytest.raises(ValueError):
        goeritz_family_matrix(0, 1)
    with pytest.raises(ValueError):
        goeritz_family_matrix(1, -1)


def test_P_N_examples():
    assert make_P(1, 5).to_ints() == [[-1, 1, 0, 1], [1, -1, 1, 0], [0, 1, -1, 1], [1, 0, 1, 5]]
    assert make_N(1, 5).to_ints() == [[-1, 1, 0, -1], [1, -1, 1, 0], [0, 1, -1, 1], [-1, 0, 1, 5]]
    for l in range(1, 5):
        p, n = make_P(l, 2).to_ints(), make_N(l, 2).to_ints()
        diff = {(i, j) for i in range(3 * l + 1) for j in range(3 * l + 1) if p[i][j] != n[i][j]}
        assert diff == {(0, 3 * l), (3 * l, 0)}


def test_pn_reduce_examples():
    assert pn_reduce(1, 4, 'P').tail == 2
    assert pn_reduce(1, 4, 'N').tail == 6
    r = pn_reduce(2, 4, 'P')
    assert r.blocks == 2 and r.tail == 6
    assert r.chain == ('P2', 'N1')


def test_pn_reduce_matches_direct_inertia_and_determinant():
    for l in range(1, 7):
        for eps in range(-3, 6):
            for kind, mk in (('P', make_P), ('N', make_N)):
                red = pn_reduce(l, eps, kind)
                mat = mk(l, eps)
                assert red.inertia() == inertia(mat), (kind, l, eps)
                # each B block has determinant 1, so the tail is the determinant
                assert red.tail == sympy.Matrix(mat.to_ints()).det()


def test_pn_tail_reproduces_goeritz_signature():
    for k in range(1, 9):
        for m in range(9):
            tail = pn_reduce(k, 2 * m - 1, 'P').tail
            want = -k - 1 if (k % 2 == 1 and m in (0, 1)) else -k + 1
            assert -k + (1 if tail > 0 else -1 if tail < 0 else 0) == want


def test_signature_examples():
    assert signature_closed_form(1, 0) == -6
    assert signature_closed_form(1, 1) == -8
    assert signature_closed_form(2, 2) == -12
    assert signature_gordon_litherland(2, 2) == -12
    assert signature_gordon_litherland(1, 0) == -6
    assert signature_gordon_litherland(3, 0) == -14
    assert twisted_torus_signature(5, 0) == -8
    assert twisted_torus_signature(8, 0) == -10


def test_closed_form_equals_engine():
    for k in range(1, 9):
        for m in range(9):
            assert signature_gordon_litherland(k, m) == signature_closed_form(k, m)


@given(sym_matrices())
def test_diagonalization_is_a_congruence(m):
    diag, s = congruence_diagonalize(m)
    d = m.dim
    prod = matmul(matmul(s, [list(r) for r in m.rows]), transpose(s))
    assert prod == [[diag[i] if i == j else 0 for j in range(d)] for i in range(d)]
    assert sympy.Matrix(s).det() != 0


@given(sym_matrices().flatmap(lambda m: st.tuples(st.just(m), unimodular(m.dim))))
def test_sylvester_invariance(mu):
    m, u = mu
    congruent = SymIntMatrix(matmul(matmul(u, m.to_ints()), transpose(u)))
    assert inertia(congruent) == inertia(m)


@given(sym_matrices(d_max=6))
def test_inertia_matches_eigenvalue_sign_count(m):
    # eigenvalue sign counts with multiplicity, from a square-free factorization
    x = sympy.Symbol('x')
    cp = sympy.Poly(sympy.Matrix(m.to_ints()).charpoly(x).as_expr(), x)
    n_pos = n_neg = n_zero = 0
    for factor, mult in cp.sqf_list()[1]:
        n_pos += mult * factor.count_roots(0, None)
        n_neg += mult * factor.count_roots(None, 0)
        n_zero += mult * int(factor.eval(0) == 0)
        if factor.eval(0) == 0:
            n_pos -= mult
            n_neg -= mult
    assert inertia(m) == Inertia(n_pos, n_neg, n_zero)

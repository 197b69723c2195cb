import pytest
from hypothesis import assume, given, strategies as st

from twistknot.braidcore import (
    BraidSyntaxError,
    BraidWord,
    ParameterError,
    closure_components,
    conjugate_by_garside,
    cyclic_rotate,
    format_braid,
    full_twist,
    garside_normal_form,
    gamma_pq_braid,
    gen,
    half_twist,
    is_twist_positive,
    left_descents,
    make_baker_kegel_braid,
    make_one_bridge_braid,
    make_tlink_braid,
    make_torus_braid,
    make_twisted_torus_braid,
    make_vafaee_braid,
    normal_form_product,
    parse_braid,
    right_descents,
    standard_form,
    twist_positive_cofactor,
    twisted_torus_word,
    writhe,
)
from twistknot.burau import reduced_burau


def words(n_max=5, max_len=20, positive=True):
    def build(n):
        sign = st.just(1) if positive else st.sampled_from((1, -1))
        letter = st.tuples(st.integers(1, n - 1), sign).map(lambda p: p[0] * p[1])
        return st.lists(letter, max_size=max_len).map(lambda xs: BraidWord.from_ints(n, xs))
    return st.integers(2, n_max).flatmap(build)


def pairs_of_words(n_max=5, max_len=20, positive=True):
    def build(n):
        sign = st.just(1) if positive else st.sampled_from((1, -1))
        letter = st.tuples(st.integers(1, n - 1), sign).map(lambda p: p[0] * p[1])
        w = st.lists(letter, max_size=max_len).map(lambda xs: BraidWord.from_ints(n, xs))
        return st.tuples(w, w)
    return st.integers(2, n_max).flatmap(build)


# parsing and formatting

def test_parse_examples():
    assert parse_braid('3: 2 1 2 1 2 1') == gen(3, 2, 1) ** 3
    assert parse_braid('4: 2 1 3 2 -1').to_ints() == [2, 1, 3, 2, -1]


@pytest.mark.parametrize('text', ['3: 5 1', '3: 0', '3 1 2', '1: 1', '3: 1 x', '3: (1 2', '3: (1)x', ''])
def test_parse_errors(text):
    with pytest.raises(BraidSyntaxError):
        parse_braid(text)


def test_parse_error_reports_position():
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid('3: 1 2 7')
    assert exc.value.pos == 7


def test_repetition_sugar():
    assert parse_braid('3: (2 1)x7 (2)x4') == make_twisted_torus_braid(7, 2)
    assert parse_braid('3: (2 1)×2') == gen(3, 2, 1, 2, 1)
    assert parse_braid('3: (1 (2)x2)x2').to_ints() == [1, 2, 2, 1, 2, 2]


@given(words(positive=False))
def test_format_roundtrip(b):
    assert parse_braid(format_braid(b)) == b
    assert 'x' not in format_braid(b) and '(' not in format_braid(b)


# writhe and closures

def test_writhe_examples():
    assert writhe(gen(3, 2, 1) ** 7 * gen(3, 2) ** 4) == 18
    assert writhe(BraidWord(3, ())) == 0
    assert writhe(make_twisted_torus_braid(10, 0)) == writhe(make_twisted_torus_braid(7, 3)) == 20


def test_closure_examples():
    assert closure_components(gen(2, 1)) == 1
    # gamma_{2,1}: the permutation is trivial, so three components
    assert closure_components(gamma_pq_braid(2, 1)) == 3
    for p in range(-4, 5):
        for q in range(-3, 4):
            assert closure_components(gamma_pq_braid(p, q)) >= 2
    for k in range(1, 16):
        for m in range(4):
            c = closure_components(twisted_torus_word(k, m))
            if k % 3:
                assert c == 1
            else:
                assert c in (2, 3)


# Garside normal form

def test_normal_form_examples():
    nf = garside_normal_form(gen(3, 1, 2, 1))
    assert (nf.infimum, nf.canonical_length) == (1, 0)
    nf = garside_normal_form(gen(3, 2, 1) ** 3)
    assert (nf.infimum, nf.canonical_length) == (2, 0)
    nf = garside_normal_form(gen(3, 2, 1) ** 4)
    assert (nf.infimum, nf.canonical_length) == (2, 1)
    assert str(nf) == 'Delta^2 . [2 1]'


def test_twist_positive_examples():
    assert is_twist_positive(gen(3, 2, 1) ** 4)
    assert not is_twist_positive(gen(3, 1, 2))
    assert not is_twist_positive(make_baker_kegel_braid(1))


def test_full_twist_is_half_twist_squared():
    for n in range(2, 6):
        assert garside_normal_form(full_twist(n)) == garside_normal_form(half_twist(n) ** 2)
        assert garside_normal_form(full_twist(n)).infimum == 2


def _left_weighted(nf):
    ps = [x.perm for x in nf.factors]
    return all(left_descents(b) <= right_descents(a) for a, b in zip(ps, ps[1:]))


@given(words(positive=False))
def test_normal_form_is_canonical(b):
    nf = garside_normal_form(b)
    assert _left_weighted(nf)
    assert garside_normal_form(nf.word()) == nf
    # Burau is a homomorphism, so equal braids must have equal matrices
    assert reduced_burau(nf.word()) == reduced_burau(b)


@given(words(n_max=3, max_len=14, positive=False), words(n_max=3, max_len=14, positive=False))
def test_normal_form_decides_equality_in_b3(u, v):
    # reduced Burau is faithful on three strands
    assume(u.strands == v.strands)
    assert (garside_normal_form(u) == garside_normal_form(v)) == (reduced_burau(u) == reduced_burau(v))


@given(pairs_of_words())
def test_normal_form_product(uv):
    u, v = uv
    direct = garside_normal_form(u * v)
    assert normal_form_product(garside_normal_form(u), garside_normal_form(v)) == direct


@given(pairs_of_words(positive=False, max_len=10))
def test_normal_form_product_mixed_signs(uv):
    u, v = uv
    assert normal_form_product(garside_normal_form(u), garside_normal_form(v)) == garside_normal_form(u * v)


@given(words(n_max=5, max_len=20), st.data())
def test_normal_form_invariant_under_braid_relations(b, data):
    ints = b.to_ints()
    n = b.strands
    pos = data.draw(st.integers(0, len(ints)))
    i = data.draw(st.integers(1, n - 1))
    n_ = BraidWord.from_ints
    base = garside_normal_form(b)
    # inserting a trivial pair changes nothing
    assert garside_normal_form(n_(n, ints[:pos] + [i, -i] + ints[pos:])) == base
    if i + 1 <= n - 1:
        u = garside_normal_form(n_(n, ints[:pos] + [i, i + 1, i] + ints[pos:]))
        v = garside_normal_form(n_(n, ints[:pos] + [i + 1, i, i + 1] + ints[pos:]))
        assert u == v
    j = data.draw(st.integers(1, n - 1))
    if abs(i - j) >= 2:
        u = garside_normal_form(n_(n, ints[:pos] + [i, j] + ints[pos:]))
        v = garside_normal_form(n_(n, ints[:pos] + [j, i] + ints[pos:]))
        assert u == v


@given(words())
def test_positive_word_length_preserved(b):
    nf = garside_normal_form(b)
    assert len(nf.word()) == len(b)
    assert nf.infimum >= 0


@given(words(max_len=24))
def test_twist_positive_cofactor(b):
    if not is_twist_positive(b):
        return
    gamma = twist_positive_cofactor(b)
    assert gamma.is_positive()
    assert garside_normal_form(full_twist(b.strands) * gamma) == garside_normal_form(b)


def test_cofactor_rejects_non_twist_positive():
    with pytest.raises(ValueError):
        twist_positive_cofactor(gen(3, 1, 2))


# conjugations and rotations

def test_conjugate_examples():
    for q in (4, 7):
        for m in (0, 2):
            got = conjugate_by_garside(twisted_torus_word(q, m))
            assert got.to_ints() == [1, 2] * q + [1] * (2 * m)
    assert conjugate_by_garside(gen(4, 2)) == gen(4, 2)
    assert conjugate_by_garside(gen(4, 1, 3)) == gen(4, 3, 1)


def test_conjugate_agrees_with_delta_conjugation():
    for b in (gen(4, 1, 2, -3), gen(3, 2, 1, 1, -2)):
        d = half_twist(b.strands)
        assert garside_normal_form(conjugate_by_garside(b)) == garside_normal_form(d * b * d.inverse())


def test_rotate_examples():
    b = gen(4, 1, 2, 3)
    assert cyclic_rotate(b, 1) == gen(4, 2, 3, 1)
    assert cyclic_rotate(b, 0) == b
    assert cyclic_rotate(b, len(b)) == b


@given(words(positive=False), st.integers(0, 30))
def test_involution_and_rotation(b, k):
    assert conjugate_by_garside(conjugate_by_garside(b)) == b
    if len(b):
        k %= len(b)
        assert cyclic_rotate(cyclic_rotate(b, k), len(b) - k) == b


# constructors

def test_constructor_examples():
    assert format_braid(make_twisted_torus_braid(7, 2)) == '3: ' + ' '.join(['2 1'] * 7 + ['2'] * 4)
    assert make_baker_kegel_braid(1) == gen(4, 2, 1, 3, 2) ** 3 * gen(4, -1, 2, 1, 1, 2)
    assert make_tlink_braid([(2, 3)]) == gen(2, 1, 1, 1)
    assert make_torus_braid(3, 4) == gen(3, 1, 2) ** 4
    assert make_one_bridge_braid(4, 2, 5).to_ints() == [2, 1] + [3, 2, 1] * 5
    assert make_vafaee_braid(3, 4, 2, 1).to_ints() == [2, 1] * 4 + [2, 1] * 2


@pytest.mark.parametrize('call', [
    lambda: make_twisted_torus_braid(6, 1),
    lambda: make_twisted_torus_braid(2, 0),
    lambda: make_twisted_torus_braid(7, -1),
    lambda: make_tlink_braid([(3, 2), (2, 5)]),
    lambda: make_tlink_braid([(2, 0)]),
    lambda: make_tlink_braid([]),
    lambda: make_one_bridge_braid(4, 3, 1),
    lambda: make_vafaee_braid(3, 1, 3, 0),
    lambda: make_baker_kegel_braid(0),
    lambda: make_torus_braid(1, 3),
    lambda: standard_form(6, 0),
])
def test_constructor_parameter_errors(call):
    with pytest.raises(ParameterError):
        call()


def test_standard_form_examples():
    assert standard_form(7, 3) == (7, 3)
    assert standard_form(5, 0) == (4, 1)
    assert standard_form(8, 1) == (7, 2)


def test_twisted_torus_family_is_twist_positive():
    for k in (4, 5, 7, 8, 10):
        for m in range(4):
            assert is_twist_positive(make_twisted_torus_braid(k, m))

import pytest
from hypothesis import given, settings, strategies as st

from qwebs.core import GaussianRational, ONE, I, Supertabloid, omega
from qwebs.permod import (
    ModuleVector, module_basis, base_tabloid,
    act_s, act_c, act_word, act_element,
    TensorMonomial, TensorVector, tensor_to_tabloid, tabloid_to_tensor,
    act_tensor, schur_act, tensor_basis,
)
from qwebs.sergeev import (
    SergeevBasisWord, SergeevElement, word_multiply, standard_basis,
)

RUNNING = Supertabloid([[-3, -6], [2], [1, -4, 5]])  # running example


def tb(*rows):
    return ModuleVector.from_tabloid(Supertabloid(list(rows)))


# ---------------------------------------------------------------------------
# tabloid action

def test_act_s5_running_example():
    # letters 5, 6 trade rows with primes staying in place; positive sign
    # since only one of the two is primed
    v = ModuleVector.from_tabloid(RUNNING)
    got = act_s(5, v)
    assert got == tb([-3, -5], [2], [1, -4, 6])


def test_act_s_sign():
    v = tb([-1], [-2])
    assert act_s(1, v) == tb([-2], [-1]).scale(GaussianRational(-1))


def test_act_s_squares_to_identity():
    for T in module_basis((2, 1)):
        v = ModuleVector.from_tabloid(T)
        for i in (1, 2):
            assert act_s(i, act_s(i, v)) == v


def test_act_c3_running_example():
    v = ModuleVector.from_tabloid(RUNNING)
    got = act_c(3, v)
    want = ModuleVector.from_tabloid(
        Supertabloid([[3, -6], [2], [1, -4, 5]]), -I)
    assert got == want


def test_act_c1_single_cell():
    v = tb([1])
    assert act_c(1, v) == ModuleVector.from_tabloid(Supertabloid([[-1]]), I)


def test_act_c_squares_to_identity():
    for T in module_basis((1, 2)):
        v = ModuleVector.from_tabloid(T)
        for j in (1, 2, 3):
            assert act_c(j, act_c(j, v)) == v


def test_c_operators_anticommute():
    for T in module_basis((2, 1)):
        v = ModuleVector.from_tabloid(T)
        lhs = act_c(1, act_c(3, v))
        rhs = act_c(3, act_c(1, v)).scale(GaussianRational(-1))
        assert lhs == rhs


def test_sergeev_relation_cs():
    # c_i s_i = s_i c_{i+1} as operators
    for T in module_basis((1, 1, 1)):
        v = ModuleVector.from_tabloid(T)
        assert act_c(1, act_s(1, v)) == act_s(1, act_c(2, v))
        assert act_c(2, act_s(1, v)) == act_s(1, act_c(1, v))


def test_reduced_word_independence():
    # braid: s1 s2 s1 = s2 s1 s2 as operator chains
    for T in module_basis((2, 1)):
        v = ModuleVector.from_tabloid(T)
        lhs = act_s(1, act_s(2, act_s(1, v)))
        rhs = act_s(2, act_s(1, act_s(2, v)))
        assert lhs == rhs


def test_representation_property_r2():
    basis = standard_basis(2)
    tabloids = module_basis((1, 1))
    for x in basis:
        for y in basis:
            sign, xy = word_multiply(x, y)
            for T in tabloids:
                v = ModuleVector.from_tabloid(T)
                lhs = act_word(x, act_word(y, v))
                rhs = act_word(xy, v).scale(GaussianRational(sign))
                assert lhs == rhs


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_representation_property_r3(data):
    basis = standard_basis(3)
    pick = st.integers(0, len(basis) - 1)
    x = basis[data.draw(pick)]
    y = basis[data.draw(pick)]
    shape = data.draw(st.sampled_from([(1, 1, 1), (2, 1), (3,)]))
    tabs = module_basis(shape)
    T = tabs[data.draw(st.integers(0, len(tabs) - 1))]
    v = ModuleVector.from_tabloid(T)
    sign, xy = word_multiply(x, y)
    assert act_word(x, act_word(y, v)) == act_word(xy, v).scale(
        GaussianRational(sign))


def test_act_element_identity_and_linearity():
    r = 3
    v = tb([1], [2], [3]) + tb([-1], [2], [3]).scale(I)
    assert act_element(SergeevElement.one(r), v) == v
    x = SergeevElement.from_word(SergeevBasisWord.s(1, r), GaussianRational(2))
    assert act_element(x, v) == act_s(1, v).scale(GaussianRational(2))


def test_regular_representation_bijection():
    r = 2
    images = {}
    for w in standard_basis(r):
        got = act_word(w, ModuleVector.from_tabloid(base_tabloid(r)))
        assert len(got.terms) == 1
        (T, coeff), = got.terms.items()
        assert coeff in (ONE, -ONE, I, -I)
        assert T not in images
        images[T] = w
    assert len(images) == len(module_basis((1, 1))) == 8


# ---------------------------------------------------------------------------
# tensor model

def test_tensor_bijection_running_example():
    m = TensorMonomial((3, 2, -1, -3, 3, -1))
    assert tensor_to_tabloid(m, 3) == RUNNING
    assert tabloid_to_tensor(RUNNING, 3) == m


def test_tensor_bijection_round_trip():
    n = r = 2
    for m in tensor_basis(n, r):
        T = tensor_to_tabloid(m, n)
        assert tabloid_to_tensor(T, n) == m
        assert T.parity == m.parity
        assert T.shape == m.weight(n)


def test_act_tensor_s_plain_swap():
    v = TensorVector.from_monomial(TensorMonomial((1, 2)))
    got = act_tensor("s", 1, v)
    assert got == TensorVector.from_monomial(TensorMonomial((2, 1)))


def test_act_tensor_c_on_v1():
    v = TensorVector.from_monomial(TensorMonomial((1,)))
    got = act_tensor("c", 1, v)
    assert got == TensorVector.from_monomial(TensorMonomial((-1,)), I)


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_tabloid_equivariance(n):
    r = n
    for m in tensor_basis(n, r):
        T = tensor_to_tabloid(m, n)
        vT = ModuleVector.from_tabloid(T)
        vm = TensorVector.from_monomial(m)
        for i in range(1, r):
            got = act_tensor("s", i, vm)
            want = act_s(i, vT)
            assert _push(got, n) == want
        for j in range(1, r + 1):
            got = act_tensor("c", j, vm)
            want = act_c(j, vT)
            assert _push(got, n) == want


def _push(tv, n):
    """Transport a tensor vector through the bijection."""
    shape = None
    terms = {}
    for m, coeff in tv.terms.items():
        T = tensor_to_tabloid(m, n)
        shape = T.shape
        terms[T] = terms.get(T, 0) + coeff
    return ModuleVector(shape, terms)


# ---------------------------------------------------------------------------
# Schur generators on tensor space

def test_hbar_on_single_slot():
    v = TensorVector.from_monomial(TensorMonomial((1,)))
    got = schur_act(("hb", 1), v)
    assert got == TensorVector.from_monomial(TensorMonomial((-1,)))
    assert schur_act(("hb", 1), got) == v


def test_weight_projection():
    n = r = 2
    v = TensorVector(r)
    for m in tensor_basis(n, r):
        v = v + TensorVector.from_monomial(m)
    p11 = schur_act(("1", (1, 1)), v)
    assert all(m.weight(n) == (1, 1) for m in p11.terms)
    assert len(p11.terms) == 8
    p20 = schur_act(("1", (2, 0)), v)
    assert len(p20.terms) == 4
    # orthogonal projections
    assert schur_act(("1", (1, 1)), p20) == TensorVector.zero(r)
    assert schur_act(("1", (1, 1)), p11) == p11


def test_e_f_commutator_is_weight_difference():
    n = r = 2
    for lam in [(2, 0), (1, 1), (0, 2)]:
        for m in tensor_basis(n, r, weight=lam):
            v = TensorVector.from_monomial(m)
            lhs = schur_act(("e", 1), schur_act(("f", 1), v)) \
                - schur_act(("f", 1), schur_act(("e", 1), v))
            assert lhs == v.scale(GaussianRational(lam[0] - lam[1]))


def test_e_moves_letters_down():
    v = TensorVector.from_monomial(TensorMonomial((2, -2)))
    got = schur_act(("e", 1), v)
    want = (TensorVector.from_monomial(TensorMonomial((1, -2)))
            + TensorVector.from_monomial(TensorMonomial((2, -1))))
    assert got == want


def test_eb_sign_prefix():
    # odd generator picks up -1 passing a barred slot
    v = TensorVector.from_monomial(TensorMonomial((-2, 2)))
    got = schur_act(("eb", 1), v)
    want = (TensorVector.from_monomial(TensorMonomial((1, 2)))
            + TensorVector.from_monomial(TensorMonomial((-2, -1))).scale(
                GaussianRational(-1)))
    assert got == want

"""Webs acting on supertabloids: generator actions, matrices, shortcuts."""

from fractions import Fraction
from math import comb as binom, factorial

import pytest

from qwebs.core import (
    GaussianRational, Permutation, Supertabloid, all_permutations,
)
from qwebs.evaluate import (
    MorphismMatrix,
    check_equivariance,
    eval_layer,
    eval_thickened,
    eval_web,
    find_equivariance_failure,
)
from qwebs.permod import ModuleVector, base_tabloid, module_basis
from qwebs.sergeev import SergeevBasisWord, standard_basis
from qwebs.web import (
    WebCombination,
    WebExpr,
    WebLayer,
    compose,
    compose_all,
    cross_combination,
    expand_clasp,
    expand_crossing,
    flatten_web,
    identity_web,
    sergeev_diagram,
    tabloid_web,
    tabloid_word,
    thicken_web,
)


def vec(rows, coeff=1):
    return ModuleVector.from_tabloid(Supertabloid(rows), GaussianRational(coeff))


def matrix_of(domain, codomain, parity, fn):
    """Matrix of an explicit tabloid map, for expected values."""
    cod_index = {T: i for i, T in enumerate(module_basis(codomain))}
    cols = {}
    for j, T in enumerate(module_basis(domain)):
        col = {}
        for U, c in fn(T).terms.items():
            col[cod_index[U]] = c
        if col:
            cols[j] = col
    return MorphismMatrix(domain, codomain, parity, cols)


def identity_matrix(shape):
    return eval_web(identity_web(shape))


class TestGeneratorActions:
    """The row operations on the three-row example tabloid."""

    T = Supertabloid([[-3, -6], [2], [1, -4, 5]])

    def test_dot_alternates_over_row(self):
        out = eval_layer(WebLayer.dot(3), vec(self.T.rows))
        expected = (vec([[-3, -6], [2], [-1, -4, 5]])
                    + vec([[-3, -6], [2], [1, 4, 5]], -1)
                    + vec([[-3, -6], [2], [1, -4, -5]]))
        assert out == expected

    def test_merge_pours_rows_together(self):
        out = eval_layer(WebLayer.merge(1), vec(self.T.rows))
        assert out == vec([[2, -3, -6], [1, -4, 5]])

    def test_split_deals_row_upward(self):
        out = eval_layer(WebLayer.split(3, 2, 1), vec(self.T.rows))
        expected = (vec([[-3, -6], [2], [1, -4], [5]])
                    + vec([[-3, -6], [2], [1, 5], [-4]])
                    + vec([[-3, -6], [2], [-4, 5], [1]]))
        assert out == expected

    def test_dot_on_singleton_row(self):
        out = eval_layer(WebLayer.dot(2), vec(self.T.rows))
        assert out == vec([[-3, -6], [-2], [1, -4, 5]])
        primed_below = eval_layer(
            WebLayer.dot(3), vec([[-1], [2], [3]]))
        assert primed_below == vec([[-1], [2], [-3]], -1)


class TestCrossingAction:
    def test_thin_crossing_swaps_rows_without_sign(self):
        M = eval_web(cross_combination(1, (1, 1)))
        swap = matrix_of(
            (1, 1), (1, 1), 0,
            lambda T: ModuleVector.from_tabloid(
                Supertabloid([T.rows[1], T.rows[0]])))
        assert M == swap

    def test_base_tabloid_images(self):
        r = 3
        T0 = base_tabloid(r)
        for i in (1, 2):
            M = eval_web(cross_combination(i, (1,) * r))
            out = M.apply(ModuleVector.from_tabloid(T0))
            rows = list(T0.rows)
            rows[i - 1], rows[i] = rows[i], rows[i - 1]
            assert out == vec(rows)
        for j in (1, 2, 3):
            M = eval_web(WebExpr((1,) * r, (WebLayer.dot(j),)))
            out = M.apply(ModuleVector.from_tabloid(T0))
            assert out == vec([(-e if abs(e) == j else e,)
                               for (e,) in T0.rows])

    @pytest.mark.parametrize("k,l", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_thick_crossing_swaps_rows(self, k, l):
        M = eval_web(expand_crossing(1, k, l, (k, l)))
        swap = matrix_of(
            (k, l), (l, k), 0,
            lambda T: ModuleVector.from_tabloid(
                Supertabloid([T.rows[1], T.rows[0]])))
        assert M == swap

    def test_crossing_squares_to_identity(self):
        x = cross_combination(1, (1, 1))
        assert eval_web(compose(x, x)) == identity_matrix((1, 1))

    def test_braid_move(self):
        obj = (1, 1, 1)
        x1 = cross_combination(1, obj)
        x2 = cross_combination(2, obj)
        lhs = eval_web(compose_all([x1, x2, x1]))
        rhs = eval_web(compose_all([x2, x1, x2]))
        assert lhs == rhs


class TestEvalWeb:
    @pytest.mark.parametrize("k,l", [(1, 1), (2, 1), (2, 2)])
    def test_digon_is_binomial(self, k, l):
        w = WebExpr((k + l,),
                    (WebLayer.split(1, k, l), WebLayer.merge(1)))
        assert eval_web(w) == identity_matrix((k + l,)).scale(binom(k + l, l))

    def test_split_dots_merge_vanishes(self):
        w = WebExpr((2,), (WebLayer.split(1, 1, 1), WebLayer.dot(2),
                           WebLayer.dot(1), WebLayer.merge(1)))
        assert eval_web(w).is_zero()

    def test_two_dots_on_strand_scale(self):
        for k in (1, 2, 3):
            w = WebExpr((k,), (WebLayer.dot(1), WebLayer.dot(1)))
            assert eval_web(w) == identity_matrix((k,)).scale(k)

    def test_zero_without_boundary_raises(self):
        with pytest.raises(ValueError):
            eval_web(WebCombination.zero())

    def test_zero_with_boundary(self):
        M = eval_web(WebCombination.zero((2,), (2,)))
        assert M.is_zero()

    def test_parity_recorded(self):
        assert eval_web(WebExpr((2,), (WebLayer.dot(1),))).parity == 1
        assert eval_web(identity_web((2,))).parity == 0

    def test_functorial(self):
        below = compose(WebExpr((1, 1), (WebLayer.merge(1),)),
                        cross_combination(1, (1, 1)))
        above = WebExpr((2,), (WebLayer.split(1, 1, 1),))
        assert eval_web(compose(above, below)) == eval_web(above).matmul(
            eval_web(below))


class TestMatrixArithmetic:
    def test_add_sub_scale(self):
        M = eval_web(WebExpr((2,), (WebLayer.dot(1),)))
        Id = identity_matrix((2,))
        assert (M + M) == M.scale(2)
        assert (M - M).is_zero()
        assert (Id.scale(Fraction(1, 2)) + Id.scale(Fraction(1, 2))) == Id

    def test_add_requires_boundary_match(self):
        with pytest.raises(ValueError):
            identity_matrix((2,)) + identity_matrix((1, 1))

    def test_matmul_matches_apply(self):
        A = eval_web(WebExpr((2,), (WebLayer.split(1, 1, 1),)))
        B = eval_web(WebExpr((1, 1), (WebLayer.merge(1),)))
        AB = A.matmul(B)
        for T in module_basis((1, 1)):
            v = ModuleVector.from_tabloid(T)
            assert AB.apply(v) == A.apply(B.apply(v))

    def test_mixed_parity_add(self):
        M = eval_web(WebExpr((2,), (WebLayer.dot(1),)))
        Id = identity_matrix((2,))
        assert (M + Id).parity is None


class TestClaspEval:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_clasp_on_thick_strand_is_identity(self, k):
        assert eval_web(expand_clasp(1, k, (k,))) == identity_matrix((k,))

    @pytest.mark.parametrize("k", [2, 3])
    def test_flattened_clasp_is_symmetrizer_sum(self, k):
        P = eval_web(flatten_web(expand_clasp(1, k, (k,))))
        acc = MorphismMatrix.zero((1,) * k, (1,) * k)
        for sigma in all_permutations(k):
            acc = acc + eval_web(sergeev_diagram(
                SergeevBasisWord(0, sigma), k))
        assert P == acc
        averaged = P.scale(Fraction(1, factorial(k)))
        assert averaged.matmul(averaged) == averaged


class TestThickenedShortcut:
    def test_agrees_with_expansion_degree_two(self):
        boundaries = [((2,), (2,)), ((1, 1), (2,)), ((2,), (1, 1))]
        for word in standard_basis(2):
            thin = sergeev_diagram(word, 2)
            for bottom, top in boundaries:
                expected = eval_web(thicken_web(thin, bottom, top))
                assert eval_thickened(word, bottom, top) == expected

    def test_agrees_with_expansion_degree_three(self):
        words = [
            SergeevBasisWord(0b101, Permutation((3, 1, 2))),
            SergeevBasisWord(0b011, Permutation((2, 3, 1))),
            SergeevBasisWord(0b111, Permutation((3, 2, 1))),
            SergeevBasisWord(0, Permutation((1, 3, 2))),
        ]
        for word in words:
            thin = sergeev_diagram(word, 3)
            for bottom, top in [((2, 1), (1, 2)), ((3,), (1, 1, 1)),
                                ((1, 2), (3,))]:
                expected = eval_web(thicken_web(thin, bottom, top))
                assert eval_thickened(word, bottom, top) == expected


@pytest.fixture(scope="module")
def routed():
    """One expensively expanded routing diagram, shared across tests."""
    route = Supertabloid([[2, 2], [-3], [-1, -2]])
    word, web = tabloid_web(route, (2, 1, 2), (1, 3, 1))
    return word, eval_web(web)


class TestTabloidDiagram:
    def test_routing_diagram_action(self, routed):
        word, M = routed
        assert M.domain == (2, 1, 2) and M.codomain == (1, 3, 1)
        assert M.parity == 1
        out = M.apply(vec([[2, -4], [-3], [1, 5]]))
        expected = (vec([[-1], [2, -4, -5], [3]], -2)
                    + vec([[-5], [-1, 2, -4], [3]], 2))
        assert out == expected
        assert eval_thickened(word, (2, 1, 2), (1, 3, 1)) == M

    def test_routing_matrices_are_integral(self, routed):
        _, M = routed
        for col in M.cols.values():
            for c in col.values():
                assert c.re.denominator == 1 and c.im.denominator == 1

    def test_routing_diagram_supercommutes(self, routed):
        assert check_equivariance(routed[1])

    def test_unprimed_routing_follows_wires(self):
        seen = set()
        for sigma in all_permutations(3):
            T = Supertabloid([[sigma(p)] for p in range(1, 4)])
            word = tabloid_word(T, (1, 1, 1), (1, 1, 1))
            M = eval_thickened(word, (1, 1, 1), (1, 1, 1))
            out = M.apply(ModuleVector.from_tabloid(base_tabloid(3)))
            inv = sigma.inverse()
            assert out == vec([[inv(q)] for q in range(1, 4)])
            seen.add(next(iter(out.terms)))
        assert len(seen) == 6


class TestEquivariance:
    def test_single_dot_on_one_strand(self):
        M = eval_web(WebExpr((1,), (WebLayer.dot(1),)))
        assert M.parity == 1
        assert check_equivariance(M)

    def test_various_webs_supercommute(self):
        webs = [
            WebCombination.from_expr(
                WebExpr((2, 1), (WebLayer.merge(1),))),
            WebCombination.from_expr(
                WebExpr((3,), (WebLayer.split(1, 2, 1),))),
            WebCombination.from_expr(
                WebExpr((2, 1), (WebLayer.dot(1), WebLayer.merge(1)))),
            cross_combination(1, (1, 1, 1)),
            expand_crossing(1, 2, 1, (2, 1)),
        ]
        for w in webs:
            assert check_equivariance(eval_web(w)), w

    def test_mixed_parity_reported(self):
        M = eval_web(WebExpr((2,), (WebLayer.dot(1),))) + identity_matrix(
            (2,))
        assert find_equivariance_failure(M) == ("parity", None, None)

    def test_broken_map_is_caught(self):
        M = matrix_of((1, 1), (1, 1), 0,
                      lambda T: ModuleVector.from_tabloid(T)
                      if T.parity == 0 else ModuleVector.zero((1, 1)))
        failure = find_equivariance_failure(M)
        assert failure is not None and failure[0] in ("s", "c")

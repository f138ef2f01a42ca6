"""Tests for the local identity templates and the verification sweep."""

import pytest

from qwebs.core import GaussianRational, all_permutations
from qwebs.evaluate import eval_web
from qwebs.relcheck import (
    TEMPLATES,
    AmbientContext,
    RelationTemplate,
    VerificationReport,
    _ladder_raws,
    _perm_diagram,
    _sides_match,
    _thin_clasp,
    ambient_contexts,
    flip_expr,
    instantiate,
    mirror_combination,
    mirror_expr,
    mirror_raws,
    reverse_rungs,
    rotate180_combination,
    verify_all,
)
from qwebs.web import (
    WebExpr,
    WebLayer,
    as_combination,
    compose,
    cross_combination,
    raw_web,
)

TEMPLATE_IDS = [
    "superinterchange", "associativity-merge", "associativity-split",
    "digon", "dot-collision", "dots-past-merges", "dumbbell",
    "square-switch", "square-switch-dots", "double-rungs-1",
    "double-rungs-2", "complete-explosion", "2-dots-zero",
    "dot-on-k-strand", "rung-collision", "square-switch-double-dots",
    "double-rungs-3", "double-rungs-4", "clasp-recursion", "clasp-sum",
    "untangle-merge", "untangle-split", "merges-past-crossings",
    "dots-past-crossings", "braid-1", "braid-2",
]

TMAP = {t.id: t for t in TEMPLATES}
BARE = AmbientContext()


def sides_agree(template_id, params, ctx=BARE):
    lhs, rhs = instantiate(TMAP[template_id], params, ctx)
    ok, note = _sides_match(lhs, rhs)
    return ok, note, lhs, rhs


class TestAmbientContext:
    def test_offset_and_full(self):
        ctx = AmbientContext((2, 1), (3,))
        assert ctx.offset == 2
        assert ctx.full((5, 5)) == (2, 1, 5, 5, 3)

    def test_rejects_nonpositive_strands(self):
        with pytest.raises(ValueError):
            AmbientContext((0,), ())

    def test_context_enumeration(self):
        assert ambient_contexts(0) == [AmbientContext()]
        two_sided = ambient_contexts(2)
        assert len(two_sided) == 5
        assert AmbientContext((1,), (1,)) in two_sided
        assert AmbientContext((), (2,)) in two_sided


class TestTemplateRegistry:
    def test_ids(self):
        assert [t.id for t in TEMPLATES] == TEMPLATE_IDS

    def test_params_respect_budget(self):
        for template in TEMPLATES:
            for budget in (1, 2, 3):
                for params, thickness in template.params(budget):
                    assert 0 < thickness <= budget, (template.id, params)

    def test_instantiate_checks_boundaries(self):
        bad = RelationTemplate(
            "mismatched", lambda budget: [((), 1)],
            lambda params, ctx: (
                as_combination(WebExpr(ctx.full((1,)))),
                as_combination(WebExpr(ctx.full((1,)), (WebLayer.dot(1),)))))
        lhs, rhs = instantiate(bad, (), BARE)
        assert lhs.codomain == rhs.codomain
        worse = RelationTemplate(
            "torn", lambda budget: [((), 2)],
            lambda params, ctx: (
                as_combination(WebExpr(ctx.full((2,)))),
                as_combination(WebExpr(ctx.full((1, 1))))))
        with pytest.raises(ValueError):
            instantiate(worse, (), BARE)


class TestTransforms:
    def sample_exprs(self):
        return [
            WebExpr((2, 3), (WebLayer.dot(1), WebLayer.merge(1),
                             WebLayer.split(1, 4, 1))),
            WebExpr((1, 1, 2), (WebLayer.merge(2), WebLayer.split(2, 1, 2),
                                WebLayer.dot(2))),
            WebExpr((4,), (WebLayer.split(1, 2, 2), WebLayer.dot(2),
                           WebLayer.merge(1))),
        ]

    def test_mirror_is_an_involution(self):
        for expr in self.sample_exprs():
            assert mirror_expr(mirror_expr(expr)) == expr

    def test_mirror_reverses_boundaries(self):
        expr = self.sample_exprs()[1]
        mirrored = mirror_expr(expr)
        assert mirrored.domain == tuple(reversed(expr.domain))
        assert mirrored.codomain == tuple(reversed(expr.codomain))

    def test_flip_is_an_involution(self):
        for expr in self.sample_exprs():
            assert flip_expr(flip_expr(expr)) == expr

    def test_flip_swaps_boundaries(self):
        expr = self.sample_exprs()[0]
        flipped = flip_expr(expr)
        assert flipped.domain == expr.codomain
        assert flipped.codomain == expr.domain

    def test_rotation_is_an_involution(self):
        w = cross_combination(1, (1, 1, 2)) + as_combination(
            WebExpr((1, 1, 2), (WebLayer.dot(3),)))
        assert rotate180_combination(rotate180_combination(w)) == w

    def test_mirror_raws_matches_expr_mirror(self):
        domain = (2, 0, 3)
        raws = [("dot", 3), ("merge", 2), ("split", 1, (1, 1))]
        mdom, mraws = mirror_raws(domain, raws)
        assert mdom == (3, 0, 2)
        direct = raw_web(mdom, mraws)
        via_expr = mirror_combination(raw_web(domain, raws))
        assert direct == via_expr


class TestRungs:
    def test_ladder_materialization(self):
        raws = _ladder_raws((2, 2), [("R", 1, 1, False), ("L", 1, 1, True)])
        assert raws == [
            ("split", 1, (1, 1)), ("merge", 2),
            ("split", 2, (1, 2)), ("dot", 2), ("merge", 1),
        ]

    def test_reverse(self):
        rungs = [("L", 2, 1, True), ("R", 1, 3, False)]
        assert reverse_rungs(rungs) == [("R", 2, 1, True), ("L", 1, 3, False)]

    def test_overfull_rung_is_zero(self):
        raws = _ladder_raws((1, 1), [("L", 1, 2, False)])
        assert raw_web((1, 1), raws).is_zero()

    def test_empty_carry_rung_is_identity(self):
        raws = _ladder_raws((2, 1), [("L", 1, 0, False)])
        assert raw_web((2, 1), raws) == as_combination(WebExpr((2, 1)))


class TestSpotInstances:
    def test_digon_coefficients(self):
        _, rhs = instantiate(TMAP["digon"], (1, 1), BARE)
        assert rhs == as_combination(WebExpr((2,))).scale(2)
        ok, _, _, rhs = sides_agree("digon", (2, 1))
        assert ok
        assert rhs == as_combination(WebExpr((3,))).scale(3)

    def test_dumbbell_coefficient_two(self):
        ok, _, lhs, rhs = sides_agree("dumbbell", ())
        assert ok
        identity = eval_web(as_combination(WebExpr((1, 1))))
        assert eval_web(lhs) == identity.scale(GaussianRational(2))

    def test_square_switch_balanced_labels_vanish(self):
        for k in (1, 2):
            lhs, rhs = instantiate(TMAP["square-switch"], (k, k), BARE)
            assert rhs.is_zero()
            assert eval_web(lhs).is_zero()

    def test_square_switch_unbalanced(self):
        ok, _, lhs, _ = sides_agree("square-switch", (2, 1))
        assert ok
        identity = eval_web(as_combination(WebExpr((2, 1))))
        assert eval_web(lhs) == identity

    def test_two_dots_annihilate_a_two_strand(self):
        lhs, rhs = instantiate(TMAP["2-dots-zero"], (), BARE)
        assert rhs.is_zero()
        assert eval_web(lhs).is_zero()

    def test_dot_through_a_single_strand(self):
        for variant in ("left", "right"):
            lhs, rhs = instantiate(
                TMAP["dot-on-k-strand"], (1, variant), BARE)
            assert lhs == rhs

    def test_clasp_recursion_depth_three(self):
        ok, note, _, _ = sides_agree("clasp-recursion", (3,))
        assert ok, note

    def test_clasp_sum_two_strands(self):
        from fractions import Fraction
        lhs, rhs = instantiate(TMAP["clasp-sum"], (2,), BARE)
        ok, note = _sides_match(lhs, rhs)
        assert ok, note
        bump = WebExpr((1, 1), (WebLayer.merge(1), WebLayer.split(1, 1, 1)))
        assert lhs == as_combination(bump).scale(Fraction(1, 2))
        flat = as_combination(WebExpr((1, 1)))
        crossing = cross_combination(1, (1, 1))
        assert rhs == (flat + crossing).scale(Fraction(1, 2))

    def test_braid_relations(self):
        assert sides_agree("braid-1", ())[0]
        assert sides_agree("braid-2", ())[0]

    def test_reversed_double_rungs(self):
        for template_id in ("double-rungs-1", "double-rungs-2"):
            ok, note, _, _ = sides_agree(
                template_id, (1, 1, 1, "reversed"))
            assert ok, (template_id, note)

    def test_rotated_crossing_slide_swaps_boundaries(self):
        base_l, base_r = instantiate(
            TMAP["merges-past-crossings"], (1, 1, "base"), BARE)
        rot_l, rot_r = instantiate(
            TMAP["merges-past-crossings"], (1, 1, "rotated"), BARE)
        assert rot_l.domain == tuple(reversed(base_l.codomain))
        assert rot_l.codomain == tuple(reversed(base_l.domain))
        assert _sides_match(rot_l, rot_r)[0]

    def test_ambient_strands_do_not_disturb_identities(self):
        ctx = AmbientContext((2,), (1,))
        for template_id, params in [
            ("superinterchange", (1, 1)),
            ("dumbbell", ()),
            ("square-switch-dots", (1, 1, "left")),
            ("dots-past-crossings", ("enter-right",)),
        ]:
            ok, note, _, _ = sides_agree(template_id, params, ctx)
            assert ok, (template_id, note)


class TestThinDiagrams:
    def test_thin_clasp_is_idempotent(self):
        for k in (2, 3):
            obj = (1,) * k
            m = eval_web(_thin_clasp(1, k, obj))
            assert m.matmul(m) == m

    def test_perm_diagram_of_a_transposition(self):
        flip = next(p for p in all_permutations(2) if p.reduced_word())
        assert _perm_diagram(0, flip, (1, 1)) == cross_combination(1, (1, 1))

    def test_perm_diagram_respects_ambient_offset(self):
        flip = next(p for p in all_permutations(2) if p.reduced_word())
        obj = (3, 1, 1)
        assert _perm_diagram(1, flip, obj) == cross_combination(2, obj)


class TestVerifyAll:
    def test_smallest_sweep(self):
        report = verify_all(1)
        assert report.ok
        assert report.counts["dot-collision"] == 1
        assert report.counts["complete-explosion"] == 1
        assert "braid-1" not in report.counts

    def test_thickness_two_counts(self):
        report = verify_all(2)
        assert report.ok
        assert report.total == 266
        assert report.counts["dot-on-k-strand"] == 8
        assert report.counts["rung-collision"] == 92
        assert report.counts["braid-1"] == 1
        text = report.format()
        assert "266 instances, 0 failures" in text

    def test_template_filter(self):
        report = verify_all(3, template_ids={"digon"})
        assert set(report.counts) == {"digon"}
        assert report.ok

    def test_report_collects_failures(self):
        report = VerificationReport(2)
        report.record("digon", (1, 1), BARE, True, None)
        report.record("digon", (2, 1), BARE, False, "made up")
        assert not report.ok
        assert report.total == 2
        assert "FAIL digon" in report.format()

    def test_sides_match_flags_disagreement(self):
        identity = as_combination(WebExpr((1, 1)))
        ok, note = _sides_match(identity, identity.scale(2))
        assert not ok
        assert note

    def test_sides_match_zero_versus_nonzero(self):
        identity = as_combination(WebExpr((1,)))
        from qwebs.web import WebCombination
        ok, note = _sides_match(identity, WebCombination.zero())
        assert not ok
        doubled_dot = raw_web((2,), [("dot", 1), ("dot", 1)]) \
            - as_combination(WebExpr((2,))).scale(2)
        ok, _ = _sides_match(doubled_dot, WebCombination.zero())
        assert ok

"""Exhaustive verification of the local diagram identities.

Each identity is a template: a parameter range plus a builder producing
both sides as web combinations over a small local boundary.  Verification
surrounds every admissible instance with every strict ambient boundary up
to a thickness bound, evaluates both sides to exact matrices, and compares.
Degenerate labels (zero or negative strands arising from boundary
parameter values) are resolved by the zero-tolerant layer normalization
before evaluation.

Reflected and rung-reversed companion identities are generated from the
base templates programmatically: a left-right mirror of layer lists, an
upside-down flip, and a rung-direction swap.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .core import all_permutations, enumerate_compositions
from .evaluate import eval_web
from .web import (
    WebCombination,
    WebExpr,
    WebLayer,
    as_combination,
    compose,
    cross_combination,
    expand_crossing,
    raw_web,
)


class AmbientContext:
    """Identity strands placed left and right of a local diagram."""

    __slots__ = ("left", "right")

    def __init__(self, left=(), right=()):
        self.left = tuple(left)
        self.right = tuple(right)
        if any(x <= 0 for x in self.left + self.right):
            raise ValueError("ambient strands must be positive")

    @property
    def offset(self):
        return len(self.left)

    def full(self, local):
        return self.left + tuple(local) + self.right

    def key(self):
        return (self.left, self.right)

    def __eq__(self, other):
        return isinstance(other, AmbientContext) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "AmbientContext(left=%r, right=%r)" % (self.left, self.right)


class RelationTemplate:
    """A parameterized identity between two web combinations.

    ``params(budget)`` yields (params, local thickness) pairs admissible
    within the given total thickness; ``build(params, ctx)`` returns the
    two sides embedded in the ambient context.
    """

    __slots__ = ("id", "params", "build")

    def __init__(self, id, params, build):
        self.id = id
        self.params = params
        self.build = build

    def __repr__(self):
        return "RelationTemplate(%s)" % self.id


def instantiate(template, params, ctx):
    """Both sides of one instance, Remark-normalized, boundary-checked."""
    lhs, rhs = template.build(params, ctx)
    if not lhs.is_zero() and not rhs.is_zero():
        if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
            raise ValueError(
                "sides of %s%r disagree on boundary" % (template.id, params))
    return lhs, rhs


# ---------------------------------------------------------------------------
# raw-layer helpers: local terms, ambient embedding, symmetry transforms


def _shift_raws(raws, off):
    out = []
    for raw in raws:
        if raw[0] == "split":
            out.append(("split", raw[1] + off, raw[2]))
        else:
            out.append((raw[0], raw[1] + off))
    return out


def _side(ctx, local_domain, terms):
    """Sum of raw-layer terms over a shared local domain."""
    out = WebCombination.zero()
    domain = ctx.full(local_domain)
    for coeff, raws in terms:
        out = out + raw_web(domain, _shift_raws(raws, ctx.offset), coeff)
    return out


def mirror_raws(domain, raws):
    """Left-right reflection of a raw layer list over its domain."""
    cur = list(domain)
    out = []
    for raw in raws:
        m = len(cur)
        kind = raw[0]
        if kind == "merge":
            i = raw[1]
            out.append(("merge", m - i))
            cur[i - 1:i + 1] = [cur[i - 1] + cur[i]]
        elif kind == "split":
            i = raw[1]
            k, l = raw[2]
            out.append(("split", m + 1 - i, (l, k)))
            cur[i - 1:i] = [k, l]
        else:
            out.append(("dot", m + 1 - raw[1]))
    return tuple(reversed(tuple(domain))), out


def _mirror_terms(local_domain, terms):
    new_terms = []
    new_domain = None
    for coeff, raws in terms:
        new_domain, new_raws = mirror_raws(local_domain, raws)
        new_terms.append((coeff, new_raws))
    if new_domain is None:
        new_domain = tuple(reversed(tuple(local_domain)))
    return new_domain, new_terms


def mirror_expr(expr):
    """Left-right reflection of a strict web."""
    cur = list(expr.domain)
    out = []
    for layer in expr.layers:
        m = len(cur)
        if layer.kind == "merge":
            i = layer.pos
            out.append(WebLayer.merge(m - i))
            cur[i - 1:i + 1] = [cur[i - 1] + cur[i]]
        elif layer.kind == "split":
            i = layer.pos
            k, l = layer.parts
            out.append(WebLayer.split(m + 1 - i, l, k))
            cur[i - 1:i] = [k, l]
        else:
            out.append(WebLayer.dot(m + 1 - layer.pos))
    return WebExpr(tuple(reversed(expr.domain)), tuple(out))


def flip_expr(expr):
    """Upside-down reflection: merges become splits and vice versa."""
    objs = [expr.domain]
    for layer in expr.layers:
        objs.append(layer.apply_to(objs[-1]))
    out = []
    for layer, below in zip(reversed(expr.layers), reversed(objs[:-1])):
        if layer.kind == "merge":
            i = layer.pos
            out.append(WebLayer.split(i, below[i - 1], below[i]))
        elif layer.kind == "split":
            out.append(WebLayer.merge(layer.pos))
        else:
            out.append(layer)
    return WebExpr(objs[-1], tuple(out))


def _map_combination(fn, w):
    w = as_combination(w)
    out = WebCombination.zero()
    for expr, coeff in w.terms.items():
        out = out + WebCombination.from_expr(fn(expr), coeff)
    return out


def mirror_combination(w):
    return _map_combination(mirror_expr, w)


def rotate180_combination(w):
    return _map_combination(lambda e: mirror_expr(flip_expr(e)), w)


# ---------------------------------------------------------------------------
# ladder rungs
#
# A rung descriptor is (side, pos, carry, dotted): side "L" moves ``carry``
# boxes from strand pos+1 onto strand pos, side "R" the other way, and a
# dotted rung puts a dot on the carried strand between its split and
# merge.


def _rung_raws(obj, rung):
    side, p, j, dotted = rung
    x, y = obj[p - 1], obj[p]
    if side == "L":
        raws = [("split", p + 1, (j, y - j))]
        if dotted:
            raws.append(("dot", p + 1))
        raws.append(("merge", p))
        obj[p - 1], obj[p] = x + j, y - j
    else:
        raws = [("split", p, (x - j, j))]
        if dotted:
            raws.append(("dot", p + 1))
        raws.append(("merge", p + 1))
        obj[p - 1], obj[p] = x - j, y + j
    return raws


def _ladder_raws(local_domain, rungs):
    obj = list(local_domain)
    out = []
    for rung in rungs:
        out.extend(_rung_raws(obj, rung))
    return out


def reverse_rungs(rungs):
    return [("R" if side == "L" else "L", p, j, d)
            for side, p, j, d in rungs]


def _rung_terms(local_domain, signed_rungs, reverse=False, mirror=False):
    """Raw terms from (coeff, rung list) pairs, with optional symmetry.

    Rung reversal swaps every rung's direction; mirroring reflects the
    materialized layers left to right.
    """
    terms = []
    for coeff, rungs in signed_rungs:
        if reverse:
            rungs = reverse_rungs(rungs)
        terms.append((coeff, _ladder_raws(local_domain, rungs)))
    if mirror:
        return _mirror_terms(local_domain, terms)
    return tuple(local_domain), terms


# ---------------------------------------------------------------------------
# thin-boundary building blocks


def _explode_raws(i, size):
    return [("split", i + t, (1, size - 1 - t)) for t in range(size - 1)]


def _gather_raws(i, size):
    return [("merge", i)] * (size - 1)


def _thin_clasp(i, k, obj):
    """Symmetrizer on k adjacent 1-strands: gather, re-split, over k!."""
    layers = [WebLayer.merge(i)] * (k - 1)
    layers += [WebLayer.split(i + t, 1, k - 1 - t) for t in range(k - 1)]
    return WebCombination.from_expr(
        WebExpr(obj, tuple(layers)), Fraction(1, factorial(k)))


def _perm_diagram(off, perm, obj):
    """Crossing diagram of a permutation on the 1-strands after off."""
    out = as_combination(WebExpr(obj))
    for v in perm.reduced_word():
        out = compose(cross_combination(off + v, obj), out)
    return out


# ---------------------------------------------------------------------------
# parameter ranges


def _labels(count, budget, low):
    """All count-tuples of labels >= low with positive total <= budget."""
    if count == 0:
        yield ()
        return
    for first in range(low, budget + 1):
        for rest in _labels(count - 1, budget - first, low):
            yield (first,) + rest


def _positive_labels(count):
    def gen(budget):
        for tup in _labels(count, budget, 1):
            yield tup, sum(tup)
    return gen


def _nonneg_labels(count):
    def gen(budget):
        for tup in _labels(count, budget, 0):
            if sum(tup) >= 1:
                yield tup, sum(tup)
    return gen


def _fixed(local_thickness, choices=((),)):
    def gen(budget):
        if local_thickness <= budget:
            for tup in choices:
                yield tup, local_thickness
    return gen


def _with_variants(base_gen, variants):
    def gen(budget):
        for tup, t in base_gen(budget):
            for variant in variants:
                yield tup + (variant,), t
    return gen


# ---------------------------------------------------------------------------
# templates


def _build_superinterchange(params, ctx):
    k, l = params
    lhs = _side(ctx, (k, l), [(1, [("dot", 1), ("dot", 2)])])
    rhs = _side(ctx, (k, l), [(-1, [("dot", 2), ("dot", 1)])])
    return lhs, rhs


def _build_associativity_merge(params, ctx):
    h, k, l = params
    lhs = _side(ctx, (h, k, l), [(1, [("merge", 1), ("merge", 1)])])
    rhs = _side(ctx, (h, k, l), [(1, [("merge", 2), ("merge", 1)])])
    return lhs, rhs


def _build_associativity_split(params, ctx):
    h, k, l = params
    dom = (h + k + l,)
    lhs = _side(ctx, dom,
                [(1, [("split", 1, (h + k, l)), ("split", 1, (h, k))])])
    rhs = _side(ctx, dom,
                [(1, [("split", 1, (h, k + l)), ("split", 2, (k, l))])])
    return lhs, rhs


def _build_digon(params, ctx):
    k, l = params
    dom = (k + l,)
    lhs = _side(ctx, dom, [(1, [("split", 1, (k, l)), ("merge", 1)])])
    rhs = _side(ctx, dom, [(comb(k + l, l), [])])
    return lhs, rhs


def _build_dot_collision(params, ctx):
    (k,) = params
    lhs = _side(ctx, (k,), [(1, [("dot", 1), ("dot", 1)])])
    rhs = _side(ctx, (k,), [(k, [])])
    return lhs, rhs


def _build_dots_past_merges(params, ctx):
    k, variant = params
    shape, mirrored = variant.split("-")[0], variant.endswith("mirror")
    if shape == "merge":
        dom = (1, k)
        lhs_terms = [(1, [("merge", 1), ("dot", 1)])]
        rhs_terms = [(1, [("dot", 1), ("merge", 1)]),
                     (1, [("dot", 2), ("merge", 1)])]
    else:
        dom = (1 + k,)
        lhs_terms = [(1, [("dot", 1), ("split", 1, (1, k))])]
        rhs_terms = [(1, [("split", 1, (1, k)), ("dot", 1)]),
                     (1, [("split", 1, (1, k)), ("dot", 2)])]
    if mirrored:
        dom_l, lhs_terms = _mirror_terms(dom, lhs_terms)
        dom_r, rhs_terms = _mirror_terms(dom, rhs_terms)
        dom = dom_l
    return _side(ctx, dom, lhs_terms), _side(ctx, dom, rhs_terms)


def _build_dumbbell(params, ctx):
    bump = [("merge", 1), ("split", 1, (1, 1))]
    dotted = ([("dot", 2), ("dot", 1)] + bump + [("dot", 2), ("dot", 1)])
    lhs = _side(ctx, (1, 1), [(1, bump), (-1, dotted)])
    rhs = _side(ctx, (1, 1), [(2, [])])
    return lhs, rhs


_R1 = ("R", 1, 1, False)
_L1 = ("L", 1, 1, False)
_R1D = ("R", 1, 1, True)
_L1D = ("L", 1, 1, True)


def _build_square_switch(params, ctx):
    k, l = params
    dom, terms = _rung_terms((k, l), [(1, [_R1, _L1]), (-1, [_L1, _R1])])
    lhs = _side(ctx, dom, terms)
    rhs = _side(ctx, dom, [(k - l, [])])
    return lhs, rhs


def _build_square_switch_dots(params, ctx):
    k, l, variant = params
    if variant == "left":
        signed = [(1, [_R1, _L1D]), (-1, [_L1D, _R1])]
    else:
        signed = [(1, [_R1D, _L1]), (-1, [_L1, _R1D])]
    dom, terms = _rung_terms((k, l), signed)
    lhs = _side(ctx, dom, terms)
    rhs = _side(ctx, dom, [(1, [("dot", 1)]), (-1, [("dot", 2)])])
    return lhs, rhs


_L2 = ("L", 2, 1, False)
_L2D = ("L", 2, 1, True)


def _build_double_rungs_1(params, ctx):
    h, k, l, variant = params
    rev = variant == "reversed"
    # Reversing rung orientations swaps the commutator order on the left
    # side; the dotted anticommutator on the right is order-symmetric.
    sign = -1 if rev else 1
    dom, terms = _rung_terms(
        (h, k, l),
        [(sign, [_L2, _L1]), (-sign, [_L1, _L2])],
        reverse=rev)
    _, rhs_terms = _rung_terms(
        (h, k, l),
        [(1, [_L2D, _L1D]), (1, [_L1D, _L2D])],
        reverse=rev)
    return _side(ctx, dom, terms), _side(ctx, dom, rhs_terms)


def _build_double_rungs_2(params, ctx):
    h, k, l, variant = params
    rev = variant == "reversed"
    dom, lhs_terms = _rung_terms(
        (h, k, l),
        [(1, [_L2D, _L1]), (-1, [_L1, _L2D])],
        reverse=rev)
    _, rhs_terms = _rung_terms(
        (h, k, l),
        [(1, [_L2, _L1D]), (-1, [_L1D, _L2])],
        reverse=rev)
    return _side(ctx, dom, lhs_terms), _side(ctx, dom, rhs_terms)


def _build_complete_explosion(params, ctx):
    (k,) = params
    loop = _explode_raws(1, k) + _gather_raws(1, k)
    lhs = _side(ctx, (k,), [(1, [])])
    rhs = _side(ctx, (k,), [(Fraction(1, factorial(k)), loop)])
    return lhs, rhs


def _build_2_dots_zero(params, ctx):
    raws = [("split", 1, (1, 1)), ("dot", 2), ("dot", 1), ("merge", 1)]
    lhs = _side(ctx, (2,), [(1, raws)])
    return lhs, WebCombination.zero()


def _build_dot_on_k_strand(params, ctx):
    k, variant = params
    if variant == "left":
        raws = [("split", 1, (1, k - 1)), ("dot", 1), ("merge", 1)]
    else:
        raws = [("split", 1, (k - 1, 1)), ("dot", 2), ("merge", 1)]
    lhs = _side(ctx, (k,), [(1, raws)])
    rhs = _side(ctx, (k,), [(1, [("dot", 1)])])
    return lhs, rhs


def _build_rung_collision(params, ctx):
    k, l, s, t, variant = params
    rev = variant == "reversed"
    dom, lhs_terms = _rung_terms(
        (k, l),
        [(1, [("L", 1, s, False), ("L", 1, t, False)])],
        reverse=rev)
    _, rhs_terms = _rung_terms(
        (k, l),
        [(comb(s + t, s), [("L", 1, s + t, False)])],
        reverse=rev)
    return _side(ctx, dom, lhs_terms), _side(ctx, dom, rhs_terms)


def _build_square_switch_double_dots(params, ctx):
    k, l = params
    dom, terms = _rung_terms(
        (k, l), [(1, [_R1D, _L1D]), (1, [_L1D, _R1D])])
    lhs = _side(ctx, dom, terms)
    rhs = _side(ctx, dom, [(k + l, [])])
    return lhs, rhs


_L1X2 = ("L", 1, 2, False)


def _variant_flags(variant):
    return "reversed" in variant, "mirror" in variant


def _build_double_rungs_3(params, ctx):
    h, k, l, variant = params
    rev, mir = _variant_flags(variant)
    dom, terms = _rung_terms(
        (h, k, l),
        [(1, [_L2, _L1X2]),
         (-1, [_L1, _L2, _L1]),
         (1, [_L1X2, _L2])],
        reverse=rev, mirror=mir)
    return _side(ctx, dom, terms), WebCombination.zero()


def _build_double_rungs_4(params, ctx):
    h, k, l, variant = params
    rev, mir = _variant_flags(variant)
    dom, terms = _rung_terms(
        (h, k, l),
        [(1, [_L2, _L1, _L1D]),
         (-1, [_L1, _L2, _L1D]),
         (-1, [_L1D, _L2, _L1]),
         (1, [_L1D, _L1, _L2])],
        reverse=rev, mirror=mir)
    return _side(ctx, dom, terms), WebCombination.zero()


def _build_clasp_recursion(params, ctx):
    (k,) = params
    obj = ctx.full((1,) * k)
    i = ctx.offset + 1
    lhs = _thin_clasp(i, k, obj)
    cl = _thin_clasp(i, k - 1, obj)
    dumbbell = WebExpr(
        obj, (WebLayer.merge(i + k - 2), WebLayer.split(i + k - 2, 1, 1)))
    rhs = (compose(cl, compose(dumbbell, cl)).scale(Fraction(k - 1, k))
           - cl.scale(Fraction(k - 2, k)))
    return lhs, rhs


def _build_clasp_sum(params, ctx):
    (k,) = params
    obj = ctx.full((1,) * k)
    lhs = _thin_clasp(ctx.offset + 1, k, obj)
    rhs = WebCombination.zero()
    for perm in all_permutations(k):
        rhs = rhs + _perm_diagram(ctx.offset, perm, obj)
    return lhs, rhs.scale(Fraction(1, factorial(k)))


def _build_untangle_merge(params, ctx):
    k, perm = params
    obj = ctx.full((1,) * k)
    gather = WebExpr(obj, (WebLayer.merge(ctx.offset + 1),) * (k - 1))
    lhs = compose(gather, _perm_diagram(ctx.offset, perm, obj))
    return lhs, as_combination(gather)


def _build_untangle_split(params, ctx):
    k, perm = params
    obj = ctx.full((k,))
    i = ctx.offset + 1
    explode = WebExpr(
        obj, tuple(WebLayer.split(i + t, 1, k - 1 - t) for t in range(k - 1)))
    lhs = compose(_perm_diagram(ctx.offset, perm, explode.codomain), explode)
    return lhs, as_combination(explode)


def _build_merges_past_crossings(params, ctx):
    k, l, variant = params
    obj = ctx.full((k, l, 1))
    i = ctx.offset + 1
    merged = WebExpr(obj, (WebLayer.merge(i),))
    lhs = compose(expand_crossing(i, k + l, 1, merged.codomain), merged)
    step1 = expand_crossing(i + 1, l, 1, obj)
    step2 = expand_crossing(i, k, 1, step1.codomain)
    rhs = compose(WebExpr(step2.codomain, (WebLayer.merge(i + 1),)),
                  compose(step2, step1))
    if "rotated" in variant:
        lhs, rhs = rotate180_combination(lhs), rotate180_combination(rhs)
    if "mirror" in variant:
        lhs, rhs = mirror_combination(lhs), mirror_combination(rhs)
    return lhs, rhs


def _build_dots_past_crossings(params, ctx):
    (variant,) = params
    obj = ctx.full((1, 1))
    i = ctx.offset + 1
    crossing = cross_combination(i, obj)
    low = WebExpr(obj, (WebLayer.dot(i),))
    high = WebExpr(obj, (WebLayer.dot(i + 1),))
    if variant == "enter-left":
        return compose(crossing, low), compose(high, crossing)
    return compose(crossing, high), compose(low, crossing)


def _build_braid_1(params, ctx):
    obj = ctx.full((1, 1))
    crossing = cross_combination(ctx.offset + 1, obj)
    return compose(crossing, crossing), as_combination(WebExpr(obj))


def _build_braid_2(params, ctx):
    obj = ctx.full((1, 1, 1))
    a = cross_combination(ctx.offset + 1, obj)
    b = cross_combination(ctx.offset + 2, obj)
    return compose(a, compose(b, a)), compose(b, compose(a, b))


def _perm_params(gen):
    def params(budget):
        for (k,), t in gen(budget):
            for perm in all_permutations(k):
                yield (k, perm), t
    return params


def _dots_past_merges_widths(budget):
    for k in range(1, budget):
        yield (k,), k + 1


def _rung_collision_params(budget):
    for (k, l), t in _nonneg_labels(2)(budget):
        for s in range(l + 2):
            for u in range(l + 2 - s):
                for variant in ("base", "reversed"):
                    yield (k, l, s, u, variant), t


TEMPLATES = [
    RelationTemplate("superinterchange", _positive_labels(2),
                     _build_superinterchange),
    RelationTemplate("associativity-merge", _positive_labels(3),
                     _build_associativity_merge),
    RelationTemplate("associativity-split", _positive_labels(3),
                     _build_associativity_split),
    RelationTemplate("digon", _positive_labels(2), _build_digon),
    RelationTemplate("dot-collision", _positive_labels(1),
                     _build_dot_collision),
    RelationTemplate(
        "dots-past-merges",
        _with_variants(_dots_past_merges_widths,
                       ("merge", "split", "merge-mirror", "split-mirror")),
        _build_dots_past_merges),
    RelationTemplate("dumbbell", _fixed(2), _build_dumbbell),
    RelationTemplate("square-switch", _positive_labels(2),
                     _build_square_switch),
    RelationTemplate(
        "square-switch-dots",
        _with_variants(_positive_labels(2), ("left", "right")),
        _build_square_switch_dots),
    RelationTemplate(
        "double-rungs-1",
        _with_variants(_positive_labels(3), ("base", "reversed")),
        _build_double_rungs_1),
    RelationTemplate(
        "double-rungs-2",
        _with_variants(_positive_labels(3), ("base", "reversed")),
        _build_double_rungs_2),
    RelationTemplate("complete-explosion", _positive_labels(1),
                     _build_complete_explosion),
    RelationTemplate("2-dots-zero", _fixed(2), _build_2_dots_zero),
    RelationTemplate(
        "dot-on-k-strand",
        _with_variants(_positive_labels(1), ("left", "right")),
        _build_dot_on_k_strand),
    RelationTemplate("rung-collision", _rung_collision_params,
                     _build_rung_collision),
    RelationTemplate("square-switch-double-dots", _nonneg_labels(2),
                     _build_square_switch_double_dots),
    RelationTemplate(
        "double-rungs-3",
        _with_variants(_nonneg_labels(3),
                       ("base", "reversed", "mirror", "reversed-mirror")),
        _build_double_rungs_3),
    RelationTemplate(
        "double-rungs-4",
        _with_variants(_nonneg_labels(3),
                       ("base", "reversed", "mirror", "reversed-mirror")),
        _build_double_rungs_4),
    RelationTemplate(
        "clasp-recursion",
        lambda budget: (((k,), k) for k in range(2, budget + 1)),
        _build_clasp_recursion),
    RelationTemplate("clasp-sum", _positive_labels(1), _build_clasp_sum),
    RelationTemplate("untangle-merge", _perm_params(_positive_labels(1)),
                     _build_untangle_merge),
    RelationTemplate("untangle-split", _perm_params(_positive_labels(1)),
                     _build_untangle_split),
    RelationTemplate(
        "merges-past-crossings",
        _with_variants(
            lambda budget: (((k, l), k + l + 1)
                            for (k, l), _ in _positive_labels(2)(budget - 1)),
            ("base", "rotated", "base-mirror", "rotated-mirror")),
        _build_merges_past_crossings),
    RelationTemplate(
        "dots-past-crossings",
        _with_variants(_fixed(2), ("enter-left", "enter-right")),
        _build_dots_past_crossings),
    RelationTemplate("braid-1", _fixed(2), _build_braid_1),
    RelationTemplate("braid-2", _fixed(3), _build_braid_2),
]


# ---------------------------------------------------------------------------
# verification sweep


def _strict_compositions(n):
    if n == 0:
        return [()]
    return enumerate_compositions(1, n, mode="strict")


def ambient_contexts(residual):
    out = []
    for a in range(residual + 1):
        for left in _strict_compositions(a):
            for right in _strict_compositions(residual - a):
                out.append(AmbientContext(left, right))
    return out


def _sides_match(lhs, rhs):
    lz, rz = lhs.is_zero(), rhs.is_zero()
    if lz and rz:
        return True, None
    if lz or rz:
        nonzero = rhs if lz else lhs
        if eval_web(nonzero).is_zero():
            return True, None
        return False, "one side is the zero combination, the other is not"
    if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
        return False, "boundary mismatch %r -> %r vs %r -> %r" % (
            lhs.domain, lhs.codomain, rhs.domain, rhs.codomain)
    if eval_web(lhs) == eval_web(rhs):
        return True, None
    return False, "evaluations differ on %r -> %r" % (lhs.domain, lhs.codomain)


class VerificationReport:
    """Instance counts per identity, plus any failing witnesses."""

    __slots__ = ("bound", "counts", "failures")

    def __init__(self, bound):
        self.bound = bound
        self.counts = {}
        self.failures = []

    def record(self, template_id, params, ctx, ok, note):
        self.counts[template_id] = self.counts.get(template_id, 0) + 1
        if not ok:
            self.failures.append((template_id, params, ctx, note))

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def ok(self):
        return not self.failures

    def format(self):
        lines = ["local identity check, total thickness <= %d" % self.bound]
        for template_id in sorted(self.counts):
            lines.append("  %-28s %5d instances"
                         % (template_id, self.counts[template_id]))
        lines.append("total %d instances, %d failures"
                     % (self.total, len(self.failures)))
        for template_id, params, ctx, note in self.failures:
            lines.append("  FAIL %s %r %r: %s"
                         % (template_id, params, ctx, note))
        return "\n".join(lines)


def verify_all(r=4, template_ids=None):
    """Check every template instance at every total thickness up to r."""
    report = VerificationReport(r)
    for template in TEMPLATES:
        if template_ids is not None and template.id not in template_ids:
            continue
        for total in range(1, r + 1):
            for params, thickness in template.params(total):
                for ctx in ambient_contexts(total - thickness):
                    lhs, rhs = instantiate(template, params, ctx)
                    ok, note = _sides_match(lhs, rhs)
                    report.record(template.id, params, ctx, ok, note)
    return report

"""Layered strand diagrams and the derived constructions on them.

A web is a vertical stack of generator layers (merges, splits, dots)
over a tuple of positive strand labels summing to a fixed total; stacks
compose by concatenation when their boundaries agree.  Crossings and
symmetrizer boxes are not primitive: helpers here expand them into
combinations of plain webs.  Diagrams for basis words of the finite
Clifford-symmetric algebra, and the widening/flattening moves between
thick and all-thin boundaries, are built on top.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .core import (
    GaussianRational,
    ONE,
    Permutation,
    drop_trailing_zeros,
)
from .sergeev import SergeevBasisWord


class WebLayer:
    """One generator: merge(i), split(i, k, l) or dot(j)."""

    __slots__ = ("kind", "pos", "parts")

    def __init__(self, kind, pos, parts=None):
        self.kind = kind
        self.pos = pos
        self.parts = parts

    @classmethod
    def merge(cls, i):
        return cls("merge", i)

    @classmethod
    def split(cls, i, k, l):
        if k <= 0 or l <= 0:
            raise ValueError("split parts must be positive")
        return cls("split", i, (k, l))

    @classmethod
    def dot(cls, j):
        return cls("dot", j)

    @property
    def parity(self):
        return 1 if self.kind == "dot" else 0

    def apply_to(self, obj):
        """Target object of this layer when drawn over ``obj``."""
        m = len(obj)
        if self.kind == "merge":
            i = self.pos
            if not 1 <= i <= m - 1:
                raise ValueError("merge position %d out of range" % i)
            return obj[:i - 1] + (obj[i - 1] + obj[i],) + obj[i + 1:]
        if self.kind == "split":
            i = self.pos
            k, l = self.parts
            if not 1 <= i <= m:
                raise ValueError("split position %d out of range" % i)
            if obj[i - 1] != k + l:
                raise ValueError(
                    "split (%d,%d) does not add up to label %d"
                    % (k, l, obj[i - 1]))
            return obj[:i - 1] + (k, l) + obj[i:]
        j = self.pos
        if not 1 <= j <= m:
            raise ValueError("dot position %d out of range" % j)
        return obj

    def key(self):
        return (self.kind, self.pos, self.parts)

    def __eq__(self, other):
        return isinstance(other, WebLayer) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def text(self):
        if self.kind == "merge":
            return "merge@%d" % self.pos
        if self.kind == "split":
            return "split@%d(%d,%d)" % (self.pos, *self.parts)
        return "dot@%d" % self.pos

    def __repr__(self):
        return "WebLayer(%s)" % self.text()


class WebExpr:
    """A single diagram: domain object plus layers, bottom to top."""

    __slots__ = ("domain", "layers", "codomain", "_hash")

    def __init__(self, domain, layers=()):
        domain = tuple(domain)
        if not domain or any(
                not isinstance(x, int) or x <= 0 for x in domain):
            raise ValueError("labels must be positive integers")
        obj = domain
        for layer in layers:
            obj = layer.apply_to(obj)
        self.domain = domain
        self.layers = tuple(layers)
        self.codomain = obj
        self._hash = hash((domain, tuple(l.key() for l in self.layers)))

    @property
    def parity(self):
        return sum(l.parity for l in self.layers) % 2

    @property
    def thickness(self):
        return sum(self.domain)

    def stack(self, layer):
        return WebExpr(self.domain, self.layers + (layer,))

    def __eq__(self, other):
        return (isinstance(other, WebExpr)
                and self.domain == other.domain
                and self.layers == other.layers)

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (len(self.layers), tuple(l.key() for l in self.layers))

    def text(self):
        head = "object %s" % ",".join(str(x) for x in self.domain)
        return "\n".join([head] + [l.text() for l in self.layers])

    def __repr__(self):
        return "WebExpr(%r -> %r, %d layers)" % (
            self.domain, self.codomain, len(self.layers))


def identity_web(obj):
    return WebExpr(obj)


class WebCombination:
    """Linear combination of diagrams with common boundary.

    The empty combination is the zero morphism; its recorded boundary
    (possibly None) is advisory only and ignored by equality.
    """

    __slots__ = ("domain", "codomain", "terms")

    def __init__(self, domain, codomain, terms=None):
        self.domain = domain
        self.codomain = codomain
        clean = {}
        if terms:
            for expr, coeff in terms.items():
                if not coeff:
                    continue
                if expr.domain != domain or expr.codomain != codomain:
                    raise ValueError("boundary mismatch in combination")
                clean[expr] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, domain=None, codomain=None):
        return cls(domain, codomain)

    @classmethod
    def from_expr(cls, expr, coeff=ONE):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        return cls(expr.domain, expr.codomain, {expr: coeff})

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    @property
    def parity(self):
        """0 or 1 when homogeneous, None otherwise (or when zero)."""
        parities = {expr.parity for expr in self.terms}
        if len(parities) == 1:
            return parities.pop()
        return None

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if (self.domain != other.domain
                or self.codomain != other.codomain):
            raise ValueError("cannot add combinations across boundaries")
        terms = dict(self.terms)
        for expr, coeff in other.terms.items():
            c = terms.get(expr, 0) + coeff
            if c:
                terms[expr] = c
            elif expr in terms:
                del terms[expr]
        return WebCombination(self.domain, self.codomain, terms)

    def scale(self, scalar):
        if not isinstance(scalar, GaussianRational):
            scalar = GaussianRational(scalar)
        if not scalar:
            return WebCombination.zero(self.domain, self.codomain)
        return WebCombination(
            self.domain, self.codomain,
            {e: c * scalar for e, c in self.terms.items()})

    def __neg__(self):
        return self.scale(GaussianRational(-1))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, WebCombination):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return "WebCombination(%r -> %r, %d terms)" % (
            self.domain, self.codomain, len(self.terms))


def as_combination(w):
    if isinstance(w, WebExpr):
        return WebCombination.from_expr(w)
    return w


def compose(upper, lower):
    """Stack ``upper`` on top of ``lower``; boundary mismatch gives zero."""
    upper = as_combination(upper)
    lower = as_combination(lower)
    out = WebCombination.zero(lower.domain, upper.codomain)
    for le, lc in lower.terms.items():
        for ue, uc in upper.terms.items():
            if le.codomain != ue.domain:
                continue
            expr = WebExpr(le.domain, le.layers + ue.layers)
            out = out + WebCombination.from_expr(expr, lc * uc)
    return out


def compose_all(factors):
    """Compose top-to-bottom: factors[0] ends up topmost."""
    out = factors[-1]
    for w in reversed(factors[:-1]):
        out = compose(w, out)
    return out


# ---------------------------------------------------------------------------
# crossings and clasps


def cross_combination(i, obj):
    """Crossing of the 1-strands at positions i, i+1."""
    obj = tuple(obj)
    if obj[i - 1] != 1 or obj[i] != 1:
        raise ValueError("crossing needs 1-strands at %d, %d" % (i, i + 1))
    bump = WebExpr(obj, (WebLayer.merge(i), WebLayer.split(i, 1, 1)))
    flat = WebExpr(obj)
    return (WebCombination.from_expr(bump)
            + WebCombination.from_expr(flat, GaussianRational(-1)))


def _explode_layers(pos, size):
    """Peel a size-labeled strand at pos into 1-strands, left to right."""
    return [WebLayer.split(pos + t, 1, size - 1 - t)
            for t in range(size - 1)]


def _gather_layers(pos, size):
    """Merge ``size`` 1-strands starting at pos back into one strand."""
    return [WebLayer.merge(pos)] * (size - 1)


def expand_crossing(i, k, l, obj):
    """Crossing of the k- and l-strands at positions i, i+1.

    Both strands are fully exploded, the thin strands cross pairwise,
    and the bundles are gathered on the far side, all scaled by
    1/(k! l!).
    """
    obj = tuple(obj)
    if obj[i - 1] != k or obj[i] != l:
        raise ValueError("labels at %d, %d are not (%d, %d)" % (i, i + 1, k, l))
    if k == 1 and l == 1:
        return cross_combination(i, obj)
    pre = _explode_layers(i, k) + _explode_layers(i + k, l)
    mid = obj[:i - 1] + (1,) * (k + l) + obj[i + 1:]
    comb = WebCombination.from_expr(WebExpr(obj, tuple(pre)))
    block = Permutation(tuple(range(k + 1, k + l + 1))
                        + tuple(range(1, k + 1)))
    for v in block.reduced_word():
        comb = compose(cross_combination(i - 1 + v, mid), comb)
    post = tuple(_gather_layers(i, l) + _gather_layers(i + 1, k))
    out = WebCombination.zero(obj, None)
    for expr, coeff in comb.terms.items():
        out = out + WebCombination.from_expr(
            WebExpr(expr.domain, expr.layers + post), coeff)
    scalar = GaussianRational(Fraction(1, factorial(k) * factorial(l)))
    return out.scale(scalar)


def expand_clasp(i, k, obj):
    """Symmetrizer on the k-strand at position i: full explode and
    regather, scaled by 1/k!."""
    obj = tuple(obj)
    if obj[i - 1] != k:
        raise ValueError("label at %d is not %d" % (i, k))
    layers = tuple(_explode_layers(i, k)) + tuple(_gather_layers(i, k))
    expr = WebExpr(obj, layers)
    return WebCombination.from_expr(
        expr, GaussianRational(Fraction(1, factorial(k))))


# ---------------------------------------------------------------------------
# diagrams of basis words on all-thin boundaries


def sergeev_diagram(word, r):
    """Diagram of one basis word: crossings from the reduced word read
    bottom-up, then dots on the primed strands from right to left."""
    obj = (1,) * r
    comb = WebCombination.from_expr(identity_web(obj))
    for v in word.perm.reduced_word():
        comb = compose(cross_combination(v, obj), comb)
    for j in sorted(word.prime_indices(), reverse=True):
        comb = compose(WebExpr(obj, (WebLayer.dot(j),)), comb)
    return comb


def web_of_word(x, r=None):
    """Linear extension of sergeev_diagram to whole elements."""
    if isinstance(x, SergeevBasisWord):
        return sergeev_diagram(x, x.perm.degree if r is None else r)
    out = WebCombination.zero((1,) * x.r, (1,) * x.r)
    for word, coeff in x.terms.items():
        out = out + sergeev_diagram(word, x.r).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# moving between thick and thin boundaries


def merge_all_layers(groups):
    """From all 1-strands to ``groups``: gather each group in turn."""
    layers = []
    for g, size in enumerate(groups, start=1):
        layers.extend([WebLayer.merge(g)] * (size - 1))
    return layers


def split_all_layers(groups):
    """From ``groups`` to all 1-strands."""
    layers = []
    offset = 0
    for size in groups:
        layers.extend(_explode_layers(offset + 1, size))
        offset += size
    return layers


def flatten_web(w):
    """Conjugate down to all-thin boundaries: gather the bottom groups
    below, explode the top groups above."""
    w = as_combination(w)
    bottom, top = w.domain, w.codomain
    r = sum(bottom)
    below = WebExpr((1,) * r, tuple(merge_all_layers(bottom)))
    above = WebExpr(top, tuple(split_all_layers(top)))
    return compose(above, compose(w, below))


def thicken_web(u, bottom, top):
    """Wrap an all-thin diagram: explode ``bottom`` below it, gather
    ``top`` above it."""
    u = as_combination(u)
    bottom = tuple(bottom)
    top = tuple(top)
    below = WebExpr(bottom, tuple(split_all_layers(bottom)))
    above = WebExpr((1,) * sum(top), tuple(merge_all_layers(top)))
    return compose(above, compose(u, below))


# ---------------------------------------------------------------------------
# the diagram attached to a two-shape tabloid


def tabloid_word(T, lam, mu):
    """Basis word routing row entries (bottom) to letter groups (top).

    Entries are read row by row in canonical order; the entry at global
    bottom position p goes to the leftmost unused top slot of its
    letter's group, and primed entries put a dot on their top strand.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    shape = drop_trailing_zeros(lam)
    if T.shape != shape:
        raise ValueError("tabloid shape %r does not match %r"
                         % (T.shape, shape))
    if drop_trailing_zeros(T.content()) != drop_trailing_zeros(mu):
        raise ValueError("tabloid content does not match %r" % (mu,))
    r = T.size
    offsets = [0]
    for part in mu:
        offsets.append(offsets[-1] + part)
    used = [0] * len(mu)
    to_top = [0] * r
    primed_tops = []
    p = 0
    for row in T.rows:
        for e in row:
            d = abs(e)
            q = offsets[d - 1] + used[d - 1] + 1
            used[d - 1] += 1
            to_top[p] = q
            if e < 0:
                primed_tops.append(q)
            p += 1
    sigma = Permutation(to_top)
    mask = 0
    for q in primed_tops:
        mask |= 1 << (q - 1)
    return SergeevBasisWord(mask, sigma.inverse())


def tabloid_web(T, lam, mu):
    """(routing word, thick diagram) for a tabloid with row shape from
    lam and letter content mu."""
    word = tabloid_word(T, lam, mu)
    thin = sergeev_diagram(word, T.size)
    return word, thicken_web(
        thin, drop_trailing_zeros(lam), drop_trailing_zeros(mu))


# ---------------------------------------------------------------------------
# zero-tolerant layer lists
#
# Some constructions are most natural with strand labels that may be
# zero: a 0-strand without dots is erased, a dotted 0-strand kills the
# web, and any negative label kills the web.


def normalize_layers(domain, raw_layers):
    """Strip zero labels from a raw layer list.

    Raw layers are tuples ("merge", i), ("split", i, (k, l)), ("dot", j)
    indexed against the raw object.  Returns (strict domain, WebLayer
    tuple), or None when the web is zero.
    """
    cur = list(domain)
    if any(x < 0 for x in cur):
        return None

    def strict_pos(i):
        return sum(1 for x in cur[:i - 1] if x > 0) + 1

    out = []
    for raw in raw_layers:
        kind = raw[0]
        if kind == "merge":
            i = raw[1]
            a, b = cur[i - 1], cur[i]
            if a > 0 and b > 0:
                out.append(WebLayer.merge(strict_pos(i)))
            cur[i - 1:i + 1] = [a + b]
        elif kind == "split":
            i = raw[1]
            k, l = raw[2]
            if k < 0 or l < 0:
                return None
            if cur[i - 1] != k + l:
                raise ValueError("split parts do not match label")
            if k > 0 and l > 0:
                out.append(WebLayer.split(strict_pos(i), k, l))
            cur[i - 1:i] = [k, l]
        elif kind == "dot":
            j = raw[1]
            if cur[j - 1] == 0:
                return None
            out.append(WebLayer.dot(strict_pos(j)))
        else:
            raise ValueError("unknown raw layer %r" % (raw,))
    strict_domain = tuple(x for x in domain if x > 0)
    return strict_domain, tuple(out)


def raw_web(domain, raw_layers, coeff=ONE):
    """WebCombination of a zero-tolerant layer list (possibly zero)."""
    normalized = normalize_layers(domain, raw_layers)
    if normalized is None:
        return WebCombination.zero()
    strict_domain, layers = normalized
    return WebCombination.from_expr(
        WebExpr(strict_domain, layers), coeff)


# ---------------------------------------------------------------------------
# ladder webs of the weight-graded generators


def ladder_web(gen, lam):
    """Diagram of one weight-graded generator over the weight lam.

    Tags follow the operator module: ("1", lam) identity, ("e", i) and
    ("f", i) one-box rungs leftward/rightward, ("eb", i)/("fb", i) the
    same rungs dotted, ("hb", j) a dot on strand j.  Zero weights are
    handled by normalize_layers, so the result may be the zero
    combination.
    """
    tag = gen[0]
    if tag == "1":
        mu = tuple(gen[1])
        if lam is not None and tuple(lam) != mu:
            return WebCombination.zero()
        normalized = normalize_layers(mu, ())
        if normalized is None:
            return WebCombination.zero()
        return WebCombination.from_expr(WebExpr(normalized[0]))
    lam = tuple(lam)
    idx = gen[1]
    if tag == "hb":
        raws = [("dot", idx)]
    elif tag in ("e", "eb"):
        raws = [("split", idx + 1, (1, lam[idx] - 1))]
        if tag == "eb":
            raws.append(("dot", idx + 1))
        raws.append(("merge", idx))
    elif tag in ("f", "fb"):
        raws = [("split", idx, (lam[idx - 1] - 1, 1))]
        if tag == "fb":
            raws.append(("dot", idx + 1))
        raws.append(("merge", idx + 1))
    else:
        raise ValueError("unknown generator %r" % (gen,))
    return raw_web(lam, raws)

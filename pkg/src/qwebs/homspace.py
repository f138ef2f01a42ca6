"""Morphism spaces between permutation supermodules.

The space of supermodule maps M^a -> M^b has a diagrammatic basis: one
routing web per two-shape tabloid whose rows repeat no primed letter.
This module enumerates those tabloids, builds their webs and matrices,
measures the span by exact elimination, and cross-checks the dimension
with an oracle that knows nothing about webs: it solves the
supercommutation equations directly on the tabloid bases.
"""

from __future__ import annotations

from .core import GaussianRational, drop_trailing_zeros, enumerate_tabloids
from .evaluate import eval_thickened
from .permod import module_basis
from .web import tabloid_web

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def star_condition(T):
    """No letter occurs primed more than once in any row."""
    for row in T.rows:
        seen = set()
        for e in row:
            if e < 0:
                if -e in seen:
                    return False
                seen.add(-e)
    return True


def enumerate_Tstar(lam, mu):
    """Row shapes from lam, letter counts from mu, star filter applied."""
    lam = drop_trailing_zeros(lam)
    mu = drop_trailing_zeros(mu)
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ")
    return [T for T in enumerate_tabloids(lam, mu) if star_condition(T)]


class HomBasis:
    """The routing-web basis of Hom(M^lam, M^mu)."""

    __slots__ = ("lam", "mu", "items")

    def __init__(self, lam, mu, items):
        self.lam = lam
        self.mu = mu
        self.items = items

    @property
    def dimension(self):
        return len(self.items)

    def matrices(self):
        return [matrix for _, _, matrix in self.items]

    def __repr__(self):
        return "HomBasis(%r -> %r, %d items)" % (
            self.lam, self.mu, self.dimension)


def hom_basis(lam, mu, verify_rank=False):
    """Build (tabloid, web, matrix) for every star tabloid.

    Matrices come from the factored evaluator, which agrees with full
    expansion of the web.  With verify_rank the span is checked to have
    full rank; a deficiency raises, since it would mean the maps are not
    independent.
    """
    lam = drop_trailing_zeros(lam)
    mu = drop_trailing_zeros(mu)
    items = []
    for T in enumerate_Tstar(lam, mu):
        word, web = tabloid_web(T, lam, mu)
        items.append((T, web, eval_thickened(word, lam, mu)))
    basis = HomBasis(lam, mu, items)
    if verify_rank:
        rank = rank_of_family(basis.matrices())
        if rank != len(items):
            raise RuntimeError(
                "rank %d < %d routing maps for %r -> %r"
                % (rank, len(items), lam, mu))
    return basis


def rank_of_family(ms):
    """Rank of a list of matrices, flattened to sparse vectors.

    Exact Gaussian elimination; pivot rows are kept normalized so each
    reduction is a single scaled subtraction.
    """
    pivots = {}
    rank = 0
    for M in ms:
        row = {}
        for j, col in M.cols.items():
            for i, c in col.items():
                row[(j, i)] = c
        while row:
            key = min(row)
            pivot = pivots.get(key)
            if pivot is None:
                inv = row[key].inverse()
                pivots[key] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
            factor = row[key]
            for k, v in pivot.items():
                s = row.get(k, ZERO) - factor * v
                if s:
                    row[k] = s
                elif k in row:
                    del row[k]
    return rank


# ---------------------------------------------------------------------------
# the web-free dimension oracle
#
# A supermodule map is a matrix X with X A_g = +/- B_g X over the strand
# generators g, the sign showing up only against the odd generators when
# X itself is odd.  Every A_g and B_g permutes the tabloid basis up to a
# unit scalar, so each equation just ties two entries of X together with
# a fixed ratio.  The solution space then counts connected components of
# the entry graph: one dimension per component whose ratio constraints
# close up consistently.


def _monomial_action(kind, idx, basis, index):
    """pos -> (image pos, unit coefficient) for one generator."""
    out = []
    for T in basis:
        if kind == "s":
            sign = (-1 if T.letter_parity(idx) and T.letter_parity(idx + 1)
                    else 1)
            U = T.swap(idx)
            coeff = GaussianRational(sign)
        else:
            prefix = sum(T.letter_parity(h) for h in range(1, idx + 1)) % 2
            U = T.toggle(idx)
            coeff = GaussianRational(0, -1 if prefix else 1)
        out.append((index[U], coeff))
    return out


class _RatioComponents:
    """Union-find whose edges carry multiplicative ratios."""

    def __init__(self):
        self.parent = {}
        self.ratio = {}
        self.dead = set()

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.ratio[x] = ONE

    def find(self, x):
        root = x
        acc = ONE
        while self.parent[root] != root:
            acc = acc * self.ratio[root]
            root = self.parent[root]
        # compress the path, keeping each ratio relative to the root
        node = x
        carried = acc
        while self.parent[node] != root:
            nxt = self.parent[node]
            nxt_ratio = self.ratio[node]
            self.parent[node] = root
            self.ratio[node] = carried
            carried = carried / nxt_ratio
            node = nxt
        return root, acc

    def relate(self, a, b, gamma):
        """Impose value(b) = gamma * value(a)."""
        ra, wa = self.find(a)
        rb, wb = self.find(b)
        if ra == rb:
            if wb != gamma * wa:
                self.dead.add(ra)
            return
        # value(rb) = value(b)/wb = gamma*wa/wb * value(ra)
        self.parent[rb] = ra
        self.ratio[rb] = gamma * wa / wb
        if rb in self.dead:
            self.dead.discard(rb)
            self.dead.add(ra)

    def alive_components(self):
        roots = set()
        for x in self.parent:
            root, _ = self.find(x)
            if root not in self.dead:
                roots.add(root)
        return len(roots)


def hom_dim_oracle(lam, mu):
    """(even, odd) dimensions of the supermodule maps M^lam -> M^mu.

    Solves the supercommutation equations exactly, one parity block at a
    time, without reference to any web.
    """
    lam = drop_trailing_zeros(lam)
    mu = drop_trailing_zeros(mu)
    r = sum(lam)
    if r != sum(mu):
        raise ValueError("sizes differ")
    dom = module_basis(lam)
    cod = module_basis(mu)
    dom_index = {T: j for j, T in enumerate(dom)}
    cod_index = {T: i for i, T in enumerate(cod)}
    gens = []
    for i in range(1, r):
        gens.append(("s", _monomial_action("s", i, dom, dom_index),
                     _monomial_action("s", i, cod, cod_index)))
    for j in range(1, r + 1):
        gens.append(("c", _monomial_action("c", j, dom, dom_index),
                     _monomial_action("c", j, cod, cod_index)))
    dom_parity = [T.parity for T in dom]
    cod_parity = [T.parity for T in cod]

    dims = []
    for block in (0, 1):
        eps = GaussianRational(1 if block == 0 else -1)
        comp = _RatioComponents()
        cells = [(i, j)
                 for j in range(len(dom)) for i in range(len(cod))
                 if (dom_parity[j] + cod_parity[i]) % 2 == block]
        for cell in cells:
            comp.add(cell)
        for kind, a_map, b_map in gens:
            scale = eps if kind == "c" else ONE
            for i, j in cells:
                j2, alpha = a_map[j]
                i2, beta = b_map[i]
                comp.relate((i, j), (i2, j2), scale * beta / alpha)
        dims.append(comp.alive_components())
    return tuple(dims)

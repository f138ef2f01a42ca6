"""Exact arithmetic in the Sergeev superalgebra on its standard basis.

A standard basis word is c_1^{a_1} ... c_r^{a_r} w with every a_i in
{0, 1} and w a permutation; the prime exponents live in a bitmask (bit
j-1 set iff c_j occurs).  The stored permutation is oriented so that the
word relabels module letters through its inverse image map: a word acts
by running the reduced word of the stored permutation left to right and
then the surviving c's from the highest index down.  With that
orientation products satisfy act(x*y) = act(x) o act(y); the module
action tests enforce it.
"""

from __future__ import annotations

from itertools import permutations as _perms
from itertools import product as _product

from .core import GaussianRational, ONE, Permutation, compose


class SergeevBasisWord:

    __slots__ = ("primes", "perm")

    def __init__(self, primes, perm):
        r = perm.degree
        if not 0 <= primes < (1 << r):
            raise ValueError("prime mask out of range for degree %d" % r)
        self.primes = primes
        self.perm = perm

    @classmethod
    def identity(cls, r):
        return cls(0, Permutation.identity(r))

    @classmethod
    def s(cls, i, r):
        return cls(0, Permutation.adjacent(i, r))

    @classmethod
    def c(cls, j, r):
        if not 1 <= j <= r:
            raise ValueError("c index out of range")
        return cls(1 << (j - 1), Permutation.identity(r))

    @property
    def degree(self):
        return self.perm.degree

    @property
    def parity(self):
        return bin(self.primes).count("1") % 2

    def prime_indices(self):
        """Ascending indices j with c_j present."""
        return tuple(
            j for j in range(1, self.degree + 1)
            if self.primes >> (j - 1) & 1
        )

    def __eq__(self, other):
        return (isinstance(other, SergeevBasisWord)
                and self.primes == other.primes
                and self.perm == other.perm)

    def __hash__(self):
        return hash((self.primes, self.perm.images))

    def __repr__(self):
        return "SergeevBasisWord(%d, %r)" % (self.primes, self.perm)

    def __str__(self):
        return word_to_text(self)


def clifford_normalize(indices):
    """Normalize a product of c's to (sign, surviving index mask).

    Each swap of distinct neighbours contributes -1; adjacent equal
    indices cancel in pairs without a sign.
    """
    sign = 1
    mask = 0
    for j in indices:
        bit = 1 << (j - 1)
        if bin(mask >> j).count("1") % 2:
            sign = -sign
        mask ^= bit
    return sign, mask


def word_multiply(x, y):
    """Product of standard basis words as (sign, word).

    The c-part of y is pulled through x's permutation, relabelling each
    index by the letter map (the inverse of the stored images); the
    permutation parts compose "x then y".
    """
    if x.degree != y.degree:
        raise ValueError("degree mismatch")
    relabel = x.perm.inverse()
    indices = list(x.prime_indices())
    indices.extend(relabel(j) for j in y.prime_indices())
    sign, mask = clifford_normalize(indices)
    return sign, SergeevBasisWord(mask, compose(x.perm, y.perm))


class SergeevElement:
    """Linear combination of standard basis words over Q(i)."""

    __slots__ = ("r", "terms")

    def __init__(self, r, terms=None):
        self.r = r
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if word.degree != r:
                    raise ValueError("degree mismatch in terms")
                if coeff:
                    clean[word] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, r):
        return cls(r)

    @classmethod
    def from_word(cls, word, coeff=ONE):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        return cls(word.degree, {word: coeff})

    @classmethod
    def one(cls, r):
        return cls.from_word(SergeevBasisWord.identity(r))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, SergeevElement)
                and self.r == other.r and self.terms == other.terms)

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.r != other.r:
            raise ValueError("degree mismatch")
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, 0) + coeff
        return SergeevElement(self.r, terms)

    def __neg__(self):
        return SergeevElement(
            self.r, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return SergeevElement(
            self.r, {w: c * scalar for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SergeevElement):
            return elem_multiply(self, other)
        return NotImplemented

    def parity(self):
        """0 or 1 if homogeneous, None for mixed or zero elements."""
        seen = {w.parity for w in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def __repr__(self):
        return "SergeevElement(%d, %r)" % (self.r, self.terms)


def elem_multiply(x, y):
    if x.r != y.r:
        raise ValueError("degree mismatch")
    terms = {}
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            sign, wz = word_multiply(wx, wy)
            coeff = terms.get(wz, 0) + cx * cy * sign
            if coeff:
                terms[wz] = coeff
            elif wz in terms:
                del terms[wz]
    return SergeevElement(x.r, terms)


def young_symmetrizer(lam):
    """Sum of the permutations in the parabolic subgroup S_lam.

    The subgroup permutes consecutive blocks of sizes lam_1, lam_2, ...
    independently; the sum has one term per block permutation, all with
    coefficient 1.
    """
    r = sum(lam)
    blocks = []
    offset = 0
    for part in lam:
        blocks.append(list(range(offset + 1, offset + part + 1)))
        offset += part
    terms = {}
    for choice in _product(*[list(_perms(b)) for b in blocks]):
        images = [0] * r
        for block, perm_block in zip(blocks, choice):
            for pos, val in zip(block, perm_block):
                images[pos - 1] = val
        word = SergeevBasisWord(0, Permutation(images))
        terms[word] = ONE
    return SergeevElement(r, terms)


def block_permutations(lam):
    """The permutations of S_lam (same enumeration as young_symmetrizer)."""
    return [w.perm for w in young_symmetrizer(lam).terms]


def standard_basis(r):
    """All 2^r * r! standard basis words."""
    out = []
    for images in _perms(range(1, r + 1)):
        perm = Permutation(images)
        for mask in range(1 << r):
            out.append(SergeevBasisWord(mask, perm))
    return out


def embed(word, r):
    """Canonical embedding into degree r (new letters are fixed points)."""
    k = word.degree
    if r < k:
        raise ValueError("cannot embed into smaller degree")
    images = word.perm.images + tuple(range(k + 1, r + 1))
    return SergeevBasisWord(word.primes, Permutation(images))


# -- text form ("c1 c3 s2 s1", read left to right as a product) --


def word_to_text(word):
    parts = ["c%d" % j for j in word.prime_indices()]
    parts.extend("s%d" % i for i in reversed(word.perm.reduced_word()))
    return " ".join(parts) if parts else "1"


def parse_word_text(text, r):
    """Parse "c1 c3 s2 s1" into (sign, SergeevBasisWord) by multiplying
    the tokens left to right."""
    sign = 1
    acc = SergeevBasisWord.identity(r)
    for tok in text.split():
        if tok == "1":
            continue
        kind, num = tok[0], tok[1:]
        if kind not in ("c", "s") or not num.isdigit():
            raise ValueError("bad token %r" % tok)
        idx = int(num)
        if kind == "c":
            factor = SergeevBasisWord.c(idx, r)
        else:
            factor = SergeevBasisWord.s(idx, r)
        step_sign, acc = word_multiply(acc, factor)
        sign *= step_sign
    return sign, acc

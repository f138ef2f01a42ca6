"""Permutation supermodules on supertabloid bases.

M^lambda has basis the type-omega supertabloids of shape lambda.  The
Sergeev generators act by

    s_i . T = (-1)^{|T_i| |T_{i+1}|} T with letters i, i+1 trading rows,
    c_j . T = (-1)^{|T_1| + ... + |T_j|} sqrt(-1) T with the prime on j
              toggled,

|T_h| being 1 when letter h is primed.  The same module sits inside the
tensor power of the natural supermodule; the bijection between tensor
monomials and tabloids plus the generator actions on both sides live
here as well.
"""

from __future__ import annotations

from functools import lru_cache

from .core import (
    GaussianRational, ONE, I, Supertabloid, enumerate_tabloids, omega,
)


class ModuleVector:
    """Element of M^lambda: finitely many tabloids with Q(i) weights."""

    __slots__ = ("shape", "terms")

    def __init__(self, shape, terms=None):
        self.shape = tuple(shape)
        clean = {}
        if terms:
            for T, coeff in terms.items():
                if T.shape != self.shape:
                    raise ValueError("tabloid shape mismatch")
                if coeff:
                    clean[T] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, shape):
        return cls(shape)

    @classmethod
    def from_tabloid(cls, T, coeff=ONE):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        return cls(T.shape, {T: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, ModuleVector)
                and self.shape == other.shape and self.terms == other.terms)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        terms = dict(self.terms)
        for T, coeff in other.terms.items():
            terms[T] = terms.get(T, 0) + coeff
        return ModuleVector(self.shape, terms)

    def __neg__(self):
        return ModuleVector(self.shape, {T: -c for T, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return ModuleVector(
            self.shape, {T: c * scalar for T, c in self.terms.items()})

    def __repr__(self):
        return "ModuleVector(%r, %r)" % (self.shape, self.terms)


@lru_cache(maxsize=None)
def _module_basis_cached(shape):
    return enumerate_tabloids(shape, omega(sum(shape)))


def module_basis(shape):
    """The tabloid basis of M^shape, in the canonical order.

    Cached; callers must not mutate the returned list.
    """
    return _module_basis_cached(tuple(shape))


def base_tabloid(r):
    """Letter p alone in row p, no primes; shape omega."""
    return Supertabloid([[p] for p in range(1, r + 1)])


# ---------------------------------------------------------------------------
# Sergeev action on tabloids


def act_s(i, v):
    out = {}
    for T, coeff in v.terms.items():
        sign = -1 if T.letter_parity(i) and T.letter_parity(i + 1) else 1
        U = T.swap(i)
        c = out.get(U, 0) + coeff * sign
        if c:
            out[U] = c
        elif U in out:
            del out[U]
    return ModuleVector(v.shape, out)


def act_c(j, v):
    out = {}
    for T, coeff in v.terms.items():
        prefix = sum(T.letter_parity(h) for h in range(1, j + 1)) % 2
        factor = -I if prefix else I
        U = T.toggle(j)
        c = out.get(U, 0) + coeff * factor
        if c:
            out[U] = c
        elif U in out:
            del out[U]
    return ModuleVector(v.shape, out)


def act_word(word, v):
    """Action of a standard basis word.

    The stored permutation's reduced word runs first (left to right),
    then the c's from the highest index down; that order represents the
    written form c_1^{a_1} c_2^{a_2} ... w faithfully.
    """
    for i in word.perm.reduced_word():
        v = act_s(i, v)
    for j in reversed(word.prime_indices()):
        v = act_c(j, v)
    return v


def act_element(x, v):
    r = sum(v.shape)
    if x.r != r:
        raise ValueError("degree mismatch")
    out = ModuleVector.zero(v.shape)
    for word, coeff in x.terms.items():
        out = out + act_word(word, v).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# tensor model
#
# Slots hold signed letters: +k is v_k, -k is v_k-bar.


class TensorMonomial:

    __slots__ = ("indices",)

    def __init__(self, indices):
        indices = tuple(indices)
        for e in indices:
            if not isinstance(e, int) or e == 0:
                raise ValueError("slots are nonzero signed ints")
        self.indices = indices

    @property
    def degree(self):
        return len(self.indices)

    @property
    def parity(self):
        return sum(1 for e in self.indices if e < 0) % 2

    def weight(self, n):
        counts = [0] * n
        for e in self.indices:
            counts[abs(e) - 1] += 1
        return tuple(counts)

    def __eq__(self, other):
        return (isinstance(other, TensorMonomial)
                and self.indices == other.indices)

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return "TensorMonomial(%r)" % (self.indices,)


class TensorVector:

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        clean = {}
        if terms:
            for m, coeff in terms.items():
                if m.degree != degree:
                    raise ValueError("degree mismatch")
                if coeff:
                    clean[m] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    @classmethod
    def from_monomial(cls, m, coeff=ONE):
        if not isinstance(coeff, GaussianRational):
            coeff = GaussianRational(coeff)
        return cls(m.degree, {m: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, TensorVector)
                and self.degree == other.degree and self.terms == other.terms)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        terms = dict(self.terms)
        for m, coeff in other.terms.items():
            terms[m] = terms.get(m, 0) + coeff
        return TensorVector(self.degree, terms)

    def __neg__(self):
        return TensorVector(
            self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return TensorVector(
            self.degree, {m: c * scalar for m, c in self.terms.items()})

    def __repr__(self):
        return "TensorVector(%d, %r)" % (self.degree, self.terms)


def tensor_to_tabloid(m, n):
    """Slot j holding +-k becomes letter j (primed iff barred) in row k."""
    rows = [[] for _ in range(n)]
    for j, e in enumerate(m.indices, start=1):
        rows[abs(e) - 1].append(j if e > 0 else -j)
    return Supertabloid(rows)


def tabloid_to_tensor(T, n):
    if len(T.rows) != n:
        raise ValueError("tabloid has %d rows, expected %d" % (len(T.rows), n))
    indices = [0] * T.size
    for k, row in enumerate(T.rows, start=1):
        for e in row:
            indices[abs(e) - 1] = k if e > 0 else -k
    return TensorMonomial(indices)


def act_tensor(kind, idx, v):
    """Action of s_i (kind "s") or c_j (kind "c") on a tensor vector."""
    terms = {}
    for m, coeff in v.terms.items():
        slots = m.indices
        if kind == "s":
            i = idx
            a, b = slots[i - 1], slots[i]
            sign = -1 if a < 0 and b < 0 else 1
            new = slots[:i - 1] + (b, a) + slots[i + 1:]
            add = coeff * sign
        elif kind == "c":
            j = idx
            prefix = sum(1 for e in slots[:j - 1] if e < 0) % 2
            # (-1)^prefix from sliding past earlier slots, (-1)^{|slot j|}
            # from the Clifford map on the slot itself
            sign = (-1 if prefix else 1) * (1 if slots[j - 1] > 0 else -1)
            new = slots[:j - 1] + (-slots[j - 1],) + slots[j:]
            add = coeff * (I if sign > 0 else -I)
        else:
            raise ValueError("unknown generator kind %r" % kind)
        key = TensorMonomial(new)
        c = terms.get(key, 0) + add
        if c:
            terms[key] = c
        elif key in terms:
            del terms[key]
    return TensorVector(v.degree, terms)


# ---------------------------------------------------------------------------
# Schur generator actions on tensor space
#
# Generators are tagged tuples:
#   ("e", i), ("f", i)        even raising/lowering
#   ("eb", i), ("fb", i)      their odd partners
#   ("hb", j)                 odd Cartan
#   ("1", lam)                weight idempotent


def schur_act(gen, v):
    tag = gen[0]
    if tag == "1":
        lam = tuple(gen[1])
        n = len(lam)
        terms = {m: c for m, c in v.terms.items() if m.weight(n) == lam}
        return TensorVector(v.degree, terms)

    idx = gen[1]
    odd = tag in ("eb", "fb", "hb")
    terms = {}
    for m, coeff in v.terms.items():
        slots = m.indices
        sign = 1
        for t in range(len(slots)):
            val = slots[t]
            moved = _slot_rule(tag, idx, val)
            if moved is not None:
                new = slots[:t] + (moved,) + slots[t + 1:]
                key = TensorMonomial(new)
                c = terms.get(key, 0) + coeff * sign
                if c:
                    terms[key] = c
                elif key in terms:
                    del terms[key]
            if odd and val < 0:
                sign = -sign
    return TensorVector(v.degree, terms)


def _slot_rule(tag, idx, val):
    """Image of one slot under a Schur generator, or None."""
    k = abs(val)
    unit = 1 if val > 0 else -1
    if tag == "e":
        return unit * idx if k == idx + 1 else None
    if tag == "f":
        return unit * (idx + 1) if k == idx else None
    if tag == "eb":
        return -unit * idx if k == idx + 1 else None
    if tag == "fb":
        return -unit * (idx + 1) if k == idx else None
    if tag == "hb":
        return -val if k == idx else None
    raise ValueError("unknown generator tag %r" % tag)


def tensor_basis(n, r, weight=None):
    """Monomial basis of V^{otimes r}, optionally one weight block."""
    out = []

    def rec(prefix):
        if len(prefix) == r:
            m = TensorMonomial(prefix)
            if weight is None or m.weight(n) == tuple(weight):
                out.append(m)
            return
        for k in range(1, n + 1):
            rec(prefix + [k])
            rec(prefix + [-k])

    rec([])
    return out

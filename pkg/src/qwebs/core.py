"""Exact scalars, compositions, supertabloids and permutations.

Scalars live in Q(i), represented by pairs of ``fractions.Fraction``.
A supertabloid is a filling of a composition shape by letters 1..n, each
letter possibly primed; rows are unordered multisets, so every tabloid is
kept in a canonical row-sorted form.  Primed letters are encoded as
negative integers throughout (-k encodes k').
"""

from __future__ import annotations

from fractions import Fraction

# ---------------------------------------------------------------------------
# scalars


class GaussianRational:
    """a + b*i with a, b exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisionError at 0."""
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im
        return "%s%s%s*i" % (
            self.re, "+" if self.im > 0 else "-", abs(self.im))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# compositions
#
# A composition is a plain tuple of non-negative ints.  Three flavours show
# up: arbitrary length-n compositions, compositions whose only zeros are
# trailing, and strict compositions (all parts positive, any length).


def enumerate_compositions(n, r, mode="all"):
    """Compositions of r in deterministic lexicographic order.

    mode "all": all length-n compositions with non-negative parts.
    mode "trailing-zeros-only": length-n compositions whose zeros, if any,
        all come after the last positive part.
    mode "strict": compositions with positive parts and any length 1..r
        (n is ignored).
    """
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if mode == "all":
        return [tuple(c) for c in _compositions_all(n, r)]
    if mode == "trailing-zeros-only":
        out = []
        for c in _compositions_all(n, r):
            seen_zero = False
            ok = True
            for part in c:
                if part == 0:
                    seen_zero = True
                elif seen_zero:
                    ok = False
                    break
            if ok:
                out.append(tuple(c))
        return out
    if mode == "strict":
        return [tuple(c) for c in _compositions_strict(r)]
    raise ValueError("unknown mode %r" % (mode,))


def _compositions_all(n, r):
    if n == 1:
        yield [r]
        return
    for first in range(r + 1):
        for rest in _compositions_all(n - 1, r - first):
            yield [first] + rest


def _compositions_strict(r):
    # lexicographic by construction
    for first in range(1, r + 1):
        if first == r:
            yield [r]
        else:
            for rest in _compositions_strict(r - first):
                yield [first] + rest


def hat(a):
    """Pad a strict composition with trailing zeros to length sum(a)."""
    a = tuple(a)
    r = sum(a)
    if any(part <= 0 for part in a):
        raise ValueError("parts must be positive")
    return a + (0,) * (r - len(a))


def drop_trailing_zeros(a):
    """Strict composition underlying a trailing-zeros-only composition."""
    a = tuple(a)
    while a and a[-1] == 0:
        a = a[:-1]
    if any(part <= 0 for part in a):
        raise ValueError("internal zero part in %r" % (a,))
    return a


# ---------------------------------------------------------------------------
# entries and supertabloids


def entry_key(e):
    """Sort key realizing the total order 1' < 1 < 2' < 2 < ..."""
    return (-e, 0) if e < 0 else (e, 1)


class Entry:
    """A letter with an optional prime; thin wrapper over the int coding."""

    __slots__ = ("letter", "primed")

    def __init__(self, letter, primed=False):
        if letter < 1:
            raise ValueError("letter must be >= 1")
        self.letter = letter
        self.primed = bool(primed)

    @classmethod
    def from_int(cls, e):
        return cls(abs(e), e < 0)

    def to_int(self):
        return -self.letter if self.primed else self.letter

    def key(self):
        return (self.letter, 0 if self.primed else 1)

    def __eq__(self, other):
        return (isinstance(other, Entry)
                and self.letter == other.letter
                and self.primed == other.primed)

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.to_int())

    def __repr__(self):
        return "%d'" % self.letter if self.primed else "%d" % self.letter


class Supertabloid:
    """Rows of possibly primed letters; canonical form sorts each row.

    Rows may be empty (zero parts of the shape are kept so that shapes
    round-trip).  Two tabloids are equal iff their canonical forms agree.
    """

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        canon = []
        for row in rows:
            for e in row:
                if not isinstance(e, int) or e == 0:
                    raise ValueError("entries are nonzero ints, got %r" % (e,))
            canon.append(tuple(sorted(row, key=entry_key)))
        self.rows = tuple(canon)
        self._hash = hash(self.rows)

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    @property
    def size(self):
        return sum(len(row) for row in self.rows)

    def content(self, n=None):
        """How many entries have letter k, for k = 1..n."""
        if n is None:
            n = max((abs(e) for row in self.rows for e in row), default=0)
        counts = [0] * n
        for row in self.rows:
            for e in row:
                counts[abs(e) - 1] += 1
        return tuple(counts)

    @property
    def parity(self):
        return sum(1 for row in self.rows for e in row if e < 0) % 2

    def is_type_omega(self):
        letters = sorted(abs(e) for row in self.rows for e in row)
        return letters == list(range(1, self.size + 1))

    # -- letter lookup (type omega) --

    def locate(self, h):
        """(row index 0-based, signed entry) of the unique letter h."""
        for j, row in enumerate(self.rows):
            for e in row:
                if abs(e) == h:
                    return j, e
        raise ValueError("letter %d not present" % h)

    def entry_at(self, h):
        return Entry.from_int(self.locate(h)[1])

    def swap(self, i):
        """Letters i and i+1 trade places; primes stay with their cells.

        Equivalently, relabel i <-> i+1.  This is the version that
        matches the tensor-space swap under the slot bijection; moving
        the primes along with the letters would break c_i s_i = s_i c_{i+1}.
        """
        a, ea = self.locate(i)
        b, eb = self.locate(i + 1)
        rows = [list(row) for row in self.rows]
        rows[a][rows[a].index(ea)] = (i + 1) if ea > 0 else -(i + 1)
        rows[b][rows[b].index(eb)] = i if eb > 0 else -i
        return Supertabloid(rows)

    def toggle(self, h):
        """Flip the prime on letter h."""
        j, e = self.locate(h)
        rows = [list(row) for row in self.rows]
        rows[j][rows[j].index(e)] = -e
        return Supertabloid(rows)

    def letter_parity(self, h):
        """1 if letter h is primed, else 0."""
        return 1 if self.locate(h)[1] < 0 else 0

    def sort_key(self):
        return tuple(tuple(entry_key(e) for e in row) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, Supertabloid) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Supertabloid(%s)" % (list(list(row) for row in self.rows),)

    def __str__(self):
        def fmt(e):
            return "%d'" % -e if e < 0 else "%d" % e
        return "|".join(" ".join(fmt(e) for e in row) for row in self.rows)


def enumerate_tabloids(shape, content):
    """All supertabloids of the given shape and content, sorted.

    Shape rows receive multisets of letters (letter k used content[k-1]
    times over the whole tabloid), and every entry independently carries
    an optional prime; equal letters in one row are indistinguishable, so
    a letter with multiplicity m in a row contributes m+1 prime patterns.
    """
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        raise ValueError("shape and content sizes differ")
    counts = list(content)
    out = []

    def letter_multisets(size, start):
        # multisets of letters >= start drawn from the remaining counts;
        # counts stays decremented while a multiset is yielded
        if size == 0:
            yield ()
            return
        for k in range(start, len(counts) + 1):
            for take in range(1, min(counts[k - 1], size) + 1):
                counts[k - 1] -= take
                for rest in letter_multisets(size - take, k + 1):
                    yield (k,) * take + rest
                counts[k - 1] += take

    def primed_variants(letters):
        groups = []
        for k in letters:
            if groups and groups[-1][0] == k:
                groups[-1][1] += 1
            else:
                groups.append([k, 1])
        variants = [()]
        for k, m in groups:
            variants = [
                v + (-k,) * p + (k,) * (m - p)
                for v in variants
                for p in range(m + 1)
            ]
        return variants

    def fill(row_idx, rows_acc):
        if row_idx == len(shape):
            out.append(Supertabloid(list(rows_acc)))
            return
        for letters in letter_multisets(shape[row_idx], 1):
            for row in primed_variants(letters):
                rows_acc.append(row)
                fill(row_idx + 1, rows_acc)
                rows_acc.pop()

    fill(0, [])
    out.sort(key=Supertabloid.sort_key)
    return out


def omega(r):
    """The all-ones composition (1, ..., 1) of r."""
    return (1,) * r


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """Permutation of {1..r} stored by its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation: %r" % (images,))
        self.images = images

    @classmethod
    def identity(cls, r):
        return cls(range(1, r + 1))

    @classmethod
    def adjacent(cls, i, r):
        """The transposition swapping i and i+1 inside S_r."""
        if not 1 <= i <= r - 1:
            raise ValueError("adjacent index out of range")
        images = list(range(1, r + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, p):
        return self.images[p - 1]

    def inverse(self):
        inv = [0] * len(self.images)
        for p, q in enumerate(self.images, start=1):
            inv[q - 1] = p
        return Permutation(inv)

    def is_identity(self):
        return all(q == p for p, q in enumerate(self.images, start=1))

    def inversions(self):
        images = self.images
        n = len(images)
        return sum(
            1
            for p in range(n)
            for q in range(p + 1, n)
            if images[p] > images[q]
        )

    def reduced_word(self):
        """Lexicographically first reduced word [i1, ..., ik].

        The word satisfies self == s_{i1} o s_{i2} o ... o s_{ik} as
        functions (rightmost letter applied first); see from_word.
        Produced greedily: always peel off the smallest left descent.
        """
        images = list(self.images)
        n = len(images)
        pos = [0] * (n + 2)  # pos[v] = index of value v in images
        for idx, v in enumerate(images):
            pos[v] = idx
        word = []
        while True:
            for v in range(1, n):
                if pos[v] > pos[v + 1]:
                    break
            else:
                return word
            word.append(v)
            a, b = pos[v], pos[v + 1]
            images[a], images[b] = v + 1, v
            pos[v], pos[v + 1] = b, a

    @classmethod
    def from_word(cls, word, r):
        """Product s_{i1} o ... o s_{ik} (rightmost letter applied first)."""
        images = list(range(1, r + 1))
        # acc <- acc o s_i swaps the entries at positions i, i+1
        for i in word:
            images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%s)" % (list(self.images),)


def compose(sigma, tau):
    """sigma then tau: the result maps p to tau(sigma(p))."""
    return Permutation(tuple(tau.images[q - 1] for q in sigma.images))


def all_permutations(r):
    """All of S_r in lexicographic image order."""
    from itertools import permutations as _perms
    return [Permutation(p) for p in _perms(range(1, r + 1))]

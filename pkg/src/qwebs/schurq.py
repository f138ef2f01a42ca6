"""The type Q Schur superalgebra as concrete operators on tensor space.

Words in the generators e_i, f_i (with divided powers), their odd
partners, the odd Cartan elements and the weight idempotents are
evaluated to exact sparse matrices on the monomial basis of the tensor
power, one weight block at a time.  The full defining presentation is
re-checked numerically by verify_schur_relations.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .core import GaussianRational, enumerate_compositions
from .permod import TensorVector, schur_act, tensor_basis, act_tensor


class SchurWord:
    """Sequence of generator factors, rightmost factor acting first.

    Factors are (tag, index_or_weight, exponent); exponents above 1 are
    divided powers and only even e/f factors may carry them.
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        clean = []
        for factor in factors:
            if len(factor) == 2:
                tag, payload = factor
                exp = 1
            else:
                tag, payload, exp = factor
            if tag not in ("e", "f", "eb", "fb", "hb", "1"):
                raise ValueError("unknown tag %r" % (tag,))
            if exp < 1:
                raise ValueError("exponent must be >= 1")
            if exp > 1 and tag not in ("e", "f"):
                raise ValueError("divided powers only on even e/f")
            if tag == "1":
                payload = tuple(payload)
            clean.append((tag, payload, exp))
        self.factors = tuple(clean)

    @property
    def parity(self):
        return sum(1 for tag, _p, _e in self.factors
                   if tag in ("eb", "fb", "hb")) % 2

    def __eq__(self, other):
        return isinstance(other, SchurWord) and self.factors == other.factors

    def __repr__(self):
        return "SchurWord(%r)" % (list(self.factors),)


def apply_schur_word(word, v):
    """Apply a word to a tensor vector, rightmost factor first."""
    if isinstance(word, SchurWord):
        factors = word.factors
    else:
        factors = SchurWord(word).factors
    for tag, payload, exp in reversed(factors):
        for _ in range(exp):
            v = schur_act((tag, payload), v)
        if exp > 1:
            v = v.scale(GaussianRational(Fraction(1, factorial(exp))))
    return v


class EndoMatrix:
    """Exact sparse matrix over a fixed ordered monomial domain.

    Columns are keyed by domain monomials; each column maps image
    monomials to scalars.
    """

    __slots__ = ("domain", "cols")

    def __init__(self, domain, cols):
        self.domain = tuple(domain)
        self.cols = cols

    @classmethod
    def from_word(cls, word, domain):
        cols = {}
        for m in domain:
            image = apply_schur_word(word, TensorVector.from_monomial(m))
            if image.terms:
                cols[m] = dict(image.terms)
        return cls(domain, cols)

    @classmethod
    def zero(cls, domain):
        return cls(domain, {})

    @classmethod
    def identity(cls, domain):
        from .core import ONE
        return cls(domain, {m: {m: ONE} for m in domain})

    def is_zero(self):
        return not self.cols

    def __eq__(self, other):
        return (isinstance(other, EndoMatrix)
                and self.domain == other.domain and self.cols == other.cols)

    def __add__(self, other):
        if self.domain != other.domain:
            raise ValueError("domain mismatch")
        cols = {m: dict(col) for m, col in self.cols.items()}
        for m, col in other.cols.items():
            mine = cols.setdefault(m, {})
            for t, coeff in col.items():
                c = mine.get(t, 0) + coeff
                if c:
                    mine[t] = c
                elif t in mine:
                    del mine[t]
            if not mine:
                del cols[m]
        return EndoMatrix(self.domain, cols)

    def scale(self, scalar):
        if not scalar:
            return EndoMatrix.zero(self.domain)
        return EndoMatrix(
            self.domain,
            {m: {t: c * scalar for t, c in col.items()}
             for m, col in self.cols.items()})

    def __neg__(self):
        return self.scale(GaussianRational(-1))

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return "EndoMatrix(<%d columns>)" % len(self.cols)


def schur_word_matrix(word, n, r, weight=None):
    """Matrix of a word on the monomial basis (or one weight block)."""
    domain = tensor_basis(n, r, weight=weight)
    return EndoMatrix.from_word(word, domain)


# ---------------------------------------------------------------------------
# presentation checks


def _alpha(i, n):
    shift = [0] * n
    shift[i - 1] = 1
    shift[i] = -1
    return tuple(shift)


def _shifted(lam, i, direction, n):
    """lam +- alpha_i, or None when it leaves the weight lattice."""
    alpha = _alpha(i, n)
    moved = tuple(a + direction * b for a, b in zip(lam, alpha))
    if all(x >= 0 for x in moved):
        return moved
    return None


def verify_schur_relations(n, r):
    """Check (S1)-(S6) for every weight and admissible index.

    Returns a list of (label, ok) pairs; failures are collected, never
    raised.
    """
    report = []
    lams = enumerate_compositions(n, r, "all")
    blocks = {lam: tensor_basis(n, r, weight=lam) for lam in lams}

    def mat(word, lam):
        return EndoMatrix.from_word(word, blocks[lam])

    def check(label, lhs, rhs):
        report.append((label, lhs == rhs))

    # --- S1 ---
    full = tensor_basis(n, r)
    total = EndoMatrix.zero(full)
    for lam in lams:
        total = total + EndoMatrix.from_word([("1", lam)], full)
        for mu in lams:
            lhs = EndoMatrix.from_word([("1", lam), ("1", mu)], full)
            rhs = (EndoMatrix.from_word([("1", lam)], full)
                   if lam == mu else EndoMatrix.zero(full))
            check("S1:orthogonality:%s,%s" % (lam, mu), lhs, rhs)
    check("S1:resolution-of-identity", total, EndoMatrix.identity(full))
    for lam in lams:
        for i in range(1, n + 1):
            lhs = mat([("hb", i), ("1", lam)], lam)
            rhs = mat([("1", lam), ("hb", i)], lam)
            check("S1:hbar-commutes-with-idempotent:i=%d:%s" % (i, lam),
                  lhs, rhs)
            if lam[i - 1] == 0:
                check("S1:hbar-kills-empty-row:i=%d:%s" % (i, lam),
                      lhs, EndoMatrix.zero(blocks[lam]))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = (mat([("hb", i), ("hb", j), ("1", lam)], lam)
                       + mat([("hb", j), ("hb", i), ("1", lam)], lam))
                scalar = GaussianRational(2 * lam[i - 1]) if i == j \
                    else GaussianRational(0)
                rhs = mat([("1", lam)], lam).scale(scalar)
                check("S1:hbar-pair:i=%d,j=%d:%s" % (i, j, lam), lhs, rhs)

    # --- S2 ---
    updown = [("e", +1), ("f", -1), ("eb", +1), ("fb", -1)]
    for lam in lams:
        for tag, direction in updown:
            for i in range(1, n):
                target = _shifted(lam, i, direction, n)
                lhs = mat([(tag, i), ("1", lam)], lam)
                if target is None:
                    check("S2:%s%d-kills:%s" % (tag, i, lam),
                          lhs, EndoMatrix.zero(blocks[lam]))
                else:
                    rhs = mat([("1", target), (tag, i), ("1", lam)], lam)
                    check("S2:%s%d-shifts:%s" % (tag, i, lam), lhs, rhs)
                # the mirrored statement for 1_lam x
                source = _shifted(lam, i, -direction, n)
                lhs2 = EndoMatrix.from_word([("1", lam), (tag, i)], full)
                if source is None:
                    check("S2:%s%d-kills-left:%s" % (tag, i, lam),
                          lhs2, EndoMatrix.zero(full))
                else:
                    rhs2 = EndoMatrix.from_word(
                        [(tag, i), ("1", source)], full)
                    check("S2:%s%d-shifts-left:%s" % (tag, i, lam),
                          lhs2, rhs2)

    # --- S3 ---
    for lam in lams:
        one = [("1", lam)]
        for i in range(1, n + 1):
            if i <= n - 1:
                lhs = (mat([("hb", i), ("e", i)] + one, lam)
                       - mat([("e", i), ("hb", i)] + one, lam))
                check("S3:hb-e-same:i=%d:%s" % (i, lam),
                      lhs, mat([("eb", i)] + one, lam))
                lhs = (mat([("hb", i), ("f", i)] + one, lam)
                       - mat([("f", i), ("hb", i)] + one, lam))
                check("S3:hb-f-same:i=%d:%s" % (i, lam),
                      lhs, -mat([("fb", i)] + one, lam))
                lhs = (mat([("hb", i), ("eb", i)] + one, lam)
                       + mat([("eb", i), ("hb", i)] + one, lam))
                check("S3:hb-eb-same:i=%d:%s" % (i, lam),
                      lhs, mat([("e", i)] + one, lam))
                lhs = (mat([("hb", i), ("fb", i)] + one, lam)
                       + mat([("fb", i), ("hb", i)] + one, lam))
                check("S3:hb-fb-same:i=%d:%s" % (i, lam),
                      lhs, mat([("f", i)] + one, lam))
            if i >= 2:
                lhs = (mat([("hb", i), ("e", i - 1)] + one, lam)
                       - mat([("e", i - 1), ("hb", i)] + one, lam))
                check("S3:hb-e-below:i=%d:%s" % (i, lam),
                      lhs, -mat([("eb", i - 1)] + one, lam))
                lhs = (mat([("hb", i), ("f", i - 1)] + one, lam)
                       - mat([("f", i - 1), ("hb", i)] + one, lam))
                check("S3:hb-f-below:i=%d:%s" % (i, lam),
                      lhs, mat([("fb", i - 1)] + one, lam))
                lhs = (mat([("hb", i), ("eb", i - 1)] + one, lam)
                       + mat([("eb", i - 1), ("hb", i)] + one, lam))
                check("S3:hb-eb-below:i=%d:%s" % (i, lam),
                      lhs, mat([("e", i - 1)] + one, lam))
                lhs = (mat([("hb", i), ("fb", i - 1)] + one, lam)
                       + mat([("fb", i - 1), ("hb", i)] + one, lam))
                check("S3:hb-fb-below:i=%d:%s" % (i, lam),
                      lhs, mat([("f", i - 1)] + one, lam))
            for j in range(1, n):
                if i in (j, j + 1):
                    continue
                zero = EndoMatrix.zero(blocks[lam])
                lhs = (mat([("hb", i), ("e", j)] + one, lam)
                       - mat([("e", j), ("hb", i)] + one, lam))
                check("S3:hb-e-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                lhs = (mat([("hb", i), ("f", j)] + one, lam)
                       - mat([("f", j), ("hb", i)] + one, lam))
                check("S3:hb-f-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                lhs = (mat([("hb", i), ("eb", j)] + one, lam)
                       + mat([("eb", j), ("hb", i)] + one, lam))
                check("S3:hb-eb-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                lhs = (mat([("hb", i), ("fb", j)] + one, lam)
                       + mat([("fb", j), ("hb", i)] + one, lam))
                check("S3:hb-fb-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)

    # --- S4 ---
    for lam in lams:
        one = [("1", lam)]
        idm = mat(one, lam)
        for i in range(1, n):
            for j in range(1, n):
                delta = i == j
                lhs = (mat([("e", i), ("f", j)] + one, lam)
                       - mat([("f", j), ("e", i)] + one, lam))
                rhs = idm.scale(GaussianRational(
                    lam[i - 1] - lam[i])) if delta else \
                    EndoMatrix.zero(blocks[lam])
                check("S4:ef:i=%d,j=%d:%s" % (i, j, lam), lhs, rhs)
                lhs = (mat([("eb", i), ("fb", j)] + one, lam)
                       + mat([("fb", j), ("eb", i)] + one, lam))
                rhs = idm.scale(GaussianRational(
                    lam[i - 1] + lam[i])) if delta else \
                    EndoMatrix.zero(blocks[lam])
                check("S4:ebfb:i=%d,j=%d:%s" % (i, j, lam), lhs, rhs)
                for first, second in (("e", "fb"), ("eb", "f")):
                    lhs = (mat([(first, i), (second, j)] + one, lam)
                           - mat([(second, j), (first, i)] + one, lam))
                    if delta:
                        rhs = (mat([("hb", i)] + one, lam)
                               - mat([("hb", i + 1)] + one, lam))
                    else:
                        rhs = EndoMatrix.zero(blocks[lam])
                    check("S4:%s%s:i=%d,j=%d:%s" % (first, second, i, j, lam),
                          lhs, rhs)

    # --- S5 ---
    for lam in lams:
        one = [("1", lam)]
        zero = EndoMatrix.zero(blocks[lam])
        for i in range(1, n):
            check("S5:eb-squares:i=%d:%s" % (i, lam),
                  mat([("eb", i), ("eb", i)] + one, lam), zero)
            check("S5:fb-squares:i=%d:%s" % (i, lam),
                  mat([("fb", i), ("fb", i)] + one, lam), zero)
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) != 1:
                    lhs = (mat([("e", i), ("eb", j)] + one, lam)
                           - mat([("eb", j), ("e", i)] + one, lam))
                    check("S5:e-eb-commute:i=%d,j=%d:%s" % (i, j, lam),
                          lhs, zero)
                    lhs = (mat([("f", i), ("fb", j)] + one, lam)
                           - mat([("fb", j), ("f", i)] + one, lam))
                    check("S5:f-fb-commute:i=%d,j=%d:%s" % (i, j, lam),
                          lhs, zero)
                if abs(i - j) > 1:
                    lhs = (mat([("e", i), ("e", j)] + one, lam)
                           - mat([("e", j), ("e", i)] + one, lam))
                    check("S5:e-e-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                    lhs = (mat([("f", i), ("f", j)] + one, lam)
                           - mat([("f", j), ("f", i)] + one, lam))
                    check("S5:f-f-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                    lhs = (mat([("eb", i), ("eb", j)] + one, lam)
                           + mat([("eb", j), ("eb", i)] + one, lam))
                    check("S5:eb-eb-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                    lhs = (mat([("fb", i), ("fb", j)] + one, lam)
                           + mat([("fb", j), ("fb", i)] + one, lam))
                    check("S5:fb-fb-far:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
        for i in range(1, n - 1):
            lhs = (mat([("e", i), ("e", i + 1)] + one, lam)
                   - mat([("e", i + 1), ("e", i)] + one, lam))
            rhs = (mat([("eb", i), ("eb", i + 1)] + one, lam)
                   + mat([("eb", i + 1), ("eb", i)] + one, lam))
            check("S5:e-serre-mix-1:i=%d:%s" % (i, lam), lhs, rhs)
            lhs = (mat([("e", i), ("eb", i + 1)] + one, lam)
                   - mat([("eb", i + 1), ("e", i)] + one, lam))
            rhs = (mat([("eb", i), ("e", i + 1)] + one, lam)
                   - mat([("e", i + 1), ("eb", i)] + one, lam))
            check("S5:e-serre-mix-2:i=%d:%s" % (i, lam), lhs, rhs)
            lhs = (mat([("f", i + 1), ("f", i)] + one, lam)
                   - mat([("f", i), ("f", i + 1)] + one, lam))
            rhs = (mat([("fb", i + 1), ("fb", i)] + one, lam)
                   + mat([("fb", i), ("fb", i + 1)] + one, lam))
            check("S5:f-serre-mix-1:i=%d:%s" % (i, lam), lhs, rhs)
            lhs = (mat([("fb", i + 1), ("f", i)] + one, lam)
                   - mat([("f", i), ("fb", i + 1)] + one, lam))
            rhs = (mat([("f", i + 1), ("fb", i)] + one, lam)
                   - mat([("fb", i), ("f", i + 1)] + one, lam))
            check("S5:f-serre-mix-2:i=%d:%s" % (i, lam), lhs, rhs)

    # --- S6 ---
    for lam in lams:
        one = [("1", lam)]
        zero = EndoMatrix.zero(blocks[lam])
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) != 1:
                    continue
                lhs = (mat([("e", i, 2), ("e", j)] + one, lam)
                       - mat([("e", i), ("e", j), ("e", i)] + one, lam)
                       + mat([("e", j), ("e", i, 2)] + one, lam))
                check("S6:e-serre:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                lhs = (mat([("f", i, 2), ("f", j)] + one, lam)
                       - mat([("f", i), ("f", j), ("f", i)] + one, lam)
                       + mat([("f", j), ("f", i, 2)] + one, lam))
                check("S6:f-serre:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                lhs = (mat([("e", i, 2), ("eb", j)] + one, lam)
                       - mat([("e", i), ("eb", j), ("e", i)] + one, lam)
                       + mat([("eb", j), ("e", i, 2)] + one, lam))
                check("S6:e-serre-odd:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)
                lhs = (mat([("f", i, 2), ("fb", j)] + one, lam)
                       - mat([("f", i), ("fb", j), ("f", i)] + one, lam)
                       + mat([("fb", j), ("f", i, 2)] + one, lam))
                check("S6:f-serre-odd:i=%d,j=%d:%s" % (i, j, lam), lhs, zero)

    return report


def verify_supercommutation(n, r):
    """Schur generators supercommute with the Sergeev action on tensors."""
    report = []
    full = tensor_basis(n, r)
    schur_gens = [(("e", i), 0) for i in range(1, n)]
    schur_gens += [(("f", i), 0) for i in range(1, n)]
    schur_gens += [(("eb", i), 1) for i in range(1, n)]
    schur_gens += [(("fb", i), 1) for i in range(1, n)]
    schur_gens += [(("hb", j), 1) for j in range(1, n + 1)]
    schur_gens += [(("1", lam), 0)
                   for lam in enumerate_compositions(n, r, "all")]
    herm_gens = [("s", i, 0) for i in range(1, r)]
    herm_gens += [("c", j, 1) for j in range(1, r + 1)]
    for gen, gpar in schur_gens:
        for kind, idx, hpar in herm_gens:
            ok = True
            for m in full:
                v = TensorVector.from_monomial(m)
                lhs = schur_act(gen, act_tensor(kind, idx, v))
                rhs = act_tensor(kind, idx, schur_act(gen, v))
                if gpar and hpar:
                    rhs = -rhs
                if lhs != rhs:
                    ok = False
                    break
            report.append(
                ("supercommute:%s:%s%d" % (gen, kind, idx), ok))
    return report


def report_passes(report):
    return all(ok for _label, ok in report)


def report_failures(report):
    return [label for label, ok in report if not ok]

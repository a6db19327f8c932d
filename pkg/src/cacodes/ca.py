"""Linear cellular automata GF(q)^n -> GF(q)^(n-k) and their kernels.

A linear rule of diameter d = k+1 is described by its rule polynomial
a_0 + a_1 X + ... + a_k X^k.  Bipermutivity (the rule permutes the field in
its first and last variable) requires a_0 != 0 and a_k != 0; this library
additionally normalizes to a_k = 1 at construction so that the kernel
recurrence below holds verbatim.  Rules with a_k not 1 are rejected, not
silently rescaled; ``normalize_monic`` is the explicit opt-in.

The CA applies the rule to each of the n-k windows of k+1 adjacent cells
(one-shot, no wraparound), so it is the banded transition matrix acting on
the input.  Its kernel has dimension exactly k and is generated by running
the feedback recurrence

    x_i = -(a_0 x_{i-k} + ... + a_{k-1} x_{i-1})    for i >= k

from the k unit seeds: the kernel elements are precisely the truncated
linear recurring sequences with feedback polynomial equal to the rule.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import GF, GFElement, Polynomial
from .errors import (
    DegreeZero,
    LengthMismatch,
    NotBipermutive,
    SeedLengthMismatch,
    ZeroPolynomial,
)
from .linalg import MatrixGF
from .subspaces import Subspace


def normalize_monic(poly: Polynomial) -> Polynomial:
    """Explicitly rescale a would-be rule polynomial to leading coefficient 1."""
    if poly.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    return poly.monic()


class LinearRule:
    """A validated bipermutive linear local rule.

    ``poly`` is the rule polynomial; ``k`` its degree; ``diameter`` = k + 1.
    """

    __slots__ = ("poly", "field")

    def __init__(self, poly: Polynomial):
        d = poly.degree
        if poly.is_zero() or d < 1:
            raise DegreeZero("a rule polynomial must have degree at least 1")
        if poly.coeffs[0].code == 0:
            raise NotBipermutive("rule constant term a_0 must be nonzero")
        if poly.coeffs[-1].code != 1:
            raise NotBipermutive(
                "rule leading coefficient a_k must be 1; see normalize_monic"
            )
        self.poly = poly
        self.field = poly.field

    @property
    def k(self) -> int:
        return int(self.poly.degree)

    @property
    def diameter(self) -> int:
        return self.k + 1

    def __eq__(self, other):
        if not isinstance(other, LinearRule):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"LinearRule({self.poly.display()} over GF({self.field.spec}))"


class LinearCA:
    """A linear CA of lattice length n with a fixed bipermutive rule.

    Accepts either a ``LinearRule`` or a raw ``Polynomial`` (validated on the
    spot).  Requires diameter <= n so at least one output cell exists.
    """

    __slots__ = ("rule", "n")

    def __init__(self, rule: LinearRule | Polynomial, n: int):
        if isinstance(rule, Polynomial):
            rule = LinearRule(rule)
        if n < rule.diameter:
            raise LengthMismatch(
                f"lattice length {n} is shorter than the rule diameter {rule.diameter}"
            )
        self.rule = rule
        self.n = n

    @property
    def field(self) -> GF:
        return self.rule.field

    @property
    def k(self) -> int:
        return self.rule.k

    @property
    def out_len(self) -> int:
        return self.n - self.rule.k

    def transition_matrix(self) -> MatrixGF:
        """The (n-k) x n banded matrix: row i carries a_0..a_k from column i."""
        codes = self.rule.poly.to_codes()
        n, k = self.n, self.k
        rows = [
            tuple([0] * i + list(codes) + [0] * (n - i - k - 1))
            for i in range(n - k)
        ]
        return MatrixGF(self.field, rows, ncols=n)

    def __call__(self, x: Sequence[int | GFElement]) -> tuple[int, ...]:
        """Apply the CA to a configuration; returns n-k output codes.

        Output cell i is sum_j a_j x_{i+j}, the rule evaluated on the window
        starting at cell i.
        """
        gf = self.field
        vec = [gf.code_of(c) for c in x]
        if len(vec) != self.n:
            raise LengthMismatch(f"configuration length {len(vec)} != n = {self.n}")
        codes = self.rule.poly.to_codes()
        out = []
        for i in range(self.n - self.k):
            acc = 0
            for j, a in enumerate(codes):
                xj = vec[i + j]
                if a and xj:
                    acc = gf.add(acc, gf.mul(a, xj))
            out.append(acc)
        return tuple(out)

    def lfsr_preimage(self, seed: Sequence[int | GFElement]) -> tuple[int, ...]:
        """Extend a k-cell seed to a full kernel configuration.

        The first k cells equal the seed; each later cell is forced by the
        feedback recurrence x_i = -(a_0 x_{i-k} + ... + a_{k-1} x_{i-1}),
        which is the unique choice making every rule window vanish (using
        a_k = 1).
        """
        gf = self.field
        vec = [gf.code_of(c) for c in seed]
        if len(vec) != self.k:
            raise SeedLengthMismatch(f"seed length {len(vec)} != k = {self.k}")
        codes = self.rule.poly.to_codes()
        for i in range(self.k, self.n):
            acc = 0
            for j in range(self.k):
                a, xj = codes[j], vec[i - self.k + j]
                if a and xj:
                    acc = gf.add(acc, gf.mul(a, xj))
            vec.append(gf.neg(acc))
        return tuple(vec)

    def kernel(self) -> Subspace:
        """The kernel of the CA: a k-dimensional subspace of GF(q)^n.

        Spanned by the preimages of the k unit seeds; canonicalized.  Always
        equals the null space of the transition matrix.
        """
        k = self.k
        rows = []
        for i in range(k):
            seed = [0] * k
            seed[i] = 1
            rows.append(self.lfsr_preimage(seed))
        return Subspace(self.field, self.n, rows)

    def __repr__(self):
        return f"LinearCA({self.rule.poly.display()}, n={self.n} over GF({self.field.spec}))"

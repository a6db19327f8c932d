"""Exact linear algebra over GF(q): RREF, rank, null spaces, resultants.

Matrices store their entries as integer element codes (see ``algebra.GF``),
one row per tuple.  All eliminations are exact; there is no floating point
anywhere, so rank and nullity are always the true algebraic values.

The Sylvester matrix here follows the convolution layout: for nonzero f and
g, the first deg(g) rows are right-shifted copies of f's ascending
coefficient vector and the next deg(f) rows are shifted copies of g's.  Its
null space has dimension deg(gcd(f, g)), which the resultant turns into the
classic coprimality test: res(f, g) != 0 iff gcd(f, g) = 1.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import GF, GFElement, Polynomial
from .errors import FieldMismatch, LengthMismatch, ZeroPolynomial


class MatrixGF:
    """A dense matrix over a ``GF`` field.

    Rows are tuples of integer element codes.  An explicit ``ncols`` is
    required when constructing a matrix with no rows, so that shapes stay
    meaningful for empty bases.
    """

    __slots__ = ("field", "rows", "ncols")

    def __init__(
        self,
        field: GF,
        rows: Iterable[Sequence[int | GFElement]] = (),
        ncols: int | None = None,
    ):
        self.field = field
        packed = []
        for row in rows:
            packed.append(tuple(field.code_of(c) for c in row))
        if packed:
            width = len(packed[0])
            if any(len(r) != width for r in packed):
                raise LengthMismatch("matrix rows have unequal lengths")
            if ncols is not None and ncols != width:
                raise LengthMismatch(f"rows have {width} columns, expected {ncols}")
            self.ncols = width
        else:
            self.ncols = 0 if ncols is None else ncols
        self.rows = tuple(packed)

    # -- constructors -------------------------------------------------------------

    @classmethod
    def zero(cls, field: GF, nrows: int, ncols: int) -> "MatrixGF":
        return cls(field, [(0,) * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field: GF, n: int) -> "MatrixGF":
        return cls(
            field,
            [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)],
            ncols=n,
        )

    # -- shape and access ------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (
            self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(c) for c in row) for row in self.rows)
        return f"MatrixGF({self.shape[0]}x{self.shape[1]} over GF({self.field.spec}): {body})"

    # -- algebra ------------------------------------------------------------------------

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if not isinstance(other, MatrixGF):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch("matrix product across different fields")
        if self.ncols != other.nrows:
            raise LengthMismatch(
                f"inner dimensions differ: {self.shape} @ {other.shape}"
            )
        gf = self.field
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = gf.add(acc, gf.mul(a, b))
                new_row.append(acc)
            out.append(tuple(new_row))
        return MatrixGF(gf, out, ncols=other.ncols)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector of codes; returns a tuple of codes."""
        if len(vec) != self.ncols:
            raise LengthMismatch(f"vector length {len(vec)} != {self.ncols} columns")
        gf = self.field
        out = []
        for row in self.rows:
            acc = 0
            for a, b in zip(row, vec):
                if a and b:
                    acc = gf.add(acc, gf.mul(a, b))
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "MatrixGF":
        if not self.rows:
            return MatrixGF(self.field, [() for _ in range(self.ncols)], ncols=0)
        return MatrixGF(self.field, list(zip(*self.rows)), ncols=self.nrows)

    def stack(self, other: "MatrixGF") -> "MatrixGF":
        """Vertical concatenation (rows of self above rows of other)."""
        if other.field != self.field:
            raise FieldMismatch("stacking matrices over different fields")
        if self.ncols != other.ncols:
            raise LengthMismatch(
                f"column counts differ: {self.ncols} vs {other.ncols}"
            )
        return MatrixGF(self.field, self.rows + other.rows, ncols=self.ncols)

    # -- elimination ------------------------------------------------------------------------

    def rref(self) -> tuple["MatrixGF", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot column indices."""
        gf = self.field
        work = [list(r) for r in self.rows]
        nrows, ncols = len(work), self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            pivot = next((i for i in range(r, nrows) if work[i][c]), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inv = gf.inv(work[r][c])
            if inv != 1:
                work[r] = [gf.mul(inv, x) for x in work[r]]
            for i in range(nrows):
                if i != r and work[i][c]:
                    factor = work[i][c]
                    work[i] = [
                        gf.sub(x, gf.mul(factor, y))
                        for x, y in zip(work[i], work[r])
                    ]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return MatrixGF(gf, [tuple(row) for row in work], ncols=ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_space_basis(self) -> "MatrixGF":
        """Nonzero rows of the RREF: the canonical basis of the row space."""
        reduced, pivots = self.rref()
        return MatrixGF(self.field, reduced.rows[: len(pivots)], ncols=self.ncols)

    def nullspace_basis(self) -> "MatrixGF":
        """Basis of the right null space {x : M x = 0}, one vector per row.

        One basis vector per free column, in ascending column order, each
        with a 1 in its free position: the canonical complement of the RREF.
        """
        gf = self.field
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [0] * self.ncols
            vec[fc] = 1
            for r, pc in enumerate(pivots):
                coeff = reduced.rows[r][fc]
                if coeff:
                    vec[pc] = gf.neg(coeff)
            basis.append(tuple(vec))
        return MatrixGF(gf, basis, ncols=self.ncols)

    def det(self) -> GFElement:
        """Determinant by fraction-free forward elimination."""
        if self.nrows != self.ncols:
            raise LengthMismatch(f"determinant of non-square {self.shape} matrix")
        gf = self.field
        n = self.nrows
        work = [list(r) for r in self.rows]
        det_code = 1
        for c in range(n):
            pivot = next((i for i in range(c, n) if work[i][c]), None)
            if pivot is None:
                return gf.zero
            if pivot != c:
                work[c], work[pivot] = work[pivot], work[c]
                det_code = gf.neg(det_code)
            det_code = gf.mul(det_code, work[c][c])
            inv = gf.inv(work[c][c])
            for i in range(c + 1, n):
                if work[i][c]:
                    factor = gf.mul(work[i][c], inv)
                    work[i] = [
                        gf.sub(x, gf.mul(factor, y))
                        for x, y in zip(work[i], work[c])
                    ]
        return GFElement(gf, det_code)

    # -- serialization -----------------------------------------------------------------------

    def to_json(self) -> list:
        """Rows as lists of ints (prime field) or coefficient lists (extension)."""
        if self.field.m == 1:
            return [list(row) for row in self.rows]
        return [
            [list(self.field.decode(c)) for c in row] for row in self.rows
        ]

    @classmethod
    def from_json(cls, field: GF, data: Sequence, ncols: int | None = None) -> "MatrixGF":
        rows = []
        for row in data:
            if field.m == 1:
                rows.append([int(c) for c in row])
            else:
                rows.append([field.encode([int(a) for a in entry]) for entry in row])
        return cls(field, rows, ncols=ncols)


def sylvester(f: Polynomial, g: Polynomial) -> MatrixGF:
    """Sylvester matrix of two nonzero polynomials, convolution layout.

    Square of side deg(f) + deg(g): first deg(g) rows carry right-shifted
    copies of f's ascending coefficients, then deg(f) rows carry g's.  Two
    nonzero constants give the empty 0 x 0 matrix.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("Sylvester matrix requires nonzero polynomials")
    if f.field != g.field:
        raise FieldMismatch("Sylvester matrix of polynomials over different fields")
    df, dg = int(f.degree), int(g.degree)
    n = df + dg
    rows = []
    fc, gc = f.to_codes(), g.to_codes()
    for i in range(dg):
        rows.append(tuple([0] * i + list(fc) + [0] * (n - i - len(fc))))
    for i in range(df):
        rows.append(tuple([0] * i + list(gc) + [0] * (n - i - len(gc))))
    return MatrixGF(f.field, rows, ncols=n)


def resultant(f: Polynomial, g: Polynomial) -> GFElement:
    """Determinant of the Sylvester matrix; nonzero iff gcd(f, g) = 1."""
    return sylvester(f, g).det()

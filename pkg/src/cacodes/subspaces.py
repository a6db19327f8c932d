"""Canonical subspaces of GF(q)^n, the subspace metric, and Grassmannian codes.

A subspace is stored by its unique RREF basis with zero rows dropped, so two
objects are equal exactly when they describe the same subspace.  The distance

    d(A, B) = dim A + dim B - 2 dim(A intersect B)

is computed via dim(A i B) = dim A + dim B - rank(stack(A, B)), which needs
one elimination instead of an explicit intersection.  Intersections, when a
basis is actually wanted, use the Zassenhaus block trick.

A Grassmannian code is a finite set of such subspaces; here they usually all
share one dimension k (constant-dimension code) because they arise as
kernels of equal-diameter cellular automata.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .algebra import GF
from .errors import AmbientMismatch, EmptyCode, TooFewCodewords
from .linalg import MatrixGF


class Subspace:
    """A subspace of GF(q)^n held in canonical (RREF basis) form."""

    __slots__ = ("field", "ambient_n", "basis")

    def __init__(self, field: GF, ambient_n: int, rows: Iterable[Sequence[int]] = ()):
        self.field = field
        self.ambient_n = ambient_n
        reduced, pivots = MatrixGF(field, rows, ncols=ambient_n).rref()
        self.basis = MatrixGF(field, reduced.rows[: len(pivots)], ncols=ambient_n)

    @classmethod
    def from_matrix(cls, rows: MatrixGF) -> "Subspace":
        """Span of the rows of a matrix, canonicalized."""
        return cls(rows.field, rows.ncols, rows.rows)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def is_zero(self) -> bool:
        return self.basis.nrows == 0

    # -- membership and comparison ------------------------------------------------

    def _check(self, other: "Subspace") -> None:
        if not isinstance(other, Subspace):
            raise TypeError(f"expected Subspace, got {type(other).__name__}")
        if other.field != self.field or other.ambient_n != self.ambient_n:
            raise AmbientMismatch(
                f"subspaces of GF({self.field.spec})^{self.ambient_n} and "
                f"GF({other.field.spec})^{other.ambient_n} are incomparable"
            )

    def contains_vector(self, vec: Sequence[int]) -> bool:
        stacked = self.basis.stack(MatrixGF(self.field, [vec], ncols=self.ambient_n))
        return stacked.rank() == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return self.basis.stack(other.basis).rank() == other.dim

    def intersection(self, other: "Subspace") -> "Subspace":
        """Exact intersection by the Zassenhaus block elimination."""
        self._check(other)
        n = self.ambient_n
        rows = [tuple(r) + tuple(r) for r in self.basis.rows]
        rows += [tuple(r) + (0,) * n for r in other.basis.rows]
        reduced, pivots = MatrixGF(self.field, rows, ncols=2 * n).rref()
        inter = [
            row[n:] for row in reduced.rows if not any(row[:n]) and any(row[n:])
        ]
        return Subspace(self.field, n, inter)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_n == other.ambient_n
            and self.basis.rows == other.basis.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_n, self.basis.rows))

    def sort_key(self) -> tuple:
        """Lexicographic key on the flattened RREF basis entries."""
        return tuple(itertools.chain.from_iterable(self.basis.rows))

    def __repr__(self):
        rows = "; ".join(" ".join(str(c) for c in r) for r in self.basis.rows)
        return f"Subspace(dim {self.dim} of GF({self.field.spec})^{self.ambient_n}: {rows})"

    # -- enumeration (desk scale) -----------------------------------------------------

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All q^dim vectors of the subspace, as tuples of element codes."""
        gf = self.field
        for combo in itertools.product(range(gf.q), repeat=self.dim):
            vec = [0] * self.ambient_n
            for c, row in zip(combo, self.basis.rows):
                if c:
                    for j, r in enumerate(row):
                        if r:
                            vec[j] = gf.add(vec[j], gf.mul(c, r))
            yield tuple(vec)

    # -- serialization ------------------------------------------------------------------

    def to_json(self) -> list:
        return self.basis.to_json()

    @classmethod
    def from_json(cls, field: GF, ambient_n: int, data: Sequence) -> "Subspace":
        return cls.from_matrix(MatrixGF.from_json(field, data, ncols=ambient_n))


def subspace_distance(a: Subspace, b: Subspace) -> int:
    """Subspace metric dim A + dim B - 2 dim(A intersect B).

    Uses rank(stack) = dim(A + B) and the dimension formula, so no
    intersection basis is built.
    """
    a._check(b)
    joint = a.basis.stack(b.basis).rank()
    inter = a.dim + b.dim - joint
    return a.dim + b.dim - 2 * inter


@dataclass(frozen=True)
class CodeParams:
    """Parameter tuple (n, max dimension, log_q of size, minimum distance).

    ``min_distance`` is None for singleton codes, where no pair exists to
    measure; callers must treat that as "undefined", not zero.
    """

    n: int
    max_dim: int
    log_q_size: float
    min_distance: int | None
    size: int


class GrassmannianCode:
    """An ordered set of distinct subspaces of one ambient space.

    Codewords are kept sorted by their canonical basis (lexicographic on the
    flattened RREF entries) and deduplicated; ``duplicates_removed`` records
    how many inputs collapsed onto an earlier codeword.
    """

    __slots__ = ("field", "ambient_n", "codewords", "constant_dim", "duplicates_removed")

    def __init__(self, field: GF, ambient_n: int, subspaces: Iterable[Subspace]):
        self.field = field
        self.ambient_n = ambient_n
        seen = {}
        total = 0
        for s in subspaces:
            if s.field != field or s.ambient_n != ambient_n:
                raise AmbientMismatch("codeword from a different ambient space")
            total += 1
            seen.setdefault(s.sort_key(), s)
        self.codewords: tuple[Subspace, ...] = tuple(
            seen[k] for k in sorted(seen)
        )
        self.duplicates_removed = total - len(self.codewords)
        dims = {s.dim for s in self.codewords}
        self.constant_dim = dims.pop() if len(dims) == 1 else None

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.codewords)

    def __getitem__(self, i: int) -> Subspace:
        return self.codewords[i]

    def min_distance(self) -> int:
        """Brute-force minimum of the subspace distance over all unordered pairs."""
        if len(self.codewords) < 2:
            raise TooFewCodewords("minimum distance needs at least two codewords")
        return min(
            subspace_distance(a, b)
            for a, b in itertools.combinations(self.codewords, 2)
        )

    def pairwise_intersection_dims(self) -> tuple[tuple[int, ...], ...]:
        """Triangular table: row i lists dim(C_i intersect C_j) for j < i."""
        table = []
        for i, a in enumerate(self.codewords):
            row = []
            for b in self.codewords[:i]:
                joint = a.basis.stack(b.basis).rank()
                row.append(a.dim + b.dim - joint)
            table.append(tuple(row))
        return tuple(table)

    def params(self) -> CodeParams:
        """The [n, max dim, log_q size, min distance] parameter tuple."""
        if not self.codewords:
            raise EmptyCode("parameters of an empty code")
        size = len(self.codewords)
        ell = max(s.dim for s in self.codewords)
        exact = round(math.log(size, self.field.q))
        if self.field.q**exact == size:
            log_q = float(exact)
        else:
            log_q = math.log(size) / math.log(self.field.q)
        dmin = self.min_distance() if size >= 2 else None
        return CodeParams(self.ambient_n, ell, log_q, dmin, size)

    # -- serialization -----------------------------------------------------------------

    def to_json(self) -> dict:
        """The code file format: {"q", "n", "codewords"}; round-trips exactly."""
        return {
            "q": self.field.spec,
            "n": self.ambient_n,
            "codewords": [s.to_json() for s in self.codewords],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GrassmannianCode":
        field = GF.from_spec(data["q"])
        n = int(data["n"])
        subs = [Subspace.from_json(field, n, rows) for rows in data["codewords"]]
        return cls(field, n, subs)

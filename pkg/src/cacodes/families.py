"""Families of equal-degree CA rules and the Grassmannian codes they generate.

The central fact exploited here: for two bipermutive linear rules of degree
k acting on n = 2k cells, the intersection of their kernels has dimension
deg(gcd) of the two rule polynomials.  Hence a family F of t distinct rule
polynomials yields a constant-dimension code whose minimum distance is

    D = 2k - 2 * max over pairs of deg(gcd(P_f, P_g)),

so distance prediction is pure polynomial GCD work, with pairwise-coprime
families giving equidistant codes of distance 2k.

Family membership is restricted to Poly_k(F_q): monic, degree k, nonzero
constant term.  The degree-1 irreducible X is therefore excluded everywhere
(its constant term is zero); the primed counts used below are

    I'_1 = q - 1,    I'_j = I_j for j >= 2,

with I_j the Gauss-formula count of monic irreducibles of degree j.  The
best coprime-family size is N_k = I'_k + sum_{j <= floor(k/2)} I'_j, and the
uniform-GCD construction realizes the analogous bound for any common gcd g.

``search_max_family`` is the independent oracle: exact branch-and-bound
maximum clique on the compatibility graph, deterministic lexicographic
tie-break, no heuristics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .algebra import GF, Polynomial, is_irreducible, monic_polynomials, poly_gcd
from .ca import LinearCA, LinearRule
from .errors import (
    BudgetExceeded,
    DegreeTooLarge,
    DuplicateMember,
    EmptyFamily,
    GNotMonic,
    GZeroConstant,
    InvalidDegree,
    NonPositive,
    NotBipermutive,
    TooFewMembers,
)
from .subspaces import GrassmannianCode


class CAFamily:
    """A set of distinct degree-k rule polynomials over one field.

    Every member must lie in Poly_k(F_q): monic, degree exactly k, nonzero
    constant term (i.e. a valid bipermutive rule).  Members keep the order
    they were given in; indices in GCD profiles refer to that order.
    """

    __slots__ = ("field", "k", "members")

    def __init__(self, members: Iterable[Polynomial]):
        polys = tuple(members)
        if not polys:
            raise EmptyFamily("a family needs at least one rule polynomial")
        self.field = polys[0].field
        k = polys[0].degree
        for f in polys:
            if f.field != self.field:
                raise NotBipermutive("family members must share one field")
            if f.degree != k:
                raise InvalidDegree(
                    f"family members must all have degree {k}, got {f.degree}"
                )
            LinearRule(f)  # monic, degree >= 1, nonzero constant term
        if len(set(polys)) != len(polys):
            raise DuplicateMember("family members must be pairwise distinct")
        self.k = int(k)
        self.members = polys

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Polynomial:
        return self.members[i]

    def __repr__(self):
        inner = ", ".join(f.display() for f in self.members)
        return f"CAFamily(k={self.k} over GF({self.field.spec}): {inner})"


@dataclass(frozen=True)
class GcdProfile:
    """Pairwise GCD-degree summary of a family.

    ``table`` is triangular: row i holds deg(gcd(f_i, f_j)) for j < i, so
    row 0 is empty.  ``witness_pair`` is the first (i, j), j < i, attaining
    the maximum in scan order.
    """

    max_gcd_degree: int
    witness_pair: tuple[int, int]
    table: tuple[tuple[int, ...], ...]


def gcd_profile(fam: CAFamily) -> GcdProfile:
    """All pairwise GCD degrees of a family (needs >= 2 members)."""
    if len(fam) < 2:
        raise TooFewMembers("a GCD profile needs at least two members")
    best, witness = -1, (1, 0)
    table = []
    for i, f in enumerate(fam.members):
        row = []
        for j, g in enumerate(fam.members[:i]):
            d = int(poly_gcd(f, g).degree)
            row.append(d)
            if d > best:
                best, witness = d, (j, i)
        table.append(tuple(row))
    return GcdProfile(best, witness, tuple(table))


def predicted_min_distance(fam: CAFamily) -> tuple[int, GcdProfile]:
    """Minimum distance of the family's code, from GCDs alone: 2k - 2 max deg gcd."""
    profile = gcd_profile(fam)
    return 2 * fam.k - 2 * profile.max_gcd_degree, profile


def code_from_family(fam: CAFamily) -> GrassmannianCode:
    """The Grassmannian code of the family: kernels of all members at n = 2k.

    Distinct members always give distinct kernels (their pairwise kernel
    intersections have dimension deg gcd < k), so the code size normally
    equals the family size; any collapse is visible in the returned code's
    ``duplicates_removed``.
    """
    if not fam.members:
        raise EmptyFamily("cannot build a code from an empty family")
    n = 2 * fam.k
    kernels = [LinearCA(f, n).kernel() for f in fam.members]
    return GrassmannianCode(fam.field, n, kernels)


# -- counting ------------------------------------------------------------------------


def mobius(n: int) -> int:
    """Moebius function: 0 on squared factors, else (-1)^(number of primes)."""
    if n < 1:
        raise NonPositive(f"mobius needs n >= 1, got {n}")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def count_irreducibles(n: int, field: GF, exclude_x: bool = False) -> int:
    """Number of monic irreducibles of degree n over GF(q), by Gauss's formula.

    I_n = (1/n) sum over d | n of mobius(d) q^(n/d).  With ``exclude_x`` the
    polynomial X is not counted, so degree 1 gives q - 1; higher degrees are
    unaffected (X only has degree 1).
    """
    if n < 1:
        raise NonPositive(f"degree must be >= 1, got {n}")
    q = field.q
    total = sum(mobius(d) * q ** (n // d) for d in _divisors(n))
    count = total // n
    if exclude_x and n == 1:
        count -= 1
    return count


def enumerate_irreducibles(
    n: int, field: GF, exclude_x: bool = False
) -> tuple[Polynomial, ...]:
    """All monic irreducibles of degree n, lexicographic order (oracle route).

    Independent of the Gauss formula: plain trial division over the full
    list of monic polynomials.  ``exclude_x`` drops X (degree 1 only).
    """
    if n < 1:
        raise NonPositive(f"degree must be >= 1, got {n}")
    out = []
    for f in monic_polynomials(field, n):
        if exclude_x and n == 1 and f.coeffs[0].code == 0:
            continue
        if is_irreducible(f):
            out.append(f)
    return tuple(out)


def max_coprime_family_size(k: int, field: GF) -> int:
    """Largest pairwise-coprime subset of Poly_k(F_q): N_k from the primed counts."""
    if k < 1:
        raise NonPositive(f"degree must be >= 1, got {k}")
    total = count_irreducibles(k, field, exclude_x=True)
    for j in range(1, k // 2 + 1):
        total += count_irreducibles(j, field, exclude_x=True)
    return total


def enumerate_rule_polynomials(k: int, field: GF) -> tuple[Polynomial, ...]:
    """Poly_k(F_q): monic degree-k polynomials with nonzero constant term, lex order."""
    if k < 1:
        raise NonPositive(f"degree must be >= 1, got {k}")
    return tuple(
        f for f in monic_polynomials(field, k) if f.coeffs[0].code != 0
    )


# -- uniform-GCD construction ---------------------------------------------------------


def uniform_gcd_family(k: int, g: Polynomial) -> tuple[Polynomial, ...]:
    """Largest-known family in Poly_k(F_q) with every pairwise gcd exactly g.

    With t = deg(g) and r = k - t, the cofactors are the irreducibles of
    degree r (X excluded) plus one product per lower degree i <= r/2: the
    j-th element of sorted I'_i times the j-th element of sorted I'_(r-i)
    (squares when i = r - i).  Injective pairing keeps cofactors pairwise
    coprime, so gcd(g*h1, g*h2) = g exactly.  Cardinality:
    I'_r + sum_{i=1}^{floor(r/2)} I'_i.  Returns members in lexicographic
    order; t = k returns just (g,).
    """
    field = g.field
    if k < 1:
        raise NonPositive(f"degree must be >= 1, got {k}")
    if not g.is_monic():
        raise GNotMonic("common gcd g must be monic")
    if g.constant_term().code == 0:
        raise GZeroConstant("common gcd g must have a nonzero constant term")
    t = int(g.degree)
    if t > k:
        raise DegreeTooLarge(f"deg(g) = {t} exceeds the family degree k = {k}")
    r = k - t
    if r == 0:
        return (g,)
    cofactors = list(enumerate_irreducibles(r, field, exclude_x=True))
    for i in range(1, r // 2 + 1):
        low = enumerate_irreducibles(i, field, exclude_x=True)
        if i < r - i:
            high = enumerate_irreducibles(r - i, field, exclude_x=True)
            cofactors += [u * v for u, v in zip(low, high)]
        else:
            cofactors += [u * u for u in low]
    members = sorted((g * h for h in cofactors), key=Polynomial.to_codes)
    return tuple(members)


def expected_uniform_gcd_size(k: int, t: int, field: GF) -> int:
    """Predicted cardinality of uniform_gcd_family: I'_(k-t) + sum_{i<=r/2} I'_i."""
    if k < 1:
        raise NonPositive(f"degree must be >= 1, got {k}")
    if t > k or t < 0:
        raise DegreeTooLarge(f"gcd degree {t} out of range for k = {k}")
    r = k - t
    if r == 0:
        return 1
    total = count_irreducibles(r, field, exclude_x=True)
    for i in range(1, r // 2 + 1):
        total += count_irreducibles(i, field, exclude_x=True)
    return total


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of verify_family: ok, or the first violation in ``detail``."""

    ok: bool
    mode: str  # "exact-gcd" or "max-degree"
    k: int | None
    pairs_checked: int
    detail: str = ""


def verify_family(
    members: Sequence[Polynomial],
    g: Polynomial | None = None,
    t: int | None = None,
) -> FamilyReport:
    """Check Poly_k membership and the pairwise GCD condition.

    Exactly one of ``g`` (every pairwise gcd must equal g) or ``t`` (every
    pairwise gcd degree must be <= t) selects the mode.  Stops at the first
    violation; violations are report content, never exceptions.
    """
    if (g is None) == (t is None):
        raise ValueError("pass exactly one of g (exact mode) or t (bound mode)")
    mode = "exact-gcd" if g is not None else "max-degree"
    polys = list(members)
    if not polys:
        return FamilyReport(False, mode, None, 0, "family is empty")
    k = polys[0].degree
    for i, f in enumerate(polys):
        if f.is_zero() or not f.is_monic():
            return FamilyReport(False, mode, None, 0, f"member {i} is not monic")
        if f.degree != k:
            return FamilyReport(
                False, mode, None, 0,
                f"member {i} has degree {f.degree}, expected {k}",
            )
        if f.constant_term().code == 0:
            return FamilyReport(
                False, mode, None, 0, f"member {i} has zero constant term"
            )
    pairs = 0
    for i, j in itertools.combinations(range(len(polys)), 2):
        d = poly_gcd(polys[i], polys[j])
        pairs += 1
        if g is not None and d != g:
            return FamilyReport(
                False, mode, int(k), pairs,
                f"gcd of members {i},{j} is {d.to_string()}, expected {g.to_string()}",
            )
        if t is not None and d.degree > t:
            return FamilyReport(
                False, mode, int(k), pairs,
                f"gcd of members {i},{j} has degree {d.degree} > {t}",
            )
    return FamilyReport(True, mode, int(k), pairs)


# -- exact maximum-family search --------------------------------------------------------


def _max_clique(adjacency: list[set[int]]) -> tuple[int, ...]:
    """Exact branch-and-bound maximum clique; first (lex-smallest) optimum wins.

    Vertices are expanded in index order and the incumbent is replaced only
    on strict improvement, so the result is the lexicographically smallest
    maximum clique.
    """
    n = len(adjacency)
    best: list[int] = []

    def expand(current: list[int], candidates: list[int]) -> None:
        nonlocal best
        if not candidates:
            if len(current) > len(best):
                best = current[:]
            return
        if len(current) + len(candidates) <= len(best):
            return
        for idx, v in enumerate(candidates):
            if len(current) + len(candidates) - idx <= len(best):
                return
            current.append(v)
            nxt = [u for u in candidates[idx + 1:] if u in adjacency[v]]
            expand(current, nxt)
            current.pop()

    expand([], list(range(n)))
    return tuple(best)


def search_max_family(
    k: int, t: int, field: GF, budget: int = 512
) -> tuple[Polynomial, ...]:
    """Exact maximum family in Poly_k(F_q) with pairwise gcd degree <= t.

    Ground-truth oracle: maximum clique on the compatibility graph, so only
    small instances are allowed (|Poly_k| <= budget).  Deterministic: the
    lexicographically smallest optimum is returned, members in lex order.
    """
    if k < 1:
        raise NonPositive(f"degree must be >= 1, got {k}")
    if t < 0:
        raise NonPositive(f"gcd degree bound must be >= 0, got {t}")
    vertices = enumerate_rule_polynomials(k, field)
    if len(vertices) > budget:
        raise BudgetExceeded(
            f"|Poly_{k}(F_{field.q})| = {len(vertices)} exceeds budget {budget}"
        )
    adjacency = _compatibility(vertices, lambda d: int(d.degree) <= t)
    clique = _max_clique(adjacency)
    return tuple(vertices[i] for i in clique)


def search_max_exact_gcd(
    k: int, g: Polynomial, budget: int = 512
) -> tuple[Polynomial, ...]:
    """Exact maximum family of multiples of g in Poly_k with pairwise gcd = g.

    Oracle counterpart of uniform_gcd_family.  Equivalent to a maximum
    pairwise-coprime set of cofactors in Poly_(k-t), scaled back by g.
    """
    field = g.field
    if k < 1:
        raise NonPositive(f"degree must be >= 1, got {k}")
    if not g.is_monic():
        raise GNotMonic("common gcd g must be monic")
    if g.constant_term().code == 0:
        raise GZeroConstant("common gcd g must have a nonzero constant term")
    t = int(g.degree)
    if t > k:
        raise DegreeTooLarge(f"deg(g) = {t} exceeds the family degree k = {k}")
    if t == k:
        return (g,)
    vertices = enumerate_rule_polynomials(k - t, field)
    if len(vertices) > budget:
        raise BudgetExceeded(
            f"{len(vertices)} candidate cofactors exceed budget {budget}"
        )
    adjacency = _compatibility(vertices, lambda d: d.is_one())
    clique = _max_clique(adjacency)
    members = sorted((g * vertices[i] for i in clique), key=Polynomial.to_codes)
    return tuple(members)


def _compatibility(vertices: Sequence[Polynomial], accept) -> list[set[int]]:
    adjacency: list[set[int]] = [set() for _ in vertices]
    for i, j in itertools.combinations(range(len(vertices)), 2):
        if accept(poly_gcd(vertices[i], vertices[j])):
            adjacency[i].add(j)
            adjacency[j].add(i)
    return adjacency

"""Exact arithmetic in GF(q), q = p^m, and in the polynomial ring GF(q)[X].

Representation conventions used throughout the library:

* A field element is a vector of m coefficients (a_0, ..., a_{m-1}) over the
  prime subfield, ascending powers of the adjoined root.  Elements are
  encoded as the integer a_0 + a_1*p + ... + a_{m-1}*p^(m-1); for a prime
  field (m = 1) the code is just the residue.  ``GF`` exposes arithmetic on
  integer codes; ``GFElement`` is the operator-overloaded wrapper around one
  code.
* A polynomial is a coefficient list in ascending powers with no trailing
  zeros: the canonical form.  The zero polynomial has an empty coefficient
  list and degree ``-inf`` (a distinguished marker, never the integer 0).
* GCDs are always returned monic, so they are unique.

Extension fields are supported for m <= 4.  The reducing modulus is chosen
deterministically as the lexicographically smallest monic irreducible of
degree m over GF(p), comparing ascending-power coefficient vectors with
0 < 1 < ... < p-1.

Text formats (used by the CLI and the JSON files):

* field spec: ``"p"`` or ``"p^m"``, e.g. ``"2"``, ``"3"``, ``"2^2"``;
* polynomial: comma-separated ascending coefficients, e.g. ``"1,1,1"`` for
  1 + X + X^2 over GF(2); over an extension field each coefficient is an
  m-tuple in brackets, e.g. ``"[0,1],[1,0]"``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .errors import (
    BothZero,
    DivisionByZero,
    FieldMismatch,
    InvalidDegree,
    NotPrime,
    ZeroPolynomial,
)

NEG_INF = float("-inf")  # degree of the zero polynomial

_MAX_EXTENSION_DEGREE = 4
_TABLE_LIMIT = 4096  # build q x q multiplication tables below this order


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class GF:
    """The finite field of order q = p^m.

    Arithmetic methods (``add``, ``mul``, ``inv``, ...) operate on integer
    element codes in [0, q); ``element`` wraps a code into a ``GFElement``.
    Instances are immutable and hashable; two instances of the same order
    compare equal.
    """

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise InvalidDegree(f"extension degree must be >= 1, got {m}")
        if m > _MAX_EXTENSION_DEGREE:
            raise InvalidDegree(
                f"extension degree must be <= {_MAX_EXTENSION_DEGREE}, got {m}"
            )
        self.p = p
        self.m = m
        self.q = p**m
        self._mod_codes: tuple[int, ...] | None = None
        self._xpow: list[tuple[int, ...]] = []
        self._mul_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        if m > 1:
            self._mod_codes = _smallest_irreducible_modulus(p, m)
            self._build_reduction_rows()
            if self.q <= _TABLE_LIMIT:
                self._build_tables()

    # -- identity ------------------------------------------------------------

    @property
    def spec(self) -> str:
        """Field spec string: ``"p"`` for prime fields, else ``"p^m"``."""
        return str(self.p) if self.m == 1 else f"{self.p}^{self.m}"

    @classmethod
    def from_spec(cls, spec: str) -> "GF":
        """Parse a field spec string such as ``"2"`` or ``"2^2"``."""
        parts = spec.strip().split("^")
        if len(parts) == 1:
            return cls(int(parts[0]))
        if len(parts) == 2:
            return cls(int(parts[0]), int(parts[1]))
        raise InvalidDegree(f"malformed field spec {spec!r}")

    @property
    def modulus(self) -> "Polynomial | None":
        """The reducing modulus as a polynomial over GF(p); None for m = 1."""
        if self._mod_codes is None:
            return None
        return Polynomial(GF(self.p), self._mod_codes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return self.p == other.p and self.m == other.m

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __repr__(self) -> str:
        return f"GF({self.spec})"

    # -- code <-> coefficient vector ------------------------------------------

    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for a in reversed(coeffs):
            code = code * self.p + (a % self.p)
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    # -- arithmetic on integer codes -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self.encode(
            [(x + y) % self.p for x, y in zip(self.decode(a), self.decode(b))]
        )

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.encode(
            [(x - y) % self.p for x, y in zip(self.decode(a), self.decode(b))]
        )

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.encode([(-x) % self.p for x in self.decode(a)])

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- element construction ---------------------------------------------------

    def element(self, value: "int | Sequence[int] | GFElement") -> "GFElement":
        """Coerce an integer code, coefficient vector, or element into this field.

        Plain integers are taken mod p and embedded via the prime subfield,
        so ``element(1)`` is the multiplicative identity in every field.
        """
        if isinstance(value, GFElement):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, int):
            return GFElement(self, value % self.p)
        coeffs = tuple(value)
        if len(coeffs) != self.m:
            raise FieldMismatch(
                f"expected {self.m} coefficients for {self}, got {len(coeffs)}"
            )
        return GFElement(self, self.encode(coeffs))

    def code_of(self, value: "int | GFElement") -> int:
        """Integer code of a value given as an element or a raw code.

        Plain ints are residues mod p for prime fields; for extension fields
        they must already be valid codes in [0, q).
        """
        if isinstance(value, GFElement):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value.code
        v = int(value)
        if self.m == 1:
            return v % self.p
        if not 0 <= v < self.q:
            raise FieldMismatch(f"code {v} out of range for {self}")
        return v

    @property
    def zero(self) -> "GFElement":
        return GFElement(self, 0)

    @property
    def one(self) -> "GFElement":
        return GFElement(self, 1)

    def elements(self) -> Iterator["GFElement"]:
        """All q elements in ascending code order."""
        for code in range(self.q):
            yield GFElement(self, code)

    # -- internal: extension-field machinery -----------------------------------

    def _build_reduction_rows(self) -> None:
        # _xpow[j] = coefficient vector of X^(m+j) reduced mod the modulus
        assert self._mod_codes is not None
        p, m = self.p, self.m
        head = [(-c) % p for c in self._mod_codes[:m]]  # X^m
        rows = [tuple(head)]
        for _ in range(m - 2):
            prev = rows[-1]
            shifted = [0] + list(prev[: m - 1])
            carry = prev[m - 1]
            rows.append(
                tuple((shifted[i] + carry * head[i]) % p for i in range(m))
            )
        self._xpow = rows

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        av, bv = self.decode(a), self.decode(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(av):
            if x:
                for j, y in enumerate(bv):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:m]]
        for j in range(m, 2 * m - 1):
            c = conv[j] % p
            if c:
                row = self._xpow[j - m]
                for i in range(m):
                    out[i] = (out[i] + c * row[i]) % p
        return self.encode(out)

    def _build_tables(self) -> None:
        q = self.q
        table = [0] * (q * q)
        for a in range(1, q):
            base = a * q
            for b in range(1, q):
                table[base + b] = self._mul_slow(a, b)
        self._mul_table = table
        inv = [0] * q
        for a in range(1, q):
            base = a * q
            for b in range(1, q):
                if table[base + b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv


class GFElement:
    """One element of a ``GF`` field, wrapping its integer code.

    Supports +, -, *, /, unary -, ** with the usual field semantics.
    """

    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector over the prime subfield, ascending powers."""
        return self.field.decode(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def inverse(self) -> "GFElement":
        return GFElement(self.field, self.field.inv(self.code))

    def _coerce(self, other) -> int:
        if isinstance(other, GFElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"mixing elements of {self.field} and {other.field}"
                )
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return GFElement(self.field, self.field.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return GFElement(self.field, self.field.sub(self.code, code))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GFElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return GFElement(self.field, self.field.mul(self.code, code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return GFElement(self.field, self.field.mul(self.code, self.field.inv(code)))

    def __pow__(self, n: int):
        return GFElement(self.field, self.field.pow(self.code, n))

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        if self.field.m == 1:
            return str(self.code)
        return str(list(self.coeffs))


class Polynomial:
    """A polynomial over GF(q) in canonical ascending-coefficient form.

    ``coeffs`` holds GFElement coefficients with no trailing zeros; the zero
    polynomial has no coefficients and degree ``NEG_INF``.  Instances are
    immutable; all operators allocate fresh results.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int | Sequence[int] | GFElement] = ()):
        self.field = field
        elems = [field.element(c) for c in coeffs]
        while elems and elems[-1].code == 0:
            elems.pop()
        self.coeffs = tuple(elems)

    # -- basic structure ---------------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].code == 1

    def constant_term(self) -> GFElement:
        return self.coeffs[0] if self.coeffs else self.field.zero

    def leading(self) -> GFElement:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].code == 1

    def monic(self) -> "Polynomial":
        """Rescale so that the leading coefficient is 1."""
        if self.is_zero() or self.is_monic():
            return self
        lead_inv = self.field.inv(self.coeffs[-1].code)
        return Polynomial.from_codes(
            self.field, [self.field.mul(c.code, lead_inv) for c in self.coeffs]
        )

    def to_codes(self) -> tuple[int, ...]:
        """Ascending coefficient codes; the canonical sort key."""
        return tuple(c.code for c in self.coeffs)

    @classmethod
    def from_codes(cls, field: GF, codes: Iterable[int]) -> "Polynomial":
        """Build from ascending integer element codes (no mod-p embedding)."""
        return cls(field, [GFElement(field, c) for c in codes])

    # -- ring operations -----------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(
                f"mixing polynomials over {self.field} and {other.field}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        gf = self.field
        a, b = self.to_codes(), other.to_codes()
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = gf.add(out[i], c)
        return Polynomial.from_codes(gf, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        gf = self.field
        return Polynomial.from_codes(gf, [gf.neg(c) for c in self.to_codes()])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field)
        gf = self.field
        a, b = self.to_codes(), other.to_codes()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = gf.add(out[i + j], gf.mul(x, y))
        return Polynomial.from_codes(gf, out)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial(self.field, [1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        gf = self.field
        dd = other.degree
        rem = list(self.to_codes())
        if self.degree < dd:
            return Polynomial(gf), self
        quot = [0] * (len(rem) - dd)
        lead_inv = gf.inv(other.coeffs[-1].code)
        dcodes = other.to_codes()
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            factor = gf.mul(c, lead_inv)
            quot[i - dd] = factor
            for j, dc in enumerate(dcodes):
                rem[i - dd + j] = gf.sub(rem[i - dd + j], gf.mul(factor, dc))
        return Polynomial.from_codes(gf, quot), Polynomial.from_codes(gf, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x: GFElement | int) -> GFElement:
        """Evaluate via Horner's scheme."""
        gf = self.field
        xc = gf.element(x).code
        acc = 0
        for c in reversed(self.to_codes()):
            acc = gf.add(gf.mul(acc, xc), c)
        return GFElement(gf, acc)

    # -- identity -------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.to_codes() == other.to_codes()

    def __hash__(self):
        return hash((self.field, self.to_codes()))

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, GF({self.field.spec}))"

    def __str__(self):
        return self.display()

    # -- text format ------------------------------------------------------------------

    def to_string(self) -> str:
        """Canonical comma-separated coefficient string (ascending powers)."""
        if self.is_zero():
            return "0"
        if self.field.m == 1:
            return ",".join(str(c) for c in self.to_codes())
        return ",".join(
            "[" + ",".join(str(a) for a in c.coeffs) + "]" for c in self.coeffs
        )

    @classmethod
    def from_string(cls, field: GF, text: str) -> "Polynomial":
        """Parse the comma-separated coefficient format."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        if "[" in text:
            coeffs = []
            for token in _split_bracketed(text):
                parts = [int(t) for t in token.strip().lstrip("[").rstrip("]").split(",")]
                if len(parts) != field.m:
                    raise FieldMismatch(
                        f"coefficient {token!r} is not a {field.m}-tuple"
                    )
                coeffs.append(parts)
            return cls(field, coeffs)
        return cls(field, [int(t) % field.p for t in text.split(",")])

    def display(self) -> str:
        """Human-readable rendering such as ``1 + X + X^2``; never parsed back."""
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.code == 0:
                continue
            if self.field.m == 1:
                cs = str(c.code)
            else:
                cs = "(" + ",".join(str(a) for a in c.coeffs) + ")"
            if i == 0:
                terms.append(cs)
            else:
                x = "X" if i == 1 else f"X^{i}"
                terms.append(x if cs == "1" else f"{cs}{x}")
        return " + ".join(terms)


def _split_bracketed(text: str) -> list[str]:
    # split on commas that are not inside brackets
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


# -- GCD machinery ---------------------------------------------------------------------


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm.

    ``poly_gcd(f, 0)`` is ``f.monic()``; both arguments zero is an error.
    """
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Extended Euclid: returns (d, u, v) with u*f + v*g = d, d monic."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    gf = f.field
    zero, one = Polynomial(gf), Polynomial(gf, [1])
    r0, r1 = f, g
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_monic():
        return r0, s0, t0
    scale = Polynomial(gf, [GFElement(gf, gf.inv(r0.coeffs[-1].code))])
    return r0.monic(), scale * s0, scale * t0


# -- irreducibility ----------------------------------------------------------------------


def monic_polynomials(field: GF, degree: int) -> Iterator[Polynomial]:
    """All monic polynomials of the given degree, in lexicographic order.

    Order: ascending-power coefficient vectors compared left to right, with
    field elements ordered by their integer codes.
    """
    if degree < 0:
        return
    for lower in itertools.product(range(field.q), repeat=degree):
        yield Polynomial(field, [GFElement(field, c) for c in lower] + [field.one])


def is_irreducible(f: Polynomial) -> bool:
    """Trial-division irreducibility test (desk scale: degrees <= ~12)."""
    d = f.degree
    if d is NEG_INF or d < 1:
        return False
    if d == 1:
        return True
    # linear factors first: cheap root scan
    for code in range(f.field.q):
        if f(GFElement(f.field, code)).code == 0:
            return False
    if d <= 3:
        return True
    for e in range(2, int(d) // 2 + 1):
        for g in _irreducibles_cached(f.field, e):
            if (f % g).is_zero():
                return False
    return True


_IRR_CACHE: dict[tuple[int, int, int], tuple[Polynomial, ...]] = {}


def _irreducibles_cached(field: GF, degree: int) -> tuple[Polynomial, ...]:
    key = (field.p, field.m, degree)
    if key not in _IRR_CACHE:
        _IRR_CACHE[key] = tuple(
            g for g in monic_polynomials(field, degree) if is_irreducible(g)
        )
    return _IRR_CACHE[key]


def _smallest_irreducible_modulus(p: int, m: int) -> tuple[int, ...]:
    base = GF(p)
    for candidate in monic_polynomials(base, m):
        if is_irreducible(candidate):
            return candidate.to_codes()
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")  # unreachable

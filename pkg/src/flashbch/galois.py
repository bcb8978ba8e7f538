"""GF(2^m) arithmetic with log/antilog tables.

Field elements are plain ints holding polynomial-basis bits: bit ``i`` is
the coefficient of ``alpha**i``. Tables are numpy arrays so that the
decoder can do vectorized evaluation over many exponents at once.
"""

from dataclasses import dataclass, field

import numpy as np

from . import gf2poly
from .errors import BadDegree, DivisionByZero, FieldMismatch, NonPrimitivePolynomial

# Conventional minimum-weight primitive polynomials, bit i = coefficient of x^i.
DEFAULT_PRIMITIVE_POLYS = {
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

MIN_M, MAX_M = 3, 16


@dataclass(frozen=True)
class FieldSpec:
    m: int
    primitive_poly: int

    @classmethod
    def default(cls, m):
        try:
            return cls(m, DEFAULT_PRIMITIVE_POLYS[m])
        except KeyError:
            raise BadDegree(f"m must lie in [{MIN_M}, {MAX_M}], got {m}") from None

    def validate(self):
        if not MIN_M <= self.m <= MAX_M:
            raise BadDegree(f"m must lie in [{MIN_M}, {MAX_M}], got {self.m}")
        if gf2poly.degree(self.primitive_poly) != self.m:
            raise BadDegree(
                f"primitive polynomial {self.primitive_poly:#x} has degree "
                f"{gf2poly.degree(self.primitive_poly)}, expected {self.m}")
        if not self.primitive_poly & 1:
            raise NonPrimitivePolynomial(
                f"primitive polynomial {self.primitive_poly:#x} has zero constant term")


class GaloisField:
    """Immutable GF(2^m) with antilog (``alpha**i``) and log tables.

    Build through :func:`build_field`, which checks primitivity.
    """

    def __init__(self, spec, antilog):
        self.spec = spec
        self.m = spec.m
        self.size = 1 << spec.m
        self.order = self.size - 1
        antilog = np.asarray(antilog, dtype=np.int64)
        log = np.full(self.size, -1, dtype=np.int64)
        log[antilog] = np.arange(self.order, dtype=np.int64)
        antilog.setflags(write=False)
        log.setflags(write=False)
        self.antilog = antilog
        self.log = log

    def __repr__(self):
        return f"GaloisField(m={self.m}, primitive_poly={self.spec.primitive_poly:#x})"

    def __eq__(self, other):
        return isinstance(other, GaloisField) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def check(self, *elems):
        for e in elems:
            if not 0 <= e < self.size:
                raise FieldMismatch(f"{e!r} is not an element of GF(2^{self.m})")

    def alpha(self, e):
        """``alpha**e`` for any integer exponent (negative allowed)."""
        return int(self.antilog[e % self.order])

    def add(self, a, b):
        self.check(a, b)
        return a ^ b

    def mul(self, a, b):
        self.check(a, b)
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(self.log[a] + self.log[b]) % self.order])

    def inv(self, a):
        self.check(a)
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return int(self.antilog[-self.log[a] % self.order])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        self.check(a)
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero raised to a negative power")
            return 1 if e == 0 else 0
        return int(self.antilog[(int(self.log[a]) * e) % self.order])

    def eval_poly(self, coeffs, x):
        """Horner evaluation of ``sum(coeffs[i] * x**i)`` with field coefficients."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.mul(acc, x) ^ c
        return acc

    def mul_const_vec(self, values, exponents):
        """Elementwise ``values * alpha**exponents`` for numpy int arrays."""
        values = np.asarray(values, dtype=np.int64)
        logs = self.log[values]
        out = self.antilog[(logs + exponents) % self.order]
        return np.where(values == 0, 0, out)


def build_field(spec):
    """Construct the tables for ``spec``; raises if the polynomial is not primitive."""
    spec.validate()
    m, poly = spec.m, spec.primitive_poly
    order = (1 << m) - 1
    antilog = np.empty(order, dtype=np.int64)
    seen = np.zeros(1 << m, dtype=bool)
    x = 1
    for i in range(order):
        if seen[x]:
            raise NonPrimitivePolynomial(
                f"{gf2poly.to_str(poly)} is not primitive: alpha has order {i}, "
                f"not {order}")
        seen[x] = True
        antilog[i] = x
        x <<= 1
        if x >> m:
            x ^= poly
    if x != 1:
        # reachable only when poly is reducible with a non-unit cycle structure
        raise NonPrimitivePolynomial(f"{gf2poly.to_str(poly)} is not primitive")
    return GaloisField(spec, antilog)


def conjugacy_class(gf, exponent):
    """Cyclotomic coset ``{exponent * 2**j mod (2^m - 1)}`` in generation order."""
    e = exponent % gf.order
    out = []
    while e not in out:
        out.append(e)
        e = (2 * e) % gf.order
    return out


def minimal_polynomial(gf, exponent):
    """Minimal polynomial of ``alpha**exponent`` over GF(2), as a packed int.

    Computed as the product of ``(X - alpha**c)`` over the conjugacy class.
    """
    if not 0 <= exponent < gf.order:
        raise ValueError(f"exponent must lie in [0, {gf.order - 1}], got {exponent}")
    coeffs = [1]  # field coefficients, index = power of X
    for c in conjugacy_class(gf, exponent):
        root = gf.alpha(c)
        nxt = [0] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i + 1] ^= a
            nxt[i] ^= gf.mul(a, root)
        coeffs = nxt
    if any(c not in (0, 1) for c in coeffs):
        raise AssertionError("conjugacy product left GF(2)")  # cannot happen in a field
    return sum(1 << i for i, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class MastrovitoMatrix:
    """Binary matrix of the constant multiplier ``B -> alpha**c * B``.

    ``rows[r, j]`` is bit ``r`` of ``alpha**(c + j)``, so output bit ``r`` is
    the XOR of the operand bits ``b_j`` with ``rows[r, j] == 1``.
    """

    constant_exponent: int
    rows: np.ndarray = field(repr=False)

    @property
    def m(self):
        return self.rows.shape[0]

    def row_terms(self, r):
        return tuple(int(j) for j in np.flatnonzero(self.rows[r]))

    def apply(self, operand):
        bits = gf2poly.to_bits(operand, self.m)
        out = (self.rows.astype(np.int64) @ bits) & 1
        return gf2poly.from_bits(out)

    def xor_count(self):
        return int(sum(max(int(r.sum()) - 1, 0) for r in self.rows))


def mastrovito_matrix(gf, constant_exponent):
    if not 0 <= constant_exponent < gf.order:
        raise ValueError(
            f"constant exponent must lie in [0, {gf.order - 1}], got {constant_exponent}")
    m = gf.m
    rows = np.zeros((m, m), dtype=np.uint8)
    for j in range(m):
        rows[:, j] = gf2poly.to_bits(gf.alpha(constant_exponent + j), m)
    rows.setflags(write=False)
    return MastrovitoMatrix(constant_exponent, rows)

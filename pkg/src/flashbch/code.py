"""Narrow-sense binary BCH code construction, including shortened codes."""

from dataclasses import dataclass

from . import gf2poly
from .errors import InvalidT, MessageTooLong
from .galois import FieldSpec, GaloisField, build_field, conjugacy_class, minimal_polynomial


def generator_polynomial(gf, t):
    """LCM of the minimal polynomials of alpha^1 .. alpha^2t.

    Minimal polynomials of distinct conjugacy classes are coprime, so the LCM
    is the product over one representative per class.
    """
    if t < 1 or 2 * t >= gf.order:
        raise InvalidT(f"t={t} outside 1 <= t, 2t < {gf.order}")
    covered = set()
    g = 1
    for e in range(1, 2 * t + 1):
        if e in covered:
            continue
        coset = conjugacy_class(gf, e)
        covered.update(coset)
        g = gf2poly.mul(g, minimal_polynomial(gf, e))
    return g


@dataclass(frozen=True)
class CodeSpec:
    gf: GaloisField
    t: int
    generator: int
    shorten_by: int = 0

    @property
    def field(self):
        return self.gf.spec

    @property
    def m(self):
        return self.gf.m

    @property
    def n_full(self):
        return self.gf.order

    @property
    def redundancy(self):
        return gf2poly.degree(self.generator)

    @property
    def n(self):
        return self.n_full - self.shorten_by

    @property
    def k(self):
        return self.n - self.redundancy

    @property
    def rate(self):
        return self.k / self.n

    def describe(self):
        return (f"n={self.n} k={self.k} t={self.t} redundancy={self.redundancy} "
                f"shorten_by={self.shorten_by}")


def make_code(field, t, target_k=None):
    """Build a (possibly shortened) BCH code correcting ``t`` errors.

    ``field`` may be a :class:`FieldSpec` or an already-built
    :class:`GaloisField`. With ``target_k=None`` the full-length code is
    returned.
    """
    gf = field if isinstance(field, GaloisField) else build_field(field)
    g = generator_polynomial(gf, t)
    full_k = gf.order - gf2poly.degree(g)
    if target_k is None:
        target_k = full_k
    if target_k < 1:
        raise MessageTooLong(f"message length must be at least 1, got {target_k}")
    if target_k > full_k:
        raise MessageTooLong(
            f"k={target_k} exceeds {full_k}, the dimension of the full-length "
            f"t={t} code over GF(2^{gf.m})")
    spec = CodeSpec(gf, t, g, full_k - target_k)
    _verify(spec)
    return spec


def _verify(spec):
    gf = spec.gf
    assert gf2poly.mod((1 << spec.n_full) | 1, spec.generator) == 0
    assert spec.redundancy <= spec.m * spec.t
    coeffs = [spec.generator >> i & 1 for i in range(spec.redundancy + 1)]
    for e in range(1, 2 * spec.t + 1):
        assert gf.eval_poly(coeffs, gf.alpha(e)) == 0, f"alpha^{e} is not a root of g"


__all__ = ["CodeSpec", "FieldSpec", "generator_polynomial", "make_code"]

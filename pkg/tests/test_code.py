import pytest

from flashbch import gf2poly
from flashbch.code import generator_polynomial, make_code
from flashbch.errors import InvalidT, MessageTooLong
from flashbch.galois import FieldSpec, build_field

from oracles import eval_binary_poly, int_to_list, poly_rem_list


def brute_force_generator(m, poly, t):
    """Product of (X - alpha^e) over the closure of {1..2t} under doubling,
    found by testing every exponent's membership directly."""
    order = (1 << m) - 1
    roots = set()
    for e in range(1, 2 * t + 1):
        x = e
        while x not in roots:
            roots.add(x)
            x = 2 * x % order
    return roots


@pytest.mark.parametrize("t,expected", [(1, 0x13), (2, 0x1D1), (3, 0x537)])
def test_gf16_generators(gf16, t, expected):
    g = generator_polynomial(gf16, t)
    assert g == expected
    # oracle: divides x^15 + 1 and has exactly the expected roots
    assert not any(poly_rem_list(int_to_list((1 << 15) | 1), int_to_list(g)))
    powers = [gf16.alpha(e) for e in range(15)]
    roots = {e for e, x in enumerate(powers) if eval_binary_poly(4, 0x13, g, x) == 0}
    assert roots == brute_force_generator(4, 0x13, t)
    assert gf2poly.degree(g) == len(roots)


@pytest.mark.parametrize("t,n,k", [(1, 15, 11), (2, 15, 7), (3, 15, 5)])
def test_full_length_codes(gf16, t, n, k):
    spec = make_code(gf16, t)
    assert (spec.n, spec.k, spec.shorten_by) == (n, k, 0)


def test_nor_flash_t2(nor_t2):
    assert (nor_t2.redundancy, nor_t2.n, nor_t2.k) == (18, 274, 256)
    assert nor_t2.shorten_by == 511 - 18 - 256


def test_nor_flash_t3(nor_t3):
    assert (nor_t3.redundancy, nor_t3.n, nor_t3.k) == (27, 283, 256)


@pytest.mark.parametrize("m,t", [(5, 2), (6, 3), (8, 4), (9, 3), (10, 5), (13, 4)])
def test_generator_invariants(m, t):
    gf = build_field(FieldSpec.default(m))
    g = generator_polynomial(gf, t)
    assert gf2poly.mod((1 << gf.order) | 1, g) == 0
    assert gf2poly.degree(g) <= m * t
    for e in range(1, 2 * t + 1):
        assert eval_binary_poly(m, gf.spec.primitive_poly, g, gf.alpha(e)) == 0


def test_degree_equals_mt_for_full_classes(gf512):
    for t in range(1, 6):
        assert gf2poly.degree(generator_polynomial(gf512, t)) == 9 * t


def test_errors(gf16):
    with pytest.raises(InvalidT):
        make_code(gf16, 0)
    with pytest.raises(InvalidT):
        make_code(gf16, 8)
    with pytest.raises(MessageTooLong):
        make_code(gf16, 2, 8)
    with pytest.raises(MessageTooLong):
        make_code(gf16, 2, 0)


def test_accepts_field_spec():
    spec = make_code(FieldSpec(9, 0x211), 2, 256)
    assert spec.field == FieldSpec(9, 0x211)
    assert spec.describe() == "n=274 k=256 t=2 redundancy=18 shorten_by=237"

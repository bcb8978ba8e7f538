"""Build GF(2^9), derive the t=2 BCH generator, and shorten it to 256 data bits.

Run:  python3 demos/01_field_and_code.py
"""

from flashbch import FieldSpec, build_field, make_code, minimal_polynomial
from flashbch import gf2poly

gf = build_field(FieldSpec(9, 0x211))
print(f"GF(2^{gf.m}) with p(x) = {gf2poly.to_str(gf.spec.primitive_poly)}")
print(f"alpha^9 = {gf.alpha(9):#05x}  (1 + alpha^4)")
print(f"alpha^100 * alpha^411 = {gf.mul(gf.alpha(100), gf.alpha(411))}")

# The generator is the product of the minimal polynomials of alpha^1..alpha^2t;
# only the odd exponents contribute distinct factors.
for e in (1, 3, 5):
    print(f"m_{e}(x) = {gf2poly.to_str(minimal_polynomial(gf, e))}")

for t in (2, 3):
    spec = make_code(gf, t, 256)
    print(f"t={t}: g(x) = {spec.generator:#x}  ->  {spec.describe()}  rate={spec.rate:.3f}")

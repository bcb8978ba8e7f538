"""Encode a sector, damage it, and watch each decoder stage repair it.

Run:  python3 demos/02_encode_decode.py
"""

import numpy as np

from flashbch import (FieldSpec, berlekamp_massey, chien_search, compute_syndromes,
                      decode, encode, lfsr_encode, make_code)

spec = make_code(FieldSpec(9, 0x211), 3, 256)
rng = np.random.default_rng(2024)
msg = rng.integers(0, 2, spec.k, dtype=np.uint8)

cw = encode(spec, msg)
lfsr_cw, lfsr_cycles = lfsr_encode(spec, msg)
assert np.array_equal(cw, lfsr_cw)
print(f"{spec.describe()}; the LFSR encoder needs {lfsr_cycles} clocks")

errors = [3, 77, 250]
rw = cw.copy()
rw[errors] ^= 1
print(f"flipped bits at {errors}")

syn, syn_cycles = compute_syndromes(spec, rw, 4)
print(f"syndromes ({syn_cycles} cycles at p=4): {[hex(s) for s in syn]}")

loc = berlekamp_massey(spec, syn)
print(f"error locator sigma = {[hex(c) for c in loc.sigma]} (degree {loc.degree})")

positions, chien_cycles = chien_search(spec, loc, 4)
print(f"Chien search finds {positions} in {chien_cycles} cycles")

res, total = decode(spec, rw, 4, 4)
print(f"decode: status={res.status.value} nu={res.nu} total cycles={total}")
assert np.array_equal(res.corrected, cw)

# One error too many: the decoder either flags a failure or lands on a
# different codeword.  It never reports a fix that leaves a nonzero syndrome.
rw[[10, 20, 30, 40]] ^= 1
res, _ = decode(spec, rw, 4, 4)
print(f"with 7 flips: status={res.status.value}")

"""Count XOR gates in the Chien constant multipliers and share subexpressions.

Each multiplier by alpha^c is a 9x9 binary matrix.  A row with w ones costs
w-1 two-input XORs.  Pairs of inputs that recur across rows can be computed
once; doing that across every multiplier fed by the same sigma coefficient
saves far more than doing it within one multiplier.

Run:  python3 demos/03_xor_sharing.py
"""

from flashbch import (FieldSpec, build_chien_bank, build_field, build_multiplier_network,
                      cse_group, cse_intra, gate_report, make_code)
from flashbch.xornet import netlist

gf = build_field(FieldSpec(9, 0x211))

print("four multipliers fed by one operand (alpha^4, alpha^9, alpha^14, alpha^19):")
nets = [build_multiplier_network(gf, e, operand=0) for e in (4, 9, 14, 19)]
for net in nets:
    print(f"  alpha^{net.constant_exponent:<3} baseline {net.gate_count:>2}"
          f"  intra {cse_intra(net).gate_count:>2}")
grouped = cse_group(nets)
print(f"  whole group with shared terms: {sum(n.gate_count for n in grouped)} gates")
print()
print("netlist of the shared alpha^9 multiplier:")
print(netlist([cse_intra(nets[1])]))

for t in (2, 3):
    spec = make_code(gf, t, 256)
    print(f"Chien bank, t={t}, p=4 ({len(build_chien_bank(spec, 4))} multipliers):")
    print(gate_report(spec, 4).render())

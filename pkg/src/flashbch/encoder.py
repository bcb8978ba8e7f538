"""Systematic BCH encoding.

A codeword holds the parity ``r(X) = X^(n-k) v(X) mod g(X)`` in positions
``0 .. n-k-1`` and the message ``v`` unchanged in positions ``n-k .. n-1``.
"""

from dataclasses import dataclass

import numpy as np

from . import gf2poly
from .errors import LengthMismatch


def _as_bits(bits, length, what):
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.ndim != 1 or arr.size != length:
        raise LengthMismatch(f"{what} must have {length} bits, got shape {arr.shape}")
    if arr.size and arr.max() > 1:
        raise ValueError(f"{what} must contain only 0/1 values")
    return arr


def parity(spec, msg):
    """Remainder of ``X^(n-k) v(X)`` modulo the generator, as a packed int."""
    v = gf2poly.from_bits(_as_bits(msg, spec.k, "message"))
    return gf2poly.mod(v << spec.redundancy, spec.generator)


def encode(spec, msg):
    msg = _as_bits(msg, spec.k, "message")
    cw = np.empty(spec.n, dtype=np.uint8)
    cw[:spec.redundancy] = gf2poly.to_bits(parity(spec, msg), spec.redundancy)
    cw[spec.redundancy:] = msg
    return cw


def extract_message(spec, cw):
    return _as_bits(cw, spec.n, "codeword")[spec.redundancy:].copy()


@dataclass
class LfsrState:
    """Division-circuit register of the bit-serial encoder."""

    width: int
    feedback: int  # generator without its leading term
    register: int = 0
    cycles_consumed: int = 0

    def clock(self, bit):
        top = self.register >> (self.width - 1) & 1
        self.register = (self.register << 1) & ((1 << self.width) - 1)
        if top ^ bit:
            self.register ^= self.feedback
        self.cycles_consumed += 1


def lfsr_encode(spec, msg, trace=None):
    """Bit-serial encoder model; returns ``(codeword, cycles)``.

    Message bits enter highest coefficient first, one per clock. The
    implicit leading zeros of a shortened code are not clocked. If
    ``trace`` is a list, the register value after each clock is appended.
    """
    msg = _as_bits(msg, spec.k, "message")
    r = spec.redundancy
    state = LfsrState(r, spec.generator ^ (1 << r))
    for bit in msg[::-1]:
        state.clock(int(bit))
        if trace is not None:
            trace.append(state.register)
    cw = np.empty(spec.n, dtype=np.uint8)
    cw[:r] = gf2poly.to_bits(state.register, r)
    cw[r:] = msg
    return cw, state.cycles_consumed

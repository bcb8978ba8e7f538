"""Polynomials over GF(2) packed into Python ints.

Bit ``i`` of the integer is the coefficient of ``X**i``; the zero
polynomial is ``0`` and has no degree (``degree(0) is None``).
"""

import numpy as np


def degree(a):
    if a < 0:
        raise ValueError("GF(2) polynomials are non-negative ints")
    return a.bit_length() - 1 if a else None


def mul(a, b):
    """Carry-less product."""
    if a < b:
        a, b = b, a
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def divmod_(a, b):
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod(a, b):
    return divmod_(a, b)[1]


def from_bits(bits):
    """Pack a 0/1 sequence (index = coefficient) into an int."""
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.size == 0:
        return 0
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def to_bits(a, length):
    if a.bit_length() > length:
        raise ValueError(f"polynomial of degree {degree(a)} does not fit {length} bits")
    raw = a.to_bytes((length + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:length].copy()


def to_str(a, var="x"):
    """Human-readable form, highest power first: ``x^4 + x + 1``."""
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)

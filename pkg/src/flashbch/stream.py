"""Codeword file format.

Payload bytes are unpacked low bit first into a bit stream and cut into
k-bit messages; the last one is zero-padded. Each codeword is written as
``ceil(n/8)`` bytes, coefficient 0 in the low bit of the first byte, the
final partial byte zero in its high bits. A 4-byte little-endian trailer
holds the number of pad bits added to the last message.
"""

import struct

import numpy as np

from .decoder import DecodeStatus, decode
from .encoder import encode, extract_message
from .errors import TruncatedInput

TRAILER = struct.Struct("<I")


def codeword_bytes(spec):
    return (spec.n + 7) // 8


def pack_bits(bits):
    return np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little").tobytes()


def unpack_bits(data, length):
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    return bits[:length].copy()


def encode_bytes(spec, payload):
    bits = unpack_bits(payload, len(payload) * 8)
    pad = (-bits.size) % spec.k
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    out = bytearray()
    for msg in bits.reshape(-1, spec.k):
        out += pack_bits(encode(spec, msg))
    out += TRAILER.pack(pad)
    return bytes(out)


def split_codewords(spec, blob):
    if len(blob) < TRAILER.size:
        raise TruncatedInput(0, "stream shorter than its 4-byte trailer")
    (pad,) = TRAILER.unpack(blob[-TRAILER.size:])
    body = blob[:-TRAILER.size]
    size = codeword_bytes(spec)
    if len(body) % size:
        raise TruncatedInput(
            len(body) // size,
            f"block {len(body) // size} is truncated: {len(body) % size} of {size} bytes")
    words = [unpack_bits(body[i:i + size], spec.n) for i in range(0, len(body), size)]
    if pad >= spec.k or (pad and not words):
        raise TruncatedInput(len(words), f"pad length {pad} inconsistent with k={spec.k}")
    return words, pad


def decode_bytes(spec, blob, p_s=1, p_c=1):
    """Returns ``(payload, [(DecodeResult, cycles), ...])``."""
    words, pad = split_codewords(spec, blob)
    reports = []
    chunks = []
    for rw in words:
        res, cycles = decode(spec, rw, p_s, p_c)
        reports.append((res, cycles))
        chunks.append(extract_message(spec, res.corrected))
    bits = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint8)
    if pad:
        bits = bits[:-pad]
    if bits.size % 8:
        raise TruncatedInput(len(words) - 1, "decoded payload is not a whole number of bytes")
    return pack_bits(bits), reports


def report_line(index, res, cycles):
    pos = ",".join(str(j) for j in res.error_positions)
    return (f"block {index}: status={res.status.value} nu={res.nu} "
            f"positions=[{pos}] cycles={cycles}")


def any_failure(reports):
    return any(res.status is DecodeStatus.FAILURE for res, _ in reports)

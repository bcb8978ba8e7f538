"""Syndrome / Berlekamp-Massey / Chien / correction decoding.

Conventions
-----------
* ``S_i = r(alpha^i)`` for ``i = 1 .. 2t``; ``syndromes[i - 1]`` holds ``S_i``.
* Bit position ``j`` of the received word corresponds to the candidate
  locator root ``alpha^(-j)``, so a single error at ``j`` gives
  ``sigma(X) = 1 + alpha^j X``.
* Parallel-p stages consume ``p`` positions per clock and take
  ``ceil(n / p)`` clocks; the results do not depend on ``p``.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DegreeMismatch, InvalidParallelism, LengthMismatch, PositionOutOfRange


def _check_p(p):
    if int(p) != p or p < 1:
        raise InvalidParallelism(f"parallelism must be a positive integer, got {p!r}")
    return int(p)


def _received(spec, rw):
    arr = np.asarray(rw, dtype=np.uint8)
    if arr.ndim != 1 or arr.size != spec.n:
        raise LengthMismatch(f"received word must have {spec.n} bits, got shape {arr.shape}")
    return arr


def clocks(n, p):
    return -(-n // p)


def compute_syndromes(spec, rw, p=1):
    """All 2t syndromes through a parallel-p datapath; returns ``(syndromes, cycles)``.

    The word is split into ``ceil(n/p)`` groups of ``p`` consecutive
    positions (the last group zero-padded). Each clock folds one group into
    the accumulators: ``S_i <- S_i * alpha^(i*p) + sum_q r[h*p + q] alpha^(i*q)``,
    starting from the most significant group.
    """
    p = _check_p(p)
    r = _received(spec, rw)
    gf, n = spec.gf, spec.n
    ncyc = clocks(n, p)
    i = np.arange(1, 2 * spec.t + 1, dtype=np.int64)

    padded = np.zeros(ncyc * p, dtype=np.uint8)
    padded[:n] = r
    groups = padded.reshape(ncyc, p).astype(bool)
    # partial[h, i]: XOR of alpha^(i*q) over the set bits q of group h
    table = gf.antilog[np.outer(np.arange(p), i) % gf.order]
    partial = np.bitwise_xor.reduce(np.where(groups[:, :, None], table[None], 0), axis=1)
    # Horner over groups: group h is weighted by alpha^(i*p*h)
    weights = np.outer(np.arange(ncyc, dtype=np.int64) * p, i)
    folded = gf.mul_const_vec(partial, weights)
    syn = np.bitwise_xor.reduce(folded, axis=0)
    return tuple(int(s) for s in syn), ncyc


def odd_syndromes(spec, rw, p=1):
    """S_1, S_3, ..., S_(2t-1) only (the reduced-hardware syndrome block)."""
    syn, cycles = compute_syndromes(spec, rw, p)
    return syn[0::2], cycles


def even_syndromes_from_odd(gf, odd):
    """Rebuild ``S_1 .. S_2t`` from the odd syndromes using ``S_2i = S_i^2``."""
    t = len(odd)
    syn = [0] * (2 * t)
    for idx, s in enumerate(odd):
        syn[2 * idx] = int(s)
    for i in range(2, 2 * t + 1, 2):
        # S_(i/2) is already known: odd directly, even from an earlier step
        syn[i - 1] = gf.mul(syn[i // 2 - 1], syn[i // 2 - 1])
    return tuple(syn)


@dataclass(frozen=True)
class ErrorLocator:
    sigma: tuple  # sigma_0 .. sigma_L, sigma_0 == 1

    @property
    def degree(self):
        """LFSR length found by Berlekamp-Massey (nu)."""
        return len(self.sigma) - 1

    def __call__(self, gf, x):
        return gf.eval_poly(self.sigma, x)


def berlekamp_massey(spec, syndromes):
    """Shortest LFSR ``sigma`` generating ``S_1 .. S_2t`` (classic, with inversion)."""
    gf = spec.gf
    syn = [int(s) for s in syndromes]
    if len(syn) != 2 * spec.t:
        raise LengthMismatch(f"expected {2 * spec.t} syndromes, got {len(syn)}")
    C = [1]
    B = [1]
    L = 0
    shift = 1
    b = 1
    for k, s in enumerate(syn):
        d = s
        for i in range(1, L + 1):
            if i < len(C):
                d ^= gf.mul(C[i], syn[k - i])
        if d == 0:
            shift += 1
            continue
        coef = gf.div(d, b)
        T = list(C)
        need = len(B) + shift
        if len(C) < need:
            C.extend([0] * (need - len(C)))
        for i, bi in enumerate(B):
            C[i + shift] ^= gf.mul(coef, bi)
        if 2 * L <= k:
            L = k + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    C = (C + [0] * (L + 1))[:L + 1]
    return ErrorLocator(tuple(C))


def chien_search(spec, loc, p=1, strict=True):
    """Find error positions ``j`` in ``[0, n)`` with ``sigma(alpha^(-j)) == 0``.

    Returns ``(positions, cycles)``. A parallel-p search tests ``p``
    consecutive positions per clock: the register for coefficient ``k``
    holds ``sigma_k alpha^(-k*p*h)`` at clock ``h`` and is scaled by
    ``alpha^(-k*q)`` for lane ``q``. Positions at or above ``n`` (shortened
    away, or padding in the last clock) are never reported. With
    ``strict`` a root count different from the locator degree raises
    :class:`DegreeMismatch`.
    """
    p = _check_p(p)
    gf, n = spec.gf, spec.n
    ncyc = clocks(n, p)
    h = np.arange(ncyc, dtype=np.int64)[:, None]
    q = np.arange(p, dtype=np.int64)[None, :]
    acc = np.zeros((ncyc, p), dtype=np.int64)
    for k, coef in enumerate(loc.sigma):
        if coef == 0:
            continue
        reg_exp = -k * p * h          # register contents at clock h
        lane_exp = -k * q             # constant multiplier of lane q
        acc ^= gf.mul_const_vec(np.full((ncyc, p), coef), reg_exp + lane_exp)
    pos = (h * p + q)[acc == 0]
    positions = tuple(int(j) for j in pos[pos < n])
    if strict and len(positions) != loc.degree:
        raise DegreeMismatch(loc.degree, positions)
    return positions, ncyc


def correct(rw, positions):
    """Flip the listed positions (the FIFO + single adder stage)."""
    out = np.array(rw, dtype=np.uint8, copy=True)
    pos = list(positions)
    for j in pos:
        if not 0 <= j < out.size:
            raise PositionOutOfRange(f"position {j} outside [0, {out.size})")
    for j in pos:
        out[j] ^= 1
    return out


class DecodeStatus(enum.Enum):
    NO_ERROR = "no-error"
    CORRECTED = "corrected"
    FAILURE = "failure"


@dataclass(frozen=True)
class DecodeResult:
    corrected: np.ndarray
    error_positions: tuple
    status: DecodeStatus

    @property
    def nu(self):
        return len(self.error_positions)

    @property
    def ok(self):
        return self.status is not DecodeStatus.FAILURE


def decode_cycles(spec, p_s, p_c, error_free):
    if error_free:
        return clocks(spec.n, p_s)
    return clocks(spec.n, p_s) + 2 * spec.t + clocks(spec.n, p_c)


def decode(spec, rw, p_s=1, p_c=1):
    """Full decode; returns ``(DecodeResult, cycles)``. Never raises on bad words.

    After correction the syndromes are recomputed once; a nonzero residue
    turns the result into a failure. That check is not part of the cycle
    count.
    """
    _check_p(p_s)
    _check_p(p_c)
    rw = _received(spec, rw)
    syn, _ = compute_syndromes(spec, rw, p_s)
    if not any(syn):
        return DecodeResult(rw.copy(), (), DecodeStatus.NO_ERROR), decode_cycles(spec, p_s, p_c, True)

    cycles = decode_cycles(spec, p_s, p_c, False)
    failure = DecodeResult(rw.copy(), (), DecodeStatus.FAILURE)
    loc = berlekamp_massey(spec, syn)
    if loc.degree > spec.t or loc.sigma[-1] == 0:
        return failure, cycles
    try:
        positions, _ = chien_search(spec, loc, p_c)
    except DegreeMismatch:
        return failure, cycles
    fixed = correct(rw, positions)
    residue, _ = compute_syndromes(spec, fixed, p_s)
    if any(residue):
        return failure, cycles
    return DecodeResult(fixed, positions, DecodeStatus.CORRECTED), cycles

"""Seedable bit-flip injection and Monte-Carlo decode campaigns.

Randomness comes from numpy's PCG64 through ``default_rng``; trial ``i`` of
a campaign seeded with ``s`` uses ``default_rng([s, i])``, so trials are
independent and reproducible in any order.
"""

from dataclasses import dataclass, field

import numpy as np

from .decoder import DecodeStatus, decode
from .encoder import encode
from .errors import PositionOutOfRange


@dataclass(frozen=True)
class ExactPositions:
    positions: tuple


@dataclass(frozen=True)
class RandomFlips:
    count: int


@dataclass(frozen=True)
class Bernoulli:
    probability: float


@dataclass(frozen=True)
class ChannelSpec:
    model: object
    seed: int = 0

    def __post_init__(self):
        model = self.model
        if isinstance(model, ExactPositions):
            if len(set(model.positions)) != len(model.positions):
                raise ValueError(f"repeated positions in {model.positions}")
        elif isinstance(model, RandomFlips):
            if model.count < 0:
                raise ValueError(f"flip count must be >= 0, got {model.count}")
        elif isinstance(model, Bernoulli):
            if not 0.0 <= model.probability <= 1.0:
                raise ValueError(f"probability must lie in [0, 1], got {model.probability}")
        else:
            raise TypeError(f"unknown channel model {model!r}")


@dataclass(frozen=True)
class PageFrame:
    """Flash page geometry: sector payload in bits and codewords per page."""

    sector_bits: int = 256
    codewords_per_page: int = 1

    def __post_init__(self):
        if self.sector_bits < 1 or self.codewords_per_page < 1:
            raise ValueError("page frame sizes must be positive")

    @property
    def page_bits(self):
        return self.sector_bits * self.codewords_per_page


def _positions(n, model, rng):
    if isinstance(model, ExactPositions):
        pos = [int(j) for j in model.positions]
        for j in pos:
            if not 0 <= j < n:
                raise PositionOutOfRange(f"position {j} outside [0, {n})")
        return pos
    if isinstance(model, RandomFlips):
        if model.count > n:
            raise PositionOutOfRange(f"cannot flip {model.count} of {n} bits")
        return [int(j) for j in rng.choice(n, size=model.count, replace=False)]
    return [int(j) for j in np.flatnonzero(rng.random(n) < model.probability)]


def inject(cw, ch, rng=None):
    """Flip bits of ``cw``; returns ``(received, frozenset(true_positions))``."""
    cw = np.asarray(cw, dtype=np.uint8)
    rng = np.random.default_rng(ch.seed) if rng is None else rng
    pos = _positions(cw.size, ch.model, rng)
    out = cw.copy()
    out[pos] ^= 1
    return out, frozenset(pos)


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    weight: int
    status: DecodeStatus
    recovered: bool
    cycles: int

    def csv(self):
        return f"{self.trial},{self.weight},{self.status.value},{self.cycles}"


@dataclass
class CampaignStats:
    trials: int = 0
    no_error: int = 0
    corrected: int = 0
    failures: int = 0
    miscorrections: int = 0
    recovered: int = 0
    total_cycles: int = 0
    records: list = field(default_factory=list, repr=False)

    @property
    def mean_cycles(self):
        return self.total_cycles / self.trials if self.trials else 0.0

    def add(self, rec):
        self.trials += 1
        self.total_cycles += rec.cycles
        if rec.status is DecodeStatus.FAILURE:
            self.failures += 1
        else:
            if rec.status is DecodeStatus.NO_ERROR:
                self.no_error += 1
            else:
                self.corrected += 1
            if rec.recovered:
                self.recovered += 1
            else:
                self.miscorrections += 1

    def render(self):
        rows = [
            ("trials", self.trials),
            ("no-error", self.no_error),
            ("corrected", self.corrected),
            ("failures", self.failures),
            ("miscorrections", self.miscorrections),
            ("exact recoveries", self.recovered),
            ("mean cycles", f"{self.mean_cycles:.2f}"),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def campaign(spec, trials, ch, p_s=1, p_c=1, keep_records=False):
    """Encode a random message, inject errors, decode; repeated ``trials`` times.

    A miscorrection is a non-failure result that differs from the original
    codeword.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    stats = CampaignStats()
    for i in range(trials):
        rng = np.random.default_rng([ch.seed, i])
        msg = rng.integers(0, 2, spec.k, dtype=np.uint8)
        cw = encode(spec, msg)
        rw, pos = inject(cw, ch, rng)
        res, cycles = decode(spec, rw, p_s, p_c)
        rec = TrialRecord(i, len(pos), res.status,
                          bool(np.array_equal(res.corrected, cw)), cycles)
        stats.add(rec)
        if keep_records:
            stats.records.append(rec)
    return stats

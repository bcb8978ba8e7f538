"""Clock-cycle model of serial, parallel and 3-stage pipelined decoders.

Stage durations are ``ceil(n/p_s)`` for syndromes, ``2t`` for
Berlekamp-Massey and ``ceil(n/p_c)`` for the Chien search. A partial last
group still costs a full clock.
"""

from dataclasses import dataclass

from .decoder import clocks

STAGES = ("syndrome", "bm", "chien")


@dataclass(frozen=True)
class ArchConfig:
    n: int
    t: int
    p_s: int = 1
    p_c: int = 1

    def __post_init__(self):
        if self.n < 1 or self.t < 0:
            raise ValueError(f"need n >= 1 and t >= 0, got n={self.n}, t={self.t}")
        if self.p_s < 1 or self.p_c < 1:
            raise ValueError(f"parallelism must be >= 1, got p_s={self.p_s}, p_c={self.p_c}")

    @classmethod
    def for_code(cls, spec, p_s=1, p_c=1):
        return cls(spec.n, spec.t, p_s, p_c)

    @property
    def durations(self):
        return {"syndrome": clocks(self.n, self.p_s),
                "bm": 2 * self.t,
                "chien": clocks(self.n, self.p_c)}


def latency_non_pipelined(cfg):
    return sum(cfg.durations.values())


def initiation_interval(cfg):
    """Cycles between successive codewords entering the pipeline.

    The syndrome stage sets the pace when it is the slowest; otherwise the
    interval stretches to the slowest stage.
    """
    return max(cfg.durations.values())


@dataclass(frozen=True)
class WordTiming:
    word: int
    syndrome: tuple   # [start, end)
    bm: tuple
    chien: tuple

    def stage(self, name):
        return getattr(self, name)

    def active(self, cycle):
        """Stage occupied at ``cycle``, or None."""
        for name in STAGES:
            start, end = self.stage(name)
            if start <= cycle < end:
                return name
        return None


@dataclass(frozen=True)
class PipelineSchedule:
    config: ArchConfig
    words: tuple
    total_cycles: int
    steady_state_interval: int

    def render(self):
        """Text Gantt: one row per codeword with each stage's cycle range."""
        width = len(str(self.total_cycles))
        lines = [f"{'word':>4}  " + "  ".join(f"{s:^{2 * width + 3}}" for s in STAGES)]
        for w in self.words:
            cells = [f"[{w.stage(s)[0]:>{width}},{w.stage(s)[1]:>{width}})" for s in STAGES]
            lines.append(f"{w.word:>4}  " + "  ".join(cells))
        return "\n".join(lines) + "\n"


def schedule_pipelined(cfg, num_words):
    if num_words < 1:
        raise ValueError(f"num_words must be >= 1, got {num_words}")
    d = cfg.durations
    interval = initiation_interval(cfg)
    words = []
    for w in range(num_words):
        s0 = w * interval
        s1 = s0 + d["syndrome"]
        s2 = s1 + d["bm"]
        s3 = s2 + d["chien"]
        words.append(WordTiming(w, (s0, s1), (s1, s2), (s2, s3)))
    total = (num_words - 1) * interval + latency_non_pipelined(cfg)
    return PipelineSchedule(cfg, tuple(words), total, interval)


def check_schedule(sched):
    """Raise AssertionError unless stages are sequential, hazard-free and in order."""
    for w in sched.words:
        assert w.syndrome[1] <= w.bm[0] and w.bm[1] <= w.chien[0], f"word {w.word} out of order"
    for name in STAGES:
        spans = sorted(w.stage(name) for w in sched.words)
        for (a0, a1), (b0, b1) in zip(spans, spans[1:]):
            assert a1 <= b0, f"two codewords in stage {name} during [{b0},{a1})"
    ends = [w.chien[1] for w in sched.words]
    assert all(x < y for x, y in zip(ends, ends[1:])), "completion out of order"


@dataclass(frozen=True)
class ThroughputReport:
    config: ArchConfig
    num_words: int
    latency: int
    non_pipelined_total: int
    pipelined_total: int
    steady_state_interval: int

    @property
    def speedup(self):
        return self.non_pipelined_total / self.pipelined_total

    @property
    def asymptotic_speedup(self):
        return self.latency / self.steady_state_interval

    def render(self):
        cfg = self.config
        rows = [
            ("n / t / p_s / p_c", f"{cfg.n} / {cfg.t} / {cfg.p_s} / {cfg.p_c}"),
            ("codewords", str(self.num_words)),
            ("single-word latency", str(self.latency)),
            ("non-pipelined total", str(self.non_pipelined_total)),
            ("pipelined total", str(self.pipelined_total)),
            ("steady-state interval", str(self.steady_state_interval)),
            ("speedup", f"{self.speedup:.3f}"),
            ("asymptotic speedup", f"{self.asymptotic_speedup:.3f}"),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def throughput_report(cfg, num_words):
    sched = schedule_pipelined(cfg, num_words)
    latency = latency_non_pipelined(cfg)
    return ThroughputReport(cfg, num_words, latency, num_words * latency,
                            sched.total_cycles, sched.steady_state_interval)

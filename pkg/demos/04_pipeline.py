"""Overlap syndrome, Berlekamp-Massey, and Chien stages across codewords.

Without pipelining each codeword costs the sum of the three stage latencies.
With one word per stage in flight, a new word finishes every max(stage) cycles.

Run:  python3 demos/04_pipeline.py
"""

from flashbch import ArchConfig, latency_non_pipelined, schedule_pipelined, throughput_report

cfg = ArchConfig(274, 3, 4, 4)
print(f"stage durations: {cfg.durations}")
print(f"non-pipelined latency per word: {latency_non_pipelined(cfg)} cycles")

sched = schedule_pipelined(cfg, 3)
print(f"steady-state interval: {sched.steady_state_interval} cycles\n")
print(sched.render())

for words in (1, 3, 16, 1000):
    rep = throughput_report(cfg, words)
    print(f"{words:>5} words: speedup {rep.speedup:.3f} (asymptote {rep.asymptotic_speedup:.3f})")

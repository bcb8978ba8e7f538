"""XOR networks for constant GF(2^m) multipliers and XOR-sharing CSE.

A network has ``m_inputs`` primary inputs ``b0 .. b(m-1)``, an ordered list
of shared definitions ``c0, c1, ...`` (each the XOR of two or more earlier
terms) and a list of output rows. A row or definition with ``s`` terms
costs ``s - 1`` two-input XOR gates.

The optimizer repeatedly takes the pair of terms that co-occurs in the
most rows, defines a new shared term for it and rewrites every row that
contains the pair, stopping once no pair occurs in more than one row. Ties
go to the smallest pair in (inputs before shared terms, then index) order.
Identical rows fall out of the same process: their pairs are counted once
per row, so a duplicated output collapses into a single shared term.
"""

from collections import Counter
from dataclasses import dataclass, replace
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .errors import GroupMismatch, WidthMismatch
from .galois import mastrovito_matrix

INPUT, SHARED = 0, 1


class Term(NamedTuple):
    kind: int
    index: int

    def __str__(self):
        return f"{'b' if self.kind == INPUT else 'c'}{self.index}"


def b(i):
    return Term(INPUT, i)


def c(k):
    return Term(SHARED, k)


def _gates(terms):
    return max(len(terms) - 1, 0)


@dataclass(frozen=True)
class XorNetwork:
    m_inputs: int
    outputs: tuple                      # tuple of frozenset[Term]
    shared_defs: tuple = ()             # tuple of frozenset[Term]
    label: str = ""
    constant_exponent: int = None
    operand: object = None              # group tag: networks with equal tags share an input
    owns_defs: bool = True              # False for group members after the first

    @property
    def gate_count(self):
        """Gates in this network; shared defs counted only by their owner."""
        rows = sum(_gates(r) for r in self.outputs)
        return rows + (sum(_gates(d) for d in self.shared_defs) if self.owns_defs else 0)

    def expanded(self):
        """Each output as a frozenset of primary input indices."""
        defs = []
        for d in self.shared_defs:
            defs.append(_expand(d, defs))
        return tuple(frozenset(_expand(r, defs)) for r in self.outputs)

    def matrix(self):
        out = np.zeros((len(self.outputs), self.m_inputs), dtype=np.uint8)
        for r, idx in enumerate(self.expanded()):
            out[r, sorted(idx)] = 1
        return out


def _expand(terms, defs):
    acc = set()
    for tm in terms:
        acc ^= {tm.index} if tm.kind == INPUT else defs[tm.index]
    return acc


def network_from_rows(rows, m_inputs, label="", constant_exponent=None, operand=None):
    """Network from explicit rows of input indices (e.g. a transcribed matrix)."""
    outputs = []
    for r in rows:
        idx = tuple(r)
        if any(not 0 <= i < m_inputs for i in idx):
            raise WidthMismatch(f"row {idx} references an input outside b0..b{m_inputs - 1}")
        outputs.append(frozenset(b(i) for i in idx))
    return XorNetwork(m_inputs, tuple(outputs), (), label, constant_exponent, operand)


def build_multiplier_network(gf, constant_exponent, label=None, operand=None):
    """Unoptimized network of ``B -> alpha**constant_exponent * B``."""
    e = constant_exponent % gf.order
    mat = mastrovito_matrix(gf, e)
    rows = [mat.row_terms(r) for r in range(gf.m)]
    return network_from_rows(rows, gf.m, label or f"a^{e}", e, operand)


def build_chien_bank(spec, p):
    """The ``p x t`` constant multipliers of a parallel-p Chien search.

    Lane ``i`` (1..p) of coefficient ``j`` (1..t) multiplies ``sigma_j`` by
    ``alpha^(i*j)``; networks are ordered by ``j`` then ``i`` and tagged
    with operand ``j``.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    gf = spec.gf
    bank = []
    for j in range(1, spec.t + 1):
        for i in range(1, p + 1):
            bank.append(build_multiplier_network(
                gf, i * j, label=f"a^{(i * j) % gf.order}*s{j}", operand=j))
    return bank


def _mine(rows, defs):
    """Pair-extraction loop. ``rows`` is a list of sets, rewritten in place."""
    while True:
        counts = Counter()
        for r in rows:
            if len(r) > 1:
                counts.update(combinations(sorted(r), 2))
        if not counts:
            return
        top = max(counts.values())
        if top <= 1:
            return
        pair = min(p for p, n in counts.items() if n == top)
        ref = c(len(defs))
        defs.append(frozenset(pair))
        x, y = pair
        for r in rows:
            if x in r and y in r:
                r.discard(x)
                r.discard(y)
                r.add(ref)


def _flatten(net):
    """Rows in terms of primary inputs only."""
    return [set(b(i) for i in row) for row in net.expanded()]


def cse_intra(net):
    """XOR sharing within one network's rows."""
    rows = _flatten(net)
    defs = []
    _mine(rows, defs)
    return replace(net, outputs=tuple(frozenset(r) for r in rows),
                   shared_defs=tuple(defs), owns_defs=True)


def cse_group(nets):
    """XOR sharing over the union of rows of networks with a common operand.

    Every returned network references the same shared definitions; only the
    first one owns (is charged for) them, so summing ``gate_count`` over the
    group gives the group total.
    """
    nets = list(nets)
    if not nets:
        return []
    m, tag = nets[0].m_inputs, nets[0].operand
    for n in nets[1:]:
        if n.m_inputs != m or n.operand != tag:
            raise GroupMismatch(
                f"cannot group {n.label!r} (width {n.m_inputs}, operand {n.operand!r}) "
                f"with width {m}, operand {tag!r}")
    flat = [_flatten(n) for n in nets]
    rows = [r for f in flat for r in f]
    defs = []
    _mine(rows, defs)
    defs = tuple(defs)
    out, pos = [], 0
    for idx, n in enumerate(nets):
        mine = rows[pos:pos + len(flat[idx])]
        pos += len(flat[idx])
        out.append(replace(n, outputs=tuple(frozenset(r) for r in mine),
                           shared_defs=defs, owns_defs=idx == 0))
    return out


def group_by_operand(nets):
    groups = {}
    for n in nets:
        groups.setdefault(n.operand, []).append(n)
    return list(groups.values())


def cse_bank(nets):
    """Group CSE applied to every operand group of a bank."""
    return [n for g in group_by_operand(nets) for n in cse_group(g)]


def bank_gate_count(nets):
    return sum(n.gate_count for n in nets)


def evaluate_network(net, inputs):
    """Evaluate on one operand (int or bit vector) or a batch of bit vectors.

    Returns output bits: shape ``(rows,)`` for a single operand,
    ``(batch, rows)`` for a 2-D input.
    """
    if isinstance(inputs, (int, np.integer)):
        if not 0 <= inputs < 1 << net.m_inputs:
            raise WidthMismatch(f"operand {inputs} wider than {net.m_inputs} bits")
        x = (int(inputs) >> np.arange(net.m_inputs)) & 1
    else:
        x = np.asarray(inputs, dtype=np.uint8)
    if x.shape[-1] != net.m_inputs:
        raise WidthMismatch(f"expected {net.m_inputs} input bits, got {x.shape[-1]}")
    x = x.astype(np.uint8)
    values = {}

    def term(tm):
        return x[..., tm.index] if tm.kind == INPUT else values[tm.index]

    def xor_all(terms):
        acc = np.zeros(x.shape[:-1], dtype=np.uint8)
        for tm in terms:
            acc = acc ^ term(tm)
        return acc

    for k, d in enumerate(net.shared_defs):
        values[k] = xor_all(d)
    return np.stack([xor_all(r) for r in net.outputs], axis=-1)


def bits_to_int(bits):
    bits = np.asarray(bits, dtype=np.int64)
    return (bits << np.arange(bits.shape[-1])).sum(axis=-1)


def netlist(nets):
    """Text netlist: shared definitions once per distinct set, then outputs.

    Lines look like ``c7 = b2 ^ b3`` and ``out[3][5] = c4 ^ c7`` where the
    first index is the network's position in ``nets``.
    """
    lines = []
    emitted = set()
    for ni, net in enumerate(nets):
        key = (id(net.shared_defs), net.operand)
        if net.shared_defs and key not in emitted and net.owns_defs:
            emitted.add(key)
            scope = f"operand {net.operand}" if net.operand is not None else net.label
            lines.append(f"# shared ({scope})")
            for k, d in enumerate(net.shared_defs):
                lines.append(f"c{k} = {_fmt(d)}")
        lines.append(f"# {net.label}: {net.gate_count} gates")
        for r, row in enumerate(net.outputs):
            lines.append(f"out[{ni}][{r}] = {_fmt(row)}")
    return "\n".join(lines) + "\n"


def _fmt(terms):
    return " ^ ".join(str(tm) for tm in sorted(terms)) if terms else "0"


@dataclass(frozen=True)
class GateReportRow:
    label: str
    gates: int
    improvement: int = None  # integer percent vs the parallel baseline


@dataclass(frozen=True)
class GateReport:
    rows: tuple
    p: int
    t: int

    def row(self, label):
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def render(self):
        width = max(len(r.label) for r in self.rows)
        out = [f"{'architecture':<{width}}  {'xor gates':>9}  {'improvement':>11}"]
        for r in self.rows:
            imp = "-" if r.improvement is None else f"{r.improvement}%"
            out.append(f"{r.label:<{width}}  {r.gates:>9}  {imp:>11}")
        return "\n".join(out) + "\n"


def improvement(baseline, count):
    if baseline == 0:
        return 0
    return round(100 * (baseline - count) / baseline)


def serial_gate_count(spec):
    """t multipliers alpha^1..alpha^t plus the t-input m-bit adder tree."""
    bank = build_chien_bank(spec, 1)
    return bank_gate_count(bank) + (spec.t - 1) * spec.m


def gate_report(spec, p):
    bank = build_chien_bank(spec, p)
    base = bank_gate_count(bank)
    intra = bank_gate_count([cse_intra(n) for n in bank])
    group = bank_gate_count(cse_bank(bank))
    rows = (
        GateReportRow("serial", serial_gate_count(spec)),
        GateReportRow(f"parallel-{p}", base, improvement(base, base)),
        GateReportRow(f"parallel-{p} + intra sharing", intra, improvement(base, intra)),
        GateReportRow(f"parallel-{p} + group sharing", group, improvement(base, group)),
    )
    return GateReport(rows, p, spec.t)

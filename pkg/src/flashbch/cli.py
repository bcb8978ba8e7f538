"""Command-line entry point: info, encode, decode, optimize, schedule, bench."""

import argparse
import sys

from . import gf2poly
from .channel import ChannelSpec, RandomFlips, campaign
from .config import RunConfig, load_config, merge
from .errors import BCHError
from .pipeline import ArchConfig, schedule_pipelined, throughput_report
from .stream import any_failure, decode_bytes, encode_bytes, report_line
from .xornet import build_chien_bank, cse_bank, cse_intra, gate_report, netlist


def cmd_info(cfg, args, out):
    spec = cfg.code()
    out.write(spec.describe() + "\n")
    out.write(f"m={spec.m} primitive_poly={spec.field.primitive_poly:#x} "
              f"deg_g={spec.redundancy} rate={spec.rate:.4f}\n")
    out.write(f"g={spec.generator:#x}\n")
    out.write(f"g(x)={gf2poly.to_str(spec.generator)}\n")
    return 0


def cmd_encode(cfg, args, out):
    spec = cfg.code()
    with open(args.input, "rb") as fh:
        payload = fh.read()
    blob = encode_bytes(spec, payload)
    with open(args.output, "wb") as fh:
        fh.write(blob)
    out.write(f"{spec.describe()}\nencoded {len(payload)} bytes into "
              f"{(len(blob) - 4) // ((spec.n + 7) // 8)} codewords\n")
    return 0


def cmd_decode(cfg, args, out):
    spec = cfg.code()
    with open(args.input, "rb") as fh:
        blob = fh.read()
    payload, reports = decode_bytes(spec, blob, cfg.p_s, cfg.p_c)
    with open(args.output, "wb") as fh:
        fh.write(payload)
    for i, (res, cycles) in enumerate(reports):
        out.write(report_line(i, res, cycles) + "\n")
    if any_failure(reports) and not args.allow_failures:
        return 1
    return 0


def cmd_optimize(cfg, args, out):
    spec = cfg.code()
    out.write(f"{spec.describe()} p={cfg.p_c}\n")
    out.write(gate_report(spec, cfg.p_c).render())
    if args.netlist:
        bank = build_chien_bank(spec, cfg.p_c)
        mode = {"baseline": bank,
                "intra": [cse_intra(n) for n in bank],
                "group": cse_bank(bank)}[args.netlist_mode]
        with open(args.netlist, "w", encoding="utf-8") as fh:
            fh.write(netlist(mode))
    return 0


def cmd_schedule(cfg, args, out):
    spec = cfg.code()
    arch = ArchConfig.for_code(spec, cfg.p_s, cfg.p_c)
    out.write(schedule_pipelined(arch, cfg.words).render())
    out.write("\n")
    out.write(throughput_report(arch, cfg.words).render())
    return 0


def cmd_bench(cfg, args, out):
    spec = cfg.code()
    ch = ChannelSpec(RandomFlips(cfg.flip_count), cfg.seed)
    stats = campaign(spec, cfg.trials, ch, cfg.p_s, cfg.p_c, keep_records=bool(args.trial_log))
    out.write(f"{spec.describe()} flips={cfg.flip_count} seed={cfg.seed} "
              f"p_s={cfg.p_s} p_c={cfg.p_c}\n")
    out.write(stats.render())
    if args.trial_log:
        with open(args.trial_log, "w", encoding="utf-8") as fh:
            fh.write("trial,weight,status,cycles\n")
            for rec in stats.records:
                fh.write(rec.csv() + "\n")
    return 0


COMMANDS = {
    "info": cmd_info,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "optimize": cmd_optimize,
    "schedule": cmd_schedule,
    "bench": cmd_bench,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file; flags override it")
    common.add_argument("--m", type=int)
    common.add_argument("--prim-poly", type=lambda s: int(s, 0),
                        help="primitive polynomial, e.g. 0x211 for x^9+x^4+1")
    common.add_argument("--t", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--ps", type=int, help="syndrome parallelism")
    common.add_argument("--pc", type=int, help="Chien search parallelism")
    common.add_argument("--seed", type=int)

    parser = argparse.ArgumentParser(prog="flashbch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="print code parameters")
    for name in ("encode", "decode"):
        p = sub.add_parser(name, parents=[common], help=f"{name} a file")
        p.add_argument("input")
        p.add_argument("output")
        if name == "decode":
            p.add_argument("--allow-failures", action="store_true",
                           help="exit 0 even when some blocks fail to decode")
    p = sub.add_parser("optimize", parents=[common], help="Chien multiplier XOR gate report")
    p.add_argument("--netlist", help="write the bank netlist to this file")
    p.add_argument("--netlist-mode", choices=("baseline", "intra", "group"), default="group")
    p = sub.add_parser("schedule", parents=[common], help="pipeline timeline")
    p.add_argument("--words", type=int)
    p = sub.add_parser("bench", parents=[common], help="error-injection campaign")
    p.add_argument("--trials", type=int)
    p.add_argument("--flips", type=int)
    p.add_argument("--trial-log", help="write one CSV line per trial here")
    return parser


def resolve_config(args):
    file_values = load_config(args.config) if args.config else {}
    flags = {
        "m": args.m,
        "primitive_poly": args.prim_poly,
        "t": args.t,
        "k": args.k,
        "p_s": args.ps,
        "p_c": args.pc,
        "seed": args.seed,
        "trials": getattr(args, "trials", None),
        "flips": getattr(args, "flips", None),
        "words": getattr(args, "words", None),
    }
    return merge(RunConfig(), file_values, flags)


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](cfg, args, out)
    except (BCHError, OSError) as exc:
        print(f"flashbch {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: encode, decode, stats, gen, params.

Exit codes: 0 success, 2 usage, 3 I/O failure, 4 corrupt stream,
5 parameter error. File arguments accept '-' for the standard streams.
Reports for commands that produce data go to stderr so piped output stays
clean; --json switches reports to a single JSON document.
"""

import argparse
import io
import json
import sys

import numpy as np

from . import analysis, coder, corpus
from .errors import CorruptStreamError, ParameterError
from .params import derive_params

_DTYPES = {1: "<u1", 2: "<u2", 4: "<u4"}


def _symbol_bytes(sigma: int, forced) -> int:
    default = coder.symbol_model_bytes(sigma)
    if forced is None:
        return default
    if forced < default:
        raise ParameterError(
            f"symbol width {forced} bytes cannot hold symbols up to {sigma - 1}")
    return forced


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _read_raw_symbols(path: str, sigma: int, sym_bytes: int) -> list[int]:
    data = _read_bytes(path)
    if len(data) % sym_bytes:
        raise ParameterError(
            f"raw input length {len(data)} is not a multiple of {sym_bytes} bytes")
    arr = np.frombuffer(data, dtype=_DTYPES[sym_bytes])
    if arr.size and int(arr.max()) >= sigma:
        raise ParameterError(
            f"symbol {int(arr.max())} out of range for sigma {sigma}")
    return arr.tolist()


def _emit_report(doc: dict, text_lines, args, stream) -> None:
    if args.json:
        print(json.dumps(doc), file=stream)
    else:
        for line in text_lines:
            print(line, file=stream)


def _params_doc(params) -> dict:
    return {"sigma": params.sigma, "lambda": params.lam, "c": params.c,
            "ell": params.ell, "threshold": params.threshold,
            "l_max": params.l_max, "width": params.width}


def _cmd_encode(args) -> int:
    params = derive_params(args.sigma, args.lam, args.c)
    sym_bytes = _symbol_bytes(args.sigma, args.symbol_bytes)
    symbols = _read_raw_symbols(args.input, args.sigma, sym_bytes)
    out = io.BytesIO()
    report = coder.encode_stream(params, symbols, out, backend=args.backend,
                                 seed=args.hash_seed)
    _write_bytes(args.output, out.getvalue())
    doc = {"command": "encode", "params": _params_doc(params),
           "report": report.to_dict()}
    lines = report.lines()
    if args.verify_bound:
        stats = analysis.EntropyStats.from_symbols(symbols)
        bound = analysis.check_bound(report, stats, params)
        doc["stats"] = stats.to_dict()
        doc["bound"] = bound.to_dict()
        lines += stats.lines() + bound.lines()
        lines.append(f"bound_check={'PASS' if bound.passed else 'FAIL'}")
    _emit_report(doc, lines, args, sys.stderr)
    if args.verify_bound and not doc["bound"]["passed"]:
        return 1
    return 0


def _cmd_decode(args) -> int:
    data = _read_bytes(args.input)
    params, backend, _n = coder.read_header(data)
    for name, given, actual in (("sigma", args.sigma, params.sigma),
                                ("lambda", args.lam, params.lam),
                                ("c", args.c, params.c)):
        if given is not None and given != actual:
            raise ParameterError(
                f"--{name} {given} contradicts the stream header ({actual})")
    symbols, report = coder.decode_stream(data)
    sym_bytes = _symbol_bytes(params.sigma, args.symbol_bytes)
    arr = np.asarray(symbols, dtype=_DTYPES[sym_bytes])
    _write_bytes(args.output, arr.tobytes())
    doc = {"command": "decode", "params": _params_doc(params), "backend": backend,
           "report": report.to_dict()}
    _emit_report(doc, report.lines(), args, sys.stderr)
    return 0


def _cmd_stats(args) -> int:
    sym_bytes = _symbol_bytes(args.sigma, args.symbol_bytes)
    symbols = _read_raw_symbols(args.input, args.sigma, sym_bytes)
    stats = analysis.EntropyStats.from_symbols(symbols)
    doc = {"command": "stats", "sigma": args.sigma, "stats": stats.to_dict()}
    _emit_report(doc, stats.lines(), args, sys.stdout)
    return 0


def _cmd_gen(args) -> int:
    arr = corpus.generate(args.dist, args.sigma, args.n, args.seed, s=args.s,
                          states=args.states, stickiness=args.stickiness)
    sym_bytes = _symbol_bytes(args.sigma, args.symbol_bytes)
    _write_bytes(args.output, arr.astype(_DTYPES[sym_bytes]).tobytes())
    return 0


def _cmd_params(args) -> int:
    params = derive_params(args.sigma, args.lam, args.c)
    delta = analysis.delta_term(params.lam, params.c)
    doc = {"command": "params", "params": _params_doc(params), "delta": delta}
    lines = [f"{k}={v}" for k, v in _params_doc(params).items()]
    lines.append(f"delta={delta:.6f}")
    _emit_report(doc, lines, args, sys.stdout)
    return 0


def _add_coder_args(p, required: bool):
    # decode only checks these against the header, so there they stay optional
    p.add_argument("--sigma", type=int, required=required,
                   help="alphabet size (symbols are 0..sigma-1)")
    p.add_argument("--lambda", dest="lam", type=float,
                   default=2.0 if required else None,
                   help="compression/memory trade-off, >= 1 (default 2)")
    p.add_argument("--c", type=int, default=10 if required else None,
                   help="window scale constant, >= 1 (default 10)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="swsc",
        description="Sliding-window adaptive Shannon coder for large alphabets.")
    sub = ap.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="compress a raw symbol file")
    enc.add_argument("input", nargs="?", default="-")
    enc.add_argument("output", nargs="?", default="-")
    _add_coder_args(enc, required=True)
    enc.add_argument("--backend", choices=("trie", "hashed"), default="trie",
                     help="dictionary backend (never changes the output bytes)")
    enc.add_argument("--hash-seed", type=int, default=0,
                     help="seed for the hashed backend (never changes the output)")
    enc.add_argument("--symbol-bytes", type=int, choices=(1, 2, 4), default=None,
                     help="force the raw symbol width instead of the smallest fit")
    enc.add_argument("--verify-bound", action="store_true",
                     help="check the encoding-length bound after encoding")
    enc.add_argument("--json", action="store_true")

    dec = sub.add_parser("decode", help="decompress a stream")
    dec.add_argument("input", nargs="?", default="-")
    dec.add_argument("output", nargs="?", default="-")
    _add_coder_args(dec, required=False)
    dec.add_argument("--symbol-bytes", type=int, choices=(1, 2, 4), default=None)
    dec.add_argument("--json", action="store_true")

    st = sub.add_parser("stats", help="entropy statistics of a raw symbol file")
    st.add_argument("input", nargs="?", default="-")
    st.add_argument("--sigma", type=int, required=True)
    st.add_argument("--symbol-bytes", type=int, choices=(1, 2, 4), default=None)
    st.add_argument("--json", action="store_true")

    gen = sub.add_parser("gen", help="generate a reproducible test corpus")
    gen.add_argument("output", nargs="?", default="-")
    gen.add_argument("--dist", choices=corpus.DISTRIBUTIONS, required=True)
    gen.add_argument("--sigma", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--s", type=float, default=1.0, help="zipf exponent")
    gen.add_argument("--states", type=int, default=8, help="markov state count")
    gen.add_argument("--stickiness", type=float, default=0.9,
                     help="markov stay probability")
    gen.add_argument("--symbol-bytes", type=int, choices=(1, 2, 4), default=None)

    par = sub.add_parser("params", help="print the derived coder constants")
    _add_coder_args(par, required=True)
    par.add_argument("--json", action="store_true")
    return ap


_COMMANDS = {"encode": _cmd_encode, "decode": _cmd_decode, "stats": _cmd_stats,
             "gen": _cmd_gen, "params": _cmd_params}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParameterError as e:
        print(f"swsc: parameter error: {e}", file=sys.stderr)
        return 5
    except CorruptStreamError as e:
        print(f"swsc: corrupt stream: {e}", file=sys.stderr)
        return 4
    except OSError as e:
        print(f"swsc: i/o error: {e}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

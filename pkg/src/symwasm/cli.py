"""Command-line launcher."""

import argparse
import codecs
import logging
import os
import shutil
import sys

from symwasm.binary.validator import load_module
from symwasm.engine import SELECTORS, Engine, RunConfig
from symwasm.errors import SymWasmError
from symwasm.report import summarize, write_report

log = logging.getLogger("symwasm")


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _non_negative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _text(text):
    """Decode backslash escapes such as ``\\n`` and ``\\x00`` into bytes."""
    try:
        return codecs.escape_decode(text.encode())[0]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad escape in {text!r}: {e}") from None


def _file_spec(text):
    name, sep, data = text.partition("=")
    if not sep or not name or "/" in name:
        raise argparse.ArgumentTypeError(f"expected NAME=TEXT, got {text!r}")
    return name, _text(data)


def build_parser():
    p = argparse.ArgumentParser(
        prog="symwasm",
        description="Symbolically execute a WebAssembly 1.0 binary and emit one solution per path.")
    p.add_argument("-f", dest="file", required=True, metavar="PATH", help="Wasm binary to analyze")
    p.add_argument("-s", dest="symbolic", action="store_true",
                   help="enable symbolic inputs (otherwise inputs are concrete)")
    p.add_argument("--sym_args", type=_positive, nargs="+", default=[], metavar="N",
                   help="one symbolic argv entry of N bytes per value")
    p.add_argument("--sym_stdin", type=_positive, default=0, metavar="N",
                   help="N symbolic bytes on stdin")
    p.add_argument("--sym_files", type=_positive, nargs=2, default=None, metavar=("C", "S"),
                   help="C preopened symbolic files named A, B, ... of S bytes each")
    p.add_argument("--args", nargs="*", default=[], metavar="ARG",
                   help="concrete argv entries placed before the symbolic ones")
    p.add_argument("--stdin", type=_text, default=None, metavar="TEXT",
                   help="concrete stdin contents (backslash escapes are decoded)")
    p.add_argument("--file", dest="files", type=_file_spec, action="append", default=[],
                   metavar="NAME=TEXT", help="concrete preopened file (repeatable)")
    p.add_argument("--env", action="append", default=[], metavar="KEY=VALUE",
                   help="environment variable (repeatable)")
    p.add_argument("--entry", default="_start", help="exported function to start from")
    p.add_argument("--selector", choices=sorted(SELECTORS), default="bfs")
    p.add_argument("-v", dest="verbosity", choices=["warning", "info", "debug"], default="warning")
    p.add_argument("--output-dir", default=None, metavar="DIR",
                   help="report directory (default ./output/<binary stem>/)")
    p.add_argument("--force", action="store_true", help="overwrite an existing output directory")
    p.add_argument("--max-states", type=_positive, default=None, metavar="N")
    p.add_argument("--max-depth", type=_non_negative, default=None, metavar="N")
    p.add_argument("--max-time", type=float, default=None, metavar="SECONDS")
    p.add_argument("--dump-smt", default=None, metavar="DIR",
                   help="write each final path condition as SMT-LIB v2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-cache", action="store_true", help="disable the solver cache pool")
    return p


def config_from_args(ns):
    """Map parsed flags onto a :class:`RunConfig`."""
    sym = ns.symbolic
    return RunConfig(
        entry=ns.entry,
        program_name=os.path.basename(ns.file),
        sym_args=list(ns.sym_args) if sym else [],
        sym_stdin=ns.sym_stdin if sym else 0,
        sym_files=tuple(ns.sym_files) if sym and ns.sym_files else (0, 0),
        args=list(ns.args),
        stdin=ns.stdin or b"",
        files=dict(ns.files),
        environ=list(ns.env),
        selector=ns.selector,
        verbosity=ns.verbosity,
        max_states=ns.max_states,
        max_depth=ns.max_depth,
        max_time=ns.max_time,
        seed=ns.seed,
        use_cache=not ns.no_cache,
        dump_smt=ns.dump_smt,
    )


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    logging.basicConfig(level=getattr(logging, ns.verbosity.upper()),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if not os.path.isfile(ns.file) or not os.access(ns.file, os.R_OK):
        parser.print_usage(sys.stderr)
        print(f"symwasm: error: cannot read {ns.file}", file=sys.stderr)
        return 2
    if not ns.symbolic and (ns.sym_args or ns.sym_stdin or ns.sym_files):
        log.warning("symbolic input flags are ignored without -s")
    stem = os.path.splitext(os.path.basename(ns.file))[0]
    out_dir = ns.output_dir or os.path.join("output", stem)
    if os.path.exists(out_dir) and os.listdir(out_dir):
        if not ns.force:
            print(f"symwasm: error: {out_dir} exists; pass --force to overwrite", file=sys.stderr)
            return 2
        shutil.rmtree(out_dir)
    config = config_from_args(ns)
    try:
        with open(ns.file, "rb") as f:
            module = load_module(f.read())
        engine = Engine(module, config)
        engine.root_state()  # resolve the entry before exploring
    except SymWasmError as e:
        print(f"symwasm: error: {e}", file=sys.stderr)
        return 1
    solutions = engine.run()
    summary = summarize(engine, solutions)
    write_report(out_dir, solutions, summary)
    st = summary["status"]
    log.info("%d paths (%d exited, %d trapped, %d parked) in %.2f s; report in %s",
             summary["paths"], st.get("exited", 0), st.get("trapped", 0), st.get("parked", 0),
             summary["wall_time"], out_dir)
    return 0

"""Access to the compiled C corpus and its per-program launcher flags."""

import json
import os
import subprocess
import sys

from symwasm.binary.validator import load_module
from symwasm.cli import build_parser, config_from_args
from symwasm.engine import Engine

ROOT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


def manifest():
    path = os.path.join(ROOT, "manifest.json")
    if not os.path.exists(path):
        subprocess.run([sys.executable, os.path.join(ROOT, "build.py")], check=True)
    with open(path) as f:
        return json.load(f)


def programs(group):
    return [p for p in manifest() if p["group"] == group]


def program(name):
    for p in manifest():
        if p["name"] == name:
            return p
    raise KeyError(name)


def wasm_path(p):
    return os.path.join(ROOT, p["wasm"])


def config(p, *extra):
    ns = build_parser().parse_args(["-f", wasm_path(p), *p["flags"], *extra])
    return config_from_args(ns)


def load(p):
    with open(wasm_path(p), "rb") as f:
        return load_module(f.read())


def explore(p, *extra, solver=None):
    """Returns (engine, solutions)."""
    eng = Engine(load(p), config(p, *extra), solver=solver)
    return eng, eng.run()


def replay_inputs(cfg, sol):
    """argv, stdin and files that reproduce ``sol`` on a concrete runtime."""
    argv = [cfg.program_name.encode()] + [a.encode() for a in cfg.args]
    stdin = cfg.stdin
    files = dict(cfg.files)
    for name, hexdata in sol.inputs_hex.items():
        data = bytes.fromhex(hexdata)
        if name.startswith("sym_arg_"):
            argv.append(data)
        elif name == "sym_stdin":
            stdin = data
        elif name.startswith("sym_file_"):
            files[name[len("sym_file_"):]] = data
    return argv, stdin, files

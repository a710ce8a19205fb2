"""Compile the C corpus to wasm32-wasi MVP binaries and write manifest.json.

Each source starts with a ``// symwasm: FLAGS`` line holding the launcher
flags used to run it, and may carry a ``// cflags: ...`` line.
Usage: python3 corpus/build.py [--force]
"""

import argparse
import json
import os
import shlex
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
SRC = os.path.join(HERE, "src")
OUT = os.path.join(HERE, "wasm")
CC = [sys.executable, "-m", "ziglang", "cc", "-target", "wasm32-wasi", "-mcpu=mvp", "-s"]
DEFAULT_CFLAGS = ["-O2"]


def header(path, key):
    with open(path) as f:
        for line in f:
            if not line.startswith("//"):
                break
            body = line[2:].strip()
            if body.startswith(key + ":"):
                return shlex.split(body[len(key) + 1:])
    return None


def sources():
    for group in ("paths", "concrete", ""):
        d = os.path.join(SRC, group)
        for name in sorted(os.listdir(d)):
            if name.endswith(".c"):
                yield group or "special", os.path.join(d, name)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--force", action="store_true", help="rebuild up-to-date binaries")
    ns = ap.parse_args(argv)
    os.makedirs(OUT, exist_ok=True)
    manifest = []
    for group, path in sources():
        stem = os.path.splitext(os.path.basename(path))[0]
        flags = header(path, "symwasm")
        if flags is None:
            sys.exit(f"{path}: missing '// symwasm:' header")
        out = os.path.join(OUT, stem + ".wasm")
        if ns.force or not os.path.exists(out) or os.path.getmtime(out) < os.path.getmtime(path):
            cflags = header(path, "cflags") or DEFAULT_CFLAGS
            subprocess.run(CC + cflags + ["-o", out, path], check=True)
            print("built", os.path.relpath(out, HERE))
        manifest.append({"name": stem, "group": group, "wasm": f"wasm/{stem}.wasm", "flags": flags})
    with open(os.path.join(HERE, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()

"""Run wasm32-wasi binaries under wasmtime, the reference WASI runtime."""

import os
import shutil
import tempfile
from dataclasses import dataclass

import wasmtime


@dataclass(frozen=True)
class Outcome:
    exit_code: int | None  # None when the run trapped
    trapped: bool
    stdout: bytes
    stderr: bytes

    def key(self):
        return ("trap" if self.trapped else self.exit_code, self.stdout)


class Reference:
    """Compiled module plus a scratch directory reused across runs."""

    def __init__(self, wasm_path):
        self.engine = wasmtime.Engine()
        self.module = wasmtime.Module.from_file(self.engine, wasm_path)
        self.linker = wasmtime.Linker(self.engine)
        self.linker.define_wasi()
        self.tmp = tempfile.mkdtemp(prefix="symwasm-ref-")
        self.root = os.path.join(self.tmp, "root")
        os.mkdir(self.root)
        self._stdin = os.path.join(self.tmp, "stdin")
        self._out = os.path.join(self.tmp, "stdout")
        self._err = os.path.join(self.tmp, "stderr")

    def close(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def run(self, argv, stdin=b"", files=None, env=()):
        """``argv`` holds bytes (or str) entries; each is cut at its first NUL."""
        for name in os.listdir(self.root):
            os.remove(os.path.join(self.root, name))
        for name, data in (files or {}).items():
            with open(os.path.join(self.root, name), "wb") as f:
                f.write(data)
        with open(self._stdin, "wb") as f:
            f.write(stdin)
        cfg = wasmtime.WasiConfig()
        cfg.argv = [_arg(a) for a in argv]
        cfg.env = [tuple(e.split("=", 1)) for e in env]
        cfg.stdin_file = self._stdin
        cfg.stdout_file = self._out
        cfg.stderr_file = self._err
        cfg.preopen_dir(self.root, ".")
        store = wasmtime.Store(self.engine)
        store.set_wasi(cfg)
        inst = self.linker.instantiate(store, self.module)
        code, trapped = 0, False
        try:
            inst.exports(store)["_start"](store)
        except wasmtime.ExitTrap as e:
            code = e.code
        except wasmtime.Trap:
            code, trapped = None, True
        with open(self._out, "rb") as f:
            out = f.read()
        with open(self._err, "rb") as f:
            err = f.read()
        return Outcome(code, trapped, out, err)


def _arg(a):
    if isinstance(a, bytes):
        a = a.split(b"\0", 1)[0].decode("utf-8")
    return a


def run_once(wasm_path, argv, stdin=b"", files=None, env=()):
    with Reference(wasm_path) as ref:
        return ref.run(argv, stdin, files, env)

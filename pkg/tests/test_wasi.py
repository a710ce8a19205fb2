import os

import pytest

from symwasm import terms as T
from symwasm.binary.opcodes import I32
from symwasm.engine import Engine, RunConfig
from symwasm.errors import SignatureMismatch
from symwasm.external import wasi
from symwasm.external.models import WASI, ModelSet, register_hook
from wasi_replay import run_once
from wasmgen import ModuleBuilder, i32c, i64c

ERR = wasi.ERRNO
# fixed guest addresses used by the programs below
IOV, OUT, OUT2, MSG, PATH = 16, 32, 40, 100, 200
RIGHTS = (1 << 29) - 1


def call(name):
    return ("call", name)


def program(body, data=()):
    """A ``_start`` that runs ``body`` (leaving an i32 errno/status) and exits with it."""
    b = ModuleBuilder()
    names = sorted({ins[1] for ins in body if ins[0] == "call"} | {"proc_exit"})
    idx = {}
    for n in names:
        sig = wasi.MODELS[n][1]
        idx[n] = b.import_func(WASI, n, sig.params, sig.results)
    b.memory(1)
    for off, payload in data:
        b.data(off, payload)
    code = [(0x10, idx[ins[1]]) if ins[0] == "call" else ins for ins in body]
    b.func([], [], code + [(0x10, idx["proc_exit"])], export="_start")
    return b


def both(tmp_path, b, args=(), stdin=b"", files=None):
    """(ours, reference) as (exit code, stdout) pairs."""
    cfg = RunConfig(program_name="t.wasm", args=list(args), stdin=stdin, files=dict(files or {}))
    sols = Engine(b.load(), cfg).run()
    assert len(sols) == 1
    s = sols[0]
    path = os.path.join(tmp_path, "t.wasm")
    with open(path, "wb") as f:
        f.write(b.encode())
    ref = run_once(path, ["t.wasm", *args], stdin, files)
    return (int(s.return_value), s.stdout), (ref.exit_code, ref.stdout)


def iov(base, length):
    return (IOV, base.to_bytes(4, "little") + length.to_bytes(4, "little"))


def load32(addr):
    return [i32c(addr), (0x28, 2, 0)]


CASES = {
    "write_stdout": ([i32c(1), i32c(IOV), i32c(1), i32c(OUT), call("fd_write")],
                     [iov(MSG, 3), (MSG, b"hi\n")]),
    "write_bad_fd": ([i32c(99), i32c(IOV), i32c(1), i32c(OUT), call("fd_write")],
                     [iov(MSG, 3), (MSG, b"hi\n")]),
    "write_count": ([i32c(1), i32c(IOV), i32c(1), i32c(OUT), call("fd_write"), (0x1A,)]
                    + load32(OUT), [iov(MSG, 5), (MSG, b"hello")]),
    "read_stdin": ([i32c(0), i32c(IOV), i32c(1), i32c(OUT), call("fd_read"), (0x1A,)]
                   + load32(OUT) + [i32c(MSG), (0x2D, 0, 0), (0x6A,)], [iov(MSG, 8)]),
    "read_stdout": ([i32c(1), i32c(IOV), i32c(1), i32c(OUT), call("fd_read")], [iov(MSG, 8)]),
    "close_bad": ([i32c(99), call("fd_close")], []),
    "args_sizes": ([i32c(OUT), i32c(OUT2), call("args_sizes_get"), (0x1A,)]
                   + load32(OUT) + [i32c(10), (0x6C,)] + load32(OUT2) + [(0x6A,)], []),
    "environ_sizes": ([i32c(OUT), i32c(OUT2), call("environ_sizes_get"), (0x1A,)]
                      + load32(OUT), []),
    "prestat_ok": ([i32c(3), i32c(OUT), call("fd_prestat_get")], []),
    "prestat_bad": ([i32c(4), i32c(OUT), call("fd_prestat_get")], []),
    "open_existing": ([i32c(3), i32c(0), i32c(PATH), i32c(1), i32c(0), i64c(RIGHTS), i64c(RIGHTS),
                       i32c(0), i32c(OUT), call("path_open"), (0x1A,)] + load32(OUT),
                      [(PATH, b"A")]),
    "open_missing": ([i32c(3), i32c(0), i32c(PATH), i32c(1), i32c(0), i64c(RIGHTS), i64c(RIGHTS),
                      i32c(0), i32c(OUT), call("path_open")], [(PATH, b"Z")]),
    "open_create": ([i32c(3), i32c(0), i32c(PATH), i32c(1), i32c(1), i64c(RIGHTS), i64c(RIGHTS),
                     i32c(0), i32c(OUT), call("path_open"), (0x1A,)] + load32(OUT),
                    [(PATH, b"N")]),
    "seek_file": ([i32c(3), i32c(0), i32c(PATH), i32c(1), i32c(0), i64c(RIGHTS), i64c(RIGHTS),
                   i32c(0), i32c(OUT), call("path_open"), (0x1A,)] + load32(OUT)
                  + [i64c(0), i32c(2), i32c(OUT2), call("fd_seek"), (0x1A,)] + load32(OUT2),
                  [(PATH, b"A")]),
    "seek_stdout": ([i32c(1), i64c(0), i32c(0), i32c(OUT2), call("fd_seek")], []),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_wasi_call_matches_wasmtime(tmp_path, name):
    body, data = CASES[name]
    ours, ref = both(tmp_path, program(body, data), args=["xy", "z"], stdin=b"Qrest",
                     files={"A": b"0123456789"})
    assert ours == ref


def test_errno_values():
    assert (ERR["badf"], ERR["noent"], ERR["inval"], ERR["notcapable"]) == (8, 44, 28, 76)


def test_symbolic_fd_splits_into_open_fds_plus_invalid():
    b = ModuleBuilder()
    sig = wasi.MODELS["fd_close"][1]
    close = b.import_func(WASI, "fd_close", sig.params, sig.results)
    b.memory(1)
    b.func([I32], [I32], [(0x20, 0), (0x10, close)], export="f")
    states = Engine(b.load(), RunConfig(entry="f")).explore()
    codes = sorted(T.evaluate(s.exit_code, {}) if s.exit_code.op is T.CONST else -1
                   for s in states)
    # stdin, stdout, stderr and the preopen close fine; everything else is badf
    assert codes == [0, 0, 0, 0, ERR["badf"]]


def _hooked_module():
    b = ModuleBuilder()
    sig = wasi.MODELS["random_get"][1]
    rg = b.import_func(WASI, "random_get", sig.params, sig.results)
    b.memory(1)
    b.func([], [I32], [i32c(0), i32c(4), (0x10, rg)], export="f")
    return b.load()


def test_register_hook_takes_precedence():
    m = _hooked_module()
    models = ModelSet(m)
    seen = []

    def handler(c):
        seen.append(c.name)
        return 7

    register_hook(models, (WASI, "random_get"), handler, signature=([I32, I32], [I32]))
    (s,) = Engine(m, RunConfig(entry="f"), models=models).explore()
    assert seen == ["random_get"]
    assert s.exit_code.value == 7


def test_register_hook_signature_mismatch():
    models = ModelSet(_hooked_module())
    with pytest.raises(SignatureMismatch):
        register_hook(models, (WASI, "random_get"), lambda c: 0, signature=([I32], [I32]))


def test_unknown_import_falls_back_to_stack_balance():
    b = ModuleBuilder()
    imp = b.import_func("env", "mystery", [I32], [I32])
    b.func([], [I32], [i32c(3), (0x10, imp)], export="f")
    (s,) = Engine(b.load(), RunConfig(entry="f")).explore()
    assert s.exit_code.op is T.VAR
    assert any("stack balance" in w for w in s.warnings)

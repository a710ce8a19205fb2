import math
import random

import pytest

from symwasm import floats
from symwasm import terms as T
from symwasm.engine import Engine, RunConfig
from symwasm.external import libc
from symwasm.solver import holds
from wasmgen import F64, I32, I64, ModuleBuilder, i32c

SAMPLES = [0, 0x41, 0x4100, 0x414243, 0x41424344, 0x00410041, 0xFFFFFFFF, 0x80808000]


def values(seed=0, n=120):
    rng = random.Random(seed)
    out = list(SAMPLES)
    for _ in range(n):
        # bias towards zero bytes so every string length shows up
        out.append(int.from_bytes(bytes(rng.choice([0, 0x41, 0x42, rng.getrandbits(8)])
                                        for _ in range(4)), "little"))
    return out


def explore(b, entry="f"):
    return Engine(b.load(), RunConfig(entry=entry)).explore()


def value_of(states, model):
    """Result of the unique state whose path condition holds under ``model``."""
    hits = [s for s in states if holds(s.path_condition.preds, model)]
    assert len(hits) == 1
    return T.evaluate(hits[0].exit_code, model, default=0)


def c_string(word):
    s = word.to_bytes(4, "little") + b"\0"
    return s[:s.index(b"\0")]


def with_libc(b, name):
    """Export a decoy body under ``name``; the libc model replaces it."""
    _, sig = libc.MODELS[name]
    body = [(0x00,)]  # unreachable: executing the decoy would trap
    return b.func(sig.params, sig.results, body, export=name)


def test_strlen_on_symbolic_bytes():
    b = ModuleBuilder()
    b.memory(1)
    fn = with_libc(b, "strlen")
    b.func([I32], [I32], [i32c(0), (0x20, 0), (0x36, 2, 0), i32c(0), (0x10, fn)], export="f")
    states = explore(b)
    assert len(states) == 1  # the model merges lengths into one ite, no forking
    for w in values():
        assert value_of(states, {"param_0": w}) == len(c_string(w))


@pytest.mark.parametrize("name", ["strcmp", "strncmp"])
def test_string_compare_on_symbolic_bytes(name):
    b = ModuleBuilder()
    b.memory(1)
    b.data(16, b"AB\0")
    fn = with_libc(b, name)
    args = [i32c(0), i32c(16)] + ([i32c(2)] if name == "strncmp" else [])
    b.func([I32], [I32], [i32c(0), (0x20, 0), (0x36, 2, 0)] + args + [(0x10, fn)], export="f")
    states = explore(b)
    for w in values(1):
        left = w.to_bytes(4, "little") + b"\0"
        right = b"AB\0"
        limit = 2 if name == "strncmp" else 5
        want = 0
        for k in range(limit):
            if left[k] != right[k] or left[k] == 0:
                want = left[k] - right[k]
                break
        assert value_of(states, {"param_0": w}) == want & 0xFFFFFFFF


def test_memset_and_memcpy():
    b = ModuleBuilder()
    b.memory(1)
    b.data(32, b"wxyz")
    mset = with_libc(b, "memset")
    mcpy = with_libc(b, "memcpy")
    body = [i32c(0), (0x20, 0), i32c(3), (0x10, mset), (0x1A,),
            i32c(4), i32c(32), i32c(2), (0x10, mcpy), (0x1A,),
            i32c(0), (0x28, 2, 0), i32c(4), (0x28, 2, 0), (0x73,)]
    b.func([I32], [I32], body, export="f")
    (s,) = explore(b)
    for x in (0, 0x41, 0x1FF):
        byte = x & 0xFF
        want = (byte * 0x010101) ^ int.from_bytes(b"wx\0\0", "little")
        assert T.evaluate(s.exit_code, {"param_0": x}) == want


def test_abs():
    b = ModuleBuilder()
    fn = with_libc(b, "abs")
    b.func([I32], [I32], [(0x20, 0), (0x10, fn)], export="f")
    (s,) = explore(b)
    for x in (0, 1, -1, 12345, -(2 ** 31), 2 ** 31 - 1):
        assert T.evaluate(s.exit_code, {"param_0": x & 0xFFFFFFFF}) == abs(x) & 0xFFFFFFFF


@pytest.mark.parametrize("x,y", [(2.0, 10.0), (9.0, 0.5), (-2.0, 3.0), (0.0, 0.0), (1.5, -2.0)])
def test_pow_concrete(x, y):
    b = ModuleBuilder()
    fn = with_libc(b, "pow")
    body = [(0x44, floats.from_float(x, 64)), (0x44, floats.from_float(y, 64)), (0x10, fn),
            (0xBD,)]
    b.func([], [I64], body, export="f")
    (s,) = explore(b)
    assert floats.to_float(s.exit_code.value, 64) == math.pow(x, y)


def test_signature_mismatch_disables_interception():
    b = ModuleBuilder()
    b.func([I64], [I32], [i32c(42)], export="strlen")
    b.func([], [I32], [(0x42, 0), (0x10, 0)], export="f")
    (s,) = explore(b)
    assert s.exit_code.value == 42


def test_models_have_wasm_signatures():
    for name, (_, sig) in libc.MODELS.items():
        assert all(t in (I32, I64, F64) for t in sig.params + sig.results), name

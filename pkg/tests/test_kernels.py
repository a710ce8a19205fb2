"""The compiled kernels must agree with the pure-Python reference on every input."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import corpus
from symwasm import _kernels as K
from symwasm._kernels import _pykernels as P
from symwasm.binary.encoder import sleb, uleb

try:
    from symwasm._kernels import _ckernels as C
except ImportError:  # pragma: no cover - the fallback build
    C = None

needs_c = pytest.mark.skipif(C is None, reason="compiled kernels not built")

BINOPS = list(range(15))
CMPS = list(range(10))
UNOPS = [K.CLZ, K.CTZ, K.POPCNT, K.EQZ]

edge = st.sampled_from([0, 1, 2, 31, 32, 63, 64, 0x7FFFFFFF, 0x80000000, 0xFFFFFFFF,
                        0x7FFFFFFFFFFFFFFF, 0x8000000000000000, 0xFFFFFFFFFFFFFFFF])


def operand(width):
    mask = (1 << width) - 1
    return st.one_of(edge, st.integers(0, mask)).map(lambda v: v & mask)


@st.composite
def binop_case(draw):
    w = draw(st.sampled_from([32, 64]))
    return draw(st.sampled_from(BINOPS)), draw(operand(w)), draw(operand(w)), w


@needs_c
@settings(max_examples=3000, deadline=None)
@given(binop_case())
def test_binop_agrees(case):
    op, a, b, w = case
    assert C.int_binop(op, a, b, w) == P.int_binop(op, a, b, w)


@needs_c
@settings(max_examples=2000, deadline=None)
@given(binop_case(), st.sampled_from(CMPS))
def test_cmp_agrees(case, op):
    _, a, b, w = case
    assert C.int_cmp(op, a, b, w) == P.int_cmp(op, a, b, w)


@needs_c
@settings(max_examples=1000, deadline=None)
@given(st.sampled_from([32, 64]).flatmap(lambda w: st.tuples(st.just(w), operand(w))),
       st.sampled_from(UNOPS))
def test_unop_agrees(wa, op):
    w, a = wa
    assert C.int_unop(op, a, w) == P.int_unop(op, a, w)


@needs_c
@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 2 ** 64 - 1), st.sampled_from([32, 64]))
def test_leb_agrees(v, bits):
    v &= (1 << bits) - 1
    data = b"\x99" + uleb(v)
    assert C.read_uleb(data, 1, bits) == P.read_uleb(data, 1, bits) == (v, len(data))
    s = v - (1 << bits) if v >> (bits - 1) else v
    data = b"\x99" + sleb(s)
    assert C.read_sleb(data, 1, bits) == P.read_sleb(data, 1, bits) == (s, len(data))


@pytest.mark.parametrize("impl", [P] + ([C] if C else []), ids=lambda m: m.__name__.rsplit(".", 1)[1])
@pytest.mark.parametrize("data,bits", [(b"\x80", 32), (b"\xff\xff\xff\xff\x7f", 32),
                                       (b"\x80\x80\x80\x80\x80\x00", 32)])
def test_leb_rejects(impl, data, bits):
    with pytest.raises(ValueError):
        impl.read_uleb(data, 0, bits)


@pytest.mark.parametrize("impl", [P] + ([C] if C else []), ids=lambda m: m.__name__.rsplit(".", 1)[1])
def test_trap_signals(impl):
    assert impl.int_binop(K.DIV_U, 5, 0, 32) == K.TRAP_DIV_ZERO
    assert impl.int_binop(K.DIV_S, 0x80000000, 0xFFFFFFFF, 32) == K.TRAP_OVERFLOW
    assert impl.int_binop(K.REM_S, 0x80000000, 0xFFFFFFFF, 32) == 0


def test_backend_reported():
    assert K.BACKEND in ("compiled", "python")


def test_pure_python_fallback_runs_the_engine(tmp_path):
    env = dict(os.environ, SYMWASM_PURE_PYTHON="1")
    code = ("import symwasm._kernels as K, sys; assert K.BACKEND == 'python'; "
            "from symwasm.cli import main; sys.exit(main(sys.argv[1:]))")
    p = corpus.program("p01_nested_if")
    r = subprocess.run([sys.executable, "-c", code, "-f", corpus.wasm_path(p), *p["flags"],
                        "--output-dir", str(tmp_path / "o")], env=env, capture_output=True)
    assert r.returncode == 0, r.stderr
    assert len(os.listdir(tmp_path / "o")) > 2

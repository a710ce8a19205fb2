import pytest
import wasmtime

import corpus
from symwasm.binary import opcodes as oc
from symwasm.binary.decoder import parse_module
from symwasm.binary.encoder import encode_module, sleb, uleb
from symwasm.binary.validator import load_module
from symwasm.errors import MalformedBinary, NoSuchExport, UnsupportedFeature, ValidationError
from wasmgen import END, I32, I64, ModuleBuilder, i32c

HEADER = b"\0asm\x01\0\0\0"


def _corpus_bytes():
    for p in corpus.manifest():
        with open(corpus.wasm_path(p), "rb") as f:
            yield p["name"], f.read()


def test_leb_encoding():
    assert uleb(0) == b"\0"
    assert uleb(624485) == bytes([0xE5, 0x8E, 0x26])
    assert sleb(-1) == b"\x7f"
    assert sleb(-123456) == bytes([0xC0, 0xBB, 0x78])
    assert sleb(64) == bytes([0xC0, 0x00])


@pytest.mark.parametrize("name,data", list(_corpus_bytes())[:20])
def test_corpus_round_trip(name, data):
    m = load_module(data)
    once = encode_module(m)
    again = encode_module(parse_module(once))
    assert once == again
    # the re-encoded module must be valid wasm for an independent engine too
    wasmtime.Module(wasmtime.Engine(), once)
    assert [f.body for f in parse_module(once).functions] == [f.body for f in m.functions]


def test_all_corpus_binaries_load():
    n = 0
    for _, data in _corpus_bytes():
        m = load_module(data)
        assert m.validated
        assert m.resolve_entry("_start") is not None
        n += 1
    assert n >= 80


def test_bad_magic_and_version():
    with pytest.raises(MalformedBinary, match="magic"):
        parse_module(b"\0asn\x01\0\0\0")
    with pytest.raises(MalformedBinary, match="version"):
        parse_module(b"\0asm\x02\0\0\0")
    with pytest.raises(MalformedBinary):
        parse_module(b"\0as")


def test_truncated_section():
    with pytest.raises(MalformedBinary):
        parse_module(HEADER + bytes([1, 10, 1]))


def test_duplicate_section_rejected():
    sec = bytes([1, 1, 0])
    with pytest.raises(MalformedBinary):
        parse_module(HEADER + sec + sec)


def _raw_func(code):
    """A module with one ``[] -> []`` function whose body is ``code`` + end."""
    body = b"\0" + bytes(code) + b"\x0b"
    entry = uleb(len(body)) + body
    return (HEADER + b"\x01\x04\x01\x60\0\0" + b"\x03\x02\x01\0"
            + b"\x0a" + uleb(len(entry) + 1) + b"\x01" + entry)


def test_raw_module_helper_is_valid():
    assert load_module(_raw_func([0x01])).functions[0].body[0] == (0x01,)


@pytest.mark.parametrize("code", [[0x41, 0, 0xC0, 0x1A], [0x41, 0, 0xC2, 0x1A], [0xFC, 0x00]])
def test_post_mvp_opcodes_rejected(code):
    # i32.extend8_s, i64.extend8_s, and the 0xfc prefix (saturating/bulk)
    with pytest.raises((UnsupportedFeature, MalformedBinary)) as e:
        parse_module(_raw_func(code))
    if code[0] != 0xFC:
        assert isinstance(e.value, UnsupportedFeature)


def test_illegal_opcode_is_malformed():
    with pytest.raises(MalformedBinary, match="illegal opcode"):
        parse_module(_raw_func([0x27]))


def test_type_errors_rejected():
    b = ModuleBuilder()
    b.func([], [I32], [(0x42, 1)])  # i64 result where i32 is declared
    with pytest.raises(ValidationError):
        b.load()
    b = ModuleBuilder()
    b.func([], [], [(0x6A,)])  # i32.add on an empty stack
    with pytest.raises(ValidationError):
        b.load()
    b = ModuleBuilder()
    b.func([I64], [I64], [(0x20, 0), i32c(1), (0x7C,)])
    with pytest.raises(ValidationError):
        b.load()


def test_unknown_indices_rejected():
    b = ModuleBuilder()
    b.func([], [], [(0x10, 7)])
    with pytest.raises(ValidationError):
        b.load()
    b = ModuleBuilder()
    b.func([], [I32], [(0x28, 2, 0)])
    with pytest.raises(ValidationError):
        b.load()  # load without a memory


def test_multi_value_rejected():
    b = ModuleBuilder()
    b.func([], [I32, I32], [i32c(1), i32c(2)])
    with pytest.raises((ValidationError, UnsupportedFeature)):
        load_module(b.encode())


def test_unreachable_code_is_polymorphic():
    b = ModuleBuilder()
    b.func([], [I32], [(0x00,), (0x6A,)], export="f")
    m = b.load()
    assert m.resolve_entry("f") is not None


def test_branch_targets_are_resolved():
    b = ModuleBuilder()
    body = [(0x02, I32), i32c(5), (0x0C, 0), END]  # block (result i32) 5 br 0 end
    b.func([], [I32], body, export="f")
    m = b.load()
    assert m.functions[0].code


def test_missing_export():
    b = ModuleBuilder()
    b.func([], [], [], export="f")
    m = b.load()
    with pytest.raises(NoSuchExport):
        m.resolve_entry("nope")


def test_opcode_table_covers_mvp():
    names = {info.name for info in oc.OPCODES.values()}
    for n in ("i32.add", "f64.nearest", "br_table", "call_indirect", "memory.grow",
              "i64.trunc_f64_u", "f32.reinterpret_i32"):
        assert n in names
    assert len(oc.OPCODES) >= 172

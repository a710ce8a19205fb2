"""The Wasm 1.0 (MVP) opcode table."""

from typing import NamedTuple

I32, I64, F32, F64 = 0x7F, 0x7E, 0x7D, 0x7C
FUNCREF = 0x70
BLOCK_EMPTY = 0x40
VALTYPES = (I32, I64, F32, F64)
VALTYPE_NAMES = {I32: "i32", I64: "i64", F32: "f32", F64: "f64"}


class OpInfo(NamedTuple):
    code: int
    name: str
    imm: str  # immediate layout, see decoder
    sig: tuple | None  # (params, results) for fixed-signature ops


# immediate kinds
NONE = ""
BLOCKTYPE = "blocktype"
LABEL = "label"
LABELS = "labels"
FUNC = "func"
INDIRECT = "indirect"
LOCAL = "local"
GLOBAL = "global"
MEMARG = "memarg"
MEMIDX = "memidx"
CI32 = "i32"
CI64 = "i64"
CF32 = "f32"
CF64 = "f64"

OPCODES: dict[int, OpInfo] = {}


def _op(code, name, imm=NONE, sig=None):
    OPCODES[code] = OpInfo(code, name, imm, sig)


_op(0x00, "unreachable")
_op(0x01, "nop")
_op(0x02, "block", BLOCKTYPE)
_op(0x03, "loop", BLOCKTYPE)
_op(0x04, "if", BLOCKTYPE)
_op(0x05, "else")
_op(0x0B, "end")
_op(0x0C, "br", LABEL)
_op(0x0D, "br_if", LABEL)
_op(0x0E, "br_table", LABELS)
_op(0x0F, "return")
_op(0x10, "call", FUNC)
_op(0x11, "call_indirect", INDIRECT)
_op(0x1A, "drop")
_op(0x1B, "select")
_op(0x20, "local.get", LOCAL)
_op(0x21, "local.set", LOCAL)
_op(0x22, "local.tee", LOCAL)
_op(0x23, "global.get", GLOBAL)
_op(0x24, "global.set", GLOBAL)

# (code, name, value type, access width in bytes)
LOADS = [
    (0x28, "i32.load", I32, 4), (0x29, "i64.load", I64, 8),
    (0x2A, "f32.load", F32, 4), (0x2B, "f64.load", F64, 8),
    (0x2C, "i32.load8_s", I32, 1), (0x2D, "i32.load8_u", I32, 1),
    (0x2E, "i32.load16_s", I32, 2), (0x2F, "i32.load16_u", I32, 2),
    (0x30, "i64.load8_s", I64, 1), (0x31, "i64.load8_u", I64, 1),
    (0x32, "i64.load16_s", I64, 2), (0x33, "i64.load16_u", I64, 2),
    (0x34, "i64.load32_s", I64, 4), (0x35, "i64.load32_u", I64, 4),
]
STORES = [
    (0x36, "i32.store", I32, 4), (0x37, "i64.store", I64, 8),
    (0x38, "f32.store", F32, 4), (0x39, "f64.store", F64, 8),
    (0x3A, "i32.store8", I32, 1), (0x3B, "i32.store16", I32, 2),
    (0x3C, "i64.store8", I64, 1), (0x3D, "i64.store16", I64, 2),
    (0x3E, "i64.store32", I64, 4),
]
MEM_WIDTH = {}
for _c, _n, _t, _w in LOADS:
    _op(_c, _n, MEMARG, ((I32,), (_t,)))
    MEM_WIDTH[_c] = _w
for _c, _n, _t, _w in STORES:
    _op(_c, _n, MEMARG, ((I32, _t), ()))
    MEM_WIDTH[_c] = _w
_op(0x3F, "memory.size", MEMIDX, ((), (I32,)))
_op(0x40, "memory.grow", MEMIDX, ((I32,), (I32,)))

_op(0x41, "i32.const", CI32, ((), (I32,)))
_op(0x42, "i64.const", CI64, ((), (I64,)))
_op(0x43, "f32.const", CF32, ((), (F32,)))
_op(0x44, "f64.const", CF64, ((), (F64,)))


def _group(start, names, sig):
    for i, n in enumerate(names):
        _op(start + i, n, NONE, sig)


_group(0x45, ["i32.eqz"], ((I32,), (I32,)))
_group(0x46, ["i32.eq", "i32.ne", "i32.lt_s", "i32.lt_u", "i32.gt_s", "i32.gt_u",
              "i32.le_s", "i32.le_u", "i32.ge_s", "i32.ge_u"], ((I32, I32), (I32,)))
_group(0x50, ["i64.eqz"], ((I64,), (I32,)))
_group(0x51, ["i64.eq", "i64.ne", "i64.lt_s", "i64.lt_u", "i64.gt_s", "i64.gt_u",
              "i64.le_s", "i64.le_u", "i64.ge_s", "i64.ge_u"], ((I64, I64), (I32,)))
_group(0x5B, ["f32.eq", "f32.ne", "f32.lt", "f32.gt", "f32.le", "f32.ge"], ((F32, F32), (I32,)))
_group(0x61, ["f64.eq", "f64.ne", "f64.lt", "f64.gt", "f64.le", "f64.ge"], ((F64, F64), (I32,)))
_group(0x67, ["i32.clz", "i32.ctz", "i32.popcnt"], ((I32,), (I32,)))
_group(0x6A, ["i32.add", "i32.sub", "i32.mul", "i32.div_s", "i32.div_u", "i32.rem_s", "i32.rem_u",
              "i32.and", "i32.or", "i32.xor", "i32.shl", "i32.shr_s", "i32.shr_u", "i32.rotl",
              "i32.rotr"], ((I32, I32), (I32,)))
_group(0x79, ["i64.clz", "i64.ctz", "i64.popcnt"], ((I64,), (I64,)))
_group(0x7C, ["i64.add", "i64.sub", "i64.mul", "i64.div_s", "i64.div_u", "i64.rem_s", "i64.rem_u",
              "i64.and", "i64.or", "i64.xor", "i64.shl", "i64.shr_s", "i64.shr_u", "i64.rotl",
              "i64.rotr"], ((I64, I64), (I64,)))
_group(0x8B, ["f32.abs", "f32.neg", "f32.ceil", "f32.floor", "f32.trunc", "f32.nearest",
              "f32.sqrt"], ((F32,), (F32,)))
_group(0x92, ["f32.add", "f32.sub", "f32.mul", "f32.div", "f32.min", "f32.max",
              "f32.copysign"], ((F32, F32), (F32,)))
_group(0x99, ["f64.abs", "f64.neg", "f64.ceil", "f64.floor", "f64.trunc", "f64.nearest",
              "f64.sqrt"], ((F64,), (F64,)))
_group(0xA0, ["f64.add", "f64.sub", "f64.mul", "f64.div", "f64.min", "f64.max",
              "f64.copysign"], ((F64, F64), (F64,)))

_CONVERSIONS = [
    (0xA7, "i32.wrap_i64", I64, I32),
    (0xA8, "i32.trunc_f32_s", F32, I32), (0xA9, "i32.trunc_f32_u", F32, I32),
    (0xAA, "i32.trunc_f64_s", F64, I32), (0xAB, "i32.trunc_f64_u", F64, I32),
    (0xAC, "i64.extend_i32_s", I32, I64), (0xAD, "i64.extend_i32_u", I32, I64),
    (0xAE, "i64.trunc_f32_s", F32, I64), (0xAF, "i64.trunc_f32_u", F32, I64),
    (0xB0, "i64.trunc_f64_s", F64, I64), (0xB1, "i64.trunc_f64_u", F64, I64),
    (0xB2, "f32.convert_i32_s", I32, F32), (0xB3, "f32.convert_i32_u", I32, F32),
    (0xB4, "f32.convert_i64_s", I64, F32), (0xB5, "f32.convert_i64_u", I64, F32),
    (0xB6, "f32.demote_f64", F64, F32),
    (0xB7, "f64.convert_i32_s", I32, F64), (0xB8, "f64.convert_i32_u", I32, F64),
    (0xB9, "f64.convert_i64_s", I64, F64), (0xBA, "f64.convert_i64_u", I64, F64),
    (0xBB, "f64.promote_f32", F32, F64),
    (0xBC, "i32.reinterpret_f32", F32, I32), (0xBD, "i64.reinterpret_f64", F64, I64),
    (0xBE, "f32.reinterpret_i32", I32, F32), (0xBF, "f64.reinterpret_i64", I64, F64),
]
for _c, _n, _src, _dst in _CONVERSIONS:
    _op(_c, _n, NONE, ((_src,), (_dst,)))

BY_NAME = {info.name: code for code, info in OPCODES.items()}

# Known post-MVP single-byte opcodes and prefixes; these are rejected as
# unsupported rather than malformed.
POST_MVP_OPCODES = {
    0x06: "try", 0x07: "catch", 0x08: "throw", 0x09: "rethrow", 0x12: "return_call",
    0x13: "return_call_indirect", 0x18: "delegate", 0x19: "catch_all", 0x1C: "select t",
    0x25: "table.get", 0x26: "table.set",
    0xC0: "i32.extend8_s", 0xC1: "i32.extend16_s", 0xC2: "i64.extend8_s",
    0xC3: "i64.extend16_s", 0xC4: "i64.extend32_s",
    0xD0: "ref.null", 0xD1: "ref.is_null", 0xD2: "ref.func",
    0xFB: "gc prefix", 0xFC: "misc prefix (saturating/bulk memory)", 0xFD: "simd prefix",
    0xFE: "threads prefix",
}

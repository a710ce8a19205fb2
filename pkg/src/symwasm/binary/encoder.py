"""Wasm 1.0 binary encoder (inverse of the decoder, section order normalized)."""

import struct

from symwasm.binary import opcodes as oc
from symwasm.binary.module import KIND_FUNC, KIND_GLOBAL, KIND_MEMORY, KIND_TABLE


def uleb(v):
    out = bytearray()
    while True:
        b = v & 0x7F
        v >>= 7
        if v:
            out.append(b | 0x80)
        else:
            out.append(b)
            return bytes(out)


def sleb(v):
    out = bytearray()
    while True:
        b = v & 0x7F
        v >>= 7
        if (v == 0 and not b & 0x40) or (v == -1 and b & 0x40):
            out.append(b)
            return bytes(out)
        out.append(b | 0x80)


def _signed(v, bits):
    return v - (1 << bits) if v >> (bits - 1) else v


def _name(s):
    raw = s.encode("utf-8")
    return uleb(len(raw)) + raw


def _vec(items, fn):
    return uleb(len(items)) + b"".join(fn(x) for x in items)


def _limits(lim):
    if lim.max is None:
        return b"\x00" + uleb(lim.min)
    return b"\x01" + uleb(lim.min) + uleb(lim.max)


def _functype(ft):
    return b"\x60" + _vec(ft.params, lambda t: bytes([t])) + _vec(ft.results, lambda t: bytes([t]))


def _globaltype(gt):
    return bytes([gt.valtype, int(gt.mutable)])


def encode_instr(ins):
    op = ins[0]
    info = oc.OPCODES[op]
    imm = info.imm
    head = bytes([op])
    if not imm:
        return head
    if imm == oc.BLOCKTYPE:
        return head + bytes([ins[1]])
    if imm in (oc.LABEL, oc.FUNC, oc.LOCAL, oc.GLOBAL):
        return head + uleb(ins[1])
    if imm == oc.MEMARG:
        return head + uleb(ins[1]) + uleb(ins[2])
    if imm == oc.CI32:
        return head + sleb(_signed(ins[1] & 0xFFFFFFFF, 32))
    if imm == oc.CI64:
        return head + sleb(_signed(ins[1] & 0xFFFFFFFFFFFFFFFF, 64))
    if imm == oc.CF32:
        return head + struct.pack("<I", ins[1])
    if imm == oc.CF64:
        return head + struct.pack("<Q", ins[1])
    if imm == oc.LABELS:
        return head + _vec(ins[1], uleb) + uleb(ins[2])
    if imm == oc.INDIRECT:
        return head + uleb(ins[1]) + b"\x00"
    if imm == oc.MEMIDX:
        return head + b"\x00"
    raise AssertionError(imm)


def encode_expr(instrs):
    return b"".join(encode_instr(i) for i in instrs)


def _import(imp):
    out = _name(imp.module) + _name(imp.name) + bytes([imp.kind])
    if imp.kind == KIND_FUNC:
        return out + uleb(imp.desc)
    if imp.kind == KIND_TABLE:
        return out + bytes([imp.desc.elemtype]) + _limits(imp.desc.limits)
    if imp.kind == KIND_MEMORY:
        return out + _limits(imp.desc)
    if imp.kind == KIND_GLOBAL:
        return out + _globaltype(imp.desc)
    raise AssertionError(imp.kind)


def _code(fn):
    body = _vec(fn.locals, lambda g: uleb(g[0]) + bytes([g[1]])) + encode_expr(fn.body)
    return uleb(len(body)) + body


def _section(sid, payload):
    return bytes([sid]) + uleb(len(payload)) + payload


def encode_module(m, include_customs=True):
    """Encode ``m`` back to the binary format. Custom sections are emitted last."""
    out = bytearray(b"\x00asm\x01\x00\x00\x00")
    if m.types:
        out += _section(1, _vec(m.types, _functype))
    if m.imports:
        out += _section(2, _vec(m.imports, _import))
    if m.functions:
        out += _section(3, _vec(m.functions, lambda f: uleb(f.type_idx)))
    if m.tables:
        out += _section(4, _vec(m.tables, lambda t: bytes([t.elemtype]) + _limits(t.limits)))
    if m.memories:
        out += _section(5, _vec(m.memories, _limits))
    if m.globals:
        out += _section(6, _vec(m.globals, lambda g: _globaltype(g.type) + encode_expr(g.init)))
    if m.exports:
        out += _section(7, _vec(m.exports, lambda e: _name(e.name) + bytes([e.kind]) + uleb(e.index)))
    if m.start is not None:
        out += _section(8, uleb(m.start))
    if m.elements:
        out += _section(9, _vec(m.elements, lambda s: b"\x00" + encode_expr(s.offset) + _vec(s.funcs, uleb)))
    if m.functions:
        out += _section(10, _vec(m.functions, _code))
    if m.data:
        out += _section(11, _vec(m.data, lambda d: b"\x00" + encode_expr(d.offset) + uleb(len(d.data)) + d.data))
    if include_customs:
        for c in m.customs:
            out += _section(0, _name(c.name) + c.payload)
    return bytes(out)

"""Wasm 1.0 binary decoder."""

import struct

from symwasm import _kernels
from symwasm.binary import opcodes as oc
from symwasm.binary.module import (
    CustomSection, DataSegment, ElemSegment, Export, Function, FuncType, Global, GlobalType,
    Import, Limits, TableType, WasmModule, KIND_FUNC, KIND_TABLE, KIND_MEMORY, KIND_GLOBAL,
)
from symwasm.errors import MalformedBinary, UnsupportedFeature

MAGIC = b"\x00asm"
VERSION = b"\x01\x00\x00\x00"
MAX_LOCALS = 50000

SEC_CUSTOM, SEC_TYPE, SEC_IMPORT, SEC_FUNCTION, SEC_TABLE, SEC_MEMORY = 0, 1, 2, 3, 4, 5
SEC_GLOBAL, SEC_EXPORT, SEC_START, SEC_ELEMENT, SEC_CODE, SEC_DATA = 6, 7, 8, 9, 10, 11
SEC_DATACOUNT = 12


class Reader:
    __slots__ = ("data", "pos", "end")

    def __init__(self, data, pos=0, end=None):
        self.data = data
        self.pos = pos
        self.end = len(data) if end is None else end

    def fail(self, msg):
        raise MalformedBinary(msg, self.pos)

    def byte(self):
        if self.pos >= self.end:
            self.fail("unexpected end")
        b = self.data[self.pos]
        self.pos += 1
        return b

    def bytes(self, n):
        if self.pos + n > self.end:
            self.fail("unexpected end")
        out = bytes(self.data[self.pos:self.pos + n])
        self.pos += n
        return out

    def u32(self):
        try:
            v, pos = _kernels.read_uleb(self.data, self.pos, 32)
        except ValueError as exc:
            self.fail(str(exc))
        if pos > self.end:
            self.fail("unexpected end")
        self.pos = pos
        return v

    def s32(self):
        try:
            v, pos = _kernels.read_sleb(self.data, self.pos, 32)
        except ValueError as exc:
            self.fail(str(exc))
        if pos > self.end:
            self.fail("unexpected end")
        self.pos = pos
        return v

    def s64(self):
        try:
            v, pos = _kernels.read_sleb(self.data, self.pos, 64)
        except ValueError as exc:
            self.fail(str(exc))
        if pos > self.end:
            self.fail("unexpected end")
        self.pos = pos
        return v

    def name(self):
        n = self.u32()
        raw = self.bytes(n)
        try:
            return raw.decode("utf-8")
        except UnicodeDecodeError:
            self.fail("malformed UTF-8 encoding")

    def vec(self, fn):
        return [fn() for _ in range(self.u32())]

    def at_end(self):
        return self.pos >= self.end


def _valtype(r):
    t = r.byte()
    if t not in oc.VALTYPES:
        if t in (0x7B, 0x70, 0x6F):
            raise UnsupportedFeature(f"value type {t:#x} is not part of Wasm 1.0", r.pos - 1)
        r.fail(f"invalid value type {t:#x}")
    return t


def _limits(r):
    flag = r.byte()
    if flag == 0:
        return Limits(r.u32())
    if flag == 1:
        lo = r.u32()
        return Limits(lo, r.u32())
    if flag in (2, 3, 4, 5, 6, 7):
        raise UnsupportedFeature("shared/64-bit limits are not part of Wasm 1.0", r.pos - 1)
    r.fail("integer too large")


def _functype(r):
    if r.byte() != 0x60:
        r.fail("integer representation too long")
    params = tuple(r.vec(lambda: _valtype(r)))
    results = tuple(r.vec(lambda: _valtype(r)))
    return FuncType(params, results)


def _tabletype(r):
    et = r.byte()
    if et != oc.FUNCREF:
        if et == 0x6F:
            raise UnsupportedFeature("externref tables are not part of Wasm 1.0", r.pos - 1)
        r.fail("malformed element type")
    return TableType(_limits(r), et)


def _globaltype(r):
    vt = _valtype(r)
    m = r.byte()
    if m not in (0, 1):
        r.fail("malformed mutability")
    return GlobalType(vt, bool(m))


def read_instr(r, op):
    """Decode the immediates of opcode ``op`` into an instruction tuple."""
    info = oc.OPCODES.get(op)
    if info is None:
        if op in oc.POST_MVP_OPCODES:
            raise UnsupportedFeature(f"opcode {op:#04x} ({oc.POST_MVP_OPCODES[op]})", r.pos - 1)
        r.fail(f"illegal opcode {op:#04x}")
    imm = info.imm
    if not imm:
        return (op,)
    if imm == oc.BLOCKTYPE:
        bt = r.byte()
        if bt != oc.BLOCK_EMPTY and bt not in oc.VALTYPES:
            if bt < 0x40 or bt & 0x80:
                raise UnsupportedFeature("type-indexed block types (multi-value)", r.pos - 1)
            r.fail(f"invalid block type {bt:#x}")
        return (op, bt)
    if imm == oc.LABEL or imm == oc.FUNC or imm == oc.LOCAL or imm == oc.GLOBAL:
        return (op, r.u32())
    if imm == oc.MEMARG:
        align = r.u32()
        return (op, align, r.u32())
    if imm == oc.CI32:
        return (op, r.s32() & 0xFFFFFFFF)
    if imm == oc.CI64:
        return (op, r.s64() & 0xFFFFFFFFFFFFFFFF)
    if imm == oc.CF32:
        return (op, struct.unpack("<I", r.bytes(4))[0])
    if imm == oc.CF64:
        return (op, struct.unpack("<Q", r.bytes(8))[0])
    if imm == oc.LABELS:
        labels = tuple(r.vec(r.u32))
        return (op, labels, r.u32())
    if imm == oc.INDIRECT:
        ti = r.u32()
        if r.byte() != 0:
            r.fail("zero byte expected")
        return (op, ti)
    if imm == oc.MEMIDX:
        if r.byte() != 0:
            r.fail("zero byte expected")
        return (op,)
    raise AssertionError(imm)


def read_expr(r):
    """Decode instructions up to and including the ``end`` closing the expression."""
    out = []
    depth = 0
    while True:
        op = r.byte()
        ins = read_instr(r, op)
        out.append(ins)
        if op in (0x02, 0x03, 0x04):
            depth += 1
        elif op == 0x0B:
            if depth == 0:
                return out
            depth -= 1


def parse_module(data):
    """Decode a Wasm 1.0 binary into a :class:`WasmModule`."""
    data = bytes(data)
    if len(data) < 4 or data[:4] != MAGIC:
        raise MalformedBinary("magic header not detected", 0)
    if len(data) < 8:
        raise MalformedBinary("unexpected end", 4)
    if data[4:8] != VERSION:
        raise MalformedBinary(f"unknown binary version {data[4:8].hex()}", 4)

    m = WasmModule()
    r = Reader(data, 8)
    last_id = 0
    func_types = None
    while not r.at_end():
        sid = r.byte()
        size = r.u32()
        start = r.pos
        end = start + size
        if end > len(data):
            r.fail("section size mismatch: unexpected end")
        sr = Reader(data, start, end)
        if sid == SEC_CUSTOM:
            name = sr.name()
            m.customs.append(CustomSection(name, bytes(data[sr.pos:end])))
            sr.pos = end
        else:
            if sid == SEC_DATACOUNT:
                raise UnsupportedFeature("data count section (bulk memory)", start - 1)
            if sid > SEC_DATACOUNT:
                raise MalformedBinary(f"malformed section id {sid}", start - 1)
            if sid <= last_id:
                raise MalformedBinary("unexpected content after last section / duplicate section", start - 1)
            last_id = sid
            if sid == SEC_TYPE:
                m.types = sr.vec(lambda: _functype(sr))
            elif sid == SEC_IMPORT:
                m.imports = sr.vec(lambda: _import(sr))
            elif sid == SEC_FUNCTION:
                func_types = sr.vec(sr.u32)
            elif sid == SEC_TABLE:
                m.tables = sr.vec(lambda: _tabletype(sr))
            elif sid == SEC_MEMORY:
                m.memories = sr.vec(lambda: _limits(sr))
            elif sid == SEC_GLOBAL:
                m.globals = sr.vec(lambda: Global(_globaltype(sr), read_expr(sr)))
            elif sid == SEC_EXPORT:
                m.exports = sr.vec(lambda: _export(sr))
            elif sid == SEC_START:
                m.start = sr.u32()
            elif sid == SEC_ELEMENT:
                m.elements = sr.vec(lambda: _elem(sr))
            elif sid == SEC_CODE:
                bodies = sr.vec(lambda: _code(sr))
                if func_types is None:
                    func_types = []
                if len(bodies) != len(func_types):
                    raise MalformedBinary("function and code section have inconsistent lengths", start)
                m.functions = [Function(t, loc, body) for t, (loc, body) in zip(func_types, bodies)]
            elif sid == SEC_DATA:
                m.data = sr.vec(lambda: _data(sr))
        if sr.pos != end:
            raise MalformedBinary("section size mismatch", sr.pos)
        r.pos = end
    if func_types and not m.functions:
        raise MalformedBinary("function and code section have inconsistent lengths")
    return m


def _import(r):
    mod = r.name()
    name = r.name()
    kind = r.byte()
    if kind == KIND_FUNC:
        desc = r.u32()
    elif kind == KIND_TABLE:
        desc = _tabletype(r)
    elif kind == KIND_MEMORY:
        desc = _limits(r)
    elif kind == KIND_GLOBAL:
        desc = _globaltype(r)
    else:
        r.fail("malformed import kind")
    return Import(mod, name, kind, desc)


def _export(r):
    name = r.name()
    kind = r.byte()
    if kind > 3:
        r.fail("malformed export kind")
    return Export(name, kind, r.u32())


def _elem(r):
    flags = r.u32()
    if flags != 0:
        raise UnsupportedFeature(f"element segment flags {flags} (bulk memory/reference types)", r.pos)
    offset = read_expr(r)
    funcs = r.vec(r.u32)
    return ElemSegment(0, offset, funcs)


def _data(r):
    flags = r.u32()
    if flags != 0:
        raise UnsupportedFeature(f"data segment flags {flags} (bulk memory)", r.pos)
    offset = read_expr(r)
    n = r.u32()
    return DataSegment(0, offset, r.bytes(n))


def _code(r):
    size = r.u32()
    end = r.pos + size
    if end > r.end:
        r.fail("unexpected end")
    cr = Reader(r.data, r.pos, end)
    groups = []
    total = 0
    for _ in range(cr.u32()):
        n = cr.u32()
        total += n
        if total > MAX_LOCALS:
            cr.fail("too many locals")
        groups.append((n, _valtype(cr)))
    body = read_expr(cr)
    if cr.pos != end:
        raise MalformedBinary("section size mismatch", cr.pos)
    r.pos = end
    return tuple(groups), body


def parse_name_section(payload):
    """Return ``{function index: name}`` from a ``name`` custom section payload."""
    r = Reader(payload)
    names = {}
    while not r.at_end():
        sub = r.byte()
        size = r.u32()
        end = r.pos + size
        if sub == 1:
            sr = Reader(payload, r.pos, end)
            for _ in range(sr.u32()):
                idx = sr.u32()
                names[idx] = sr.name()
        r.pos = end
    return names

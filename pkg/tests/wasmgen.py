"""Tiny builder for hand-made test modules."""

from symwasm.binary.encoder import encode_module
from symwasm.binary.module import (
    KIND_FUNC, DataSegment, ElemSegment, Export, Function, FuncType, Global, GlobalType,
    Import, Limits, TableType, WasmModule,
)
from symwasm.binary.opcodes import I32, I64, F32, F64  # noqa: F401 - re-exported
from symwasm.binary.validator import load_module

END = (0x0B,)


def i32c(v):
    return (0x41, v & 0xFFFFFFFF)


def i64c(v):
    return (0x42, v & 0xFFFFFFFFFFFFFFFF)


class ModuleBuilder:
    def __init__(self):
        self.m = WasmModule()
        self._nfuncs = 0

    def type(self, params, results):
        ft = FuncType(tuple(params), tuple(results))
        if ft not in self.m.types:
            self.m.types.append(ft)
        return self.m.types.index(ft)

    def import_func(self, module, name, params, results):
        assert not self.m.functions, "imports must precede functions"
        self.m.imports.append(Import(module, name, KIND_FUNC, self.type(params, results)))
        self._nfuncs += 1
        return self._nfuncs - 1

    def func(self, params, results, body, locals_=(), export=None):
        self.m.functions.append(Function(self.type(params, results),
                                         tuple((1, t) for t in locals_), list(body) + [END]))
        idx = self._nfuncs
        self._nfuncs += 1
        if export:
            self.m.exports.append(Export(export, KIND_FUNC, idx))
        return idx

    def memory(self, pages=1, max_pages=None, export="memory"):
        self.m.memories.append(Limits(pages, max_pages))
        if export:
            self.m.exports.append(Export(export, 2, 0))

    def table(self, size, funcs, offset=0):
        self.m.tables.append(TableType(Limits(size, size)))
        self.m.elements.append(ElemSegment(0, [i32c(offset), END], list(funcs)))

    def global_(self, vt, init, mutable=True):
        op = {I32: 0x41, I64: 0x42, F32: 0x43, F64: 0x44}[vt]
        self.m.globals.append(Global(GlobalType(vt, mutable), [(op, init), END]))
        return len(self.m.globals) - 1

    def data(self, offset, payload):
        self.m.data.append(DataSegment(0, [i32c(offset), END], bytes(payload)))

    def start(self, idx):
        self.m.start = idx

    def encode(self):
        return encode_module(self.m)

    def load(self):
        return load_module(self.encode())

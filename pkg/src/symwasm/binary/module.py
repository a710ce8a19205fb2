"""In-memory representation of a decoded Wasm 1.0 module."""

from dataclasses import dataclass, field

from symwasm.errors import NoSuchExport

PAGE_SIZE = 65536
MAX_PAGES = 65536

KIND_FUNC, KIND_TABLE, KIND_MEMORY, KIND_GLOBAL = 0, 1, 2, 3
KIND_NAMES = {KIND_FUNC: "func", KIND_TABLE: "table", KIND_MEMORY: "memory", KIND_GLOBAL: "global"}


@dataclass(frozen=True)
class FuncType:
    params: tuple
    results: tuple

    def __str__(self):
        from symwasm.binary.opcodes import VALTYPE_NAMES as n
        ps = " ".join(n[t] for t in self.params)
        rs = " ".join(n[t] for t in self.results)
        return f"[{ps}] -> [{rs}]"


@dataclass(frozen=True)
class Limits:
    min: int
    max: int | None = None


@dataclass(frozen=True)
class GlobalType:
    valtype: int
    mutable: bool


@dataclass(frozen=True)
class TableType:
    limits: Limits
    elemtype: int = 0x70


@dataclass
class Import:
    module: str
    name: str
    kind: int
    desc: object  # type index, TableType, Limits or GlobalType


@dataclass
class Function:
    type_idx: int
    locals: tuple  # ((count, valtype), ...)
    body: list  # decoded instruction tuples
    # filled in by the validator: flat executable code with resolved targets
    code: list | None = field(default=None, compare=False, repr=False)
    local_types: tuple | None = field(default=None, compare=False, repr=False)


@dataclass
class Global:
    type: GlobalType
    init: list  # constant expression, instruction tuples


@dataclass
class Export:
    name: str
    kind: int
    index: int


@dataclass
class ElemSegment:
    table: int
    offset: list
    funcs: list


@dataclass
class DataSegment:
    memory: int
    offset: list
    data: bytes


@dataclass
class CustomSection:
    name: str
    payload: bytes


@dataclass
class WasmModule:
    types: list = field(default_factory=list)
    imports: list = field(default_factory=list)
    functions: list = field(default_factory=list)
    tables: list = field(default_factory=list)
    memories: list = field(default_factory=list)
    globals: list = field(default_factory=list)
    exports: list = field(default_factory=list)
    start: int | None = None
    elements: list = field(default_factory=list)
    data: list = field(default_factory=list)
    customs: list = field(default_factory=list, compare=False)
    validated: bool = field(default=False, compare=False)

    # index spaces ------------------------------------------------------

    @property
    def imported_funcs(self):
        return [i for i in self.imports if i.kind == KIND_FUNC]

    @property
    def num_imported_funcs(self):
        return sum(1 for i in self.imports if i.kind == KIND_FUNC)

    def func_type_indices(self):
        """Type index of every function in the function index space."""
        out = [i.desc for i in self.imports if i.kind == KIND_FUNC]
        out.extend(f.type_idx for f in self.functions)
        return out

    def func_type(self, funcidx):
        return self.types[self.func_type_indices()[funcidx]]

    def all_tables(self):
        out = [i.desc for i in self.imports if i.kind == KIND_TABLE]
        return out + list(self.tables)

    def all_memories(self):
        out = [i.desc for i in self.imports if i.kind == KIND_MEMORY]
        return out + list(self.memories)

    def all_global_types(self):
        out = [i.desc for i in self.imports if i.kind == KIND_GLOBAL]
        return out + [g.type for g in self.globals]

    @property
    def memory_limits(self):
        mems = self.all_memories()
        return mems[0] if mems else None

    # exports -------------------------------------------------------------

    def export_map(self):
        return {e.name: (e.kind, e.index) for e in self.exports}

    def resolve_entry(self, name):
        """Function-space index of the exported function ``name``."""
        for e in self.exports:
            if e.name == name and e.kind == KIND_FUNC:
                return e.index
        raise NoSuchExport(name)

    def function_names(self):
        """Names from the ``name`` custom section, keyed by function index."""
        from symwasm.binary.decoder import parse_name_section
        for c in self.customs:
            if c.name == "name":
                try:
                    return parse_name_section(c.payload)
                except Exception:  # noqa: BLE001 - names are diagnostics only
                    return {}
        return {}

    def table_entries(self):
        """The function table after applying element segments (None = empty slot)."""
        tables = self.all_tables()
        if not tables:
            return []
        entries = [None] * tables[0].limits.min
        for seg in self.elements:
            off = const_expr_value(seg.offset)
            if off is None:
                continue
            for i, f in enumerate(seg.funcs):
                if off + i < len(entries):
                    entries[off + i] = f
        return entries


def const_expr_value(expr):
    """Evaluate a constant integer expression; ``None`` when it depends on an import."""
    if expr and expr[-1][0] == 0x0B:
        expr = expr[:-1]
    if len(expr) != 1:
        return None
    op = expr[0]
    if op[0] in (0x41, 0x42):
        return op[1]
    return None

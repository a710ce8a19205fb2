"""Wasm 1.0 validation.

Besides type checking, validation lowers each function body into flat
executable code: every branch carries its resolved target index, the label
arity and the operand-stack height to unwind to, so the interpreter never
needs a runtime control stack.
"""

from symwasm.binary import opcodes as oc
from symwasm.binary.module import (
    FuncType, KIND_FUNC, KIND_GLOBAL, KIND_MEMORY, KIND_TABLE, MAX_PAGES, PAGE_SIZE,
    const_expr_value,
)
from symwasm.errors import ValidationError

UNKNOWN = None


class _Ctrl:
    __slots__ = ("op", "results", "height", "unreachable", "index", "fixups", "else_index")

    def __init__(self, op, results, height, index):
        self.op = op
        self.results = results
        self.height = height
        self.unreachable = False
        self.index = index
        self.fixups = []  # (code index, slot) pairs waiting for the end target
        self.else_index = None

    def label_types(self):
        return () if self.op == 0x03 else self.results


class _FuncChecker:
    def __init__(self, module, funcidx, ftype, local_types, ctx):
        self.m = module
        self.funcidx = funcidx
        self.ftype = ftype
        self.locals = local_types
        self.ctx = ctx
        self.vals = []
        self.ctrls = []
        self.pos = 0

    def err(self, msg):
        raise ValidationError(msg, self.funcidx, self.pos)

    def push(self, t):
        self.vals.append(t)

    def pop(self, expect=UNKNOWN):
        c = self.ctrls[-1]
        if len(self.vals) == c.height:
            if c.unreachable:
                return expect
            self.err("type mismatch: operand stack underflow")
        actual = self.vals.pop()
        if actual is UNKNOWN:
            return expect
        if expect is not UNKNOWN and actual != expect:
            self.err(f"type mismatch: expected {oc.VALTYPE_NAMES[expect]}, got {oc.VALTYPE_NAMES[actual]}")
        return actual

    def pop_many(self, types):
        for t in reversed(types):
            self.pop(t)

    def push_ctrl(self, op, results, index):
        self.ctrls.append(_Ctrl(op, results, len(self.vals), index))

    def pop_ctrl(self):
        if not self.ctrls:
            self.err("control stack underflow")
        c = self.ctrls[-1]
        self.pop_many(c.results)
        if len(self.vals) != c.height:
            self.err("type mismatch: values remaining on stack at end of block")
        self.ctrls.pop()
        return c

    def set_unreachable(self):
        c = self.ctrls[-1]
        del self.vals[c.height:]
        c.unreachable = True

    def label(self, depth):
        if depth >= len(self.ctrls):
            self.err(f"unknown label {depth}")
        return self.ctrls[-1 - depth]

    def branch_ref(self, depth, code_index, slot):
        """Resolved (target, arity, height) for label ``depth``; forward targets are patched later."""
        c = self.label(depth)
        arity = len(c.label_types())
        if c.op == 0x03:
            return (c.index + 1, arity, c.height)
        c.fixups.append((code_index, slot))
        return (None, arity, c.height)

    # --------------------------------------------------------------------------------

    def run(self, body):
        m = self.m
        results = self.ftype.results
        code = [None] * len(body)
        self.push_ctrl(0x02, results, -1)  # function-level label
        nfuncs = len(self.ctx["func_types"])
        nglobals = len(self.ctx["global_types"])
        has_mem = self.ctx["has_memory"]
        has_table = self.ctx["has_table"]
        for i, ins in enumerate(body):
            self.pos = i
            op = ins[0]
            info = oc.OPCODES[op]
            out = ins
            if info.sig is not None:
                if info.imm == oc.MEMARG or info.imm == oc.MEMIDX:
                    if not has_mem:
                        self.err("unknown memory 0")
                    if info.imm == oc.MEMARG and (1 << ins[1]) > oc.MEM_WIDTH[op]:
                        self.err("alignment must not be larger than natural")
                params, res = info.sig
                self.pop_many(params)
                for t in res:
                    self.push(t)
            elif op == 0x00:  # unreachable
                self.set_unreachable()
            elif op == 0x01:  # nop
                pass
            elif op in (0x02, 0x03):
                bt = ins[1]
                self.push_ctrl(op, () if bt == oc.BLOCK_EMPTY else (bt,), i)
            elif op == 0x04:
                self.pop(oc.I32)
                bt = ins[1]
                self.push_ctrl(op, () if bt == oc.BLOCK_EMPTY else (bt,), i)
                out = [0x04, None]
                self.ctrls[-1].fixups.append(("if", i))
            elif op == 0x05:
                c = self.ctrls[-1]
                if c.op != 0x04 or c.else_index is not None:
                    self.err("else without matching if")
                self.pop_many(c.results)
                if len(self.vals) != c.height:
                    self.err("type mismatch: values remaining on stack at end of block")
                c.unreachable = False
                c.else_index = i
                out = [0x05, None]
                c.fixups.append((i, 1))
            elif op == 0x0B:
                c = self.pop_ctrl()
                if c.op == 0x04 and c.else_index is None and c.results:
                    self.err("type mismatch: if without else must not produce a value")
                for t in c.results:
                    self.push(t)
                if not self.ctrls:
                    # final end: patch function-label branches to land here, then return
                    for ci, slot in c.fixups:
                        self._patch(code, ci, slot, i)
                    out = (0x0F, len(results))
                    if i != len(body) - 1:
                        self.err("operators remaining after end of function")
                else:
                    target = i + 1
                    for fix in c.fixups:
                        if fix[0] == "if":
                            ii = fix[1]
                            code[ii][1] = (c.else_index + 1) if c.else_index is not None else target
                        else:
                            self._patch(code, fix[0], fix[1], target)
                    out = (0x0B,)
            elif op == 0x0C:
                ref = self.branch_ref(ins[1], i, 1)
                self.pop_many(self.label(ins[1]).label_types())
                self.set_unreachable()
                out = [0x0C, ref[0], ref[1], ref[2]]
            elif op == 0x0D:
                self.pop(oc.I32)
                ref = self.branch_ref(ins[1], i, 1)
                lt = self.label(ins[1]).label_types()
                self.pop_many(lt)
                for t in lt:
                    self.push(t)
                out = [0x0D, ref[0], ref[1], ref[2]]
            elif op == 0x0E:
                self.pop(oc.I32)
                labels, default = ins[1], ins[2]
                dtypes = self.label(default).label_types()
                targets = []
                for k, d in enumerate(labels):
                    if self.label(d).label_types() != dtypes:
                        self.err("type mismatch in br_table targets")
                    targets.append(list(self.branch_ref(d, i, ("table", k))))
                targets.append(list(self.branch_ref(default, i, ("table", len(labels)))))
                self.pop_many(dtypes)
                self.set_unreachable()
                out = [0x0E, targets]
            elif op == 0x0F:
                self.pop_many(results)
                self.set_unreachable()
                out = (0x0F, len(results))
            elif op == 0x10:
                if ins[1] >= nfuncs:
                    self.err(f"unknown function {ins[1]}")
                ft = m.types[self.ctx["func_types"][ins[1]]]
                self.pop_many(ft.params)
                for t in ft.results:
                    self.push(t)
            elif op == 0x11:
                if not has_table:
                    self.err("unknown table 0")
                if ins[1] >= len(m.types):
                    self.err(f"unknown type {ins[1]}")
                ft = m.types[ins[1]]
                self.pop(oc.I32)
                self.pop_many(ft.params)
                for t in ft.results:
                    self.push(t)
            elif op == 0x1A:
                self.pop()
            elif op == 0x1B:
                self.pop(oc.I32)
                t1 = self.pop()
                t2 = self.pop(t1)
                self.push(t1 if t1 is not UNKNOWN else t2)
            elif op in (0x20, 0x21, 0x22):
                if ins[1] >= len(self.locals):
                    self.err(f"unknown local {ins[1]}")
                t = self.locals[ins[1]]
                if op == 0x20:
                    self.push(t)
                elif op == 0x21:
                    self.pop(t)
                else:
                    self.pop(t)
                    self.push(t)
            elif op in (0x23, 0x24):
                if ins[1] >= nglobals:
                    self.err(f"unknown global {ins[1]}")
                gt = self.ctx["global_types"][ins[1]]
                if op == 0x23:
                    self.push(gt.valtype)
                else:
                    if not gt.mutable:
                        self.err("global is immutable")
                    self.pop(gt.valtype)
            else:
                self.err(f"unhandled opcode {op:#x}")
            code[i] = out
        if self.ctrls:
            self.err("unexpected end of function body")
        return [tuple(_freeze(x) for x in c) if isinstance(c, list) else c for c in code]

    @staticmethod
    def _patch(code, ci, slot, target):
        ins = code[ci]
        if isinstance(slot, tuple):  # br_table entry
            ins[1][slot[1]][0] = target
        else:
            ins[slot] = target


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    return x


def _check_const_expr(expr, want, global_types, num_imported_globals, where):
    if len(expr) != 2 or expr[-1][0] != 0x0B:
        raise ValidationError(f"constant expression required ({where})")
    ins = expr[0]
    op = ins[0]
    if op in (0x41, 0x42, 0x43, 0x44):
        t = oc.OPCODES[op].sig[1][0]
    elif op == 0x23:
        if ins[1] >= num_imported_globals:
            raise ValidationError(f"unknown global {ins[1]} in constant expression ({where})")
        gt = global_types[ins[1]]
        if gt.mutable:
            raise ValidationError(f"constant expression required ({where})")
        t = gt.valtype
    else:
        raise ValidationError(f"constant expression required ({where})")
    if t != want:
        raise ValidationError(f"type mismatch in constant expression ({where})")


def _check_limits(lim, bound, what):
    if lim.min > bound:
        raise ValidationError(f"{what} size must be at most {bound}")
    if lim.max is not None:
        if lim.max > bound:
            raise ValidationError(f"{what} size must be at most {bound}")
        if lim.max < lim.min:
            raise ValidationError(f"size minimum must not be greater than maximum ({what})")


def validate_module(m):
    """Validate ``m`` in place, attaching compiled code to each function. Returns ``m``."""
    ntypes = len(m.types)
    for t in m.types:
        if len(t.results) > 1:
            raise ValidationError("invalid result arity (multi-value is not part of Wasm 1.0)")
    for imp in m.imports:
        if imp.kind == KIND_FUNC and imp.desc >= ntypes:
            raise ValidationError(f"unknown type {imp.desc} in import {imp.module}.{imp.name}")
    for f in m.functions:
        if f.type_idx >= ntypes:
            raise ValidationError(f"unknown type {f.type_idx}")

    tables = m.all_tables()
    mems = m.all_memories()
    if len(tables) > 1:
        raise ValidationError("multiple tables")
    if len(mems) > 1:
        raise ValidationError("multiple memories")
    for t in tables:
        _check_limits(t.limits, 0xFFFFFFFF, "table")
    for lim in mems:
        _check_limits(lim, MAX_PAGES, "memory")

    func_types = m.func_type_indices()
    global_types = m.all_global_types()
    n_imp_globals = sum(1 for i in m.imports if i.kind == KIND_GLOBAL)
    for k, g in enumerate(m.globals):
        # globals may only reference imported globals
        _check_const_expr(g.init, g.type.valtype, global_types, n_imp_globals, f"global {k}")

    names = set()
    for e in m.exports:
        if e.name in names:
            raise ValidationError(f"duplicate export name {e.name!r}")
        names.add(e.name)
        bound = {KIND_FUNC: len(func_types), KIND_TABLE: len(tables), KIND_MEMORY: len(mems),
                 KIND_GLOBAL: len(global_types)}[e.kind]
        if e.index >= bound:
            raise ValidationError(f"unknown export index {e.index} for {e.name!r}")

    if m.start is not None:
        if m.start >= len(func_types):
            raise ValidationError(f"unknown function {m.start} (start)")
        if m.types[func_types[m.start]] != FuncType((), ()):
            raise ValidationError("start function must have type [] -> []")

    for k, seg in enumerate(m.elements):
        if not tables:
            raise ValidationError("unknown table 0 (element segment)")
        _check_const_expr(seg.offset, oc.I32, global_types, n_imp_globals, f"elem {k}")
        for f in seg.funcs:
            if f >= len(func_types):
                raise ValidationError(f"unknown function {f} (element segment {k})")

    for k, seg in enumerate(m.data):
        if not mems:
            raise ValidationError("unknown memory 0 (data segment)")
        _check_const_expr(seg.offset, oc.I32, global_types, n_imp_globals, f"data {k}")
        off = const_expr_value(seg.offset)
        if off is not None and off + len(seg.data) > mems[0].min * PAGE_SIZE:
            raise ValidationError(f"data segment {k} does not fit in initial memory")

    ctx = {
        "func_types": func_types,
        "global_types": global_types,
        "has_memory": bool(mems),
        "has_table": bool(tables),
    }
    nimp = m.num_imported_funcs
    for k, f in enumerate(m.functions):
        ft = m.types[f.type_idx]
        local_types = list(ft.params)
        for count, vt in f.locals:
            local_types.extend([vt] * count)
        checker = _FuncChecker(m, nimp + k, ft, tuple(local_types), ctx)
        f.code = checker.run(f.body)
        f.local_types = tuple(local_types)
    m.validated = True
    return m


def load_module(data):
    """Decode and validate in one step."""
    from symwasm.binary.decoder import parse_module
    return validate_module(parse_module(data))
